#ifndef SEPVAR_RATFUNC_HPP
#define SEPVAR_RATFUNC_HPP

#include <optional>
#include <span>
#include <string>

#include "sepvar/multipoly.hpp"

namespace sepvar {

/// Quotient of two polynomials. No gcd normalisation is attempted;
/// equality is decided by cross-multiplication.
class RatFunc {
 public:
  explicit RatFunc(MultiPoly numerator);
  RatFunc(MultiPoly numerator, MultiPoly denominator);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  const AlphabetPtr& alphabet() const { return num_.alphabet(); }
  bool is_zero() const { return num_.is_zero(); }

  /// The polynomial this equals, when the denominator divides exactly.
  std::optional<MultiPoly> to_polynomial() const;
  /// Cancels the largest power of `gen` that divides both sides, and
  /// any constant factor of the denominator.
  RatFunc reduce_power_of(std::size_t gen) const;

  RatFunc derivative(std::size_t index) const;
  /// Throws std::domain_error when the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator==(const RatFunc& a, const MultiPoly& b) { return a == RatFunc(b); }

  std::string to_string() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace sepvar

#endif  // SEPVAR_RATFUNC_HPP
