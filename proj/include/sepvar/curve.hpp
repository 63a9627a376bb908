#ifndef SEPVAR_CURVE_HPP
#define SEPVAR_CURVE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sepvar/rational.hpp"
#include "sepvar/spectral.hpp"
#include "sepvar/unipoly.hpp"

namespace sepvar {

inline constexpr int kDefaultPuiseuxOrder = 40;

/// Laurent series in the local parameter t, known up to O(t^precision).
/// Exact polynomials carry precision kExactPrecision.
class LaurentSeries {
 public:
  static constexpr int kExactPrecision = 1 << 28;

  LaurentSeries() = default;
  /// sum coeffs[i] t^(valuation + i) + O(t^precision)
  LaurentSeries(int valuation, std::vector<Rational> coeffs, int precision = kExactPrecision);
  static LaurentSeries monomial(int exp, const Rational& c = 1);
  static LaurentSeries constant(const Rational& c) { return monomial(0, c); }

  int valuation() const { return val_; }
  int precision() const { return prec_; }
  bool is_exact() const { return prec_ == kExactPrecision; }
  /// No known nonzero term.
  bool is_zero() const { return c_.empty(); }
  /// Throws std::out_of_range past the precision.
  Rational coefficient(int exp) const;
  Rational residue() const { return coefficient(-1); }

  LaurentSeries truncated(int precision) const;
  LaurentSeries derivative() const;
  /// Termwise primitive plus `constant`; throws std::domain_error when the
  /// t^-1 coefficient is nonzero.
  LaurentSeries primitive(const Rational& constant = 0) const;
  /// Throws std::domain_error if the leading coefficient is not known.
  LaurentSeries inverse() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const Rational& s);
  LaurentSeries operator-() const;
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  std::string to_string() const;

 private:
  void normalize();

  int val_ = 0;
  std::vector<Rational> c_;
  int prec_ = kExactPrecision;
};

/// The branch at the unique infinite point: z = t^-3, w = -t^-4 W(t) with
/// W = 1 + c_1 t + c_2 t^2 + ... known through t^order.
struct PuiseuxSeries {
  int order = 0;
  std::vector<Rational> c;  // c[0] = 1

  LaurentSeries z() const;
  LaurentSeries w() const;
};

PuiseuxSeries puiseux_expand(const CurveInstance& curve, int order = kDefaultPuiseuxOrder);

/// p(z(t), w(t)) for p with x = z, y = w.
LaurentSeries evaluate_on_branch(const BiPoly<Rational>& p, const PuiseuxSeries& branch);

/// Q numerators for the six differentials, in the order
/// dsigma_1, dsigma_2, dsigma_3, dsigma~_1, dsigma~_2, dsigma~_3.
std::array<BiPoly<Rational>, 6> differential_numerators(const CurveInstance& curve);
std::array<std::string, 6> differential_names();

/// Q / R_w * dz/dt along the branch.
LaurentSeries differential_series(const CurveInstance& curve, const BiPoly<Rational>& q, const PuiseuxSeries& branch);

using PairingMatrix = std::array<std::array<Rational, 6>, 6>;

struct PairingResult {
  std::uint64_t seed = 0;
  int order = 0;            // truncation actually used
  bool escalated = false;   // N and N+10 disagreed
  std::array<Rational, 6> residues;
  std::array<int, 6> leading_exponent{};  // valuation of each series in t
  PairingMatrix matrix;
  bool canonical = false;
  bool constant_independent = false;  // unchanged with integration constant 1
};

/// res_t(domega_a * omega_b). Throws std::domain_error on a nonzero
/// residue or when the precision is insufficient for an entry.
PairingMatrix pairing_matrix(const CurveInstance& curve, int order = kDefaultPuiseuxOrder);
/// N, then N+10; escalates once more to N+20 when they disagree and throws
/// std::runtime_error if the last two still differ.
PairingResult stable_pairing(const CurveInstance& curve, int order = kDefaultPuiseuxOrder);
bool is_canonical(const PairingMatrix& m);

struct IntersectionCheck {
  std::uint64_t seed = 0;
  bool identity_holds = false;  // residual vanishes modulo both cubic relations
  /// +1 when C = sum_j (...) dz1 ^ dz2 with C = d(...) taken literally,
  /// -1 when the right side reads as dz2 ^ dz1, 0 when neither holds.
  int orientation = 0;
  bool antisymmetric = false;   // swapping the points negates both sides
  std::size_t residual_terms_before_reduction = 0;
};

/// Checks that the exterior derivative in the displayed intersection form
/// equals sum_j (dsigma_j(P1) dsigma~_j(P2) - swap), as an identity in
/// (z1, w1, z2, w2) modulo R(z1, w1) and R(z2, w2).
IntersectionCheck intersection_decomposition_check(const CurveInstance& curve);

/// The curve with every t set to zero.
CurveInstance zero_curve();

}  // namespace sepvar

#endif  // SEPVAR_CURVE_HPP
