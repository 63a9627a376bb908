#ifndef SEPVAR_RATIONAL_HPP
#define SEPVAR_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sepvar {

/// Exact rational number. GMP keeps every value canonical (lowest terms,
/// positive denominator), so equality is plain value equality.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when two objects built over different generator alphabets meet.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Serialises as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Small random rationals |p|, q <= bound drawn from a seeded engine. Uses
/// raw engine output only, so sequences agree across standard libraries.
class RationalSampler {
 public:
  RationalSampler(std::uint64_t seed, int bound = 100) : engine_(seed), bound_(bound) {}
  Rational next();
  Rational next_nonzero();
  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  int bound_;
};

}  // namespace sepvar

#endif  // SEPVAR_RATIONAL_HPP
