#ifndef SEPVAR_SPECTRAL_HPP
#define SEPVAR_SPECTRAL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepvar/poisson.hpp"
#include "sepvar/unipoly.hpp"

namespace sepvar {

inline constexpr std::size_t kNumT = 9;

/// Index order t1_1 t1_2 t2_1 t2_2 t2_3 t3_1 t3_2 t3_3 t3_4, where tk_p
/// is the p-th coefficient of w^(3-k) in R(z,w).
const std::array<std::string, kNumT>& t_names();
/// (power of z, power of w) at which each t sits in R(z,w).
const std::array<std::pair<int, int>, kNumT>& t_positions();
std::size_t t_index(const std::string& name);

/// The spectral coefficients as formal generators with their degrees.
AlphabetPtr t_alphabet();

class TemplateMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// R(z,w) = det(w + l(z)) with x = z and y = w, and the nine extracted t's.
struct SpectralPolynomial {
  BiPoly<MultiPoly> r;
  std::vector<MultiPoly> t;
};

/// Expands the determinant for a Lax matrix and matches the curve
/// template; throws TemplateMismatch on any stray monomial or when the
/// w^3 or z^4 coefficient is not 1.
SpectralPolynomial build_R(const LaxMatrix& lax);
/// build_R(lax_l()), computed once.
const SpectralPolynomial& spectral();

/// Pairs {t_a, t_b} (a < b) that fail to vanish.
std::vector<std::pair<std::size_t, std::size_t>> involution_failures(const BracketTable& table);

struct CasimirPartition {
  std::vector<std::size_t> central;
  std::vector<std::size_t> non_central;
};
CasimirPartition classify_casimirs(const BracketTable& table);

/// Rank of d(t)/d(l) at a seeded random rational point.
std::size_t jacobian_rank(std::uint64_t seed);

/// Numerators of the holomorphic differentials (1, z, w) and of their
/// second-kind duals, as polynomials in (z, w) with coefficients over
/// t_alphabet(). i is 1-based.
BiPoly<MultiPoly> q_holomorphic(int i);
BiPoly<MultiPoly> q_dual(int i);
/// q_dual with every t replaced by its expression in the l's.
BiPoly<MultiPoly> q_dual_in_l(int i);

/// Specialisation of the nine t's to rationals.
struct CurveInstance {
  std::array<Rational, kNumT> t;
  std::uint64_t seed = 0;

  std::string to_json() const;
  /// Throws std::invalid_argument on malformed documents.
  static CurveInstance from_json(const std::string& text);
};

/// R(z,w) at the instance as a polynomial with x = z and y = w.
BiPoly<Rational> curve_polynomial(const CurveInstance& curve);
/// w-discriminant of R, a polynomial of degree 8 in z for generic curves.
UniPoly<Rational> discriminant(const CurveInstance& curve);
bool is_generic(const CurveInstance& curve);
/// Draws t's from the seeded sampler until the curve is generic.
CurveInstance random_curve(std::uint64_t seed);

}  // namespace sepvar

#endif  // SEPVAR_SPECTRAL_HPP
