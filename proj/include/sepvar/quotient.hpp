#ifndef SEPVAR_QUOTIENT_HPP
#define SEPVAR_QUOTIENT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "sepvar/linalg.hpp"
#include "sepvar/multipoly.hpp"
#include "sepvar/qseries.hpp"

namespace sepvar {

/// Generators never used by the A0 basis, and the six that remain.
const std::vector<std::size_t>& eliminated_generators();
const std::vector<std::size_t>& free_generators();
/// Exponent caps on the free generators (l11 <= 1, l22 <= 2, l31_0 <= 2).
const std::map<std::size_t, int>& a0_caps();

/// Admissible A0 monomials of weight k, increasing graded-lex order.
std::vector<Monomial> enumerate_a0(int k);
bool is_a0_monomial(const Monomial& m);

/// Which spectral coefficient solves for which eliminated generator, and
/// the resulting substitution. Applying `phi` to any element of A gives a
/// polynomial in the free generators congruent to it modulo FA.
struct LinearElimination {
  std::vector<std::pair<std::size_t, std::size_t>> assignment;  // (t index, generator)
  std::map<std::size_t, MultiPoly> phi;                           // generator -> free polynomial
  std::vector<std::size_t> relation_t;                            // the three t's left over
  std::vector<MultiPoly> relations;                               // phi of those t's
};

/// Scans the t's in degree order for a unit-coefficient linear occurrence
/// of an eliminated generator. Throws std::logic_error when the scan does
/// not eliminate all six.
LinearElimination discover_linear_elimination();

/// Row-reduced slice of the ideal at one degree, in coordinates of the
/// free-generator monomials with non-A0 columns first.
struct DegreeSlice {
  int degree = 0;
  std::vector<Monomial> columns;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  std::size_t non_a0 = 0;
  std::size_t ideal_rows = 0;
  SparseEchelon echelon;
};

/// Bookkeeping for the freeness check at one degree.
struct DimensionIdentity {
  int degree = 0;
  std::size_t dim_a = 0;         // monomials of A
  std::size_t dim_free = 0;      // monomials in the free generators
  std::size_t a0_count = 0;      // admissible monomials
  std::size_t relation_rank = 0; // rank of the leftover relations in the free ring
  std::size_t dim_fa = 0;        // dim A - dim(A/FA)
  bool a0_is_basis = false;      // every non-A0 column pivoted, none of the A0 ones
};

class NormalFormEngine {
 public:
  NormalFormEngine();

  const LinearElimination& elimination() const { return elim_; }

  /// Built on first use; safe to call concurrently.
  const DegreeSlice& slice(int k) const;
  DimensionIdentity dimension_identity(int k) const;

  /// Substitution into the free generators (congruent modulo FA).
  MultiPoly to_free(const MultiPoly& x) const;
  /// Unique combination of A0 monomials congruent to x modulo FA;
  /// inhomogeneous inputs are reduced per graded component.
  MultiPoly normal_form(const MultiPoly& x) const;
  /// Coordinates of a homogeneous degree-k element in enumerate_a0(k).
  std::vector<Rational> a0_coordinates(const MultiPoly& x, int k) const;

 private:
  LinearElimination elim_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<DegreeSlice>> slices_;
};

/// Shared engine for the l-algebra.
const NormalFormEngine& normal_form_engine();

/// Rank of the full ideal slice {m t} in A at degree k modulo a prime.
std::size_t ideal_slice_rank_mod_p(int k, std::uint64_t prime);

/// ch(A) through `order`.
QSeries character_a(int order);
/// ch(A) * prod (1 - q^deg t) through `order`.
QSeries character_a0_series(int order);
/// (1+q^4)(1+q^3+q^6)(1+q^4+q^8) / ((1-q^2)(1-q^3)(1-q^5)) through `order`.
QSeries character_a0_closed_form(int order);
/// Numerator and denominator of the closed form as exact polynomials.
std::pair<QSeries, QSeries> character_a0_fraction();

}  // namespace sepvar

#endif  // SEPVAR_QUOTIENT_HPP
