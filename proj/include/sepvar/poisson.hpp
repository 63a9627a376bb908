#ifndef SEPVAR_POISSON_HPP
#define SEPVAR_POISSON_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepvar/multipoly.hpp"
#include "sepvar/ratfunc.hpp"
#include "sepvar/unipoly.hpp"

namespace sepvar {

/// The twelve coefficients of the reduced Lax matrix. Index order:
/// l11 l12 l13 l21 l22 l23 l31 l32 l33 (upper index 1) then l31_0 l32_0
/// l33_0 (the leading coefficients in the last row).
AlphabetPtr l_alphabet();
/// The fifteen coefficients of m(z); mij_0 multiplies the higher z power.
AlphabetPtr m_alphabet();

namespace lgen {
inline constexpr std::size_t l11 = 0, l12 = 1, l13 = 2, l21 = 3, l22 = 4, l23 = 5, l31 = 6, l32 = 7, l33 = 8,
                             l31_0 = 9, l32_0 = 10, l33_0 = 11;
}

/// 3x3 matrix whose entries are polynomials in the spectral parameter z.
template <class C>
struct Matrix3 {
  explicit Matrix3(const C& zero) : e(9, UniPoly<C>(zero)) {}
  std::vector<UniPoly<C>> e;
  UniPoly<C>& at(int i, int j) { return e[3 * i + j]; }
  const UniPoly<C>& at(int i, int j) const { return e[3 * i + j]; }
};

using LaxMatrix = Matrix3<MultiPoly>;

/// l(z) with the shape of the reduced L-operator.
LaxMatrix lax_l();
/// m(z) with its displayed polynomial shape.
LaxMatrix lax_m();

/// Element of End(C^3 (x) C^3) with entries polynomial in (z1, z2); index
/// (3i+k, 3j+l) is the (i,j) entry of the first factor and (k,l) of the second.
using Mat9 = std::vector<BiPoly<Rational>>;

Mat9 permutation_p12();
Mat9 mat9_zero();

/// An r-matrix pairing (z1 - z2) * r with the factor (1 or 2) whose
/// commutator it enters. The bracket {L1, L2} is
///   sum_terms sign * [numerator, L_factor] / (z1 - z2).
struct RMatrix {
  struct Term {
    Mat9 numerator;
    int factor;
    int sign;
  };
  std::string name;
  std::vector<Term> terms;

  /// True when every numerator restricted to z1 = z2 is a scalar
  /// polynomial times P12 (simple pole with residue proportional to P12).
  bool residue_proportional_to_p12() const;
};

/// r for the m-algebra built from t00, t-+ and t+-.
RMatrix rmatrix_m();
/// r for the reduced l-algebra built from P12 and u12.
RMatrix rmatrix_l();

class InconsistentBracket : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Antisymmetric table {g_a, g_b} of generator brackets.
class BracketTable {
 public:
  BracketTable(std::string tag, AlphabetPtr alphabet);

  const std::string& tag() const { return tag_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_->size(); }
  const MultiPoly& at(std::size_t a, std::size_t b) const { return entries_[a * size() + b]; }
  /// Sets {a,b} = value and {b,a} = -value.
  void set(std::size_t a, std::size_t b, const MultiPoly& value);
  /// Copy with one entry replaced (antisymmetric partner updated too).
  BracketTable with_entry(std::size_t a, std::size_t b, const MultiPoly& value) const;
  std::size_t nonzero_count() const;

 private:
  std::string tag_;
  AlphabetPtr alphabet_;
  std::vector<MultiPoly> entries_;
};

/// Expands the r-matrix relation in z1, z2 and reads off the generator
/// brackets. Throws std::domain_error on a residual pole and
/// InconsistentBracket when coefficient matching is over-determined
/// inconsistently.
BracketTable derive_bracket_table(const RMatrix& r, const LaxMatrix& lax, const std::string& tag);

/// Right-hand side of the r-matrix relation at a numeric Lax matrix,
/// already divided by (z1 - z2).
std::vector<BiPoly<Rational>> rmatrix_rhs(const RMatrix& r, const Matrix3<Rational>& lax);

/// derive_bracket_table for the reduced l-algebra and the m-algebra,
/// computed once.
const BracketTable& l_bracket_table();
const BracketTable& m_bracket_table();

MultiPoly bracket(const MultiPoly& f, const MultiPoly& g, const BracketTable& table);
RatFunc bracket(const RatFunc& f, const RatFunc& g, const BracketTable& table);

struct JacobiReport {
  std::size_t triples_checked = 0;
  std::vector<std::array<std::size_t, 3>> failures;
  bool ok() const { return failures.empty(); }
};

JacobiReport verify_jacobi(const BracketTable& table);
bool verify_center(const BracketTable& table, const MultiPoly& element);
/// Pairs whose bracket is not homogeneous of degree deg a + deg b + shift.
std::vector<std::pair<std::size_t, std::size_t>> grading_violations(const BracketTable& table, int shift);

/// Pointwise check that l = s m s^-1 carries the m-brackets to the
/// reduced r-matrix brackets.
struct ReductionReport {
  struct Point {
    std::uint64_t seed = 0;
    int resamples = 0;
    bool lax_shape_ok = false;
    bool identity_ok = false;
    std::size_t entries_checked = 0;
  };
  std::vector<Point> points;
  bool degenerate_ok = false;
  bool antisymmetry_ok = false;
  bool ok() const;
};

ReductionReport verify_reduction(std::span<const std::uint64_t> seeds, const BracketTable& m_table);

}  // namespace sepvar

#endif  // SEPVAR_POISSON_HPP
