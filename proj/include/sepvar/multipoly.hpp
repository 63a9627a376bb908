#ifndef SEPVAR_MULTIPOLY_HPP
#define SEPVAR_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepvar/rational.hpp"

namespace sepvar {

/// Upper bound on the number of generators in one alphabet.
inline constexpr std::size_t kMaxGenerators = 24;

/// Ordered, named generators together with their grading weights.
class GeneratorAlphabet {
 public:
  GeneratorAlphabet(std::vector<std::string> names, std::vector<int> degrees);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find() but throws std::out_of_range for unknown names.
  std::size_t index(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

using AlphabetPtr = std::shared_ptr<const GeneratorAlphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees);

/// Exponent vector plus its cached weighted degree.
struct Monomial {
  std::array<std::uint8_t, kMaxGenerators> exps{};
  int weight = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }

  int total_exponent() const;
  bool divisible_by(const Monomial& other) const;
};

Monomial make_monomial(const GeneratorAlphabet& alphabet, std::span<const int> exponents);
Monomial monomial_product(const Monomial& a, const Monomial& b);
/// a / b; requires a.divisible_by(b).
Monomial monomial_quotient(const Monomial& a, const Monomial& b);

/// Graded lexicographic comparison: heavier weight first, ties broken by
/// the exponent of the earliest generator. Returns true when a > b.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse polynomial with exact rational coefficients over a fixed alphabet.
/// Terms are kept sorted in decreasing graded-lex order with no zero
/// coefficients, so structural equality is value equality.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  explicit MultiPoly(AlphabetPtr alphabet);

  static MultiPoly constant(AlphabetPtr alphabet, const Rational& value);
  static MultiPoly generator(AlphabetPtr alphabet, std::size_t index);
  static MultiPoly generator(AlphabetPtr alphabet, std::string_view name);
  static MultiPoly monomial(AlphabetPtr alphabet, const Monomial& mono, const Rational& coeff = 1);
  /// Builds from unsorted terms; duplicates are summed and zeros dropped.
  static MultiPoly from_terms(AlphabetPtr alphabet, std::vector<Term> terms);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value (zero when absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& mono) const;

  /// True for zero and for polynomials whose terms all share one weight.
  bool is_homogeneous() const;
  /// Weight of the leading term; throws std::domain_error for zero.
  int degree() const;
  /// Weight shared by all terms; throws std::domain_error when not
  /// homogeneous or zero.
  int homogeneous_degree() const;
  MultiPoly homogeneous_component(int weight) const;
  /// Weights present, ascending.
  std::vector<int> weights() const;

  /// Highest power of generator `index` occurring.
  int degree_in(std::size_t index) const;
  /// Coefficient of generator^power, as a polynomial not involving it.
  MultiPoly coefficient_of_power(std::size_t index, int power) const;
  /// Coefficients by power of one generator, index = power.
  std::vector<MultiPoly> as_univariate(std::size_t index) const;
  bool involves(std::size_t index) const;

  MultiPoly derivative(std::size_t index) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces generators by polynomials (possibly over another alphabet).
  /// Generators absent from the map stay, which requires the target
  /// alphabet to equal this one.
  MultiPoly substitute(const std::map<std::size_t, MultiPoly>& values, AlphabetPtr target) const;
  /// Substitutes every generator; `values` has alphabet().size() entries.
  MultiPoly compose(std::span<const MultiPoly> values) const;
  /// Substitutes numbers for a subset of generators.
  MultiPoly partial_evaluate(const std::map<std::size_t, Rational>& values) const;
  /// Re-expresses over another alphabet by generator name.
  MultiPoly rename_into(AlphabetPtr target) const;

  MultiPoly pow(unsigned exponent) const;
  MultiPoly mul_monomial(const Monomial& mono, const Rational& coeff = 1) const;

  /// Exact division; nullopt when `divisor` does not divide this.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_alphabet(const MultiPoly& other) const;
  MultiPoly combine(const MultiPoly& other, bool subtract) const;

  AlphabetPtr alphabet_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const GeneratorAlphabet& alphabet, const Monomial& mono);

/// All monomials of the given weight using only the listed generators,
/// with per-generator exponent caps (absent entries are uncapped), sorted
/// in increasing graded-lex order.
std::vector<Monomial> monomials_of_weight(const GeneratorAlphabet& alphabet, int weight,
                                          std::span<const std::size_t> generators,
                                          const std::map<std::size_t, int>& caps = {});

}  // namespace sepvar

#endif  // SEPVAR_MULTIPOLY_HPP
