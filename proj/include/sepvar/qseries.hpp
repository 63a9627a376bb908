#ifndef SEPVAR_QSERIES_HPP
#define SEPVAR_QSERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sepvar {

inline constexpr int kDefaultQSeriesOrder = 24;

/// Laurent series in q with integer coefficients. Either an exact Laurent
/// polynomial, or a series known only through exponent `order()`.
class QSeries {
 public:
  QSeries() = default;

  static QSeries exact(int min_exp, std::vector<std::int64_t> coeffs);
  static QSeries monomial(int exp, std::int64_t coeff = 1);
  static QSeries one() { return monomial(0); }
  /// Parses a Laurent polynomial such as "-q^-8 + q^-7 - 2q^-5 + 2 - q".
  /// Throws std::invalid_argument on malformed text.
  static QSeries parse(std::string_view text);
  /// 1 - q^d
  static QSeries one_minus_q_pow(int d);
  /// 1/prod(1 - q^d) over the given degrees, known through `order`.
  static QSeries inverse_product(const std::vector<int>& degrees, int order);

  bool is_exact() const { return !order_.has_value(); }
  /// Highest exponent that is known; nullopt for exact polynomials.
  std::optional<int> order() const { return order_; }
  /// Lowest exponent with a nonzero coefficient (0 for the zero series).
  int min_exponent() const { return min_exp_; }
  /// Highest exponent stored.
  int max_exponent() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Throws std::out_of_range when the exponent lies beyond the truncation.
  std::int64_t coefficient(int exp) const;

  /// Forgets every term above exponent `order`.
  QSeries truncated(int order) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;

  /// Series quotient. The divisor's lowest coefficient must be +1 or -1;
  /// throws std::domain_error otherwise. When both are exact, the result is
  /// expanded through `order` unless the division is exact.
  QSeries divided_by(const QSeries& divisor, int order = kDefaultQSeriesOrder) const;
  /// Exact polynomial division; nullopt when a remainder is left.
  std::optional<QSeries> divide_exact(const QSeries& divisor) const;

  /// Character of the k-th exterior power of a graded space with this
  /// character (exact, nonnegative coefficients required).
  QSeries exterior_power(int k) const;

  /// Value at q = 1; exact polynomials only.
  std::int64_t at_one() const;

  friend bool operator==(const QSeries& a, const QSeries& b);

  /// e.g. "-q^-8 + q^-7 - 2q^-5 + 2" (truncated series end with "+ O(q^n)").
  std::string to_string() const;
  /// Number of nonzero terms.
  std::size_t term_count() const;

 private:
  void normalize();

  int min_exp_ = 0;
  std::vector<std::int64_t> coeffs_;
  std::optional<int> order_;
};

}  // namespace sepvar

#endif  // SEPVAR_QSERIES_HPP
