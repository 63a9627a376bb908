#include "sepvar/qseries.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <stdexcept>

namespace sepvar {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("QSeries: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("QSeries: coefficient overflow");
  return r;
}

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

int bound(const std::optional<int>& o) { return o ? *o : kUnbounded; }

}  // namespace

void QSeries::normalize() {
  if (order_) {
    int keep = *order_ - min_exp_ + 1;
    if (keep < 0) keep = 0;
    if (static_cast<int>(coeffs_.size()) > keep) coeffs_.resize(keep);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  min_exp_ += static_cast<int>(lead);
}

QSeries QSeries::exact(int min_exp, std::vector<std::int64_t> coeffs) {
  QSeries s;
  s.min_exp_ = min_exp;
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

QSeries QSeries::monomial(int exp, std::int64_t coeff) { return exact(exp, {coeff}); }

QSeries QSeries::one_minus_q_pow(int d) {
  if (d <= 0) throw std::invalid_argument("one_minus_q_pow: degree must be positive");
  std::vector<std::int64_t> c(d + 1, 0);
  c[0] = 1;
  c[d] = -1;
  return exact(0, std::move(c));
}

QSeries QSeries::inverse_product(const std::vector<int>& degrees, int order) {
  // Multiply geometric series one factor at a time: c[n] += c[n-d].
  std::vector<std::int64_t> c(std::max(order, 0) + 1, 0);
  c[0] = 1;
  for (int d : degrees) {
    if (d <= 0) throw std::invalid_argument("inverse_product: degree must be positive");
    for (int n = d; n <= order; ++n) c[n] = checked_add(c[n], c[n - d]);
  }
  QSeries s;
  s.coeffs_ = std::move(c);
  s.order_ = order;
  s.normalize();
  return s;
}

QSeries QSeries::parse(std::string_view text) {
  std::map<int, std::int64_t> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw std::invalid_argument("QSeries::parse: expected digits");
    return std::stoll(std::string(text.substr(start, i - start)));
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("QSeries::parse: empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw std::invalid_argument("QSeries::parse: expected + or -");
    }
    first = false;
    std::int64_t coeff = 1;
    bool has_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = read_int(false);
      has_coeff = true;
    }
    int exp = 0;
    if (i < text.size() && text[i] == '*') ++i;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        exp = static_cast<int>(read_int(true));
      }
    } else if (!has_coeff) {
      throw std::invalid_argument("QSeries::parse: expected a term");
    }
    terms[exp] = checked_add(terms[exp], sign * coeff);
  }
  if (terms.empty()) return QSeries();
  int lo = terms.begin()->first, hi = terms.rbegin()->first;
  std::vector<std::int64_t> c(hi - lo + 1, 0);
  for (const auto& [e, v] : terms) c[e - lo] = v;
  return exact(lo, std::move(c));
}

std::int64_t QSeries::coefficient(int exp) const {
  if (order_ && exp > *order_) throw std::out_of_range("QSeries: coefficient beyond truncation order");
  if (coeffs_.empty() || exp < min_exp_ || exp > max_exponent()) return 0;
  return coeffs_[exp - min_exp_];
}

QSeries QSeries::truncated(int order) const {
  QSeries s = *this;
  s.order_ = std::min(order, bound(order_));
  s.normalize();
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if (a.is_zero() && a.is_exact()) return b;
  if (b.is_zero() && b.is_exact()) return a;
  int lo = std::min(a.is_zero() ? b.min_exp_ : a.min_exp_, b.is_zero() ? a.min_exp_ : b.min_exp_);
  int hi = std::max(a.max_exponent(), b.max_exponent());
  std::vector<std::int64_t> c(std::max(hi - lo + 1, 0), 0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[a.min_exp_ + k - lo] = a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
    auto& slot = c[b.min_exp_ + k - lo];
    slot = checked_add(slot, b.coeffs_[k]);
  }
  QSeries s = QSeries::exact(lo, std::move(c));
  if (!a.is_exact() || !b.is_exact()) {
    s.order_ = std::min(bound(a.order_), bound(b.order_));
    s.normalize();
  }
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& c : s.coeffs_) c = checked_mul(c, -1);
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  std::optional<int> order;
  if (!a.is_exact() || !b.is_exact()) {
    int oa = a.is_exact() ? kUnbounded : *a.order_ + (b.is_zero() ? 0 : b.min_exp_);
    int ob = b.is_exact() ? kUnbounded : *b.order_ + (a.is_zero() ? 0 : a.min_exp_);
    order = std::min(oa, ob);
  }
  QSeries s;
  s.order_ = order;
  if (a.is_zero() || b.is_zero()) return s;
  s.min_exp_ = a.min_exp_ + b.min_exp_;
  int hi = a.max_exponent() + b.max_exponent();
  if (order) hi = std::min(hi, *order);
  if (hi < s.min_exp_) {
    s.min_exp_ = 0;
    return s;
  }
  s.coeffs_.assign(hi - s.min_exp_ + 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<int>(i + j) < static_cast<int>(s.coeffs_.size()); ++j) {
      s.coeffs_[i + j] = checked_add(s.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  s.normalize();
  return s;
}

QSeries QSeries::divided_by(const QSeries& divisor, int order) const {
  if (divisor.is_zero()) throw std::domain_error("QSeries: division by zero series");
  const std::int64_t lead = divisor.coeffs_.front();
  if (lead != 1 && lead != -1) throw std::domain_error("QSeries: divisor is not a unit series");
  if (is_exact() && divisor.is_exact()) {
    if (auto q = divide_exact(divisor)) return *q;
  }
  const int mb = divisor.min_exp_;
  const int qmin = is_zero() ? 0 : min_exp_ - mb;
  int qorder = order;
  if (!is_exact()) qorder = std::min(qorder, *order_ - mb);
  if (!divisor.is_exact()) qorder = std::min(qorder, *divisor.order_ - mb + (qmin));
  QSeries q;
  q.order_ = qorder;
  if (is_zero() || qorder < qmin) return q;
  q.min_exp_ = qmin;
  q.coeffs_.assign(qorder - qmin + 1, 0);
  for (int n = 0; n <= qorder - qmin; ++n) {
    // a_{min+n} = sum_j b_{mb+j} c_{qmin+n-j}
    std::int64_t acc = (n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : 0;
    for (int j = 1; j <= n && j < static_cast<int>(divisor.coeffs_.size()); ++j) {
      acc = checked_add(acc, -checked_mul(divisor.coeffs_[j], q.coeffs_[n - j]));
    }
    q.coeffs_[n] = checked_mul(acc, lead);
  }
  q.normalize();
  return q;
}

std::optional<QSeries> QSeries::divide_exact(const QSeries& divisor) const {
  if (!is_exact() || !divisor.is_exact()) throw std::domain_error("divide_exact: truncated operand");
  if (divisor.is_zero()) throw std::domain_error("QSeries: division by zero series");
  if (is_zero()) return QSeries();
  // Long division from the top; the divisor's leading coefficient must divide.
  std::vector<std::int64_t> rem = coeffs_;
  const auto& d = divisor.coeffs_;
  const int dd = static_cast<int>(d.size()) - 1;
  const int nd = static_cast<int>(rem.size()) - 1;
  if (nd < dd) return std::nullopt;
  std::vector<std::int64_t> quot(nd - dd + 1, 0);
  for (int k = nd; k >= dd; --k) {
    if (rem[k] == 0) continue;
    if (rem[k] % d.back() != 0) return std::nullopt;
    std::int64_t f = rem[k] / d.back();
    quot[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] = checked_add(rem[k - dd + j], -checked_mul(f, d[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t x) { return x != 0; })) return std::nullopt;
  return exact(min_exp_ - divisor.min_exp_, std::move(quot));
}

QSeries QSeries::exterior_power(int k) const {
  if (!is_exact()) throw std::domain_error("exterior_power: truncated character");
  if (k < 0) return QSeries();
  // dp[j] = character of the j-th exterior power of the part seen so far.
  std::vector<QSeries> dp(k + 1);
  dp[0] = one();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] < 0) throw std::domain_error("exterior_power: negative multiplicity");
    const QSeries qe = monomial(min_exp_ + static_cast<int>(i));
    for (std::int64_t rep = 0; rep < coeffs_[i]; ++rep) {
      for (int j = k; j >= 1; --j) dp[j] = dp[j] + dp[j - 1] * qe;
    }
  }
  return dp[k];
}

std::int64_t QSeries::at_one() const {
  if (!is_exact()) throw std::domain_error("at_one: truncated series");
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_ && a.order_ == b.order_;
}

std::size_t QSeries::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; }));
}

std::string QSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    int e = min_exp_ + static_cast<int>(i);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t m = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(m);
      continue;
    }
    if (m != 1) out += std::to_string(m);
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (order_) {
    out += out.empty() ? "" : " + ";
    out += "O(q^" + std::to_string(*order_ + 1) + ")";
  } else if (out.empty()) {
    out = "0";
  }
  return out;
}

}  // namespace sepvar
