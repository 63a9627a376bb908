#ifndef SEPVAR_UNIPOLY_HPP
#define SEPVAR_UNIPOLY_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sepvar/multipoly.hpp"
#include "sepvar/ratfunc.hpp"

namespace sepvar {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const MultiPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RatFunc& c) { return c.is_zero(); }

inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_one(const MultiPoly& c) { return c.is_constant() && c.constant_term() == 1; }

/// Dense univariate polynomial (in z, w or an auxiliary z') whose
/// coefficients live in C. A zero prototype of C is carried along so that
/// coefficient types needing an alphabet work.
template <class C>
class UniPoly {
 public:
  explicit UniPoly(C zero) : zero_(std::move(zero)) {}
  UniPoly(std::vector<C> coeffs, C zero) : coeffs_(std::move(coeffs)), zero_(std::move(zero)) { trim(); }

  static UniPoly monomial(C coeff, int power, C zero) {
    std::vector<C> v(power + 1, zero);
    v[power] = std::move(coeff);
    return UniPoly(std::move(v), std::move(zero));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const C& coeff(int i) const { return (i >= 0 && i <= degree()) ? coeffs_[i] : zero_; }
  const C& leading() const { return coeffs_.back(); }
  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& zero() const { return zero_; }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.zero_);
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out), a.zero_);
  }
  UniPoly scaled(const C& s) const {
    std::vector<C> out = coeffs_;
    for (auto& c : out) c = c * s;
    return UniPoly(std::move(out), zero_);
  }
  UniPoly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<C> out(k, zero_);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(out), zero_);
  }
  UniPoly operator-() const { return UniPoly(zero_) - *this; }

  UniPoly pow(unsigned e) const {
    UniPoly r = UniPoly::monomial(one_like(), 0, zero_);
    UniPoly b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return r;
  }

  UniPoly derivative() const {
    std::vector<C> out;
    for (int i = 1; i <= degree(); ++i) out.push_back(coeffs_[i] * C(coeff_scalar(i)));
    return UniPoly(std::move(out), zero_);
  }

  /// Division with remainder by a polynomial with leading coefficient 1.
  std::pair<UniPoly, UniPoly> divmod_monic(const UniPoly& divisor) const {
    if (divisor.is_zero() || !coeff_is_one(divisor.leading())) {
      throw std::domain_error("divmod_monic: divisor is not monic");
    }
    std::vector<C> rem = coeffs_;
    int dd = divisor.degree();
    int qd = degree() - dd;
    std::vector<C> quot(std::max(qd + 1, 0), zero_);
    for (int k = degree(); k >= dd; --k) {
      if (coeff_is_zero(rem[k])) continue;
      C q = rem[k];
      quot[k - dd] = q;
      for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
    }
    if (static_cast<int>(rem.size()) > dd) rem.resize(std::max(dd, 0), zero_);
    return {UniPoly(std::move(quot), zero_), UniPoly(std::move(rem), zero_)};
  }
  UniPoly mod_monic(const UniPoly& divisor) const { return divmod_monic(divisor).second; }

  C evaluate(const C& x) const {
    C acc = zero_;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
  }

 private:
  static Rational coeff_scalar(int i) { return Rational(i); }
  C one_like() const;
  void trim() {
    while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
  C zero_;
};

template <>
inline Rational UniPoly<Rational>::one_like() const { return 1; }
template <>
inline MultiPoly UniPoly<MultiPoly>::one_like() const { return MultiPoly::constant(zero_.alphabet(), 1); }
template <>
inline RatFunc UniPoly<RatFunc>::one_like() const { return RatFunc(MultiPoly::constant(zero_.alphabet(), 1)); }
template <>
inline UniPoly<MultiPoly> UniPoly<MultiPoly>::derivative() const {
  std::vector<MultiPoly> out;
  for (int i = 1; i <= degree(); ++i) out.push_back(coeffs_[i] * Rational(i));
  return UniPoly(std::move(out), zero_);
}

/// Euclidean division over the rationals.
std::pair<UniPoly<Rational>, UniPoly<Rational>> divmod(const UniPoly<Rational>& a, const UniPoly<Rational>& b);
/// Monic gcd over the rationals.
UniPoly<Rational> gcd(UniPoly<Rational> a, UniPoly<Rational> b);
bool is_square_free(const UniPoly<Rational>& p);

/// Polynomial in two auxiliary variables (x, y) with coefficients in C,
/// stored sparsely by exponent pair.
template <class C>
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  explicit BiPoly(C zero) : zero_(std::move(zero)) {}

  const std::map<Key, C>& terms() const { return terms_; }
  const C& zero() const { return zero_; }
  bool is_zero() const { return terms_.empty(); }

  const C& coeff(int px, int py) const {
    auto it = terms_.find({px, py});
    return it == terms_.end() ? zero_ : it->second;
  }
  void add_term(int px, int py, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(Key{px, py}, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Product of p(x) and q(y).
  static BiPoly outer(const UniPoly<C>& px, const UniPoly<C>& qy) {
    BiPoly out(px.zero());
    for (int i = 0; i <= px.degree(); ++i) {
      if (coeff_is_zero(px.coeff(i))) continue;
      for (int j = 0; j <= qy.degree(); ++j) {
        if (coeff_is_zero(qy.coeff(j))) continue;
        out.add_term(i, j, px.coeff(i) * qy.coeff(j));
      }
    }
    return out;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out(a.zero_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
    return out;
  }
  BiPoly operator-() const { return BiPoly(zero_) - *this; }
  BiPoly scaled_monomial(const C& c, int px, int py) const {
    BiPoly out(zero_);
    for (const auto& [k, v] : terms_) out.add_term(k.first + px, k.second + py, v * c);
    return out;
  }

  /// Exchanges the roles of x and y.
  BiPoly swapped() const {
    BiPoly out(zero_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.second, k.first}, c);
    return out;
  }

  /// Exact quotient by (x - y); throws std::domain_error when a remainder
  /// (a genuine pole on the diagonal) is left.
  BiPoly divide_by_difference() const {
    int dx = -1;
    for (const auto& [k, c] : terms_) dx = std::max(dx, k.first);
    BiPoly out(zero_);
    if (dx < 0) return out;
    // Columns F_p(y) of x^p.
    std::vector<std::map<int, C>> cols(dx + 1);
    for (const auto& [k, c] : terms_) cols[k.first].emplace(k.second, c);
    // Q_{p-1} = F_p + y Q_p; remainder F_0 + y Q_0.
    std::map<int, C> carry;
    for (int p = dx; p >= 1; --p) {
      std::map<int, C> q = cols[p];
      for (const auto& [e, c] : carry) {
        auto [it, ins] = q.try_emplace(e + 1, c);
        if (!ins) it->second += c;
      }
      for (const auto& [e, c] : q) out.add_term(p - 1, e, c);
      carry.clear();
      for (auto& [e, c] : q) {
        if (!coeff_is_zero(c)) carry.emplace(e, c);
      }
    }
    std::map<int, C> rem = cols[0];
    for (const auto& [e, c] : carry) {
      auto [it, ins] = rem.try_emplace(e + 1, c);
      if (!ins) it->second += c;
    }
    for (const auto& [e, c] : rem) {
      if (!coeff_is_zero(c)) throw std::domain_error("divide_by_difference: residual pole");
    }
    return out;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }

 private:
  std::map<Key, C> terms_;
  C zero_;
};

}  // namespace sepvar

#endif  // SEPVAR_UNIPOLY_HPP
