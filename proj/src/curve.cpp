#include "sepvar/curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sepvar/multipoly.hpp"

namespace sepvar {

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs, int precision)
    : val_(valuation), c_(std::move(coeffs)), prec_(precision) {
  normalize();
}

LaurentSeries LaurentSeries::monomial(int exp, const Rational& c) { return LaurentSeries(exp, {c}); }

void LaurentSeries::normalize() {
  if (prec_ != kExactPrecision && val_ + static_cast<int>(c_.size()) > prec_) {
    c_.resize(std::max(prec_ - val_, 0));
  }
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + lead);
    val_ += static_cast<int>(lead);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) val_ = is_exact() ? 0 : prec_;
}

Rational LaurentSeries::coefficient(int exp) const {
  if (exp >= prec_) throw std::out_of_range("coefficient of t^" + std::to_string(exp) + " beyond O(t^" + std::to_string(prec_) + ")");
  const int i = exp - val_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

LaurentSeries LaurentSeries::truncated(int precision) const {
  LaurentSeries r = *this;
  r.prec_ = std::min(prec_, precision);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * (val_ + static_cast<int>(i));
  return LaurentSeries(val_ - 1, std::move(out), is_exact() ? kExactPrecision : prec_ - 1);
}

LaurentSeries LaurentSeries::primitive(const Rational& constant) const {
  if (residue() != 0) throw std::domain_error("primitive of a series with nonzero t^-1 term");
  const int lo = std::min(val_ + 1, 0);
  const int hi = std::max(val_ + static_cast<int>(c_.size()) + 1, 1);
  std::vector<Rational> out(hi - lo, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const int e = val_ + static_cast<int>(i);
    if (e == -1) continue;
    out[e + 1 - lo] = c_[i] / Rational(e + 1);
  }
  out[-lo] += constant;
  return LaurentSeries(lo, std::move(out), is_exact() ? kExactPrecision : prec_ + 1);
}

LaurentSeries LaurentSeries::inverse() const {
  if (c_.empty()) throw std::domain_error("inverse of a series with unknown leading term");
  const int rel = is_exact() ? kExactPrecision : prec_ - val_;
  if (rel == kExactPrecision) throw std::domain_error("inverse of an exact series needs a truncation");
  std::vector<Rational> inv(rel, Rational(0));
  const Rational a0_inv = 1 / c_[0];
  inv[0] = a0_inv;
  for (int n = 1; n < rel; ++n) {
    Rational s = 0;
    const int top = std::min<int>(n, static_cast<int>(c_.size()) - 1);
    for (int k = 1; k <= top; ++k) s += c_[k] * inv[n - k];
    inv[n] = -s * a0_inv;
  }
  return LaurentSeries(-val_, std::move(inv), -val_ + rel);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int prec = std::min(a.prec_, b.prec_);
  if (a.c_.empty()) return b.truncated(prec);
  if (b.c_.empty()) return a.truncated(prec);
  const int lo = std::min(a.val_, b.val_);
  const int hi = std::max(a.val_ + static_cast<int>(a.c_.size()), b.val_ + static_cast<int>(b.c_.size()));
  std::vector<Rational> out(hi - lo, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[a.val_ - lo + i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[b.val_ - lo + i] += b.c_[i];
  return LaurentSeries(lo, std::move(out), prec);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  constexpr int kExact = LaurentSeries::kExactPrecision;
  // Absolute precision of a product: the unknown tail of one factor
  // multiplied by the leading term of the other.
  auto tail = [](const LaurentSeries& x, const LaurentSeries& y) {
    return x.is_exact() ? kExact : x.prec_ + y.val_;
  };
  int prec = std::min(tail(a, b), tail(b, a));
  if (prec > kExact / 2) prec = kExact;
  if (a.c_.empty() || b.c_.empty()) return LaurentSeries(0, {}, prec);
  const int val = a.val_ + b.val_;
  std::size_t len = a.c_.size() + b.c_.size() - 1;
  if (prec != kExact) len = std::min<std::size_t>(len, std::max(prec - val, 0));
  std::vector<Rational> out(len, Rational(0));
  for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size() && i + j < len; ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentSeries(val, std::move(out), prec);
}

LaurentSeries operator*(const LaurentSeries& a, const Rational& s) {
  LaurentSeries r = a;
  for (auto& x : r.c_) x *= s;
  r.normalize();
  return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.prec_ == b.prec_ && a.val_ == b.val_ && a.c_ == b.c_;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << sepvar::to_string(c_[i]) << "*t^" << (val_ + static_cast<int>(i));
  }
  if (!is_exact()) os << (first ? "" : " + ") << "O(t^" << prec_ << ")";
  if (first && is_exact()) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Branch at infinity

LaurentSeries PuiseuxSeries::z() const { return LaurentSeries::monomial(-3); }

LaurentSeries PuiseuxSeries::w() const {
  std::vector<Rational> neg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  return LaurentSeries(-4, std::move(neg), order + 1 - 4);
}

namespace {

// G(W, t) = t^12 R(t^-3, -t^-4 W) as a polynomial in W with coefficients
// exact polynomials in t; index = power of W.
std::vector<LaurentSeries> branch_equation(const CurveInstance& curve) {
  std::vector<LaurentSeries> g(4, LaurentSeries());
  const BiPoly<Rational> r = curve_polynomial(curve);
  for (const auto& [key, v] : r.terms()) {
    const auto [i, j] = key;
    const int e = 12 - 3 * i - 4 * j;
    if (e < 0) throw std::logic_error("curve polynomial exceeds the weight of w^3");
    g[j] = g[j] + LaurentSeries::monomial(e, (j % 2) ? Rational(-v) : v);
  }
  return g;
}

LaurentSeries horner(const std::vector<LaurentSeries>& g, const LaurentSeries& w) {
  LaurentSeries acc;
  for (int j = static_cast<int>(g.size()) - 1; j >= 0; --j) acc = acc * w + g[j];
  return acc;
}

std::vector<LaurentSeries> w_derivative(const std::vector<LaurentSeries>& g) {
  std::vector<LaurentSeries> d;
  for (std::size_t j = 1; j < g.size(); ++j) d.push_back(g[j] * Rational(static_cast<int>(j)));
  return d;
}

LaurentSeries exact_part(const LaurentSeries& s) {
  std::vector<Rational> c;
  for (int e = s.valuation(); e < s.precision(); ++e) c.push_back(s.coefficient(e));
  return LaurentSeries(s.valuation(), std::move(c));
}

}  // namespace

PuiseuxSeries puiseux_expand(const CurveInstance& curve, int order) {
  if (order < 1) throw std::invalid_argument("Puiseux order must be positive");
  const auto g = branch_equation(curve);
  const auto gw = w_derivative(g);
  if (horner(g, LaurentSeries::constant(1)).coefficient(0) != 0) {
    throw std::logic_error("W = 1 does not solve the leading branch equation");
  }

  LaurentSeries w(0, {Rational(1)}, 1);
  for (int iter = 0; iter < 64 && w.precision() < order + 1; ++iter) {
    const int target = std::min(2 * w.precision(), order + 1);
    const LaurentSeries we = exact_part(w);
    const LaurentSeries val = horner(g, we).truncated(target);
    const LaurentSeries slope = horner(gw, we).truncated(target);
    if (slope.valuation() != 0) throw std::runtime_error("Newton update: singular slope at the branch");
    w = (we - val * slope.inverse()).truncated(target);
    if (w.precision() < target) throw std::runtime_error("Newton update lost precision");
  }

  PuiseuxSeries out;
  out.order = order;
  const LaurentSeries we = exact_part(w);
  const LaurentSeries defect = horner(g, we);
  if (!defect.is_zero() && defect.valuation() < order + 1) {
    throw std::runtime_error("Newton update did not converge to O(t^" + std::to_string(order + 1) + ")");
  }
  for (int k = 0; k <= order; ++k) out.c.push_back(we.coefficient(k));
  return out;
}

LaurentSeries evaluate_on_branch(const BiPoly<Rational>& p, const PuiseuxSeries& branch) {
  const LaurentSeries z = branch.z(), w = branch.w();
  std::map<int, LaurentSeries> zp, wp;
  auto power = [](std::map<int, LaurentSeries>& cache, const LaurentSeries& base, int e) -> const LaurentSeries& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    LaurentSeries r = LaurentSeries::constant(1);
    for (int k = 0; k < e; ++k) r = r * base;
    return cache.emplace(e, std::move(r)).first->second;
  };
  LaurentSeries acc;
  for (const auto& [key, v] : p.terms()) {
    const LaurentSeries& a = power(zp, z, key.first);
    const LaurentSeries& b = power(wp, w, key.second);
    acc = acc + a * b * v;
  }
  return acc;
}

std::array<BiPoly<Rational>, 6> differential_numerators(const CurveInstance& curve) {
  auto specialise = [&](const BiPoly<MultiPoly>& q) {
    BiPoly<Rational> out(Rational(0));
    for (const auto& [key, c] : q.terms()) out.add_term(key.first, key.second, c.evaluate(curve.t));
    return out;
  };
  return {specialise(q_holomorphic(1)), specialise(q_holomorphic(2)), specialise(q_holomorphic(3)),
          specialise(q_dual(1)),        specialise(q_dual(2)),        specialise(q_dual(3))};
}

std::array<std::string, 6> differential_names() {
  return {"dsigma_1", "dsigma_2", "dsigma_3", "dsigma~_1", "dsigma~_2", "dsigma~_3"};
}

LaurentSeries differential_series(const CurveInstance& curve, const BiPoly<Rational>& q, const PuiseuxSeries& branch) {
  BiPoly<Rational> rw(Rational(0));
  const BiPoly<Rational> r = curve_polynomial(curve);
  for (const auto& [key, v] : r.terms()) {
    if (key.second > 0) rw.add_term(key.first, key.second - 1, v * key.second);
  }
  const LaurentSeries dz = LaurentSeries::monomial(-4, -3);
  return evaluate_on_branch(q, branch) * evaluate_on_branch(rw, branch).inverse() * dz;
}

// ---------------------------------------------------------------------------
// Pairing

namespace {

struct Expanded {
  std::array<LaurentSeries, 6> series;
  std::array<Rational, 6> residues;
};

Expanded expand_all(const CurveInstance& curve, int order) {
  const PuiseuxSeries branch = puiseux_expand(curve, order);
  const auto qs = differential_numerators(curve);
  const auto names = differential_names();
  Expanded e;
  for (int a = 0; a < 6; ++a) {
    e.series[a] = differential_series(curve, qs[a], branch);
    try {
      e.residues[a] = e.series[a].residue();
    } catch (const std::out_of_range&) {
      throw std::domain_error(names[a] + ": residue beyond the truncation order");
    }
    if (e.residues[a] != 0) throw std::domain_error(names[a] + " has a nonzero residue at infinity");
  }
  return e;
}

PairingMatrix pair(const Expanded& e, const Rational& constant) {
  PairingMatrix m;
  for (int b = 0; b < 6; ++b) {
    const LaurentSeries prim = e.series[b].primitive(constant);
    for (int a = 0; a < 6; ++a) {
      try {
        m[a][b] = (e.series[a] * prim).residue();
      } catch (const std::out_of_range&) {
        throw std::domain_error("pairing entry beyond the truncation order");
      }
    }
  }
  return m;
}

}  // namespace

PairingMatrix pairing_matrix(const CurveInstance& curve, int order) { return pair(expand_all(curve, order), 0); }

bool is_canonical(const PairingMatrix& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Rational d = i == j ? 1 : 0;
      if (m[i][j] != 0 || m[3 + i][3 + j] != 0) return false;
      if (m[i][3 + j] != d || m[3 + i][j] != -d) return false;
    }
  }
  return true;
}

PairingResult stable_pairing(const CurveInstance& curve, int order) {
  PairingResult r;
  r.seed = curve.seed;
  const Expanded lo = expand_all(curve, order);
  const PairingMatrix m0 = pair(lo, 0);
  const PairingMatrix m1 = pairing_matrix(curve, order + 10);
  r.order = order;
  r.matrix = m0;
  if (m0 != m1) {
    r.escalated = true;
    const PairingMatrix m2 = pairing_matrix(curve, order + 20);
    if (m1 != m2) throw std::runtime_error("pairing did not stabilise by order " + std::to_string(order + 20));
    r.order = order + 10;
    r.matrix = m1;
  }
  r.residues = lo.residues;
  for (int a = 0; a < 6; ++a) r.leading_exponent[a] = lo.series[a].valuation();
  r.canonical = is_canonical(r.matrix);
  r.constant_independent = pair(lo, 1) == m0;
  return r;
}

// ---------------------------------------------------------------------------
// Intersection form

namespace {

AlphabetPtr two_point_alphabet() {
  static const AlphabetPtr a = make_alphabet({"z1", "w1", "z2", "w2"}, {3, 4, 3, 4});
  return a;
}

constexpr std::size_t kZ1 = 0, kW1 = 1, kZ2 = 2, kW2 = 3;

MultiPoly embed(const BiPoly<Rational>& p, std::size_t zi, std::size_t wi) {
  const auto alpha = two_point_alphabet();
  std::vector<MultiPoly::Term> terms;
  for (const auto& [key, v] : p.terms()) {
    std::array<int, 4> e{};
    e[zi] = key.first;
    e[wi] = key.second;
    terms.push_back({make_monomial(*alpha, e), v});
  }
  return MultiPoly::from_terms(alpha, std::move(terms));
}

MultiPoly reduce_cubic(const MultiPoly& x, std::size_t wi, const MultiPoly& r) {
  const auto alpha = two_point_alphabet();
  const MultiPoly zero(alpha);
  const UniPoly<MultiPoly> divisor(r.as_univariate(wi), zero);
  const UniPoly<MultiPoly> num(x.as_univariate(wi), zero);
  const UniPoly<MultiPoly> rem = num.mod_monic(divisor);
  MultiPoly out(alpha);
  const MultiPoly w = MultiPoly::generator(alpha, wi);
  for (int k = rem.degree(); k >= 0; --k) out = out * w + rem.coeff(k);
  return out;
}

}  // namespace

IntersectionCheck intersection_decomposition_check(const CurveInstance& curve) {
  const auto alpha = two_point_alphabet();
  const BiPoly<Rational> rp = curve_polynomial(curve);
  const MultiPoly r1 = embed(rp, kZ1, kW1), r2 = embed(rp, kZ2, kW2);
  const MultiPoly f = embed(rp, kZ1, kW2), g = embed(rp, kZ2, kW1);
  auto gen = [&](std::size_t i) { return MultiPoly::generator(alpha, i); };
  const MultiPoly e = (gen(kZ1) - gen(kZ2)) * (gen(kW1) - gen(kW2));

  // R_w times the derivative along the curve through each point.
  const MultiPoly rw1 = r1.derivative(kW1), rz1 = r1.derivative(kZ1);
  const MultiPoly rw2 = r2.derivative(kW2), rz2 = r2.derivative(kZ2);
  auto delta1 = [&](const MultiPoly& x) { return rw1 * x.derivative(kZ1) - rz1 * x.derivative(kW1); };
  auto delta2 = [&](const MultiPoly& x) { return rw2 * x.derivative(kZ2) - rz2 * x.derivative(kW2); };

  // C dz1^dz2 scaled by R_w1 R_w2 E^2.
  const MultiPoly lhs = delta1(f) * e - f * delta1(e) - delta2(g) * e + g * delta2(e);

  const auto qs = differential_numerators(curve);
  MultiPoly sum(alpha);
  for (int j = 0; j < 3; ++j) {
    sum += embed(qs[j], kZ1, kW1) * embed(qs[3 + j], kZ2, kW2) - embed(qs[j], kZ2, kW2) * embed(qs[3 + j], kZ1, kW1);
  }
  const MultiPoly rhs = e * e * sum;

  IntersectionCheck out;
  out.seed = curve.seed;
  auto vanishes = [&](const MultiPoly& x) { return reduce_cubic(reduce_cubic(x, kW1, r1), kW2, r2).is_zero(); };
  out.residual_terms_before_reduction = (lhs + rhs).size();
  // The sign fixes how the product dsigma(P1) dsigma~(P2) is oriented
  // relative to d(f dz2) = df ^ dz2; only one reading may hold.
  const bool plus = vanishes(lhs - rhs), minus = vanishes(lhs + rhs);
  out.orientation = plus == minus ? 0 : (plus ? 1 : -1);
  out.identity_holds = out.orientation != 0;

  const std::map<std::size_t, MultiPoly> swap = {{kZ1, gen(kZ2)}, {kW1, gen(kW2)}, {kZ2, gen(kZ1)}, {kW2, gen(kW1)}};
  out.antisymmetric = lhs.substitute(swap, alpha) == -lhs && rhs.substitute(swap, alpha) == -rhs;
  return out;
}

CurveInstance zero_curve() {
  CurveInstance c;
  for (auto& v : c.t) v = 0;
  return c;
}

}  // namespace sepvar
