#include "sepvar/poisson.hpp"

#include <map>
#include <optional>

namespace sepvar {

AlphabetPtr l_alphabet() {
  static const AlphabetPtr a = make_alphabet(
      {"l11", "l12", "l13", "l21", "l22", "l23", "l31", "l32", "l33", "l31_0", "l32_0", "l33_0"},
      {4, 3, 2, 5, 4, 3, 6, 5, 4, 3, 2, 1});
  return a;
}

AlphabetPtr m_alphabet() {
  static const AlphabetPtr a = make_alphabet({"m11_0", "m11_1", "m12_0", "m12_1", "m13_1", "m21_1", "m22_0", "m22_1",
                                              "m23_0", "m23_1", "m31_0", "m31_1", "m32_1", "m33_0", "m33_1"},
                                             std::vector<int>(15, 1));
  return a;
}

namespace {

// Entry spec: coefficient names by power of z; "" = absent, "1" = unit.
LaxMatrix lax_from_spec(const AlphabetPtr& alpha, const std::vector<std::vector<std::string>>& spec) {
  const MultiPoly zero(alpha);
  LaxMatrix m(zero);
  for (int k = 0; k < 9; ++k) {
    std::vector<MultiPoly> coeffs;
    for (const auto& name : spec[k]) {
      if (name.empty()) {
        coeffs.push_back(zero);
      } else if (name == "1") {
        coeffs.push_back(MultiPoly::constant(alpha, 1));
      } else {
        coeffs.push_back(MultiPoly::generator(alpha, name));
      }
    }
    m.e[k] = UniPoly<MultiPoly>(std::move(coeffs), zero);
  }
  return m;
}

template <class C>
C lift(const Rational& r, const C& zero);
template <>
Rational lift(const Rational& r, const Rational&) {
  return r;
}
template <>
MultiPoly lift(const Rational& r, const MultiPoly& zero) {
  return MultiPoly::constant(zero.alphabet(), r);
}

template <class C>
using M9 = std::vector<BiPoly<C>>;

template <class C>
M9<C> lift9(const Mat9& m, const C& zero) {
  M9<C> out(81, BiPoly<C>(zero));
  for (int k = 0; k < 81; ++k) {
    for (const auto& [key, c] : m[k].terms()) out[k].add_term(key.first, key.second, lift(c, zero));
  }
  return out;
}

template <class C>
M9<C> mul9(const M9<C>& a, const M9<C>& b) {
  const C& zero = a[0].zero();
  M9<C> out(81, BiPoly<C>(zero));
  for (int i = 0; i < 9; ++i) {
    for (int k = 0; k < 9; ++k) {
      if (a[9 * i + k].is_zero()) continue;
      for (int j = 0; j < 9; ++j) {
        if (b[9 * k + j].is_zero()) continue;
        out[9 * i + j] += a[9 * i + k] * b[9 * k + j];
      }
    }
  }
  return out;
}

// L(z1) (x) 1 or 1 (x) L(z2) as a 9x9 matrix.
template <class C>
M9<C> lax_factor(const Matrix3<C>& lax, int factor, const C& zero) {
  M9<C> out(81, BiPoly<C>(zero));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto& entry = lax.at(i, j);
      for (int d = 0; d < 3; ++d) {
        for (int p = 0; p <= entry.degree(); ++p) {
          if (coeff_is_zero(entry.coeff(p))) continue;
          if (factor == 1) {
            out[9 * (3 * i + d) + (3 * j + d)].add_term(p, 0, entry.coeff(p));
          } else {
            out[9 * (3 * d + i) + (3 * d + j)].add_term(0, p, entry.coeff(p));
          }
        }
      }
    }
  }
  return out;
}

template <class C>
M9<C> rhs_impl(const RMatrix& r, const Matrix3<C>& lax, const C& zero) {
  M9<C> total(81, BiPoly<C>(zero));
  for (const auto& term : r.terms) {
    const M9<C> n = lift9(term.numerator, zero);
    const M9<C> l = lax_factor(lax, term.factor, zero);
    const M9<C> nl = mul9(n, l);
    const M9<C> ln = mul9(l, n);
    for (int k = 0; k < 81; ++k) {
      if (term.sign > 0) {
        total[k] += nl[k];
        total[k] -= ln[k];
      } else {
        total[k] -= nl[k];
        total[k] += ln[k];
      }
    }
  }
  for (auto& e : total) e = e.divide_by_difference();
  return total;
}

Mat9 unit9(int i, int j, int k, int l) {
  Mat9 m = mat9_zero();
  m[9 * (3 * i + k) + (3 * j + l)].add_term(0, 0, 1);
  return m;
}

Mat9 add9(Mat9 a, const Mat9& b) {
  for (int k = 0; k < 81; ++k) a[k] += b[k];
  return a;
}

Mat9 scale9(const Mat9& a, const BiPoly<Rational>& f) {
  Mat9 out = mat9_zero();
  for (int k = 0; k < 81; ++k) out[k] = a[k] * f;
  return out;
}

BiPoly<Rational> bi(std::initializer_list<std::tuple<int, int, Rational>> terms) {
  BiPoly<Rational> b(Rational(0));
  for (const auto& [px, py, c] : terms) b.add_term(px, py, c);
  return b;
}

struct CoeffKind {
  enum { absent, constant, generator } kind;
  std::size_t gen = 0;
};

CoeffKind classify(const MultiPoly& c) {
  if (c.is_zero()) return {CoeffKind::absent};
  if (c.is_constant()) return {CoeffKind::constant};
  if (c.size() == 1 && c.terms()[0].coeff == 1 && c.terms()[0].mono.total_exponent() == 1) {
    for (std::size_t g = 0; g < c.alphabet()->size(); ++g) {
      if (c.terms()[0].mono.exps[g] == 1) return {CoeffKind::generator, g};
    }
  }
  throw std::invalid_argument("Lax entry coefficient is not a bare generator or constant");
}

}  // namespace

LaxMatrix lax_l() {
  return lax_from_spec(l_alphabet(), {{"l11"},
                                      {"l12", "1"},
                                      {"l13"},
                                      {"l21"},
                                      {"l22"},
                                      {"l23", "1"},
                                      {"l31", "l31_0", "1"},
                                      {"l32", "l32_0"},
                                      {"l33", "l33_0"}});
}

LaxMatrix lax_m() {
  return lax_from_spec(m_alphabet(), {{"m11_1", "m11_0"},
                                      {"m12_1", "m12_0"},
                                      {"m13_1"},
                                      {"", "m21_1"},
                                      {"m22_1", "m22_0"},
                                      {"m23_1", "m23_0"},
                                      {"", "m31_1", "m31_0"},
                                      {"", "m32_1"},
                                      {"m33_1", "m33_0"}});
}

Mat9 mat9_zero() { return Mat9(81, BiPoly<Rational>(Rational(0))); }

Mat9 permutation_p12() {
  Mat9 p = mat9_zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) p = add9(p, unit9(i, j, j, i));
  }
  return p;
}

RMatrix rmatrix_m() {
  Mat9 t00 = mat9_zero(), tmp = mat9_zero(), tpm = mat9_zero();
  for (int i = 0; i < 3; ++i) {
    t00 = add9(t00, unit9(i, i, i, i));
    for (int j = 0; j < 3; ++j) {
      if (i > j) tmp = add9(tmp, unit9(i, j, j, i));
      if (i < j) tpm = add9(tpm, unit9(i, j, j, i));
    }
  }
  const Rational half(1, 2);
  Mat9 n = add9(add9(scale9(t00, bi({{1, 0, half}, {0, 1, half}})), scale9(tmp, bi({{1, 0, 1}}))),
                scale9(tpm, bi({{0, 1, 1}})));
  return RMatrix{"m", {{n, 1, +1}, {n, 2, +1}}};
}

RMatrix rmatrix_l() {
  const Mat9 p = permutation_p12();
  const Mat9 u12 = add9(add9(unit9(1, 0, 2, 0), unit9(2, 0, 2, 1)), unit9(2, 1, 2, 0));
  Mat9 u21 = mat9_zero();
  {
    auto lp = lift9(p, Rational(0));
    u21 = mul9(mul9(lp, lift9(u12, Rational(0))), lp);
  }
  // (z1 - z2) r12(z1, z2) and (z1 - z2) r21(z2, z1)
  Mat9 na = add9(scale9(p, bi({{0, 1, 1}})), scale9(u12, bi({{1, 1, 1}, {0, 2, -1}})));
  Mat9 nb = add9(scale9(p, bi({{1, 0, -1}})), scale9(u21, bi({{2, 0, 1}, {1, 1, -1}})));
  return RMatrix{"l", {{na, 1, +1}, {nb, 2, -1}}};
}

bool RMatrix::residue_proportional_to_p12() const {
  const Mat9 p = permutation_p12();
  for (const auto& term : terms) {
    // Restrict to the diagonal z1 = z2 = z.
    std::vector<std::map<int, Rational>> diag(81);
    for (int k = 0; k < 81; ++k) {
      for (const auto& [key, c] : term.numerator[k].terms()) diag[k][key.first + key.second] += c;
      for (auto it = diag[k].begin(); it != diag[k].end();) it = it->second == 0 ? diag[k].erase(it) : std::next(it);
    }
    std::optional<std::map<int, Rational>> scalar;
    for (int k = 0; k < 81; ++k) {
      const bool on_p = !p[k].is_zero();
      if (!on_p) {
        if (!diag[k].empty()) return false;
        continue;
      }
      if (!scalar) scalar = diag[k];
      if (*scalar != diag[k]) return false;
    }
    if (!scalar || scalar->empty()) return false;
  }
  return true;
}

std::vector<BiPoly<Rational>> rmatrix_rhs(const RMatrix& r, const Matrix3<Rational>& lax) {
  return rhs_impl(r, lax, Rational(0));
}

// ---------------------------------------------------------------------------

BracketTable::BracketTable(std::string tag, AlphabetPtr alphabet)
    : tag_(std::move(tag)), alphabet_(std::move(alphabet)) {
  entries_.assign(alphabet_->size() * alphabet_->size(), MultiPoly(alphabet_));
}

void BracketTable::set(std::size_t a, std::size_t b, const MultiPoly& value) {
  if (a == b && !value.is_zero()) throw InconsistentBracket("nonzero self-bracket");
  entries_[a * size() + b] = value;
  entries_[b * size() + a] = -value;
}

BracketTable BracketTable::with_entry(std::size_t a, std::size_t b, const MultiPoly& value) const {
  BracketTable t = *this;
  t.set(a, b, value);
  return t;
}

std::size_t BracketTable::nonzero_count() const {
  std::size_t n = 0;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) n += !at(a, b).is_zero();
  }
  return n;
}

BracketTable derive_bracket_table(const RMatrix& r, const LaxMatrix& lax, const std::string& tag) {
  const AlphabetPtr alpha = lax.at(0, 0).zero().alphabet();
  const MultiPoly zero(alpha);
  const auto rhs = rhs_impl(r, lax, zero);
  const std::size_t n = alpha->size();

  std::vector<std::optional<MultiPoly>> found(n * n);
  auto record = [&](std::size_t a, std::size_t b, const MultiPoly& v) {
    auto& slot = found[a * n + b];
    if (slot && *slot != v) {
      throw InconsistentBracket("conflicting values for {" + alpha->name(a) + ", " + alpha->name(b) + "}");
    }
    slot = v;
  };

  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          const auto& entry = rhs[9 * (3 * i + k) + (3 * j + l)];
          const auto& lij = lax.at(i, j);
          const auto& lkl = lax.at(k, l);
          // Every RHS term must sit on a generator pair.
          for (const auto& [key, c] : entry.terms()) {
            auto a = classify(lij.coeff(key.first));
            auto b = classify(lkl.coeff(key.second));
            if (a.kind != CoeffKind::generator || b.kind != CoeffKind::generator) {
              throw InconsistentBracket("nonzero bracket involving a constant coefficient");
            }
          }
          for (int p = 0; p <= lij.degree(); ++p) {
            auto a = classify(lij.coeff(p));
            if (a.kind != CoeffKind::generator) continue;
            for (int q = 0; q <= lkl.degree(); ++q) {
              auto b = classify(lkl.coeff(q));
              if (b.kind != CoeffKind::generator) continue;
              record(a.gen, b.gen, entry.coeff(p, q));
            }
          }
        }
      }
    }
  }

  BracketTable table(tag, alpha);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!found[a * n + b]) throw InconsistentBracket("generator pair not determined by the relation");
      if (a < b) {
        if (!found[b * n + a] || *found[b * n + a] != -*found[a * n + b]) {
          throw InconsistentBracket("derived table is not antisymmetric");
        }
        table.set(a, b, *found[a * n + b]);
      }
      if (a == b && !found[a * n + a]->is_zero()) throw InconsistentBracket("nonzero self-bracket");
    }
  }
  return table;
}

// ---------------------------------------------------------------------------

MultiPoly bracket(const MultiPoly& f, const MultiPoly& g, const BracketTable& table) {
  const std::size_t n = table.size();
  MultiPoly result(table.alphabet());
  if (f.is_constant() || g.is_constant()) return result;
  std::vector<std::optional<MultiPoly>> dg(n);
  for (std::size_t b = 0; b < n; ++b) {
    if (g.involves(b)) dg[b] = g.derivative(b);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!f.involves(a)) continue;
    MultiPoly inner(table.alphabet());
    for (std::size_t b = 0; b < n; ++b) {
      if (!dg[b] || table.at(a, b).is_zero()) continue;
      inner += table.at(a, b) * *dg[b];
    }
    if (!inner.is_zero()) result += f.derivative(a) * inner;
  }
  return result;
}

const BracketTable& l_bracket_table() {
  static const BracketTable t = derive_bracket_table(rmatrix_l(), lax_l(), "l");
  return t;
}

const BracketTable& m_bracket_table() {
  static const BracketTable t = derive_bracket_table(rmatrix_m(), lax_m(), "m");
  return t;
}

RatFunc bracket(const RatFunc& f, const RatFunc& g, const BracketTable& table) {
  const MultiPoly& p = f.numerator();
  const MultiPoly& q = f.denominator();
  const MultiPoly& r = g.numerator();
  const MultiPoly& s = g.denominator();
  const bool fpoly = q.is_constant(), gpoly = s.is_constant();
  if (fpoly && gpoly) return RatFunc(bracket(p, r, table));
  // {p/q, r/s} = ({p,r} q s - {p,s} q r - {q,r} p s + {q,s} p r) / (q s)^2
  MultiPoly num = bracket(p, r, table) * q * s;
  if (!gpoly) num -= bracket(p, s, table) * q * r;
  if (!fpoly) num -= bracket(q, r, table) * p * s;
  if (!fpoly && !gpoly) num += bracket(q, s, table) * p * r;
  MultiPoly den = q * s;
  return RatFunc(num, den * den);
}

JacobiReport verify_jacobi(const BracketTable& table) {
  JacobiReport report;
  const std::size_t n = table.size();
  std::vector<MultiPoly> gens;
  for (std::size_t a = 0; a < n; ++a) gens.push_back(MultiPoly::generator(table.alphabet(), a));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        ++report.triples_checked;
        MultiPoly s = bracket(table.at(a, b), gens[c], table) + bracket(table.at(b, c), gens[a], table) +
                      bracket(table.at(c, a), gens[b], table);
        if (!s.is_zero()) report.failures.push_back({a, b, c});
      }
    }
  }
  return report;
}

bool verify_center(const BracketTable& table, const MultiPoly& element) {
  for (std::size_t g = 0; g < table.size(); ++g) {
    if (!bracket(element, MultiPoly::generator(table.alphabet(), g), table).is_zero()) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> grading_violations(const BracketTable& table, int shift) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const auto& alpha = *table.alphabet();
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = a + 1; b < table.size(); ++b) {
      const MultiPoly& v = table.at(a, b);
      if (v.is_zero()) continue;
      if (!v.is_homogeneous() || v.homogeneous_degree() != alpha.degree(a) + alpha.degree(b) + shift) {
        bad.emplace_back(a, b);
      }
    }
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Reduction check

namespace {

struct ReductionSetup {
  AlphabetPtr alpha;
  // Numerators of l = s m adj(s) / det(s), by entry and z power.
  std::vector<std::array<MultiPoly, 3>> num;
  MultiPoly det{m_alphabet()};
};

MultiPoly det3(const std::array<MultiPoly, 9>& a) {
  return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) + a[2] * (a[3] * a[7] - a[4] * a[6]);
}

std::array<MultiPoly, 9> adjugate3(const std::array<MultiPoly, 9>& a) {
  auto m = [&](int r, int c) -> const MultiPoly& { return a[3 * r + c]; };
  auto cof = [&](int r, int c) {
    int r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
  };
  const MultiPoly z(a[0].alphabet());
  std::array<MultiPoly, 9> out{z, z, z, z, z, z, z, z, z};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out[3 * c + r] = cof(r, c);
  }
  return out;
}

ReductionSetup reduction_setup() {
  ReductionSetup st;
  st.alpha = m_alphabet();
  const MultiPoly zero(st.alpha);
  auto g = [&](const char* name) { return MultiPoly::generator(st.alpha, name); };
  std::array<MultiPoly, 9> mu{g("m11_0"), g("m12_0"), zero, g("m21_1"), g("m22_0"), g("m23_0"),
                              g("m31_1"), g("m32_1"), g("m33_0")};
  std::array<MultiPoly, 9> s{MultiPoly::constant(st.alpha, 1), zero, zero, mu[0], mu[1], mu[2], zero, zero, zero};
  for (int c = 0; c < 3; ++c) {
    for (int k = 0; k < 3; ++k) s[6 + c] += mu[k] * mu[3 * k + c];
  }
  st.det = det3(s);
  const auto adj = adjugate3(s);
  const LaxMatrix m = lax_m();
  st.num.assign(9, {zero, zero, zero});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const auto& mab = m.at(a, b);
          MultiPoly w = s[3 * i + a] * adj[3 * b + j];
          if (w.is_zero()) continue;
          for (int p = 0; p <= mab.degree(); ++p) {
            if (!mab.coeff(p).is_zero()) st.num[3 * i + j][p] += w * mab.coeff(p);
          }
        }
      }
    }
  }
  return st;
}

struct PointResult {
  bool shape_ok = false;
  bool identity_ok = false;
  bool antisymmetry_ok = false;
  std::size_t checked = 0;
  std::vector<Rational> l_values;  // lax_l generator values
};

// Y(x,y)[(k,i),(l,j)] = X(y,x)[(i,k),(j,l)]
std::vector<BiPoly<Rational>> flip(const std::vector<BiPoly<Rational>>& x) {
  std::vector<BiPoly<Rational>> out(81, BiPoly<Rational>(Rational(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) out[9 * (3 * k + i) + (3 * l + j)] = x[9 * (3 * i + k) + (3 * j + l)].swapped();
  return out;
}

PointResult check_point(const ReductionSetup& st, const BracketTable& m_table, const std::vector<Rational>& pt) {
  PointResult res;
  const std::size_t n = st.alpha->size();
  const Rational d = st.det.evaluate(pt);
  std::vector<Rational> ddet(n);
  for (std::size_t a = 0; a < n; ++a) ddet[a] = st.det.derivative(a).evaluate(pt);

  // Values and gradients of every coefficient of l.
  std::vector<std::array<Rational, 3>> val(9);
  std::vector<std::array<std::vector<Rational>, 3>> grad(9);
  for (int e = 0; e < 9; ++e) {
    for (int p = 0; p < 3; ++p) {
      const MultiPoly& N = st.num[e][p];
      const Rational nv = N.evaluate(pt);
      val[e][p] = nv / d;
      grad[e][p].assign(n, Rational(0));
      for (std::size_t a = 0; a < n; ++a) {
        Rational dn = N.involves(a) ? N.derivative(a).evaluate(pt) : Rational(0);
        grad[e][p][a] = (dn * d - nv * ddet[a]) / (d * d);
      }
    }
  }

  // The conjugated matrix must have the reduced shape.
  const LaxMatrix shape = lax_l();
  res.shape_ok = true;
  res.l_values.assign(l_alphabet()->size(), Rational(0));
  Matrix3<Rational> lnum{Rational(0)};
  for (int e = 0; e < 9; ++e) {
    std::vector<Rational> coeffs;
    for (int p = 0; p < 3; ++p) {
      auto kind = classify(shape.e[e].coeff(p));
      if (kind.kind == CoeffKind::absent && val[e][p] != 0) res.shape_ok = false;
      if (kind.kind == CoeffKind::constant && val[e][p] != shape.e[e].coeff(p).constant_term()) res.shape_ok = false;
      if (kind.kind == CoeffKind::generator) res.l_values[kind.gen] = val[e][p];
      coeffs.push_back(val[e][p]);
    }
    lnum.e[e] = UniPoly<Rational>(coeffs, Rational(0));
  }

  std::vector<std::vector<Rational>> pi(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) pi[a][b] = m_table.at(a, b).evaluate(pt);
  }
  auto pair_bracket = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (u[a] == 0) continue;
      Rational inner = 0;
      for (std::size_t b = 0; b < n; ++b) {
        if (v[b] != 0 && pi[a][b] != 0) inner += pi[a][b] * v[b];
      }
      s += u[a] * inner;
    }
    return s;
  };

  std::vector<BiPoly<Rational>> lhs(81, BiPoly<Rational>(Rational(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
              lhs[9 * (3 * i + k) + (3 * j + l)].add_term(p, q, pair_bracket(grad[3 * i + j][p], grad[3 * k + l][q]));

  const auto rhs = rmatrix_rhs(rmatrix_l(), lnum);
  res.identity_ok = true;
  for (int k = 0; k < 81; ++k) {
    ++res.checked;
    if (!(lhs[k] == rhs[k])) res.identity_ok = false;
  }
  const auto fl = flip(lhs), fr = flip(rhs);
  res.antisymmetry_ok = true;
  for (int k = 0; k < 81; ++k) {
    if (!(fl[k] == -lhs[k]) || !(fr[k] == -rhs[k])) res.antisymmetry_ok = false;
  }
  return res;
}

}  // namespace

bool ReductionReport::ok() const {
  if (points.empty() || !degenerate_ok || !antisymmetry_ok) return false;
  for (const auto& p : points) {
    if (!p.lax_shape_ok || !p.identity_ok) return false;
  }
  return true;
}

ReductionReport verify_reduction(std::span<const std::uint64_t> seeds, const BracketTable& m_table) {
  const ReductionSetup st = reduction_setup();
  const auto& alpha = *st.alpha;
  ReductionReport report;
  report.antisymmetry_ok = true;
  for (std::uint64_t seed : seeds) {
    RationalSampler rng(seed);
    ReductionReport::Point point;
    point.seed = seed;
    for (;;) {
      std::vector<Rational> pt(alpha.size());
      for (std::size_t a = 0; a < alpha.size(); ++a) pt[a] = rng.next_nonzero();
      // Pin the central element to 1.
      pt[alpha.index("m31_0")] = 1 / (pt[alpha.index("m12_0")] * pt[alpha.index("m23_0")]);
      if (st.det.evaluate(pt) == 0) {
        ++point.resamples;
        continue;
      }
      auto r = check_point(st, m_table, pt);
      point.lax_shape_ok = r.shape_ok;
      point.identity_ok = r.identity_ok;
      point.entries_checked = r.checked;
      report.antisymmetry_ok = report.antisymmetry_ok && r.antisymmetry_ok;
      break;
    }
    report.points.push_back(point);
  }

  // m has only its bare z-powers: s = 1 and l carries no free coefficients.
  std::vector<Rational> degenerate(alpha.size(), Rational(0));
  degenerate[alpha.index("m12_0")] = 1;
  degenerate[alpha.index("m23_0")] = 1;
  degenerate[alpha.index("m31_0")] = 1;
  auto r = check_point(st, m_table, degenerate);
  bool all_zero = true;
  for (const auto& v : r.l_values) all_zero = all_zero && v == 0;
  report.degenerate_ok = st.det.evaluate(degenerate) == 1 && r.shape_ok && r.identity_ok && all_zero;
  return report;
}

}  // namespace sepvar
