#include "sepvar/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sepvar/poisson.hpp"
#include "sepvar/spectral.hpp"

namespace sepvar {

using namespace lgen;

const std::vector<std::size_t>& eliminated_generators() {
  static const std::vector<std::size_t> g = {l12, l21, l31, l33, l32_0, l33_0};
  return g;
}

const std::vector<std::size_t>& free_generators() {
  static const std::vector<std::size_t> g = {l11, l13, l22, l23, l32, l31_0};
  return g;
}

const std::map<std::size_t, int>& a0_caps() {
  static const std::map<std::size_t, int> caps = {{l11, 1}, {l22, 2}, {l31_0, 2}};
  return caps;
}

std::vector<Monomial> enumerate_a0(int k) {
  if (k < 0) return {};
  return monomials_of_weight(*l_alphabet(), k, free_generators(), a0_caps());
}

bool is_a0_monomial(const Monomial& m) {
  for (std::size_t g : eliminated_generators()) {
    if (m.exps[g] != 0) return false;
  }
  for (const auto& [g, cap] : a0_caps()) {
    if (m.exps[g] > cap) return false;
  }
  return true;
}

LinearElimination discover_linear_elimination() {
  const auto alpha = l_alphabet();
  const auto& t = spectral().t;
  std::vector<std::size_t> order(kNumT);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return t_alphabet()->degree(a) < t_alphabet()->degree(b);
  });

  LinearElimination out;
  std::vector<bool> used(alpha->size(), false);
  for (std::size_t ti : order) {
    const MultiPoly e = out.phi.empty() ? t[ti] : t[ti].substitute(out.phi, alpha);
    std::optional<std::size_t> hit;
    Rational unit;
    for (std::size_t g : eliminated_generators()) {
      if (used[g] || e.degree_in(g) != 1) continue;
      const MultiPoly c = e.coefficient_of_power(g, 1);
      if (c.is_constant() && (c.constant_term() == 1 || c.constant_term() == -1)) {
        hit = g;
        unit = c.constant_term();
        break;
      }
    }
    if (!hit) {
      out.relation_t.push_back(ti);
      continue;
    }
    const MultiPoly value = e.coefficient_of_power(*hit, 0) * Rational(-1 / unit);
    const std::map<std::size_t, MultiPoly> single = {{*hit, value}};
    for (auto& [g, p] : out.phi) p = p.substitute(single, alpha);
    out.phi.emplace(*hit, value);
    out.assignment.emplace_back(ti, *hit);
    used[*hit] = true;
  }

  if (out.phi.size() != eliminated_generators().size()) {
    throw std::logic_error("linear elimination solved for " + std::to_string(out.phi.size()) +
                           " generators, expected " + std::to_string(eliminated_generators().size()));
  }
  for (const auto& [g, p] : out.phi) {
    for (std::size_t e : eliminated_generators()) {
      if (p.involves(e)) throw std::logic_error("substitution for " + alpha->name(g) + " is not free");
    }
  }
  for (const auto& [ti, g] : out.assignment) {
    if (!t[ti].substitute(out.phi, alpha).is_zero()) {
      throw std::logic_error("substitution does not kill " + t_names()[ti]);
    }
  }
  for (std::size_t ti : out.relation_t) out.relations.push_back(t[ti].substitute(out.phi, alpha));
  return out;
}

namespace {

SparseRow<Rational> to_row(const MultiPoly& p, const std::unordered_map<Monomial, std::uint32_t, MonomialHash>& index) {
  SparseRow<Rational> row;
  row.reserve(p.size());
  for (const auto& term : p.terms()) {
    auto it = index.find(term.mono);
    if (it == index.end()) throw std::logic_error("monomial outside slice: " + p.to_string());
    row.emplace_back(it->second, term.coeff);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

}  // namespace

NormalFormEngine::NormalFormEngine() : elim_(discover_linear_elimination()) {}

const DegreeSlice& NormalFormEngine::slice(int k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = slices_.find(k);
  if (it != slices_.end()) return *it->second;

  const auto alpha = l_alphabet();
  auto s = std::make_unique<DegreeSlice>();
  s->degree = k;
  std::vector<Monomial> all = monomials_of_weight(*alpha, k, free_generators());
  for (const auto& m : all) {
    if (!is_a0_monomial(m)) s->columns.push_back(m);
  }
  s->non_a0 = s->columns.size();
  for (const auto& m : all) {
    if (is_a0_monomial(m)) s->columns.push_back(m);
  }
  for (std::uint32_t i = 0; i < s->columns.size(); ++i) s->index.emplace(s->columns[i], i);

  for (const auto& g : elim_.relations) {
    const int dg = g.homogeneous_degree();
    for (const auto& m : monomials_of_weight(*alpha, k - dg, free_generators())) {
      s->echelon.insert(to_row(g.mul_monomial(m), s->index));
      ++s->ideal_rows;
    }
  }
  return *slices_.emplace(k, std::move(s)).first->second;
}

DimensionIdentity NormalFormEngine::dimension_identity(int k) const {
  const DegreeSlice& s = slice(k);
  DimensionIdentity d;
  d.degree = k;
  d.dim_a = monomials_of_weight(*l_alphabet(), k, [] {
              std::vector<std::size_t> all(l_alphabet()->size());
              std::iota(all.begin(), all.end(), 0);
              return all;
            }()).size();
  d.dim_free = s.columns.size();
  d.a0_count = s.columns.size() - s.non_a0;
  d.relation_rank = s.echelon.rank();
  d.dim_fa = d.dim_a - (d.dim_free - d.relation_rank);
  bool ok = d.relation_rank == s.non_a0;
  for (std::uint32_t c : s.echelon.pivot_columns()) ok = ok && c < s.non_a0;
  d.a0_is_basis = ok;
  return d;
}

MultiPoly NormalFormEngine::to_free(const MultiPoly& x) const {
  return x.substitute(elim_.phi, l_alphabet());
}

MultiPoly NormalFormEngine::normal_form(const MultiPoly& x) const {
  const auto alpha = l_alphabet();
  const MultiPoly f = to_free(x);
  std::vector<MultiPoly::Term> out;
  for (int w : f.weights()) {
    const DegreeSlice& s = slice(w);
    if (!dimension_identity(w).a0_is_basis) {
      throw std::logic_error("A0 is not a basis of the quotient in degree " + std::to_string(w));
    }
    for (const auto& [c, v] : s.echelon.reduce(to_row(f.homogeneous_component(w), s.index))) {
      if (c < s.non_a0) throw std::logic_error("normal form left a non-A0 monomial");
      out.push_back({s.columns[c], v});
    }
  }
  return MultiPoly::from_terms(alpha, std::move(out));
}

std::vector<Rational> NormalFormEngine::a0_coordinates(const MultiPoly& x, int k) const {
  const MultiPoly nf = normal_form(x);
  if (!nf.is_zero() && nf.homogeneous_degree() != k) {
    throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(k));
  }
  const auto basis = enumerate_a0(k);
  std::vector<Rational> coords;
  coords.reserve(basis.size());
  for (const auto& m : basis) coords.push_back(nf.coefficient(m));
  return coords;
}

const NormalFormEngine& normal_form_engine() {
  static const NormalFormEngine engine;
  return engine;
}

std::size_t ideal_slice_rank_mod_p(int k, std::uint64_t prime) {
  const auto alpha = l_alphabet();
  std::vector<std::size_t> all(alpha->size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Monomial> cols = monomials_of_weight(*alpha, k, all);

  // Leading columns favour the eliminated generators (l31 first) so that
  // each m * t tends to pivot on its substituted variable.
  static const std::size_t elim_order[] = {l31, l21, l12, l33, l32_0, l33_0};
  std::sort(cols.begin(), cols.end(), [](const Monomial& a, const Monomial& b) {
    for (std::size_t g : elim_order) {
      if (a.exps[g] != b.exps[g]) return a.exps[g] > b.exps[g];
    }
    return grlex_greater(a, b);
  });
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  for (std::uint32_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);

  SparseEchelonModP ech(prime);
  for (const auto& t : spectral().t) {
    const int dt = t.homogeneous_degree();
    for (const auto& m : monomials_of_weight(*alpha, k - dt, all)) {
      SparseRow<std::uint64_t> row;
      const MultiPoly prod = t.mul_monomial(m);
      for (const auto& term : prod.terms()) row.emplace_back(index.at(term.mono), ech.reduce(term.coeff));
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ech.insert(std::move(row));
    }
  }
  return ech.rank();
}

QSeries character_a(int order) {
  return QSeries::inverse_product(l_alphabet()->degrees(), order);
}

QSeries character_a0_series(int order) {
  QSeries s = character_a(order);
  for (int d : t_alphabet()->degrees()) s = s * QSeries::one_minus_q_pow(d);
  return s.truncated(order);
}

std::pair<QSeries, QSeries> character_a0_fraction() {
  const QSeries num = (QSeries::one() + QSeries::monomial(4)) *
                      (QSeries::one() + QSeries::monomial(3) + QSeries::monomial(6)) *
                      (QSeries::one() + QSeries::monomial(4) + QSeries::monomial(8));
  const QSeries den = QSeries::one_minus_q_pow(2) * QSeries::one_minus_q_pow(3) * QSeries::one_minus_q_pow(5);
  return {num, den};
}

QSeries character_a0_closed_form(int order) {
  const auto [num, den] = character_a0_fraction();
  return num.divided_by(den, order);
}

}  // namespace sepvar
