#include "sepvar/cohomology.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "sepvar/poisson.hpp"
#include "sepvar/quotient.hpp"
#include "sepvar/sepvars.hpp"
#include "sepvar/spectral.hpp"

namespace sepvar {

const std::array<VectorField, 3>& vector_fields() {
  static const std::array<VectorField, 3> fields = [] {
    const auto& table = l_bracket_table();
    const auto alpha = l_alphabet();
    const std::array<const char*, 3> ham = {"t2_2", "t3_2", "t3_3"};
    const std::array<int, 3> deg = {1, 2, 5};
    std::array<VectorField, 3> out;
    for (int i = 0; i < 3; ++i) {
      out[i].index = i + 1;
      out[i].hamiltonian = t_index(ham[i]);
      out[i].degree = deg[i];
      const MultiPoly& t = spectral().t[out[i].hamiltonian];
      for (std::size_t g = 0; g < alpha->size(); ++g) {
        MultiPoly v = bracket(t, MultiPoly::generator(alpha, g), table);
        if (!v.is_zero() && v.homogeneous_degree() != alpha->degree(g) + deg[i]) {
          throw std::logic_error("D" + std::to_string(i + 1) + " does not shift degree by " + std::to_string(deg[i]));
        }
        out[i].on_generators.push_back(std::move(v));
      }
    }
    return out;
  }();
  return fields;
}

int d_degree(int i) { return vector_fields().at(i - 1).degree; }

MultiPoly apply_D(int i, const MultiPoly& x) {
  const auto& field = vector_fields().at(i - 1);
  MultiPoly out(x.alphabet());
  for (std::size_t g = 0; g < field.on_generators.size(); ++g) {
    if (field.on_generators[g].is_zero() || !x.involves(g)) continue;
    out += x.derivative(g) * field.on_generators[g];
  }
  return out;
}

std::vector<std::array<std::size_t, 3>> commutator_failures() {
  std::vector<std::array<std::size_t, 3>> bad;
  const auto alpha = l_alphabet();
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      for (std::size_t g = 0; g < alpha->size(); ++g) {
        const MultiPoly x = MultiPoly::generator(alpha, g);
        if (apply_D(i, apply_D(j, x)) != apply_D(j, apply_D(i, x))) {
          bad.push_back({std::size_t(i), std::size_t(j), g});
        }
      }
    }
  }
  return bad;
}

std::vector<std::pair<int, std::size_t>> annihilation_failures() {
  std::vector<std::pair<int, std::size_t>> bad;
  for (int i = 1; i <= 3; ++i) {
    for (std::size_t a = 0; a < kNumT; ++a) {
      if (!apply_D(i, spectral().t[a]).is_zero()) bad.emplace_back(i, a);
    }
  }
  return bad;
}

// ---------------------------------------------------------------------------

QSeries printed_chi_q() {
  return QSeries::parse("-q^-8 + q^-7 - 2q^-5 + 2q^-3 - 3q^-2 - q^-1 + 2 - q - 3q^2 + 2q^3 - 2q^5 + q^7 - q^8");
}

QSeries printed_wedge_v(int k) {
  switch (k) {
    case 0:
      return QSeries::one();
    case 1:
      return QSeries::parse("q^-5 + q^-2 + q^-1 + q + q^2 + q^5");
    case 2:
      return QSeries::parse("q^-7 + q^-6 + q^-4 + 2q^-3 + q^-1 + 3 + q + 2q^3 + q^4 + q^6 + q^7");
    case 3:
      return QSeries::parse("q^-8 + q^-6 + 2q^-5 + q^-4 + 3q^-2 + 2q^-1 + 2q + 3q^2 + q^4 + 2q^5 + q^6 + q^8");
    default:
      throw std::out_of_range("printed_wedge_v index");
  }
}

QSeries printed_top_character() {
  return QSeries::parse("1 + q^2 + q^3 + q^4 + 2q^6 + q^7 + q^8 + q^9 + 2q^10 + q^12 + q^13 + q^14 + q^16");
}

CharacterLedger euler_characteristics(int qseries_order) {
  CharacterLedger led;
  const auto [num, den] = character_a0_fraction();
  const QSeries factor = QSeries::one_minus_q_pow(1) * QSeries::one_minus_q_pow(2) * QSeries::one_minus_q_pow(5);
  const QSeries shift = QSeries::monomial(-8);

  // ch(A0) (1-q)(1-q^2)(1-q^5) / q^8 with the sign flipped; the division by
  // the denominator of ch(A0) must be exact.
  auto exact = (-(num * factor)).divide_exact(den);
  if (!exact) throw std::logic_error("q-Euler characteristic is not a Laurent polynomial");
  led.chi_q = *exact * shift;
  led.chi_1 = led.chi_q.at_one();
  led.chi_q_from_series = (-(character_a0_series(qseries_order) * factor) * shift).truncated(qseries_order - 8);
  // Read literally, the display divides by the three factors instead.
  led.printed_quotient_is_polynomial = (-num).divide_exact(den * factor).has_value();

  // deg(Q dz / R_w) = deg Q + deg z - deg R_w for the six differentials.
  QSeries v;
  for (int i = 1; i <= 3; ++i) {
    for (const auto& q : {q_holomorphic(i), q_dual(i)}) {
      std::optional<int> deg;
      for (const auto& [key, c] : q.terms()) {
        const int d = 3 * key.first + 4 * key.second + c.homogeneous_degree();
        if (deg && *deg != d) throw std::logic_error("differential numerator is not homogeneous");
        deg = d;
      }
      led.differential_degrees.push_back(*deg + 3 - 8);
      v = v + QSeries::monomial(*deg + 3 - 8);
    }
  }
  for (int k = 0; k <= 3; ++k) led.wedge_v[k] = k == 0 ? QSeries::one() : v.exterior_power(k);
  for (int k = 0; k <= 3; ++k) led.w[k] = k >= 2 ? led.wedge_v[k] - led.wedge_v[k - 2] : led.wedge_v[k];
  led.alternating_residual = led.chi_q - (QSeries::one() - led.w[1] + led.w[2] - led.w[3]);
  led.top_character = QSeries::monomial(8) * (led.w[3] + QSeries::one());
  return led;
}

// ---------------------------------------------------------------------------

ExactSubspace compute_exact_subspace(int k) {
  const auto& engine = normal_form_engine();
  ExactSubspace es;
  es.degree = k;
  es.basis = enumerate_a0(k);
  es.span = EchelonBasis(es.basis.size());
  std::vector<std::vector<Rational>> cols;
  for (int i = 1; i <= 3; ++i) {
    for (const auto& b : enumerate_a0(k - d_degree(i))) {
      auto coords = engine.a0_coordinates(apply_D(i, MultiPoly::monomial(l_alphabet(), b)), k);
      es.span.insert(coords);
      cols.push_back(std::move(coords));
    }
  }
  es.m = QMatrix::from_columns(es.basis.size(), cols);
  return es;
}

namespace {

const ExactSubspace& exact_subspace(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ExactSubspace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, std::make_unique<ExactSubspace>(compute_exact_subspace(k))).first;
  return *it->second;
}

std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

CohomologyClassSet top_cohomology(int max_degree) {
  const auto& engine = normal_form_engine();
  const auto alpha = l_alphabet();
  CohomologyClassSet out;
  // D-products of representatives, kept with the last D applied so that
  // every commutative product is generated once.
  std::vector<std::vector<std::pair<MultiPoly, int>>> orbit(max_degree + 1);
  std::vector<std::int64_t> dims(max_degree + 1, 0);

  for (int k = 0; k <= max_degree; ++k) {
    const ExactSubspace& es = exact_subspace(k);
    CohomologyDegree deg;
    deg.degree = k;
    deg.a0_dim = es.basis.size();
    deg.rank = es.rank();
    deg.h_dim = deg.a0_dim - deg.rank;

    EchelonBasis grow = es.span;
    for (std::size_t j = 0; j < es.basis.size() && deg.representatives.size() < deg.h_dim; ++j) {
      if (grow.insert(unit_vector(es.basis.size(), j))) deg.representatives.push_back(es.basis[j]);
    }

    EchelonBasis images(es.basis.size());
    bool inside = true;
    for (int i = 1; i <= 3; ++i) {
      const int from = k - d_degree(i);
      if (from < 0) continue;
      for (const auto& [x, last] : orbit[from]) {
        if (last > i) continue;
        MultiPoly y = engine.normal_form(apply_D(i, x));
        if (y.is_zero()) continue;
        const auto coords = engine.a0_coordinates(y, k);
        inside = inside && es.contains(coords);
        images.insert(coords);
        orbit[k].emplace_back(std::move(y), i);
      }
    }
    deg.cross_check_ok = inside && images.rank() == es.rank();
    for (const auto& m : deg.representatives) orbit[k].emplace_back(MultiPoly::monomial(alpha, m), 0);

    dims[k] = static_cast<std::int64_t>(deg.h_dim);
    out.total += deg.h_dim;
    out.degrees.push_back(std::move(deg));
  }
  out.character = QSeries::exact(0, dims);
  return out;
}

bool is_nontrivial(const MultiPoly& x, int k) {
  return !exact_subspace(k).contains(normal_form_engine().a0_coordinates(x, k));
}

// ---------------------------------------------------------------------------

int ratio_degree(const RatioTags& tags) {
  int d = 0;
  for (const auto& [a, b] : tags) d += 3 * a + 4 * b;
  return d - 7;
}

std::string ratio_label(const RatioTags& tags) {
  auto mono = [](std::pair<int, int> t) {
    std::string s;
    auto part = [&](const char* v, int e) {
      if (e == 0) return;
      s += v;
      if (e > 1) s += "^" + std::to_string(e);
    };
    part("z", t.first);
    part("w", t.second);
    return s.empty() ? std::string("1") : s;
  };
  return "(" + mono(tags[0]) + "," + mono(tags[1]) + "," + mono(tags[2]) + ")/(1,z,w)";
}

std::vector<TableEntry> printed_representative_table() {
  using P = std::pair<int, int>;
  const P one{0, 0}, z{1, 0}, w{0, 1}, z2{2, 0}, zw{1, 1}, z2w{2, 1};
  struct Row {
    const char* label;
    int degree;
    std::optional<RatioTags> tags;
  };
  const std::vector<Row> rows = {
      {"h_0", 0, std::nullopt},          {"h_2", 2, RatioTags{one, z, z2}},   {"h_3", 3, RatioTags{one, w, z2}},
      {"h_4", 4, RatioTags{one, w, zw}}, {"h_6,1", 6, RatioTags{z, w, z2}},   {"h_6,2", 6, RatioTags{one, z2, zw}},
      {"h_7", 7, RatioTags{z, w, zw}},   {"h_9", 9, RatioTags{z, z2, zw}},    {"h_10,1", 10, RatioTags{z, z2, zw}},
      {"h_10,2", 10, RatioTags{w, z2, z2w}}, {"h_12", 12, RatioTags{z, z2, z2w}}, {"h_13", 13, RatioTags{w, z2, z2w}},
      {"h_14", 14, RatioTags{w, zw, z2w}}, {"h_16", 16, RatioTags{z2, zw, z2w}},
  };
  std::vector<TableEntry> out;
  for (const auto& r : rows) {
    TableEntry e;
    e.label = r.label;
    e.stated_degree = r.degree;
    e.tags = r.tags;
    e.numerator_degree = r.tags ? ratio_degree(*r.tags) : 0;
    if (e.numerator_degree != e.stated_degree) {
      e.flagged = true;
      e.note = "printed expression has degree " + std::to_string(e.numerator_degree);
      for (const auto& other : rows) {
        if (other.tags && other.degree == e.numerator_degree && *other.tags == *r.tags) {
          e.note += ", identical to " + std::string(other.label);
        }
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool RepresentativeReport::ok() const {
  for (const auto& e : entries) {
    if (!e.flagged && !(e.polynomial && e.degree_ok && e.nontrivial)) return false;
  }
  return degrees_not_spanned.empty() && degree10_replacement.has_value();
}

namespace {

std::optional<MultiPoly> ratio_poly(const RatioTags& tags) { return divisor_ratio(tags).to_polynomial(); }

// Coordinates of x modulo the exact subspace, on the columns that are not
// pivots of its reduced echelon basis.
std::vector<Rational> class_coordinates(const MultiPoly& x, int k) {
  const ExactSubspace& es = exact_subspace(k);
  const auto r = es.span.reduce(normal_form_engine().a0_coordinates(x, k));
  std::vector<bool> pivot(r.size(), false);
  for (std::size_t p : es.span.pivots()) pivot[p] = true;
  std::vector<Rational> out;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (!pivot[j]) out.push_back(r[j]);
  }
  return out;
}

std::size_t class_rank(const std::vector<MultiPoly>& xs, int k) {
  EchelonBasis grow = exact_subspace(k).span;
  std::size_t added = 0;
  for (const auto& x : xs) {
    if (grow.insert(normal_form_engine().a0_coordinates(x, k))) ++added;
  }
  return added;
}

MultiPoly h8_value() {
  const RatFunc r = divisor_ratio(RatioTags{{{0, 0}, {1, 0}, {0, 2}}});
  const auto p = r.to_polynomial();
  if (!p) throw std::logic_error("(1,z,w^2)/(1,z,w) is not a polynomial");
  return *p * *p;
}

}  // namespace

RepresentativeReport verify_representative_table(const CohomologyClassSet& classes) {
  RepresentativeReport rep;
  rep.entries = printed_representative_table();
  const auto alpha = l_alphabet();
  std::map<int, std::vector<MultiPoly>> by_degree;

  for (auto& e : rep.entries) {
    std::optional<MultiPoly> value;
    if (!e.tags) {
      value = MultiPoly::constant(alpha, 1);
    } else {
      value = ratio_poly(*e.tags);
    }
    e.polynomial = value.has_value();
    if (!value || value->is_zero()) continue;
    e.degree_ok = value->is_homogeneous() && value->homogeneous_degree() == e.stated_degree;
    const int actual = value->homogeneous_degree();
    if (actual <= static_cast<int>(classes.degrees.size()) - 1) e.nontrivial = is_nontrivial(*value, actual);
    if (!e.flagged && e.degree_ok) by_degree[e.stated_degree].push_back(*value);
  }

  // Degree 10: complement of the exact subspace and simple-denominator forms.
  const int k10 = 10;
  if (static_cast<int>(classes.degrees.size()) > k10) {
    rep.degree10_complement = classes.degrees[k10].representatives;
    std::vector<std::pair<int, int>> monos;
    for (int b = 0; 4 * b <= 17; ++b) {
      for (int a = 0; 3 * a + 4 * b <= 17; ++a) monos.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < monos.size(); ++i) {
      for (std::size_t j = i + 1; j < monos.size(); ++j) {
        for (std::size_t l = j + 1; l < monos.size(); ++l) {
          RatioTags tags{monos[i], monos[j], monos[l]};
          if (ratio_degree(tags) != k10) continue;
          const auto p = ratio_poly(tags);
          if (!p || p->is_zero() || !is_nontrivial(*p, k10)) continue;
          rep.degree10_candidates.push_back({tags, class_coordinates(*p, k10)});
        }
      }
    }
    const std::size_t need = classes.degrees[k10].h_dim;
    for (std::size_t a = 0; a < rep.degree10_candidates.size() && !rep.degree10_replacement; ++a) {
      for (std::size_t b = a + 1; b < rep.degree10_candidates.size(); ++b) {
        const auto pa = *ratio_poly(rep.degree10_candidates[a].tags);
        const auto pb = *ratio_poly(rep.degree10_candidates[b].tags);
        if (class_rank({pa, pb}, k10) == need) {
          rep.degree10_replacement = std::array<RatioTags, 2>{rep.degree10_candidates[a].tags,
                                                              rep.degree10_candidates[b].tags};
          by_degree[k10] = {pa, pb};
          break;
        }
      }
    }
  }
  if (static_cast<int>(classes.degrees.size()) > 8) by_degree[8].push_back(h8_value());

  for (const auto& d : classes.degrees) {
    if (d.h_dim == 0) continue;
    auto it = by_degree.find(d.degree);
    const std::size_t got = it == by_degree.end() ? 0 : class_rank(it->second, d.degree);
    if (got != d.h_dim) rep.degrees_not_spanned.push_back(d.degree);
  }
  return rep;
}

// ---------------------------------------------------------------------------

bool Degree8Report::ok() const {
  for (bool b : candidate_in_span) {
    if (!b) return false;
  }
  for (int i = 0; i < 5; ++i) {
    if (!five_polynomial[i] || !five_exact[i]) return false;
  }
  for (bool b : monomial_nontrivial) {
    if (!b) return false;
  }
  return h8_polynomial && h8_nontrivial;
}

Degree8Report degree8_analysis() {
  const int k = 8;
  const auto& engine = normal_form_engine();
  const auto alpha = l_alphabet();
  Degree8Report rep;
  using P = std::pair<int, int>;
  const P one{0, 0}, z{1, 0}, w{0, 1}, z2{2, 0}, z3{3, 0}, z4{4, 0}, zw{1, 1}, w2{0, 2}, zw2{1, 2};
  rep.five = {RatioTags{one, z, z4}, RatioTags{one, z2, z3}, RatioTags{one, zw, w2}, RatioTags{one, zw2, w},
              RatioTags{z, w, w2}};

  const std::size_t n = enumerate_a0(k).size();
  // Rows (v_i, e_i) so that reducing (c, 0) exposes the combination.
  EchelonBasis five_span(n + 5);
  for (int i = 0; i < 5; ++i) {
    const auto p = ratio_poly(rep.five[i]);
    rep.five_polynomial[i] = p.has_value();
    if (!p) continue;
    auto coords = engine.a0_coordinates(*p, k);
    rep.five_exact[i] = exact_subspace(k).contains(coords);
    coords.resize(n + 5, Rational(0));
    coords[n + i] = 1;
    five_span.insert(coords);
  }

  const auto& s = sep();
  const MultiPoly l13 = *ratio_poly(RatioTags{one, z, z2});
  const auto p1 = power_sum_w(1), p2 = power_sum_w(2);
  if (!p1 || !p2) throw std::logic_error("power sums of w are not polynomial");
  rep.candidate_names = {"sigma1(z)^2 (1,z,z^2)/(1,z,w)", "sigma2(z) (1,z,z^2)/(1,z,w)", "sigma1(w)^2", "sigma2(w)"};
  const std::array<MultiPoly, 4> candidates = {s.B(1) * s.B(1) * l13, s.B(2) * l13, *p1 * *p1,
                                               (*p1 * *p1 - *p2) * Rational(1, 2)};
  for (int c = 0; c < 4; ++c) {
    auto coords = engine.a0_coordinates(candidates[c], k);
    coords.resize(n + 5, Rational(0));
    const auto r = five_span.reduce(coords);
    bool in = true;
    for (std::size_t j = 0; j < n; ++j) in = in && r[j] == 0;
    rep.candidate_in_span[c] = in;
    if (in) {
      for (int i = 0; i < 5; ++i) rep.candidate_combination[c].push_back(-r[n + i]);
    }
  }

  const RatFunc base = divisor_ratio(RatioTags{one, z, w2});
  rep.h8_polynomial = base.to_polynomial().has_value();
  if (rep.h8_polynomial) rep.h8_nontrivial = is_nontrivial(h8_value(), k);

  auto gen = [&](const char* name) { return MultiPoly::generator(alpha, name); };
  rep.monomial_names = {"l31_0*l32", "l23*l32", "l22^2", "l11*l22"};
  const std::array<MultiPoly, 4> monos = {gen("l31_0") * gen("l32"), gen("l23") * gen("l32"), gen("l22") * gen("l22"),
                                          gen("l11") * gen("l22")};
  for (int i = 0; i < 4; ++i) rep.monomial_nontrivial[i] = is_nontrivial(monos[i], k);
  return rep;
}

}  // namespace sepvar
