#include "sepvar/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "sepvar/cohomology.hpp"
#include "sepvar/poisson.hpp"
#include "sepvar/quotient.hpp"
#include "sepvar/sepvars.hpp"
#include "sepvar/spectral.hpp"

namespace sepvar {

using nlohmann::json;

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    default:
      return "skip";
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"brackets",   "spectral",   "quotient", "sepvars",
                                                 "curve",      "characters", "cohomology", "all"};
  return names;
}

bool is_known_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

bool Report::ok() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status != Status::fail; });
}

const CheckRecord* Report::find(const std::string& id) const {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

namespace {

Status verdict(bool ok) { return ok ? Status::pass : Status::fail; }

std::string str(const Rational& q) { return to_string(q); }

json series_json(const QSeries& s) { return s.to_string(); }

std::vector<std::uint64_t> seeds_from(std::uint64_t seed, int n) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < n; ++i) out.push_back(seed + static_cast<std::uint64_t>(i));
  return out;
}

json curve_json(const CurveInstance& c) {
  json t = json::object();
  for (std::size_t i = 0; i < kNumT; ++i) t[t_names()[i]] = str(c.t[i]);
  return json{{"seed", c.seed}, {"t", t}};
}

struct Task {
  std::string id;
  std::string suite;
  std::string anchor;
  std::function<void(const SuiteConfig&, CheckRecord&)> body;
};

// ---------------------------------------------------------------------------

void brackets_rmatrix(const SuiteConfig&, CheckRecord& r) {
  const bool l = rmatrix_l().residue_proportional_to_p12();
  const bool m = rmatrix_m().residue_proportional_to_p12();
  r.payload = {{"l_simple_pole_residue_p12", l}, {"m_simple_pole_residue_p12", m}};
  r.status = verdict(l && m);
}

void jacobi_record(const BracketTable& table, CheckRecord& r) {
  const JacobiReport rep = verify_jacobi(table);
  json bad = json::array();
  for (const auto& f : rep.failures) {
    bad.push_back({table.alphabet()->name(f[0]), table.alphabet()->name(f[1]), table.alphabet()->name(f[2])});
  }
  r.payload = {{"triples", rep.triples_checked}, {"failures", bad}, {"nonzero_entries", table.nonzero_count()}};
  r.status = verdict(rep.ok());
}

void brackets_l_jacobi(const SuiteConfig&, CheckRecord& r) { jacobi_record(l_bracket_table(), r); }
void brackets_m_jacobi(const SuiteConfig&, CheckRecord& r) { jacobi_record(m_bracket_table(), r); }

void brackets_negative_control(const SuiteConfig&, CheckRecord& r) {
  const BracketTable& t = l_bracket_table();
  const auto alpha = t.alphabet();
  // Perturb {l11, l22} by a constant; Jacobi must notice.
  const BracketTable bad = t.with_entry(lgen::l11, lgen::l22, t.at(lgen::l11, lgen::l22) + MultiPoly::constant(alpha, 1));
  const JacobiReport rep = verify_jacobi(bad);
  r.payload = {{"corrupted_entry", "{l11,l22} + 1"}, {"failing_triples", rep.failures.size()}};
  r.status = verdict(!rep.ok());
}

void brackets_grading(const SuiteConfig&, CheckRecord& r) {
  const auto v = grading_violations(l_bracket_table(), -4);
  json bad = json::array();
  for (const auto& [a, b] : v) bad.push_back({l_alphabet()->name(a), l_alphabet()->name(b)});
  r.payload = {{"shift", -4}, {"violations", bad}};
  r.status = verdict(v.empty());
}

void brackets_center(const SuiteConfig&, CheckRecord& r) {
  const auto m = m_alphabet();
  auto g = [&](const char* n) { return MultiPoly::generator(m, n); };
  const MultiPoly c = g("m12_0") * g("m23_0") * g("m31_0");
  const bool central = verify_center(m_bracket_table(), c);
  const bool one = verify_center(m_bracket_table(), MultiPoly::constant(m, 1));
  const bool control = !verify_center(m_bracket_table(), g("m11_1"));
  r.payload = {{"element", c.to_string()}, {"central", central}, {"constant_central", one}, {"m11_1_not_central", control}};
  r.status = verdict(central && one && control);
}

void brackets_reduction(const SuiteConfig& cfg, CheckRecord& r) {
  const auto seeds = seeds_from(cfg.seed, 5);
  const ReductionReport rep = verify_reduction(seeds, m_bracket_table());
  json pts = json::array();
  for (const auto& p : rep.points) {
    pts.push_back({{"seed", p.seed},
                   {"resamples", p.resamples},
                   {"lax_shape", p.lax_shape_ok},
                   {"identity", p.identity_ok},
                   {"entries", p.entries_checked}});
  }
  r.payload = {{"points", pts}, {"degenerate_control", rep.degenerate_ok}, {"antisymmetry_control", rep.antisymmetry_ok}};
  r.status = verdict(rep.ok() && rep.points.size() >= 5);
}

// ---------------------------------------------------------------------------

void spectral_template(const SuiteConfig&, CheckRecord& r) {
  const auto& s = spectral();  // throws on a template mismatch
  json t = json::object();
  for (std::size_t i = 0; i < kNumT; ++i) t[t_names()[i]] = s.t[i].to_string();
  // l = 0 leaves w^3 + z^4.
  std::map<std::size_t, Rational> all_zero;
  for (std::size_t g = 0; g < l_alphabet()->size(); ++g) all_zero.emplace(g, Rational(0));
  bool trivial = true;
  for (const auto& [key, c] : s.r.terms()) {
    const Rational v = c.partial_evaluate(all_zero).constant_term();
    const bool expected = key == std::pair{0, 3} || key == std::pair{4, 0};
    trivial = trivial && (expected ? v == 1 : v == 0);
  }
  r.payload = {{"t", t}, {"l_zero_gives_w3_plus_z4", trivial}};
  r.status = verdict(trivial);
}

void spectral_involution(const SuiteConfig&, CheckRecord& r) {
  const auto bad = involution_failures(l_bracket_table());
  json b = json::array();
  for (const auto& [x, y] : bad) b.push_back({t_names()[x], t_names()[y]});
  r.payload = {{"pairs", kNumT * (kNumT - 1) / 2}, {"failures", b}};
  r.status = verdict(bad.empty());
}

void spectral_casimirs(const SuiteConfig&, CheckRecord& r) {
  const auto part = classify_casimirs(l_bracket_table());
  std::vector<std::string> nc, c;
  for (auto i : part.non_central) nc.push_back(t_names()[i]);
  for (auto i : part.central) c.push_back(t_names()[i]);
  r.payload = {{"non_central", nc}, {"central", c}};
  r.status = verdict(nc == std::vector<std::string>{"t2_2", "t3_2", "t3_3"});
}

void spectral_degrees(const SuiteConfig&, CheckRecord& r) {
  std::vector<int> d;
  json per = json::object();
  bool homogeneous = true;
  for (std::size_t i = 0; i < kNumT; ++i) {
    const MultiPoly& t = spectral().t[i];
    homogeneous = homogeneous && t.is_homogeneous();
    const int deg = t.homogeneous_degree();
    per[t_names()[i]] = deg;
    d.push_back(deg);
    homogeneous = homogeneous && deg == t_alphabet()->degree(i);
  }
  std::sort(d.begin(), d.end());
  r.payload = {{"degrees", per}, {"multiset", d}};
  r.status = verdict(homogeneous && d == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 9, 12});
}

void spectral_jacobian(const SuiteConfig& cfg, CheckRecord& r) {
  const std::size_t rank = jacobian_rank(cfg.seed);
  r.payload = {{"seed", cfg.seed}, {"rank", rank}};
  r.status = verdict(rank == 9);
}

// ---------------------------------------------------------------------------

constexpr int kQuotientDegree = 20;

void quotient_elimination(const SuiteConfig&, CheckRecord& r) {
  const auto& e = normal_form_engine().elimination();
  json a = json::object();
  for (const auto& [t, g] : e.assignment) a[t_names()[t]] = l_alphabet()->name(g);
  std::vector<int> deg;
  for (const auto& rel : e.relations) deg.push_back(rel.homogeneous_degree());
  std::sort(deg.begin(), deg.end());
  r.payload = {{"assignment", a}, {"relation_degrees", deg}};
  r.status = verdict(e.assignment.size() == 6 && deg == std::vector<int>{8, 9, 12});
}

void quotient_counts(const SuiteConfig&, CheckRecord& r) {
  const QSeries closed = character_a0_closed_form(kQuotientDegree);
  std::vector<std::size_t> counts;
  std::vector<std::int64_t> expected;
  for (int k = 0; k <= kQuotientDegree; ++k) {
    counts.push_back(enumerate_a0(k).size());
    expected.push_back(closed.coefficient(k));
  }
  bool ok = true;
  for (int k = 0; k <= kQuotientDegree; ++k) ok = ok && static_cast<std::int64_t>(counts[k]) == expected[k];
  r.payload = {{"a0_counts", counts}, {"closed_form_coefficients", expected}};
  r.status = verdict(ok);
}

void quotient_dimension_identity(const SuiteConfig&, CheckRecord& r) {
  json rows = json::array();
  bool ok = true;
  for (int k = 0; k <= kQuotientDegree; ++k) {
    const DimensionIdentity d = normal_form_engine().dimension_identity(k);
    const bool row_ok = d.a0_is_basis && d.dim_a == d.dim_fa + d.a0_count;
    ok = ok && row_ok;
    rows.push_back({{"k", k}, {"dim_a", d.dim_a}, {"dim_fa", d.dim_fa}, {"a0", d.a0_count}, {"a0_is_basis", d.a0_is_basis}});
  }
  r.payload = {{"degrees", rows}};
  r.status = verdict(ok);
}

void quotient_full_ideal(const SuiteConfig&, CheckRecord& r) {
  // Independent of the elimination: rank of all products m * t in A.
  const std::uint64_t p = default_primes()[0];
  json rows = json::array();
  bool ok = true;
  for (int k = 0; k <= kQuotientDegree; ++k) {
    const std::size_t rank = ideal_slice_rank_mod_p(k, p);
    const std::size_t fa = normal_form_engine().dimension_identity(k).dim_fa;
    ok = ok && rank == fa;
    rows.push_back({{"k", k}, {"rank_mod_p", rank}, {"dim_fa", fa}});
  }
  r.payload = {{"prime", std::to_string(p)}, {"degrees", rows}};
  r.status = verdict(ok);
}

void quotient_character(const SuiteConfig& cfg, CheckRecord& r) {
  const QSeries series = character_a0_series(cfg.qseries_order);
  const QSeries closed = character_a0_closed_form(cfg.qseries_order);
  r.payload = {{"order", cfg.qseries_order}, {"series", series_json(series)}, {"closed_form", series_json(closed)}};
  r.status = verdict(series == closed);
}

// ---------------------------------------------------------------------------

void sepvars_b(const SuiteConfig&, CheckRecord& r) {
  const SepPolynomials s = build_sep();  // throws on mismatch with the printed B
  r.payload = {{"B1", s.B(1).to_string()}, {"B2", s.B(2).to_string()}, {"B3", s.B(3).to_string()}};
  r.status = Status::pass;
}

json pair_list(const std::vector<std::pair<int, int>>& v) {
  json a = json::array();
  for (const auto& [x, y] : v) a.push_back({x, y});
  return a;
}

void sepvars_b_involution(const SuiteConfig&, CheckRecord& r) {
  const auto bad = b_involution_failures(l_bracket_table());
  r.payload = {{"failures", pair_list(bad)}};
  r.status = verdict(bad.empty());
}

void sepvars_ab(const SuiteConfig&, CheckRecord& r) {
  const auto bad = ab_identity_failures(l_bracket_table());
  r.payload = {{"failures", pair_list(bad)}};
  r.status = verdict(bad.empty());
}

void sepvars_a_involution(const SuiteConfig&, CheckRecord& r) {
  const auto bad = a_involution_failures(l_bracket_table());
  r.payload = {{"failures", pair_list(bad)}};
  r.status = verdict(bad.empty());
}

void sepvars_divisor(const SuiteConfig&, CheckRecord& r) {
  json rows = json::array();
  bool ok = true;
  for (const auto& c : verify_divisor_equations()) {
    ok = ok && c.vanishes;
    rows.push_back({{"id", c.id},
                    {"vanishes", c.vanishes},
                    {"l13_power", c.denominator_power},
                    {"matches_det_with_printed_y", c.matches_printed_y},
                    {"matches_det_with_corrected_y", c.matches_corrected_y}});
  }
  r.payload = {{"equations", rows}};
  r.status = verdict(ok && rows.size() == 4);
}

void sepvars_power_sums(const SuiteConfig&, CheckRecord& r) {
  json rows = json::object();
  bool ok = true;
  auto add = [&](const std::string& name, const std::optional<MultiPoly>& p, int degree) {
    const bool good = p && p->is_homogeneous() && (p->is_zero() || p->homogeneous_degree() == degree);
    ok = ok && good;
    rows[name] = {{"polynomial", p.has_value()}, {"degree", p && !p->is_zero() ? p->homogeneous_degree() : -1}};
  };
  add("sum_w", power_sum_w(1), 4);
  add("sum_w2", power_sum_w(2), 8);
  add("sum_w3", power_sum_w(3), 12);
  add("sum_zw", sum_zw(), 7);
  const auto printed = printed_sigma1_w();
  const bool sigma1 = printed && power_sum_w(1) && *printed == *power_sum_w(1);
  const bool sum_z = power_sum_z(1) == -sep().B(1);
  r.payload = {{"sums", rows}, {"sigma1_w_matches_display", sigma1}, {"sum_z_is_minus_B1", sum_z}};
  r.status = verdict(ok && sigma1 && sum_z);
}

void sepvars_reconstruction(const SuiteConfig&, CheckRecord& r) {
  json rows = json::array();
  bool ok = true;
  for (const auto& s : reconstruct_l()) {
    ok = ok && s.ok;
    rows.push_back({{"generator", s.generator}, {"source", s.source}, {"ok", s.ok}});
  }
  r.payload = {{"steps", rows}};
  r.status = verdict(ok);
}

void sepvars_wedge(const SuiteConfig& cfg, CheckRecord& r) {
  const bool ok = wedge_identities_hold(cfg.seed);
  r.payload = {{"seed", cfg.seed}, {"trials", 8}, {"holds", ok}};
  r.status = verdict(ok);
}

// ---------------------------------------------------------------------------

std::vector<CurveInstance> test_curves(const SuiteConfig& cfg) {
  std::vector<CurveInstance> out;
  for (auto s : seeds_from(cfg.seed, 3)) out.push_back(random_curve(s));
  return out;
}

void curve_puiseux(const SuiteConfig& cfg, CheckRecord& r) {
  const PuiseuxSeries z = puiseux_expand(zero_curve(), cfg.puiseux_order);
  bool trivial = true;
  for (int k = 1; k <= z.order; ++k) trivial = trivial && z.c[k] == 0;
  json rows = json::array();
  bool ok = trivial;
  for (const auto& c : test_curves(cfg)) {
    const PuiseuxSeries b = puiseux_expand(c, cfg.puiseux_order);  // certifies the defect
    const bool c1 = b.c[1] == c.t[t_index("t1_1")] / 3;
    ok = ok && c1;
    rows.push_back({{"curve", curve_json(c)}, {"c1", str(b.c[1])}, {"c1_is_t1_1_over_3", c1}});
  }
  r.payload = {{"order", cfg.puiseux_order}, {"zero_curve_exact", trivial}, {"curves", rows}};
  r.status = verdict(ok);
}

void curve_pairing(const SuiteConfig& cfg, CheckRecord& r) {
  json rows = json::array();
  bool ok = true;
  const auto names = differential_names();
  for (const auto& c : test_curves(cfg)) {
    const PairingResult p = stable_pairing(c, cfg.puiseux_order);
    json m = json::array();
    for (const auto& row : p.matrix) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(str(x));
      m.push_back(jr);
    }
    json res = json::object(), lead = json::object();
    for (int a = 0; a < 6; ++a) {
      res[names[a]] = str(p.residues[a]);
      lead[names[a]] = p.leading_exponent[a];
    }
    ok = ok && p.canonical && p.constant_independent;
    rows.push_back({{"curve", curve_json(c)},
                    {"order", p.order},
                    {"escalated", p.escalated},
                    {"residues", res},
                    {"leading_exponent", lead},
                    {"matrix", m},
                    {"canonical", p.canonical},
                    {"independent_of_integration_constant", p.constant_independent}});
  }
  r.payload = {{"basis", names}, {"requested_order", cfg.puiseux_order}, {"curves", rows}};
  r.payload["summary"] = std::to_string(rows.size()) + " curves, pairing " + (ok ? "canonical" : "NOT canonical");
  r.status = verdict(ok && rows.size() >= 3);
}

void curve_intersection(const SuiteConfig& cfg, CheckRecord& r) {
  json rows = json::array();
  bool ok = true;
  std::set<int> orientations;
  auto run = [&](const CurveInstance& c, const std::string& label) {
    const IntersectionCheck ic = intersection_decomposition_check(c);
    ok = ok && ic.identity_holds && ic.antisymmetric;
    orientations.insert(ic.orientation);
    rows.push_back({{"curve", label},
                    {"identity_holds", ic.identity_holds},
                    {"orientation", ic.orientation},
                    {"antisymmetric", ic.antisymmetric}});
  };
  run(zero_curve(), "all t = 0");
  for (const auto& c : test_curves(cfg)) run(c, "seed " + std::to_string(c.seed));
  r.payload = {{"curves", rows},
               {"orientation_note", "-1 means the right side is the coefficient of dz2^dz1 when d(f dz2) = df^dz2"}};
  // One orientation convention must serve every curve.
  r.status = verdict(ok && orientations.size() == 1);
}

// ---------------------------------------------------------------------------

void characters_chi(const SuiteConfig& cfg, CheckRecord& r) {
  const CharacterLedger led = euler_characteristics(cfg.qseries_order);
  const bool printed = led.chi_q == printed_chi_q();
  const bool series = led.chi_q_from_series == led.chi_q.truncated(cfg.qseries_order - 8);
  r.payload = {{"chi_q", series_json(led.chi_q)},
               {"terms", led.chi_q.term_count()},
               {"chi_1", led.chi_1},
               {"matches_display", printed},
               {"series_agrees", series},
               {"displayed_quotient_is_polynomial", led.printed_quotient_is_polynomial}};
  r.payload["summary"] = "chi_q = " + led.chi_q.to_string() + ", chi_1 = " + std::to_string(led.chi_1);
  r.status = verdict(printed && series && led.chi_1 == -6);
}

void characters_wedge(const SuiteConfig& cfg, CheckRecord& r) {
  const CharacterLedger led = euler_characteristics(cfg.qseries_order);
  json rows = json::object();
  bool ok = true;
  for (int k = 1; k <= 3; ++k) {
    const bool m = led.wedge_v[k] == printed_wedge_v(k);
    ok = ok && m;
    rows["lambda" + std::to_string(k)] = {{"value", series_json(led.wedge_v[k])}, {"matches_display", m}};
  }
  r.payload = {{"differential_degrees", led.differential_degrees}, {"exterior_powers", rows}};
  r.status = verdict(ok);
}

void characters_alternating(const SuiteConfig& cfg, CheckRecord& r) {
  const CharacterLedger led = euler_characteristics(cfg.qseries_order);
  const bool resid = led.alternating_residual == QSeries::monomial(0, -1);
  const bool top = led.top_character == printed_top_character();
  r.payload = {{"residual", series_json(led.alternating_residual)},
               {"top_character", series_json(led.top_character)},
               {"top_matches_display", top},
               {"classes", led.top_character.at_one()}};
  r.status = verdict(resid && top);
}

// ---------------------------------------------------------------------------

void cohomology_fields(const SuiteConfig&, CheckRecord& r) {
  const auto comm = commutator_failures();
  const auto ann = annihilation_failures();
  json f = json::array();
  for (const auto& v : vector_fields()) f.push_back({{"hamiltonian", t_names()[v.hamiltonian]}, {"degree", v.degree}});
  r.payload = {{"fields", f}, {"commutator_failures", comm.size()}, {"annihilation_failures", ann.size()}};
  r.status = verdict(comm.empty() && ann.empty());
}

json monomial_list(const std::vector<Monomial>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(monomial_to_string(*l_alphabet(), m));
  return a;
}

void cohomology_top(const SuiteConfig& cfg, CheckRecord& r) {
  const CohomologyClassSet cs = top_cohomology(cfg.max_degree);
  const QSeries expected = printed_top_character();
  json rows = json::array();
  bool ok = true;
  for (const auto& d : cs.degrees) {
    const std::int64_t want = d.degree <= expected.max_exponent() ? expected.coefficient(d.degree) : 0;
    ok = ok && d.cross_check_ok && static_cast<std::int64_t>(d.h_dim) == want;
    rows.push_back({{"k", d.degree},
                    {"a0_dim", d.a0_dim},
                    {"rank_Mk", d.rank},
                    {"h_dim", d.h_dim},
                    {"expected", want},
                    {"modes_agree", d.cross_check_ok},
                    {"representatives", monomial_list(d.representatives)}});
  }
  r.payload = {{"max_degree", cfg.max_degree}, {"degrees", rows}, {"total", cs.total}, {"character", series_json(cs.character)}};
  if (cfg.max_degree >= 16) ok = ok && cs.total == 15;
  std::string dims;
  for (const auto& d : cs.degrees) dims += (dims.empty() ? "" : ",") + std::to_string(d.h_dim);
  r.payload["summary"] = std::to_string(cs.total) + " classes, dimensions by degree " + dims;
  r.status = verdict(ok);
}

void cohomology_table(const SuiteConfig&, CheckRecord& r) {
  const CohomologyClassSet cs = top_cohomology(16);
  const RepresentativeReport rep = verify_representative_table(cs);
  json rows = json::array();
  bool flags_ok = true;
  for (const auto& e : rep.entries) {
    rows.push_back({{"label", e.label},
                    {"expression", e.tags ? ratio_label(*e.tags) : "1"},
                    {"stated_degree", e.stated_degree},
                    {"numerator_degree", e.tags ? e.numerator_degree : 0},
                    {"flagged", e.flagged},
                    {"note", e.note},
                    {"polynomial", e.polynomial},
                    {"degree_ok", e.degree_ok},
                    {"nontrivial", e.nontrivial}});
    if (e.label == "h_10,1" || e.label == "h_10,2") flags_ok = flags_ok && e.flagged;
  }
  json cands = json::array();
  for (const auto& c : rep.degree10_candidates) {
    json coords = json::array();
    for (const auto& x : c.class_coords) coords.push_back(str(x));
    cands.push_back({{"expression", ratio_label(c.tags)}, {"class_coordinates", coords}});
  }
  json repl = nullptr;
  if (rep.degree10_replacement) {
    repl = {ratio_label((*rep.degree10_replacement)[0]), ratio_label((*rep.degree10_replacement)[1])};
  }
  r.payload = {{"entries", rows},
               {"degrees_not_spanned", rep.degrees_not_spanned},
               {"degree10_complement", monomial_list(rep.degree10_complement)},
               {"degree10_candidates", cands},
               {"degree10_replacement", repl}};
  r.status = verdict(rep.ok() && flags_ok);
}

void cohomology_degree8(const SuiteConfig&, CheckRecord& r) {
  const Degree8Report d = degree8_analysis();
  json cands = json::array();
  for (int c = 0; c < 4; ++c) {
    json comb = json::array();
    for (const auto& x : d.candidate_combination[c]) comb.push_back(str(x));
    cands.push_back({{"name", d.candidate_names[c]}, {"in_span_mod_F", d.candidate_in_span[c]}, {"combination", comb}});
  }
  json five = json::array();
  for (int i = 0; i < 5; ++i) {
    five.push_back({{"expression", ratio_label(d.five[i])}, {"polynomial", d.five_polynomial[i]}, {"exact", d.five_exact[i]}});
  }
  json monos = json::array();
  for (int i = 0; i < 4; ++i) monos.push_back({{"monomial", d.monomial_names[i]}, {"nontrivial", d.monomial_nontrivial[i]}});
  r.payload = {{"candidates", cands},
               {"five", five},
               {"h8", {{"expression", "((1,z,w^2)/(1,z,w))^2"}, {"polynomial", d.h8_polynomial}, {"nontrivial", d.h8_nontrivial}}},
               {"quadratic_monomials", monos}};
  r.status = verdict(d.ok());
}

const std::vector<Task>& all_tasks() {
  static const std::vector<Task> tasks = {
      {"brackets.center", "brackets", "the m-algebra element m12_0 m23_0 m31_0 is central", brackets_center},
      {"brackets.l.grading", "brackets", "l-brackets are homogeneous of degree deg a + deg b - 4", brackets_grading},
      {"brackets.l.jacobi", "brackets", "Jacobi identity on all generator triples of the l-algebra", brackets_l_jacobi},
      {"brackets.m.jacobi", "brackets", "Jacobi identity on all generator triples of the m-algebra", brackets_m_jacobi},
      {"brackets.negative_control", "brackets", "a corrupted l-table entry breaks Jacobi", brackets_negative_control},
      {"brackets.reduction", "brackets", "l = s m s^-1 carries the m-brackets to the reduced r-matrix brackets", brackets_reduction},
      {"brackets.rmatrix", "brackets", "both r-matrices have a simple pole with residue proportional to P12", brackets_rmatrix},
      {"spectral.casimirs", "spectral", "exactly t2_2, t3_2, t3_3 are not central", spectral_casimirs},
      {"spectral.degrees", "spectral", "t degrees form the multiset {1,2,3,4,5,6,8,9,12}", spectral_degrees},
      {"spectral.involution", "spectral", "the nine spectral coefficients Poisson-commute", spectral_involution},
      {"spectral.jacobian", "spectral", "dt/dl has rank 9 at a random point", spectral_jacobian},
      {"spectral.template", "spectral", "det(w + l(z)) matches the curve template", spectral_template},
      {"quotient.character", "quotient", "ch(A) prod(1 - q^deg t) equals the closed form for ch(A0)", quotient_character},
      {"quotient.counts", "quotient", "#A0 basis in degree k equals the closed-form coefficient, k <= 20", quotient_counts},
      {"quotient.dimension_identity", "quotient", "dim A = dim FA + #A0 with A0 a basis of A/FA, k <= 20", quotient_dimension_identity},
      {"quotient.elimination", "quotient", "six t's eliminate six generators linearly", quotient_elimination},
      {"quotient.full_ideal", "quotient", "rank of the full ideal slice equals dim FA, k <= 20", quotient_full_ideal},
      {"sepvars.a_involution", "sepvars", "{A(z), A(z')} = 0 coefficient-wise", sepvars_a_involution},
      {"sepvars.ab_identity", "sepvars", "{A(z), B(z')} = (z B(z') - z' B(z)) / (z - z')", sepvars_ab},
      {"sepvars.b_coefficients", "sepvars", "B(z) coefficients match the displayed B1, B2, B3", sepvars_b},
      {"sepvars.b_involution", "sepvars", "{B_i, B_j} = 0", sepvars_b_involution},
      {"sepvars.divisor_equations", "sepvars", "the four divisor equations vanish modulo (B, w - A)", sepvars_divisor},
      {"sepvars.power_sums", "sepvars", "sum w, sum w^2, sum w^3, sum z w are polynomial", sepvars_power_sums},
      {"sepvars.reconstruction", "sepvars", "all twelve generators are recovered from divisor data", sepvars_reconstruction},
      {"sepvars.wedge", "sepvars", "dual-form expansions and wedge products hold at random points", sepvars_wedge},
      {"curve.intersection", "curve", "dC equals sum_j dsigma_j(P1) dsigma~_j(P2) - swap modulo both curves", curve_intersection},
      {"curve.pairing", "curve", "the residue pairing on the six differentials is canonical", curve_pairing},
      {"curve.puiseux", "curve", "branch expansion at the infinite point", curve_puiseux},
      {"characters.alternating", "characters", "chi_q - (1 - W1 + W2 - W3) = -1 and the top character", characters_alternating},
      {"characters.chi", "characters", "q-Euler characteristic and chi_1 = -6", characters_chi},
      {"characters.wedge", "characters", "exterior powers of V from the differential degrees", characters_wedge},
      {"cohomology.degree8", "cohomology", "degree-8 class has no simple-denominator representative", cohomology_degree8},
      {"cohomology.fields", "cohomology", "the three vector fields commute and kill every t", cohomology_fields},
      {"cohomology.table", "cohomology", "simple-denominator representatives of the top cohomology", cohomology_table},
      {"cohomology.top", "cohomology", "top cohomology dimensions from the ranks of M_k", cohomology_top},
  };
  return tasks;
}

bool selected(const std::string& suite, const Task& t) {
  if (suite == "all") return true;
  if (suite == "cohomology") return t.suite == "cohomology" || t.suite == "characters";
  return suite == t.suite;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::vector<std::string> check_ids(const std::string& suite) {
  std::vector<std::string> ids;
  for (const auto& t : all_tasks()) {
    if (selected(suite, t)) ids.push_back(t.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

Report run_suites(const SuiteConfig& config) {
  if (!is_known_suite(config.suite)) throw std::invalid_argument("unknown suite '" + config.suite + "'");
  std::vector<const Task*> tasks;
  for (const auto& t : all_tasks()) {
    if (selected(config.suite, t)) tasks.push_back(&t);
  }
  std::vector<CheckRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      CheckRecord& rec = records[i];
      rec.id = tasks[i]->id;
      rec.anchor = tasks[i]->anchor;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        tasks[i]->body(config, rec);
      } catch (const std::exception& e) {
        rec.status = Status::fail;
        rec.payload["error"] = e.what();
      }
      rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Report rep;
  rep.config = config;
  rep.records = std::move(records);
  std::sort(rep.records.begin(), rep.records.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  if (config.timestamp) rep.generated_at = utc_now();
  return rep;
}

std::string render_json(const Report& report) {
  json j;
  j["schema"] = kReportSchema;
  j["config"] = {{"suite", report.config.suite},
                 {"seed", report.config.seed},
                 {"qseries_order", report.config.qseries_order},
                 {"puiseux_order", report.config.puiseux_order},
                 {"max_degree", report.config.max_degree}};
  if (report.config.timestamp) j["generated_at"] = report.generated_at;
  j["ok"] = report.ok();
  json recs = json::array();
  for (const auto& r : report.records) {
    json x = {{"id", r.id}, {"anchor", r.anchor}, {"status", status_name(r.status)}, {"payload", r.payload}};
    if (report.config.timestamp) {
      std::ostringstream os;
      os.precision(3);
      os << std::fixed << r.elapsed_seconds;
      x["elapsed"] = os.str();
    }
    recs.push_back(std::move(x));
  }
  j["records"] = std::move(recs);
  return j.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  std::size_t passed = 0, failed = 0;
  for (const auto& r : report.records) {
    std::string tag = status_name(r.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    os << "[" << tag << "] " << r.id << "  " << r.anchor;
    if (report.config.timestamp) {
      os.precision(2);
      os << std::fixed << "  (" << r.elapsed_seconds << " s)";
    }
    os << "\n";
    if (r.payload.contains("summary")) os << "        " << r.payload["summary"].get<std::string>() << "\n";
    if (r.payload.contains("error")) os << "        error: " << r.payload["error"].get<std::string>() << "\n";
    (r.status == Status::fail ? failed : passed) += 1;
  }
  os << passed << " passed, " << failed << " failed\n";
  return os.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move report into place at " + path + ": " + ec.message());
  }
}

std::vector<std::string> diff_reports(const json& a, const json& b) {
  auto strip = [](json j) {
    j.erase("generated_at");
    if (j.contains("records")) {
      for (auto& r : j["records"]) r.erase("elapsed");
    }
    return j;
  };
  const json x = strip(a), y = strip(b);
  std::vector<std::string> out;
  for (const auto& op : json::diff(x, y)) {
    out.push_back(op.value("op", "?") + " " + op.value("path", ""));
  }
  return out;
}

unsigned threads_from_environment() {
  const char* v = std::getenv("SEPVAR_THREADS");
  if (!v) return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1) return 1;
  return static_cast<unsigned>(std::min(n, 256L));
}

}  // namespace sepvar
