#include "sepvar/spectral.hpp"

#include <json.hpp>

#include "sepvar/linalg.hpp"

namespace sepvar {

const std::array<std::string, kNumT>& t_names() {
  static const std::array<std::string, kNumT> names = {"t1_1", "t1_2", "t2_1", "t2_2", "t2_3",
                                                       "t3_1", "t3_2", "t3_3", "t3_4"};
  return names;
}

const std::array<std::pair<int, int>, kNumT>& t_positions() {
  static const std::array<std::pair<int, int>, kNumT> pos = {
      std::pair{1, 2}, std::pair{0, 2}, std::pair{2, 1}, std::pair{1, 1}, std::pair{0, 1},
      std::pair{3, 0}, std::pair{2, 0}, std::pair{1, 0}, std::pair{0, 0}};
  return pos;
}

std::size_t t_index(const std::string& name) {
  for (std::size_t i = 0; i < kNumT; ++i) {
    if (t_names()[i] == name) return i;
  }
  throw std::out_of_range("unknown spectral coefficient '" + name + "'");
}

AlphabetPtr t_alphabet() {
  static const AlphabetPtr a = make_alphabet({t_names().begin(), t_names().end()}, {1, 4, 2, 5, 8, 3, 6, 9, 12});
  return a;
}

SpectralPolynomial build_R(const LaxMatrix& lax) {
  const MultiPoly zero = lax.at(0, 0).zero();
  const AlphabetPtr alpha = zero.alphabet();
  std::vector<BiPoly<MultiPoly>> e(9, BiPoly<MultiPoly>(zero));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto& entry = lax.at(i, j);
      for (int p = 0; p <= entry.degree(); ++p) e[3 * i + j].add_term(p, 0, entry.coeff(p));
      if (i == j) e[3 * i + j].add_term(0, 1, MultiPoly::constant(alpha, 1));
    }
  }
  auto m = [&](int r, int c) -> const BiPoly<MultiPoly>& { return e[3 * r + c]; };
  BiPoly<MultiPoly> det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                          m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                          m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));

  SpectralPolynomial sp{det, std::vector<MultiPoly>(kNumT, zero)};
  const MultiPoly one = MultiPoly::constant(alpha, 1);
  if (det.coeff(0, 3) != one) throw TemplateMismatch("coefficient of w^3 is not 1");
  if (det.coeff(4, 0) != one) throw TemplateMismatch("coefficient of z^4 is not 1");
  for (const auto& [key, c] : det.terms()) {
    bool known = key == std::pair{0, 3} || key == std::pair{4, 0};
    for (std::size_t i = 0; i < kNumT; ++i) {
      if (key == t_positions()[i]) {
        sp.t[i] = c;
        known = true;
      }
    }
    if (!known) {
      throw TemplateMismatch("unexpected monomial z^" + std::to_string(key.first) + " w^" + std::to_string(key.second));
    }
  }
  return sp;
}

const SpectralPolynomial& spectral() {
  static const SpectralPolynomial sp = build_R(lax_l());
  return sp;
}

std::vector<std::pair<std::size_t, std::size_t>> involution_failures(const BracketTable& table) {
  const auto& t = spectral().t;
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t a = 0; a < kNumT; ++a) {
    for (std::size_t b = a + 1; b < kNumT; ++b) {
      if (!bracket(t[a], t[b], table).is_zero()) bad.emplace_back(a, b);
    }
  }
  return bad;
}

CasimirPartition classify_casimirs(const BracketTable& table) {
  CasimirPartition part;
  for (std::size_t a = 0; a < kNumT; ++a) {
    (verify_center(table, spectral().t[a]) ? part.central : part.non_central).push_back(a);
  }
  return part;
}

std::size_t jacobian_rank(std::uint64_t seed) {
  const auto alpha = l_alphabet();
  RationalSampler rng(seed);
  std::vector<Rational> pt(alpha->size());
  for (auto& v : pt) v = rng.next();
  QMatrix jac(kNumT, alpha->size());
  for (std::size_t a = 0; a < kNumT; ++a) {
    for (std::size_t g = 0; g < alpha->size(); ++g) jac.at(a, g) = spectral().t[a].derivative(g).evaluate(pt);
  }
  return exact_rank(jac);
}

BiPoly<MultiPoly> q_holomorphic(int i) {
  const MultiPoly one = MultiPoly::constant(t_alphabet(), 1);
  BiPoly<MultiPoly> q{MultiPoly(t_alphabet())};
  static const std::pair<int, int> pos[] = {{0, 0}, {1, 0}, {0, 1}};
  if (i < 1 || i > 3) throw std::out_of_range("q_holomorphic index");
  q.add_term(pos[i - 1].first, pos[i - 1].second, one);
  return q;
}

BiPoly<MultiPoly> q_dual(int i) {
  const auto alpha = t_alphabet();
  auto t = [&](const char* name) { return MultiPoly::generator(alpha, name); };
  const MultiPoly one = MultiPoly::constant(alpha, 1);
  BiPoly<MultiPoly> q{MultiPoly(alpha)};
  // Upper index is the power label: t_k^(p) is named tk_p.
  switch (i) {
    case 1:
      q.add_term(2, 1, one * Rational(5));
      q.add_term(3, 0, t("t1_1") * Rational(3));
      q.add_term(0, 2, -t("t2_1"));
      q.add_term(1, 1, t("t3_1") * Rational(3) - t("t1_1") * t("t2_1"));
      q.add_term(2, 0, t("t1_1") * t("t3_1") * Rational(2) + t("t1_2") * Rational(2) - t("t2_1") * t("t2_1"));
      break;
    case 2:
      q.add_term(1, 1, one * Rational(2));
      q.add_term(2, 0, t("t1_1"));
      q.add_term(0, 0, -t("t3_1") * t("t1_2") + t("t2_1") * t("t2_2") - t("t1_1") * t("t3_2"));
      break;
    case 3:
      q.add_term(2, 0, one);
      q.add_term(0, 0, t("t2_1") * t("t1_2") - t("t3_2"));
      break;
    default:
      throw std::out_of_range("q_dual index");
  }
  return q;
}

BiPoly<MultiPoly> q_dual_in_l(int i) {
  const auto& t = spectral().t;
  BiPoly<MultiPoly> out{MultiPoly(l_alphabet())};
  const BiPoly<MultiPoly> q = q_dual(i);
  for (const auto& [key, c] : q.terms()) out.add_term(key.first, key.second, c.compose(t));
  return out;
}

// ---------------------------------------------------------------------------

std::string CurveInstance::to_json() const {
  nlohmann::json j;
  for (std::size_t i = 0; i < kNumT; ++i) j["t"][t_names()[i]] = sepvar::to_string(t[i]);
  j["seed"] = seed;
  return j.dump(2);
}

CurveInstance CurveInstance::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("curve instance: ") + e.what());
  }
  if (!j.is_object() || !j.contains("t") || !j["t"].is_object()) {
    throw std::invalid_argument("curve instance: missing \"t\" object");
  }
  CurveInstance c;
  for (std::size_t i = 0; i < kNumT; ++i) {
    const auto& name = t_names()[i];
    if (!j["t"].contains(name) || !j["t"][name].is_string()) {
      throw std::invalid_argument("curve instance: missing " + name);
    }
    c.t[i] = parse_rational(j["t"][name].get<std::string>());
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw std::invalid_argument("curve instance: bad seed");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  return c;
}

BiPoly<Rational> curve_polynomial(const CurveInstance& curve) {
  BiPoly<Rational> r(Rational(0));
  r.add_term(0, 3, 1);
  r.add_term(4, 0, 1);
  for (std::size_t i = 0; i < kNumT; ++i) r.add_term(t_positions()[i].first, t_positions()[i].second, curve.t[i]);
  return r;
}

UniPoly<Rational> discriminant(const CurveInstance& curve) {
  const BiPoly<Rational> r = curve_polynomial(curve);
  auto coeff_of_w = [&](int k) {
    std::vector<Rational> c(5, Rational(0));
    for (const auto& [key, v] : r.terms()) {
      if (key.second == k) c[key.first] = v;
    }
    return UniPoly<Rational>(c, Rational(0));
  };
  const auto a = coeff_of_w(2), b = coeff_of_w(1), c = coeff_of_w(0);
  // Monic cubic w^3 + a w^2 + b w + c.
  return (a * b * c).scaled(18) - (a.pow(3) * c).scaled(4) + a * a * b * b - b.pow(3).scaled(4) - (c * c).scaled(27);
}

bool is_generic(const CurveInstance& curve) {
  const auto d = discriminant(curve);
  return d.degree() == 8 && is_square_free(d);
}

CurveInstance random_curve(std::uint64_t seed) {
  RationalSampler rng(seed);
  for (;;) {
    CurveInstance c;
    c.seed = seed;
    for (auto& v : c.t) v = rng.next();
    if (is_generic(c)) return c;
  }
}

}  // namespace sepvar
