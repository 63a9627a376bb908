#include <doctest.h>

#include "sepvar/curve.hpp"

using namespace sepvar;

namespace {

LaurentSeries random_series(RationalSampler& rng, int val, int len, int prec) {
  std::vector<Rational> c;
  c.push_back(rng.next_nonzero());
  for (int i = 1; i < len; ++i) c.push_back(rng.next());
  return LaurentSeries(val, std::move(c), prec);
}

}  // namespace

TEST_CASE("laurent series basics") {
  const LaurentSeries a(-2, {Rational(1), Rational(0), Rational(3)});  // t^-2 + 3
  CHECK(a.valuation() == -2);
  CHECK(a.is_exact());
  CHECK(a.coefficient(0) == 3);
  CHECK(a.coefficient(-1) == 0);
  CHECK(a.residue() == 0);
  CHECK(a.derivative() == LaurentSeries::monomial(-3, -2));
  const LaurentSeries t = a.truncated(0);
  CHECK(t.precision() == 0);
  CHECK_THROWS_AS(t.coefficient(0), std::out_of_range);
  CHECK_THROWS_AS(LaurentSeries::monomial(-1).primitive(), std::domain_error);
}

TEST_CASE("inverse and product") {
  RationalSampler rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const int v = static_cast<int>(rng.next_raw() % 7) - 3;
    const LaurentSeries x = random_series(rng, v, 12, v + 12);
    const LaurentSeries prod = x * x.inverse();
    CHECK(prod.precision() == 12);
    for (int k = 0; k < 12; ++k) CHECK(prod.coefficient(k) == (k == 0 ? 1 : 0));
  }
}

TEST_CASE("primitive and derivative round trip") {
  RationalSampler rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentSeries x = random_series(rng, -5, 15, 10);
    x = x - LaurentSeries::monomial(-1, x.residue());  // drop the residue
    const Rational c = rng.next();
    const LaurentSeries p = x.primitive(c);
    CHECK(p.coefficient(0) == c);
    CHECK(p.derivative() == x.truncated(p.precision() - 1));
  }
}

TEST_CASE("branch at infinity of the t = 0 curve is exact") {
  const PuiseuxSeries b = puiseux_expand(zero_curve(), 20);
  CHECK(b.c[0] == 1);
  for (int k = 1; k <= 20; ++k) CHECK(b.c[k] == 0);
  // w^3 + z^4 vanishes identically on z = t^-3, w = -t^-4
  BiPoly<Rational> r(Rational(0));
  r.add_term(0, 3, 1);
  r.add_term(4, 0, 1);
  CHECK(evaluate_on_branch(r, b).is_zero());
}

TEST_CASE("branch expansion satisfies the curve to the stated order") {
  for (std::uint64_t seed : {1, 2}) {
    const CurveInstance c = random_curve(seed);
    const PuiseuxSeries b = puiseux_expand(c, 30);
    CHECK(b.c[1] == c.t[t_index("t1_1")] / 3);
    const LaurentSeries r = evaluate_on_branch(curve_polynomial(c), b);
    // R has valuation -12 on the branch; W known through t^30 leaves O(t^19)
    for (int k = -12; k < 19; ++k) CHECK(r.coefficient(k) == 0);
  }
}

TEST_CASE("residue pairing is the canonical symplectic form") {
  const PairingMatrix m = pairing_matrix(random_curve(3), 40);
  CHECK(is_canonical(m));
  PairingMatrix bad = m;
  bad[0][3] = 2;
  CHECK_FALSE(is_canonical(bad));
  const PairingResult r = stable_pairing(random_curve(3), 40);
  CHECK(r.canonical);
  CHECK(r.constant_independent);
  for (const auto& res : r.residues) CHECK(res == 0);
  CHECK(r.leading_exponent == std::array<int, 6>{4, 1, 0, -6, -3, -2});
}

TEST_CASE("pairing is antisymmetric on the zero curve too") {
  const PairingMatrix m = pairing_matrix(zero_curve(), 40);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(m[a][b] == -m[b][a]);
  CHECK(is_canonical(m));
}

TEST_CASE("low truncation is refused rather than guessed") {
  CHECK_THROWS(pairing_matrix(random_curve(3), 8));
  CHECK(is_canonical(pairing_matrix(random_curve(3), 10)));
}

TEST_CASE("intersection form decomposition") {
  const IntersectionCheck z = intersection_decomposition_check(zero_curve());
  CHECK(z.identity_holds);
  CHECK(z.antisymmetric);
  const IntersectionCheck g = intersection_decomposition_check(random_curve(11));
  CHECK(g.identity_holds);
  CHECK(g.antisymmetric);
  CHECK(g.orientation == z.orientation);
  CHECK(g.orientation != 0);
}
