#include <doctest.h>

#include "helpers.hpp"
#include "sepvar/linalg.hpp"
#include "sepvar/multipoly.hpp"
#include "sepvar/qseries.hpp"
#include "sepvar/ratfunc.hpp"
#include "sepvar/rational.hpp"
#include "sepvar/unipoly.hpp"

using namespace sepvar;
using sepvar::testing::random_poly;

namespace {

AlphabetPtr xyz() { return make_alphabet({"x", "y", "z"}, {1, 2, 3}); }

}  // namespace

TEST_CASE("rational strings round trip") {
  for (const char* s : {"0", "1", "-1", "3/7", "-22/9", "123456789012345678901234567891/7"}) {
    CHECK(to_string(parse_rational(s)) == s);
  }
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("sampler is reproducible") {
  RationalSampler a(5), b(5), c(6);
  std::vector<Rational> va, vb, vc;
  for (int i = 0; i < 20; ++i) {
    va.push_back(a.next());
    vb.push_back(b.next());
    vc.push_back(c.next());
  }
  CHECK(va == vb);
  CHECK(va != vc);
  RationalSampler n(9);
  for (int i = 0; i < 50; ++i) CHECK(n.next_nonzero() != 0);
}

TEST_CASE("polynomial ring axioms on random elements") {
  const auto a = xyz();
  RationalSampler rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const MultiPoly f = random_poly(a, rng), g = random_poly(a, rng), h = random_poly(a, rng);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
    // Leibniz for each partial derivative
    for (std::size_t i = 0; i < 3; ++i) CHECK((f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i));
    if (!g.is_zero()) {
      const auto q = (f * g).divide_exact(g);
      REQUIRE(q.has_value());
      CHECK(*q == f);
    }
  }
}

TEST_CASE("weights and homogeneity") {
  const auto a = xyz();
  const MultiPoly x = MultiPoly::generator(a, "x"), y = MultiPoly::generator(a, "y"), z = MultiPoly::generator(a, "z");
  const MultiPoly p = x * y + z;
  CHECK(p.is_homogeneous());
  CHECK(p.homogeneous_degree() == 3);
  CHECK_FALSE((p + x).is_homogeneous());
  CHECK(p.pow(3).homogeneous_degree() == 9);
  CHECK(MultiPoly::constant(a, 0).is_zero());
  CHECK_FALSE((x + y).divide_exact(x * y).has_value());
}

TEST_CASE("evaluation is a ring homomorphism") {
  const auto a = xyz();
  RationalSampler rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly f = random_poly(a, rng), g = random_poly(a, rng);
    const std::vector<Rational> pt = {rng.next(), rng.next(), rng.next()};
    CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
  }
}

TEST_CASE("rational functions") {
  const auto a = xyz();
  const MultiPoly x = MultiPoly::generator(a, "x"), y = MultiPoly::generator(a, "y");
  const RatFunc f(x * x - y * y, x + y);
  REQUIRE(f.to_polynomial().has_value());
  CHECK(*f.to_polynomial() == x - y);
  const RatFunc g(MultiPoly::constant(a, 1), x);
  CHECK_FALSE(g.to_polynomial().has_value());
  CHECK(g * RatFunc(x) == MultiPoly::constant(a, 1));
  CHECK(g - g == MultiPoly(a));
  // d/dx (1/x) = -1/x^2
  CHECK(g.derivative(0) == RatFunc(MultiPoly::constant(a, -1), x * x));
  CHECK_THROWS(RatFunc(x, MultiPoly(a)));
}

TEST_CASE("univariate division and gcd") {
  const UniPoly<Rational> p({Rational(-1), 0, 1}, Rational(0));  // x^2 - 1
  const UniPoly<Rational> q({Rational(1), 1}, Rational(0));      // x + 1
  const auto [quo, rem] = p.divmod_monic(q);
  CHECK(rem.is_zero());
  CHECK(quo == UniPoly<Rational>({Rational(-1), 1}, Rational(0)));
  CHECK(gcd(p, q).degree() == 1);
  CHECK(is_square_free(p));
  CHECK_FALSE(is_square_free(q * q));
}

TEST_CASE("exact and modular rank agree") {
  RationalSampler rng(17, 9);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t r = 5, c = 7;
    // rank-3 product of random 5x3 and 3x7 matrices
    QMatrix u(r, 3), v(3, c), m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < 3; ++k) u.at(i, k) = rng.next();
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < c; ++j) v.at(k, j) = rng.next();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        for (std::size_t k = 0; k < 3; ++k) m.at(i, j) += u.at(i, k) * v.at(k, j);
    const std::size_t exact = exact_rank(m);
    CHECK(exact <= 3);
    CHECK(exact == exact_rank(m.transposed()));
    for (auto p : default_primes()) CHECK(modular_rank(m, p) == exact);
    CHECK(column_space_contains(m, m.column(2)));
  }
}

TEST_CASE("echelon basis membership") {
  EchelonBasis b(3);
  CHECK(b.insert(std::vector<Rational>{1, 2, 3}));
  CHECK(b.insert(std::vector<Rational>{0, 1, 1}));
  CHECK_FALSE(b.insert(std::vector<Rational>{2, 5, 7}));
  CHECK(b.contains(std::vector<Rational>{1, 3, 4}));
  CHECK_FALSE(b.contains(std::vector<Rational>{0, 0, 1}));
  CHECK(b.rank() == 2);
}

TEST_CASE("q-series arithmetic") {
  const QSeries s = QSeries::parse("-q^-8 + q^-7 - 2q^-5 + 2 - q");
  CHECK(s.to_string() == "-q^-8 + q^-7 - 2q^-5 + 2 - q");
  CHECK(s.term_count() == 5);
  CHECK(s.at_one() == -1);
  CHECK(QSeries::parse(s.to_string()) == s);

  // 1/(1-q) * (1-q) = 1 to any order
  const QSeries inv = QSeries::one().divided_by(QSeries::one_minus_q_pow(1), 12);
  CHECK(inv.coefficient(11) == 1);
  CHECK((inv * QSeries::one_minus_q_pow(1)).truncated(12) == QSeries::one().truncated(12));

  const auto exact = (QSeries::one_minus_q_pow(2) * QSeries::one_minus_q_pow(3)).divide_exact(QSeries::one_minus_q_pow(3));
  REQUIRE(exact.has_value());
  CHECK(*exact == QSeries::one_minus_q_pow(2));
  CHECK_FALSE(QSeries::one().divide_exact(QSeries::one_minus_q_pow(1)).has_value());

  // Lambda^k of a k-dimensional space is one-dimensional, of degree the sum.
  const QSeries v = QSeries::parse("q^-1 + q^2 + q^4");
  CHECK(v.exterior_power(0) == QSeries::one());
  CHECK(v.exterior_power(3) == QSeries::monomial(5));
  CHECK(v.exterior_power(2) == QSeries::parse("q + q^3 + q^6"));
  CHECK(v.exterior_power(4).is_zero());
  CHECK_THROWS(QSeries::parse("q^^2"));
}

TEST_CASE("inverse product counts weighted monomials") {
  // 1/((1-q)(1-q^2)): partitions into parts 1 and 2, floor(k/2)+1.
  const QSeries s = QSeries::inverse_product({1, 2}, 30);
  for (int k = 0; k < 30; ++k) CHECK(s.coefficient(k) == k / 2 + 1);
}
