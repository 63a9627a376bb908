#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sepvar/poisson.hpp"
#include "sepvar/spectral.hpp"

using namespace sepvar;
using sepvar::testing::random_poly;

TEST_CASE("alphabets") {
  const auto l = l_alphabet();
  REQUIRE(l->size() == 12);
  CHECK(l->name(lgen::l11) == "l11");
  CHECK(l->name(lgen::l33_0) == "l33_0");
  // deg l(z)_ij = 4 + i - j on the z^1 part, 3 less on the constant part
  CHECK(l->degree(lgen::l13) == 2);
  CHECK(l->degree(lgen::l31) == 6);
  CHECK(l->degree(lgen::l31_0) == 3);
  CHECK(m_alphabet()->size() > 0);
}

TEST_CASE("r-matrices have simple poles with permutation residue") {
  CHECK(rmatrix_l().residue_proportional_to_p12());
  CHECK(rmatrix_m().residue_proportional_to_p12());
}

TEST_CASE("bracket tables are antisymmetric and satisfy Jacobi") {
  for (const BracketTable* t : {&l_bracket_table(), &m_bracket_table()}) {
    for (std::size_t a = 0; a < t->size(); ++a) {
      CHECK(t->at(a, a).is_zero());
      for (std::size_t b = 0; b < t->size(); ++b) CHECK(t->at(a, b) == -t->at(b, a));
    }
    const JacobiReport rep = verify_jacobi(*t);
    CHECK(rep.ok());
    CHECK(rep.triples_checked >= t->size() * (t->size() - 1) * (t->size() - 2) / 6);
  }
}

TEST_CASE("a corrupted table fails Jacobi") {
  const BracketTable& t = l_bracket_table();
  const auto a = t.alphabet();
  const BracketTable bad = t.with_entry(lgen::l11, lgen::l22, t.at(lgen::l11, lgen::l22) + MultiPoly::constant(a, 1));
  CHECK(bad.at(lgen::l22, lgen::l11) == -bad.at(lgen::l11, lgen::l22));
  CHECK_FALSE(verify_jacobi(bad).ok());
}

TEST_CASE("l-brackets respect the grading") {
  CHECK(grading_violations(l_bracket_table(), -4).empty());
  CHECK_FALSE(grading_violations(l_bracket_table(), -3).empty());
}

TEST_CASE("bracket is a biderivation") {
  const auto l = l_alphabet();
  const BracketTable& t = l_bracket_table();
  RationalSampler rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiPoly f = random_poly(l, rng, 3), g = random_poly(l, rng, 3), h = random_poly(l, rng, 3);
    CHECK(bracket(f, g, t) == -bracket(g, f, t));
    CHECK(bracket(f, g * h, t) == bracket(f, g, t) * h + g * bracket(f, h, t));
    const MultiPoly jac = bracket(f, bracket(g, h, t), t) + bracket(g, bracket(h, f, t), t) + bracket(h, bracket(f, g, t), t);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("centre of the m-algebra") {
  const auto m = m_alphabet();
  auto g = [&](const char* n) { return MultiPoly::generator(m, n); };
  CHECK(verify_center(m_bracket_table(), g("m12_0") * g("m23_0") * g("m31_0")));
  CHECK(verify_center(m_bracket_table(), MultiPoly::constant(m, 7)));
  CHECK_FALSE(verify_center(m_bracket_table(), g("m11_1")));
}

TEST_CASE("reduction to the l-brackets at random points") {
  const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  const ReductionReport rep = verify_reduction(seeds, m_bracket_table());
  CHECK(rep.points.size() == 5);
  CHECK(rep.degenerate_ok);
  CHECK(rep.antisymmetry_ok);
  CHECK(rep.ok());
}

TEST_CASE("spectral coefficients") {
  const auto& s = spectral();
  REQUIRE(s.t.size() == kNumT);
  std::multiset<int> degrees;
  for (std::size_t i = 0; i < kNumT; ++i) {
    CHECK(s.t[i].is_homogeneous());
    degrees.insert(s.t[i].homogeneous_degree());
    // position z^a w^b in R carries weight 12 - 3a - 4b
    const auto [a, b] = t_positions()[i];
    CHECK(s.t[i].homogeneous_degree() == 12 - 3 * a - 4 * b);
  }
  CHECK(degrees == std::multiset<int>{1, 2, 3, 4, 5, 6, 8, 9, 12});
  CHECK(t_index("t3_3") == 7);
  CHECK_THROWS(t_index("t9_9"));
}

TEST_CASE("involution and casimirs") {
  CHECK(involution_failures(l_bracket_table()).empty());
  const CasimirPartition c = classify_casimirs(l_bracket_table());
  CHECK(c.central.size() == 6);
  REQUIRE(c.non_central.size() == 3);
  CHECK(t_names()[c.non_central[0]] == "t2_2");
  CHECK(t_names()[c.non_central[1]] == "t3_2");
  CHECK(t_names()[c.non_central[2]] == "t3_3");
}

TEST_CASE("jacobian rank is full at random points") {
  for (std::uint64_t seed : {1, 42, 1000}) CHECK(jacobian_rank(seed) == 9);
}

TEST_CASE("curve instances serialize exactly") {
  const CurveInstance c = random_curve(5);
  const CurveInstance back = CurveInstance::from_json(c.to_json());
  CHECK(back.seed == c.seed);
  CHECK(back.t == c.t);
  CHECK(is_generic(c));
  CHECK(c.to_json().find('.') == std::string::npos);  // no floats
  CHECK_THROWS(CurveInstance::from_json("{\"t\": {}}"));
}

TEST_CASE("random curves are reproducible") {
  CHECK(random_curve(8).t == random_curve(8).t);
  CHECK(random_curve(8).t != random_curve(9).t);
}
