#include <doctest.h>

#include "helpers.hpp"
#include "sepvar/cohomology.hpp"
#include "sepvar/quotient.hpp"
#include "sepvar/spectral.hpp"

using namespace sepvar;
using sepvar::testing::random_poly;

TEST_CASE("vector fields") {
  const auto& f = vector_fields();
  CHECK(t_names()[f[0].hamiltonian] == "t2_2");
  CHECK(d_degree(1) == 1);
  CHECK(d_degree(2) == 2);
  CHECK(d_degree(3) == 5);
  CHECK(commutator_failures().empty());
  CHECK(annihilation_failures().empty());
}

TEST_CASE("derivations shift degree and obey Leibniz") {
  const auto l = l_alphabet();
  RationalSampler rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    const MultiPoly x = random_poly(l, rng, 3), y = random_poly(l, rng, 3);
    for (int i = 1; i <= 3; ++i) {
      CHECK(apply_D(i, x * y) == apply_D(i, x) * y + x * apply_D(i, y));
      CHECK(apply_D(i, apply_D(i % 3 + 1, x)) == apply_D(i % 3 + 1, apply_D(i, x)));
    }
  }
  const MultiPoly g = MultiPoly::generator(l, lgen::l22);
  CHECK(apply_D(3, g).homogeneous_degree() == l->degree(lgen::l22) + 5);
}

TEST_CASE("derivations descend to A/FA") {
  // NF(D x) = NF(D NF(x)) since D kills F and is a derivation
  const auto& nf = normal_form_engine();
  const auto l = l_alphabet();
  RationalSampler rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::size_t> all(l->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const int k = 3 + trial % 6;
    const auto monos = monomials_of_weight(*l, k, all);
    MultiPoly x(l);
    for (int j = 0; j < 3; ++j) x += MultiPoly::monomial(l, monos[rng.next_raw() % monos.size()], rng.next());
    for (int i = 1; i <= 3; ++i) CHECK(nf.normal_form(apply_D(i, x)) == nf.normal_form(apply_D(i, nf.normal_form(x))));
  }
}

TEST_CASE("euler characteristics") {
  const CharacterLedger led = euler_characteristics();
  CHECK(led.chi_q == printed_chi_q());
  CHECK(led.chi_1 == -6);
  CHECK(led.chi_q.at_one() == -6);
  CHECK_FALSE(led.printed_quotient_is_polynomial);
  for (int k = 0; k <= 3; ++k) CHECK(led.wedge_v[k] == printed_wedge_v(k));
  CHECK(led.alternating_residual == QSeries::monomial(0, -1));
  CHECK(led.top_character == printed_top_character());
  CHECK(led.top_character.at_one() == 15);
}

TEST_CASE("top cohomology dimensions") {
  const CohomologyClassSet cs = top_cohomology(16);
  const std::vector<std::size_t> expected = {1, 0, 1, 1, 1, 0, 2, 1, 1, 1, 2, 0, 1, 1, 1, 0, 1};
  REQUIRE(cs.degrees.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CAPTURE(k);
    CHECK(cs.degrees[k].h_dim == expected[k]);
    CHECK(cs.degrees[k].a0_dim == cs.degrees[k].rank + cs.degrees[k].h_dim);
    CHECK(cs.degrees[k].representatives.size() == expected[k]);
    CHECK(cs.degrees[k].cross_check_ok);
  }
  CHECK(cs.total == 15);
  CHECK(cs.character == printed_top_character());
}

TEST_CASE("exact forms are trivial, representatives are not") {
  const auto l = l_alphabet();
  const MultiPoly x = MultiPoly::generator(l, lgen::l13) * MultiPoly::generator(l, lgen::l22);
  CHECK_FALSE(is_nontrivial(apply_D(1, x), l->degree(lgen::l13) + l->degree(lgen::l22) + 1));
  const CohomologyClassSet cs = top_cohomology(16);
  for (const auto& d : cs.degrees) {
    for (const auto& m : d.representatives) CHECK(is_nontrivial(MultiPoly::monomial(l, m), d.degree));
  }
  CHECK(is_nontrivial(MultiPoly::constant(l, 1), 0));
}

TEST_CASE("ratio degrees") {
  // (1,z,w) itself has degree 0
  CHECK(ratio_degree({{{0, 0}, {1, 0}, {0, 1}}}) == 0);
  CHECK(ratio_degree({{{1, 0}, {2, 0}, {1, 1}}}) == 9);
}

TEST_CASE("representative table") {
  const RepresentativeReport rep = verify_representative_table(top_cohomology(16));
  CHECK(rep.ok());
  int flagged = 0;
  for (const auto& e : rep.entries) {
    CAPTURE(e.label);
    if (e.flagged) {
      ++flagged;
      continue;
    }
    CHECK(e.polynomial);
    CHECK(e.degree_ok);
    CHECK(e.nontrivial);
  }
  CHECK(flagged == 2);
  CHECK(rep.degree10_replacement.has_value());
  CHECK(rep.degree10_candidates.size() >= 2);
}

TEST_CASE("degree eight") {
  const Degree8Report d = degree8_analysis();
  CHECK(d.ok());
  for (int i = 0; i < 4; ++i) CHECK(d.candidate_in_span[i]);
  for (int i = 0; i < 5; ++i) CHECK(d.five_exact[i]);
  CHECK(d.h8_nontrivial);
  for (int i = 0; i < 4; ++i) CHECK(d.monomial_nontrivial[i]);
}
