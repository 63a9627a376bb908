#ifndef SEPVAR_TEST_HELPERS_HPP
#define SEPVAR_TEST_HELPERS_HPP

#include "sepvar/multipoly.hpp"
#include "sepvar/rational.hpp"

namespace sepvar::testing {

// Small random polynomial: `terms` monomials with exponents below 3.
inline MultiPoly random_poly(const AlphabetPtr& a, RationalSampler& rng, int terms = 4) {
  MultiPoly p(a);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(a->size(), 0);
    for (int k = 0; k < 2; ++k) e[rng.next_raw() % a->size()] += 1;
    p += MultiPoly::monomial(a, make_monomial(*a, e), rng.next());
  }
  return p;
}

}  // namespace sepvar::testing

#endif
