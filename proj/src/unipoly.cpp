#include "sepvar/unipoly.hpp"

namespace sepvar {

std::pair<UniPoly<Rational>, UniPoly<Rational>> divmod(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  Rational inv = 1 / b.leading();
  UniPoly<Rational> monic = b.scaled(inv);
  auto [q, r] = a.divmod_monic(monic);
  return {q.scaled(inv), r};
}

UniPoly<Rational> gcd(UniPoly<Rational> a, UniPoly<Rational> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1 / a.leading()));
}

bool is_square_free(const UniPoly<Rational>& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace sepvar
