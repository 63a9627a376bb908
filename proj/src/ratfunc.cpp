#include "sepvar/ratfunc.hpp"

#include <stdexcept>

namespace sepvar {

RatFunc::RatFunc(MultiPoly numerator)
    : num_(std::move(numerator)), den_(MultiPoly::constant(num_.alphabet(), 1)) {}

RatFunc::RatFunc(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.alphabet()->names() != den_.alphabet()->names()) {
    throw AlphabetMismatch("RatFunc: numerator and denominator over different alphabets");
  }
  // Constant denominators are folded in.
  if (den_.is_constant()) {
    Rational c = den_.constant_term();
    num_ *= Rational(1 / c);
    den_ = MultiPoly::constant(num_.alphabet(), 1);
  }
}

std::optional<MultiPoly> RatFunc::to_polynomial() const { return num_.divide_exact(den_); }

RatFunc RatFunc::reduce_power_of(std::size_t gen) const {
  auto min_power = [gen](const MultiPoly& p) {
    int m = 255;
    for (const auto& t : p.terms()) m = std::min<int>(m, t.mono.exps[gen]);
    return p.is_zero() ? 255 : m;
  };
  int k = std::min(min_power(num_), min_power(den_));
  if (k == 0 || num_.is_zero()) return *this;
  std::vector<int> e(alphabet()->size(), 0);
  e[gen] = k;
  MultiPoly g = MultiPoly::monomial(alphabet(), make_monomial(*alphabet(), e));
  return RatFunc(*num_.divide_exact(g), *den_.divide_exact(g));
}

RatFunc RatFunc::derivative(std::size_t index) const {
  return RatFunc(num_.derivative(index) * den_ - num_ * den_.derivative(index), den_ * den_);
}

Rational RatFunc::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw std::domain_error("RatFunc: denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace sepvar
