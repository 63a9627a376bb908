#include "sepvar/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sepvar {

GeneratorAlphabet::GeneratorAlphabet(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) {
    throw std::invalid_argument("alphabet: name and degree lists differ in length");
  }
  if (names_.size() > kMaxGenerators) {
    throw std::invalid_argument("alphabet: too many generators");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw std::invalid_argument("alphabet: duplicate generator " + n);
  }
  for (int d : degrees_) {
    if (d < 0) throw std::invalid_argument("alphabet: negative degree");
  }
}

std::optional<std::size_t> GeneratorAlphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t GeneratorAlphabet::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::out_of_range("unknown generator '" + std::string(name) + "'");
  return *i;
}

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<const GeneratorAlphabet>(std::move(names), std::move(degrees));
}

// ---------------------------------------------------------------------------
// Monomials

int Monomial::total_exponent() const {
  int s = 0;
  for (auto e : exps) s += e;
  return s;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxGenerators; ++i) {
    if (exps[i] < other.exps[i]) return false;
  }
  return true;
}

Monomial make_monomial(const GeneratorAlphabet& alphabet, std::span<const int> exponents) {
  if (exponents.size() > alphabet.size()) {
    throw std::invalid_argument("monomial: more exponents than generators");
  }
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw std::out_of_range("monomial: exponent out of range");
    m.exps[i] = static_cast<std::uint8_t>(exponents[i]);
    m.weight += exponents[i] * alphabet.degree(i);
  }
  return m;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxGenerators; ++i) {
    unsigned e = unsigned(a.exps[i]) + unsigned(b.exps[i]);
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exps[i] = static_cast<std::uint8_t>(e);
  }
  m.weight = a.weight + b.weight;
  return m;
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxGenerators; ++i) {
    if (a.exps[i] < b.exps[i]) throw std::domain_error("monomial quotient not exact");
    m.exps[i] = static_cast<std::uint8_t>(a.exps[i] - b.exps[i]);
  }
  m.weight = a.weight - b.weight;
  return m;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.exps > b.exps;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.exps) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string monomial_to_string(const GeneratorAlphabet& alphabet, const Monomial& mono) {
  std::string out;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (mono.exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += alphabet.name(i);
    if (mono.exps[i] > 1) out += '^' + std::to_string(mono.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_weight(const GeneratorAlphabet& alphabet, int weight,
                                          std::span<const std::size_t> generators,
                                          const std::map<std::size_t, int>& caps) {
  std::vector<Monomial> out;
  if (weight < 0) return out;
  std::vector<int> exps(alphabet.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
    if (pos == generators.size()) {
      if (remaining == 0) out.push_back(make_monomial(alphabet, exps));
      return;
    }
    std::size_t g = generators[pos];
    int d = alphabet.degree(g);
    int cap = 255;
    if (auto it = caps.find(g); it != caps.end()) cap = it->second;
    if (d == 0) {
      // Zero-weight generators would make the slice infinite.
      if (cap == 255) throw std::invalid_argument("monomials_of_weight: uncapped weight-0 generator");
    }
    for (int e = 0; e <= cap && e * d <= remaining; ++e) {
      exps[g] = e;
      rec(pos + 1, remaining - e * d);
      if (d == 0 && e == cap) break;
    }
    exps[g] = 0;
  };
  rec(0, weight);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_greater(b, a); });
  return out;
}

// ---------------------------------------------------------------------------
// MultiPoly

namespace {

void sort_terms(std::vector<MultiPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const MultiPoly::Term& a, const MultiPoly::Term& b) { return grlex_greater(a.mono, b.mono); });
}

}  // namespace

MultiPoly::MultiPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("MultiPoly: null alphabet");
}

MultiPoly MultiPoly::constant(AlphabetPtr alphabet, const Rational& value) {
  MultiPoly p(std::move(alphabet));
  if (value != 0) p.terms_.push_back({Monomial{}, value});
  return p;
}

MultiPoly MultiPoly::generator(AlphabetPtr alphabet, std::size_t index) {
  if (index >= alphabet->size()) throw std::out_of_range("generator index");
  std::vector<int> e(alphabet->size(), 0);
  e[index] = 1;
  Monomial m = make_monomial(*alphabet, e);
  return monomial(std::move(alphabet), m, 1);
}

MultiPoly MultiPoly::generator(AlphabetPtr alphabet, std::string_view name) {
  std::size_t i = alphabet->index(name);
  return generator(std::move(alphabet), i);
}

MultiPoly MultiPoly::monomial(AlphabetPtr alphabet, const Monomial& mono, const Rational& coeff) {
  MultiPoly p(std::move(alphabet));
  if (coeff != 0) p.terms_.push_back({mono, coeff});
  return p;
}

MultiPoly MultiPoly::from_terms(AlphabetPtr alphabet, std::vector<Term> terms) {
  MultiPoly p(std::move(alphabet));
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) acc[t.mono] += t.coeff;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({m, c});
  }
  sort_terms(p.terms_);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total_exponent() == 0);
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.total_exponent() == 0) return terms_.back().coeff;
  // Zero-weight generators can place the constant elsewhere; search.
  for (const auto& t : terms_) {
    if (t.mono.total_exponent() == 0) return t.coeff;
  }
  return 0;
}

Rational MultiPoly::coefficient(const Monomial& mono) const {
  for (const auto& t : terms_) {
    if (t.mono == mono) return t.coeff;
  }
  return 0;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().mono.weight == terms_.back().mono.weight;
}

int MultiPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.front().mono.weight;
}

int MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  if (!is_homogeneous()) throw std::domain_error("polynomial is not homogeneous: " + to_string());
  return terms_.front().mono.weight;
}

MultiPoly MultiPoly::homogeneous_component(int weight) const {
  MultiPoly p(alphabet_);
  for (const auto& t : terms_) {
    if (t.mono.weight == weight) p.terms_.push_back(t);
  }
  return p;
}

std::vector<int> MultiPoly::weights() const {
  std::vector<int> w;
  for (const auto& t : terms_) {
    if (w.empty() || w.back() != t.mono.weight) w.push_back(t.mono.weight);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

int MultiPoly::degree_in(std::size_t index) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exps[index]);
  return d;
}

bool MultiPoly::involves(std::size_t index) const {
  for (const auto& t : terms_) {
    if (t.mono.exps[index] != 0) return true;
  }
  return false;
}

MultiPoly MultiPoly::coefficient_of_power(std::size_t index, int power) const {
  MultiPoly p(alphabet_);
  int d = alphabet_->degree(index);
  for (const auto& t : terms_) {
    if (t.mono.exps[index] == power) {
      Monomial m = t.mono;
      m.exps[index] = 0;
      m.weight -= power * d;
      p.terms_.push_back({m, t.coeff});
    }
  }
  sort_terms(p.terms_);
  return p;
}

std::vector<MultiPoly> MultiPoly::as_univariate(std::size_t index) const {
  int d = degree_in(index);
  std::vector<std::vector<Term>> buckets(d + 1);
  int w = alphabet_->degree(index);
  for (const auto& t : terms_) {
    int e = t.mono.exps[index];
    Monomial m = t.mono;
    m.exps[index] = 0;
    m.weight -= e * w;
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(d + 1);
  for (auto& b : buckets) {
    MultiPoly p(alphabet_);
    p.terms_ = std::move(b);
    sort_terms(p.terms_);
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t index) const {
  MultiPoly p(alphabet_);
  int w = alphabet_->degree(index);
  for (const auto& t : terms_) {
    int e = t.mono.exps[index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exps[index] = static_cast<std::uint8_t>(e - 1);
    m.weight -= w;
    p.terms_.push_back({m, t.coeff * e});
  }
  // Order is preserved within a weight class; re-sort across classes.
  sort_terms(p.terms_);
  return p;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != alphabet_->size()) throw std::invalid_argument("evaluate: point dimension");
  std::vector<std::vector<Rational>> powers(alphabet_->size());
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < alphabet_->size(); ++i) {
      int e = t.mono.exps[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, MultiPoly>& values, AlphabetPtr target) const {
  for (const auto& [i, v] : values) {
    if (v.alphabet_ != target && v.alphabet_->names() != target->names()) {
      throw AlphabetMismatch("substitute: value over a different alphabet");
    }
  }
  // Generators kept as-is are mapped by name into the target alphabet.
  std::vector<std::optional<std::size_t>> keep(alphabet_->size());
  for (std::size_t i = 0; i < alphabet_->size(); ++i) {
    if (values.count(i)) continue;
    keep[i] = target->find(alphabet_->name(i));
  }
  std::vector<std::vector<MultiPoly>> powers(alphabet_->size());
  auto power_of = [&](std::size_t i, int e) -> const MultiPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MultiPoly::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * values.at(i));
    return pw[e];
  };
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : terms_) {
    std::vector<int> kept(target->size(), 0);
    MultiPoly factor = MultiPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < alphabet_->size(); ++i) {
      int e = t.mono.exps[i];
      if (e == 0) continue;
      if (values.count(i)) {
        factor = factor * power_of(i, e);
      } else {
        if (!keep[i]) throw AlphabetMismatch("substitute: generator " + alphabet_->name(i) + " missing from target");
        kept[*keep[i]] += e;
      }
    }
    Monomial km = make_monomial(*target, kept);
    for (const auto& ft : factor.terms_) acc[monomial_product(ft.mono, km)] += ft.coeff;
  }
  MultiPoly out(target);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({m, c});
  }
  sort_terms(out.terms_);
  return out;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> values) const {
  if (values.size() != alphabet_->size()) throw std::invalid_argument("compose: wrong number of values");
  if (values.empty()) return *this;
  std::map<std::size_t, MultiPoly> m;
  for (std::size_t i = 0; i < values.size(); ++i) m.emplace(i, values[i]);
  return substitute(m, values[0].alphabet_);
}

MultiPoly MultiPoly::partial_evaluate(const std::map<std::size_t, Rational>& values) const {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Rational c = t.coeff;
    for (const auto& [i, v] : values) {
      int e = m.exps[i];
      if (e == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), v.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), v.get_den_mpz_t(), e);
      c *= p;
      m.exps[i] = 0;
      m.weight -= e * alphabet_->degree(i);
    }
    acc[m] += c;
  }
  MultiPoly out(alphabet_);
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({m, c});
  }
  sort_terms(out.terms_);
  return out;
}

MultiPoly MultiPoly::rename_into(AlphabetPtr target) const {
  std::vector<std::size_t> map(alphabet_->size());
  for (std::size_t i = 0; i < alphabet_->size(); ++i) {
    bool used = involves(i);
    auto j = target->find(alphabet_->name(i));
    if (!j) {
      if (used) throw AlphabetMismatch("rename_into: generator " + alphabet_->name(i) + " missing");
      continue;
    }
    map[i] = *j;
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e(target->size(), 0);
    for (std::size_t i = 0; i < alphabet_->size(); ++i) {
      if (t.mono.exps[i]) e[map[i]] = t.mono.exps[i];
    }
    terms.push_back({make_monomial(*target, e), t.coeff});
  }
  return from_terms(std::move(target), std::move(terms));
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(alphabet_, 1);
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& mono, const Rational& coeff) const {
  MultiPoly p(alphabet_);
  if (coeff == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves graded-lex order.
  for (const auto& t : terms_) p.terms_.push_back({monomial_product(t.mono, mono), t.coeff * coeff});
  return p;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  check_alphabet(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  MultiPoly quotient(alphabet_);
  MultiPoly rest = *this;
  const Term& lead = divisor.terms_.front();
  std::vector<Term> qterms;
  while (!rest.is_zero()) {
    const Term& rt = rest.terms_.front();
    if (!rt.mono.divisible_by(lead.mono)) return std::nullopt;
    Monomial qm = monomial_quotient(rt.mono, lead.mono);
    Rational qc = rt.coeff / lead.coeff;
    qterms.push_back({qm, qc});
    rest -= divisor.mul_monomial(qm, qc);
  }
  return from_terms(alphabet_, std::move(qterms));
}

void MultiPoly::check_alphabet(const MultiPoly& other) const {
  if (alphabet_ != other.alphabet_ && alphabet_->names() != other.alphabet_->names()) {
    throw AlphabetMismatch("polynomials over different alphabets");
  }
}

MultiPoly MultiPoly::combine(const MultiPoly& other, bool subtract) const {
  check_alphabet(other);
  MultiPoly out(alphabet_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && grlex_greater(terms_[i].mono, other.terms_[j].mono))) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || grlex_greater(other.terms_[j].mono, terms_[i].mono)) {
      out.terms_.push_back({other.terms_[j].mono, subtract ? Rational(-other.terms_[j].coeff) : other.terms_[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(terms_[i].coeff - other.terms_[j].coeff)
                            : Rational(terms_[i].coeff + other.terms_[j].coeff);
      if (c != 0) out.terms_.push_back({terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) { return *this = combine(other, false); }
MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this = combine(other, true); }
MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_alphabet(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.alphabet_);
  if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
      acc[monomial_product(x.mono, y.mono)] += prod;
    }
  }
  MultiPoly out(a.alphabet_);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  }
  sort_terms(out.terms_);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.check_alphabet(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit_mono = t.mono.total_exponent() == 0;
    if (unit_mono) {
      os << sepvar::to_string(c);
    } else {
      if (c != 1) os << sepvar::to_string(c) << '*';
      os << monomial_to_string(*alphabet_, t.mono);
    }
  }
  return os.str();
}

}  // namespace sepvar
