#include "sepvar/rational.hpp"

#include <cctype>

namespace sepvar {

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace sepvar

namespace sepvar {

Rational RationalSampler::next() {
  const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
  long num = static_cast<long>(engine_() % span) - bound_;
  long den = static_cast<long>(engine_() % static_cast<std::uint64_t>(bound_)) + 1;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational RationalSampler::next_nonzero() {
  Rational r;
  do {
    r = next();
  } while (r == 0);
  return r;
}

}  // namespace sepvar
