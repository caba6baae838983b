#include "mwgap/rational.hpp"

#include <stdexcept>

namespace mwgap {

std::string to_string(const Rational& value) {
  Rational canon(value);
  canon.canonicalize();
  return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed rational component: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace mwgap
