#include "grlie/rational.hpp"

#include <stdexcept>

namespace grlie {

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  if (!valid_integer_text(num_part)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  mpz_class num(num_part);
  mpz_class den(1);
  if (slash != std::string::npos) {
    const std::string den_part = text.substr(slash + 1);
    if (!valid_integer_text(den_part)) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    den = mpz_class(den_part);
    if (sgn(den) == 0) {
      throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    }
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace grlie
