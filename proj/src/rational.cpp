#include "shiftbribery/rational.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace shiftbribery {

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string to_string(const ExtRational& x) {
  if (x.is_infinite()) return "inf";
  return to_string(x.value());
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Exact decimal: digits after the dot scale the denominator.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad rational literal '" + text + "'");
    Integer num(digits);
    Integer den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(num, den);
  }
  return Rational(Integer(text));
}

ExtRational parse_ext_rational(const std::string& text) {
  if (text == "inf") return ExtRational::infinity();
  return ExtRational(parse_rational(text));
}

long long isqrt(long long k) {
  if (k < 0) throw std::domain_error("isqrt of negative value");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(k)));
  while (r > 0 && r * r > k) --r;
  while ((r + 1) * (r + 1) <= k) ++r;
  return r;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& x) {
  return os << to_string(x);
}

}  // namespace shiftbribery
