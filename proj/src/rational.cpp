#include "ulrich/rational.hpp"

#include <stdexcept>

namespace ulrich {

Integer binomial(const Integer& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (Integer(k) > n) return 0;
  // Multiplicative form; each partial product is divisible by i.
  Integer result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - Integer(k - i);
    result /= i;
  }
  return result;
}

Rational gen_binomial(const Rational& x, unsigned m) {
  Rational numerator = 1;
  Integer factorial = 1;
  for (unsigned i = 0; i < m; ++i) {
    numerator *= x - Integer(i);
    factorial *= i + 1;
  }
  return numerator / Rational(factorial);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q))
    throw std::invalid_argument("to_integer: " + to_string(q) + " is not an integer");
  return numerator(q);
}

std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty input");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    Integer num{std::string(s.substr(0, slash))};
    Integer den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);  // canonicalized by the backend
  } catch (const std::exception&) {
    throw std::invalid_argument("rational_from_string: malformed input '" + std::string(s) + "'");
  }
}

}  // namespace ulrich
