#include "exalg/rational.hpp"

#include "exalg/errors.hpp"

namespace exalg {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Complex operator/(const Complex& a, const Complex& b) {
  Rational n = b.norm();
  if (n == 0) throw ZeroDeterminant("complex division by zero");
  Complex num = a * b.conj();
  return {num.re / n, num.im / n};
}

std::string to_string(const Complex& z) {
  return "(" + to_string(z.re) + ", " + to_string(z.im) + ")";
}

}  // namespace exalg
