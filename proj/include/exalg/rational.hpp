#pragma once

#include <gmpxx.h>

#include <string>

namespace exalg {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& q);

// a + b i with exact rational parts
struct Complex {
  Rational re, im;

  Complex() = default;
  Complex(Rational r) : re(std::move(r)), im(0) {}
  Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  Complex conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

std::string to_string(const Complex& z);

}  // namespace exalg
