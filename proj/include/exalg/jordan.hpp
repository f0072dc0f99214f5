#pragma once

#include <string>
#include <variant>
#include <vector>

#include "exalg/octonion.hpp"
#include "exalg/rational.hpp"

namespace exalg {

enum class Cone { Positive, Semipositive, Neither };
std::string to_string(Cone c);

// [[a, x], [conj(x), b]]
struct Jordan2 {
  Rational a, b;
  Octonion x;

  static Jordan2 identity();
  friend Jordan2 operator+(const Jordan2& p, const Jordan2& q) { return {p.a + q.a, p.b + q.b, p.x + q.x}; }
  friend bool operator==(const Jordan2& p, const Jordan2& q) { return p.a == q.a && p.b == q.b && p.x == q.x; }
  friend bool operator!=(const Jordan2& p, const Jordan2& q) { return !(p == q); }
};

// [[a, x, y], [conj(x), b, z], [conj(y), conj(z), c]]
struct Jordan3 {
  Rational a, b, c;
  Octonion x, y, z;

  static Jordan3 identity();
  static Jordan3 diag(const Rational& a, const Rational& b, const Rational& c);
  friend bool operator==(const Jordan3& p, const Jordan3& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.x == q.x && p.y == q.y && p.z == q.z;
  }
};

Rational det2(const Jordan2& X);
Rational det3(const Jordan3& X);
Rational inner2(const Jordan2& X, const Jordan2& Y);
Cone cone_membership2(const Jordan2& X);
Cone cone_membership3(const Jordan3& X);

// X in the upper-left block, r in position (3,3).
Jordan3 embed_block(const Jordan2& X, const Rational& r);

bool is_integral(const Jordan2& X);
bool is_integral(const Jordan3& X);

// Octonion with complex coefficients, re + i im.
struct ComplexOctonion {
  Octonion re, im;

  ComplexOctonion conj() const;  // C-linear conjugation
  friend ComplexOctonion operator+(const ComplexOctonion& p, const ComplexOctonion& q) {
    return {p.re + q.re, p.im + q.im};
  }
  friend ComplexOctonion operator-(const ComplexOctonion& p, const ComplexOctonion& q) {
    return {p.re - q.re, p.im - q.im};
  }
  friend bool operator==(const ComplexOctonion& p, const ComplexOctonion& q) { return p.re == q.re && p.im == q.im; }
};

ComplexOctonion scale(const Complex& s, const ComplexOctonion& w);
ComplexOctonion mul(const ComplexOctonion& p, const ComplexOctonion& q);
// w * conj(w), a complex scalar
Complex norm(const ComplexOctonion& w);
// tr(p * conj(q))
Complex bilinear(const ComplexOctonion& p, const ComplexOctonion& q);

// Z = re + i im with im in the positive cone.
struct TubePoint2 {
  Jordan2 re, im;

  TubePoint2() = default;
  TubePoint2(Jordan2 r, Jordan2 i);
  static TubePoint2 from_entries(const Complex& z1, const Complex& z2, const ComplexOctonion& w);

  Complex z1() const { return {re.a, im.a}; }
  Complex z2() const { return {re.b, im.b}; }
  ComplexOctonion w() const { return {re.x, im.x}; }

  friend bool operator==(const TubePoint2& p, const TubePoint2& q) { return p.re == q.re && p.im == q.im; }
  friend bool operator!=(const TubePoint2& p, const TubePoint2& q) { return !(p == q); }
};

bool in_tube(const Jordan2& re, const Jordan2& im);
Complex det(const TubePoint2& Z);
// -Z^{-1}
TubePoint2 invert2(const TubePoint2& Z);

struct TranslateGen {
  Jordan2 B;
};
struct RotateGen {
  enum class Kind { Weyl, Unipotent };
  Kind kind = Kind::Unipotent;
  Octonion u;  // ignored for Weyl
};
struct InversionGen {};

using GammaToken = std::variant<TranslateGen, RotateGen, InversionGen>;

class GammaWord {
 public:
  GammaWord() = default;
  GammaWord(std::initializer_list<GammaToken> tokens);

  // Throws InvalidGenerator for non-integral B or u.
  GammaWord& push(GammaToken t);
  const std::vector<GammaToken>& tokens() const { return tokens_; }

 private:
  std::vector<GammaToken> tokens_;
};

TubePoint2 act(const GammaToken& g, const TubePoint2& Z);
Complex automorphy(const GammaToken& g, const TubePoint2& Z);

struct WordAction {
  TubePoint2 Z;
  Complex j;
};
// Tokens act left to right: the first token is applied first.
WordAction apply_word(const GammaWord& g, const TubePoint2& Z);

}  // namespace exalg
