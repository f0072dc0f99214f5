#include "exalg/jordan.hpp"

#include "exalg/errors.hpp"

namespace exalg {

std::string to_string(Cone c) {
  switch (c) {
    case Cone::Positive: return "positive";
    case Cone::Semipositive: return "semipositive";
    case Cone::Neither: return "neither";
  }
  return "?";
}

Jordan2 Jordan2::identity() { return {1, 1, Octonion{}}; }

Jordan3 Jordan3::identity() { return diag(1, 1, 1); }

Jordan3 Jordan3::diag(const Rational& a, const Rational& b, const Rational& c) {
  return {a, b, c, Octonion{}, Octonion{}, Octonion{}};
}

Rational det2(const Jordan2& X) { return X.a * X.b - norm(X.x); }

Rational det3(const Jordan3& X) {
  return X.a * X.b * X.c - X.a * norm(X.z) - X.b * norm(X.y) - X.c * norm(X.x) +
         trace(mul(mul(X.x, X.z), conj(X.y)));
}

Rational inner2(const Jordan2& X, const Jordan2& Y) {
  // diagonal entries of XY + YX are real multiples of e_0
  Octonion d1 = Octonion::scalar(2 * X.a * Y.a) + mul(X.x, conj(Y.x)) + mul(Y.x, conj(X.x));
  Octonion d2 = Octonion::scalar(2 * X.b * Y.b) + mul(conj(X.x), Y.x) + mul(conj(Y.x), X.x);
  return (d1.c[0] + d2.c[0]) / 2;
}

Cone cone_membership2(const Jordan2& X) {
  Rational d = det2(X);
  if (X.a > 0 && X.b > 0 && d > 0) return Cone::Positive;
  if (X.a >= 0 && X.b >= 0 && d >= 0) return Cone::Semipositive;
  return Cone::Neither;
}

Cone cone_membership3(const Jordan3& X) {
  Rational m12 = X.a * X.b - norm(X.x);
  Rational m13 = X.a * X.c - norm(X.y);
  Rational m23 = X.b * X.c - norm(X.z);
  Rational d = det3(X);
  if (X.a > 0 && m12 > 0 && d > 0) return Cone::Positive;
  if (X.a >= 0 && X.b >= 0 && X.c >= 0 && m12 >= 0 && m13 >= 0 && m23 >= 0 && d >= 0) return Cone::Semipositive;
  return Cone::Neither;
}

Jordan3 embed_block(const Jordan2& X, const Rational& r) { return {X.a, X.b, r, X.x, Octonion{}, Octonion{}}; }

bool is_integral(const Jordan2& X) {
  return is_integer(X.a) && is_integer(X.b) && IntegralLattice::standard().contains(X.x);
}

bool is_integral(const Jordan3& X) {
  const auto& L = IntegralLattice::standard();
  return is_integer(X.a) && is_integer(X.b) && is_integer(X.c) && L.contains(X.x) && L.contains(X.y) &&
         L.contains(X.z);
}

ComplexOctonion ComplexOctonion::conj() const { return {exalg::conj(re), exalg::conj(im)}; }

ComplexOctonion scale(const Complex& s, const ComplexOctonion& w) {
  return {s.re * w.re - s.im * w.im, s.re * w.im + s.im * w.re};
}

ComplexOctonion mul(const ComplexOctonion& p, const ComplexOctonion& q) {
  return {mul(p.re, q.re) - mul(p.im, q.im), mul(p.re, q.im) + mul(p.im, q.re)};
}

Complex norm(const ComplexOctonion& w) { return {norm(w.re) - norm(w.im), bilinear(w.re, w.im)}; }

Complex bilinear(const ComplexOctonion& p, const ComplexOctonion& q) {
  return {bilinear(p.re, q.re) - bilinear(p.im, q.im), bilinear(p.re, q.im) + bilinear(p.im, q.re)};
}

bool in_tube(const Jordan2& re, const Jordan2& im) {
  (void)re;
  return im.a > 0 && det2(im) > 0;
}

TubePoint2::TubePoint2(Jordan2 r, Jordan2 i) : re(std::move(r)), im(std::move(i)) {
  if (!in_tube(re, im)) throw Error("imaginary part is not in the positive cone");
}

TubePoint2 TubePoint2::from_entries(const Complex& z1, const Complex& z2, const ComplexOctonion& w) {
  return TubePoint2(Jordan2{z1.re, z2.re, w.re}, Jordan2{z1.im, z2.im, w.im});
}

Complex det(const TubePoint2& Z) { return Z.z1() * Z.z2() - norm(Z.w()); }

TubePoint2 invert2(const TubePoint2& Z) {
  Complex d = det(Z);
  if (d.is_zero()) throw ZeroDeterminant("det(Z) = 0");
  Complex dinv = Complex(1) / d;
  return TubePoint2::from_entries(-(Z.z2() * dinv), -(Z.z1() * dinv), scale(dinv, Z.w()));
}

GammaWord::GammaWord(std::initializer_list<GammaToken> tokens) {
  for (const auto& t : tokens) push(t);
}

GammaWord& GammaWord::push(GammaToken t) {
  if (auto* p = std::get_if<TranslateGen>(&t)) {
    if (!is_integral(p->B)) throw InvalidGenerator("translation by a non-integral matrix");
  } else if (auto* r = std::get_if<RotateGen>(&t)) {
    if (r->kind == RotateGen::Kind::Unipotent && !IntegralLattice::standard().contains(r->u))
      throw InvalidGenerator("unipotent entry outside the integral lattice");
  }
  tokens_.push_back(std::move(t));
  return *this;
}

TubePoint2 act(const GammaToken& g, const TubePoint2& Z) {
  if (auto* p = std::get_if<TranslateGen>(&g)) return TubePoint2(Z.re + p->B, Z.im);
  if (auto* r = std::get_if<RotateGen>(&g)) {
    if (r->kind == RotateGen::Kind::Weyl) {
      ComplexOctonion w = Z.w().conj();
      return TubePoint2::from_entries(Z.z2(), Z.z1(), {-w.re, -w.im});
    }
    const ComplexOctonion u{r->u, Octonion{}};
    Complex z1 = Z.z1();
    ComplexOctonion w = scale(z1, u) + Z.w();
    Complex z2 = Z.z2() + Complex(norm(r->u)) * z1 + bilinear(Z.w(), u);
    return TubePoint2::from_entries(z1, z2, w);
  }
  return invert2(Z);
}

Complex automorphy(const GammaToken& g, const TubePoint2& Z) {
  if (std::holds_alternative<InversionGen>(g)) return det(Z);
  return Complex(1);
}

WordAction apply_word(const GammaWord& g, const TubePoint2& Z) {
  WordAction r{Z, Complex(1)};
  for (const auto& t : g.tokens()) {
    r.j = automorphy(t, r.Z) * r.j;
    r.Z = act(t, r.Z);
  }
  return r;
}

}  // namespace exalg
