#pragma once

#include <string>

#include "x0eis/arith.hpp"

namespace x0eis {

// Element rat + irr*g of Q(g), g^2 = disc, with disc squarefree up to sign.
// disc == 1 collapses (g = 1), so elements with disc 1 are stored with
// irr == 0. A purely rational element is compatible with any disc; mixing
// two genuinely irrational elements of different disc is an error.
struct QuadExt {
  Rational rat;
  Rational irr;
  long disc = 1;

  QuadExt() = default;
  explicit QuadExt(const Rational& r) : rat(r) {}
  explicit QuadExt(long r) : rat(Rational(r)) {}
  QuadExt(Rational r, Rational i, long d);
};

bool operator==(const QuadExt& a, const QuadExt& b);
bool operator!=(const QuadExt& a, const QuadExt& b);
QuadExt operator+(const QuadExt& a, const QuadExt& b);
QuadExt operator-(const QuadExt& a, const QuadExt& b);
QuadExt operator-(const QuadExt& a);
QuadExt operator*(const QuadExt& a, const QuadExt& b);
QuadExt operator/(const QuadExt& a, const QuadExt& b);

QuadExt quad_scale(const QuadExt& a, const Rational& c);
QuadExt quad_conj(const QuadExt& a);
Rational quad_norm(const QuadExt& a); // rat^2 - irr^2 * disc
bool quad_is_zero(const QuadExt& a);
bool quad_is_rational(const QuadExt& a);
std::string quad_to_string(const QuadExt& a);
double quad_to_double(const QuadExt& a); // rat + irr * sqrt(disc), disc >= 0

} // namespace x0eis
