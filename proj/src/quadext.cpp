#include "x0eis/quadext.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace x0eis {

namespace {

// result disc of a binary operation; purely rational operands defer
long unify_disc(const QuadExt& a, const QuadExt& b) {
  if (a.irr == 0) return b.irr == 0 ? 1 : b.disc;
  if (b.irr == 0) return a.disc;
  if (a.disc != b.disc) throw std::invalid_argument("QuadExt: mixed discriminants");
  return a.disc;
}

} // namespace

QuadExt::QuadExt(Rational r, Rational i, long d) : rat(std::move(r)), irr(std::move(i)), disc(d) {
  if (disc == 0) throw std::invalid_argument("QuadExt: zero discriminant");
  if (disc == 1) { // g = 1, fold into the rational part
    rat += irr;
    irr = 0;
  }
  if (irr == 0) disc = 1;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.rat != b.rat || a.irr != b.irr) return false;
  return a.irr == 0 || a.disc == b.disc;
}

bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  long d = unify_disc(a, b);
  return QuadExt(a.rat + b.rat, a.irr + b.irr, d);
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
  long d = unify_disc(a, b);
  return QuadExt(a.rat - b.rat, a.irr - b.irr, d);
}

QuadExt operator-(const QuadExt& a) { return QuadExt(-a.rat, -a.irr, a.disc); }

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  long d = unify_disc(a, b);
  Rational r = a.rat * b.rat + a.irr * b.irr * Rational(d);
  Rational i = a.rat * b.irr + a.irr * b.rat;
  return QuadExt(r, i, d);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
  if (quad_is_zero(b)) throw std::invalid_argument("QuadExt: division by zero");
  long d = unify_disc(a, b);
  // disc is never a rational square except 1 (where irr == 0), so the norm
  // of a nonzero element is nonzero
  Rational n = b.rat * b.rat - b.irr * b.irr * Rational(b.disc);
  QuadExt num = a * QuadExt(b.rat, -b.irr, b.disc);
  return QuadExt(num.rat / n, num.irr / n, d);
}

QuadExt quad_scale(const QuadExt& a, const Rational& c) {
  return QuadExt(a.rat * c, a.irr * c, a.disc);
}

QuadExt quad_conj(const QuadExt& a) { return QuadExt(a.rat, -a.irr, a.disc); }

Rational quad_norm(const QuadExt& a) {
  return a.rat * a.rat - a.irr * a.irr * Rational(a.disc);
}

bool quad_is_zero(const QuadExt& a) { return a.rat == 0 && a.irr == 0; }

bool quad_is_rational(const QuadExt& a) { return a.irr == 0; }

double quad_to_double(const QuadExt& a) {
  if (a.irr == 0) return a.rat.get_d();
  if (a.disc < 0) throw std::invalid_argument("quad_to_double: negative discriminant");
  return a.rat.get_d() + a.irr.get_d() * std::sqrt(static_cast<double>(a.disc));
}

std::string quad_to_string(const QuadExt& a) {
  std::ostringstream os;
  os << a.rat.get_str();
  if (a.irr != 0) os << (a.irr > 0 ? "+" : "") << a.irr.get_str() << "*sqrt(" << a.disc << ")";
  return os.str();
}

} // namespace x0eis
