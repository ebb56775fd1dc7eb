#include "x0eis/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace x0eis {

QuadraticCharacter quad_char(std::uint64_t f) {
  if (f == 0 || (f > 1 && f % 2 == 0) || !is_squarefree(f))
    throw std::invalid_argument("quad_char: conductor must be 1 or odd squarefree");
  return QuadraticCharacter{f};
}

bool is_trivial(const QuadraticCharacter& chi) { return chi.f == 1; }

int chi_eval(const QuadraticCharacter& chi, const BigInt& n) {
  if (chi.f == 1) return 1;
  return jacobi(n, BigInt(static_cast<unsigned long>(chi.f)));
}

int chi_eval_rat(const QuadraticCharacter& chi, const Rational& q) {
  int a = chi_eval(chi, q.get_num());
  int b = chi_eval(chi, q.get_den());
  if (a == 0 || b == 0)
    throw std::invalid_argument("chi_eval_rat: argument not prime to the conductor");
  return a * b;
}

int chi_parity(const QuadraticCharacter& chi) { return chi_eval(chi, BigInt(-1)); }

long gauss_disc(const QuadraticCharacter& chi) {
  return chi_parity(chi) * static_cast<long>(chi.f);
}

QuadExt gauss_g(const QuadraticCharacter& chi) {
  return QuadExt(Rational(0), Rational(1), gauss_disc(chi));
}

QuadExt n_psi(const QuadraticCharacter& chi) {
  static std::mutex mu;
  static std::map<std::uint64_t, QuadExt> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(chi.f);
  if (it != memo.end()) return it->second;

  QuadExt value;
  if (chi.f == 1) {
    value = QuadExt(make_rational(-1, 24));
  } else {
    const long f = static_cast<long>(chi.f);
    Rational S(0);
    for (long a = 1; a < f; ++a) {
      int ca = chi_eval(chi, BigInt(a));
      if (ca == 0) continue;
      for (long b = 1; b < f; ++b) {
        int cb = chi_eval(chi, BigInt(b));
        if (cb == 0) continue;
        Rational term = bernoulli2(make_rational(a + b, f));
        S += ca * cb > 0 ? term : -term;
      }
    }
    // -(f/4) S / g = -(f/4) S g / disc
    long disc = gauss_disc(chi);
    Rational coeff = make_rational(-f, 4) * S / Rational(disc);
    value = QuadExt(Rational(0), coeff, disc);
  }
  memo.emplace(chi.f, value);
  return value;
}

Rational g_over_f_npsi(const QuadraticCharacter& chi) {
  QuadExt u = gauss_g(chi) / (QuadExt(Rational(static_cast<long>(chi.f))) * n_psi(chi));
  if (!quad_is_rational(u)) throw std::logic_error("g_over_f_npsi: not rational");
  return u.rat;
}

Rational gen_bernoulli_b1(const QuadraticCharacter& chi) {
  if (chi.f == 1) throw std::invalid_argument("gen_bernoulli_b1: trivial character rejected");
  BigInt acc(0);
  for (std::uint64_t a = 1; a < chi.f; ++a) {
    int c = chi_eval(chi, BigInt(static_cast<unsigned long>(a)));
    if (c > 0)
      acc += static_cast<unsigned long>(a);
    else if (c < 0)
      acc -= static_cast<unsigned long>(a);
  }
  return make_rational(acc, BigInt(static_cast<unsigned long>(chi.f)));
}

QuadraticCharacter char_product(const QuadraticCharacter& a, const QuadraticCharacter& b) {
  if (std::gcd(a.f, b.f) != 1)
    throw std::invalid_argument("char_product: conductors must be coprime");
  return quad_char(a.f * b.f);
}

} // namespace x0eis
