#include "x0eis/dedekind.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace x0eis {

namespace {

BigInt big(std::uint64_t n) { return BigInt(static_cast<unsigned long>(n)); }

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt big_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt res = (hi << 64) + BigInt(static_cast<unsigned long>(u & ~0UL));
  return neg ? BigInt(-res) : res;
}

void check_pair(const BigInt& h, const BigInt& k) {
  if (k < 1) throw std::invalid_argument("dedekind_sum: k must be positive");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
  if (g != 1) throw std::invalid_argument("dedekind_sum: h, k must be coprime");
}

} // namespace

Rational dedekind_sum_brute(const BigInt& h0, const BigInt& k0) {
  check_pair(h0, k0);
  if (k0 == 1) return Rational(0);
  BigInt den = 4 * k0 * k0;
  if (mpz_fits_ulong_p(k0.get_mpz_t()) && k0 <= 1000000) {
    // sum of (2 (h mu mod k) - k)(2 mu - k) stays within 4 k^3 < 2^62 here
    const std::uint64_t k = mpz_get_ui(k0.get_mpz_t());
    const std::uint64_t h = mpz_get_ui(mod_pos(h0, k0).get_mpz_t());
    __int128 acc = 0;
    for (std::uint64_t mu = 1; mu < k; ++mu) {
      std::uint64_t r = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(h) * mu) % k);
      acc += (static_cast<__int128>(2 * r) - static_cast<__int128>(k)) *
             (static_cast<__int128>(2 * mu) - static_cast<__int128>(k));
    }
    return make_rational(big_from_i128(acc), den);
  }
  BigInt h = mod_pos(h0, k0), acc(0), r(0);
  for (BigInt mu(1); mu < k0; ++mu) {
    r = mod_pos(h * mu, k0);
    acc += (2 * r - k0) * (2 * mu - k0);
  }
  return make_rational(acc, den);
}

Rational dedekind_sum_fast(const BigInt& h0, const BigInt& k0) {
  check_pair(h0, k0);
  BigInt h = h0, k = k0;
  Rational res(0);
  int sign = 1;
  while (true) {
    h = mod_pos(h, k);
    if (h == 0) break; // coprimality forces k = 1 here
    Rational term = make_rational(h * h + k * k + 1, 12 * h * k) - make_rational(1, 4);
    res += sign > 0 ? term : Rational(-term);
    sign = -sign;
    std::swap(h, k); // continue with s(k mod h, h)
  }
  return res;
}

bool reciprocity_check(const BigInt& h, const BigInt& k) {
  if (h < 1 || k < 1) throw std::invalid_argument("reciprocity_check: positive arguments only");
  Rational lhs = dedekind_sum_brute(h, k) + dedekind_sum_brute(k, h);
  Rational rhs = make_rational(-1, 4) +
                 make_rational(h * h + k * k + 1, 12 * h * k);
  return lhs == rhs;
}

bool congruence_check(const BigInt& h, const BigInt& k) {
  if (k < 1 || mpz_even_p(k.get_mpz_t()))
    throw std::invalid_argument("congruence_check: k must be odd and positive");
  Rational q = Rational(12) * Rational(k) * dedekind_sum_fast(h, k);
  if (!is_integer(q)) return false;
  BigInt rhs = k + 1 - 2 * BigInt(jacobi(h, k));
  BigInt diff = rat_num(q) - rhs;
  return mpz_divisible_ui_p(diff.get_mpz_t(), 8) != 0;
}

Gamma2x2 make_gamma(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  if (a * d - b * c != 1) throw std::invalid_argument("make_gamma: determinant must be 1");
  return Gamma2x2{a, b, c, d};
}

Gamma2x2 gamma_mul(const Gamma2x2& x, const Gamma2x2& y) {
  return Gamma2x2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                  x.c * y.b + x.d * y.d};
}

Gamma2x2 gamma_neg(const Gamma2x2& x) { return Gamma2x2{-x.a, -x.b, -x.c, -x.d}; }

Rational rademacher_phi(const Gamma2x2& g) {
  if (g.a * g.d - g.b * g.c != 1)
    throw std::invalid_argument("rademacher_phi: determinant must be 1");
  if (g.c == 0) return Rational(g.b) / Rational(g.d); // d = +-1
  BigInt cabs = abs(g.c);
  Rational phi = make_rational(g.a + g.d, g.c);
  Rational s = dedekind_sum_fast(g.d, cabs);
  return g.c > 0 ? Rational(phi - 12 * s) : Rational(phi + 12 * s);
}

Rational xi_value(std::uint64_t M, const LevelShape& shape, const Gamma2x2& g) {
  if (M == 0 || shape.D % M != 0) throw std::invalid_argument("xi_value: M must divide D");
  if (g.a * g.d - g.b * g.c != 1 ||
      !mpz_divisible_ui_p(g.c.get_mpz_t(), static_cast<unsigned long>(shape.N())))
    throw std::invalid_argument("xi_value: element must lie in Gamma_0(D C)");
  const std::uint64_t DM = shape.D / M;
  Rational total(0);
  for (std::uint64_t r : divisors(shape.D)) {
    Gamma2x2 gr{g.a, big(r) * g.b, g.c / big(r), g.d};
    Rational phi = rademacher_phi(gr);
    Rational term = phi / Rational(static_cast<unsigned long>(std::gcd(r, DM)));
    total += nu_omega(r) % 2 == 0 ? Rational(-term) : term;
  }
  return total;
}

bool xi_homomorphism_check(std::uint64_t M, const LevelShape& shape, const Gamma2x2& g1,
                           const Gamma2x2& g2) {
  Rational sum = xi_value(M, shape, g1) + xi_value(M, shape, g2);
  return xi_value(M, shape, gamma_mul(g1, g2)) == sum;
}

bool two_part_check(std::uint64_t M, const LevelShape& shape, const Gamma2x2& g) {
  if (shape.D % 2 == 0 || prime_divisors(shape.D).size() < 2)
    throw std::invalid_argument("two_part_check: need odd D with at least two prime factors");
  Rational xi = xi_value(M, shape, g);
  if (!denominator_odd(xi)) return false;
  if (xi == 0) return true;
  long threshold = 3;
  if (M == shape.D) {
    long vphi = v2_int(big(euler_phi(shape.D)));
    if (vphi < threshold) threshold = vphi;
  }
  return v2_rat(xi) >= threshold;
}

Gamma2x2 random_gamma0(std::uint64_t N, std::uint64_t height, std::mt19937_64& rng) {
  if (N == 0 || height == 0) throw std::invalid_argument("random_gamma0: bad parameters");
  std::uint64_t k = rng() % height + 1;
  BigInt c = big(N) * big(k);
  if (rng() % 2 == 1) c = -c;
  BigInt cabs = abs(c);
  BigInt d;
  do {
    d = big(rng() % (2 * N * height + 40)) - static_cast<long>(N * height + 20);
    BigInt gg;
    mpz_gcd(gg.get_mpz_t(), d.get_mpz_t(), cabs.get_mpz_t());
    if (gg == 1) break;
  } while (true);
  BigInt a;
  if (mpz_invert(a.get_mpz_t(), d.get_mpz_t(), cabs.get_mpz_t()) == 0)
    throw std::logic_error("random_gamma0: inversion failed");
  a += (big(rng() % 5) - 2) * c; // spread the top row
  BigInt b = (a * d - 1) / c;
  return make_gamma(a, b, c, d);
}

std::complex<double> numeric_period(const QExpansion& s, const Gamma2x2& g) {
  if (g.c == 0) throw std::invalid_argument("numeric_period: c must be nonzero");
  Gamma2x2 gg = g.c < 0 ? gamma_neg(g) : g;
  const double a = gg.a.get_d(), c = gg.c.get_d(), d = gg.d.get_d();
  const std::complex<double> z0(-d / c, 1.0 / c);
  const std::complex<double> z1(a / c, 1.0 / c);
  const double twopi = 8.0 * std::atan(1.0);
  auto fval = [&](std::complex<double> z) {
    std::complex<double> acc = quad_to_double(s.at(0)) * z;
    const std::complex<double> q = std::exp(std::complex<double>(0.0, twopi) * z);
    std::complex<double> qn(1.0, 0.0);
    for (std::int64_t n = 1; n <= s.truncation; ++n) {
      qn *= q;
      acc += quad_to_double(s.at(n)) * qn / std::complex<double>(0.0, twopi * n);
    }
    return acc;
  };
  return fval(z1) - fval(z0);
}

} // namespace x0eis
