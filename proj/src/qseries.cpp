#include "x0eis/qseries.hpp"

#include <numeric>
#include <stdexcept>

namespace x0eis {

QExpansion make_qexp(std::int64_t level, std::int64_t truncation) {
  if (level < 1 || truncation < 0) throw std::invalid_argument("make_qexp: bad parameters");
  QExpansion s;
  s.level = level;
  s.truncation = truncation;
  s.coeffs.assign(static_cast<std::size_t>(truncation) + 1, QuadExt());
  return s;
}

bool qexp_equal(const QExpansion& a, const QExpansion& b) {
  if (a.level != b.level || a.truncation != b.truncation) return false;
  for (std::int64_t n = 0; n <= a.truncation; ++n)
    if (a.at(n) != b.at(n)) return false;
  return true;
}

QExpansion promote_level(const QExpansion& s, std::int64_t new_level) {
  if (new_level % s.level != 0)
    throw std::invalid_argument("promote_level: new level not a multiple of the old");
  QExpansion out = s;
  out.level = new_level;
  return out;
}

QExpansion truncate(const QExpansion& s, std::int64_t T) {
  if (T > s.truncation) throw std::invalid_argument("truncate: cannot extend");
  QExpansion out;
  out.level = s.level;
  out.truncation = T;
  out.coeffs.assign(s.coeffs.begin(), s.coeffs.begin() + T + 1);
  return out;
}

QExpansion qexp_scale(const QExpansion& s, const QuadExt& c) {
  QExpansion out = s;
  for (auto& a : out.coeffs) a = a * c;
  return out;
}

Rational sigma_psi(const QuadraticCharacter& chi, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma_psi: n must be positive");
  BigInt acc(0);
  for (std::uint64_t d : divisors(n)) {
    int c = chi_eval(chi, BigInt(static_cast<unsigned long>(d))) *
            chi_eval(chi, BigInt(static_cast<unsigned long>(n / d)));
    if (c > 0)
      acc += static_cast<unsigned long>(d);
    else if (c < 0)
      acc -= static_cast<unsigned long>(d);
  }
  return Rational(acc);
}

BigInt sigma_Df(std::uint64_t D, std::uint64_t f, std::uint64_t n) {
  if (n == 0 || f == 0 || D % f != 0) throw std::invalid_argument("sigma_Df: bad input");
  std::uint64_t m = D / f;
  BigInt acc(0);
  for (std::uint64_t d : divisors(n))
    if (std::gcd(d, m) == 1) acc += static_cast<unsigned long>(d);
  return acc;
}

BigInt sigma_ML(std::uint64_t M, std::uint64_t L, std::uint64_t D, std::uint64_t f,
                std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma_ML: n must be positive");
  if (std::gcd(n, std::gcd(M, L)) > 1) return BigInt(0);
  BigInt acc = sigma_Df(D, f, n);
  for (std::uint64_t l : prime_divisors(D / M)) {
    for (int i = 0; i < vp_u64(n, l); ++i) acc *= static_cast<unsigned long>(l);
  }
  return acc;
}

QExpansion e_psi_qexp(const QuadraticCharacter& chi, std::int64_t T) {
  std::int64_t f = static_cast<std::int64_t>(chi.f);
  QExpansion s = make_qexp(f * f, T);
  if (chi.f == 1) s.at(0) = QuadExt(make_rational(-1, 24));
  for (std::int64_t n = 1; n <= T; ++n)
    s.at(n) = QuadExt(sigma_psi(chi, static_cast<std::uint64_t>(n)));
  return s;
}

QExpansion v_operator(const QExpansion& s, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("v_operator: p must be prime");
  QExpansion out = make_qexp(s.level * static_cast<std::int64_t>(p), s.truncation);
  QuadExt pc{Rational(static_cast<long>(p))};
  for (std::int64_t n = 0; p * n <= static_cast<std::uint64_t>(s.truncation); ++n)
    out.at(n * static_cast<std::int64_t>(p)) = pc * s.at(n);
  return out;
}

namespace {

QExpansion bracket_impl(const QExpansion& s, std::uint64_t p, const QuadraticCharacter& chi,
                        bool plus) {
  if (!is_prime(p)) throw std::invalid_argument("bracket: p must be prime");
  if (chi.f % p == 0) throw std::invalid_argument("bracket: p must not divide the conductor");
  std::int64_t ip = static_cast<std::int64_t>(p);
  int cp = chi_eval(chi, BigInt(static_cast<unsigned long>(p)));
  QuadExt mult{Rational(plus ? cp * static_cast<long>(p) : cp)};
  QExpansion out = make_qexp(s.level * ip, s.truncation);
  for (std::int64_t n = 0; n <= s.truncation; ++n) {
    out.at(n) = s.at(n);
    if (n % ip == 0) out.at(n) = out.at(n) - mult * s.at(n / ip);
  }
  return out;
}

} // namespace

QExpansion bracket_plus(const QExpansion& s, std::uint64_t p, const QuadraticCharacter& chi) {
  return bracket_impl(s, p, chi, true);
}

QExpansion bracket_minus(const QExpansion& s, std::uint64_t p, const QuadraticCharacter& chi) {
  return bracket_impl(s, p, chi, false);
}

QExpansion hecke(const QExpansion& s, std::uint64_t ell, std::int64_t T_out) {
  if (!is_prime(ell)) throw std::invalid_argument("hecke: ell must be prime");
  std::int64_t il = static_cast<std::int64_t>(ell);
  if (s.truncation < il * T_out)
    throw std::invalid_argument("hecke: input truncation too short for requested output");
  bool divides = (s.level % il == 0);
  QExpansion out = make_qexp(s.level, T_out);
  QuadExt lc{Rational(static_cast<long>(ell))};
  for (std::int64_t n = 0; n <= T_out; ++n) {
    out.at(n) = s.at(n * il);
    if (!divides && n % il == 0) out.at(n) = out.at(n) + lc * s.at(n / il);
  }
  return out;
}

} // namespace x0eis
