#pragma once

#include <cstdint>
#include <vector>

#include "x0eis/characters.hpp"
#include "x0eis/quadext.hpp"

namespace x0eis {

// Truncated q-expansion a_0 + a_1 q + ... + a_T q^T tagged with the level of
// the group it is considered on. The tag matters only to the Hecke operator;
// a series may be promoted to any level its own level divides.
struct QExpansion {
  std::int64_t level = 1;
  std::int64_t truncation = 0;
  std::vector<QuadExt> coeffs; // size truncation + 1

  const QuadExt& at(std::int64_t n) const { return coeffs[static_cast<std::size_t>(n)]; }
  QuadExt& at(std::int64_t n) { return coeffs[static_cast<std::size_t>(n)]; }
};

QExpansion make_qexp(std::int64_t level, std::int64_t truncation);
bool qexp_equal(const QExpansion& a, const QExpansion& b); // same level, truncation, coefficients
QExpansion promote_level(const QExpansion& s, std::int64_t new_level);
QExpansion truncate(const QExpansion& s, std::int64_t T);
QExpansion qexp_scale(const QExpansion& s, const QuadExt& c);

// sum over d | n of d * chi(d) * chi(n/d); vanishes unless gcd(n, f) = 1
Rational sigma_psi(const QuadraticCharacter& chi, std::uint64_t n);

// sum of divisors of n prime to D/f
BigInt sigma_Df(std::uint64_t D, std::uint64_t f, std::uint64_t n);

// 0 if gcd(n, gcd(M,L)) > 1, else sigma_Df(D,f,n) * prod_{l | D/M} l^{v_l(n)}
BigInt sigma_ML(std::uint64_t M, std::uint64_t L, std::uint64_t D, std::uint64_t f,
                std::uint64_t n);

// level f^2 series with a_0 = -1/24 (trivial chi) or 0, a_n = sigma_psi(n)
QExpansion e_psi_qexp(const QuadraticCharacter& chi, std::int64_t T);

// V_p: a_n -> p * a_{n/p} (coefficient p*a_m lands on q^{pm}); level times p
QExpansion v_operator(const QExpansion& s, std::uint64_t p);

// [p]+ : a_n -> a_n - p chi(p) a_{n/p}; [p]- : a_n -> a_n - chi(p) a_{n/p};
// both multiply the level by p and require p prime, p not dividing f
QExpansion bracket_plus(const QExpansion& s, std::uint64_t p, const QuadraticCharacter& chi);
QExpansion bracket_minus(const QExpansion& s, std::uint64_t p, const QuadraticCharacter& chi);

// T_ell at the level written on s. Output truncation T_out must satisfy
// s.truncation >= ell * T_out; shorter input is an error, never silently
// truncated.
QExpansion hecke(const QExpansion& s, std::uint64_t ell, std::int64_t T_out);

} // namespace x0eis
