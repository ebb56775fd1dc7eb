#pragma once

#include <complex>
#include <random>

#include "x0eis/arith.hpp"
#include "x0eis/cusps.hpp"
#include "x0eis/qseries.hpp"

namespace x0eis {

// s(h, k) for k >= 1 and gcd(h, k) = 1, by direct summation and by the
// reciprocity recursion
Rational dedekind_sum_brute(const BigInt& h, const BigInt& k);
Rational dedekind_sum_fast(const BigInt& h, const BigInt& k);

// s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk))/12, both sides by summation
bool reciprocity_check(const BigInt& h, const BigInt& k);

// 12 k s(h,k) = k + 1 - 2 (h|k) mod 8 for odd k
bool congruence_check(const BigInt& h, const BigInt& k);

struct Gamma2x2 {
  BigInt a, b, c, d;
};

Gamma2x2 make_gamma(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);
Gamma2x2 gamma_mul(const Gamma2x2& x, const Gamma2x2& y);
Gamma2x2 gamma_neg(const Gamma2x2& x);

// b/d when c = 0, else (a+d)/c - 12 sgn(c) s(d, |c|); invariant under g -> -g
Rational rademacher_phi(const Gamma2x2& g);

// sum over r | D of (-1)^(nu(r)-1) Phi(a, rb; c/r, d) / gcd(r, D/M), for g in
// Gamma_0(D C); 24 times the period of E_{M, D/M} over the path of g
Rational xi_value(std::uint64_t M, const LevelShape& shape, const Gamma2x2& g);

bool xi_homomorphism_check(std::uint64_t M, const LevelShape& shape, const Gamma2x2& g1,
                           const Gamma2x2& g2);

// for odd D with nu(D) >= 2: xi has odd denominator, and a nonzero value has
// 2-adic valuation >= 3 (>= min(3, v2(phi(D))) when M = D)
bool two_part_check(std::uint64_t M, const LevelShape& shape, const Gamma2x2& g);

// random element of Gamma_0(N) with c = N k, 1 <= |k| <= height
Gamma2x2 random_gamma0(std::uint64_t N, std::uint64_t height, std::mt19937_64& rng);

// F(g z0) - F(z0) with z0 = (-d + i)/c, F(z) = a0 z + sum a_n e^{2 pi i n z} /
// (2 pi i n) truncated at the series length; c = 0 is rejected
std::complex<double> numeric_period(const QExpansion& s, const Gamma2x2& g);

} // namespace x0eis
