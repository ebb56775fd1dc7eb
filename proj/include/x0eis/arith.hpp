#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace x0eis {

using BigInt = mpz_class;

// Exact rational numbers. mpq_class keeps values in lowest terms with a
// positive denominator once canonicalized; every constructor below
// canonicalizes, and GMP arithmetic preserves the canonical form.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

BigInt rat_num(const Rational& q);
BigInt rat_den(const Rational& q);
bool is_integer(const Rational& q);
BigInt rat_floor(const Rational& q);
Rational frac_part(const Rational& q); // q - floor(q), always in [0,1)

// 2-adic valuation. v2_int requires n != 0, v2_rat requires q != 0.
long v2_int(const BigInt& n);
long v2_rat(const Rational& q);
bool denominator_odd(const Rational& q);

// gcd of the fractional Z-modules aZ + bZ; gcd(0,0) is rejected.
Rational rat_gcd(const Rational& a, const Rational& b);

// order of (uZ + vZ)/vZ for nonzero rationals u, v; always a positive integer
BigInt lattice_quotient_order(const Rational& u, const Rational& v);

// ---- integer utilities on machine words ----

struct Factorization {
  // (prime, exponent) pairs sorted by prime
  std::vector<std::pair<std::uint64_t, int>> factors;
};

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);            // n >= 1
const Factorization& factorize_cached(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n); // sorted ascending
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
int vp_u64(std::uint64_t n, std::uint64_t p);

std::uint64_t euler_phi(std::uint64_t n);
int nu_omega(std::uint64_t n);                 // number of prime factors with multiplicity
std::uint64_t mu_plus(std::uint64_t n);        // prod (p+1), n squarefree required
std::uint64_t varpi(std::uint64_t n);          // prod (p^2-1), n squarefree required

// Jacobi symbol (a|n) for odd positive n; completely multiplicative in a,
// zero when gcd(a,n) > 1.
int jacobi(const BigInt& a, const BigInt& n);

// B2 evaluated on the fractional part: <x>^2 - <x> + 1/6
Rational bernoulli2(const Rational& x);

// sawtooth ((x)): 0 on integers, else x - floor(x) - 1/2
Rational sawtooth(const Rational& x);

// numerator and denominator both supported only on primes dividing m
bool is_unit_in_localization(const Rational& q, std::uint64_t m);

std::uint64_t odd_part(std::uint64_t n);
BigInt odd_part(const BigInt& n);

} // namespace x0eis
