#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "x0eis/arith.hpp"

using namespace x0eis;

TEST_CASE("primality agrees with a sieve") {
  const std::uint64_t limit = 100000;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p)
    if (!composite[p])
      for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  for (std::uint64_t n = 0; n <= limit; ++n) {
    bool expect = n >= 2 && !composite[n];
    if (is_prime(n) != expect) {
      CAPTURE(n);
      CHECK(is_prime(n) == expect);
      return;
    }
  }
  CHECK(true);
}

TEST_CASE("factorization reconstructs the input with prime factors") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint64_t n = rng() % 1000000000000ull + 1;
    Factorization f = factorize(n);
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (const auto& [p, e] : f.factors) {
      CHECK(is_prime(p));
      CHECK(p > last);
      last = p;
      CHECK(e >= 1);
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("divisor lists are sorted and complete") {
  auto d12 = divisors(12);
  CHECK(d12 == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  auto d1 = divisors(1);
  CHECK(d1 == std::vector<std::uint64_t>{1});
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t n = rng() % 5000 + 1;
    auto ds = divisors(n);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    std::size_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) ++count;
    CHECK(ds.size() == count);
    for (std::uint64_t d : ds) CHECK(n % d == 0);
  }
}

TEST_CASE("multiplicative helpers on known values") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(nu_omega(1) == 0);
  CHECK(nu_omega(12) == 3); // counts with multiplicity
  CHECK(nu_omega(30) == 3);
  CHECK(mu_plus(1) == 1);
  CHECK(mu_plus(6) == 12);
  CHECK(mu_plus(15) == 24);
  CHECK(varpi(6) == 24);    // (4-1)(9-1)
  CHECK(varpi(15) == 192);  // 8 * 24
  CHECK(is_squarefree(30));
  CHECK(!is_squarefree(12));
  CHECK(vp_u64(48, 2) == 4);
  CHECK(vp_u64(48, 3) == 1);
  CHECK(vp_u64(48, 5) == 0);
  CHECK(odd_part(48) == 3);
  CHECK(odd_part(BigInt(96)) == BigInt(3));
  CHECK(odd_part(7) == 7);
}

TEST_CASE("jacobi symbol satisfies quadratic reciprocity") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint64_t m = 2 * (rng() % 500) + 1;
    std::uint64_t n = 2 * (rng() % 500) + 1;
    if (std::gcd(m, n) != 1) continue;
    int lhs = jacobi(BigInt((unsigned long)m), BigInt((unsigned long)n)) *
              jacobi(BigInt((unsigned long)n), BigInt((unsigned long)m));
    int rhs = ((m - 1) / 2 % 2 == 1 && (n - 1) / 2 % 2 == 1) ? -1 : 1;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("jacobi symbol matches Euler's criterion at primes") {
  std::vector<std::uint64_t> primes{3, 5, 7, 11, 13, 101, 997};
  for (std::uint64_t p : primes) {
    for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 60); ++a) {
      BigInt bp((unsigned long)p);
      BigInt euler;
      mpz_powm_ui(euler.get_mpz_t(), BigInt((unsigned long)a).get_mpz_t(), (p - 1) / 2,
                  bp.get_mpz_t());
      int e = euler == 1 ? 1 : (euler == p - 1 ? -1 : 0);
      CHECK(jacobi(BigInt((unsigned long)a), bp) == e);
    }
  }
}

TEST_CASE("periodic second Bernoulli polynomial") {
  CHECK(bernoulli2(Rational(0)) == make_rational(1, 6));
  CHECK(bernoulli2(make_rational(1, 2)) == make_rational(-1, 12));
  CHECK(bernoulli2(make_rational(1, 4)) == make_rational(-1, 48));
  CHECK(bernoulli2(make_rational(5, 2)) == make_rational(-1, 12));  // periodicity
  CHECK(bernoulli2(make_rational(-1, 4)) == make_rational(-1, 48)); // evenness
}

TEST_CASE("sawtooth function") {
  CHECK(sawtooth(Rational(3)) == Rational(0));
  CHECK(sawtooth(make_rational(1, 4)) == make_rational(-1, 4));
  CHECK(sawtooth(make_rational(1, 4)) + sawtooth(make_rational(-1, 4)) == Rational(0));
  CHECK(sawtooth(make_rational(7, 3)) == sawtooth(make_rational(1, 3)));
}

TEST_CASE("rational gcd and lattice quotient order") {
  CHECK(rat_gcd(make_rational(1, 6), make_rational(1, 4)) == make_rational(1, 12));
  CHECK(rat_gcd(Rational(6), Rational(4)) == Rational(2));
  // index of vZ inside uZ + vZ
  CHECK(lattice_quotient_order(Rational(-24), Rational(10)) == BigInt(5));
  CHECK(lattice_quotient_order(Rational(-24), Rational(36)) == BigInt(3));
  CHECK(lattice_quotient_order(Rational(-24), Rational(66)) == BigInt(11));
  CHECK(lattice_quotient_order(make_rational(1, 2), Rational(3)) == BigInt(6));
  CHECK(lattice_quotient_order(Rational(-3), Rational(1)) == BigInt(1));
}

TEST_CASE("2-adic valuation of rationals") {
  CHECK(v2_rat(make_rational(3, 8)) == -3);
  CHECK(v2_rat(Rational(12)) == 2);
  CHECK(denominator_odd(make_rational(5, 9)));
  CHECK(!denominator_odd(make_rational(5, 6)));
}

TEST_CASE("unit test for localization membership") {
  CHECK(is_unit_in_localization(make_rational(35, 16), 70));
  CHECK(!is_unit_in_localization(make_rational(3, 5), 10));
  CHECK(!is_unit_in_localization(Rational(0), 6));
  CHECK(is_unit_in_localization(Rational(-1), 6));
}
