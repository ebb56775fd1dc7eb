#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "x0eis/arith.hpp"
#include "x0eis/characters.hpp"
#include "x0eis/cusps.hpp"
#include "x0eis/dedekind.hpp"
#include "x0eis/eisenstein.hpp"
#include "x0eis/qseries.hpp"

using namespace x0eis;

TEST_CASE("classical sum values") {
  CHECK(dedekind_sum_brute(BigInt(1), BigInt(3)) == make_rational(1, 18));
  CHECK(dedekind_sum_fast(BigInt(1), BigInt(3)) == make_rational(1, 18));
  CHECK(dedekind_sum_fast(BigInt(1), BigInt(1)) == Rational(0));
  CHECK(dedekind_sum_fast(BigInt(0), BigInt(1)) == Rational(0));
  // s(-h, k) = -s(h, k)
  CHECK(dedekind_sum_fast(BigInt(-1), BigInt(3)) == make_rational(-1, 18));
}

TEST_CASE("euclidean evaluation agrees with the defining sum") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 400; ++trial) {
    long k = static_cast<long>(rng() % 400) + 1;
    long h = static_cast<long>(rng() % 1001) - 500;
    if (std::gcd(std::abs(h), k) != 1) continue;
    CAPTURE(h);
    CAPTURE(k);
    CHECK(dedekind_sum_brute(BigInt(h), BigInt(k)) ==
          dedekind_sum_fast(BigInt(h), BigInt(k)));
  }
  // large arguments only reachable through the euclidean route
  BigInt bigk("1000003");
  CHECK(dedekind_sum_brute(BigInt(2), bigk) == dedekind_sum_fast(BigInt(2), bigk));
}

TEST_CASE("reciprocity and the mod eight congruence") {
  CHECK(reciprocity_check(BigInt(1), BigInt(3)));
  CHECK(congruence_check(BigInt(1), BigInt(3)));
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    long k = static_cast<long>(rng() % 200) + 1;
    long h = static_cast<long>(rng() % 200) + 1;
    if (std::gcd(h, k) != 1) continue;
    CHECK(reciprocity_check(BigInt(h), BigInt(k)));
    long ko = 2 * (static_cast<long>(rng() % 100)) + 1;
    long ho = static_cast<long>(rng() % 300) + 1;
    if (std::gcd(ho, ko) == 1) CHECK(congruence_check(BigInt(ho), BigInt(ko)));
  }
}

TEST_CASE("transformation phase function") {
  Gamma2x2 T = make_gamma(BigInt(1), BigInt(1), BigInt(0), BigInt(1));
  Gamma2x2 S = make_gamma(BigInt(0), BigInt(-1), BigInt(1), BigInt(0));
  CHECK(rademacher_phi(T) == Rational(1));
  CHECK(rademacher_phi(S) == Rational(0));
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 100; ++trial) {
    Gamma2x2 g = random_gamma0(5, 3, rng);
    CHECK(rademacher_phi(gamma_neg(g)) == rademacher_phi(g));
    CHECK(rademacher_phi(gamma_mul(g, T)) == rademacher_phi(g) + Rational(1));
  }
}

TEST_CASE("matrix plumbing") {
  CHECK_THROWS(make_gamma(BigInt(1), BigInt(1), BigInt(1), BigInt(1)));
  Gamma2x2 g = make_gamma(BigInt(2), BigInt(1), BigInt(5), BigInt(3));
  Gamma2x2 h = gamma_mul(g, g);
  CHECK(h.a * h.d - h.b * h.c == BigInt(1));
  std::mt19937_64 rng(91);
  for (std::uint64_t N : {std::uint64_t(6), std::uint64_t(15), std::uint64_t(45)}) {
    for (int trial = 0; trial < 50; ++trial) {
      Gamma2x2 r = random_gamma0(N, 3, rng);
      CHECK(r.a * r.d - r.b * r.c == BigInt(1));
      CHECK(mpz_divisible_ui_p(r.c.get_mpz_t(), static_cast<unsigned long>(N)));
      CHECK(r.c != BigInt(0));
    }
  }
}

TEST_CASE("alternating sum over divisor conjugates on translations") {
  LevelShape sh = make_shape(6, 1);
  Gamma2x2 T = make_gamma(BigInt(1), BigInt(1), BigInt(0), BigInt(1));
  CHECK(xi_value(6, sh, T) == Rational(-2));
  CHECK(xi_value(2, sh, T) == Rational(0));
  CHECK(xi_value(3, sh, T) == Rational(0));
  for (std::uint64_t D : {std::uint64_t(15), std::uint64_t(21), std::uint64_t(105)}) {
    LevelShape shd = make_shape(D, 1);
    for (long b = -3; b <= 3; ++b) {
      Gamma2x2 Tb = make_gamma(BigInt(1), BigInt(b), BigInt(0), BigInt(1));
      for (std::uint64_t M : divisors(D)) {
        if (M == 1) continue;
        Rational expect(0);
        if (M == D) {
          long sign = nu_omega(D) % 2 == 0 ? -1 : 1;
          expect = Rational(sign * b * static_cast<long>(euler_phi(D)));
        }
        CHECK(xi_value(M, shd, Tb) == expect);
      }
    }
  }
}

TEST_CASE("quasi-homomorphism is an actual homomorphism here") {
  std::mt19937_64 rng(92);
  for (std::uint64_t D : {std::uint64_t(6), std::uint64_t(15)}) {
    LevelShape sh = make_shape(D, 1);
    for (int trial = 0; trial < 50; ++trial) {
      Gamma2x2 g1 = random_gamma0(D, 3, rng);
      Gamma2x2 g2 = random_gamma0(D, 3, rng);
      for (std::uint64_t M : divisors(D)) {
        if (M == 1) continue;
        CHECK(xi_homomorphism_check(M, sh, g1, g2));
      }
    }
  }
}

TEST_CASE("two-adic structure of the values") {
  std::mt19937_64 rng(93);
  for (std::uint64_t D : {std::uint64_t(15), std::uint64_t(105)}) {
    LevelShape sh = make_shape(D, 1);
    for (int trial = 0; trial < 50; ++trial) {
      Gamma2x2 g = random_gamma0(D, 2, rng);
      for (std::uint64_t M : divisors(D)) {
        if (M == 1) continue;
        CHECK(two_part_check(M, sh, g));
        Rational xi = xi_value(M, sh, g);
        if (xi != Rational(0)) {
          CHECK(denominator_odd(xi));
          CHECK(v2_rat(xi) >= 3);
        }
      }
    }
  }
}

TEST_CASE("numeric integrals recover the combinatorial periods") {
  std::mt19937_64 rng(94);
  for (std::uint64_t D : {std::uint64_t(6), std::uint64_t(10), std::uint64_t(15)}) {
    LevelShape sh = make_shape(D, 1);
    for (std::uint64_t M : divisors(D)) {
      if (M == 1) continue;
      EisIndex idx = make_index(M, D / M, quad_char(1), sh);
      QExpansion s = eis_qexp(idx, sh, 2500);
      for (int trial = 0; trial < 4; ++trial) {
        Gamma2x2 g = random_gamma0(D, 2, rng);
        Rational expect = xi_value(M, sh, g) / Rational(24);
        std::complex<double> got = numeric_period(s, g);
        double target = expect.get_d();
        CAPTURE(D);
        CAPTURE(M);
        CHECK(std::abs(got - std::complex<double>(target, 0.0)) < 1e-6);
      }
    }
  }
}

TEST_CASE("translation periods match constant terms exactly") {
  for (std::uint64_t D : {std::uint64_t(6), std::uint64_t(15), std::uint64_t(21)}) {
    LevelShape sh = make_shape(D, 1);
    for (std::uint64_t M : divisors(D)) {
      if (M == 1) continue;
      EisIndex idx = make_index(M, D / M, quad_char(1), sh);
      QExpansion s = eis_qexp(idx, sh, 2);
      QuadExt a0 = s.at(0);
      REQUIRE(quad_is_rational(a0));
      for (long b = 1; b <= 4; ++b) {
        Gamma2x2 Tb = make_gamma(BigInt(1), BigInt(b), BigInt(0), BigInt(1));
        CHECK(xi_value(M, sh, Tb) / Rational(24) == Rational(b) * a0.rat);
      }
    }
  }
}
