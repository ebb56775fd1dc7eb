#include <doctest.h>

#include <numeric>
#include <random>

#include "x0eis/arith.hpp"
#include "x0eis/characters.hpp"
#include "x0eis/qseries.hpp"

using namespace x0eis;

namespace {

QExpansion random_series(std::int64_t level, std::int64_t T, std::mt19937_64& rng) {
  QExpansion s = make_qexp(level, T);
  for (std::int64_t n = 0; n <= T; ++n)
    s.at(n) = QuadExt(make_rational(static_cast<long>(rng() % 19) - 9,
                                    1 + static_cast<long>(rng() % 7)));
  return s;
}

bool coeff_equal(const QExpansion& a, const QExpansion& b, std::int64_t T) {
  for (std::int64_t n = 0; n <= T; ++n)
    if (a.at(n) != b.at(n)) return false;
  return true;
}

} // namespace

TEST_CASE("divisor sums twisted by a character") {
  auto triv = quad_char(1);
  CHECK(sigma_psi(triv, 6) == Rational(12));
  CHECK(sigma_psi(triv, 1) == Rational(1));
  auto chi3 = quad_char(3);
  CHECK(sigma_psi(chi3, 2) == Rational(-3));
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t n = rng() % 3000 + 1;
    for (std::uint64_t f : {std::uint64_t(3), std::uint64_t(5), std::uint64_t(15)}) {
      auto chi = quad_char(f);
      if (std::gcd(n, f) == 1) {
        Rational expect = Rational(chi_eval(chi, BigInt((unsigned long)n))) *
                          sigma_psi(quad_char(1), n);
        CHECK(sigma_psi(chi, n) == expect);
      } else {
        CHECK(sigma_psi(chi, n) == Rational(0));
      }
    }
  }
}

TEST_CASE("divisor sums restricted away from a modulus") {
  CHECK(sigma_Df(6, 1, 12) == BigInt(1));
  CHECK(sigma_Df(6, 3, 12) == BigInt(4));   // odd divisors of 12
  CHECK(sigma_Df(5, 1, 10) == BigInt(3));   // 1 + 2
  CHECK(sigma_Df(1, 1, 10) == BigInt(18));  // plain sigma
  CHECK(sigma_ML(5, 1, 5, 1, 10) == BigInt(3));
  CHECK(sigma_ML(3, 3, 3, 1, 2) == BigInt(3));
  CHECK(sigma_ML(3, 3, 3, 1, 6) == BigInt(0));
  // the local factor at primes dividing D/M
  CHECK(sigma_ML(3, 5, 15, 1, 5) == BigInt(5)); // sigma_{15}(5)=1, times 5^1
}

TEST_CASE("seed series coefficients") {
  auto triv = quad_char(1);
  QExpansion e1 = e_psi_qexp(triv, 10);
  CHECK(e1.level == 1);
  CHECK(e1.truncation == 10);
  CHECK(e1.at(0) == QuadExt(make_rational(-1, 24)));
  CHECK(e1.at(1) == QuadExt(Rational(1)));
  CHECK(e1.at(6) == QuadExt(Rational(12)));

  QExpansion e3 = e_psi_qexp(quad_char(3), 10);
  CHECK(e3.level == 9);
  CHECK(e3.at(0) == QuadExt());
  CHECK(e3.at(1) == QuadExt(Rational(1)));
  CHECK(e3.at(2) == QuadExt(Rational(-3)));
  CHECK(e3.at(3) == QuadExt());
}

TEST_CASE("level raising operator") {
  std::mt19937_64 rng(31);
  QExpansion s = random_series(3, 20, rng);
  QExpansion v = v_operator(s, 2);
  CHECK(v.level == 6);
  CHECK(v.truncation == 20);
  for (std::int64_t n = 0; n <= 20; ++n) {
    if (n % 2 == 0)
      CHECK(v.at(n) == QuadExt(Rational(2)) * s.at(n / 2));
    else
      CHECK(v.at(n) == QuadExt());
  }
}

TEST_CASE("bracket operators act coefficientwise") {
  std::mt19937_64 rng(32);
  auto chi = quad_char(5);
  QExpansion s = random_series(25, 30, rng);
  QExpansion bp = bracket_plus(s, 2, chi);
  QExpansion bm = bracket_minus(s, 2, chi);
  CHECK(bp.level == 50);
  CHECK(bm.level == 50);
  int c2 = chi_eval(chi, BigInt(2));
  for (std::int64_t n = 0; n <= 30; ++n) {
    QuadExt ep = s.at(n);
    QuadExt em = s.at(n);
    if (n % 2 == 0) {
      ep = ep - QuadExt(Rational(2 * c2)) * s.at(n / 2);
      em = em - QuadExt(Rational(c2)) * s.at(n / 2);
    }
    CHECK(bp.at(n) == ep);
    CHECK(bm.at(n) == em);
  }
  CHECK_THROWS(bracket_plus(s, 5, chi)); // p dividing the conductor
}

TEST_CASE("brackets at distinct primes commute") {
  std::mt19937_64 rng(33);
  auto chi = quad_char(1);
  QExpansion s = random_series(1, 40, rng);
  auto ab = bracket_minus(bracket_plus(s, 2, chi), 3, chi);
  auto ba = bracket_plus(bracket_minus(s, 3, chi), 2, chi);
  CHECK(qexp_equal(ab, ba));
}

TEST_CASE("hecke operator branches and truncation contract") {
  std::mt19937_64 rng(34);
  QExpansion s = random_series(6, 30, rng);
  QExpansion u = hecke(s, 2, 15); // 2 divides the level
  CHECK(u.level == 6);
  CHECK(u.truncation == 15);
  for (std::int64_t n = 0; n <= 15; ++n) CHECK(u.at(n) == s.at(2 * n));
  QExpansion t = hecke(s, 5, 6); // 5 does not divide the level
  for (std::int64_t n = 0; n <= 6; ++n) {
    QuadExt e = s.at(5 * n);
    if (n % 5 == 0) e = e + QuadExt(Rational(5)) * s.at(n / 5);
    CHECK(t.at(n) == e);
  }
  CHECK_THROWS(hecke(s, 5, 7)); // would need coefficient 35
}

TEST_CASE("hecke commutes with brackets at other primes") {
  std::mt19937_64 rng(35);
  auto chi = quad_char(3);
  for (std::uint64_t level : {std::uint64_t(1), std::uint64_t(5), std::uint64_t(10)}) {
    QExpansion s = random_series(static_cast<std::int64_t>(level), 50, rng);
    std::int64_t T = 10;
    auto lhs = hecke(bracket_plus(s, 2, chi), 5, T);
    auto rhs = bracket_plus(hecke(s, 5, T), 2, chi);
    CHECK(qexp_equal(lhs, rhs));
    auto lhsm = hecke(bracket_minus(s, 2, chi), 5, T);
    auto rhsm = bracket_minus(hecke(s, 5, T), 2, chi);
    CHECK(qexp_equal(lhsm, rhsm));
  }
}

TEST_CASE("hecke at p after raising to level p collapses to known combination") {
  // On any series of level prime to p:
  //   U_p([p]+ s) = T_p s - V_p s - p chi(p) s
  //   U_p([p]- s) = T_p s - V_p s -   chi(p) s
  std::mt19937_64 rng(36);
  for (std::uint64_t f : {std::uint64_t(1), std::uint64_t(3)}) {
    auto chi = quad_char(f);
    std::int64_t T = 12;
    QExpansion s = random_series(1, 2 * T, rng);
    int cp = chi_eval(chi, BigInt(2));

    auto lhs_p = hecke(bracket_plus(s, 2, chi), 2, T);
    auto lhs_m = hecke(bracket_minus(s, 2, chi), 2, T);
    auto tp = hecke(s, 2, T);
    auto vp = v_operator(truncate(s, T), 2);
    QExpansion rhs_p = make_qexp(1, T);
    QExpansion rhs_m = make_qexp(1, T);
    for (std::int64_t n = 0; n <= T; ++n) {
      QuadExt base = tp.at(n) - vp.at(n);
      rhs_p.at(n) = base - QuadExt(Rational(2 * cp)) * s.at(n);
      rhs_m.at(n) = base - QuadExt(Rational(cp)) * s.at(n);
    }
    CHECK(coeff_equal(lhs_p, rhs_p, T));
    CHECK(coeff_equal(lhs_m, rhs_m, T));
  }
}

TEST_CASE("seed series is a hecke eigenform away from the conductor") {
  auto triv = quad_char(1);
  QExpansion e = e_psi_qexp(triv, 30);
  for (std::uint64_t ell : {std::uint64_t(2), std::uint64_t(3), std::uint64_t(5)}) {
    auto te = hecke(e, ell, static_cast<std::int64_t>(30 / ell));
    auto scaled = qexp_scale(truncate(e, static_cast<std::int64_t>(30 / ell)),
                             QuadExt(Rational(static_cast<long>(1 + ell))));
    CHECK(qexp_equal(te, scaled));
  }
  auto chi3 = quad_char(3);
  QExpansion e3 = e_psi_qexp(chi3, 30);
  auto te = hecke(e3, 2, 15);
  auto scaled = qexp_scale(truncate(e3, 15), QuadExt(Rational(-3)));
  CHECK(qexp_equal(te, scaled));
}

TEST_CASE("series plumbing") {
  QExpansion s = make_qexp(4, 5);
  CHECK_THROWS(promote_level(s, 6));
  QExpansion p = promote_level(s, 12);
  CHECK(p.level == 12);
  CHECK_THROWS(truncate(s, 9));
  CHECK_THROWS(make_qexp(0, 5));
  CHECK_THROWS(hecke(s, 4, 1)); // composite index rejected
}
