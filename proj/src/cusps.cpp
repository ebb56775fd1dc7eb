#include "x0eis/cusps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace x0eis {

namespace {

BigInt big(std::uint64_t n) { return BigInt(static_cast<unsigned long>(n)); }

BigInt gcd_big(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// inverse of a mod m for m >= 1 (m == 1 gives 0)
BigInt modinv(const BigInt& a, const BigInt& m) {
  if (m == 1) return BigInt(0);
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::invalid_argument("modinv: not invertible");
  return r;
}

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

} // namespace

LevelShape make_shape(std::uint64_t D, std::uint64_t C) {
  if (D == 0 || C == 0 || !is_squarefree(D) || D % C != 0)
    throw std::invalid_argument("make_shape: need D squarefree and C | D");
  return LevelShape{D, C};
}

bool operator==(const CuspRep& a, const CuspRep& b) {
  return a.r == b.r && a.s == b.s && a.t == b.t && a.x == b.x;
}

Cusp make_cusp(const BigInt& a, const BigInt& c) {
  if (a == 0 && c == 0) throw std::invalid_argument("make_cusp: 0/0");
  BigInt g = gcd_big(a, c);
  Cusp p{a / g, c / g};
  if (p.c < 0) {
    p.a = -p.a;
    p.c = -p.c;
  }
  if (p.c == 0) p.a = 1;
  return p;
}

bool operator==(const Cusp& a, const Cusp& b) { return a.a == b.a && a.c == b.c; }

Cusp cusp_scale_num(const Cusp& p, std::uint64_t m) { return make_cusp(p.a * big(m), p.c); }

std::uint64_t canonical_x(std::uint64_t x_class, std::uint64_t t, std::uint64_t D) {
  if (t == 1) return 1;
  std::uint64_t x = x_class % t;
  if (x == 0 || std::gcd(x, t) != 1)
    throw std::invalid_argument("canonical_x: class not prime to t");
  while (std::gcd(x, D) != 1) x += t;
  return x;
}

bool valid_rep(const CuspRep& rep, const LevelShape& shape) {
  const auto [r, s, t, x] = rep;
  if (r == 0 || (shape.D / shape.C) % r != 0) return false;
  if (s == 0 || t == 0 || shape.C % s != 0 || shape.C % t != 0 || std::gcd(s, t) != 1)
    return false;
  if (std::gcd(x, shape.D) != 1) return false;
  return x == canonical_x(x, t, shape.D);
}

std::vector<CuspRep> enumerate_cusps(const LevelShape& shape) {
  std::vector<CuspRep> reps;
  for (std::uint64_t r : divisors(shape.D / shape.C))
    for (std::uint64_t s : divisors(shape.C))
      for (std::uint64_t t : divisors(shape.C)) {
        if (std::gcd(s, t) != 1) continue;
        for (std::uint64_t x0 = 1; x0 <= t; ++x0) {
          if (std::gcd(x0, t) != 1) continue;
          reps.push_back(CuspRep{r, s, t, canonical_x(x0, t, shape.D)});
          if (t == 1) break; // single class
        }
      }
  return reps;
}

std::uint64_t cusp_count(const LevelShape& shape) {
  std::uint64_t N = shape.N(), total = 0;
  for (std::uint64_t d : divisors(N)) total += euler_phi(std::gcd(d, N / d));
  return total;
}

Cusp rep_to_cusp(const CuspRep& rep, const LevelShape& shape) {
  if (!valid_rep(rep, shape)) throw std::invalid_argument("rep_to_cusp: invalid representative");
  std::uint64_t den = shape.N() / (rep.r * rep.s * rep.s * rep.t);
  return make_cusp(big(rep.x), big(den));
}

std::uint64_t cusp_width(const CuspRep& rep) { return rep.r * rep.s * rep.s; }

std::uint64_t gamma0_index(std::uint64_t N) {
  std::uint64_t idx = N;
  for (std::uint64_t p : prime_divisors(N)) idx = idx / p * (p + 1);
  return idx;
}

namespace {

// completion [a u; c v] in SL2(Z) of the primitive column (a, c)
struct Completion {
  BigInt u, v;
};

Completion complete_column(const Cusp& p) {
  if (p.c == 0) return Completion{BigInt(0), p.a}; // a = +-1
  BigInt v = p.c == 1 ? BigInt(0) : modinv(mod_pos(p.a, p.c), p.c);
  BigInt u = (p.a * v - 1) / p.c;
  return Completion{u, v};
}

} // namespace

bool cusp_equiv(const Cusp& p1, const Cusp& p2, std::uint64_t N) {
  BigInt bn = big(N);
  if (gcd_big(p1.c, bn) != gcd_big(p2.c, bn)) return false;
  BigInt v1 = complete_column(p1).v, v2 = complete_column(p2).v;
  BigInt G = gcd_big(p1.c * p2.c, bn);
  BigInt lhs = v1 * p2.c - v2 * p1.c;
  return mpz_divisible_p(lhs.get_mpz_t(), G.get_mpz_t()) != 0;
}

std::optional<std::array<BigInt, 4>> cusp_equiv_witness(const Cusp& p1, const Cusp& p2,
                                                        std::uint64_t N) {
  if (!cusp_equiv(p1, p2, N)) return std::nullopt;
  Completion m1 = complete_column(p1), m2 = complete_column(p2);
  // g = M2 T^n M1^{-1} has lower-left entry c2 v1 - c1 v2 - n c1 c2; solve
  // A n = rhs mod N with A = c1 c2 (solvable exactly when equivalent)
  BigInt bn = big(N);
  BigInt A = p1.c * p2.c;
  BigInt rhs = p2.c * m1.v - p1.c * m2.v;
  BigInt g = gcd_big(A, bn);
  BigInt n(0);
  BigInt nmod = bn / g;
  if (nmod > 1) n = mod_pos((rhs / g) * modinv(mod_pos(A / g, nmod), nmod), nmod);
  BigInt b2 = m2.u + p2.a * n; // second column of M2 T^n
  BigInt d2 = m2.v + p2.c * n;
  std::array<BigInt, 4> out{p2.a * m1.v - b2 * p1.c, -p2.a * m1.u + b2 * p1.a,
                            p2.c * m1.v - d2 * p1.c, -p2.c * m1.u + d2 * p1.a};
  return out;
}

std::vector<CuspRep> galois_orbit(const CuspRep& rep, const LevelShape& shape) {
  std::vector<CuspRep> orbit;
  for (std::uint64_t a = 1; a <= rep.t; ++a) {
    if (std::gcd(a, rep.t) != 1) continue;
    orbit.push_back(CuspRep{rep.r, rep.s, rep.t, canonical_x(a * rep.x, rep.t, shape.D)});
    if (rep.t == 1) break;
  }
  std::sort(orbit.begin(), orbit.end(),
            [](const CuspRep& a, const CuspRep& b) { return a.x < b.x; });
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

CuspRep normalize_point(const Cusp& p, const LevelShape& shape) {
  for (const CuspRep& rep : enumerate_cusps(shape))
    if (cusp_equiv(p, rep_to_cusp(rep, shape), shape.N())) return rep;
  throw std::logic_error("normalize_point: no representative matched");
}

MLPair divisor_to_ML(std::uint64_t d, const LevelShape& shape) {
  std::uint64_t N = shape.N();
  if (d == 0 || N % d != 0) throw std::invalid_argument("divisor_to_ML: d must divide DC");
  std::uint64_t DoverC = shape.D / shape.C;
  std::uint64_t d0 = std::gcd(d, DoverC);
  std::uint64_t dp = d / d0; // divides C^2; write it s^2 t with gcd(s,t) = 1
  std::uint64_t rad = 1;
  for (std::uint64_t p : prime_divisors(dp)) rad *= p;
  std::uint64_t s = dp / rad; // primes appearing squared
  std::uint64_t l = shape.C / s;
  return MLPair{d0 * rad, (DoverC / d0) * l};
}

std::uint64_t ML_to_divisor(const MLPair& ml, const LevelShape& shape) {
  std::uint64_t DoverC = shape.D / shape.C;
  if (ml.M == 0 || ml.L == 0 || shape.D % ml.M != 0 || shape.D % ml.L != 0)
    throw std::invalid_argument("ML_to_divisor: invalid pair");
  std::uint64_t d0 = std::gcd(ml.M, DoverC);
  std::uint64_t m = ml.M / d0; // s t
  std::uint64_t lpart = DoverC / d0;
  if (ml.L % lpart != 0) throw std::invalid_argument("ML_to_divisor: invalid pair");
  std::uint64_t l = ml.L / lpart; // C / s
  if (shape.C % l != 0) throw std::invalid_argument("ML_to_divisor: invalid pair");
  std::uint64_t s = shape.C / l;
  if (s == 0 || m % s != 0) throw std::invalid_argument("ML_to_divisor: invalid pair");
  std::uint64_t t = m / s;
  return d0 * s * s * t;
}

LoweredCusp lower_cusp(const CuspRep& rep, const LevelShape& shape, std::uint64_t p) {
  if (!valid_rep(rep, shape)) throw std::invalid_argument("lower_cusp: invalid representative");
  if (!is_prime(p) || shape.D % p != 0)
    throw std::invalid_argument("lower_cusp: p must be a prime dividing D");
  const auto [r, s, t, x] = rep;
  const std::uint64_t D = shape.D, C = shape.C;
  if (r % p == 0) {
    LevelShape sh = make_shape(D / p, C);
    return LoweredCusp{CuspRep{r / p, s, t, canonical_x(x, t, sh.D)}, sh, 1};
  }
  if (s % p == 0) {
    LevelShape sh = make_shape(D / p, C / p);
    return LoweredCusp{CuspRep{r, s / p, t, canonical_x(x, t, sh.D)}, sh, 2};
  }
  if (t % p == 0) {
    LevelShape sh = make_shape(D / p, C / p);
    std::uint64_t t2 = t / p;
    return LoweredCusp{CuspRep{r, s, t2, canonical_x(p * x, t2, sh.D)}, sh, 3};
  }
  if ((D / (C * r)) % p == 0) {
    LevelShape sh = make_shape(D / p, C);
    return LoweredCusp{CuspRep{r, s, t, canonical_x(p * x, t, sh.D)}, sh, 4};
  }
  // remaining case: p | C/(st)
  LevelShape sh = make_shape(D / p, C / p);
  return LoweredCusp{CuspRep{r, s, t, canonical_x(p * p * x, t, sh.D)}, sh, 5};
}

} // namespace x0eis
