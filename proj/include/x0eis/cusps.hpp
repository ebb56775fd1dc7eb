#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "x0eis/arith.hpp"

namespace x0eis {

// Level N = D*C with D squarefree and C | D. Every level whose exponents are
// at most 2 arises this way, uniquely.
struct LevelShape {
  std::uint64_t D = 1;
  std::uint64_t C = 1;
  std::uint64_t N() const { return D * C; }
};

LevelShape make_shape(std::uint64_t D, std::uint64_t C);

// Cusp representative r s^2 t x / DC with r | D/C, s | C, t | C, gcd(s,t)=1,
// x prime to D and taken mod t (canonical: smallest such positive integer).
struct CuspRep {
  std::uint64_t r = 1, s = 1, t = 1, x = 1;
};

bool operator==(const CuspRep& a, const CuspRep& b);

// Point of P^1(Q) in lowest terms with c >= 0; infinity is 1/0.
struct Cusp {
  BigInt a;
  BigInt c;
};

Cusp make_cusp(const BigInt& a, const BigInt& c);
bool operator==(const Cusp& a, const Cusp& b);
Cusp cusp_scale_num(const Cusp& p, std::uint64_t m); // the point m*a/c, reduced

std::uint64_t canonical_x(std::uint64_t x_class, std::uint64_t t, std::uint64_t D);
bool valid_rep(const CuspRep& rep, const LevelShape& shape);

std::vector<CuspRep> enumerate_cusps(const LevelShape& shape);
std::uint64_t cusp_count(const LevelShape& shape); // divisor-sum formula, independent path
Cusp rep_to_cusp(const CuspRep& rep, const LevelShape& shape);
std::uint64_t cusp_width(const CuspRep& rep); // r s^2
std::uint64_t gamma0_index(std::uint64_t N);  // [SL2(Z) : Gamma_0(N)]

// Gamma_0(N)-equivalence of points, by the classical criterion: the
// denominators must have the same gcd with N, and s1 c2 = s2 c1 mod
// gcd(c1 c2, N) where s_i inverts the numerator mod the denominator.
bool cusp_equiv(const Cusp& p1, const Cusp& p2, std::uint64_t N);

// When equivalent, produces g = [a b; c d] in Gamma_0(N) with g p1 = p2
// (as column vectors, exactly). Returns nothing when inequivalent.
std::optional<std::array<BigInt, 4>> cusp_equiv_witness(const Cusp& p1, const Cusp& p2,
                                                        std::uint64_t N);

std::vector<CuspRep> galois_orbit(const CuspRep& rep, const LevelShape& shape);

// the representative equivalent to a given point
CuspRep normalize_point(const Cusp& p, const LevelShape& shape);

struct MLPair {
  std::uint64_t M = 1, L = 1;
};

// bijection between divisors d | DC and pairs M,L | D with D | ML | DC,
// matching gcd(d, DC/d) = gcd(M, L) and sending 1 to (1, D)
MLPair divisor_to_ML(std::uint64_t d, const LevelShape& shape);
std::uint64_t ML_to_divisor(const MLPair& ml, const LevelShape& shape);

// image of a cusp under lowering by a prime p | D, with the shape it lands on
struct LoweredCusp {
  CuspRep rep;
  LevelShape shape;
  int case_id = 0; // 1: p|r, 2: p|s, 3: p|t, 4: p|D/(Cr), 5: p|C/(st)
};

LoweredCusp lower_cusp(const CuspRep& rep, const LevelShape& shape, std::uint64_t p);

} // namespace x0eis
