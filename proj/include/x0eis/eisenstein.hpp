#pragma once

#include <utility>
#include <vector>

#include "x0eis/characters.hpp"
#include "x0eis/cusps.hpp"
#include "x0eis/qseries.hpp"

namespace x0eis {

// Index (M, L, psi) of a weight-2 Eisenstein basis element on the shape
// (D, C): M and L divide D, M > 1, D | M*L, M*L | D*C, and the conductor of
// psi divides gcd(M, L).
struct EisIndex {
  std::uint64_t M = 1;
  std::uint64_t L = 1;
  QuadraticCharacter psi;
};

bool operator==(const EisIndex& a, const EisIndex& b);

EisIndex make_index(std::uint64_t M, std::uint64_t L, const QuadraticCharacter& psi,
                    const LevelShape& shape);

// number of basis indices over all characters of modulus gcd(M, L); equals
// cusp_count(shape) - 1
std::uint64_t count_eisenstein_indices(const LevelShape& shape);

// the indices whose character is real, in deterministic (M, L, f) order
std::vector<EisIndex> enumerate_quadratic_indices(const LevelShape& shape);

// q-expansion of E_{M,L,psi} to truncation T, tagged with level M*L. Built
// from the closed coefficient formula and independently by applying the
// bracket operators to the level-f^2 seed; any disagreement throws.
QExpansion eis_qexp(const EisIndex& idx, const LevelShape& shape, std::int64_t T);

// T_ell eigenvalue of E_{M,L,psi} at level D*C
BigInt eigenvalue(const EisIndex& idx, const LevelShape& shape, std::uint64_t ell);

struct EigenReport {
  bool pass = true;
  std::uint64_t first_ell = 0; // set on the first failing prime
  std::int64_t first_n = -1;   // offending coefficient index
};

// checks T_ell E = eigenvalue * E on coefficients 0..T for each listed prime
EigenReport verify_eigenform(const EisIndex& idx, const LevelShape& shape, std::int64_t T,
                             const std::vector<std::uint64_t>& primes);

// constant term of E_{M,L,psi} at the cusp [rep], closed formula
QuadExt constant_term(const EisIndex& idx, const CuspRep& rep, const LevelShape& shape);

// the same value computed recursively: peel one bracket operator at a time,
// tracking the cusp as a rational point, down to the level-f^2 seed
QuadExt constant_term_oracle(const EisIndex& idx, const CuspRep& rep, const LevelShape& shape);

// width * constant term per cusp; the entries always sum to zero
std::vector<std::pair<CuspRep, QuadExt>> residue_divisor(const EisIndex& idx,
                                                         const LevelShape& shape);

// generator of the Z-module spanned by the residue-divisor entries: the
// closed form, and the brute gcd over the entries (equal up to sign)
QuadExt r_lattice_gen(const EisIndex& idx, const LevelShape& shape);
QuadExt r_lattice_gen_brute(const EisIndex& idx, const LevelShape& shape);

struct CuspidalOrder {
  BigInt order;
  std::vector<std::uint64_t> inverted; // primes localized away
  Rational u, v;                       // order = [uZ + vZ : vZ]
};

// order of the cuspidal divisor class attached to (M, L, psi), valid after
// inverting the listed primes
CuspidalOrder cuspidal_order(const EisIndex& idx, const LevelShape& shape);

// closed-form order for a trivial character: (N-1)/gcd(12, N-1) when N = D*C
// is prime, else phi(D) mu+(L) gcd(D/M, C) / gcd(24, ...) for odd D
BigInt order_nml(const EisIndex& idx, const LevelShape& shape);

struct LSeriesReport {
  bool pass = true;
  std::int64_t first_n = -1;
};

// compares the Dirichlet coefficients of sum a_n(E) chi(n) n^{-s} with the
// Euler-factored form built from sigma_{chi psi} for n = 1..nmax
LSeriesReport lseries_check(const EisIndex& idx, const LevelShape& shape,
                            const QuadraticCharacter& chi, std::int64_t nmax);

// completed twisted value at s = 1; zero exactly when chi*psi is even
QuadExt lambda_value(const EisIndex& idx, const LevelShape& shape,
                     const QuadraticCharacter& chi);

struct UnitCheckReport {
  bool pass = true;
  std::uint64_t nonzero_entries = 0;
};

// every nonzero residue-divisor entry of E_{D,D} on the shape (D, D) is a
// unit in Z localized away from 6 D varpi(D)
UnitCheckReport edd_unit_check(std::uint64_t D);

} // namespace x0eis
