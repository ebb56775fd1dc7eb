#include "x0eis/eisenstein.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace x0eis {

namespace {

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

BigInt big(std::uint64_t n) { return BigInt(static_cast<unsigned long>(n)); }

Rational ratio(std::uint64_t n) { return Rational(static_cast<unsigned long>(n)); }

} // namespace

bool operator==(const EisIndex& a, const EisIndex& b) {
  return a.M == b.M && a.L == b.L && a.psi.f == b.psi.f;
}

EisIndex make_index(std::uint64_t M, std::uint64_t L, const QuadraticCharacter& psi,
                    const LevelShape& shape) {
  if (M < 2 || L == 0 || shape.D % M != 0 || shape.D % L != 0)
    throw std::invalid_argument("make_index: need M, L dividing D with M > 1");
  if ((M * L) % shape.D != 0 || (shape.D * shape.C) % (M * L) != 0)
    throw std::invalid_argument("make_index: need D | M*L and M*L | D*C");
  if (gcd_u(M, L) % psi.f != 0)
    throw std::invalid_argument("make_index: conductor must divide gcd(M, L)");
  return EisIndex{M, L, psi};
}

std::uint64_t count_eisenstein_indices(const LevelShape& shape) {
  std::uint64_t N = shape.N(), total = 0;
  for (std::uint64_t d : divisors(N))
    if (d > 1) total += euler_phi(gcd_u(d, N / d));
  return total;
}

std::vector<EisIndex> enumerate_quadratic_indices(const LevelShape& shape) {
  std::vector<EisIndex> out;
  for (std::uint64_t M : divisors(shape.D)) {
    if (M == 1) continue;
    for (std::uint64_t L : divisors(shape.D)) {
      if ((M * L) % shape.D != 0 || (shape.D * shape.C) % (M * L) != 0) continue;
      out.push_back(EisIndex{M, L, quad_char(1)});
      for (std::uint64_t f : divisors(gcd_u(M, L)))
        if (f > 1 && f % 2 == 1) out.push_back(EisIndex{M, L, quad_char(f)});
    }
  }
  return out;
}

QExpansion eis_qexp(const EisIndex& idx, const LevelShape& shape, std::int64_t T) {
  const std::uint64_t f = idx.psi.f;
  QExpansion closed = make_qexp(static_cast<std::int64_t>(idx.M * idx.L), T);
  if (f == 1 && idx.L == 1) {
    Rational a0 = make_rational(-1, 24) * ratio(euler_phi(shape.D));
    if (nu_omega(shape.D) % 2 != 0) a0 = -a0;
    closed.at(0) = QuadExt(a0);
  }
  for (std::int64_t n = 1; n <= T; ++n) {
    int ps = chi_eval(idx.psi, BigInt(n));
    if (ps == 0) continue;
    BigInt s = sigma_ML(idx.M, idx.L, shape.D, f, static_cast<std::uint64_t>(n));
    closed.at(n) = QuadExt(Rational(ps) * Rational(s));
  }
  QExpansion ops = e_psi_qexp(idx.psi, T);
  for (std::uint64_t p : prime_divisors(idx.M / f)) ops = bracket_plus(ops, p, idx.psi);
  for (std::uint64_t p : prime_divisors(idx.L / f)) ops = bracket_minus(ops, p, idx.psi);
  if (!qexp_equal(closed, ops))
    throw std::logic_error("eis_qexp: closed form and operator route disagree");
  return closed;
}

BigInt eigenvalue(const EisIndex& idx, const LevelShape& shape, std::uint64_t ell) {
  if (!is_prime(ell)) throw std::invalid_argument("eigenvalue: ell must be prime");
  BigInt pl = big(ell);
  if (shape.D % ell != 0) return BigInt(chi_eval(idx.psi, pl)) * (pl + 1);
  if (gcd_u(idx.M, idx.L) % ell == 0) return BigInt(0);
  int ps = chi_eval(idx.psi, pl);
  if (idx.M % ell == 0) return BigInt(ps);
  return BigInt(ps) * pl;
}

EigenReport verify_eigenform(const EisIndex& idx, const LevelShape& shape, std::int64_t T,
                             const std::vector<std::uint64_t>& primes) {
  EigenReport report;
  if (primes.empty() || T < 0) return report;
  std::uint64_t ellmax = *std::max_element(primes.begin(), primes.end());
  QExpansion base = eis_qexp(idx, shape, static_cast<std::int64_t>(ellmax) * T);
  QExpansion at_n = promote_level(base, static_cast<std::int64_t>(shape.N()));
  QExpansion expect = truncate(at_n, T);
  for (std::uint64_t ell : primes) {
    QExpansion lhs = hecke(at_n, ell, T);
    QExpansion rhs = qexp_scale(expect, QuadExt(Rational(eigenvalue(idx, shape, ell))));
    if (qexp_equal(lhs, rhs)) continue;
    report.pass = false;
    report.first_ell = ell;
    for (std::int64_t n = 0; n <= T; ++n)
      if (lhs.at(n) != rhs.at(n)) {
        report.first_n = n;
        break;
      }
    return report;
  }
  return report;
}

QuadExt constant_term(const EisIndex& idx, const CuspRep& rep, const LevelShape& shape) {
  if (!valid_rep(rep, shape))
    throw std::invalid_argument("constant_term: invalid representative");
  const std::uint64_t f = idx.psi.f, g = gcd_u(idx.M, idx.L);
  const auto [r, s, t, x] = rep;
  if (gcd_u(s, f) != 1) return QuadExt();
  if ((s * t) % g != 0) return QuadExt();
  if ((r * s) % (shape.D / idx.M) != 0) return QuadExt();
  // under the three conditions f, r, s are pairwise coprime divisors of D
  const std::uint64_t frs = f * r * s;
  if (shape.D % frs != 0) throw std::logic_error("constant_term: frs does not divide D");
  const std::uint64_t Lf = idx.L / f;
  Rational scale = ratio(euler_phi(shape.D / f)) * ratio(mu_plus(Lf)) / ratio(Lf);
  BigInt den = big(f);
  den *= r;
  den *= s;
  den *= s;
  den *= t;
  den *= x;
  Rational arg = make_rational(big(shape.D) * big(shape.C), den);
  int sign = nu_omega(shape.D / frs) % 2 == 0 ? 1 : -1;
  int psarg = chi_eval_rat(idx.psi, arg);
  Rational c = Rational(sign * psarg) / ratio(r * s);
  for (std::uint64_t p : prime_divisors(gcd_u(s, g / f)))
    c *= Rational(1) - make_rational(1, static_cast<long>(p));
  return quad_scale(n_psi(idx.psi), scale * c);
}

namespace {

struct PeelOp {
  std::uint64_t p = 0;
  bool plus = false;
};

// constant term of the level-f^2 seed series at the rational point P
QuadExt seed_constant(const QuadraticCharacter& psi, const Cusp& P) {
  if (psi.f == 1) return QuadExt(make_rational(-1, 24));
  LevelShape base = make_shape(psi.f, psi.f);
  CuspRep rep = normalize_point(P, base);
  if (rep.s != 1 || rep.t != psi.f) return QuadExt();
  return quad_scale(n_psi(psi), Rational(chi_eval(psi, big(rep.x))));
}

QuadExt peel(const std::vector<PeelOp>& ops, std::size_t i, const QuadraticCharacter& psi,
             const Cusp& P) {
  if (i == ops.size()) return seed_constant(psi, P);
  const PeelOp& op = ops[i];
  BigInt bp = big(op.p);
  bool pdiv = mpz_divisible_p(P.c.get_mpz_t(), bp.get_mpz_t()) != 0;
  Rational ps(chi_eval(psi, bp));
  Rational factor;
  if (op.plus)
    factor = pdiv ? Rational(ps * Rational(bp)) : Rational(ps / Rational(bp));
  else
    factor = pdiv ? ps : Rational(ps / (Rational(bp) * Rational(bp)));
  QuadExt head = peel(ops, i + 1, psi, P);
  QuadExt tail = peel(ops, i + 1, psi, cusp_scale_num(P, op.p));
  return head - quad_scale(tail, factor);
}

} // namespace

QuadExt constant_term_oracle(const EisIndex& idx, const CuspRep& rep, const LevelShape& shape) {
  if (!valid_rep(rep, shape))
    throw std::invalid_argument("constant_term_oracle: invalid representative");
  std::vector<PeelOp> ops;
  // outermost first: the minus brackets were applied after the plus brackets
  for (std::uint64_t p : prime_divisors(idx.L / idx.psi.f)) ops.push_back(PeelOp{p, false});
  for (std::uint64_t p : prime_divisors(idx.M / idx.psi.f)) ops.push_back(PeelOp{p, true});
  return peel(ops, 0, idx.psi, rep_to_cusp(rep, shape));
}

std::vector<std::pair<CuspRep, QuadExt>> residue_divisor(const EisIndex& idx,
                                                         const LevelShape& shape) {
  std::vector<std::pair<CuspRep, QuadExt>> out;
  for (const CuspRep& rep : enumerate_cusps(shape))
    out.emplace_back(rep, quad_scale(constant_term(idx, rep, shape), ratio(cusp_width(rep))));
  return out;
}

QuadExt r_lattice_gen(const EisIndex& idx, const LevelShape& shape) {
  const std::uint64_t f = idx.psi.f, Lf = idx.L / f;
  Rational scale = ratio(euler_phi(shape.D / f)) * ratio(mu_plus(Lf)) *
                   ratio(gcd_u(shape.D / idx.M, shape.C)) / ratio(Lf);
  return quad_scale(n_psi(idx.psi), scale);
}

QuadExt r_lattice_gen_brute(const EisIndex& idx, const LevelShape& shape) {
  QuadExt npsi = n_psi(idx.psi);
  Rational g;
  bool any = false;
  for (const auto& [rep, val] : residue_divisor(idx, shape)) {
    if (quad_is_zero(val)) continue;
    QuadExt ratio_q = val / npsi;
    if (!quad_is_rational(ratio_q))
      throw std::logic_error("r_lattice_gen_brute: residue not an n_psi multiple");
    g = any ? rat_gcd(g, ratio_q.rat) : Rational(abs(ratio_q.rat));
    any = true;
  }
  if (!any) throw std::logic_error("r_lattice_gen_brute: all residues vanish");
  return quad_scale(npsi, g);
}

CuspidalOrder cuspidal_order(const EisIndex& idx, const LevelShape& shape) {
  const std::uint64_t f = idx.psi.f, g = gcd_u(idx.M, idx.L);
  CuspidalOrder out;
  out.u = g_over_f_npsi(idx.psi);
  out.v = ratio(euler_phi(shape.D / f)) * ratio(mu_plus(idx.L / f)) *
          ratio(gcd_u(shape.D / idx.M, shape.C));
  out.order = lattice_quotient_order(out.u, out.v);
  out.inverted = g == 1 ? std::vector<std::uint64_t>{2} : prime_divisors(g);
  return out;
}

BigInt order_nml(const EisIndex& idx, const LevelShape& shape) {
  if (!is_trivial(idx.psi))
    throw std::invalid_argument("order_nml: defined for the trivial character");
  const std::uint64_t N = shape.N();
  if (is_prime(N)) {
    const std::uint64_t n1 = N - 1;
    return big(n1 / gcd_u(12, n1));
  }
  if (shape.D % 2 == 0)
    throw std::invalid_argument("order_nml: composite level requires odd D");
  BigInt v = big(euler_phi(shape.D)) * big(mu_plus(idx.L)) *
             big(gcd_u(shape.D / idx.M, shape.C));
  return v / gcd(v, BigInt(24));
}

LSeriesReport lseries_check(const EisIndex& idx, const LevelShape& shape,
                            const QuadraticCharacter& chi, std::int64_t nmax) {
  QuadraticCharacter prod = char_product(chi, idx.psi);
  const std::uint64_t f = idx.psi.f;
  std::vector<BigInt> a(static_cast<std::size_t>(nmax) + 1), b(a.size());
  for (std::int64_t n = 1; n <= nmax; ++n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    int twist = chi_eval(idx.psi, BigInt(n)) * chi_eval(chi, BigInt(n));
    if (twist != 0) a[un] = sigma_ML(idx.M, idx.L, shape.D, f, un) * twist;
    BigInt acc(0);
    for (std::uint64_t d : divisors(un)) {
      int cd = chi_eval(prod, big(d)) * chi_eval(prod, big(un / d));
      if (cd != 0) acc += big(d) * cd;
    }
    b[un] = acc;
  }
  // multiply through the Euler factors, highest index first so each update
  // reads the not-yet-updated coefficient at n/p
  for (std::uint64_t p : prime_divisors(idx.M / f)) {
    BigInt mult = BigInt(chi_eval(prod, big(p))) * big(p);
    for (std::int64_t n = nmax; n >= 1; --n)
      if (n % static_cast<std::int64_t>(p) == 0)
        b[static_cast<std::size_t>(n)] -= mult * b[static_cast<std::size_t>(n) / p];
  }
  for (std::uint64_t p : prime_divisors(idx.L / f)) {
    BigInt mult(chi_eval(prod, big(p)));
    for (std::int64_t n = nmax; n >= 1; --n)
      if (n % static_cast<std::int64_t>(p) == 0)
        b[static_cast<std::size_t>(n)] -= mult * b[static_cast<std::size_t>(n) / p];
  }
  LSeriesReport report;
  for (std::int64_t n = 1; n <= nmax; ++n)
    if (a[static_cast<std::size_t>(n)] != b[static_cast<std::size_t>(n)]) {
      report.pass = false;
      report.first_n = n;
      return report;
    }
  return report;
}

QuadExt lambda_value(const EisIndex& idx, const LevelShape&, const QuadraticCharacter& chi) {
  QuadraticCharacter prod = char_product(chi, idx.psi);
  if (chi_parity(prod) == 1) return QuadExt();
  const std::uint64_t f = idx.psi.f;
  int cmf = chi_eval(chi, -big(f));
  int pfc = chi_eval(idx.psi, big(chi.f));
  QuadExt val = quad_scale(gauss_g(idx.psi), Rational(-cmf * pfc) / ratio(2 * f));
  for (std::uint64_t p : prime_divisors(idx.M / f))
    val = quad_scale(val, Rational(1 - chi_eval(prod, big(p))));
  for (std::uint64_t p : prime_divisors(idx.L / f))
    val = quad_scale(val, Rational(1) - Rational(chi_eval(prod, big(p))) / ratio(p));
  Rational B = gen_bernoulli_b1(prod);
  return quad_scale(val, B * B);
}

UnitCheckReport edd_unit_check(std::uint64_t D) {
  if (D < 2 || D % 2 == 0 || !is_squarefree(D))
    throw std::invalid_argument("edd_unit_check: need odd squarefree D > 1");
  LevelShape shape = make_shape(D, D);
  EisIndex idx = make_index(D, D, quad_char(1), shape);
  const std::uint64_t m = 6 * D * varpi(D);
  UnitCheckReport out;
  for (const auto& [rep, val] : residue_divisor(idx, shape)) {
    if (quad_is_zero(val)) continue;
    ++out.nonzero_entries;
    if (!quad_is_rational(val) || !is_unit_in_localization(val.rat, m)) out.pass = false;
  }
  if (out.nonzero_entries == 0) out.pass = false;
  return out;
}

} // namespace x0eis
