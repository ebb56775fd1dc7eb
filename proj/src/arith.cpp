#include "x0eis/arith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace x0eis {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

BigInt rat_num(const Rational& q) { return q.get_num(); }
BigInt rat_den(const Rational& q) { return q.get_den(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt rat_floor(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Rational frac_part(const Rational& q) { return q - Rational(rat_floor(q)); }

long v2_int(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("v2_int: zero");
  return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

long v2_rat(const Rational& q) {
  if (q == 0) throw std::invalid_argument("v2_rat: zero");
  return v2_int(q.get_num()) - v2_int(q.get_den());
}

bool denominator_odd(const Rational& q) { return mpz_odd_p(q.get_den_mpz_t()) != 0; }

Rational rat_gcd(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("rat_gcd: both zero");
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  // gcd(n1/d1, n2/d2) = gcd(n1*d2, n2*d1) / (d1*d2)
  BigInt g;
  BigInt x = a.get_num() * b.get_den();
  BigInt y = b.get_num() * a.get_den();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return make_rational(g, a.get_den() * b.get_den());
}

BigInt lattice_quotient_order(const Rational& u, const Rational& v) {
  if (u == 0 || v == 0) throw std::invalid_argument("lattice_quotient_order: zero input");
  Rational q = abs(v) / rat_gcd(u, v);
  if (!is_integer(q)) throw std::logic_error("lattice_quotient_order: non-integral quotient");
  return q.get_num();
}

namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1u << 16;
    std::vector<bool> comp(limit, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i < limit; ++i) {
      if (comp[i]) continue;
      ps.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) comp[j] = true;
    }
    return ps;
  }();
  return primes;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// Pollard-Brent; n must be composite, odd, not a prime power handled elsewhere
std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  std::uint64_t c = 1;
  for (;;) {
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t q = 1;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = (mulmod_u64(y, y, n) + c) % n;
      int k = 0;
      while (k < lam && d == 1) {
        std::uint64_t ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = (mulmod_u64(y, y, n) + c) % n;
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        if (d == n) {
          // backtrack one step at a time
          d = 1;
          y = ys;
          do {
            y = (mulmod_u64(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
          } while (d == 1);
          break;
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != n) return d;
    ++c; // rare: retry with a different polynomial
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  BigInt z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  Factorization F;
  for (std::uint32_t p : small_primes()) {
    if (std::uint64_t(p) * p > n) break;
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      F.factors.emplace_back(p, e);
    }
  }
  if (n > 1) {
    if (is_prime(n)) {
      F.factors.emplace_back(n, 1);
    } else {
      std::vector<std::uint64_t> rest;
      factor_rec(n, rest);
      std::sort(rest.begin(), rest.end());
      for (std::size_t i = 0; i < rest.size();) {
        std::size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        F.factors.emplace_back(rest[i], static_cast<int>(j - i));
        i = j;
      }
    }
  }
  return F;
}

const Factorization& factorize_cached(std::uint64_t n) {
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, Factorization> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, factorize(n)).first;
  return it->second;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  const Factorization& F = factorize_cached(n);
  std::vector<std::uint64_t> ds{1};
  for (const auto& [p, e] : F.factors) {
    std::size_t sz = ds.size();
    std::uint64_t pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (const auto& [p, e] : factorize_cached(n).factors) ps.push_back(p);
  return ps;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize_cached(n).factors)
    if (e > 1) return false;
  return true;
}

int vp_u64(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw std::invalid_argument("vp_u64: bad input");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (const auto& [p, e] : factorize_cached(n).factors) r = r / p * (p - 1);
  return r;
}

int nu_omega(std::uint64_t n) {
  int r = 0;
  for (const auto& [p, e] : factorize_cached(n).factors) r += e;
  return r;
}

std::uint64_t mu_plus(std::uint64_t n) {
  if (!is_squarefree(n)) throw std::invalid_argument("mu_plus: not squarefree");
  std::uint64_t r = 1;
  for (const auto& [p, e] : factorize_cached(n).factors) r *= p + 1;
  return r;
}

std::uint64_t varpi(std::uint64_t n) {
  if (!is_squarefree(n)) throw std::invalid_argument("varpi: not squarefree");
  std::uint64_t r = 1;
  for (const auto& [p, e] : factorize_cached(n).factors) r *= p * p - 1;
  return r;
}

int jacobi(const BigInt& a, const BigInt& n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

Rational bernoulli2(const Rational& x) {
  Rational t = frac_part(x);
  return t * t - t + make_rational(1, 6);
}

Rational sawtooth(const Rational& x) {
  if (is_integer(x)) return Rational(0);
  return frac_part(x) - make_rational(1, 2);
}

bool is_unit_in_localization(const Rational& q, std::uint64_t m) {
  if (q == 0) return false;
  BigInt num = abs(q.get_num());
  BigInt den = q.get_den();
  for (std::uint64_t p : prime_divisors(m)) {
    BigInt bp(static_cast<unsigned long>(p));
    while (mpz_divisible_p(num.get_mpz_t(), bp.get_mpz_t())) num /= bp;
    while (mpz_divisible_p(den.get_mpz_t(), bp.get_mpz_t())) den /= bp;
  }
  return num == 1 && den == 1;
}

std::uint64_t odd_part(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("odd_part: zero");
  while (n % 2 == 0) n /= 2;
  return n;
}

BigInt odd_part(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("odd_part: zero");
  BigInt r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), n.get_mpz_t(), mpz_scan1(n.get_mpz_t(), 0));
  return abs(r);
}

} // namespace x0eis
