#pragma once

#include "x0eis/arith.hpp"
#include "x0eis/quadext.hpp"

namespace x0eis {

// Primitive real Dirichlet character of odd squarefree conductor f, or the
// trivial character (f = 1); values are the Jacobi symbol (n|f).
struct QuadraticCharacter {
  std::uint64_t f = 1;
};

QuadraticCharacter quad_char(std::uint64_t f);
bool is_trivial(const QuadraticCharacter& chi);
int chi_eval(const QuadraticCharacter& chi, const BigInt& n);
// evaluation extended multiplicatively to rationals; the reduced numerator
// and denominator must both be prime to f
int chi_eval_rat(const QuadraticCharacter& chi, const Rational& q);
int chi_parity(const QuadraticCharacter& chi); // chi(-1)

// disc = chi(-1) * f, the square of the Gauss sum g(chi)
long gauss_disc(const QuadraticCharacter& chi);
QuadExt gauss_g(const QuadraticCharacter& chi); // the element g itself

// the constant-term normalizer: -(f / (4 g)) * sum_{a,b mod f} chi(a) chi(b) B2((a+b)/f);
// equals -1/24 for the trivial character, and a pure g-multiple otherwise
QuadExt n_psi(const QuadraticCharacter& chi);

// g(chi) / (f * n_psi(chi)), always rational; -24 for the trivial character
Rational g_over_f_npsi(const QuadraticCharacter& chi);

// B_{1,chi} = (1/f) sum_{a mod f} chi(a) a; the trivial character is rejected
Rational gen_bernoulli_b1(const QuadraticCharacter& chi);

// product of two quadratic characters with coprime conductors, primitive of
// conductor f1*f2
QuadraticCharacter char_product(const QuadraticCharacter& a, const QuadraticCharacter& b);

} // namespace x0eis
