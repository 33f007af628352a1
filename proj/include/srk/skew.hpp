#ifndef SRK_SKEW_HPP_
#define SRK_SKEW_HPP_

#include <vector>

#include "srk/gf.hpp"

namespace srk::skew {

using gf::Fel;
using gf::Field;
using gf::FieldPtr;

// Element of F_{q^m}[x; sigma] with sigma = (y -> y^q)^s, gcd(s, m) = 1.
// Multiplication is twisted: x * a = sigma(a) * x.
struct SkewPoly {
  FieldPtr field;
  unsigned sigma_power = 1;
  std::vector<Fel> coeffs;  // f_0, ..., f_d, trailing zeros trimmed

  SkewPoly(FieldPtr f, unsigned s, std::vector<Fel> c);
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return int(coeffs.size()) - 1; }
  Fel coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
};

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_scale(Fel c, const SkewPoly& f);

// Twisted partial norm N_i(a) = prod_{j=0}^{i-1} sigma^j(a).
Fel n_i(const Field& F, unsigned sigma_power, Fel a, unsigned i);

// Generalized operator evaluation f(beta)_a = sum_i f_i sigma^i(beta) N_i(a).
Fel op_eval(const SkewPoly& f, Fel beta, Fel a);

// Pure sigma-evaluation f(beta) = sum_i f_i sigma^i(beta) (the a = 1 case).
Fel sigma_eval(const SkewPoly& f, Fel beta);

// Evaluation data: points a_i with pairwise distinct norms, beta_j an
// F_q-independent tuple. Validated at construction.
struct EvaluationPair {
  FieldPtr field;
  unsigned sigma_power = 1;
  std::vector<Fel> a;     // t nonzero elements, distinct norms
  std::vector<Fel> beta;  // n F_q-independent elements

  EvaluationPair(FieldPtr f, unsigned s, std::vector<Fel> a_in, std::vector<Fel> b_in);
  unsigned t() const { return unsigned(a.size()); }
  unsigned n() const { return unsigned(beta.size()); }
};

// The blocked evaluation vector (f(beta_1)_{a_1},...,f(beta_n)_{a_1} | ...),
// t blocks of length n.
std::vector<Fel> ev_multi(const SkewPoly& f, const EvaluationPair& pair);

// The infinity evaluation f(delta)_inf = delta * f_{k-1}.
Fel eval_inf(const SkewPoly& f, Fel delta, unsigned k);

// dim_{F_q} of {beta : sigma_eval(f, beta) = 0}; at most deg f.
unsigned kernel_dim(const SkewPoly& f);

}  // namespace srk::skew

#endif  // SRK_SKEW_HPP_
