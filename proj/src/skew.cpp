#include "srk/skew.hpp"

#include <numeric>
#include <set>

#include "srk/fqlin.hpp"

namespace srk::skew {
namespace {

void check_sigma(const Field& F, unsigned s) {
  if (s == 0 || std::gcd(s, F.m()) != 1)
    throw Error("BadParameter", "sigma power must be coprime to m");
}

void check_match(const SkewPoly& f, const SkewPoly& g) {
  if (!f.field->same_as(*g.field) || f.sigma_power != g.sigma_power)
    throw Error("SigmaMismatch", "operands from different rings");
}

}  // namespace

SkewPoly::SkewPoly(FieldPtr f, unsigned s, std::vector<Fel> c)
    : field(std::move(f)), sigma_power(s), coeffs(std::move(c)) {
  check_sigma(*field, s);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g) {
  check_match(f, g);
  const Field& F = *f.field;
  std::vector<Fel> c(std::max(f.coeffs.size(), g.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(f.coeff(i), g.coeff(i));
  return SkewPoly(f.field, f.sigma_power, std::move(c));
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
  check_match(f, g);
  const Field& F = *f.field;
  if (f.is_zero() || g.is_zero()) return SkewPoly(f.field, f.sigma_power, {});
  std::vector<Fel> c(f.coeffs.size() + g.coeffs.size() - 1, 0);
  // x^i * g_j = sigma^i(g_j) x^i, so (f g)_{i+j} += f_i sigma^i(g_j).
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      Fel gj = F.frobenius(g.coeffs[j], (unsigned(i) * f.sigma_power) % F.m());
      c[i + j] = F.add(c[i + j], F.mul(f.coeffs[i], gj));
    }
  }
  return SkewPoly(f.field, f.sigma_power, std::move(c));
}

SkewPoly skew_scale(Fel c, const SkewPoly& f) {
  const Field& F = *f.field;
  std::vector<Fel> out(f.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(c, f.coeffs[i]);
  return SkewPoly(f.field, f.sigma_power, std::move(out));
}

Fel n_i(const Field& F, unsigned sigma_power, Fel a, unsigned i) {
  check_sigma(F, sigma_power);
  Fel r = 1;
  for (unsigned j = 0; j < i; ++j)
    r = F.mul(r, F.frobenius(a, (j * sigma_power) % F.m()));
  return r;
}

Fel op_eval(const SkewPoly& f, Fel beta, Fel a) {
  const Field& F = *f.field;
  Fel s = 0, ni = 1;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] != 0) {
      Fel sb = F.frobenius(beta, (unsigned(i) * f.sigma_power) % F.m());
      s = F.add(s, F.mul(F.mul(f.coeffs[i], sb), ni));
    }
    ni = F.mul(ni, F.frobenius(a, (unsigned(i) * f.sigma_power) % F.m()));
  }
  return s;
}

Fel sigma_eval(const SkewPoly& f, Fel beta) { return op_eval(f, beta, 1); }

EvaluationPair::EvaluationPair(FieldPtr f, unsigned s, std::vector<Fel> a_in,
                               std::vector<Fel> b_in)
    : field(std::move(f)), sigma_power(s), a(std::move(a_in)), beta(std::move(b_in)) {
  const Field& F = *field;
  check_sigma(F, s);
  if (a.empty() || beta.empty())
    throw Error("InvalidPair", "a and beta must be nonempty");
  std::set<Fel> norms;
  for (Fel ai : a) {
    if (ai == 0) throw Error("InvalidPair", "a_i must be nonzero");
    if (!norms.insert(F.norm(ai)).second)
      throw Error("InvalidPair", "norms of a_i must be pairwise distinct");
  }
  if (fqlin::rank_q(F, beta) != beta.size())
    throw Error("InvalidPair", "beta must be F_q-linearly independent");
}

std::vector<Fel> ev_multi(const SkewPoly& f, const EvaluationPair& pair) {
  if (!f.field->same_as(*pair.field) || f.sigma_power != pair.sigma_power)
    throw Error("SigmaMismatch", "polynomial and pair from different rings");
  std::vector<Fel> out;
  out.reserve(std::size_t(pair.t()) * pair.n());
  for (Fel ai : pair.a)
    for (Fel bj : pair.beta) out.push_back(op_eval(f, bj, ai));
  return out;
}

Fel eval_inf(const SkewPoly& f, Fel delta, unsigned k) {
  if (f.degree() >= int(k)) throw Error("DegreeTooLarge", "deg f must be < k");
  return f.field->mul(delta, f.coeff(k - 1));
}

unsigned kernel_dim(const SkewPoly& f) {
  const Field& F = *f.field;
  if (f.is_zero()) throw Error("ZeroPolynomial", "kernel of the zero polynomial");
  if (F.size() > (1u << 16)) throw Error("FieldTooLarge", "kernel enumeration bound");
  std::uint64_t roots = 0;
  for (Fel b : F.elements())
    if (sigma_eval(f, b) == 0) ++roots;
  // the root set is an F_q-subspace, so roots = q^dim
  unsigned dim = 0;
  std::uint64_t pw = 1;
  while (pw < roots) {
    pw *= F.q();
    ++dim;
  }
  return dim;
}

}  // namespace srk::skew
