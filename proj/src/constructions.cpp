#include "srk/constructions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "srk/fqlin.hpp"

namespace srk::constructions {
namespace {

using skew::SkewPoly;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// --- dense polynomials over F_{q^m}, low-degree-first ---

using Poly = std::vector<Fel>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(const Field& F, Poly a, const Poly& f) {
  // f monic
  while (a.size() >= f.size()) {
    Fel lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - f.size();
      for (std::size_t i = 0; i < f.size(); ++i)
        a[shift + i] = F.sub(a[shift + i], F.mul(lead, f[i]));
    }
    a.pop_back();
    trim(a);
    if (a.size() < f.size()) break;
  }
  trim(a);
  return a;
}

Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return poly_mod(F, std::move(c), f);
}

Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& f) {
  Poly r = {1};
  base = poly_mod(F, std::move(base), f);
  while (e) {
    if (e & 1) r = poly_mulmod(F, r, base, f);
    base = poly_mulmod(F, base, base, f);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic for poly_mod
    Fel inv = F.inv(b.back());
    for (Fel& c : b) c = F.mul(c, inv);
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Irreducibility of a monic degree-k polynomial over F_Q, Q = q^m, by the
// Frobenius-power criterion: coefficients are fixed by x -> x^Q, so
// r_{d} = r_{d-1}^Q mod f equals x^{Q^d} mod f.
bool poly_irreducible(const Field& F, const Poly& f) {
  unsigned k = unsigned(f.size()) - 1;
  if (k == 0) return false;
  std::uint64_t Q = F.size();
  Poly x = {0, 1};
  Poly r = x;
  std::vector<Poly> frob_powers(k + 1);
  for (unsigned d = 1; d <= k; ++d) {
    r = poly_powmod(F, r, Q, f);
    frob_powers[d] = r;
  }
  // x^{Q^k} == x mod f
  Poly diff = frob_powers[k];
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = F.sub(diff[1], 1);
  trim(diff);
  if (!diff.empty()) return false;
  for (std::uint64_t p : prime_factors(k)) {
    Poly d = frob_powers[k / p];
    if (d.size() < 2) d.resize(2, 0);
    d[1] = F.sub(d[1], 1);
    trim(d);
    Poly g = poly_gcd(F, f, d);
    if (g.size() != 1) return false;
  }
  return true;
}

// Multiplicative order of the residue class of x modulo an irreducible f
// equals Q^k - 1 exactly when every maximal proper power is nontrivial.
bool root_is_primitive(const Field& F, const Poly& f) {
  unsigned k = unsigned(f.size()) - 1;
  std::uint64_t big = 1;
  for (unsigned i = 0; i < k; ++i) big *= F.size();
  std::uint64_t ord = big - 1;
  for (std::uint64_t p : prime_factors(ord)) {
    Poly r = poly_powmod(F, {0, 1}, ord / p, f);
    if (r.size() == 1 && r[0] == 1) return false;
  }
  return true;
}

FqmMatrix companion(const FieldPtr& f, const Poly& p) {
  const Field& F = *f;
  unsigned k = unsigned(p.size()) - 1;
  FqmMatrix M(f, k, k);
  for (unsigned i = 1; i < k; ++i) M.at(i, i - 1) = 1;
  for (unsigned i = 0; i < k; ++i) M.at(i, k - 1) = F.neg(p[i]);
  return M;
}

FqmMatrix apply_transpose(const Field& F, const FqmMatrix& A, const FqSubspace& U,
                          std::vector<Vec>& out_cols) {
  // columns (A^T u) for u in the basis of U
  out_cols.clear();
  for (const Vec& u : U.basis()) {
    Vec w(A.cols, 0);
    for (std::size_t c = 0; c < A.cols; ++c)
      for (std::size_t r = 0; r < A.rows; ++r)
        w[c] = F.add(w[c], F.mul(A.at(r, c), u[r]));
    out_cols.push_back(std::move(w));
  }
  return A;
}

// first nonzero coordinate scaled to 1; index of F_q* subgroup data
unsigned subfield_log(const Field& F, Fel u) {
  // u in F_q*: exponent with respect to the subfield generator h
  std::uint64_t step = (F.size() - 1) / (F.q() - 1);
  return unsigned(F.log(u) / step % (F.q() - 1));
}

}  // namespace

EvaluationPair default_pair(const FieldPtr& f, unsigned sigma_power, unsigned t,
                            unsigned n) {
  const Field& F = *f;
  if (t < 1 || t > F.q() - 1) throw Error("InvalidPair", "need 1 <= t <= q-1");
  if (n < 1 || n > F.m()) throw Error("InvalidPair", "need 1 <= n <= m");
  std::vector<Fel> a(t), beta(n);
  for (unsigned i = 0; i < t; ++i) a[i] = F.pow(F.primitive(), i);
  Fel zj = 1;
  for (unsigned j = 0; j < n; ++j) {
    beta[j] = zj;
    zj = F.mul(zj, F.z());
  }
  return EvaluationPair(f, sigma_power, std::move(a), std::move(beta));
}

SumRankCode lrs(unsigned k, const EvaluationPair& pair) {
  const Field& F = *pair.field;
  unsigned N = pair.t() * pair.n();
  if (k < 1 || k > N) throw Error("BadDimension", "need 1 <= k <= N");
  FqmMatrix G(pair.field, k, N);
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Fel> mono(i + 1, 0);
    mono[i] = 1;
    SkewPoly f(pair.field, pair.sigma_power, std::move(mono));
    Vec row = skew::ev_multi(f, pair);
    for (unsigned c = 0; c < N; ++c) G.at(i, c) = row[c];
  }
  srcode::BlockProfile prof(std::vector<unsigned>(pair.t(), pair.n()));
  return SumRankCode(pair.field, std::move(prof), std::move(G));
}

SumRankCode doubly_extended_lrs(unsigned k, const EvaluationPair& pair, Fel gamma,
                                Fel delta) {
  const Field& F = *pair.field;
  if (gamma == 0 || delta == 0) throw Error("ZeroExtension", "gamma, delta nonzero");
  unsigned N = pair.t() * pair.n() + 2;
  if (k < 2 || k > N) throw Error("BadDimension", "need 2 <= k <= N");
  FqmMatrix G(pair.field, k, N);
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Fel> mono(i + 1, 0);
    mono[i] = 1;
    SkewPoly f(pair.field, pair.sigma_power, std::move(mono));
    Vec row = skew::ev_multi(f, pair);
    for (unsigned c = 0; c + 2 < N; ++c) G.at(i, c) = row[c];
    G.at(i, N - 2) = i == 0 ? gamma : 0;              // f(gamma)_0 = gamma f_0
    G.at(i, N - 1) = skew::eval_inf(f, delta, k);     // delta f_{k-1}
  }
  std::vector<unsigned> lengths(pair.t(), pair.n());
  lengths.push_back(1);
  lengths.push_back(1);
  srcode::BlockProfile prof(std::move(lengths));
  (void)F;
  return SumRankCode(pair.field, std::move(prof), std::move(G));
}

SumRankCode two_fold_lrs(const FieldPtr& f, const std::vector<Fel>& H_basis,
                         Fel delta) {
  const Field& F = *f;
  if (F.q() != 2) throw Error("BadCharacteristic", "the 2-fold family needs q = 2");
  unsigned m = F.m();
  if (m < 3) throw Error("BadParameter", "need m >= 3");
  if (H_basis.size() != m - 1 || fqlin::rank_q(F, H_basis) != m - 1)
    throw Error("BadParameter", "H must be an (m-1)-dimensional F_2-subspace");
  FqSubspace H1(f, 1, [&] {
    std::vector<Vec> g;
    for (Fel h : H_basis) g.push_back(Vec{h});
    return g;
  }());
  if (H1.contains(Vec{delta})) throw Error("DeltaInH", "delta must lie outside H");

  std::vector<Vec> xb, yb;
  for (Fel h : H_basis) {
    Fel h2 = F.mul(h, h);
    xb.push_back(Vec{h, h2});
    yb.push_back(Vec{h, F.add(h2, F.mul(delta, h))});
  }
  std::vector<FqSubspace> blocks;
  blocks.emplace_back(f, 2, xb);
  blocks.emplace_back(f, 2, yb);
  blocks.emplace_back(f, 2, std::vector<Vec>{{1, 0}, {0, delta}});
  QSystem U(f, 2, std::move(blocks));
  return geometry::phi(U);
}

SumRankCode twisted_lrs(const EvaluationPair& pair, Fel eta) {
  const Field& F = *pair.field;
  if (pair.n() != F.m())
    throw Error("InvalidPair", "twisted family evaluates on a full F_q-basis");
  // subgroup of F_q* generated by the norms: exponents modulo q-1
  std::uint64_t qm1 = F.q() - 1;
  std::uint64_t g = qm1;
  for (Fel ai : pair.a) g = std::gcd(g, std::uint64_t(subfield_log(F, F.norm(ai))));
  if (g <= 1 && qm1 > 1)
    throw Error("NormSubgroupViolation", "norms of a generate all of F_q*");
  if (qm1 == 1) throw Error("NormSubgroupViolation", "F_q* has no proper subgroup");
  if (eta != 0 && subfield_log(F, F.norm(eta)) % g == 0)
    throw Error("NormSubgroupViolation", "norm of eta lies in the norm subgroup");

  unsigned N = pair.t() * pair.n();
  FqmMatrix G(pair.field, 2, N);
  SkewPoly f1(pair.field, pair.sigma_power, {1, 0, eta});  // 1 + eta x^2
  SkewPoly f2(pair.field, pair.sigma_power, {0, 1});       // x
  Vec r1 = skew::ev_multi(f1, pair), r2 = skew::ev_multi(f2, pair);
  for (unsigned c = 0; c < N; ++c) {
    G.at(0, c) = r1[c];
    G.at(1, c) = r2[c];
  }
  srcode::BlockProfile prof(std::vector<unsigned>(pair.t(), pair.n()));
  return SumRankCode(pair.field, std::move(prof), std::move(G));
}

SumRankCode twisted_lrs_default(const FieldPtr& f, unsigned sigma_power, unsigned t) {
  const Field& F = *f;
  std::uint64_t qm1 = F.q() - 1;
  if (qm1 < 2) throw Error("NormSubgroupViolation", "F_q* has no proper subgroup");
  std::uint64_t r = prime_factors(qm1).front();
  if (t < 1 || t > qm1 / r)
    throw Error("NormSubgroupViolation", "need t <= (q-1)/r for the norm subgroup");
  std::vector<Fel> a(t), beta(F.m());
  for (unsigned i = 0; i < t; ++i) a[i] = F.pow(F.primitive(), std::uint64_t(i) * r);
  Fel zj = 1;
  for (unsigned j = 0; j < F.m(); ++j) {
    beta[j] = zj;
    zj = F.mul(zj, F.z());
  }
  EvaluationPair pair(f, sigma_power, std::move(a), std::move(beta));
  return twisted_lrs(pair, F.primitive());
}

QSystem complete_twisted(const QSystem& U) {
  const Field& F = *U.field;
  if (U.k != 2) throw Error("WrongDimension", "completion is a k=2 operation");
  geometry::WeightMap wm = geometry::multi_weight(U);
  if (!geometry::is_scattered(wm))
    throw Error("NotScattered", "completion needs a scattered system");
  std::vector<FqSubspace> blocks = U.blocks;
  for (const Vec& p : fqlin::enum_projective(U.field, 2))
    if (wm.weight_at(p) == 0) blocks.emplace_back(U.field, 2, std::vector<Vec>{p});
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const FqSubspace& a, const FqSubspace& b) {
                     return a.dim() > b.dim();
                   });
  (void)F;
  return QSystem(U.field, 2, std::move(blocks));
}

SingerGroup singer(const FieldPtr& f, unsigned k, std::vector<Fel> p_poly) {
  const Field& F = *f;
  if (k < 1) throw Error("BadParameter", "k must be >= 1");
  std::uint64_t big = 1;
  for (unsigned i = 0; i < k; ++i) {
    big *= F.size();
    if (big > (1ull << 40)) throw Error("OrderTooLarge", "q^{km} too large");
  }
  if (!p_poly.empty()) {
    if (p_poly.size() != k + 1 || p_poly.back() != 1)
      throw Error("BadParameter", "p must be monic of degree k");
    if (!poly_irreducible(F, p_poly))
      throw Error("ReduciblePolynomial", "p is not irreducible");
    if (!root_is_primitive(F, p_poly))
      throw Error("ReduciblePolynomial", "companion matrix order below q^{km}-1");
  } else {
    // lexicographically smallest monic polynomial (low-degree-first
    // coefficient order) that is irreducible with a full-order root
    std::vector<std::size_t> idx(k, 0);
    const auto& elems = F.elements();
    bool found = false;
    while (!found) {
      Poly cand(k + 1);
      for (unsigned i = 0; i < k; ++i) cand[i] = elems[idx[i]];
      cand[k] = 1;
      if (poly_irreducible(F, cand) && root_is_primitive(F, cand)) {
        p_poly = std::move(cand);
        found = true;
        break;
      }
      // lex increment: last coefficient fastest
      int pos = int(k) - 1;
      while (pos >= 0) {
        if (++idx[pos] < elems.size()) break;
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) throw Error("BadParameter", "no primitive polynomial found");
    }
  }
  SingerGroup G;
  G.field = f;
  G.k = k;
  G.p_poly = p_poly;
  G.M = companion(f, p_poly);
  G.order = big - 1;
  G.quotient_size = (big - 1) / (F.size() - 1);
  return G;
}

std::vector<FqSubspace> orbit(const std::vector<FqmMatrix>& generators,
                              const FqSubspace& U, unsigned r,
                              std::uint64_t budget) {
  const Field& F = *U.field();
  if (r > 1) {
    if (F.m() % r != 0) throw Error("NotFqrSubspace", "r must divide m");
    std::uint64_t qr = 1;
    for (unsigned i = 0; i < r; ++i) qr *= F.q();
    Fel w = F.pow(F.primitive(), (F.size() - 1) / (qr - 1));
    for (const Vec& b : U.basis()) {
      Vec wb(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) wb[i] = F.mul(w, b[i]);
      if (!U.contains(wb))
        throw Error("NotFqrSubspace", "U is not closed under F_{q^r} scalars");
    }
  }
  std::vector<FqSubspace> out = {U};
  std::deque<std::size_t> queue = {0};
  std::vector<Vec> cols;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const FqmMatrix& A : generators) {
      apply_transpose(F, A, out[cur], cols);
      FqSubspace img(U.field(), U.ambient(), cols);
      bool known = false;
      for (const FqSubspace& s : out)
        if (s.same_space(img)) {
          known = true;
          break;
        }
      if (!known) {
        if (out.size() >= budget) throw Error("OrbitTooLarge", "orbit budget exceeded");
        out.push_back(std::move(img));
        queue.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

SumRankCode simplex(const SingerGroup& G, const FqSubspace& U) {
  const Field& F = *G.field;
  if (U.ambient() != G.k) throw Error("AmbientMismatch", "U must live in F_{q^m}^k");
  unsigned n = U.dim(), t = unsigned(G.quotient_size);
  FqmMatrix Gcode(G.field, G.k, std::size_t(t) * n);
  FqmMatrix Mi = fqlin::mat_identity(G.field, G.k);
  std::vector<Vec> cols;
  for (unsigned i = 0; i < t; ++i) {
    apply_transpose(F, Mi, U, cols);
    for (unsigned c = 0; c < n; ++c)
      for (unsigned rr = 0; rr < G.k; ++rr)
        Gcode.at(rr, std::size_t(i) * n + c) = cols[c][rr];
    Mi = fqlin::mat_mul(Mi, G.M);
  }
  srcode::BlockProfile prof(std::vector<unsigned>(t, n));
  return SumRankCode(G.field, std::move(prof), std::move(Gcode));
}

std::uint64_t simplex_weight(const SingerGroup& G, const FqSubspace& U,
                             std::uint64_t budget) {
  const Field& F = *G.field;
  // s = dimension of the F_{q^m}-span of U
  std::vector<Vec> basis = U.basis();
  unsigned s = unsigned(fqlin::fqm_rank(F, basis));
  // pick the first s independent vectors as a span basis
  std::vector<Vec> B;
  for (const Vec& b : basis) {
    std::vector<Vec> trial = B;
    trial.push_back(b);
    if (fqlin::fqm_rank(F, trial) > B.size()) B.push_back(b);
    if (B.size() == s) break;
  }
  // coordinates of each basis vector of U over B: solve x B = u
  unsigned n = U.dim();
  FqmMatrix A(G.field, s, n);
  for (unsigned c = 0; c < n; ++c) {
    // Gaussian solve of the s x k system
    std::vector<Vec> aug;  // rows: columns of B^T augmented with u entries
    for (unsigned col = 0; col < U.ambient(); ++col) {
      Vec row(s + 1);
      for (unsigned rr = 0; rr < s; ++rr) row[rr] = B[rr][col];
      row[s] = basis[c][col];
      aug.push_back(std::move(row));
    }
    // eliminate
    unsigned rank = 0;
    for (unsigned col = 0; col < s && rank < aug.size(); ++col) {
      unsigned piv = rank;
      while (piv < aug.size() && aug[piv][col] == 0) ++piv;
      if (piv == aug.size()) continue;
      std::swap(aug[rank], aug[piv]);
      Fel inv = F.inv(aug[rank][col]);
      for (Fel& x : aug[rank]) x = F.mul(x, inv);
      for (unsigned i = 0; i < aug.size(); ++i) {
        if (i == rank || aug[i][col] == 0) continue;
        Fel fac = aug[i][col];
        for (unsigned j = 0; j <= s; ++j)
          aug[i][j] = F.sub(aug[i][j], F.mul(fac, aug[rank][j]));
      }
      ++rank;
    }
    for (unsigned rr = 0; rr < rank && rr < s; ++rr) {
      // pivot row rr corresponds to variable rr after full elimination
      A.at(rr, c) = aug[rr][s];
    }
  }
  srcode::BlockProfile prof({n});
  SumRankCode Ct(G.field, prof, std::move(A));
  if (fqlin::projective_count(F, s) > budget)
    throw Error("SweepTooLarge", "rank-metric sweep exceeds budget");
  std::uint64_t total = 0;
  for (const Vec& v : fqlin::enum_projective(G.field, s)) {
    Vec cw = fqlin::mat_vec(v, Ct.G);
    total += fqlin::rank_q(F, cw);
  }
  std::uint64_t factor = 1;
  for (unsigned i = 0; i < (G.k - s) * F.m(); ++i) factor *= F.q();
  return factor * total;
}

LiftedSystem lift(const QSystem& U) {
  const Field& F = *U.field;
  if (U.k != 2) throw Error("WrongDimension", "lifting is a k=2 operation");
  geometry::WeightMap wm = geometry::multi_weight(U);
  unsigned M = 0;
  for (const auto& [pt, w] : wm.weights) M = std::max(M, w);
  std::vector<FqSubspace> blocks = U.blocks;
  unsigned added = 0;
  for (const Vec& p : fqlin::enum_projective(U.field, 2)) {
    unsigned w = wm.weight_at(p);
    unsigned deficit = M - w;
    unsigned c = deficit / F.m(), d = deficit % F.m();
    std::vector<Vec> full;
    Fel zj = 1;
    for (unsigned j = 0; j < F.m(); ++j) {
      full.push_back(Vec{F.mul(zj, p[0]), F.mul(zj, p[1])});
      zj = F.mul(zj, F.z());
    }
    for (unsigned rep = 0; rep < c; ++rep) {
      blocks.emplace_back(U.field, 2, full);
      ++added;
    }
    if (d > 0) {
      std::vector<Vec> part(full.begin(), full.begin() + d);
      blocks.emplace_back(U.field, 2, part);
      ++added;
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const FqSubspace& a, const FqSubspace& b) {
                     return a.dim() > b.dim();
                   });
  LiftedSystem out{QSystem(U.field, 2, std::move(blocks)), M, added};
  return out;
}

}  // namespace srk::constructions
