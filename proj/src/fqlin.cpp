#include "srk/fqlin.hpp"

#include <algorithm>

namespace srk::fqlin {
namespace {

// Row-echelon elimination; works for both F_{q^m} rows and F_q rows since
// the subfield is closed under the ambient arithmetic. Returns pivot columns.
std::vector<std::size_t> echelonize(const Field& F, std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  if (rows.empty()) return pivots;
  std::size_t ncols = rows[0].size();
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Fel piv_inv = F.inv(rows[r][c]);
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] = F.mul(rows[r][j], piv_inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Fel f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Reduce v against an echelonized basis; returns the residue.
Vec reduce_against(const Field& F, const std::vector<Vec>& ech,
                   const std::vector<std::size_t>& pivots, Vec v) {
  for (std::size_t i = 0; i < ech.size(); ++i) {
    Fel f = v[pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, ech[i][j]));
  }
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Fel x) { return x == 0; });
}

}  // namespace

Vec mat_vec(const Vec& x, const FqmMatrix& M) {
  const Field& F = *M.field;
  if (x.size() != M.rows) throw Error("AmbientMismatch", "vector/matrix shape");
  Vec y(M.cols, 0);
  for (std::size_t r = 0; r < M.rows; ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < M.cols; ++c)
      y[c] = F.add(y[c], F.mul(x[r], M.at(r, c)));
  }
  return y;
}

FqmMatrix mat_mul(const FqmMatrix& A, const FqmMatrix& B) {
  const Field& F = *A.field;
  if (A.cols != B.rows) throw Error("AmbientMismatch", "matrix shapes");
  FqmMatrix C(A.field, A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t l = 0; l < A.cols; ++l) {
      Fel a = A.at(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(l, j)));
    }
  return C;
}

FqmMatrix mat_transpose(const FqmMatrix& A) {
  FqmMatrix T(A.field, A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

FqmMatrix mat_identity(const FieldPtr& f, std::size_t n) {
  FqmMatrix I(f, n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

std::size_t fqm_rank(const Field& F, std::vector<Vec> rows) {
  echelonize(F, rows);
  return rows.size();
}

std::vector<Vec> fqm_kernel(const Field& F, const std::vector<Vec>& rows) {
  // Solve sum_i x_i rows_i = 0 by echelonizing the transpose and reading off
  // free columns.
  if (rows.empty()) return {};
  std::size_t r = rows.size(), n = rows[0].size();
  std::vector<Vec> t(n, Vec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = rows[i][j];
  auto pivots = echelonize(F, t);
  std::vector<bool> is_pivot(r, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> ker;
  for (std::size_t c = 0; c < r; ++c) {
    if (is_pivot[c]) continue;
    Vec x(r, 0);
    x[c] = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
      x[pivots[i]] = F.neg(t[i][c]);
    ker.push_back(std::move(x));
  }
  return ker;
}

std::size_t fq_rank(const Field& F, std::vector<Vec> rows) {
  echelonize(F, rows);
  return rows.size();
}

std::vector<Vec> fq_greedy_basis(const Field& F, const std::vector<Vec>& rows) {
  std::vector<Vec> basis, ech;
  std::vector<std::size_t> pivots;
  for (const Vec& v : rows) {
    Vec res = reduce_against(F, ech, pivots, v);
    if (is_zero(res)) continue;
    basis.push_back(v);
    // extend the echelon form
    std::size_t c = 0;
    while (res[c] == 0) ++c;
    Fel piv_inv = F.inv(res[c]);
    for (auto& x : res) x = F.mul(x, piv_inv);
    for (std::size_t i = 0; i < ech.size(); ++i) {
      Fel f = ech[i][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < res.size(); ++j)
        ech[i][j] = F.sub(ech[i][j], F.mul(f, res[j]));
    }
    // keep pivots sorted by inserting in position
    std::size_t pos = std::lower_bound(pivots.begin(), pivots.end(), c) - pivots.begin();
    pivots.insert(pivots.begin() + pos, c);
    ech.insert(ech.begin() + pos, std::move(res));
  }
  return basis;
}

std::vector<Vec> fq_nullspace(const Field& F, const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  std::size_t n = rows[0].size();
  std::vector<Vec> work = rows;
  auto pivots = echelonize(F, work);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> ker;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec x(n, 0);
    x[c] = 1;
    for (std::size_t i = 0; i < work.size(); ++i) x[pivots[i]] = F.neg(work[i][c]);
    ker.push_back(std::move(x));
  }
  return ker;
}

Vec flatten(const Field& F, const Vec& v) {
  Vec out;
  out.reserve(v.size() * F.m());
  for (Fel x : v) {
    auto c = F.fq_coords(x);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Vec> fq_dependencies(const Field& F, const std::vector<Vec>& vecs) {
  std::vector<Vec> flat;
  flat.reserve(vecs.size());
  for (const Vec& v : vecs) flat.push_back(flatten(F, v));
  // dependencies lambda with lambda * flat = 0: nullspace of the transpose
  if (flat.empty()) return {};
  std::size_t r = flat.size(), n = flat[0].size();
  std::vector<Vec> t(n, Vec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = flat[i][j];
  return fq_nullspace(F, t);
}

unsigned rank_q(const Field& F, const Vec& v) {
  std::vector<Vec> rows;
  rows.reserve(v.size());
  for (Fel x : v) rows.push_back(F.fq_coords(x));
  return unsigned(fq_rank(F, std::move(rows)));
}

std::vector<Vec> expand_over_basis(const Field& F, const Vec& x, const Vec& gamma) {
  if (gamma.size() != F.m())
    throw Error("BasisNotIndependent", "basis must have m elements");
  // columns of T are the canonical coordinates of the gamma_j
  std::size_t m = F.m();
  std::vector<Vec> T(m, Vec(m));
  for (std::size_t j = 0; j < m; ++j) {
    auto c = F.fq_coords(gamma[j]);
    for (std::size_t i = 0; i < m; ++i) T[i][j] = c[i];
  }
  // invert T over F_q (Gauss-Jordan with ambient arithmetic)
  std::vector<Vec> inv(m, Vec(m, 0));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && T[piv][col] == 0) ++piv;
    if (piv == m) throw Error("BasisNotIndependent", "gamma is F_q-dependent");
    std::swap(T[piv], T[col]);
    std::swap(inv[piv], inv[col]);
    Fel pi = F.inv(T[col][col]);
    for (std::size_t j = 0; j < m; ++j) {
      T[col][j] = F.mul(T[col][j], pi);
      inv[col][j] = F.mul(inv[col][j], pi);
    }
    for (std::size_t rr = 0; rr < m; ++rr) {
      if (rr == col || T[rr][col] == 0) continue;
      Fel f = T[rr][col];
      for (std::size_t j = 0; j < m; ++j) {
        T[rr][j] = F.sub(T[rr][j], F.mul(f, T[col][j]));
        inv[rr][j] = F.sub(inv[rr][j], F.mul(f, inv[col][j]));
      }
    }
  }
  // coordinates over gamma = inv * canonical coordinates
  std::vector<Vec> out(x.size(), Vec(m, 0));
  for (std::size_t r = 0; r < x.size(); ++r) {
    auto c = F.fq_coords(x[r]);
    for (std::size_t i = 0; i < m; ++i) {
      Fel s = 0;
      for (std::size_t j = 0; j < m; ++j) s = F.add(s, F.mul(inv[i][j], c[j]));
      out[r][i] = s;
    }
  }
  return out;
}

FqSubspace::FqSubspace(FieldPtr f, unsigned ambient_k, const std::vector<Vec>& gens)
    : field_(std::move(f)), k_(ambient_k) {
  for (const Vec& g : gens)
    if (g.size() != k_) throw Error("AmbientMismatch", "generator length != ambient k");
  const Field& F = *field_;
  std::vector<Vec> flat;
  flat.reserve(gens.size());
  for (const Vec& g : gens) flat.push_back(flatten(F, g));
  auto keep = fq_greedy_basis(F, flat);
  // map kept flattened vectors back to the original generators (order kept)
  std::size_t gi = 0;
  for (const Vec& kf : keep) {
    while (flat[gi] != kf) ++gi;
    basis_.push_back(gens[gi]);
    ++gi;
  }
  rebuild_echelon();
}

void FqSubspace::rebuild_echelon() {
  const Field& F = *field_;
  flat_echelon_.clear();
  for (const Vec& b : basis_) flat_echelon_.push_back(flatten(F, b));
  echelonize(F, flat_echelon_);
}

bool FqSubspace::contains(const Vec& v) const {
  if (v.size() != k_) throw Error("AmbientMismatch", "vector length != ambient k");
  const Field& F = *field_;
  std::vector<Vec> work = flat_echelon_;
  work.push_back(flatten(F, v));
  return fq_rank(F, std::move(work)) == basis_.size();
}

bool FqSubspace::same_space(const FqSubspace& other) const {
  if (dim() != other.dim() || ambient() != other.ambient()) return false;
  for (const Vec& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::vector<Vec> FqSubspace::enumerate() const {
  const Field& F = *field_;
  const auto& sub = F.subfield();
  std::vector<Vec> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < dim(); ++i) total *= F.q();
  if (total > (1u << 16)) throw Error("TooLarge", "subspace enumeration budget");
  out.reserve(total);
  for (std::uint64_t c = 0; c < total; ++c) {
    Vec v(k_, 0);
    std::uint64_t t = c;
    for (unsigned i = 0; i < dim(); ++i) {
      Fel coef = sub[t % F.q()];
      t /= F.q();
      if (coef)
        for (unsigned j = 0; j < k_; ++j) v[j] = F.add(v[j], F.mul(coef, basis_[i][j]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

FqSubspace fq_span(const FieldPtr& f, unsigned ambient_k, const std::vector<Vec>& gens) {
  return FqSubspace(f, ambient_k, gens);
}

unsigned intersect_dim(const FqSubspace& U, const FqSubspace& W) {
  if (U.ambient() != W.ambient()) throw Error("AmbientMismatch", "ambient dims differ");
  const Field& F = *U.field();
  std::vector<Vec> all;
  for (const Vec& b : U.basis()) all.push_back(flatten(F, b));
  for (const Vec& b : W.basis()) all.push_back(flatten(F, b));
  unsigned sum_dim = unsigned(fq_rank(F, std::move(all)));
  return U.dim() + W.dim() - sum_dim;
}

FqSubspace intersect(const FqSubspace& U, const FqSubspace& W) {
  if (U.ambient() != W.ambient()) throw Error("AmbientMismatch", "ambient dims differ");
  const Field& F = *U.field();
  // Zassenhaus-style: dependencies between the two bases give intersection
  // vectors sum lambda_i u_i = -sum mu_j w_j.
  std::vector<Vec> all;
  for (const Vec& b : U.basis()) all.push_back(b);
  for (const Vec& b : W.basis()) all.push_back(b);
  auto deps = fq_dependencies(F, all);
  std::vector<Vec> gens;
  for (const Vec& lam : deps) {
    Vec v(U.ambient(), 0);
    for (unsigned i = 0; i < U.dim(); ++i)
      for (unsigned j = 0; j < U.ambient(); ++j)
        v[j] = F.add(v[j], F.mul(lam[i], U.basis()[i][j]));
    gens.push_back(std::move(v));
  }
  return FqSubspace(U.field(), U.ambient(), gens);
}

FqSubspace sum(const FqSubspace& U, const FqSubspace& W) {
  std::vector<Vec> gens = U.basis();
  gens.insert(gens.end(), W.basis().begin(), W.basis().end());
  return FqSubspace(U.field(), U.ambient(), gens);
}

std::uint64_t projective_count(const Field& F, unsigned k) {
  std::uint64_t Q = F.size(), c = 0, pw = 1;
  for (unsigned i = 0; i < k; ++i) {
    c += pw;
    pw *= Q;
  }
  return c;  // (Q^k - 1)/(Q - 1)
}

std::vector<Vec> enum_projective(const FieldPtr& f, unsigned k) {
  const Field& F = *f;
  if (k < 1) throw Error("BadParameter", "k must be >= 1");
  const auto& elems = F.elements();
  std::vector<Vec> out;
  out.reserve(projective_count(F, k));
  // Lexicographic in the canonical element order; 0 is the minimum element,
  // so points with more leading zeros come first.
  for (unsigned lead = k; lead-- > 0;) {
    // representative: 0...0 (lead zeros reversed below) -- we want leading
    // zeros first positions; points with first nonzero at position i.
    unsigned free = k - lead - 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < free; ++i) total *= F.size();
    (void)total;
    // iterate tails in lex order
    std::vector<std::size_t> idx(free, 0);
    bool done = false;
    while (!done) {
      Vec v(k, 0);
      v[lead] = 1;
      for (unsigned i = 0; i < free; ++i) v[lead + 1 + i] = elems[idx[i]];
      out.push_back(std::move(v));
      // increment idx as a counter, last coordinate fastest
      int pos = int(free) - 1;
      while (pos >= 0) {
        if (++idx[pos] < elems.size()) break;
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) done = true;
    }
  }
  // Order: we emitted first-nonzero at position k-1 first (max leading
  // zeros), then k-2, etc. Within a group the tail is lex-ordered. This is
  // exactly lex order on normalized representatives since 0 < everything.
  return out;
}

Vec normalize_point(const Field& F, const Vec& v) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) ++i;
  if (i == v.size()) throw Error("BadParameter", "zero vector is not a point");
  Fel s = F.inv(v[i]);
  Vec out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = F.mul(v[j], s);
  return out;
}

FqSubspace hyperplane_of(const FieldPtr& f, const Vec& v) {
  const Field& F = *f;
  unsigned k = unsigned(v.size());
  // F_{q^m}-basis of v^perp
  std::vector<Vec> rows = {v};
  auto basis_qm = fq_nullspace(F, rows);  // over F_{q^m}: nullspace routine is
  // generic elimination, valid over the big field as well
  // F_q-basis: multiply each by z^j
  std::vector<Vec> gens;
  Fel zj = 1;
  for (unsigned j = 0; j < F.m(); ++j) {
    for (const Vec& b : basis_qm) {
      Vec w(k);
      for (unsigned i = 0; i < k; ++i) w[i] = F.mul(b[i], zj);
      gens.push_back(std::move(w));
    }
    zj = F.mul(zj, F.z());
  }
  return FqSubspace(f, k, gens);
}

}  // namespace srk::fqlin
