#ifndef SRK_FQLIN_HPP_
#define SRK_FQLIN_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "srk/gf.hpp"

namespace srk::fqlin {

using gf::Fel;
using gf::Field;
using gf::FieldPtr;

using Vec = std::vector<Fel>;  // vector over F_{q^m}

// Rectangular matrix over F_{q^m}, row-major.
struct FqmMatrix {
  FieldPtr field;
  std::size_t rows = 0, cols = 0;
  std::vector<Fel> a;

  FqmMatrix() = default;
  FqmMatrix(FieldPtr f, std::size_t r, std::size_t c)
      : field(std::move(f)), rows(r), cols(c), a(r * c, 0) {}

  Fel& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Fel at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  Vec row(std::size_t r) const { return Vec(a.begin() + r * cols, a.begin() + (r + 1) * cols); }
  Vec col(std::size_t c) const {
    Vec v(rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
  }
};

// y = x * M (row vector times matrix).
Vec mat_vec(const Vec& x, const FqmMatrix& M);
FqmMatrix mat_mul(const FqmMatrix& A, const FqmMatrix& B);
FqmMatrix mat_transpose(const FqmMatrix& A);
FqmMatrix mat_identity(const FieldPtr& f, std::size_t n);

// Rank / kernel over the big field F_{q^m}.
std::size_t fqm_rank(const Field& F, std::vector<Vec> rows);
// Basis of the left kernel {v : v*A = 0} with A given by rows as row vectors:
// returns basis of {x in F^{n} : sum x_i rows_i = 0}.
std::vector<Vec> fqm_kernel(const Field& F, const std::vector<Vec>& rows);

// --- relative F_q-linear algebra ---

// F_q-rank of a set of vectors whose entries are subfield elements.
// Vectors are over F_q (entries must lie in the subfield).
std::size_t fq_rank(const Field& F, std::vector<Vec> rows);
// Echelonizes rows in place over F_q (entries subfield elements); returns a
// basis (subset reduced), deterministic greedy preserving input order.
std::vector<Vec> fq_greedy_basis(const Field& F, const std::vector<Vec>& rows);
// Basis of {x in F_q^n : rows_j . x = 0 for all j}; row entries must be
// subfield elements.
std::vector<Vec> fq_nullspace(const Field& F, const std::vector<Vec>& rows);
// Basis of {lambda in F_q^r : sum_j lambda_j vecs_j = 0}, the F_q-linear
// dependencies among r vectors of F_{q^m}^k.
std::vector<Vec> fq_dependencies(const Field& F, const std::vector<Vec>& vecs);

// F_q-coordinates of a vector in F_{q^m}^k: concatenated fq_coords of the
// entries, length k*m, entries in the subfield.
Vec flatten(const Field& F, const Vec& v);

// F_q-rank of the span of the entries of v (the sum-rank building block).
unsigned rank_q(const Field& F, const Vec& v);

// n x m coordinate matrix of the entries of x over an arbitrary ordered
// F_q-basis gamma of F_{q^m}; entries are subfield elements.
// Throws BasisNotIndependent.
std::vector<Vec> expand_over_basis(const Field& F, const Vec& x, const Vec& gamma);

// An F_q-subspace of F_{q^m}^k given by an F_q-independent basis.
class FqSubspace {
 public:
  FqSubspace(FieldPtr f, unsigned ambient_k) : field_(std::move(f)), k_(ambient_k) {}
  // Reduces the generator list to an F_q-independent basis (greedy, order
  // preserving). Throws AmbientMismatch on length mismatch.
  FqSubspace(FieldPtr f, unsigned ambient_k, const std::vector<Vec>& gens);

  const FieldPtr& field() const { return field_; }
  unsigned ambient() const { return k_; }
  unsigned dim() const { return unsigned(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool same_space(const FqSubspace& other) const;

  // All q^dim elements, deterministic order (coefficient counting over the
  // subfield list). Intended for small oracle sweeps only.
  std::vector<Vec> enumerate() const;

 private:
  FieldPtr field_;
  unsigned k_;
  std::vector<Vec> basis_;
  std::vector<Vec> flat_echelon_;  // echelonized flattened basis for queries
  void rebuild_echelon();
};

FqSubspace fq_span(const FieldPtr& f, unsigned ambient_k, const std::vector<Vec>& gens);
unsigned intersect_dim(const FqSubspace& U, const FqSubspace& W);
// Basis of U `intersect` W as explicit vectors.
FqSubspace intersect(const FqSubspace& U, const FqSubspace& W);
FqSubspace sum(const FqSubspace& U, const FqSubspace& W);

// Points of PG(k-1, q^m): representatives normalized so the first nonzero
// coordinate is 1, in lexicographic order of the canonical element order.
std::vector<Vec> enum_projective(const FieldPtr& f, unsigned k);
std::uint64_t projective_count(const Field& F, unsigned k);
Vec normalize_point(const Field& F, const Vec& v);

// v^perp as an F_q-subspace of F_{q^m}^k, F_q-dimension m(k-1).
FqSubspace hyperplane_of(const FieldPtr& f, const Vec& v);

}  // namespace srk::fqlin

#endif  // SRK_FQLIN_HPP_
