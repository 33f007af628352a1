#ifndef SRK_GEOMETRY_HPP_
#define SRK_GEOMETRY_HPP_

#include <map>
#include <optional>
#include <vector>

#include "srk/srcode.hpp"

namespace srk::geometry {

using srcode::BlockProfile;
using srcode::Fel;
using srcode::Field;
using srcode::FieldPtr;
using srcode::FqmMatrix;
using srcode::FqSubspace;
using srcode::SumRankCode;
using srcode::Vec;

// System of F_q-subspaces (U_1,...,U_t) of F_{q^m}^k jointly spanning the
// whole F_{q^m}-space, with dim_q(U_i) non-increasing.
struct QSystem {
  FieldPtr field;
  unsigned k = 0;
  std::vector<FqSubspace> blocks;

  QSystem(FieldPtr f, unsigned k_in, std::vector<FqSubspace> b);
  BlockProfile profile() const;
  unsigned N() const { return profile().N(); }
};

// U_i = F_q-span of the columns of G_i.
QSystem psi(const SumRankCode& C);
// Generator matrix with the stored bases as block columns.
SumRankCode phi(const QSystem& U);

// Per-block dim(U_i ^ v_perp) for the hyperplane v_perp.
std::vector<unsigned> dimension_list(const QSystem& U, const Vec& v);
std::vector<FqSubspace> subspace_section(const QSystem& U, const Vec& v);

// Checks chi_U(v_perp) = psi_G(supp(vG)_perp) blockwise: the section
// U_i ^ v_perp equals the image under G_i of the orthogonal complement of
// the block support of vG.
bool verify_duality(const SumRankCode& C, const Vec& v);

// MSRD criterion: max over hyperplanes H of sum_i dim(U_i ^ H) <= k - 1.
bool geometric_msrd(const QSystem& U, std::uint64_t budget = (1u << 22));

// Point weights of a linear / multi-linear set on PG(k-1, q^m), stored only
// for points of positive weight.
struct WeightMap {
  FieldPtr field;
  unsigned k = 0;
  std::map<Vec, unsigned> weights;  // normalized point -> w(P) > 0

  unsigned weight_at(const Vec& normalized_point) const {
    auto it = weights.find(normalized_point);
    return it == weights.end() ? 0 : it->second;
  }
};

WeightMap linear_set(const FqSubspace& U);
WeightMap multi_weight(const QSystem& U);

bool is_scattered(const WeightMap& w);
// k = 2 only: every point of PG(1, q^m) has weight >= 1.
bool covers_line(const WeightMap& w);
// k = 2 only: if the multi-weight is the same constant on every point,
// returns the distance d = N - w of the associated one-weight code.
std::optional<unsigned> one_weight_check(const QSystem& U);

// Arithmetic sanity checks on a k=2 one-weight MSRD block profile.
struct BlockBoundDiagnostics {
  bool t_lower = false;       // t >= q + 1
  bool t_upper = false;       // t <= q^m + 1
  bool t_mod_q = false;       // t == 1 (mod q)
  bool point_identity = false;  // q^m + 1 == sum (q^{n_i}-1)/(q-1)
  bool boundary_shape = false;  // for t = q+1: the two admissible shapes
  bool all() const { return t_lower && t_upper && t_mod_q && point_identity; }
};

BlockBoundDiagnostics msrd_block_bounds(const BlockProfile& prof, std::uint64_t q,
                                        unsigned m);

}  // namespace srk::geometry

#endif  // SRK_GEOMETRY_HPP_
