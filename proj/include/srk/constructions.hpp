#ifndef SRK_CONSTRUCTIONS_HPP_
#define SRK_CONSTRUCTIONS_HPP_

#include <optional>
#include <vector>

#include "srk/geometry.hpp"
#include "srk/skew.hpp"

namespace srk::constructions {

using geometry::QSystem;
using skew::EvaluationPair;
using srcode::Fel;
using srcode::Field;
using srcode::FieldPtr;
using srcode::FqmMatrix;
using srcode::FqSubspace;
using srcode::SumRankCode;
using srcode::Vec;

// Deterministic evaluation data: a_i = g^{i-1} (g primitive), beta_j = z^{j-1}.
EvaluationPair default_pair(const FieldPtr& f, unsigned sigma_power, unsigned t,
                            unsigned n);

// Linearized Reed-Solomon code {ev_{a,beta}(f) : deg f < k}.
SumRankCode lrs(unsigned k, const EvaluationPair& pair);

// LRS extended by the f(gamma)_0 = gamma f_0 and f(delta)_inf = delta f_{k-1}
// coordinates; profile (n,...,n,1,1).
SumRankCode doubly_extended_lrs(unsigned k, const EvaluationPair& pair, Fel gamma,
                                Fel delta);

// q=2 one-weight MSRD family with blocks X = {(x,x^2) : x in H},
// Y_delta = {(x,x^2+delta x) : x in H}, Z_delta = <(1,0),(0,delta)>_{F_2}.
SumRankCode two_fold_lrs(const FieldPtr& f, const std::vector<Fel>& H_basis,
                         Fel delta);

// Code spanned by the evaluations of {x_0 + x_1 x + x_0 eta x^2} at t blocks;
// requires the norms of a to generate a proper subgroup of F_q* avoiding
// the norm of eta.
SumRankCode twisted_lrs(const EvaluationPair& pair, Fel eta);
// Deterministic a_i/eta choice for the twisted family; t must divide into
// the proper norm subgroup of index r = smallest prime factor of q-1.
SumRankCode twisted_lrs_default(const FieldPtr& f, unsigned sigma_power, unsigned t);

// Appends a one-dimensional block on every uncovered point of PG(1,q^m);
// the input system must be scattered with k = 2.
QSystem complete_twisted(const QSystem& U);

// Cyclic subgroup of GL(k, q^m) of order q^{km}-1, generated by the
// companion matrix of a monic irreducible degree-k polynomial.
struct SingerGroup {
  FieldPtr field;
  unsigned k = 0;
  std::vector<Fel> p_poly;  // monic, degree k, coefficients low-degree-first
  FqmMatrix M;              // companion matrix
  std::uint64_t order = 0;        // q^{km} - 1
  std::uint64_t quotient_size = 0;  // (q^{km}-1)/(q^m-1)
};

// p_poly empty selects the lexicographically smallest monic irreducible of
// degree k over F_{q^m} (coefficients compared low-degree-first).
SingerGroup singer(const FieldPtr& f, unsigned k, std::vector<Fel> p_poly = {});

// Orbit of U under the transposed action of the given matrices (closure
// under repeated application), deduplicated as subspaces, first-visit order.
// For r > 1, U must be an F_{q^r}-subspace (r dividing m).
std::vector<FqSubspace> orbit(const std::vector<FqmMatrix>& generators,
                              const FqSubspace& U, unsigned r = 1,
                              std::uint64_t budget = (1u << 16));

// The n-simplex code: blocks (M^i)^T A for i = 0..t-1 with A the basis
// columns of U. Coset representatives are not deduplicated.
SumRankCode simplex(const SingerGroup& G, const FqSubspace& U);

// The unique nonzero weight of simplex(G, U), via the embedded rank-metric
// code of dimension s = dim_{F_{q^m}} <U>.
std::uint64_t simplex_weight(const SingerGroup& G, const FqSubspace& U,
                             std::uint64_t budget = (1u << 20));

// Lifting of a k=2 system: per point P with deficiency
// max_weight - w(P) = c*m + d, append c copies of <v>_{F_{q^m}} and one
// d-dimensional piece spanned by the first d of {v, zv, ..., z^{m-1}v}.
struct LiftedSystem {
  QSystem system;
  unsigned target_weight = 0;  // the constant multi-weight M
  unsigned added_blocks = 0;
};

LiftedSystem lift(const QSystem& U);

}  // namespace srk::constructions

#endif  // SRK_CONSTRUCTIONS_HPP_
