#ifndef SRK_HAMMING_EXT_HPP_
#define SRK_HAMMING_EXT_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "srk/geometry.hpp"

namespace srk::hamming_ext {

using geometry::BlockProfile;
using geometry::Fel;
using geometry::Field;
using geometry::FieldPtr;
using geometry::FqmMatrix;
using geometry::FqSubspace;
using geometry::QSystem;
using geometry::SumRankCode;
using geometry::Vec;

// Multiset of projective points with positive multiplicities.
struct ProjectiveMultiset {
  FieldPtr field;
  unsigned k = 0;
  std::map<Vec, std::uint64_t> mult;  // normalized point -> multiplicity >= 1

  std::uint64_t total() const;
};

// Point multiplicities (q^{w(P)} - 1)/(q - 1) of one block / of the whole
// system (blockwise sum).
ProjectiveMultiset ext1(const FqSubspace& U);
ProjectiveMultiset ext(const QSystem& U);

// Hamming generator matrix with one column per multiset element, points in
// canonical projective order, repeats adjacent.
FqmMatrix g_ext(const SumRankCode& C, std::uint64_t max_cols = (1u << 16));

// Number of nonzero entries.
unsigned hamming_weight(const Vec& v);

// Closed form sum_i (q^{n_i} - q^{n_i - rho_i})/(q - 1).
std::uint64_t hamming_weight_formula(const std::vector<unsigned>& rank_list,
                                     const BlockProfile& prof, std::uint64_t q);

// Minimum distance of the associated Hamming code, from the full rank-list
// sweep of the sum-rank code.
std::uint64_t hamming_min_distance(const SumRankCode& C,
                                   std::uint64_t budget = (1u << 22));

struct BonisoliDiagnostics {
  std::uint64_t ell_num = 0, ell_den = 1;  // ell as a reduced fraction
  bool ell_integer = false;
  bool identity = false;
  bool ok() const { return ell_integer && identity; }
};

// The two arithmetic consequences of Bonisoli's theorem for a constant
// rank-profile code with equal block lengths n and rank-profile r.
BonisoliDiagnostics bonisoli_constraints(std::uint64_t q, unsigned m, unsigned k,
                                         unsigned n, unsigned t,
                                         const std::vector<unsigned>& r);

// All non-increasing profiles of length t with entries in
// [max(1, n - m(k-1)), min(n, m)] passing both constraints.
std::vector<std::vector<unsigned>> feasible_profiles(std::uint64_t q, unsigned m,
                                                     unsigned k, unsigned n,
                                                     unsigned t);

}  // namespace srk::hamming_ext

#endif  // SRK_HAMMING_EXT_HPP_
