#ifndef SRK_SRCODE_HPP_
#define SRK_SRCODE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "srk/fqlin.hpp"

namespace srk::srcode {

using fqlin::Fel;
using fqlin::Field;
using fqlin::FieldPtr;
using fqlin::FqmMatrix;
using fqlin::FqSubspace;
using fqlin::Vec;

// Block lengths (n_1,...,n_t), non-increasing, all >= 1.
struct BlockProfile {
  std::vector<unsigned> lengths;

  BlockProfile() = default;
  explicit BlockProfile(std::vector<unsigned> l);
  unsigned t() const { return unsigned(lengths.size()); }
  unsigned N() const;
  // start offset of block i in a flat length-N vector
  unsigned offset(unsigned i) const;
  bool operator==(const BlockProfile&) const = default;
};

struct RankData {
  std::vector<unsigned> rank_list;     // rho_i per block
  std::vector<unsigned> rank_profile;  // rho sorted non-increasing
  unsigned weight = 0;                 // sum of rank_list
};

// Linear sum-rank-metric code: row space of a full-rank k x N generator
// matrix, columns partitioned per the profile.
struct SumRankCode {
  FieldPtr field;
  BlockProfile profile;
  unsigned k = 0;
  FqmMatrix G;

  SumRankCode(FieldPtr f, BlockProfile prof, FqmMatrix gen);
  unsigned N() const { return profile.N(); }
  // columns of block i as vectors in F_{q^m}^k
  std::vector<Vec> block_columns(unsigned i) const;
};

RankData sum_rank_weight(const Field& F, const BlockProfile& prof, const Vec& x);

// Per-block coordinate matrices of x over the given basis tuple; block r is
// the n_r x m matrix expanding x_r over gamma[r].
std::vector<std::vector<Vec>> expand_matrix(const Field& F, const BlockProfile& prof,
                                            const Vec& x,
                                            const std::vector<Vec>& gamma);

// Per-block support: column space of the expansion of x_i, an F_q-subspace
// of F_q^{n_i} (independent of the expansion basis).
std::vector<FqSubspace> support(const FieldPtr& f, const BlockProfile& prof,
                                const Vec& x);

// weight -> number of nonzero codewords of that weight; each projective
// representative in the sweep contributes q^m - 1.
using WeightCounts = std::map<unsigned, std::uint64_t>;

WeightCounts weight_distribution(const SumRankCode& C, unsigned workers = 1,
                                 std::uint64_t budget = (1u << 22));
unsigned min_distance(const SumRankCode& C, unsigned workers = 1,
                      std::uint64_t budget = (1u << 22));

bool is_msrd(const SumRankCode& C, unsigned workers = 1,
             std::uint64_t budget = (1u << 22));
std::optional<unsigned> is_one_weight(const SumRankCode& C, unsigned workers = 1,
                                      std::uint64_t budget = (1u << 22));
// The shared rank-profile if every nonzero codeword has the same one.
std::optional<std::vector<unsigned>> constant_rank_profile(
    const SumRankCode& C, std::uint64_t budget = (1u << 22));

// True iff every block of G has F_q-independent columns.
bool is_nondegenerate(const SumRankCode& C);

// The (N-k)-dimensional code with G_dual * G^T = 0, same profile.
SumRankCode dual(const SumRankCode& C);

// Ambient isometry: x -> (a_1 x_{pi(1)} A_1, ..., a_t x_{pi(t)} A_t) with
// a_i in F_{q^m}*, A_i in GL(n_i, F_q), pi permuting equal-length blocks.
SumRankCode apply_isometry(const SumRankCode& C, const std::vector<Fel>& a,
                           const std::vector<std::vector<Vec>>& A,
                           const std::vector<unsigned>& pi);

}  // namespace srk::srcode

#endif  // SRK_SRCODE_HPP_
