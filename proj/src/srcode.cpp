#include "srk/srcode.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace srk::srcode {

BlockProfile::BlockProfile(std::vector<unsigned> l) : lengths(std::move(l)) {
  if (lengths.empty()) throw Error("BadParameter", "profile must be nonempty");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) throw Error("BadParameter", "block lengths must be >= 1");
    if (i > 0 && lengths[i] > lengths[i - 1])
      throw Error("BadParameter", "profile must be non-increasing");
  }
}

unsigned BlockProfile::N() const {
  unsigned s = 0;
  for (unsigned l : lengths) s += l;
  return s;
}

unsigned BlockProfile::offset(unsigned i) const {
  unsigned s = 0;
  for (unsigned j = 0; j < i; ++j) s += lengths[j];
  return s;
}

SumRankCode::SumRankCode(FieldPtr f, BlockProfile prof, FqmMatrix gen)
    : field(std::move(f)), profile(std::move(prof)), k(unsigned(gen.rows)), G(std::move(gen)) {
  if (G.cols != profile.N()) throw Error("ProfileMismatch", "G columns != profile total");
  if (k < 1 || k > profile.N()) throw Error("BadDimension", "need 1 <= k <= N");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < G.rows; ++r) rows.push_back(G.row(r));
  if (fqlin::fqm_rank(*field, rows) != k)
    throw Error("BadDimension", "generator matrix is rank deficient");
}

std::vector<Vec> SumRankCode::block_columns(unsigned i) const {
  unsigned off = profile.offset(i);
  std::vector<Vec> cols;
  for (unsigned c = 0; c < profile.lengths[i]; ++c) cols.push_back(G.col(off + c));
  return cols;
}

RankData sum_rank_weight(const Field& F, const BlockProfile& prof, const Vec& x) {
  if (x.size() != prof.N()) throw Error("ProfileMismatch", "vector length != profile total");
  RankData rd;
  unsigned off = 0;
  for (unsigned l : prof.lengths) {
    Vec block(x.begin() + off, x.begin() + off + l);
    unsigned r = fqlin::rank_q(F, block);
    rd.rank_list.push_back(r);
    rd.weight += r;
    off += l;
  }
  rd.rank_profile = rd.rank_list;
  std::sort(rd.rank_profile.begin(), rd.rank_profile.end(), std::greater<unsigned>());
  return rd;
}

std::vector<std::vector<Vec>> expand_matrix(const Field& F, const BlockProfile& prof,
                                            const Vec& x,
                                            const std::vector<Vec>& gamma) {
  if (x.size() != prof.N()) throw Error("ProfileMismatch", "vector length != profile total");
  if (gamma.size() != prof.t()) throw Error("ProfileMismatch", "one basis per block");
  std::vector<std::vector<Vec>> out;
  unsigned off = 0;
  for (unsigned i = 0; i < prof.t(); ++i) {
    Vec block(x.begin() + off, x.begin() + off + prof.lengths[i]);
    out.push_back(fqlin::expand_over_basis(F, block, gamma[i]));
    off += prof.lengths[i];
  }
  return out;
}

std::vector<FqSubspace> support(const FieldPtr& f, const BlockProfile& prof,
                                const Vec& x) {
  const Field& F = *f;
  // expand over the canonical basis {1, z, ..., z^{m-1}}
  Vec canonical(F.m());
  Fel zj = 1;
  for (unsigned j = 0; j < F.m(); ++j) {
    canonical[j] = zj;
    zj = F.mul(zj, F.z());
  }
  std::vector<Vec> gamma(prof.t(), canonical);
  auto blocks = expand_matrix(F, prof, x, gamma);
  std::vector<FqSubspace> out;
  for (unsigned i = 0; i < prof.t(); ++i) {
    // columns of the n_i x m expansion, living in F_q^{n_i}
    std::vector<Vec> cols;
    for (unsigned c = 0; c < F.m(); ++c) {
      Vec col(prof.lengths[i]);
      for (unsigned r = 0; r < prof.lengths[i]; ++r) col[r] = blocks[i][r][c];
      cols.push_back(std::move(col));
    }
    out.emplace_back(f, prof.lengths[i], cols);
  }
  return out;
}

namespace {

// Projective message sweep: one codeword per ray of the code. The visitor
// receives (index, weight data). Partitioned deterministically by index
// range across workers.
void sweep(const SumRankCode& C, unsigned workers, std::uint64_t budget,
           const std::function<void(unsigned worker, const RankData&)>& visit) {
  const Field& F = *C.field;
  std::uint64_t total = fqlin::projective_count(F, C.k);
  if (total > budget) throw Error("SweepTooLarge", "projective sweep exceeds budget");
  auto points = fqlin::enum_projective(C.field, C.k);
  if (workers < 1) workers = 1;
  if (workers > points.size()) workers = unsigned(points.size());
  auto work = [&](unsigned w, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Vec cw = fqlin::mat_vec(points[i], C.G);
      visit(w, sum_rank_weight(F, C.profile, cw));
    }
  };
  if (workers == 1) {
    work(0, 0, points.size());
    return;
  }
  std::vector<std::thread> th;
  std::size_t chunk = (points.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = std::size_t(w) * chunk;
    std::size_t hi = std::min(points.size(), lo + chunk);
    if (lo >= hi) break;
    th.emplace_back(work, w, lo, hi);
  }
  for (auto& t : th) t.join();
}

}  // namespace

WeightCounts weight_distribution(const SumRankCode& C, unsigned workers,
                                 std::uint64_t budget) {
  std::vector<WeightCounts> local(std::max(workers, 1u));
  sweep(C, workers, budget,
        [&](unsigned w, const RankData& rd) { local[w][rd.weight]++; });
  // each projective representative stands for q^m - 1 nonzero codewords
  WeightCounts merged;
  for (const auto& lc : local)
    for (const auto& [wt, c] : lc) merged[wt] += c * (C.field->size() - 1);
  return merged;
}

unsigned min_distance(const SumRankCode& C, unsigned workers, std::uint64_t budget) {
  auto wd = weight_distribution(C, workers, budget);
  return wd.begin()->first;
}

bool is_msrd(const SumRankCode& C, unsigned workers, std::uint64_t budget) {
  return min_distance(C, workers, budget) == C.N() - C.k + 1;
}

std::optional<unsigned> is_one_weight(const SumRankCode& C, unsigned workers,
                                      std::uint64_t budget) {
  auto wd = weight_distribution(C, workers, budget);
  if (wd.size() == 1) return wd.begin()->first;
  return std::nullopt;
}

std::optional<std::vector<unsigned>> constant_rank_profile(const SumRankCode& C,
                                                           std::uint64_t budget) {
  std::optional<std::vector<unsigned>> prof;
  bool mixed = false;
  sweep(C, 1, budget, [&](unsigned, const RankData& rd) {
    if (mixed) return;
    if (!prof)
      prof = rd.rank_profile;
    else if (*prof != rd.rank_profile)
      mixed = true;
  });
  if (mixed) return std::nullopt;
  return prof;
}

bool is_nondegenerate(const SumRankCode& C) {
  const Field& F = *C.field;
  for (unsigned i = 0; i < C.profile.t(); ++i) {
    auto cols = C.block_columns(i);
    std::vector<Vec> flat;
    for (const Vec& c : cols) flat.push_back(fqlin::flatten(F, c));
    if (fqlin::fq_rank(F, std::move(flat)) != cols.size()) return false;
  }
  return true;
}

SumRankCode dual(const SumRankCode& C) {
  if (C.k == C.N()) throw Error("FullSpace", "the full space has no proper dual");
  const Field& F = *C.field;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < C.G.rows; ++r) rows.push_back(C.G.row(r));
  // solutions x with G x^T = 0; elimination is valid over the big field
  auto ker = fqlin::fq_nullspace(F, rows);
  FqmMatrix Gd(C.field, ker.size(), C.N());
  for (std::size_t r = 0; r < ker.size(); ++r)
    for (unsigned c = 0; c < C.N(); ++c) Gd.at(r, c) = ker[r][c];
  return SumRankCode(C.field, C.profile, std::move(Gd));
}

SumRankCode apply_isometry(const SumRankCode& C, const std::vector<Fel>& a,
                           const std::vector<std::vector<Vec>>& A,
                           const std::vector<unsigned>& pi) {
  const Field& F = *C.field;
  unsigned t = C.profile.t();
  if (a.size() != t || A.size() != t || pi.size() != t)
    throw Error("ProfileMismatch", "need one a, A, pi entry per block");
  // pi must be a permutation preserving block lengths
  std::vector<bool> seen(t, false);
  for (unsigned i = 0; i < t; ++i) {
    unsigned j = pi[i];
    if (j >= t || seen[j]) throw Error("IllegalPermutation", "pi is not a permutation");
    seen[j] = true;
    if (C.profile.lengths[i] != C.profile.lengths[j])
      throw Error("IllegalPermutation", "pi mixes blocks of different lengths");
  }
  for (unsigned i = 0; i < t; ++i) {
    if (a[i] == 0) throw Error("BadParameter", "block scalars must be nonzero");
    unsigned n = C.profile.lengths[i];
    if (A[i].size() != n) throw Error("BadParameter", "A_i must be n_i x n_i");
    std::vector<Vec> rows = A[i];
    for (const Vec& r : rows) {
      if (r.size() != n) throw Error("BadParameter", "A_i must be n_i x n_i");
      for (Fel x : r)
        if (!F.in_subfield(x)) throw Error("BadParameter", "A_i entries must lie in F_q");
    }
    if (fqlin::fq_rank(F, std::move(rows)) != n)
      throw Error("BadParameter", "A_i must be invertible");
  }
  FqmMatrix Gi(C.field, C.k, C.N());
  for (unsigned r = 0; r < C.k; ++r) {
    Vec x = C.G.row(r);
    for (unsigned i = 0; i < t; ++i) {
      unsigned n = C.profile.lengths[i];
      unsigned dst = C.profile.offset(i), src = C.profile.offset(pi[i]);
      for (unsigned c = 0; c < n; ++c) {
        Fel s = 0;
        for (unsigned l = 0; l < n; ++l)
          s = F.add(s, F.mul(x[src + l], A[i][l][c]));
        Gi.at(r, dst + c) = F.mul(a[i], s);
      }
    }
  }
  return SumRankCode(C.field, C.profile, std::move(Gi));
}

}  // namespace srk::srcode
