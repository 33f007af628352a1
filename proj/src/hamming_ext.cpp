#include "srk/hamming_ext.hpp"

#include <numeric>

#include "srk/fqlin.hpp"

namespace srk::hamming_ext {
namespace {

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

using u128 = unsigned __int128;

}  // namespace

std::uint64_t ProjectiveMultiset::total() const {
  std::uint64_t s = 0;
  for (const auto& [pt, c] : mult) s += c;
  return s;
}

ProjectiveMultiset ext1(const FqSubspace& U) {
  const Field& F = *U.field();
  geometry::WeightMap wm = geometry::linear_set(U);
  ProjectiveMultiset out;
  out.field = U.field();
  out.k = U.ambient();
  for (const auto& [pt, w] : wm.weights)
    out.mult[pt] = (upow(F.q(), w) - 1) / (F.q() - 1);
  return out;
}

ProjectiveMultiset ext(const QSystem& U) {
  ProjectiveMultiset out;
  out.field = U.field;
  out.k = U.k;
  for (const auto& b : U.blocks) {
    auto e = ext1(b);
    for (const auto& [pt, c] : e.mult) out.mult[pt] += c;
  }
  return out;
}

FqmMatrix g_ext(const SumRankCode& C, std::uint64_t max_cols) {
  if (!srcode::is_nondegenerate(C))
    throw Error("DegenerateCode", "g_ext requires a nondegenerate code");
  auto ms = ext(geometry::psi(C));
  std::uint64_t M = ms.total();
  if (M > max_cols) throw Error("ExtTooLarge", "too many Hamming columns");
  FqmMatrix G(C.field, C.k, M);
  std::size_t col = 0;
  // canonical projective order, multiplicity copies adjacent
  for (const Vec& p : fqlin::enum_projective(C.field, C.k)) {
    auto it = ms.mult.find(p);
    if (it == ms.mult.end()) continue;
    for (std::uint64_t rep = 0; rep < it->second; ++rep, ++col)
      for (unsigned r = 0; r < C.k; ++r) G.at(r, col) = p[r];
  }
  return G;
}

unsigned hamming_weight(const Vec& v) {
  unsigned w = 0;
  for (Fel x : v)
    if (x != 0) ++w;
  return w;
}

std::uint64_t hamming_weight_formula(const std::vector<unsigned>& rank_list,
                                     const BlockProfile& prof, std::uint64_t q) {
  if (rank_list.size() != prof.t())
    throw Error("ProfileMismatch", "one rank per block");
  std::uint64_t s = 0;
  for (unsigned i = 0; i < prof.t(); ++i) {
    if (rank_list[i] > prof.lengths[i])
      throw Error("BadParameter", "rank exceeds block length");
    s += (upow(q, prof.lengths[i]) - upow(q, prof.lengths[i] - rank_list[i])) / (q - 1);
  }
  return s;
}

std::uint64_t hamming_min_distance(const SumRankCode& C, std::uint64_t budget) {
  const Field& F = *C.field;
  if (fqlin::projective_count(F, C.k) > budget)
    throw Error("SweepTooLarge", "projective sweep exceeds budget");
  std::uint64_t best = UINT64_MAX;
  for (const Vec& v : fqlin::enum_projective(C.field, C.k)) {
    Vec cw = fqlin::mat_vec(v, C.G);
    auto rd = srcode::sum_rank_weight(F, C.profile, cw);
    best = std::min(best, hamming_weight_formula(rd.rank_list, C.profile, F.q()));
  }
  return best;
}

BonisoliDiagnostics bonisoli_constraints(std::uint64_t q, unsigned m, unsigned k,
                                         unsigned n, unsigned t,
                                         const std::vector<unsigned>& r) {
  if (r.size() != t) throw Error("ProfileMismatch", "profile length != t");
  BonisoliDiagnostics d;
  u128 qm = upow(q, m), qn = upow(q, n), qkm = 1;
  for (unsigned i = 0; i < k * m; ++i) qkm *= q;

  u128 num = u128(t) * (qn - 1) * (qm - 1);
  u128 den = (q - 1) * (qkm - 1);
  u128 a = num, b = den;
  while (b) {
    u128 tmp = a % b;
    a = b;
    b = tmp;
  }
  d.ell_num = std::uint64_t(num / a);
  d.ell_den = std::uint64_t(den / a);
  d.ell_integer = d.ell_den == 1 && d.ell_num > 0;

  u128 lhs = u128(t) * u128(upow(q, m * (k - 1))) * (qn - 1) * (qm - 1);
  u128 rhs_sum = 0;
  for (unsigned ri : r) {
    if (ri > n) throw Error("BadParameter", "rank exceeds block length");
    rhs_sum += upow(q, n - ri);
  }
  u128 rhs = (qkm - 1) * (u128(t) * qn - rhs_sum);
  d.identity = lhs == rhs;
  return d;
}

std::vector<std::vector<unsigned>> feasible_profiles(std::uint64_t q, unsigned m,
                                                     unsigned k, unsigned n,
                                                     unsigned t) {
  unsigned hi = std::min(n, m);
  unsigned lo = n > m * (k - 1) ? n - m * (k - 1) : 1;
  std::vector<std::vector<unsigned>> out;
  if (lo > hi || t == 0) return out;
  std::vector<unsigned> cur;
  // enumerate non-increasing profiles recursively
  auto rec = [&](auto&& self, unsigned pos, unsigned maxv) -> void {
    if (pos == t) {
      auto d = bonisoli_constraints(q, m, k, n, t, cur);
      if (d.ok()) out.push_back(cur);
      return;
    }
    for (unsigned v = maxv; v >= lo; --v) {
      cur.push_back(v);
      self(self, pos + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, hi);
  return out;
}

}  // namespace srk::hamming_ext
