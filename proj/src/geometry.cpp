#include "srk/geometry.hpp"

#include <algorithm>

namespace srk::geometry {

QSystem::QSystem(FieldPtr f, unsigned k_in, std::vector<FqSubspace> b)
    : field(std::move(f)), k(k_in), blocks(std::move(b)) {
  if (blocks.empty()) throw Error("BadParameter", "system must have blocks");
  std::vector<Vec> all;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].ambient() != k) throw Error("AmbientMismatch", "block ambient != k");
    if (i > 0 && blocks[i].dim() > blocks[i - 1].dim())
      throw Error("BadParameter", "block dimensions must be non-increasing");
    if (blocks[i].dim() == 0) throw Error("BadParameter", "zero block in system");
    for (const Vec& v : blocks[i].basis()) all.push_back(v);
  }
  if (fqlin::fqm_rank(*field, all) != k)
    throw Error("DegenerateCode", "blocks do not span F_{q^m}^k");
}

BlockProfile QSystem::profile() const {
  std::vector<unsigned> l;
  for (const auto& b : blocks) l.push_back(b.dim());
  return BlockProfile(l);
}

QSystem psi(const SumRankCode& C) {
  if (!srcode::is_nondegenerate(C))
    throw Error("DegenerateCode", "psi requires a nondegenerate code");
  std::vector<FqSubspace> blocks;
  for (unsigned i = 0; i < C.profile.t(); ++i)
    blocks.emplace_back(C.field, C.k, C.block_columns(i));
  return QSystem(C.field, C.k, std::move(blocks));
}

SumRankCode phi(const QSystem& U) {
  BlockProfile prof = U.profile();
  FqmMatrix G(U.field, U.k, prof.N());
  unsigned off = 0;
  for (const auto& b : U.blocks) {
    for (const Vec& col : b.basis()) {
      for (unsigned r = 0; r < U.k; ++r) G.at(r, off) = col[r];
      ++off;
    }
  }
  return SumRankCode(U.field, std::move(prof), std::move(G));
}

std::vector<unsigned> dimension_list(const QSystem& U, const Vec& v) {
  auto H = fqlin::hyperplane_of(U.field, v);
  std::vector<unsigned> out;
  for (const auto& b : U.blocks) out.push_back(fqlin::intersect_dim(b, H));
  return out;
}

std::vector<FqSubspace> subspace_section(const QSystem& U, const Vec& v) {
  auto H = fqlin::hyperplane_of(U.field, v);
  std::vector<FqSubspace> out;
  for (const auto& b : U.blocks) out.push_back(fqlin::intersect(b, H));
  return out;
}

bool verify_duality(const SumRankCode& C, const Vec& v) {
  const Field& F = *C.field;
  QSystem U = psi(C);
  auto sections = subspace_section(U, v);
  Vec x = fqlin::mat_vec(v, C.G);
  auto supports = srcode::support(C.field, C.profile, x);
  for (unsigned i = 0; i < C.profile.t(); ++i) {
    unsigned n = C.profile.lengths[i];
    // orthogonal complement of the block support inside F_q^n
    std::vector<Vec> rows = supports[i].basis();
    std::vector<Vec> perp;
    if (rows.empty()) {
      // zero support: complement is everything
      for (unsigned j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        perp.push_back(std::move(e));
      }
    } else {
      perp = fqlin::fq_nullspace(F, rows);
    }
    // image under G_i: lambda -> sum lambda_j (column j of G_i)
    auto cols = C.block_columns(i);
    std::vector<Vec> image;
    for (const Vec& lam : perp) {
      Vec w(C.k, 0);
      for (unsigned j = 0; j < n; ++j)
        for (unsigned r = 0; r < C.k; ++r)
          w[r] = F.add(w[r], F.mul(lam[j], cols[j][r]));
      image.push_back(std::move(w));
    }
    FqSubspace img(C.field, C.k, image);
    if (!img.same_space(sections[i])) return false;
  }
  return true;
}

bool geometric_msrd(const QSystem& U, std::uint64_t budget) {
  if (U.k == 1) return true;
  const Field& F = *U.field;
  if (fqlin::projective_count(F, U.k) > budget)
    throw Error("SweepTooLarge", "hyperplane sweep exceeds budget");
  for (const Vec& v : fqlin::enum_projective(U.field, U.k)) {
    unsigned s = 0;
    for (unsigned d : dimension_list(U, v)) s += d;
    if (s > U.k - 1) return false;
  }
  return true;
}

WeightMap linear_set(const FqSubspace& U) {
  const Field& F = *U.field();
  WeightMap wm;
  wm.field = U.field();
  wm.k = U.ambient();
  // count nonzero vectors of U on each point: q^w - 1 of them
  std::map<Vec, std::uint64_t> counts;
  for (const Vec& u : U.enumerate()) {
    bool zero = std::all_of(u.begin(), u.end(), [](Fel x) { return x == 0; });
    if (zero) continue;
    counts[fqlin::normalize_point(F, u)]++;
  }
  for (const auto& [pt, c] : counts) {
    unsigned w = 0;
    std::uint64_t pw = 1;
    while (pw - 1 < c) {
      pw *= F.q();
      ++w;
    }
    wm.weights[pt] = w;
  }
  return wm;
}

WeightMap multi_weight(const QSystem& U) {
  WeightMap wm;
  wm.field = U.field;
  wm.k = U.k;
  for (const auto& b : U.blocks) {
    WeightMap bw = linear_set(b);
    for (const auto& [pt, w] : bw.weights) wm.weights[pt] += w;
  }
  return wm;
}

bool is_scattered(const WeightMap& w) {
  for (const auto& [pt, wt] : w.weights)
    if (wt > 1) return false;
  return true;
}

bool covers_line(const WeightMap& w) {
  if (w.k != 2) throw Error("WrongDimension", "line cover is a k=2 notion");
  return w.weights.size() == w.field->size() + 1;
}

std::optional<unsigned> one_weight_check(const QSystem& U) {
  if (U.k != 2) throw Error("WrongDimension", "one-weight criterion is k=2 only");
  WeightMap wm = multi_weight(U);
  if (wm.weights.size() != U.field->size() + 1) return std::nullopt;  // some point has weight 0
  unsigned c = wm.weights.begin()->second;
  for (const auto& [pt, w] : wm.weights)
    if (w != c) return std::nullopt;
  return U.N() - c;
}

BlockBoundDiagnostics msrd_block_bounds(const BlockProfile& prof, std::uint64_t q,
                                        unsigned m) {
  BlockBoundDiagnostics d;
  std::uint64_t t = prof.t();
  std::uint64_t qm = 1;
  for (unsigned i = 0; i < m; ++i) qm *= q;
  d.t_lower = t >= q + 1;
  d.t_upper = t <= qm + 1;
  d.t_mod_q = t % q == 1;
  std::uint64_t pts = 0;
  for (unsigned ni : prof.lengths) {
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < ni; ++i) qn *= q;
    pts += (qn - 1) / (q - 1);
  }
  d.point_identity = pts == qm + 1;
  if (t == q + 1) {
    // (m,...,m,1,1) with q-1 blocks of length m, or (m-1,m-1,2) at q=2
    std::vector<unsigned> shape_a(std::size_t(q - 1), m);
    shape_a.push_back(1);
    shape_a.push_back(1);
    std::sort(shape_a.rbegin(), shape_a.rend());
    bool a = prof.lengths == shape_a;
    bool b = q == 2 && m >= 3 &&
             prof.lengths == std::vector<unsigned>{m - 1, m - 1, 2};
    d.boundary_shape = a || b;
  }
  return d;
}

}  // namespace srk::geometry
