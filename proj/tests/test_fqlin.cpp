#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "srk/fqlin.hpp"

using namespace srk::gf;
using namespace srk::fqlin;

namespace {
Vec random_vec(const Field& F, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, F.size() - 1);
  Vec v(n);
  for (auto& x : v) x = Fel(pick(rng));
  return v;
}
}  // namespace

TEST_CASE("rank_q over F4/F2") {
  auto F = make_field(2, 1, 2);
  Fel a = F->z();
  CHECK(rank_q(*F, {1, a, F->mul(a, a)}) == 2);  // span is all of F4
  CHECK(rank_q(*F, {1, 1, 1}) == 1);
  CHECK(rank_q(*F, {0, 0}) == 0);
  CHECK(rank_q(*F, {a, a}) == 1);
}

TEST_CASE("rank_q over F16/F2 and F16/F4") {
  auto F2 = make_field(2, 1, 4, {1, 1, 0, 0, 1});
  Fel b = F2->z();
  // 1, b, b^2, b^3 are F2-independent
  CHECK(rank_q(*F2, {1, b, F2->pow(b, 2), F2->pow(b, 3)}) == 4);
  CHECK(rank_q(*F2, {1, b, F2->add(1, b)}) == 2);

  auto F4 = make_field(2, 2, 2);  // q = 4, m = 2
  Fel z = F4->z();
  // {1, z} is an F4-basis of F16
  CHECK(rank_q(*F4, {1, z}) == 2);
  // entries in the subfield span a 1-dim F4-space
  auto sub = F4->subfield();
  CHECK(rank_q(*F4, {sub[1], sub[2], sub[3]}) == 1);
}

TEST_CASE("rank_q is invariant under scaling and F_q-operations") {
  auto F = make_field(3, 1, 2);
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::uint64_t> pick(1, F->size() - 1);
  for (int it = 0; it < 300; ++it) {
    Vec v = random_vec(*F, 5, rng);
    Fel c = Fel(pick(rng));
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = F->mul(c, v[i]);
    CHECK(rank_q(*F, v) == rank_q(*F, w));
    // permute entries
    Vec pm = {v[3], v[0], v[4], v[1], v[2]};
    CHECK(rank_q(*F, v) == rank_q(*F, pm));
  }
}

TEST_CASE("fqm_rank and fqm_kernel") {
  auto F = make_field(2, 1, 2);
  Fel a = F->z();
  std::vector<Vec> rows = {{1, 0, a}, {0, 1, 1}, {1, 1, F->add(a, 1)}};
  CHECK(fqm_rank(*F, rows) == 2);  // row3 = row1 + row2
  auto ker = fqm_kernel(*F, rows);
  REQUIRE(ker.size() == 1);
  // check the dependency: sum x_i rows_i = 0
  for (std::size_t j = 0; j < 3; ++j) {
    Fel s = 0;
    for (std::size_t i = 0; i < 3; ++i) s = F->add(s, F->mul(ker[0][i], rows[i][j]));
    CHECK(s == 0);
  }
}

TEST_CASE("matrix multiply and identity") {
  auto F = make_field(3, 1, 2);
  std::mt19937 rng(7);
  FqmMatrix A(F, 3, 4), B(F, 4, 2);
  std::uniform_int_distribution<std::uint64_t> pick(0, F->size() - 1);
  for (auto& x : A.a) x = Fel(pick(rng));
  for (auto& x : B.a) x = Fel(pick(rng));
  auto C = mat_mul(A, B);
  REQUIRE(C.rows == 3);
  REQUIRE(C.cols == 2);
  // spot-check one entry
  Fel s = 0;
  for (std::size_t l = 0; l < 4; ++l) s = F->add(s, F->mul(A.at(1, l), B.at(l, 0)));
  CHECK(C.at(1, 0) == s);
  auto I = mat_identity(F, 4);
  auto AI = mat_mul(A, I);
  CHECK(AI.a == A.a);
  // x * A agrees with explicit expansion
  Vec x = random_vec(*F, 3, rng);
  Vec y = mat_vec(x, A);
  for (std::size_t c = 0; c < 4; ++c) {
    Fel t = 0;
    for (std::size_t r = 0; r < 3; ++r) t = F->add(t, F->mul(x[r], A.at(r, c)));
    CHECK(y[c] == t);
  }
}

TEST_CASE("greedy basis keeps earliest independent generators") {
  auto F = make_field(2, 1, 2);
  Fel a = F->z();
  std::vector<Vec> gens = {{1, 0}, {1, 0}, {0, a}, {1, a}};
  auto basis = fq_greedy_basis(*F, gens);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == Vec{1, 0});
  CHECK(basis[1] == Vec{0, a});
}

TEST_CASE("FqSubspace basics over F4/F2") {
  auto F = make_field(2, 1, 2);
  Fel a = F->z();
  FqSubspace U(F, 2, {{1, 0}, {a, 0}, {F->add(a, 1), 0}});
  CHECK(U.dim() == 2);  // {1, a} spans an F2-plane inside the first coordinate
  CHECK(U.contains({F->add(a, 1), 0}));
  CHECK(!U.contains({0, 1}));
  auto all = U.enumerate();
  CHECK(all.size() == 4);
  std::set<Vec> dedup(all.begin(), all.end());
  CHECK(dedup.size() == 4);
  for (const auto& v : all) CHECK(U.contains(v));
}

TEST_CASE("subspace dimension formula dim U + dim W = dim(U+W) + dim(U^W)") {
  auto F = make_field(2, 1, 3);
  std::mt19937 rng(2024);
  for (int it = 0; it < 100; ++it) {
    std::vector<Vec> gu, gw;
    for (int i = 0; i < 3; ++i) gu.push_back(random_vec(*F, 2, rng));
    for (int i = 0; i < 3; ++i) gw.push_back(random_vec(*F, 2, rng));
    FqSubspace U(F, 2, gu), W(F, 2, gw);
    auto I = intersect(U, W);
    auto S = sum(U, W);
    CHECK(U.dim() + W.dim() == S.dim() + I.dim());
    CHECK(I.dim() == intersect_dim(U, W));
    for (const auto& b : I.basis()) {
      CHECK(U.contains(b));
      CHECK(W.contains(b));
    }
  }
}

TEST_CASE("projective point enumeration") {
  auto F4 = make_field(2, 1, 2);
  auto pts = enum_projective(F4, 2);
  CHECK(pts.size() == 5);
  CHECK(projective_count(*F4, 2) == 5);
  CHECK(pts[0] == Vec{0, 1});  // leading zeros sort first
  CHECK(pts[1] == Vec{1, 0});
  std::set<Vec> dedup(pts.begin(), pts.end());
  CHECK(dedup.size() == 5);
  for (const auto& p : pts) CHECK(normalize_point(*F4, p) == p);

  auto F16 = make_field(2, 1, 4, {1, 1, 0, 0, 1});
  CHECK(enum_projective(F16, 2).size() == 17);
  CHECK(projective_count(*F16, 3) == 273);
  auto pts3 = enum_projective(F4, 3);
  CHECK(pts3.size() == 21);
  // normalization maps every scalar multiple back to the representative
  for (const auto& p : pts3)
    for (Fel c : F4->elements()) {
      if (c == 0) continue;
      Vec s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = F4->mul(c, p[i]);
      CHECK(normalize_point(*F4, s) == p);
    }
}

TEST_CASE("hyperplane of a dual codeword has F_q-dimension m(k-1)") {
  auto F = make_field(2, 1, 3);  // F8/F2, m = 3
  std::mt19937 rng(5);
  for (int it = 0; it < 50; ++it) {
    Vec v = random_vec(*F, 3, rng);
    bool zero = true;
    for (Fel x : v) zero &= (x == 0);
    if (zero) continue;
    auto H = hyperplane_of(F, v);
    CHECK(H.dim() == 3 * 2);  // m(k-1) = 3*2
    // every basis vector pairs to zero with v
    for (const auto& b : H.basis()) {
      Fel s = 0;
      for (std::size_t i = 0; i < 3; ++i) s = F->add(s, F->mul(v[i], b[i]));
      CHECK(s == 0);
    }
  }
}

TEST_CASE("expand_over_basis writes coordinates over a chosen basis") {
  auto F = make_field(2, 1, 2);
  Fel a = F->z();
  // gamma = (1, a): a^2 = 1 + a so coordinates of a^2 are (1, 1)
  auto rowsc = expand_over_basis(*F, {F->mul(a, a), 1, a}, {1, a});
  REQUIRE(rowsc.size() == 3);
  CHECK(rowsc[0] == Vec{1, 1});
  CHECK(rowsc[1] == Vec{1, 0});
  CHECK(rowsc[2] == Vec{0, 1});
  // dependent gamma rejected
  CHECK_THROWS_AS(expand_over_basis(*F, {1}, {1, 1}), srk::Error);
  // reconstruction: x_i = sum_j rowsc[i][j] * gamma_j
  auto F9 = make_field(3, 1, 2);
  std::mt19937 rng(11);
  Vec gamma = {F9->add(1, F9->z()), F9->z()};
  for (int it = 0; it < 100; ++it) {
    Vec x = random_vec(*F9, 4, rng);
    auto C = expand_over_basis(*F9, x, gamma);
    for (std::size_t i = 0; i < x.size(); ++i) {
      Fel s = 0;
      for (std::size_t j = 0; j < gamma.size(); ++j)
        s = F9->add(s, F9->mul(C[i][j], gamma[j]));
      CHECK(s == x[i]);
      for (Fel c : C[i]) CHECK(F9->in_subfield(c));
    }
  }
}

TEST_CASE("fq_nullspace and fq_dependencies") {
  auto F = make_field(2, 1, 2);
  Fel a = F->z();
  // dependencies among (1, a, 1+a): single relation 1 + a + (1+a) = 0
  auto deps = fq_dependencies(*F, {{1}, {a}, {F->add(1, a)}});
  REQUIRE(deps.size() == 1);  // three vectors of F_q-rank 2
  CHECK(deps[0] == Vec{1, 1, 1});
  auto deps2 = fq_dependencies(*F, {{1}, {a}});
  CHECK(deps2.empty());
  // nullspace of a 1x3 row over F2
  auto ns = fq_nullspace(*F, {{1, 1, 0}});
  CHECK(ns.size() == 2);
  for (const auto& x : ns) CHECK(F->add(x[0], x[1]) == 0);
}
