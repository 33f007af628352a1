#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srk/constructions.hpp"
#include "srk/hamming_ext.hpp"

using namespace srk::gf;
using namespace srk::constructions;
using srk::Error;
namespace fqlin = srk::fqlin;
namespace srcode = srk::srcode;
namespace geometry = srk::geometry;

TEST_CASE("linearized Reed-Solomon codes are MSRD") {
  auto F = make_field(3, 1, 2);
  auto pair = default_pair(F, 1, 2, 2);
  auto C = lrs(2, pair);
  CHECK(C.profile == srcode::BlockProfile({2, 2}));
  CHECK(C.k == 2);
  CHECK(srcode::min_distance(C) == 3);
  CHECK(srcode::is_msrd(C));

  // k = 1 and k = 3 variants stay MSRD
  CHECK(srcode::is_msrd(lrs(1, pair)));
  CHECK(srcode::is_msrd(lrs(3, pair)));
}

TEST_CASE("doubly extended codes are one-weight MSRD for k = 2") {
  {
    auto F = make_field(2, 1, 3);
    auto pair = default_pair(F, 1, 1, 3);
    auto C = doubly_extended_lrs(2, pair, 1, 1);
    CHECK(C.profile == srcode::BlockProfile({3, 1, 1}));
    CHECK(srcode::is_msrd(C));
    auto w = srcode::is_one_weight(C);
    REQUIRE(w.has_value());
    CHECK(*w == 4);
  }
  {
    auto F = make_field(3, 1, 2);
    auto pair = default_pair(F, 1, 2, 2);
    auto C = doubly_extended_lrs(2, pair, 1, F->z());
    CHECK(C.profile == srcode::BlockProfile({2, 2, 1, 1}));
    CHECK(srcode::is_msrd(C));
    auto w = srcode::is_one_weight(C);
    REQUIRE(w.has_value());
    CHECK(*w == 5);
  }
}

TEST_CASE("the extension blocks span the expected rays") {
  auto F = make_field(3, 1, 2);
  auto pair = default_pair(F, 1, 2, 2);
  Fel gamma = F->z(), delta = 2;
  auto C = doubly_extended_lrs(2, pair, gamma, delta);
  auto U = geometry::psi(C);
  REQUIRE(U.blocks.size() == 4);
  CHECK(U.blocks[2].dim() == 1);
  CHECK(U.blocks[2].contains({gamma, 0}));
  CHECK(U.blocks[3].dim() == 1);
  CHECK(U.blocks[3].contains({0, delta}));
  // interior blocks follow {(y, a_i y^q) : y}
  for (unsigned i = 0; i < 2; ++i)
    for (Fel y : F->elements())
      CHECK(U.blocks[i].contains({y, F->mul(pair.a[i], F->pow(y, 3))}));
}

TEST_CASE("doubly extended construction rejects zero extension scalars") {
  auto F = make_field(3, 1, 2);
  auto pair = default_pair(F, 1, 2, 2);
  CHECK_THROWS_AS(doubly_extended_lrs(2, pair, 0, 1), Error);
  CHECK_THROWS_AS(doubly_extended_lrs(2, pair, 1, 0), Error);
  CHECK_THROWS_AS(doubly_extended_lrs(1, pair, 1, 1), Error);
}

TEST_CASE("2-fold construction matches the worked F16 instance") {
  auto F = make_field(2, 1, 4, {1, 1, 0, 0, 1});
  Fel b = F->z();
  auto bp = [&](unsigned i) { return F->pow(b, i); };
  auto C = two_fold_lrs(F, {1, b, bp(2)}, bp(3));
  CHECK(C.profile == srcode::BlockProfile({3, 3, 2}));
  CHECK(srcode::is_msrd(C));
  auto w = srcode::is_one_weight(C);
  REQUIRE(w.has_value());
  CHECK(*w == 7);

  auto U = geometry::psi(C);
  fqlin::FqSubspace X(F, 2, {{1, 1}, {b, bp(2)}, {bp(2), bp(4)}});
  fqlin::FqSubspace Y(F, 2, {{1, bp(14)}, {b, bp(10)}, {bp(2), bp(8)}});
  fqlin::FqSubspace Z(F, 2, {{1, 0}, {0, bp(3)}});
  CHECK(U.blocks[0].same_space(X));
  CHECK(U.blocks[1].same_space(Y));
  CHECK(U.blocks[2].same_space(Z));
}

TEST_CASE("2-fold construction at the smallest extension degree") {
  auto F = make_field(2, 1, 3);
  auto C = two_fold_lrs(F, {1, F->z()}, F->pow(F->z(), 2));
  CHECK(C.profile == srcode::BlockProfile({2, 2, 2}));
  CHECK(srcode::is_msrd(C));
  auto w = srcode::is_one_weight(C);
  REQUIRE(w.has_value());
  CHECK(*w == 5);
}

TEST_CASE("2-fold construction validates its inputs") {
  auto F3 = make_field(3, 1, 3);
  CHECK_THROWS_AS(two_fold_lrs(F3, {1, F3->z()}, F3->pow(F3->z(), 2)), Error);
  auto F = make_field(2, 1, 3);
  // delta inside the hyperplane is not allowed
  CHECK_THROWS_AS(two_fold_lrs(F, {1, F->z()}, F->z()), Error);
  CHECK_THROWS_AS(two_fold_lrs(F, {1}, F->z()), Error);
}

TEST_CASE("twisted construction gives MSRD codes beyond the classic t bound") {
  auto F = make_field(5, 1, 2);
  auto C = twisted_lrs_default(F, 1, 2);
  CHECK(C.profile == srcode::BlockProfile({2, 2}));
  CHECK(C.k == 2);
  CHECK(srcode::min_distance(C) == 3);
  CHECK(srcode::is_msrd(C));
  // the associated system is scattered
  auto U = geometry::psi(C);
  CHECK(geometry::is_scattered(geometry::multi_weight(U)));
  // t exceeding the norm subgroup budget is rejected
  CHECK_THROWS_AS(twisted_lrs_default(F, 1, 3), Error);
}

TEST_CASE("twisted construction rejects a bad eta") {
  auto F = make_field(5, 1, 2);
  // a_i = g^{2i} have norms in the index-2 subgroup; eta must stay outside
  Fel g = F->primitive();
  EvaluationPair pair(F, 1, {F->pow(g, 2), F->pow(g, 4)}, {1, F->z()});
  CHECK_THROWS_AS(twisted_lrs(pair, F->pow(g, 2)), Error);
  CHECK_NOTHROW(twisted_lrs(pair, g));
}

TEST_CASE("completing a twisted system yields a one-weight MSRD code") {
  auto F = make_field(5, 1, 2);
  auto C = twisted_lrs_default(F, 1, 2);
  auto U = geometry::psi(C);
  auto V = complete_twisted(U);
  // 26 points of PG(1,25), 6 covered per scattered 2-dim block
  CHECK(V.blocks.size() == 16);
  CHECK(V.profile() == srcode::BlockProfile(
                           {2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  auto wm = geometry::multi_weight(V);
  CHECK(geometry::covers_line(wm));
  for (const auto& [pt, w] : wm.weights) CHECK(w == 1);
  auto D = geometry::phi(V);
  auto w = srcode::is_one_weight(D);
  REQUIRE(w.has_value());
  CHECK(*w == 17);
  CHECK(srcode::is_msrd(D));
}

TEST_CASE("companion matrices generate the full cyclic group") {
  auto F = make_field(2, 1, 2);
  Fel a = F->z();
  Fel a2 = F->mul(a, a);
  auto G = singer(F, 2, {a2, 1, 1});  // x^2 + x + a^2
  CHECK(G.order == 15);
  CHECK(G.quotient_size == 5);
  CHECK(G.M.at(0, 0) == 0);
  CHECK(G.M.at(0, 1) == a2);
  CHECK(G.M.at(1, 0) == 1);
  CHECK(G.M.at(1, 1) == 1);
  // M has multiplicative order exactly 15
  FqmMatrix P = fqlin::mat_identity(F, 2);
  unsigned ord = 0;
  do {
    P = fqlin::mat_mul(P, G.M);
    ++ord;
  } while (!(P.a == fqlin::mat_identity(F, 2).a));
  CHECK(ord == 15);
}

TEST_CASE("default Singer polynomial is irreducible with a full-order root") {
  auto F = make_field(2, 1, 2);
  auto G = singer(F, 2);
  CHECK(G.p_poly.size() == 3);
  CHECK(G.p_poly[2] == 1);
  // M^5 is the scalar beta^5 of order 3, so M itself has order 15
  FqmMatrix P = fqlin::mat_identity(F, 2);
  for (unsigned i = 0; i < 5; ++i) P = fqlin::mat_mul(P, G.M);
  CHECK(P.at(0, 1) == 0);
  CHECK(P.at(1, 0) == 0);
  CHECK(P.at(0, 0) == P.at(1, 1));
  CHECK(P.at(0, 0) != 1);
  // reducible and non-primitive inputs are rejected
  CHECK_THROWS_AS(singer(F, 2, {1, 0, 1}), Error);  // (x+1)^2
  auto F4 = make_field(2, 2, 1);
  CHECK(singer(F4, 2).order == 15);
}

TEST_CASE("3-simplex code reproduces the published generator matrix") {
  auto F = make_field(2, 1, 2);
  Fel a = F->z();
  Fel a2 = F->mul(a, a);
  auto G = singer(F, 2, {a2, 1, 1});
  fqlin::FqSubspace U(F, 2, {{a, 1}, {a2, 0}, {0, a}});
  auto C = simplex(G, U);
  CHECK(C.profile == srcode::BlockProfile({3, 3, 3, 3, 3}));
  std::vector<Fel> row0 = {a, a2, 0, 1, 0, a,  0,  a, a,  a2, a,  a2, a2, a2, a};
  std::vector<Fel> row1 = {1, 0,  a, 0, a, a,  a2, a, a2, a2, a2, a,  1,  a,  0};
  for (unsigned j = 0; j < 15; ++j) {
    CHECK(C.G.at(0, j) == row0[j]);
    CHECK(C.G.at(1, j) == row1[j]);
  }
  auto w = srcode::is_one_weight(C);
  REQUIRE(w.has_value());
  CHECK(*w == 9);
  auto rp = srcode::constant_rank_profile(C);
  REQUIRE(rp.has_value());
  CHECK(*rp == std::vector<unsigned>({2, 2, 2, 2, 1}));
  // 5 projective codewords, each standing for q^m - 1 = 3 nonzero ones
  auto wd = srcode::weight_distribution(C);
  REQUIRE(wd.size() == 1);
  CHECK(wd.at(9) == 15);
  CHECK(simplex_weight(G, U) == 9);
}

TEST_CASE("simplex weight matches the sweep for full-span subspaces") {
  auto F = make_field(2, 1, 2);
  auto G = singer(F, 2);
  fqlin::FqSubspace U(F, 2, {{1, 0}, {0, 1}});
  auto C = simplex(G, U);
  auto w = srcode::is_one_weight(C);
  REQUIRE(w.has_value());
  CHECK(*w == simplex_weight(G, U));
}

TEST_CASE("orbit closure under the transposed action") {
  auto F = make_field(2, 1, 2);
  Fel a = F->z();
  Fel a2 = F->mul(a, a);
  auto G = singer(F, 2, {a2, 1, 1});
  fqlin::FqSubspace U(F, 2, {{a, 1}, {a2, 0}, {0, a}});
  auto orb = orbit({G.M}, U);
  CHECK(!orb.empty());
  CHECK(orb.size() <= G.order);
  for (const auto& V : orb) {
    CHECK(V.dim() == U.dim());
    // image of each member under the generator stays inside the orbit
    std::vector<Vec> imgs;
    for (const Vec& b : V.basis()) {
      Vec y(2, 0);
      for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j)
          y[i] = F->add(y[i], F->mul(G.M.at(j, i), b[j]));
      imgs.push_back(y);
    }
    fqlin::FqSubspace W(F, 2, imgs);
    bool found = false;
    for (const auto& V2 : orb) found = found || W.same_space(V2);
    CHECK(found);
  }
  // identity fixes everything
  auto fixed = orbit({fqlin::mat_identity(F, 2)}, U);
  CHECK(fixed.size() == 1);
  CHECK(fixed[0].same_space(U));
}

TEST_CASE("orbit respects the subfield closure requirement") {
  auto F = make_field(2, 1, 4);
  auto G = singer(F, 2);
  // <(1,0)>_{F_4} is F_4-closed, <(1,0),(0,1)>_{F_2} is not
  Fel w4 = F->pow(F->primitive(), (F->size() - 1) / 3);
  fqlin::FqSubspace ok(F, 2, {{1, 0}, {w4, 0}});
  CHECK_NOTHROW(orbit({G.M}, ok, 2));
  fqlin::FqSubspace bad(F, 2, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(orbit({G.M}, bad, 2), Error);
}

TEST_CASE("lifting a club gives a one-weight code covering the line") {
  auto F = make_field(2, 1, 3);
  // {(y, Tr(y))} has one point of weight 2 and four of weight 1
  std::vector<Vec> gens;
  for (Fel y : F->elements())
    if (y != 0) gens.push_back({y, F->trace(y)});
  fqlin::FqSubspace U(F, 2, gens);
  REQUIRE(U.dim() == 3);
  geometry::QSystem S(F, 2, {U});
  auto L = lift(S);
  CHECK(L.target_weight == 2);
  CHECK(L.added_blocks == 8);
  CHECK(L.system.profile() ==
        srcode::BlockProfile({3, 2, 2, 2, 2, 1, 1, 1, 1}));
  auto wm = geometry::multi_weight(L.system);
  CHECK(geometry::covers_line(wm));
  for (const auto& [pt, w] : wm.weights) CHECK(w == 2);
  auto C = geometry::phi(L.system);
  auto w = srcode::is_one_weight(C);
  REQUIRE(w.has_value());
  CHECK(*w == 13);
}

TEST_CASE("lifting an already constant system adds nothing new in weight") {
  auto F = make_field(3, 1, 2);
  auto pair = default_pair(F, 1, 2, 2);
  auto C = doubly_extended_lrs(2, pair, 1, 1);
  auto U = geometry::psi(C);
  auto L = lift(U);
  auto w = geometry::one_weight_check(L.system);
  REQUIRE(w.has_value());
  CHECK(*w == srcode::is_one_weight(geometry::phi(L.system)).value());
}
