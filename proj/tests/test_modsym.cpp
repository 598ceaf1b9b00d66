#include <doctest.h>

#include "artifact/eisenstein.hpp"
#include "artifact/groups.hpp"
#include "artifact/modsym.hpp"
#include "test_util.hpp"

using namespace msym;

namespace {

Cusp random_cusp(std::mt19937_64& rng) {
  return Cusp::make(static_cast<i64>(rng() % 61) - 30, 1 + static_cast<i64>(rng() % 30));
}

// random element of the group: a random SL2 matrix times the inverse of its coset representative
Mat random_member(std::mt19937_64& rng, const FareyGroup::Ptr& G) {
  Mat m = random_sl2(rng);
  Mat gamma;
  G->sl2_coset(m, &gamma);
  if (!G->group().member(gamma)) gamma = -gamma;
  return gamma;
}

}  // namespace

TEST_CASE("dimension examples") {
  CHECK(ModSymSpace::build(FareyGroup::sl2z(), 12)->dim() == 3);
  CHECK(ModSymSpace::build(FareyGroup::build(gamma0(11)), 2)->dim() == 3);
  CHECK(ModSymSpace::build(FareyGroup::sl2z(), 3)->dim() == 0);
  CHECK(BoundarySpace(FareyGroup::build(gamma0(11)), 2).dim() == 2);
  CHECK(BoundarySpace(FareyGroup::sl2z(), 12).dim() == 1);
  CHECK(BoundarySpace(FareyGroup::sl2z(), 5).dim() == 0);
  CHECK_THROWS(ModSymSpace::build(FareyGroup::sl2z(), 1));
}

TEST_CASE("dimensions against the classical formula") {
  // k = 2 loses the constants: dim = 2 dim S_2 + cusps - 1
  for (i64 N = 1; N <= 30; ++N) {
    FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
    for (int k = 2; k <= 12; k += 2) {
      CAPTURE(N);
      CAPTURE(k);
      ModSymSpace::Ptr S = ModSymSpace::build(G, k);
      BoundarySpace bd(G, k);
      const i64 expect = 2 * classical_dim_cusp_forms_gamma0(N, k) + static_cast<i64>(bd.dim()) - (k == 2 ? 1 : 0);
      CHECK(static_cast<i64>(S->dim()) == expect);
    }
  }
}

TEST_CASE("basis satisfies the relations") {
  for (auto [kind, N, k] : std::vector<std::tuple<std::string, i64, int>>{
           {"gamma0", 11, 2}, {"gamma0", 6, 4}, {"gamma1", 5, 3}, {"gamma", 3, 4}}) {
    ModSymSpace::Ptr S = ModSymSpace::build(FareyGroup::build(make_group(kind, N)), k);
    for (const RatVec& b : S->basis()) CHECK(S->satisfies_relations(b));
    for (std::size_t i = 0; i < S->dim(); ++i) {
      RatVec e(S->dim());
      e[i] = 1;
      CHECK(S->coordinates(S->element(i)) == e);
    }
  }
}

TEST_CASE("path evaluation properties") {
  std::mt19937_64 rng(21);
  for (auto [kind, N, k] : std::vector<std::tuple<std::string, i64, int>>{
           {"gamma0", 11, 2}, {"gamma0", 5, 4}, {"gamma0", 1, 12}, {"gamma1", 5, 3}, {"gamma1", 7, 2}}) {
    CAPTURE(kind);
    CAPTURE(N);
    FareyGroup::Ptr G = FareyGroup::build(make_group(kind, N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, k);
    for (int t = 0; t < 20; ++t) {
      ModSym phi = S->from_coordinates(testing::small_vector(rng, S->dim()));
      Cusp r = random_cusp(rng), s = random_cusp(rng), u = random_cusp(rng);
      CHECK(phi.eval_path(r, r).is_zero());
      CHECK(phi.eval_path(r, s) + phi.eval_path(s, u) == phi.eval_path(r, u));
      CHECK(phi.eval_path(r, s) == -phi.eval_path(s, r));
      Mat g = random_member(rng, G);
      CHECK(phi.eval_path(act(g, r), act(g, s)) == vk_act(phi.eval_path(r, s), g.inverse()));
      CHECK(phi.eval_unimodular(identity()) == phi.eval_path(Cusp::make(0, 1), Cusp::infinity()));
    }
  }
}

TEST_CASE("arc evaluation") {
  std::mt19937_64 rng(22);
  for (i64 N : {1, 2, 3, 13}) {
    FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, 4);
    const FareySymbol& sym = G->symbol();
    auto tilde = tilde_arcs(sym);
    ModSym phi = S->from_coordinates(testing::small_vector(rng, S->dim()));
    for (std::size_t i = 0; i < tilde.size(); ++i) {
      const TildeArc& t = tilde[i];
      const FareyArc& a = sym.arcs[static_cast<std::size_t>(t.arc)];
      VkPolynomial whole = phi.eval_path(a.from, a.to);
      if (t.part == ArcPart::Whole) CHECK(phi.eval_arc(sym, t) == whole);
      else if (a.mu == 2) CHECK(phi.eval_arc(sym, t) == whole * Rat(1, 2));
      if (t.part == ArcPart::U) {
        REQUIRE(i + 1 < tilde.size());
        CHECK(phi.eval_arc(sym, t) + phi.eval_arc(sym, tilde[i + 1]) == whole);
      }
    }
  }
}

TEST_CASE("boundary embedding") {
  for (i64 N : {1, 5, 11}) {
    FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, 2);
    BoundarySpace bd(G, 2);
    // constants die on degree-zero divisors
    CHECK(bd.embed(S, RatVec(bd.dim(), Rat(1))).is_zero());
    RatVec c(bd.dim());
    c[0] = 1;
    if (bd.dim() > 1) CHECK_FALSE(bd.embed(S, c).is_zero());
  }
  FareyGroup::Ptr G = FareyGroup::build(gamma0(6));
  ModSymSpace::Ptr S = ModSymSpace::build(G, 4);
  BoundarySpace bd(G, 4);
  std::mt19937_64 rng(5);
  Cusp r = Cusp::make(2, 7), s = Cusp::make(-1, 3);
  for (int t = 0; t < 10; ++t) {
    RatVec c = testing::small_vector(rng, bd.dim());
    ModSym x = bd.embed(S, c);
    CHECK(x.eval_path(r, s) == bd.eval(c, s) - bd.eval(c, r));
  }
}

TEST_CASE("boundary generators are invariant") {
  std::mt19937_64 rng(6);
  for (auto [kind, N, k] : std::vector<std::tuple<std::string, i64, int>>{{"gamma0", 6, 4}, {"gamma1", 5, 3}}) {
    FareyGroup::Ptr G = FareyGroup::build(make_group(kind, N));
    BoundarySpace bd(G, k);
    for (int t = 0; t < 20; ++t) {
      RatVec c = testing::small_vector(rng, bd.dim());
      Cusp s = random_cusp(rng);
      Mat g = random_member(rng, G);
      CHECK(bd.eval(c, act(g, s)) == vk_act(bd.eval(c, s), g.inverse()));
    }
  }
}

TEST_CASE("relation violations are rejected") {
  ModSymSpace::Ptr S = ModSymSpace::build(FareyGroup::build(gamma0(11)), 2);
  std::vector<VkPolynomial> m(S->n_cosets(), VkPolynomial(2));
  m[0][0] = 1;
  CHECK_THROWS_AS(S->from_values(m), std::invalid_argument);
}
