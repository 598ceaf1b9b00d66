#include <doctest.h>

#include <random>
#include <set>

#include "artifact/eisenstein.hpp"
#include "artifact/farey.hpp"
#include "artifact/groups.hpp"

using namespace msym;

namespace {

void check_arc_gluing(const FareySymbol& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const FareyArc& a = s.arcs[i];
    const FareyArc& b = s.arcs[static_cast<std::size_t>(a.star)];
    CHECK(s.arcs[static_cast<std::size_t>(b.star)].from == a.from);
    CHECK(b.mu == a.mu);
    // a = glue (a*)^- on free and order-2 arcs; an order-3 glue rotates about the elliptic point
    CHECK(act(a.glue, b.to) == a.from);
    if (a.mu != 3) CHECK(act(a.glue, b.from) == a.to);
    if (a.mu == 2) {
      CHECK(a.star == static_cast<int>(i));
      CHECK(a.glue.pow(2).is_pm_identity());
    }
    if (a.mu == 3) {
      CHECK(a.star == static_cast<int>(i));
      CHECK(a.glue.pow(3).is_pm_identity());
      CHECK_FALSE(a.glue.is_pm_identity());
    }
  }
}

// number of points of P^1(Z/NZ), counted directly
i64 count_p1(i64 N) {
  std::set<std::pair<i64, i64>> seen;
  i64 n = 0;
  for (i64 c = 0; c < N; ++c)
    for (i64 d = 0; d < N; ++d) {
      if (gcd64(gcd64(c, d), N) != 1) continue;
      // canonical representative of the line through (c, d)
      std::pair<i64, i64> best{N, N};
      for (i64 u = 1; u < N || (N == 1 && u == 1); ++u)
        if (gcd64(u, N) == 1) best = std::min(best, std::pair<i64, i64>{c * u % N, d * u % N});
      if (seen.insert(best).second) ++n;
    }
  return N == 1 ? 1 : n;
}

}  // namespace

TEST_CASE("base symbol") {
  FareySymbol s = base_symbol_sl2z();
  CHECK_NOTHROW(s.validate());
  REQUIRE(s.size() == 2);
  CHECK(s.arcs[0].mu == 2);
  CHECK(s.arcs[1].mu == 3);
  CHECK(s.arcs[0].glue == sigma());
  CHECK(s.arcs[1].glue == tau());
  check_arc_gluing(s);
  FareyInvariants inv = invariants(s);
  CHECK(inv.index == 1);
  CHECK(inv.nu2 == 1);
  CHECK(inv.nu3 == 1);
  CHECK(inv.n_cusps == 1);
  CHECK(inv.genus == 0);
}

TEST_CASE("examples") {
  FareyInvariants g2 = invariants(FareyGroup::build(gamma0(2))->symbol());
  CHECK(g2.index == 3);
  CHECK(g2.n_cusps == 2);
  CHECK(g2.nu2 == 1);
  CHECK(g2.nu3 == 0);
  FareyInvariants g11 = invariants(FareyGroup::build(gamma0(11))->symbol());
  CHECK(g11.index == 12);
  CHECK(g11.n_cusps == 2);
  CHECK(g11.nu2 == 0);
  CHECK(g11.nu3 == 0);
  CHECK(g11.genus == 1);
  FareyInvariants g4 = invariants(FareyGroup::build(gamma0(4))->symbol());
  CHECK(g4.index == 6);
  CHECK(g4.n_cusps == 3);
  CHECK(g4.nu2 == 0);
  CHECK(g4.nu3 == 0);
}

TEST_CASE("whole group gives the parent symbol") {
  FareyGroup::Ptr G = FareyGroup::build(full_modular_group());
  CHECK(G->reps().size() == 1);
  REQUIRE(G->symbol().size() == 2);
  CHECK(G->symbol().arcs[0].glue == sigma());
  CHECK(G->symbol().arcs[1].glue == tau());
}

TEST_CASE("symbols validate and match classical invariants") {
  for (const std::string kind : {"gamma0", "gamma1", "gamma"})
    for (i64 N = 1; N <= (kind == "gamma" ? 6 : 20); ++N) {
      CAPTURE(kind);
      CAPTURE(N);
      Subgroup g = make_group(kind, N);
      FareyGroup::Ptr G = FareyGroup::build(g);
      CHECK_NOTHROW(G->symbol().validate(g.member));
      check_arc_gluing(G->symbol());
      for (const FareyArc& a : G->symbol().arcs) CHECK(g.member(a.glue));
      for (const Mat& p : G->rectified_products()) CHECK(p.is_pm_identity());
      FareyInvariants inv = invariants(G->symbol());
      ClassicalInvariants c = kind == "gamma0" ? classical_gamma0(N) : kind == "gamma1" ? classical_gamma1(N) : classical_gamma(N);
      CHECK(inv.index == c.index);
      CHECK(inv.n_cusps == c.cusps);
      CHECK(inv.nu2 == c.nu2);
      CHECK(inv.nu3 == c.nu3);
      CHECK(inv.genus == c.genus);
      CHECK(static_cast<i64>(G->sl2_reps().size()) == c.index);
      if (kind == "gamma0") CHECK(c.index == count_p1(N));
    }
}

TEST_CASE("cusp widths add up to the index") {
  for (i64 N : {1, 2, 4, 6, 9, 11, 12}) {
    FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
    i64 total = 0;
    for (const CuspCycle& c : cusp_cycles(G->symbol())) {
      total += c.width;
      CHECK(G->group().member(c.generator));
      CHECK(act(c.gamma_p, Cusp::infinity()) == c.cusp);
      CHECK(act(c.generator, c.cusp) == c.cusp);
    }
    CHECK(total == classical_gamma0(N).index);
  }
}

TEST_CASE("tilde arcs") {
  auto base = tilde_arcs(base_symbol_sl2z());
  CHECK(base.size() == 4);
  for (i64 N : {1, 2, 3, 11, 13}) {
    FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
    const FareySymbol& s = G->symbol();
    auto t = tilde_arcs(s);
    std::size_t elliptic = 0;
    for (const FareyArc& a : s.arcs) elliptic += a.mu > 1;
    CHECK(t.size() == s.size() + elliptic);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t[i].star != static_cast<int>(i));
      CHECK(t[static_cast<std::size_t>(t[i].star)].star == static_cast<int>(i));
    }
  }
  FareyGroup::Ptr G11 = FareyGroup::build(gamma0(11));
  auto t11 = tilde_arcs(G11->symbol());
  REQUIRE(t11.size() == G11->symbol().size());
  for (std::size_t i = 0; i < t11.size(); ++i) {
    CHECK(t11[i].part == ArcPart::Whole);
    CHECK(t11[i].glue == G11->symbol().arcs[i].glue);
  }
}

TEST_CASE("coset decomposition round trips") {
  std::mt19937_64 rng(17);
  for (const std::string kind : {"gamma0", "gamma1", "gamma"})
    for (i64 N : {2, 3, 5, 6, 7}) {
      CAPTURE(kind);
      CAPTURE(N);
      Subgroup g = make_group(kind, N);
      FareyGroup::Ptr G = FareyGroup::build(g);
      for (std::size_t j = 0; j < G->reps().size(); ++j) {
        Word w = G->decompose(G->reps()[j]);
        CHECK(w.coset == static_cast<int>(j));
        CHECK(w.letters.empty());
      }
      for (int t = 0; t < 50; ++t) {
        Mat m = random_sl2(rng);
        Word w = G->decompose(m);
        CHECK(G->evaluate(w) == m);
        // cosets are taken in PSL2: coset 0 means +-m lies in the group
        CHECK((w.coset == 0) == (g.member(m) || g.member(-m)));
        if (g.member(m)) CHECK(G->evaluate(G->word(m)) == m);
      }
    }
}

TEST_CASE("subgroup of a subgroup") {
  FareyGroup::Ptr A = FareyGroup::subgroup(FareyGroup::build(gamma0(2)), gamma0(6));
  CHECK(A->reps().size() == 4);
  CHECK(A->sl2_reps().size() == 12);
  CHECK_NOTHROW(A->symbol().validate(gamma0(6).member));
  CHECK(invariants(A->symbol()).n_cusps == 4);
}

TEST_CASE("infinite index is guarded") {
  Subgroup upper{"upper", [](const Mat& m) { return m.c == 0; }, {}, true, 1};
  CHECK_THROWS_AS(FareyGroup::build(upper, 500), FareyError);
}

TEST_CASE("epsilon transport") {
  for (i64 N : {3, 5, 6, 11}) {
    FareySymbol t = epsilon_transport(FareyGroup::build(gamma0(N))->symbol());
    CHECK_NOTHROW(t.validate(gamma0(N).member));
    CHECK(invariants(t).index == classical_gamma0(N).index);
  }
}
