#include <doctest.h>

#include "artifact/groups.hpp"
#include "artifact/orbits.hpp"
#include "artifact/pairing.hpp"
#include "test_util.hpp"

using namespace msym;

namespace {

struct Case {
  std::string kind;
  i64 N;
  int k;
};

const std::vector<Case> kCases{{"gamma0", 1, 12}, {"gamma0", 2, 4},  {"gamma0", 3, 2}, {"gamma0", 5, 4},
                               {"gamma0", 6, 2},  {"gamma0", 11, 2}, {"gamma1", 4, 3}, {"gamma1", 5, 3},
                               {"gamma1", 7, 4},  {"gamma", 3, 2}};

ModSym random_symbol(std::mt19937_64& rng, const ModSymSpace::Ptr& S) {
  return S->from_coordinates(testing::small_vector(rng, S->dim()));
}

}  // namespace

TEST_CASE("equivalent forms of the pairing") {
  std::mt19937_64 rng(51);
  for (const Case& c : kCases) {
    CAPTURE(c.kind);
    CAPTURE(c.N);
    CAPTURE(c.k);
    FareyGroup::Ptr G = FareyGroup::build(make_group(c.kind, c.N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, c.k);
    PairingContext ctx(G, c.k);
    for (int t = 0; t < 5; ++t) {
      ModSym a = random_symbol(rng, S), b = random_symbol(rng, S);
      Rat p = pair(ctx, a, b);
      CHECK(pair_alt(ctx, a, b) == p);
      CHECK(pair_arcform(ctx, modsym_cocycle(a), b) == p);
      // antisymmetric for even k, symmetric for odd k
      CHECK(pair(ctx, b, a) == (c.k % 2 ? p : -p));
      if (c.k % 2 == 0) CHECK(pair(ctx, a, a) == 0);
    }
  }
}

TEST_CASE("cocycle representative does not matter") {
  std::mt19937_64 rng(52);
  for (const Case& c : kCases) {
    FareyGroup::Ptr G = FareyGroup::build(make_group(c.kind, c.N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, c.k);
    PairingContext ctx(G, c.k);
    for (int t = 0; t < 4; ++t) {
      ModSym a = random_symbol(rng, S), b = random_symbol(rng, S);
      Rat p = pair(ctx, a, b);
      CHECK(pair(ctx, modsym_cocycle(a, Cusp::make(2, 7)), b) == p);
      CHECK(pair(ctx, modsym_cocycle(a, Cusp::make(-5, 3)), b) == p);
      VkPolynomial P(c.k, testing::small_vector(rng, static_cast<std::size_t>(c.k - 1)));
      CHECK(pair(ctx, add_coboundary(modsym_cocycle(a), P), b) == p);
    }
  }
}

TEST_CASE("boundary symbols lie in the radical") {
  std::mt19937_64 rng(53);
  for (const Case& c : kCases) {
    FareyGroup::Ptr G = FareyGroup::build(make_group(c.kind, c.N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, c.k);
    PairingContext ctx(G, c.k);
    BoundarySpace bd(G, c.k);
    if (bd.dim() == 0) continue;
    for (int t = 0; t < 4; ++t) {
      ModSym a = random_symbol(rng, S);
      RatVec coeffs = testing::small_vector(rng, bd.dim());
      ModSym e = bd.embed(S, coeffs);
      CHECK(pair(ctx, a, e) == 0);
      CHECK(pair_noncusp(ctx, modsym_cocycle(a), bd, coeffs) == 0);
    }
  }
}

TEST_CASE("eisenstein pairing against the boundary") {
  std::mt19937_64 rng(54);
  for (auto [N, k] : std::vector<std::pair<i64, int>>{{3, 2}, {3, 4}, {5, 2}, {5, 4}, {11, 2}, {11, 4}, {6, 4}, {4, 2}}) {
    CAPTURE(N);
    CAPTURE(k);
    FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, k);
    PairingContext ctx(G, k);
    BoundarySpace bd(G, k);
    for (const OrbitTriple& t : all_orbits(N)) {
      TorsionFunction f = orbit_indicator(t, N);
      if (k == 2 && f(0, 0) != 0) continue;
      auto e = std::make_shared<const EisSymbol>(f, k);
      for (int s = 0; s < 2; ++s) {
        RatVec coeffs = testing::small_vector(rng, bd.dim());
        Rat direct = pair(ctx, eis_cocycle(e), bd.embed(S, coeffs));
        CHECK(pair_eis_via_cusps(ctx, *e, bd, coeffs) == direct);
        CHECK(pair_noncusp(ctx, eis_cocycle(e), bd, coeffs) == direct);
      }
    }
    // non-degeneracy: basis_v against the boundary has rank |basis_v|
    auto eis = eisenstein_basis_symbols(N, k);
    std::vector<Cocycle> rows;
    for (const auto& e : eis) rows.push_back(eis_cocycle(e));
    std::vector<ModSym> cols;
    for (std::size_t j = 0; j < bd.dim(); ++j) {
      RatVec u(bd.dim());
      u[j] = 1;
      cols.push_back(bd.embed(S, u));
    }
    RationalMatrix m = gram_matrix(ctx, rows, cols);
    CHECK(rank(m) == eis.size());
    CHECK(eis.size() == basis_v(N, k).size());
  }
}

TEST_CASE("weight and group mismatches are rejected") {
  FareyGroup::Ptr G = FareyGroup::build(gamma0(5));
  PairingContext ctx(G, 4);
  ModSymSpace::Ptr S2 = ModSymSpace::build(G, 2);
  ModSymSpace::Ptr S4b = ModSymSpace::build(FareyGroup::build(gamma0(7)), 4);
  CHECK_THROWS_AS(pair(ctx, S2->element(0), S2->element(0)), std::invalid_argument);
  CHECK_THROWS_AS(pair(ctx, S4b->element(0), S4b->element(0)), std::invalid_argument);
}

TEST_CASE("haberland formula at level one") {
  std::mt19937_64 rng(55);
  for (int k : {12, 16}) {
    FareyGroup::Ptr G = FareyGroup::sl2z();
    ModSymSpace::Ptr S = ModSymSpace::build(G, k);
    PairingContext ctx(G, k);
    for (int t = 0; t < 8; ++t) {
      ModSym a = random_symbol(rng, S), b = random_symbol(rng, S);
      CHECK(haberland_pair_sl2z(a, b) == pair(ctx, a, b));
      CHECK(haberland_pair_sl2z(a, a) == 0);
    }
    EisSymbol e(TorsionFunction::constant(1, Rat(1)), k);
    auto ep = std::make_shared<const EisSymbol>(TorsionFunction::constant(1, Rat(1)), k);
    RatVec lam = lambda_coeffs(k);
    REQUIRE(lam.size() == static_cast<std::size_t>(k - 1));
    for (int m = 1; m <= k - 2; m += 2) CHECK(lam[static_cast<std::size_t>(m)] == 0);
    for (std::size_t b = 0; b < S->dim(); ++b) {
      ModSym phi = S->element(b);
      Rat p = pair(ctx, eis_cocycle(ep), phi);
      CHECK(haberland_pair_sl2z(e, phi) == p);
      RatVec r = period_moments(phi.eval_path(Cusp::infinity(), Cusp::make(0, 1)));
      Rat s = 0;
      for (int m = 0; m <= k - 2; m += 2) s += lam[static_cast<std::size_t>(m)] * r[static_cast<std::size_t>(m)];
      CHECK(s / 3 == p);
    }
  }
}

TEST_CASE("period moments") {
  // P = sum C(k-2, j) r_j x^j y^{k-2-j}
  VkPolynomial p(6, RatVec{Rat(1), Rat(8), Rat(18), Rat(4), Rat(5)});
  CHECK(period_moments(p) == RatVec{Rat(1), Rat(2), Rat(3), Rat(1), Rat(5)});
}

TEST_CASE("odd moments vanish on the cuspidal part") {
  for (auto [N, k] : std::vector<std::pair<i64, int>>{{1, 12}, {1, 16}, {1, 18}, {1, 20}, {1, 22}}) {
    CAPTURE(k);
    FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, k);
    PairingContext ctx(G, k);
    auto cusp = cuspidal_subspace(ctx, S, N);
    REQUIRE_FALSE(cusp.empty());
    for (const RatVec& v : cusp) {
      RatVec r = period_moments(S->from_coordinates(v).eval_path(Cusp::infinity(), Cusp::make(0, 1)));
      Rat s = 0;
      for (int m = 1; m <= k - 2; m += 2) s += Rat(binomial(k - 2, m)) * r[static_cast<std::size_t>(m)];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("epsilon conjugation") {
  std::mt19937_64 rng(56);
  for (i64 N : {3, 5, 11})
    for (int k : {2, 4}) {
      CAPTURE(N);
      CAPTURE(k);
      FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
      ModSymSpace::Ptr S = ModSymSpace::build(G, k);
      PairingContext ctx(G, k);
      const Rat sign = k % 2 ? Rat(1) : Rat(-1);
      for (int t = 0; t < 5; ++t) {
        ModSym a = random_symbol(rng, S), b = random_symbol(rng, S);
        CHECK(epsilon_conjugate(epsilon_conjugate(a, S), S) == a);
        // {Phi1|eps, Phi} = (-1)^{k-1} {Phi1, Phi|eps}
        CHECK(pair(ctx, epsilon_cocycle(modsym_cocycle(a)), b) == sign * pair(ctx, a, epsilon_conjugate(b, S)));
      }
      for (const OrbitTriple& t : basis_v(N, k)) {
        TorsionFunction f = orbit_indicator(t, N);
        auto e0 = std::make_shared<const EisSymbol>(f, k);
        auto e1 = std::make_shared<const EisSymbol>(f.act(epsilon()), k);
        for (std::size_t b = 0; b < S->dim(); ++b) {
          ModSym phi = S->element(b);
          CHECK(pair(ctx, eis_cocycle(e1), phi) == pair(ctx, eis_cocycle(e0), epsilon_conjugate(phi, S)));
        }
      }
    }
}

TEST_CASE("independence of the farey symbol") {
  std::mt19937_64 rng(57);
  // two towers to Gamma0(6)
  for (int k : {2, 4}) {
    FareyGroup::Ptr A = FareyGroup::subgroup(FareyGroup::build(gamma0(2)), gamma0(6));
    FareyGroup::Ptr B = FareyGroup::subgroup(FareyGroup::build(gamma0(3)), gamma0(6));
    FareyGroup::Ptr C = FareyGroup::build(gamma0(6));
    ModSymSpace::Ptr S = ModSymSpace::build(A, k);
    PairingContext ca(A, k), cb(A, B->symbol(), k), cc(A, C->symbol(), k), ce(A, epsilon_transport(C->symbol()), k);
    for (int t = 0; t < 6; ++t) {
      ModSym a = random_symbol(rng, S), b = random_symbol(rng, S);
      Rat p = pair(ca, a, b);
      CHECK(pair(cb, a, b) == p);
      CHECK(pair(cc, a, b) == p);
      CHECK(pair(ce, a, b) == p);
    }
  }
  // the transported symbol has different arcs, so it is a genuine second symbol
  for (auto [N, k] : std::vector<std::pair<i64, int>>{{1, 12}, {2, 4}, {3, 4}, {5, 2}, {11, 2}, {11, 4}}) {
    CAPTURE(N);
    FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
    FareySymbol other = epsilon_transport(G->symbol());
    bool differs = other.size() != G->symbol().size();
    for (std::size_t i = 0; !differs && i < other.size(); ++i) differs = !(other.arcs[i].from == G->symbol().arcs[i].from) || other.arcs[i].glue != G->symbol().arcs[i].glue;
    if (N > 1) CHECK(differs);
    ModSymSpace::Ptr S = ModSymSpace::build(G, k);
    PairingContext ca(G, k), cb(G, other, k);
    for (int t = 0; t < 6; ++t) {
      ModSym a = random_symbol(rng, S), b = random_symbol(rng, S);
      CHECK(pair(cb, a, b) == pair(ca, a, b));
      CHECK(pair_alt(cb, a, b) == pair(ca, a, b));
    }
  }
}

TEST_CASE("gram kernels agree") {
  for (const Case& c : kCases) {
    FareyGroup::Ptr G = FareyGroup::build(make_group(c.kind, c.N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, c.k);
    PairingContext ctx(G, c.k);
    std::vector<Cocycle> rows;
    std::vector<ModSym> cols;
    for (std::size_t b = 0; b < S->dim(); ++b) {
      rows.push_back(modsym_cocycle(S->element(b)));
      cols.push_back(S->element(b));
    }
    RationalMatrix g = gram_matrix(ctx, rows, cols);
    CHECK(g == gram_matrix_serial(ctx, rows, cols));
    // the radical is exactly the boundary image (modulo constants when k = 2)
    BoundarySpace bd(G, c.k);
    const std::size_t bdim = bd.dim() - (c.k == 2 ? 1 : 0);
    CHECK(S->dim() - rank(g) == bdim);
  }
}

TEST_CASE("cuspidal subspace") {
  for (auto [N, k, expect] : std::vector<std::tuple<i64, int, std::size_t>>{
           {11, 2, 2}, {1, 12, 2}, {1, 10, 0}, {37, 2, 4}, {1, 16, 2}, {2, 8, 2}, {5, 4, 2}, {6, 2, 0}}) {
    CAPTURE(N);
    CAPTURE(k);
    FareyGroup::Ptr G = FareyGroup::build(gamma0(N));
    ModSymSpace::Ptr S = ModSymSpace::build(G, k);
    PairingContext ctx(G, k);
    auto cusp = cuspidal_subspace(ctx, S, N);
    CHECK(cusp.size() == expect);
    CHECK(static_cast<i64>(cusp.size()) == 2 * classical_dim_cusp_forms_gamma0(N, k));
    // no overlap with the boundary image
    BoundarySpace bd(G, k);
    std::vector<RatVec> cols = cusp;
    for (std::size_t j = 0; j < bd.dim(); ++j) {
      RatVec u(bd.dim());
      u[j] = 1;
      ModSym e = bd.embed(S, u);
      if (!e.is_zero()) cols.push_back(S->coordinates(e));
    }
    const std::size_t bd_rank = bd.dim() - (k == 2 ? 1 : 0);
    CHECK(rank(RationalMatrix::from_columns(cols, S->dim())) == cusp.size() + bd_rank);
  }
}
