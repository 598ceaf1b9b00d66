#include "artifact/pairing.hpp"

#include <exception>
#include <stdexcept>

#include "artifact/orbits.hpp"

namespace msym {

namespace {

// runs body(i) for i < n under OpenMP, rethrowing the first exception on the calling thread
template <class F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr err;
  const long m = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < m; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(msym_pairing_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

Rat half_sum(const std::vector<VkPolynomial>& c, const std::vector<VkPolynomial>& v) {
  Rat s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += vk_pair(c[i], v[i]);
  return s / 2;
}

// coefficient of x^{k-2}; throws if P is not a multiple of it
Rat leading_multiple(const VkPolynomial& p) {
  const int k = p.k();
  for (int i = 0; i < k - 2; ++i)
    if (p[static_cast<std::size_t>(i)] != 0) throw std::logic_error("boundary value is not a multiple of x^{k-2}");
  return p[static_cast<std::size_t>(k - 2)];
}

}  // namespace

PairingContext::PairingContext(FareyGroup::Ptr group, int k)
    : PairingContext(group, group->symbol(), k) {}

PairingContext::PairingContext(FareyGroup::Ptr group, FareySymbol symbol, int k)
    : group_(std::move(group)), symbol_(std::move(symbol)), k_(k) {
  if (k < 2) throw std::invalid_argument("weight must be at least 2");
  symbol_.validate(group_->group().member);
  tilde_ = tilde_arcs(symbol_);
}

void PairingContext::check(const ModSym& phi) const {
  if (!phi.space()) throw std::invalid_argument("uninitialised symbol");
  if (phi.k() != k_) throw std::invalid_argument("weight mismatch in pairing");
  if (phi.space()->group() != group_) throw std::invalid_argument("group mismatch in pairing");
}

std::vector<VkPolynomial> PairingContext::arc_values(const ModSym& phi) const {
  check(phi);
  std::vector<VkPolynomial> out;
  out.reserve(tilde_.size());
  for (const TildeArc& t : tilde_) out.push_back(phi.eval_arc(symbol_, t));
  return out;
}

std::vector<VkPolynomial> PairingContext::cocycle_values(const Cocycle& c) const {
  std::vector<VkPolynomial> out;
  out.reserve(tilde_.size());
  for (const TildeArc& t : tilde_) {
    VkPolynomial v = c(t.glue.inverse());
    if (v.k() != k_) throw std::invalid_argument("weight mismatch in pairing");
    out.push_back(std::move(v));
  }
  return out;
}

Cocycle modsym_cocycle(const ModSym& phi, const Cusp& r) {
  return [phi, r](const Mat& g) { return phi.eval_path(r, act(g.inverse(), r)); };
}

Cocycle eis_cocycle(std::shared_ptr<const EisSymbol> e) {
  return [e](const Mat& g) { return e->cocycle(g); };
}

Cocycle add_coboundary(Cocycle c, VkPolynomial p) {
  return [c = std::move(c), p = std::move(p)](const Mat& g) { return c(g) + vk_act(p, g) - p; };
}

Cocycle epsilon_cocycle(Cocycle c) {
  return [c = std::move(c)](const Mat& g) {
    const Mat e = epsilon();
    return vk_act(c(e * g * e), e);
  };
}

Rat pair(const PairingContext& ctx, const Cocycle& c1, const ModSym& phi2) {
  return half_sum(ctx.cocycle_values(c1), ctx.arc_values(phi2));
}

Rat pair(const PairingContext& ctx, const ModSym& phi1, const ModSym& phi2) {
  ctx.check(phi1);
  return pair(ctx, modsym_cocycle(phi1), phi2);
}

Rat pair_arcform(const PairingContext& ctx, const Cocycle& c1, const ModSym& phi2) {
  ctx.check(phi2);
  Rat s = 0;
  for (const FareyArc& a : ctx.symbol().arcs) {
    const Mat gi = a.glue.inverse();
    VkPolynomial v = phi2.eval_path(a.from, a.to);
    if (a.mu == 3)
      s += vk_pair(c1(gi) + c1(gi * gi), v) / 3;
    else
      s += vk_pair(c1(gi), v) / 2;
  }
  return s;
}

Rat pair_alt(const PairingContext& ctx, const ModSym& phi1, const ModSym& phi2) {
  ctx.check(phi1);
  ctx.check(phi2);
  const auto& sym = ctx.symbol();
  const auto& tl = ctx.tilde();
  // Phi^ at both endpoints of each tilde arc; an elliptic point z is reached as (oo, r_a) + u_a
  auto ends = [&](const ModSym& phi) {
    std::vector<std::pair<VkPolynomial, VkPolynomial>> out;
    for (const TildeArc& t : tl) {
      const FareyArc& a = sym.arcs[t.arc];
      VkPolynomial from = phi.eval_path(Cusp::infinity(), a.from);
      VkPolynomial to = phi.eval_path(Cusp::infinity(), a.to);
      if (t.part == ArcPart::Whole) {
        out.emplace_back(from, to);
        continue;
      }
      VkPolynomial z = from + phi.eval_arc(sym, {t.arc, ArcPart::U, 0, a.glue});
      if (t.part == ArcPart::U)
        out.emplace_back(from, z);
      else
        out.emplace_back(z, to);
    }
    return out;
  };
  const auto e1 = ends(phi1), e2 = ends(phi2);
  Rat s = 0;
  for (std::size_t i = 0; i < tl.size(); ++i) {
    const auto st = static_cast<std::size_t>(tl[i].star);
    s += vk_pair(e1[st].first, e2[st].second) - vk_pair(e1[i].second, e2[i].first);
  }
  return s / 2;
}

Rat pair_noncusp(const PairingContext& ctx, const Cocycle& c1, const BoundarySpace& bd, const RatVec& coeffs) {
  Rat s = 0;
  for (const CuspCycle& c : cusp_cycles(ctx.symbol())) s -= vk_pair(c1(c.generator), bd.eval(coeffs, c.cusp));
  return s;
}

Rat pair_eis_via_cusps(const PairingContext& ctx, const EisSymbol& e, const BoundarySpace& bd, const RatVec& coeffs) {
  if (e.k() != ctx.k() || bd.k() != ctx.k()) throw std::invalid_argument("weight mismatch in pairing");
  Rat s = 0;
  for (const auto& cls : bd.classes()) {
    const Rat cs = leading_multiple(vk_act(bd.eval(coeffs, cls.cusp), cls.gamma_p));
    if (cs == 0) continue;
    s += Rat(cls.width) * beta_moment(e.f().act(cls.gamma_p), e.k(), 0, false) * cs;
  }
  return s;
}

ModSym epsilon_conjugate(const ModSym& phi, const ModSymSpace::Ptr& target) {
  if (target->k() != phi.k()) throw std::invalid_argument("weight mismatch in epsilon conjugation");
  const Mat e = epsilon();
  std::vector<VkPolynomial> m;
  for (const Mat& xi : target->group()->sl2_reps()) m.push_back(vk_act(phi.eval_unimodular(e * xi * e), e));
  return target->from_values(std::move(m));
}

Rat haberland(const VkPolynomial& p0, const VkPolynomial& p1, const VkPolynomial& q0) {
  const Mat t = T(), ti = T().inverse();
  VkPolynomial a = vk_act(p0, t) - vk_act(p0, ti) - (p1 + vk_act(p1, t)) * Rat(2);
  return vk_pair(a, q0) / 6;
}

Rat haberland_pair_sl2z(const ModSym& phi1, const ModSym& phi2) {
  if (phi1.space()->n_cosets() != 1 || phi2.space()->n_cosets() != 1)
    throw std::invalid_argument("Haberland formula needs SL2(Z) symbols");
  const Cusp oo = Cusp::infinity(), zero = Cusp::make(0, 1);
  // the infinitesimal path [0,1]_oo has zero boundary, so Hom(Delta_0) symbols vanish on it
  return haberland(phi1.eval_path(oo, zero), VkPolynomial(phi1.k()), phi2.eval_path(oo, zero));
}

Rat haberland_pair_sl2z(const EisSymbol& e, const ModSym& phi2) {
  if (e.level() != 1 || phi2.space()->n_cosets() != 1)
    throw std::invalid_argument("Haberland formula needs SL2(Z) symbols");
  return haberland(e.p_mod(), e.eval_inf(Rat(1)), phi2.eval_path(Cusp::infinity(), Cusp::make(0, 1)));
}

RatVec period_moments(const VkPolynomial& p) {
  const int w = p.k() - 2;
  RatVec r(static_cast<std::size_t>(w + 1));
  for (int j = 0; j <= w; ++j) r[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)] / Rat(binomial(w, j));
  return r;
}

RatVec lambda_coeffs(int k) {
  if (k < 4 || k % 2) throw std::invalid_argument("lambda coefficients need an even weight >= 4");
  RatVec out(static_cast<std::size_t>(k - 1));
  const Rat bk = bernoulli_number(static_cast<unsigned>(k));
  for (int m = 0; m <= k - 2; m += 2) {
    Rat l = Rat(binomial(k - 1, m)) * 2 * bk / (k * (k - 1));
    for (int n = 1; n <= k - 2 - m; n += 2) {
      // (k-2)! / (n! m! (k-2-m-n)!)
      Rat multi = Rat(binomial(k - 2, m)) * Rat(binomial(k - 2 - m, n));
      l += multi * bernoulli_number(static_cast<unsigned>(k - 1 - n)) / (k - 1 - n) *
           bernoulli_number(static_cast<unsigned>(n + 1)) / (n + 1);
    }
    l.canonicalize();
    out[static_cast<std::size_t>(m)] = l;
  }
  return out;
}

RationalMatrix gram_matrix_serial(const PairingContext& ctx, const std::vector<Cocycle>& rows,
                                  const std::vector<ModSym>& cols) {
  RationalMatrix g(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) g(i, j) = pair(ctx, rows[i], cols[j]);
  return g;
}

RationalMatrix gram_matrix(const PairingContext& ctx, const std::vector<Cocycle>& rows, const std::vector<ModSym>& cols) {
  std::vector<std::vector<VkPolynomial>> cv(rows.size()), av(cols.size());
  parallel_for(rows.size(), [&](std::size_t i) { cv[i] = ctx.cocycle_values(rows[i]); });
  parallel_for(cols.size(), [&](std::size_t j) { av[j] = ctx.arc_values(cols[j]); });
  RationalMatrix g(rows.size(), cols.size());
  const std::size_t nc = cols.size();
  parallel_for(rows.size() * nc, [&](std::size_t ij) { g(ij / nc, ij % nc) = half_sum(cv[ij / nc], av[ij % nc]); });
  return g;
}

std::vector<std::shared_ptr<const EisSymbol>> eisenstein_basis_symbols(i64 N, int k) {
  std::vector<std::shared_ptr<const EisSymbol>> out;
  for (const OrbitTriple& t : basis_v(N, k)) out.push_back(std::make_shared<const EisSymbol>(orbit_indicator(t, N), k));
  return out;
}

std::vector<RatVec> cuspidal_subspace(const PairingContext& ctx, const ModSymSpace::Ptr& space, i64 N) {
  if (space->group() != ctx.group() || space->k() != ctx.k()) throw std::invalid_argument("space does not match the pairing context");
  std::vector<Cocycle> rows;
  for (const auto& e : eisenstein_basis_symbols(N, ctx.k())) rows.push_back(eis_cocycle(e));
  std::vector<ModSym> cols;
  for (std::size_t b = 0; b < space->dim(); ++b) cols.push_back(space->element(b));
  RationalMatrix g = gram_matrix(ctx, rows, cols);
  if (g.rows() == 0) {
    std::vector<RatVec> all;
    for (std::size_t b = 0; b < space->dim(); ++b) {
      RatVec v(space->dim());
      v[b] = 1;
      all.push_back(v);
    }
    return all;
  }
  return kernel_basis(g);
}

}  // namespace msym
