#include "artifact/farey.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <list>
#include <set>

namespace msym {

namespace {

bool is_order(const Mat& g, int n) {
  if (g.is_pm_identity()) return false;
  Mat p = identity();
  for (int i = 0; i < n; ++i) p = p * g;
  return p.is_pm_identity();
}

[[noreturn]] void fail(const std::string& msg) { throw FareyError(msg); }

}  // namespace

std::vector<Cusp> FareySymbol::vertices() const {
  std::vector<Cusp> v;
  for (const auto& a : arcs) v.push_back(a.from);
  return v;
}

void FareySymbol::validate(const std::function<bool(const Mat&)>& member) const {
  const int n = static_cast<int>(arcs.size());
  if (n == 0) fail("empty symbol");
  if (!arcs[0].from.is_infinity()) fail("symbol must start at infinity");
  std::set<Cusp> seen;
  for (int i = 0; i < n; ++i) {
    const FareyArc& a = arcs[i];
    if (!seen.insert(a.from).second) fail("repeated vertex " + a.from.str());
    if (a.to != arcs[(i + 1) % n].from) fail("vertex sequence is not circular at arc " + std::to_string(i));
    if (a.star < 0 || a.star >= n || arcs[a.star].star != i) fail("star is not an involution");
    if (arcs[a.star].mu != a.mu) fail("mu not constant on star orbits");
    if (a.glue.det() != 1) fail("glue matrix not in SL2(Z)");
    if (member && !member(a.glue)) fail("glue matrix outside the group at arc " + std::to_string(i));
    const FareyArc& b = arcs[a.star];
    switch (a.mu) {
      case 1:
        if (a.star == i) fail("free arc paired with itself");
        if (act(a.glue, b.to) != a.from || act(a.glue, b.from) != a.to) fail("glue does not map a* to a");
        if (!(a.glue * b.glue).is_pm_identity()) fail("partner glue is not inverse");
        break;
      case 2:
        if (a.star != i || !is_order(a.glue, 2)) fail("bad order-2 arc");
        if (act(a.glue, a.to) != a.from || act(a.glue, a.from) != a.to) fail("order-2 glue does not flip its arc");
        break;
      case 3:
        if (a.star != i || !is_order(a.glue, 3)) fail("bad order-3 arc");
        if (act(a.glue, a.to) != a.from) fail("order-3 glue does not rotate its arc");
        break;
      default:
        fail("mu out of range");
    }
  }
}

FareySymbol base_symbol_sl2z() {
  FareySymbol s;
  s.arcs.push_back({Cusp::infinity(), Cusp::make(0, 1), 0, 2, sigma()});
  s.arcs.push_back({Cusp::make(0, 1), Cusp::infinity(), 1, 3, tau()});
  return s;
}

FareySymbol epsilon_transport(const FareySymbol& s) {
  const int n = static_cast<int>(s.size());
  const Mat e = epsilon();
  FareySymbol r;
  for (int i = n - 1; i >= 0; --i) {
    const FareyArc& a = s.arcs[i];
    FareyArc b;
    b.from = act(e, a.to);
    b.to = act(e, a.from);
    b.mu = a.mu;
    b.star = n - 1 - a.star;
    Mat g = a.mu == 3 ? a.glue.inverse() : a.glue;
    b.glue = e * g * e;
    r.arcs.push_back(b);
  }
  int start = -1;
  for (int i = 0; i < n; ++i)
    if (r.arcs[i].from.is_infinity()) start = i;
  if (start < 0) fail("transported symbol lost infinity");
  FareySymbol out;
  for (int i = 0; i < n; ++i) {
    FareyArc b = r.arcs[(start + i) % n];
    b.star = ((b.star - start) % n + n) % n;
    out.arcs.push_back(b);
  }
  return out;
}

std::vector<CuspCycle> cusp_cycles(const FareySymbol& s) {
  const int n = static_cast<int>(s.size());
  std::vector<bool> seen(n, false);
  std::vector<CuspCycle> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    CuspCycle c;
    Mat gen = identity();
    int p = i;
    do {
      if (seen[p]) fail("cusp cycles overlap");
      seen[p] = true;
      c.positions.push_back(p);
      const FareyArc& a = s.arcs[p];
      int next = (a.star + 1) % n;
      if (act(a.glue.inverse(), a.from) != s.arcs[next].from) fail("cusp cycle successor mismatch");
      gen = a.glue.inverse() * gen;
      p = next;
    } while (p != i);
    c.cusp = s.arcs[i].from;
    c.gamma_p = matrix_with_first_column(c.cusp);
    Mat m = c.gamma_p.inverse() * gen * c.gamma_p;
    if (m.c != 0 || (m.a != m.d) || (m.a != 1 && m.a != -1) || m.b == 0) fail("cusp cycle product is not parabolic");
    i64 w = m.a * m.b;
    c.cycle_positive = w > 0;
    if (w < 0) {
      gen = gen.inverse();
      w = -w;
    }
    c.generator = gen;
    c.width = w;
    c.irregular = m.a == -1;
    out.push_back(c);
  }
  return out;
}

FareyInvariants invariants(const FareySymbol& s) {
  FareyInvariants r{};
  for (const auto& a : s.arcs) {
    if (a.mu == 2) ++r.nu2;
    if (a.mu == 3) ++r.nu3;
  }
  const i64 n = static_cast<i64>(s.size());
  r.index = 3 * (n - 2) + r.nu3;
  r.n_cusps = static_cast<i64>(cusp_cycles(s).size());
  i64 twelve_g = 12 + r.index - 3 * r.nu2 - 4 * r.nu3 - 6 * r.n_cusps;
  if (twelve_g % 12) fail("non-integral genus");
  r.genus = twelve_g / 12;
  return r;
}

std::vector<TildeArc> tilde_arcs(const FareySymbol& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> first(n);
  int pos = 0;
  for (int i = 0; i < n; ++i) {
    first[i] = pos;
    pos += s.arcs[i].mu == 1 ? 1 : 2;
  }
  std::vector<TildeArc> out;
  for (int i = 0; i < n; ++i) {
    const FareyArc& a = s.arcs[i];
    if (a.mu == 1) {
      out.push_back({i, ArcPart::Whole, first[a.star], a.glue});
    } else {
      out.push_back({i, ArcPart::U, first[i] + 1, a.glue});
      out.push_back({i, ArcPart::V, first[i], a.glue.inverse()});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FareyGroup::Ptr FareyGroup::sl2z() {
  static Ptr root = [] {
    auto g = std::shared_ptr<FareyGroup>(new FareyGroup());
    g->group_ = full_modular_group();
    g->symbol_ = base_symbol_sl2z();
    g->reps_ = {identity()};
    g->sl2_reps_ = {identity()};
    if (g->group_.key) {
      g->rep_index_[g->group_.key(identity())] = 0;
      g->sl2_index_[g->group_.key(identity())] = 0;
    }
    return Ptr(g);
  }();
  return root;
}

int FareyGroup::parent_coset(const Mat& g) const {
  if (group_.key) {
    auto it = rep_index_.find(group_.key(g));
    return it == rep_index_.end() ? -1 : it->second;
  }
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    Mat x = g * reps_[i].inverse();
    if (group_.member(x) || group_.member(-x)) return static_cast<int>(i);
  }
  return -1;
}

int FareyGroup::sl2_coset(const Mat& g, Mat* gamma) const {
  int j = -1;
  if (group_.key) {
    auto it = sl2_index_.find(group_.key(g));
    if (it != sl2_index_.end()) j = it->second;
  } else {
    for (std::size_t i = 0; i < sl2_reps_.size() && j < 0; ++i) {
      Mat x = g * sl2_reps_[i].inverse();
      if (group_.member(x) || group_.member(-x)) j = static_cast<int>(i);
    }
  }
  if (j < 0) throw FareyError("no coset found for " + g.str());
  if (gamma) {
    Mat x = g * sl2_reps_[j].inverse();
    if (group_.member(x)) *gamma = x;
    else if (group_.member(-x)) *gamma = -x;
    else throw FareyError("coset key inconsistent with membership");
  }
  return j;
}

Mat FareyGroup::evaluate(const Word& w) const {
  Mat p = identity();
  for (int l : w.letters) p = p * symbol_.arcs[l].glue;
  if (w.sign < 0) p = -p;
  return p * reps_[w.coset];
}

namespace {

// g = +- product over sigma (arc 0) and tau (arc 1), by a Euclid descent
Word sl2_word(const Mat& g) {
  if (g.det() != 1) throw FareyError("matrix not in SL2(Z)");
  std::vector<int> letters;
  auto push_T = [&](i64 q) {
    // T = -tau^2 sigma, T^{-1} = -sigma tau
    for (i64 i = 0; i < q; ++i) letters.insert(letters.end(), {1, 1, 0});
    for (i64 i = 0; i < -q; ++i) letters.insert(letters.end(), {0, 1});
  };
  Mat h = g;
  while (h.c != 0) {
    i64 q = floor_div(h.a, h.c);
    push_T(q);
    letters.push_back(0);
    Mat t = T().pow(static_cast<int>(-q)) * h;
    h = Mat{t.c, t.d, -t.a, -t.b};
  }
  push_T(h.a * h.b);
  Word w;
  w.letters = std::move(letters);
  Mat p = identity();
  for (int l : w.letters) p = p * (l == 0 ? sigma() : tau());
  if (p == g) w.sign = 1;
  else if (p == -g) w.sign = -1;
  else throw FareyError("word reconstruction failed");
  return w;
}

}  // namespace

Word FareyGroup::word(const Mat& g) const {
  if (!parent_) return sl2_word(g);
  Word w = decompose(g);
  if (w.coset != 0) throw FareyError("matrix not in " + group_.name);
  return w;
}

Word FareyGroup::decompose(const Mat& g) const {
  if (!parent_) return sl2_word(g);
  Word pw = parent_->word(g);
  Word out;
  out.sign = pw.sign;
  int delta = 0;
  for (int a : pw.letters) {
    const Word& f = factor_[a][delta];
    out.letters.insert(out.letters.end(), f.letters.begin(), f.letters.end());
    out.sign *= f.sign;
    delta = perm_[a][delta];
  }
  out.coset = delta;
  if (evaluate(out) != g) throw FareyError("coset decomposition failed to reproduce input");
  // a representative itself gets the empty word
  if (g == reps_[delta] || g == -reps_[delta]) {
    out.letters.clear();
    out.sign = g == reps_[delta] ? 1 : -1;
  }
  return out;
}

FareyGroup::Ptr FareyGroup::subgroup(const Ptr& parent, const Subgroup& g, std::size_t max_cosets) {
  auto node = std::shared_ptr<FareyGroup>(new FareyGroup());
  node->parent_ = parent;
  node->group_ = g;
  const FareySymbol& P = parent->symbol();
  const int m = static_cast<int>(P.size());
  std::vector<int> ell3, other;
  for (int a = 0; a < m; ++a) (P.arcs[a].mu == 3 ? ell3 : other).push_back(a);

  auto& C = node->reps_;
  auto add = [&](const Mat& x) {
    if (C.size() >= max_cosets) throw FareyError("coset bound exceeded (infinite index or bad predicate)");
    C.push_back(x);
    if (g.key) node->rep_index_[g.key(x)] = static_cast<int>(C.size()) - 1;
    return static_cast<int>(C.size()) - 1;
  };
  auto signed_member = [&](const Mat& x) {
    if (g.member(x)) return x;
    if (g.member(-x)) return -x;
    throw FareyError("gluing element outside the subgroup");
  };
  add(identity());

  // (coset, parent arc, kind); kind 1 is the first third-arc (r,t) and kind 2
  // the second (t,s) of an order-3 parent arc translated by the coset
  using Elt = std::array<int, 3>;
  using Pair = std::pair<int, int>;
  std::deque<Pair> L, L3;
  std::list<Elt> V;
  std::map<Elt, std::list<Elt>::iterator> where;
  for (int a : other) L.push_back({0, a});
  for (int a : ell3) L3.push_back({0, a});
  for (int a = 0; a < m; ++a) where[{0, a, 0}] = V.insert(V.end(), {0, a, 0});

  // pairings decided during the walk, when an order-3 neighbourhood is only
  // partially covered: star and glue of the (t,s) piece
  std::map<Elt, Elt> star_override;
  std::map<Elt, Mat> glue_override;
  std::map<Pair, std::vector<Elt>> factor_override;

  auto replace = [&](const Elt& x, const std::vector<Elt>& seq) {
    auto it = where.find(x);
    if (it == where.end()) throw FareyError("arc to replace is not in the current boundary");
    auto pos = it->second;
    for (const Elt& e : seq) where[e] = V.insert(pos, e);
    V.erase(pos);
    where.erase(it);
  };
  auto cycle_from = [&](int ci, int skip) {
    std::vector<Elt> seq;
    for (int t = 1; t < m; ++t) seq.push_back({ci, (skip + t) % m, 0});
    return seq;
  };
  auto push_letters = [&](int ci) {
    for (int b : ell3) L3.push_back({ci, b});
  };
  auto push_other = [&](int ci) {
    for (int b : other) L.push_back({ci, b});
  };

  while (!L.empty() || !L3.empty()) {
    if (!L3.empty()) {
      Pair x = L3.front();
      L3.pop_front();
      const int a = x.second;
      const Mat& ga = P.arcs[a].glue;
      Mat g1 = C[x.first] * ga;
      if (node->parent_coset(g1) >= 0) continue;
      Mat g2 = g1 * ga;
      int known2 = node->parent_coset(g2);
      if (known2 < 0) {
        int i1 = add(g1);
        int i2 = add(g2);
        push_letters(i1);
        push_letters(i2);
        push_other(i1);
        push_other(i2);
        std::vector<Elt> seq = cycle_from(i1, a), seq2 = cycle_from(i2, a);
        seq.insert(seq.end(), seq2.begin(), seq2.end());
        replace({x.first, a, 0}, seq);
      } else {
        // the third translate is already present up to Gamma': attach only
        // xi gamma_a and pair the remaining (t,s) piece with (eta, a)
        int i1 = add(g1);
        push_letters(i1);
        push_other(i1);
        std::vector<Elt> seq = cycle_from(i1, a);
        Elt piece{x.first, a, 2}, partner{known2, a, 0};
        seq.push_back(piece);
        replace({x.first, a, 0}, seq);
        Mat h = signed_member(g2 * C[known2].inverse());
        star_override[piece] = partner;
        star_override[partner] = piece;
        glue_override[piece] = h;
        glue_override[partner] = h.inverse();
        factor_override[{i1, a}] = {piece};
        factor_override[{x.first, a}] = {};
        factor_override[{known2, a}] = {partner};
      }
    } else {
      Pair x = L.front();
      L.pop_front();
      Mat g1 = C[x.first] * P.arcs[x.second].glue;
      if (node->parent_coset(g1) >= 0) continue;
      int i1 = add(g1);
      push_letters(i1);
      push_other(i1);
      replace({x.first, x.second, 0}, cycle_from(i1, P.arcs[x.second].star));
    }
  }

  const int nc = static_cast<int>(C.size());
  node->perm_.assign(m, std::vector<int>(nc));
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < nc; ++i) {
      int j = node->parent_coset(C[i] * P.arcs[a].glue);
      if (j < 0) throw FareyError("coset table not closed");
      node->perm_[a][i] = j;
    }
  auto exact_factor = [&](int ci, int a) { return C[ci] * P.arcs[a].glue * C[node->perm_[a][ci]].inverse(); };

  struct Rec {
    Elt elt;
    Cusp from, to;
    Mat glue;
    int mu;
    int star;
  };
  auto third_point = [&](int ci, int a) { return act(C[ci] * P.arcs[a].glue, P.arcs[a].from); };
  std::vector<Rec> recs;
  std::map<Elt, int> rec_of;
  for (const Elt& e : V) {
    Rec r;
    r.elt = e;
    const FareyArc& pa = P.arcs[e[1]];
    r.from = act(C[e[0]], pa.from);
    r.to = act(C[e[0]], pa.to);
    if (e[2] == 2) r.from = third_point(e[0], e[1]);
    auto go = glue_override.find(e);
    r.glue = go != glue_override.end() ? go->second : signed_member(exact_factor(e[0], e[1]));
    r.mu = 1;
    rec_of[e] = static_cast<int>(recs.size());
    recs.push_back(r);
  }
  for (int i = 0; i < static_cast<int>(recs.size()); ++i) {
    Rec& r = recs[i];
    auto so = star_override.find(r.elt);
    Elt ast = so != star_override.end() ? so->second
                                        : Elt{node->perm_[r.elt[1]][r.elt[0]], P.arcs[r.elt[1]].star, 0};
    auto it = rec_of.find(ast);
    if (it == rec_of.end()) throw FareyError("Ast image missing from the boundary");
    r.star = it->second;
    if (r.star == i) r.mu = P.arcs[r.elt[1]].mu;
  }
  const int nr0 = static_cast<int>(recs.size());
  for (int i = 0; i < nr0; ++i) {
    int j = recs[i].star;
    if (j != i && recs[j].star == i && i < j) recs[j].glue = recs[i].glue.inverse();
  }

  // rectify order-3 orbits of Ast'
  std::vector<int> order;
  std::vector<bool> done(nr0, false);
  for (int i = 0; i < nr0; ++i) {
    int b = recs[i].star, c = recs[b].star;
    if (b == i || c == i || done[i]) {
      order.push_back(i);
      continue;
    }
    if (recs[c].star != i) throw FareyError("Ast' orbit of unexpected length");
    done[i] = done[b] = done[c] = true;
    Mat gA = recs[i].glue, gC = recs[c].glue;
    Mat prod = gA * recs[b].glue * gC;
    node->rect_products_.push_back(prod);
    if (!prod.is_pm_identity()) throw FareyError("order-3 orbit product is not the identity");
    const Elt e = recs[i].elt;
    Cusp r = recs[i].from, s = recs[i].to, t = third_point(e[0], e[1]);
    Rec a1{{e[0], e[1], 1}, r, t, gA, 1, b};
    Rec a2{{e[0], e[1], 2}, t, s, gC.inverse(), 1, c};
    int id1 = static_cast<int>(recs.size());
    recs.push_back(a1);
    rec_of[a1.elt] = id1;
    int id2 = static_cast<int>(recs.size());
    recs.push_back(a2);
    rec_of[a2.elt] = id2;
    recs[b].glue = gA.inverse();
    recs[b].star = id1;
    recs[c].star = id2;
    factor_override[{e[0], e[1]}] = {a1.elt};
    factor_override[{recs[b].elt[0], recs[b].elt[1]}] = {recs[b].elt, a2.elt};
    order.push_back(id1);
    order.push_back(id2);
  }

  const int n = static_cast<int>(order.size());
  int start = -1;
  for (int p = 0; p < n; ++p)
    if (recs[order[p]].from.is_infinity()) {
      if (start >= 0) throw FareyError("infinity appears twice among vertices");
      start = p;
    }
  if (start < 0) throw FareyError("infinity missing from vertices");
  std::vector<int> pos_of(recs.size(), -1);
  std::vector<int> final_order(n);
  for (int p = 0; p < n; ++p) {
    final_order[p] = order[(start + p) % n];
    pos_of[final_order[p]] = p;
  }
  for (int p = 0; p < n; ++p) {
    const Rec& r = recs[final_order[p]];
    FareyArc a;
    a.from = r.from;
    a.to = r.to;
    a.mu = r.mu;
    a.glue = r.glue;
    a.star = pos_of[r.star];
    if (a.star < 0) throw FareyError("star target removed");
    node->symbol_.arcs.push_back(a);
  }
  node->symbol_.validate(g.member);

  // factor words for the delta recursion
  node->factor_.assign(m, std::vector<Word>(nc));
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < nc; ++i) {
      Word w;
      auto fo = factor_override.find({i, a});
      std::vector<Elt> elts;
      if (fo != factor_override.end()) elts = fo->second;
      else if (rec_of.count({i, a, 0})) elts = {{i, a, 0}};
      for (const Elt& e : elts) {
        int p = pos_of.at(rec_of.at(e));
        if (p < 0) throw FareyError("factor refers to a removed arc");
        w.letters.push_back(p);
      }
      Mat x = exact_factor(i, a), prod = identity();
      for (int l : w.letters) prod = prod * node->symbol_.arcs[l].glue;
      if (prod == x) w.sign = 1;
      else if (prod == -x) w.sign = -1;
      else throw FareyError("factor word mismatch");
      node->factor_[a][i] = w;
    }

  // representatives over SL2(Z)
  for (const Mat& xi : C)
    for (const Mat& eta : parent->sl2_reps()) {
      Mat r = xi * eta;
      if (g.key) node->sl2_index_[g.key(r)] = static_cast<int>(node->sl2_reps_.size());
      node->sl2_reps_.push_back(r);
    }
  if (g.key && node->sl2_index_.size() != node->sl2_reps_.size()) throw FareyError("duplicate SL2 coset keys");
  return Ptr(node);
}

}  // namespace msym
