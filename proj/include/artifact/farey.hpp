#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "artifact/groups.hpp"
#include "artifact/modgroup.hpp"

namespace msym {

struct FareyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FareyArc {
  Cusp from, to;
  int star = 0;
  int mu = 1;  // 1 free, 2 or 3 elliptic
  Mat glue;
};

struct FareySymbol {
  std::vector<FareyArc> arcs;

  std::size_t size() const { return arcs.size(); }
  std::vector<Cusp> vertices() const;
  // throws FareyError; member (optional) is checked on every glue matrix
  void validate(const std::function<bool(const Mat&)>& member = {}) const;
};

FareySymbol base_symbol_sl2z();
// image of the symbol under conjugation by epsilon, for groups with eps Gamma eps = Gamma
FareySymbol epsilon_transport(const FareySymbol& s);

struct CuspCycle {
  std::vector<int> positions;  // vertex positions (vertex i starts arc i)
  Cusp cusp;                   // vertex at positions[0]
  Mat gamma_p;                 // gamma_p * oo = cusp
  Mat generator;               // positive generator of the stabilizer, an element of the group
  i64 width = 0;
  bool irregular = false;      // gamma_p^{-1} generator gamma_p = -T^w
  bool cycle_positive = true;  // the plain cycle product was already the positive generator
};

std::vector<CuspCycle> cusp_cycles(const FareySymbol& s);

struct FareyInvariants {
  i64 index, n_cusps, nu2, nu3, genus;
};
FareyInvariants invariants(const FareySymbol& s);

enum class ArcPart { Whole, U, V };
struct TildeArc {
  int arc;
  ArcPart part;
  int star;
  Mat glue;
};
std::vector<TildeArc> tilde_arcs(const FareySymbol& s);

struct Word {
  std::vector<int> letters;  // arc indices, read left to right
  int sign = 1;
  int coset = 0;             // index of the coset representative on the right
};

// node of a subgroup tower rooted at SL2(Z)
class FareyGroup : public std::enable_shared_from_this<FareyGroup> {
 public:
  using Ptr = std::shared_ptr<const FareyGroup>;

  static Ptr sl2z();
  static Ptr subgroup(const Ptr& parent, const Subgroup& g, std::size_t max_cosets = 200000);
  static Ptr build(const Subgroup& g, std::size_t max_cosets = 200000) { return subgroup(sl2z(), g, max_cosets); }

  const FareySymbol& symbol() const { return symbol_; }
  const Subgroup& group() const { return group_; }
  const Ptr& parent() const { return parent_; }
  // representatives of Gamma' \ parent, in discovery order; first is the identity
  const std::vector<Mat>& reps() const { return reps_; }
  // representatives of +-Gamma' \ SL2(Z)
  const std::vector<Mat>& sl2_reps() const { return sl2_reps_; }
  // index j with g in +-Gamma xi_j; gamma (if given) receives the member g xi_j^{-1} up to sign
  int sl2_coset(const Mat& g, Mat* gamma = nullptr) const;
  // g = sign * prod glue(letters) * reps()[coset], for g in the parent group
  Word decompose(const Mat& g) const;
  // g in this group as sign * product of glue matrices
  Word word(const Mat& g) const;
  Mat evaluate(const Word& w) const;
  // rectification record: gamma'_A gamma'_B gamma'_C for every order-3 orbit
  const std::vector<Mat>& rectified_products() const { return rect_products_; }

 private:
  FareyGroup() = default;
  int parent_coset(const Mat& g) const;

  Ptr parent_;
  Subgroup group_;
  FareySymbol symbol_;
  std::vector<Mat> reps_;
  std::map<CosetKey, int> rep_index_;
  std::vector<Mat> sl2_reps_;
  std::map<CosetKey, int> sl2_index_;
  // per (coset, parent arc): image coset and the child word of the exact factor
  std::vector<std::vector<int>> perm_;
  std::vector<std::vector<Word>> factor_;
  std::vector<Mat> rect_products_;
};

}  // namespace msym
