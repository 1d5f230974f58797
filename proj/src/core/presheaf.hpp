#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fincat.hpp"

namespace catk {

class Presheaf;
using PshPtr = std::shared_ptr<const Presheaf>;

// A finite presheaf: a set per object of the base, reindexed contravariantly
// along base morphisms. Immutable; all constructors validate shape, while
// functor laws are audit's job.
class Presheaf {
 public:
  // act[f] maps the value set at target(f) into the value set at source(f).
  static PshPtr make(CatPtr base, std::vector<std::vector<std::string>> names,
                     std::vector<std::vector<int>> act);
  // Element names default to their indices.
  static PshPtr make(CatPtr base, const std::vector<int>& card,
                     std::vector<std::vector<int>> act);

  const CatPtr& base() const { return base_; }
  int card(Obj x) const { return static_cast<int>(names_.at(x).size()); }
  std::uint64_t totalCard() const;
  const std::string& elemName(Obj x, int e) const { return names_.at(x).at(e); }
  const std::vector<std::string>& elemNames(Obj x) const { return names_.at(x); }
  const std::vector<int>& act(Mor f) const { return act_.at(f); }
  int apply(Mor f, int e) const { return act_.at(f).at(e); }

  // Identity and composition laws; the budget caps composable-pair checks.
  AuditResult audit(std::uint64_t budget = kDefaultAuditBudget) const;

 private:
  Presheaf() = default;
  CatPtr base_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> act_;
};

// Same base (by pointer), cards, and action tables; names are labels and do
// not participate.
bool pshStructurallyEqual(const Presheaf& a, const Presheaf& b);

// Presheaf over a structurally equal base, same tables.
PshPtr rebasePsh(PshPtr x, CatPtr newBase);

// A natural map between presheaves on one base; comp[x] carries elements of
// src at x to elements of dst at x.
struct PshMap {
  PshPtr src, dst;
  std::vector<std::vector<int>> comp;

  int apply(Obj x, int e) const { return comp.at(x).at(e); }
  // Shape plus exhaustive naturality.
  AuditResult audit() const;
};

PshMap idPshMap(PshPtr x);
PshMap composePshMaps(const PshMap& g, const PshMap& f);
bool pshMapsEqual(const PshMap& a, const PshMap& b);
bool isMono(const PshMap& m);
bool isEpi(const PshMap& m);
bool isIso(const PshMap& m);
PshMap inversePshMap(const PshMap& m);

PshPtr terminalPsh(CatPtr base);
PshPtr initialPsh(CatPtr base);
// Constant value set with identity reindexing.
PshPtr constPsh(CatPtr base, int n);
PshMap toTerminal(PshPtr x, PshPtr terminal);
PshMap fromInitial(PshPtr x, PshPtr initial);

// Value at x is hom(x, c); reindexing is precomposition.
PshPtr representable(CatPtr base, Obj c);
// The map out of representable(base, c) sending the identity to element e.
PshMap yonedaMap(PshPtr x, Obj c, int e);
// Postcomposition with g as a map between caller-supplied representables
// y(source g) -> y(target g).
PshMap representableMap(PshPtr ya, Obj a, PshPtr yb, Obj b, Mor g);

struct ProductPsh {
  PshPtr psh;
  PshMap projLeft, projRight;
  int pairIndex(Obj x, int a, int b) const;
  std::pair<int, int> parts(Obj x, int e) const;
};
ProductPsh productPsh(PshPtr a, PshPtr b);
// <f, g> into the product, for f, g out of one source.
PshMap pairingMap(const ProductPsh& p, const PshMap& f, const PshMap& g);

struct CoproductPsh {
  PshPtr psh;
  PshMap injLeft, injRight;
  // Element of the sum -> (side, element); sides 0/1.
  std::pair<int, int> parts(Obj x, int e) const;
};
CoproductPsh coproductPsh(PshPtr a, PshPtr b);
PshMap copairingMap(const CoproductPsh& c, const PshMap& f, const PshMap& g);

// Pullback of f: A -> C, g: B -> C; elements are the matching pairs.
struct PullbackPsh {
  PshPtr psh;
  PshMap projLeft, projRight;
  int pairIndex(Obj x, int a, int b) const;  // -1 when not matching
  std::pair<int, int> parts(Obj x, int e) const;

 private:
  friend PullbackPsh pullbackPsh(const PshMap& f, const PshMap& g);
  std::vector<std::map<std::pair<int, int>, int>> index_;
  std::vector<std::vector<std::pair<int, int>>> parts_;
};
PullbackPsh pullbackPsh(const PshMap& f, const PshMap& g);
// <u, v> into the pullback, for u, v with f(u(w)) = g(v(w)).
PshMap pullbackMediate(const PullbackPsh& p, const PshMap& u, const PshMap& v);

// Pushout of f: C -> A, g: C -> B; pointwise quotient of the sum by
// f(z) ~ g(z), which is natural because f and g are.
struct PushoutPsh {
  PshPtr psh;
  PshMap injLeft, injRight;
};
PushoutPsh pushoutPsh(const PshMap& f, const PshMap& g);
// Out of the pushout, for u, v agreeing on the glued part.
PshMap pushoutMediate(const PushoutPsh& p, const PshMap& u, const PshMap& v);

// Subpresheaf spanned by seed elements: the closure under reindexing, with
// its inclusion; elemOf names each kept element in the parent.
struct SubPsh {
  PshPtr psh;
  PshMap incl;
  std::vector<std::vector<int>> elemOf;
};
SubPsh subpresheafClosure(PshPtr x, const std::vector<std::vector<int>>& seeds);
SubPsh equalizerPsh(const PshMap& f, const PshMap& g);

// Quotient by the congruence generated by (object, e1, e2) pairs.
struct QuotientPsh {
  PshPtr psh;
  PshMap proj;
};
QuotientPsh quotientPsh(PshPtr x,
                        const std::vector<std::array<int, 3>>& pairs);

// The set of natural maps src -> dst, lexicographically ordered by the
// flattened component tables. limit = 0 means unbounded; a truncated
// enumeration reports complete = false.
struct NatHomResult {
  std::vector<std::vector<std::vector<int>>> maps;
  std::uint64_t count = 0;
  bool complete = true;
  PshMap toMap(PshPtr src, PshPtr dst, std::size_t i) const;
};
NatHomResult natHom(PshPtr x, PshPtr y, std::uint64_t limit = 0,
                    bool countOnly = false);
std::uint64_t natHomCount(PshPtr x, PshPtr y);

// Connected components of the category of elements.
struct PshPi0 {
  int count = 0;
  std::vector<std::vector<int>> label;  // per object, per element
};
PshPi0 pshPi0(PshPtr x);

// Exponential dst^expnt: the value at b is the set of natural maps
// y(b) x expnt -> dst, reindexed by precomposing the representable leg.
struct ExpPsh {
  PshPtr psh;
  PshPtr expnt, target;
  // For element k of psh at b: the family tables, one per object z, mapping
  // pairIndex of (y(b) x expnt)(z) to target(z).
  std::vector<ProductPsh> prod;                             // y(b) x expnt
  std::vector<std::vector<std::vector<std::vector<int>>>> elems;
  int indexOf(Obj b, const std::vector<std::vector<int>>& family) const;

 private:
  friend ExpPsh exponentialPsh(PshPtr expnt, PshPtr target);
  std::vector<std::map<std::vector<std::vector<int>>, int>> index_;
};
ExpPsh exponentialPsh(PshPtr expnt, PshPtr target);

// X^A -> X^{A'} along g: A' -> A.
PshMap expPrecompose(const ExpPsh& from, const ExpPsh& to, const PshMap& g);
// X^A -> Y^A along p: X -> Y.
PshMap expPostcompose(const ExpPsh& from, const ExpPsh& to, const PshMap& p);
// X^terminal -> X, evaluating at the identity; an isomorphism.
PshMap expUnitIso(const ExpPsh& e);

// ---- Shapes over a truncated monotone-map base ----

// Chain of k edge representables glued end to end, with its inclusion into
// representable([k]).
struct SpineResult {
  PshPtr psh;
  PshMap inclusion;
};
SpineResult spinePsh(const DeltaCat& d, int k);

// Subobject of representable([n]) of maps missing some vertex.
SubPsh simplexBoundary(const DeltaCat& d, int n);
// Maps missing some vertex other than i.
SubPsh simplexHorn(const DeltaCat& d, int n, int i);

}  // namespace catk
