#pragma once

#include <map>
#include <utility>
#include <vector>

#include "common.hpp"
#include "fincat.hpp"
#include "presheaf.hpp"
#include "setfunctor.hpp"

namespace catk {

// Comma category of a functor against a fixed object of its target.
// Objects are pairs (c, anchor); morphisms are the source-category
// morphisms compatible with both anchors.
struct CommaCat {
  CatPtr cat;
  CatFunctor proj;                              // to the source of F
  std::vector<std::pair<Obj, Mor>> objectData;  // (c, anchor)
  std::vector<Mor> morphismData;                // underlying source morphism

  Obj objectByData(Obj c, Mor anchor) const;
};

// Anchors run d -> F c.
CommaCat commaFrom(const CatFunctor& F, Obj d);
// Anchors run F c -> d.
CommaCat commaTo(const CatFunctor& F, Obj d);

// Precomposition with F; values and actions are looked up along F.
PshPtr restrictPsh(const CatFunctor& F, const PshPtr& x);
PshMap restrictOnMap(const CatFunctor& F, const PshMap& m);

// Left extension along F. The value at d is the colimit class set of the
// input over the comma category with anchors d -> F c.
struct LanResult {
  PshPtr psh;                       // over the target of F
  std::vector<CommaCat> comma;      // per target object
  std::vector<SetColimit> classes;  // per target object
  // Per target object, per class: a representative (comma object, element).
  std::vector<std::vector<std::pair<Obj, int>>> reps;

  int classAt(Obj d, Obj c, Mor anchor, int elem) const;
};
LanResult lanExtend(const CatFunctor& F, const PshPtr& x);
PshMap lanOnMap(const CatFunctor& F, const PshMap& m);
// x -> restrict(F, lan(F, x)), by the identity anchor.
PshMap lanUnit(const CatFunctor& F, const PshPtr& x);
// lan(F, restrict(F, y)) -> y, by acting along the anchor.
PshMap lanCounit(const CatFunctor& F, const PshPtr& y);

// Right extension along F. The value at d is the set of matching families
// over the comma category with anchors F c -> d.
struct RanResult {
  PshPtr psh;                   // over the target of F
  std::vector<CommaCat> comma;  // per target object
  std::vector<SetLimit> lims;   // per target object

  int familyAt(Obj d, const std::vector<int>& family) const;
};
RanResult ranExtend(const CatFunctor& F, const PshPtr& x);
PshMap ranOnMap(const CatFunctor& F, const PshMap& m);
// y -> ran(F, restrict(F, y)), collecting actions along the anchors.
PshMap ranUnit(const CatFunctor& F, const PshPtr& y);
// restrict(F, ran(F, x)) -> x, by evaluation at the identity anchor.
PshMap ranCounit(const CatFunctor& F, const PshPtr& x);

// Truncated nerve of a category: an n-simplex is a chain of n composable
// morphisms; reindexing composes along the selected stops.
struct NerveResult {
  PshPtr psh;  // over the truncated monotone-map category
  // Per level, per simplex: the start object and the arrow chain.
  std::vector<std::vector<Obj>> starts;
  std::vector<std::vector<std::vector<Mor>>> chains;

  int chainIndex(int level, Obj start, const std::vector<Mor>& arrows) const;

  std::vector<std::map<std::pair<Obj, std::vector<Mor>>, int>> index;
};
NerveResult catNerve(const CatPtr& c, const DeltaCat& delta);

// Category of elements of a presheaf: objects (a, e); a morphism
// (a, e) -> (b, e') per u: a -> b whose action sends e' to e.
struct ElementsCat {
  CatPtr cat;
  CatFunctor proj;
  std::vector<std::pair<Obj, int>> objectData;

  Obj objectByData(Obj a, int elem) const;

  std::vector<int> offset;
};
ElementsCat elementsCat(const PshPtr& x);

// Simplicial realization: the truncated nerve of the category of elements,
// with its connectivity classes.
struct RealizeResult {
  ElementsCat elements;
  NerveResult nerve;
  PshPi0 pi0;
};
RealizeResult realize(const PshPtr& x, const DeltaCat& delta);

// Index base C x Delta<=K with its factor inclusions.
struct ProductBase {
  CatPtr inner;
  DeltaCat delta;
  ProductCat prod;
};
ProductBase productBase(CatPtr inner, int maxLevel);

// [n] -> (d, [n])
CatFunctor underlyingInclusion(const ProductBase& b, Obj d);
// c -> (c, [k])
CatFunctor valueInclusion(const ProductBase& b, int k);
// The interval flip [n] -> [n], alpha -> reversed alpha.
CatFunctor deltaReversal(const DeltaCat& d);
// Identity on the first factor, interval flip on the second.
CatFunctor productReversal(const ProductBase& b);

PshPtr underlyingPsh(const ProductBase& b, Obj d, const PshPtr& x);
PshPtr discretePsh(const ProductBase& b, const PshPtr& xOverDelta);
PshPtr valuePsh(const ProductBase& b, int k, const PshPtr& x);
LanResult valueEmbedding(const ProductBase& b, const PshPtr& xOverInner);
PshPtr opPsh(const ProductBase& b, const PshPtr& x);

// Triple base (C x Delta) x Delta with the diagonal functor and the
// level-zero embedding of the middle factor.
struct DiagonalBase {
  ProductBase base2;
  ProductCat prod3;
  CatFunctor diag;       // (d, k) -> (d, k, k)
  CatFunctor levelZero;  // (d, l) -> (d, 0, l)
};
DiagonalBase diagonalBase(const ProductBase& b);

PshPtr diagonalRestrict(const DiagonalBase& db, const PshPtr& x);
RanResult diagonalRan(const DiagonalBase& db, const PshPtr& x);
LanResult levelZeroEmbedding(const DiagonalBase& db, const PshPtr& x);

}  // namespace catk
