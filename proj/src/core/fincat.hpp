#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace catk {

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

inline constexpr std::uint64_t kDefaultAuditBudget = 20'000'000;

// A finite category: object and morphism tables plus a fully materialized
// composition table. Immutable after construction; build via CatBuilder.
class FinCat {
 public:
  Obj objectCount() const { return static_cast<Obj>(objNames_.size()); }
  Mor morphismCount() const { return static_cast<Mor>(morNames_.size()); }

  const std::string& objectName(Obj x) const { return objNames_.at(x); }
  const std::string& morphismName(Mor f) const { return morNames_.at(f); }

  Obj source(Mor f) const { return src_.at(f); }
  Obj target(Mor f) const { return tgt_.at(f); }
  Mor identity(Obj x) const { return id_.at(x); }
  bool isIdentity(Mor f) const { return id_.at(src_.at(f)) == f; }

  bool composable(Mor g, Mor f) const { return source(g) == target(f); }

  // g after f; requires composable(g, f) and a filled table entry.
  Mor compose(Mor g, Mor f) const;
  // kNoMor instead of throwing on a hole; still requires composability.
  Mor composeOrHole(Mor g, Mor f) const;

  // Morphisms x -> y in id order.
  const std::vector<Mor>& hom(Obj x, Obj y) const { return hom_.at(x).at(y); }
  const std::vector<Mor>& morphismsFrom(Obj x) const { return out_.at(x); }
  const std::vector<Mor>& morphismsInto(Obj y) const { return in_.at(y); }
  // Position of f within hom(source f, target f).
  std::int32_t homPos(Mor f) const { return posHom_.at(f); }

  Obj objectByName(const std::string& name) const;  // -1 if absent
  Mor morphismByName(const std::string& name) const;

  // Checks identity typing, unit laws, composite typing, table totality, and
  // associativity. The budget caps associativity triples only; a truncated
  // sweep reports exhaustive = false.
  AuditResult audit(std::uint64_t assocBudget = kDefaultAuditBudget) const;

  std::uint64_t composablePairCount() const;

 private:
  friend class CatBuilder;
  friend bool structurallyEqual(const FinCat& a, const FinCat& b);
  FinCat() = default;

  std::vector<std::string> objNames_;
  std::vector<std::string> morNames_;
  std::vector<Obj> src_, tgt_;
  std::vector<Mor> id_;
  std::vector<std::vector<std::vector<Mor>>> hom_;  // hom_[x][y]
  std::vector<std::vector<Mor>> out_, in_;          // per object
  std::vector<std::int32_t> posOut_, posIn_;        // index within out_/in_
  std::vector<std::int32_t> posHom_;                // index within hom_
  // comp_[y] is an |out(y)| x |in(y)| block: entry for (g from y, f into y).
  std::vector<std::vector<Mor>> comp_;
};

// Identical tables: names, sources, targets, identities, composites.
bool structurallyEqual(const FinCat& a, const FinCat& b);

// Accumulates tables, then finalizes lookup structures. Morphism ids are
// insertion order. build() validates shape (ids in range, identities
// assigned, composite typing); algebraic laws are FinCat::audit's job, and
// missing composites are left as holes for audit to report.
class CatBuilder {
 public:
  Obj addObject(std::string name);
  Mor addMorphism(Obj src, Obj tgt, std::string name);
  void setIdentity(Obj x, Mor f);
  void setComposite(Mor g, Mor f, Mor gf);

  Obj objectCount() const { return static_cast<Obj>(objNames_.size()); }
  Mor morphismCount() const { return static_cast<Mor>(src_.size()); }
  Obj source(Mor f) const { return src_.at(f); }
  Obj target(Mor f) const { return tgt_.at(f); }

  CatPtr build() const;

 private:
  std::vector<std::string> objNames_;
  std::vector<std::string> morNames_;
  std::vector<Obj> src_, tgt_;
  std::vector<Mor> id_;
  std::vector<std::array<Mor, 3>> composites_;  // (g, f, g after f)
};

// A functor between finite categories, stored as object/morphism tables.
struct CatFunctor {
  CatPtr src;
  CatPtr dst;
  std::vector<Obj> objMap;
  std::vector<Mor> morMap;

  Obj onObj(Obj x) const { return objMap.at(x); }
  Mor onMor(Mor f) const { return morMap.at(f); }

  // Checks typing, identity preservation, and composite preservation; the
  // budget caps composable-pair checks.
  AuditResult audit(std::uint64_t budget = kDefaultAuditBudget) const;
};

CatFunctor identityFunctor(CatPtr c);
CatFunctor composeFunctors(const CatFunctor& g, const CatFunctor& f);
bool functorsEqual(const CatFunctor& a, const CatFunctor& b);

// ---- Index-category constructors ----

// Objects [0], ..., [maxLevel]; a morphism [n] -> [m] is the monotone tuple
// of its vertex images; composition is reindexing.
struct DeltaCat {
  CatPtr cat;
  int maxLevel = 0;
  std::vector<std::vector<int>> tuple;  // per morphism, size = source + 1

  // Morphism id for a vertex tuple into [target]; errors if absent.
  Mor byTuple(const std::vector<int>& t, int target) const;

 private:
  friend DeltaCat deltaTruncated(int N);
  std::map<std::pair<int, std::vector<int>>, Mor> index_;
};

DeltaCat deltaTruncated(int N);

enum class SliceDirection { kOver, kUnder };

// Over: objects are the morphisms into `obj`, morphisms the commuting
// triangles. Under: dual. The projection forgets the anchor.
struct SliceResult {
  CatPtr cat;
  CatFunctor projection;
  std::vector<Mor> objectAnchor;  // slice object -> ambient anchor morphism
};

SliceResult sliceCoslice(CatPtr c, Obj obj, SliceDirection dir);

// Same object/morphism ids and names, sources and targets swapped, table
// transposed.
CatPtr oppositeCat(CatPtr c);

struct ProductCat {
  CatPtr cat;
  CatPtr left, right;
  CatFunctor projLeft;
  CatFunctor projRight;

  Obj pairObj(Obj a, Obj b) const;
  Mor pairMor(Mor f, Mor g) const;
  std::pair<Obj, Obj> objParts(Obj x) const;
  std::pair<Mor, Mor> morParts(Mor f) const;
};

ProductCat productCat(CatPtr a, CatPtr b);

// Objects [k](c_1, ..., c_k) for k <= maxK with c_i objects of `inner`; a
// morphism (delta, M): [k](c) -> [l](d) pairs a monotone vertex tuple
// delta with inner morphisms M[i][j]: c_i -> d_j over delta(i-1) < j <=
// delta(i). M is stored flat in column order: entry for column j sits at
// j - delta[0] - 1. Composition composes column owners through the middle.
struct ThetaCat {
  CatPtr cat;
  CatPtr inner;
  int maxK = 0;
  std::vector<std::vector<Obj>> objectWord;  // per object: c_1..c_k
  std::vector<std::vector<int>> delta;       // per morphism
  std::vector<std::vector<Mor>> matrix;      // per morphism, flat

  Obj objectByWord(const std::vector<Obj>& word) const;
  Mor morphismByData(Obj src, Obj tgt, const std::vector<int>& delta,
                     const std::vector<Mor>& matrix) const;

 private:
  friend ThetaCat thetaConstruct(CatPtr inner, int maxK);
  std::map<std::vector<Obj>, Obj> wordIndex_;
  std::map<std::tuple<Obj, Obj, std::vector<int>, std::vector<Mor>>, Mor>
      morIndex_;
};

ThetaCat thetaConstruct(CatPtr inner, int maxK);

// The category of sets {0..s-1} for s <= maxSize with all functions.
struct FinSetCat {
  CatPtr cat;
  int maxSize = 0;
  std::vector<std::vector<int>> table;  // per morphism, length = source size

  Obj bySize(int s) const;
  Mor byTable(int srcSize, int tgtSize, const std::vector<int>& t) const;

 private:
  friend FinSetCat finSetCat(int maxSize);
  std::map<std::tuple<int, int, std::vector<int>>, Mor> index_;
};

FinSetCat finSetCat(int maxSize);

// Pointed variant: objects (size, basepoint) for 1 <= size <= maxSize,
// morphisms the basepoint-preserving functions; the projection forgets the
// point into finSetCat(maxSize).
struct PointedFinSetCat {
  CatPtr cat;
  FinSetCat base;
  CatFunctor projection;
  std::vector<std::pair<int, int>> objectData;  // (size, basepoint)

  Obj byData(int size, int basepoint) const;
};

PointedFinSetCat pointedFinSetCat(int maxSize);

// Pullback of categories along two functors into the same target: objects
// and morphisms are the matching pairs.
struct CatPullbackResult {
  CatPtr cat;
  CatFunctor toLeft;
  CatFunctor toRight;
  std::vector<std::pair<Obj, Obj>> objPairs;
  std::vector<std::pair<Mor, Mor>> morPairs;

  Obj byObjPair(Obj a, Obj b) const;
};

CatPullbackResult catPullback(const CatFunctor& f, const CatFunctor& g);

// Least object admitting exactly one morphism from (resp. into) every
// object, or -1 if none exists.
Obj findInitialObject(const FinCat& c);
Obj findTerminalObject(const FinCat& c);

// Connected components of a category: objects joined by morphism zigzags.
struct CatPi0 {
  int count = 0;
  std::vector<int> label;
};
CatPi0 catPi0(const FinCat& c);

}  // namespace catk
