#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "common.hpp"
#include "fincat.hpp"

namespace catk {

class SetFunctor;
using SetFunctorPtr = std::shared_ptr<const SetFunctor>;

// Covariant finite-set-valued functor on a finite category.
// act(f) maps value(source f) into value(target f).
class SetFunctor {
 public:
  static SetFunctorPtr make(CatPtr base,
                            std::vector<std::vector<std::string>> elemNames,
                            std::vector<std::vector<int>> act);
  static SetFunctorPtr make(CatPtr base, const std::vector<int>& card,
                            std::vector<std::vector<int>> act);

  const CatPtr& base() const { return base_; }
  int card(Obj x) const { return static_cast<int>(names_[x].size()); }
  int totalCard() const;
  const std::string& elemName(Obj x, int e) const { return names_[x][e]; }
  const std::vector<std::string>& elemNames(Obj x) const { return names_[x]; }
  const std::vector<int>& act(Mor f) const { return act_[f]; }
  int apply(Mor f, int e) const { return act_[f][e]; }

  // Checks identity and composite preservation.
  AuditResult audit(std::uint64_t budget = kDefaultAuditBudget) const;

 private:
  SetFunctor() = default;
  CatPtr base_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> act_;
};

// Same base pointer, same cardinalities, same action tables; names ignored.
bool setFunctorStructurallyEqual(const SetFunctorPtr& a, const SetFunctorPtr& b);

SetFunctorPtr constSetFunctor(CatPtr base, int n);
// Hom(c, -) with action by postcomposition.
SetFunctorPtr homSetFunctor(CatPtr base, Obj c);

struct SetNat {
  SetFunctorPtr src;
  SetFunctorPtr dst;
  std::vector<std::vector<int>> comp;

  int apply(Obj x, int e) const { return comp[x][e]; }
  AuditResult audit() const;
};

SetNat idSetNat(const SetFunctorPtr& x);
SetNat composeSetNats(const SetNat& g, const SetNat& f);
bool setNatsEqual(const SetNat& a, const SetNat& b);
bool setNatIsIso(const SetNat& m);
SetNat inverseSetNat(const SetNat& m);

struct NatSetResult {
  std::vector<std::vector<std::vector<int>>> maps;
  std::uint64_t count = 0;
  bool complete = true;

  SetNat toNat(const SetFunctorPtr& src, const SetFunctorPtr& dst,
               std::size_t i) const;
};

// All natural transformations src -> dst in lexicographic component order.
// limit 0 means unbounded; countOnly skips storing the maps.
NatSetResult natSet(const SetFunctorPtr& src, const SetFunctorPtr& dst,
                    std::uint64_t limit = 0, bool countOnly = false);
std::uint64_t natSetCount(const SetFunctorPtr& src, const SetFunctorPtr& dst);

// Colimit classes of a covariant diagram. When the base has a terminal
// object the classes are its value set in element order; otherwise classes
// are labeled by least flattened member.
struct SetColimit {
  int classCount = 0;
  std::vector<std::vector<int>> classOf;
  std::vector<std::string> className;
};
SetColimit colimitSet(const SetFunctorPtr& f);

// Limit families of a covariant diagram: one value per object, compatible
// with every action map. When the base has an initial object the families
// are listed in the order of its value set; otherwise in lexicographic
// order of the value tuple.
struct SetLimit {
  std::vector<std::vector<int>> families;
  int indexOf(const std::vector<int>& family) const;

  std::map<std::vector<int>, int> index;
};
SetLimit limitSet(const SetFunctorPtr& f);

}  // namespace catk
