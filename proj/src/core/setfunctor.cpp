#include "setfunctor.hpp"

#include <algorithm>
#include <numeric>

#include "mapenum.hpp"

namespace catk {
namespace {

std::vector<std::vector<std::string>> indexNames(const std::vector<int>& card) {
  std::vector<std::vector<std::string>> names(card.size());
  for (std::size_t x = 0; x < card.size(); ++x) {
    names[x].reserve(card[x]);
    for (int e = 0; e < card[x]; ++e) names[x].push_back(std::to_string(e));
  }
  return names;
}

struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // least member leads
    parent[b] = a;
  }
};

bool sameFun(const SetFunctorPtr& a, const SetFunctorPtr& b) {
  return a == b || (a && b && setFunctorStructurallyEqual(a, b));
}

detail::MapEnumProblem natSetProblem(const SetFunctorPtr& x,
                                     const SetFunctorPtr& y) {
  require(x && y, "natSet: null functor");
  require(x->base() == y->base(), "natSet: bases differ");
  const auto& base = *x->base();
  detail::MapEnumProblem p;
  p.domainCard.resize(base.objectCount());
  p.valueCard.resize(base.objectCount());
  for (Obj o = 0; o < base.objectCount(); ++o) {
    p.domainCard[o] = x->card(o);
    p.valueCard[o] = y->card(o);
  }
  for (Mor f = 0; f < base.morphismCount(); ++f) {
    if (base.isIdentity(f)) continue;
    detail::MapEnumProblem::Rule r;
    r.from = base.source(f);
    r.to = base.target(f);
    r.elemMap = x->act(f);
    r.valMap = y->act(f);
    p.rules.push_back(std::move(r));
  }
  return p;
}

}  // namespace

SetFunctorPtr SetFunctor::make(CatPtr base,
                               std::vector<std::vector<std::string>> elemNames,
                               std::vector<std::vector<int>> act) {
  require(base != nullptr, "SetFunctor: null base");
  require(static_cast<Obj>(elemNames.size()) == base->objectCount(),
          "SetFunctor: value table has wrong size");
  require(static_cast<Mor>(act.size()) == base->morphismCount(),
          "SetFunctor: action table has wrong size");
  for (Mor f = 0; f < base->morphismCount(); ++f) {
    Obj a = base->source(f), b = base->target(f);
    require(act[f].size() == elemNames[a].size(),
            "SetFunctor: action of " + base->morphismName(f) +
                " has wrong size");
    for (int v : act[f])
      require(v >= 0 && v < static_cast<int>(elemNames[b].size()),
              "SetFunctor: action of " + base->morphismName(f) +
                  " out of range");
  }
  auto p = std::shared_ptr<SetFunctor>(new SetFunctor());
  p->base_ = std::move(base);
  p->names_ = std::move(elemNames);
  p->act_ = std::move(act);
  return p;
}

SetFunctorPtr SetFunctor::make(CatPtr base, const std::vector<int>& card,
                               std::vector<std::vector<int>> act) {
  return make(std::move(base), indexNames(card), std::move(act));
}

int SetFunctor::totalCard() const {
  int n = 0;
  for (const auto& v : names_) n += static_cast<int>(v.size());
  return n;
}

AuditResult SetFunctor::audit(std::uint64_t budget) const {
  AuditResult res;
  for (Obj x = 0; x < base_->objectCount(); ++x) {
    ++res.checked;
    const auto& t = act_[base_->identity(x)];
    for (int e = 0; e < card(x); ++e) {
      if (t[e] != e)
        return auditFail("setfunctor-identity",
                         "identity action at " + base_->objectName(x) +
                             " moves " + elemName(x, e),
                         res.checked);
    }
  }
  std::uint64_t pairs = 0;
  for (Obj y = 0; y < base_->objectCount(); ++y) {
    for (Mor g : base_->morphismsFrom(y)) {
      for (Mor f : base_->morphismsInto(y)) {
        if (pairs++ >= budget) {
          res.exhaustive = false;
          return res;
        }
        ++res.checked;
        const auto& tgf = act_[base_->compose(g, f)];
        const auto& tg = act_[g];
        const auto& tf = act_[f];
        for (std::size_t e = 0; e < tf.size(); ++e) {
          if (tgf[e] != tg[tf[e]])
            return auditFail("setfunctor-composition",
                             "(" + base_->morphismName(g) + ", " +
                                 base_->morphismName(f) + ") acts wrong",
                             res.checked);
        }
      }
    }
  }
  return res;
}

bool setFunctorStructurallyEqual(const SetFunctorPtr& a,
                                 const SetFunctorPtr& b) {
  if (!a || !b || a->base() != b->base()) return false;
  for (Obj x = 0; x < a->base()->objectCount(); ++x)
    if (a->card(x) != b->card(x)) return false;
  for (Mor f = 0; f < a->base()->morphismCount(); ++f)
    if (a->act(f) != b->act(f)) return false;
  return true;
}

SetFunctorPtr constSetFunctor(CatPtr base, int n) {
  require(base != nullptr, "constSetFunctor: null base");
  require(n >= 0, "constSetFunctor: negative cardinality");
  std::vector<int> card(base->objectCount(), n);
  std::vector<std::vector<int>> act(base->morphismCount());
  for (Mor f = 0; f < base->morphismCount(); ++f) {
    act[f].resize(n);
    std::iota(act[f].begin(), act[f].end(), 0);
  }
  return SetFunctor::make(std::move(base), card, std::move(act));
}

SetFunctorPtr homSetFunctor(CatPtr base, Obj c) {
  require(base != nullptr, "homSetFunctor: null base");
  require(c >= 0 && c < base->objectCount(), "homSetFunctor: bad object");
  std::vector<std::vector<std::string>> names(base->objectCount());
  for (Obj x = 0; x < base->objectCount(); ++x)
    for (Mor m : base->hom(c, x)) names[x].push_back(base->morphismName(m));
  std::vector<std::vector<int>> act(base->morphismCount());
  for (Mor f = 0; f < base->morphismCount(); ++f) {
    const auto& ha = base->hom(c, base->source(f));
    act[f].reserve(ha.size());
    for (Mor m : ha) act[f].push_back(base->homPos(base->compose(f, m)));
  }
  return SetFunctor::make(std::move(base), std::move(names), std::move(act));
}

AuditResult SetNat::audit() const {
  AuditResult res;
  require(src && dst, "SetNat: null endpoint");
  require(src->base() == dst->base(), "SetNat: bases differ");
  const auto& base = *src->base();
  if (static_cast<Obj>(comp.size()) != base.objectCount())
    return auditFail("setnat-shape", "component table has wrong size");
  for (Obj x = 0; x < base.objectCount(); ++x) {
    ++res.checked;
    if (static_cast<int>(comp[x].size()) != src->card(x))
      return auditFail("setnat-shape",
                       "component at " + base.objectName(x) + " has wrong size",
                       res.checked);
    for (int v : comp[x])
      if (v < 0 || v >= dst->card(x))
        return auditFail("setnat-shape",
                         "component at " + base.objectName(x) + " out of range",
                         res.checked);
  }
  for (Mor f = 0; f < base.morphismCount(); ++f) {
    Obj a = base.source(f), b = base.target(f);
    for (int e = 0; e < src->card(a); ++e) {
      ++res.checked;
      if (comp[b][src->apply(f, e)] != dst->apply(f, comp[a][e]))
        return auditFail("setnat-naturality",
                         base.morphismName(f) + " at " + src->elemName(a, e),
                         res.checked);
    }
  }
  return res;
}

SetNat idSetNat(const SetFunctorPtr& x) {
  require(x != nullptr, "idSetNat: null functor");
  SetNat m;
  m.src = x;
  m.dst = x;
  m.comp.resize(x->base()->objectCount());
  for (Obj o = 0; o < x->base()->objectCount(); ++o) {
    m.comp[o].resize(x->card(o));
    std::iota(m.comp[o].begin(), m.comp[o].end(), 0);
  }
  return m;
}

SetNat composeSetNats(const SetNat& g, const SetNat& f) {
  require(sameFun(f.dst, g.src), "composeSetNats: middle functors differ");
  SetNat h;
  h.src = f.src;
  h.dst = g.dst;
  h.comp.resize(f.comp.size());
  for (std::size_t x = 0; x < f.comp.size(); ++x) {
    h.comp[x].reserve(f.comp[x].size());
    for (int e : f.comp[x]) h.comp[x].push_back(g.comp[x].at(e));
  }
  return h;
}

bool setNatsEqual(const SetNat& a, const SetNat& b) {
  return sameFun(a.src, b.src) && sameFun(a.dst, b.dst) && a.comp == b.comp;
}

bool setNatIsIso(const SetNat& m) {
  require(m.src && m.dst, "setNatIsIso: null endpoint");
  for (Obj x = 0; x < m.src->base()->objectCount(); ++x) {
    if (m.src->card(x) != m.dst->card(x)) return false;
    std::vector<bool> hit(m.dst->card(x), false);
    for (int v : m.comp[x]) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

SetNat inverseSetNat(const SetNat& m) {
  require(setNatIsIso(m), "inverseSetNat: not invertible");
  SetNat r;
  r.src = m.dst;
  r.dst = m.src;
  r.comp.resize(m.comp.size());
  for (std::size_t x = 0; x < m.comp.size(); ++x) {
    r.comp[x].resize(m.comp[x].size());
    for (std::size_t e = 0; e < m.comp[x].size(); ++e)
      r.comp[x][m.comp[x][e]] = static_cast<int>(e);
  }
  return r;
}

SetNat NatSetResult::toNat(const SetFunctorPtr& src, const SetFunctorPtr& dst,
                           std::size_t i) const {
  require(i < maps.size(), "NatSetResult: index out of range");
  SetNat m;
  m.src = src;
  m.dst = dst;
  m.comp = maps[i];
  return m;
}

NatSetResult natSet(const SetFunctorPtr& src, const SetFunctorPtr& dst,
                    std::uint64_t limit, bool countOnly) {
  auto res =
      detail::enumerateFamilies(natSetProblem(src, dst), limit, countOnly);
  NatSetResult out;
  out.maps = std::move(res.families);
  out.count = res.count;
  out.complete = res.complete;
  return out;
}

std::uint64_t natSetCount(const SetFunctorPtr& src, const SetFunctorPtr& dst) {
  return detail::enumerateFamilies(natSetProblem(src, dst), 0, true).count;
}

SetColimit colimitSet(const SetFunctorPtr& f) {
  require(f != nullptr, "colimitSet: null functor");
  const auto& base = *f->base();
  SetColimit r;
  r.classOf.resize(base.objectCount());
  Obj t = findTerminalObject(base);
  if (t >= 0) {
    // Value at a terminal object, transported along the unique morphisms.
    r.classCount = f->card(t);
    r.className = f->elemNames(t);
    for (Obj x = 0; x < base.objectCount(); ++x) {
      Mor u = base.hom(x, t).front();
      r.classOf[x] = f->act(u);
    }
    return r;
  }
  std::vector<int> off(base.objectCount() + 1, 0);
  for (Obj x = 0; x < base.objectCount(); ++x)
    off[x + 1] = off[x] + f->card(x);
  UF uf(off.back());
  for (Mor m = 0; m < base.morphismCount(); ++m) {
    Obj a = base.source(m), b = base.target(m);
    for (int e = 0; e < f->card(a); ++e)
      uf.unite(off[a] + e, off[b] + f->apply(m, e));
  }
  std::vector<int> label(off.back(), -1);
  for (Obj x = 0; x < base.objectCount(); ++x) {
    r.classOf[x].resize(f->card(x));
    for (int e = 0; e < f->card(x); ++e) {
      int root = uf.find(off[x] + e);
      if (label[root] < 0) {
        label[root] = r.classCount++;
        r.className.push_back(base.objectName(x) + ":" + f->elemName(x, e));
      }
      r.classOf[x][e] = label[root];
    }
  }
  return r;
}

int SetLimit::indexOf(const std::vector<int>& family) const {
  auto it = index.find(family);
  require(it != index.end(), "SetLimit: family not in the limit");
  return it->second;
}

SetLimit limitSet(const SetFunctorPtr& f) {
  require(f != nullptr, "limitSet: null functor");
  const auto& base = *f->base();
  SetLimit r;
  Obj i = findInitialObject(base);
  if (i >= 0) {
    // Families are freely generated by the value at an initial object.
    for (int v = 0; v < f->card(i); ++v) {
      std::vector<int> fam(base.objectCount());
      for (Obj x = 0; x < base.objectCount(); ++x)
        fam[x] = f->apply(base.hom(i, x).front(), v);
      r.index[fam] = static_cast<int>(r.families.size());
      r.families.push_back(std::move(fam));
    }
    return r;
  }
  detail::MapEnumProblem p;
  p.domainCard.assign(base.objectCount(), 1);
  p.valueCard.resize(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x) p.valueCard[x] = f->card(x);
  for (Mor m = 0; m < base.morphismCount(); ++m) {
    if (base.isIdentity(m)) continue;
    detail::MapEnumProblem::Rule rule;
    rule.from = base.source(m);
    rule.to = base.target(m);
    rule.elemMap = {0};
    rule.valMap = f->act(m);
    p.rules.push_back(std::move(rule));
  }
  auto res = detail::enumerateFamilies(p, 0, false);
  r.families.reserve(res.families.size());
  for (auto& fam : res.families) {
    std::vector<int> flat(base.objectCount());
    for (Obj x = 0; x < base.objectCount(); ++x) flat[x] = fam[x][0];
    r.index[flat] = static_cast<int>(r.families.size());
    r.families.push_back(std::move(flat));
  }
  return r;
}

}  // namespace catk
