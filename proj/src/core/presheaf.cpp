#include "presheaf.hpp"

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

// Union-find over 0..n-1.
struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // least member leads
    parent[b] = a;
    return true;
  }
};

void checkSameBase(const PshPtr& a, const PshPtr& b, const char* who) {
  require(a && b, std::string(who) + ": null presheaf");
  require(a->base() == b->base(), std::string(who) + ": bases differ");
}

// Pointer identity or identical tables; distinct instances of one
// construction are interchangeable.
bool samePsh(const PshPtr& a, const PshPtr& b) {
  return a == b || (a && b && pshStructurallyEqual(*a, *b));
}

}  // namespace

PshPtr Presheaf::make(CatPtr base, std::vector<std::vector<std::string>> names,
                      std::vector<std::vector<int>> act) {
  require(base != nullptr, "Presheaf: null base");
  require(static_cast<Obj>(names.size()) == base->objectCount(),
          "Presheaf: value table has wrong size");
  require(static_cast<Mor>(act.size()) == base->morphismCount(),
          "Presheaf: action table has wrong size");
  for (Mor f = 0; f < base->morphismCount(); ++f) {
    Obj a = base->source(f), b = base->target(f);
    require(act[f].size() == names[b].size(),
            "Presheaf: action of " + base->morphismName(f) + " has wrong size");
    for (int v : act[f])
      require(v >= 0 && v < static_cast<int>(names[a].size()),
              "Presheaf: action of " + base->morphismName(f) + " out of range");
  }
  auto p = std::shared_ptr<Presheaf>(new Presheaf());
  p->base_ = std::move(base);
  p->names_ = std::move(names);
  p->act_ = std::move(act);
  return p;
}

PshPtr Presheaf::make(CatPtr base, const std::vector<int>& card,
                      std::vector<std::vector<int>> act) {
  return make(std::move(base), indexNames(card), std::move(act));
}

std::uint64_t Presheaf::totalCard() const {
  std::uint64_t n = 0;
  for (const auto& v : names_) n += v.size();
  return n;
}

AuditResult Presheaf::audit(std::uint64_t budget) const {
  AuditResult res;
  for (Obj x = 0; x < base_->objectCount(); ++x) {
    ++res.checked;
    const auto& t = act_[base_->identity(x)];
    for (int e = 0; e < card(x); ++e) {
      if (t[e] != e)
        return auditFail("presheaf-identity",
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
        for (std::size_t e = 0; e < tg.size(); ++e) {
          if (tgf[e] != tf[tg[e]])
            return auditFail("presheaf-composition",
                             "(" + base_->morphismName(g) + ", " +
                                 base_->morphismName(f) + ") acts wrong",
                             res.checked);
        }
      }
    }
  }
  return res;
}

bool pshStructurallyEqual(const Presheaf& a, const Presheaf& b) {
  if (a.base() != b.base()) return false;
  for (Obj x = 0; x < a.base()->objectCount(); ++x)
    if (a.card(x) != b.card(x)) return false;
  for (Mor f = 0; f < a.base()->morphismCount(); ++f)
    if (a.act(f) != b.act(f)) return false;
  return true;
}

PshPtr rebasePsh(PshPtr x, CatPtr newBase) {
  require(x && newBase, "rebasePsh: null argument");
  require(structurallyEqual(*x->base(), *newBase),
          "rebasePsh: categories differ structurally");
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<int>> act;
  for (Obj o = 0; o < newBase->objectCount(); ++o)
    names.push_back(x->elemNames(o));
  for (Mor f = 0; f < newBase->morphismCount(); ++f) act.push_back(x->act(f));
  return Presheaf::make(std::move(newBase), std::move(names), std::move(act));
}

AuditResult PshMap::audit() const {
  AuditResult res;
  require(src && dst, "PshMap: null endpoint");
  require(src->base() == dst->base(), "PshMap: bases differ");
  const auto& base = *src->base();
  if (static_cast<Obj>(comp.size()) != base.objectCount())
    return auditFail("pshmap-shape", "component table has wrong size");
  for (Obj x = 0; x < base.objectCount(); ++x) {
    ++res.checked;
    if (static_cast<int>(comp[x].size()) != src->card(x))
      return auditFail("pshmap-shape",
                       "component at " + base.objectName(x) + " has wrong size",
                       res.checked);
    for (int v : comp[x])
      if (v < 0 || v >= dst->card(x))
        return auditFail("pshmap-shape",
                         "component at " + base.objectName(x) + " out of range",
                         res.checked);
  }
  for (Mor f = 0; f < base.morphismCount(); ++f) {
    Obj a = base.source(f), b = base.target(f);
    for (int e = 0; e < src->card(b); ++e) {
      ++res.checked;
      if (comp[a][src->apply(f, e)] != dst->apply(f, comp[b][e]))
        return auditFail("pshmap-naturality",
                         base.morphismName(f) + " at " + src->elemName(b, e),
                         res.checked);
    }
  }
  return res;
}

PshMap idPshMap(PshPtr x) {
  require(x != nullptr, "idPshMap: null presheaf");
  PshMap m;
  m.src = x;
  m.dst = x;
  m.comp.resize(x->base()->objectCount());
  for (Obj o = 0; o < x->base()->objectCount(); ++o) {
    m.comp[o].resize(x->card(o));
    std::iota(m.comp[o].begin(), m.comp[o].end(), 0);
  }
  return m;
}

PshMap composePshMaps(const PshMap& g, const PshMap& f) {
  require(samePsh(f.dst, g.src), "composePshMaps: middle presheaves differ");
  PshMap h;
  h.src = f.src;
  h.dst = g.dst;
  h.comp.resize(f.comp.size());
  for (std::size_t x = 0; x < f.comp.size(); ++x) {
    h.comp[x].reserve(f.comp[x].size());
    for (int e : f.comp[x]) h.comp[x].push_back(g.comp[x].at(e));
  }
  return h;
}

bool pshMapsEqual(const PshMap& a, const PshMap& b) {
  return pshStructurallyEqual(*a.src, *b.src) &&
         pshStructurallyEqual(*a.dst, *b.dst) && a.comp == b.comp;
}

bool isMono(const PshMap& m) {
  for (std::size_t x = 0; x < m.comp.size(); ++x) {
    std::vector<char> seen(m.dst->card(static_cast<Obj>(x)), 0);
    for (int v : m.comp[x]) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool isEpi(const PshMap& m) {
  for (std::size_t x = 0; x < m.comp.size(); ++x) {
    std::vector<char> seen(m.dst->card(static_cast<Obj>(x)), 0);
    for (int v : m.comp[x]) seen[v] = 1;
    for (char s : seen)
      if (!s) return false;
  }
  return true;
}

bool isIso(const PshMap& m) {
  for (std::size_t x = 0; x < m.comp.size(); ++x)
    if (static_cast<int>(m.comp[x].size()) != m.dst->card(static_cast<Obj>(x)))
      return false;
  return isMono(m);
}

PshMap inversePshMap(const PshMap& m) {
  require(isIso(m), "inversePshMap: not an isomorphism");
  PshMap inv;
  inv.src = m.dst;
  inv.dst = m.src;
  inv.comp.resize(m.comp.size());
  for (std::size_t x = 0; x < m.comp.size(); ++x) {
    inv.comp[x].assign(m.comp[x].size(), 0);
    for (std::size_t e = 0; e < m.comp[x].size(); ++e)
      inv.comp[x][m.comp[x][e]] = static_cast<int>(e);
  }
  return inv;
}

PshPtr terminalPsh(CatPtr base) {
  require(base != nullptr, "terminalPsh: null base");
  std::vector<std::vector<std::string>> names(base->objectCount(), {"*"});
  std::vector<std::vector<int>> act(base->morphismCount(),
                                    std::vector<int>{0});
  return Presheaf::make(std::move(base), std::move(names), std::move(act));
}

PshPtr initialPsh(CatPtr base) {
  require(base != nullptr, "initialPsh: null base");
  std::vector<std::vector<std::string>> names(base->objectCount());
  std::vector<std::vector<int>> act(base->morphismCount());
  return Presheaf::make(std::move(base), std::move(names), std::move(act));
}

PshPtr constPsh(CatPtr base, int n) {
  require(base != nullptr && n >= 0, "constPsh: bad arguments");
  std::vector<int> card(base->objectCount(), n);
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<std::vector<int>> act(base->morphismCount(), ident);
  return Presheaf::make(std::move(base), card, std::move(act));
}

PshMap toTerminal(PshPtr x, PshPtr terminal) {
  checkSameBase(x, terminal, "toTerminal");
  PshMap m;
  m.src = x;
  m.dst = terminal;
  for (Obj o = 0; o < x->base()->objectCount(); ++o)
    m.comp.emplace_back(x->card(o), 0);
  return m;
}

PshMap fromInitial(PshPtr x, PshPtr initial) {
  checkSameBase(initial, x, "fromInitial");
  PshMap m;
  m.src = initial;
  m.dst = x;
  m.comp.assign(x->base()->objectCount(), {});
  return m;
}

PshPtr representable(CatPtr base, Obj c) {
  require(base && c >= 0 && c < base->objectCount(),
          "representable: object out of range");
  std::vector<std::vector<std::string>> names(base->objectCount());
  for (Obj x = 0; x < base->objectCount(); ++x)
    for (Mor h : base->hom(x, c)) names[x].push_back(base->morphismName(h));
  std::vector<std::vector<int>> act(base->morphismCount());
  for (Mor f = 0; f < base->morphismCount(); ++f) {
    Obj b = base->target(f);
    const auto& hb = base->hom(b, c);
    act[f].reserve(hb.size());
    for (Mor h : hb) act[f].push_back(base->homPos(base->compose(h, f)));
  }
  return Presheaf::make(std::move(base), std::move(names), std::move(act));
}

PshMap yonedaMap(PshPtr x, Obj c, int e) {
  require(x != nullptr, "yonedaMap: null presheaf");
  const auto& base = *x->base();
  require(c >= 0 && c < base.objectCount() && e >= 0 && e < x->card(c),
          "yonedaMap: element out of range");
  PshMap m;
  m.src = representable(x->base(), c);
  m.dst = x;
  m.comp.resize(base.objectCount());
  for (Obj z = 0; z < base.objectCount(); ++z) {
    for (Mor h : base.hom(z, c)) m.comp[z].push_back(x->apply(h, e));
  }
  return m;
}

PshMap representableMap(PshPtr ya, Obj a, PshPtr yb, Obj b, Mor g) {
  checkSameBase(ya, yb, "representableMap");
  const auto& base = *ya->base();
  require(base.source(g) == a && base.target(g) == b,
          "representableMap: morphism endpoints mismatch");
  PshMap m;
  m.src = ya;
  m.dst = yb;
  m.comp.resize(base.objectCount());
  for (Obj z = 0; z < base.objectCount(); ++z) {
    const auto& hz = base.hom(z, a);
    require(static_cast<int>(hz.size()) == ya->card(z),
            "representableMap: source is not the representable");
    m.comp[z].reserve(hz.size());
    for (Mor h : hz) m.comp[z].push_back(base.homPos(base.compose(g, h)));
  }
  return m;
}

int ProductPsh::pairIndex(Obj x, int a, int b) const {
  return a * projRight.dst->card(x) + b;
}

std::pair<int, int> ProductPsh::parts(Obj x, int e) const {
  int cb = projRight.dst->card(x);
  return {e / cb, e % cb};
}

ProductPsh productPsh(PshPtr a, PshPtr b) {
  checkSameBase(a, b, "productPsh");
  const auto& base = *a->base();
  std::vector<std::vector<std::string>> names(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x)
    for (int i = 0; i < a->card(x); ++i)
      for (int j = 0; j < b->card(x); ++j)
        names[x].push_back("(" + a->elemName(x, i) + "," + b->elemName(x, j) +
                           ")");
  std::vector<std::vector<int>> act(base.morphismCount());
  for (Mor f = 0; f < base.morphismCount(); ++f) {
    Obj s = base.source(f), t = base.target(f);
    act[f].reserve(static_cast<std::size_t>(a->card(t)) * b->card(t));
    for (int i = 0; i < a->card(t); ++i)
      for (int j = 0; j < b->card(t); ++j)
        act[f].push_back(a->apply(f, i) * b->card(s) + b->apply(f, j));
  }
  ProductPsh p;
  p.psh = Presheaf::make(a->base(), std::move(names), std::move(act));
  p.projLeft.src = p.psh;
  p.projLeft.dst = a;
  p.projRight.src = p.psh;
  p.projRight.dst = b;
  p.projLeft.comp.resize(base.objectCount());
  p.projRight.comp.resize(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x)
    for (int i = 0; i < a->card(x); ++i)
      for (int j = 0; j < b->card(x); ++j) {
        p.projLeft.comp[x].push_back(i);
        p.projRight.comp[x].push_back(j);
      }
  return p;
}

PshMap pairingMap(const ProductPsh& p, const PshMap& f, const PshMap& g) {
  require(samePsh(f.src, g.src), "pairingMap: sources differ");
  require(samePsh(f.dst, p.projLeft.dst) && samePsh(g.dst, p.projRight.dst),
          "pairingMap: targets are not the factors");
  PshMap m;
  m.src = f.src;
  m.dst = p.psh;
  m.comp.resize(f.comp.size());
  for (std::size_t x = 0; x < f.comp.size(); ++x) {
    m.comp[x].reserve(f.comp[x].size());
    for (std::size_t e = 0; e < f.comp[x].size(); ++e)
      m.comp[x].push_back(p.pairIndex(static_cast<Obj>(x), f.comp[x][e],
                                      g.comp[x][e]));
  }
  return m;
}

std::pair<int, int> CoproductPsh::parts(Obj x, int e) const {
  int ca = injLeft.src->card(x);
  return e < ca ? std::make_pair(0, e) : std::make_pair(1, e - ca);
}

CoproductPsh coproductPsh(PshPtr a, PshPtr b) {
  checkSameBase(a, b, "coproductPsh");
  const auto& base = *a->base();
  std::vector<std::vector<std::string>> names(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x) {
    for (int i = 0; i < a->card(x); ++i)
      names[x].push_back("inl:" + a->elemName(x, i));
    for (int j = 0; j < b->card(x); ++j)
      names[x].push_back("inr:" + b->elemName(x, j));
  }
  std::vector<std::vector<int>> act(base.morphismCount());
  for (Mor f = 0; f < base.morphismCount(); ++f) {
    Obj s = base.source(f), t = base.target(f);
    act[f].reserve(a->card(t) + b->card(t));
    for (int i = 0; i < a->card(t); ++i) act[f].push_back(a->apply(f, i));
    for (int j = 0; j < b->card(t); ++j)
      act[f].push_back(a->card(s) + b->apply(f, j));
  }
  CoproductPsh c;
  c.psh = Presheaf::make(a->base(), std::move(names), std::move(act));
  c.injLeft.src = a;
  c.injLeft.dst = c.psh;
  c.injRight.src = b;
  c.injRight.dst = c.psh;
  c.injLeft.comp.resize(base.objectCount());
  c.injRight.comp.resize(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x) {
    for (int i = 0; i < a->card(x); ++i) c.injLeft.comp[x].push_back(i);
    for (int j = 0; j < b->card(x); ++j)
      c.injRight.comp[x].push_back(a->card(x) + j);
  }
  return c;
}

PshMap copairingMap(const CoproductPsh& c, const PshMap& f, const PshMap& g) {
  require(samePsh(f.dst, g.dst), "copairingMap: targets differ");
  require(samePsh(f.src, c.injLeft.src) && samePsh(g.src, c.injRight.src),
          "copairingMap: sources are not the summands");
  PshMap m;
  m.src = c.psh;
  m.dst = f.dst;
  m.comp.resize(f.comp.size());
  for (std::size_t x = 0; x < f.comp.size(); ++x) {
    m.comp[x] = f.comp[x];
    m.comp[x].insert(m.comp[x].end(), g.comp[x].begin(), g.comp[x].end());
  }
  return m;
}

int PullbackPsh::pairIndex(Obj x, int a, int b) const {
  auto it = index_.at(x).find({a, b});
  return it == index_.at(x).end() ? -1 : it->second;
}

std::pair<int, int> PullbackPsh::parts(Obj x, int e) const {
  return parts_.at(x).at(e);
}

PullbackPsh pullbackPsh(const PshMap& f, const PshMap& g) {
  require(samePsh(f.dst, g.dst), "pullbackPsh: targets differ");
  checkSameBase(f.src, g.src, "pullbackPsh");
  const auto& base = *f.src->base();
  PullbackPsh p;
  p.index_.resize(base.objectCount());
  p.parts_.resize(base.objectCount());
  std::vector<std::vector<std::string>> names(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x) {
    for (int i = 0; i < f.src->card(x); ++i)
      for (int j = 0; j < g.src->card(x); ++j) {
        if (f.comp[x][i] != g.comp[x][j]) continue;
        p.index_[x][{i, j}] = static_cast<int>(p.parts_[x].size());
        p.parts_[x].emplace_back(i, j);
        names[x].push_back("(" + f.src->elemName(x, i) + "," +
                           g.src->elemName(x, j) + ")");
      }
  }
  std::vector<std::vector<int>> act(base.morphismCount());
  for (Mor m = 0; m < base.morphismCount(); ++m) {
    Obj s = base.source(m), t = base.target(m);
    act[m].reserve(p.parts_[t].size());
    for (auto [i, j] : p.parts_[t]) {
      int e = p.pairIndex(s, f.src->apply(m, i), g.src->apply(m, j));
      require(e >= 0, "pullbackPsh: action escapes the pullback");
      act[m].push_back(e);
    }
  }
  p.psh = Presheaf::make(f.src->base(), std::move(names), std::move(act));
  p.projLeft.src = p.psh;
  p.projLeft.dst = f.src;
  p.projRight.src = p.psh;
  p.projRight.dst = g.src;
  p.projLeft.comp.resize(base.objectCount());
  p.projRight.comp.resize(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x)
    for (auto [i, j] : p.parts_[x]) {
      p.projLeft.comp[x].push_back(i);
      p.projRight.comp[x].push_back(j);
    }
  return p;
}

PshMap pullbackMediate(const PullbackPsh& p, const PshMap& u, const PshMap& v) {
  require(samePsh(u.src, v.src), "pullbackMediate: sources differ");
  require(samePsh(u.dst, p.projLeft.dst) && samePsh(v.dst, p.projRight.dst),
          "pullbackMediate: targets are not the legs");
  PshMap m;
  m.src = u.src;
  m.dst = p.psh;
  m.comp.resize(u.comp.size());
  for (std::size_t x = 0; x < u.comp.size(); ++x) {
    m.comp[x].reserve(u.comp[x].size());
    for (std::size_t e = 0; e < u.comp[x].size(); ++e) {
      int k = p.pairIndex(static_cast<Obj>(x), u.comp[x][e], v.comp[x][e]);
      require(k >= 0, "pullbackMediate: legs do not agree over the target");
      m.comp[x].push_back(k);
    }
  }
  return m;
}

PushoutPsh pushoutPsh(const PshMap& f, const PshMap& g) {
  require(samePsh(f.src, g.src), "pushoutPsh: sources differ");
  checkSameBase(f.dst, g.dst, "pushoutPsh");
  const auto& base = *f.dst->base();
  const PshPtr& A = f.dst;
  const PshPtr& B = g.dst;
  const PshPtr& C = f.src;
  // Pointwise classes of A + B under f(z) ~ g(z).
  std::vector<UF> uf;
  uf.reserve(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x) {
    uf.emplace_back(A->card(x) + B->card(x));
    for (int z = 0; z < C->card(x); ++z)
      uf[x].unite(f.comp[x][z], A->card(x) + g.comp[x][z]);
  }
  std::vector<std::vector<int>> classOf(base.objectCount());
  std::vector<std::vector<int>> reps(base.objectCount());
  std::vector<std::vector<std::string>> names(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x) {
    int n = A->card(x) + B->card(x);
    classOf[x].assign(n, -1);
    for (int e = 0; e < n; ++e) {
      int r = uf[x].find(e);
      if (classOf[x][r] == -1) {
        classOf[x][r] = static_cast<int>(reps[x].size());
        reps[x].push_back(r);
        names[x].push_back(
            "[" + (r < A->card(x) ? A->elemName(x, r)
                                  : B->elemName(x, r - A->card(x))) +
            "]");
      }
      classOf[x][e] = classOf[x][r];
    }
  }
  auto sumAct = [&](Mor m, int e) {
    Obj s = base.source(m);
    Obj t = base.target(m);
    return e < A->card(t) ? A->apply(m, e)
                          : A->card(s) + B->apply(m, e - A->card(t));
  };
  std::vector<std::vector<int>> act(base.morphismCount());
  for (Mor m = 0; m < base.morphismCount(); ++m) {
    Obj s = base.source(m), t = base.target(m);
    act[m].reserve(reps[t].size());
    for (int r : reps[t]) act[m].push_back(classOf[s][sumAct(m, r)]);
  }
  PushoutPsh p;
  p.psh = Presheaf::make(A->base(), std::move(names), std::move(act));
  p.injLeft.src = A;
  p.injLeft.dst = p.psh;
  p.injRight.src = B;
  p.injRight.dst = p.psh;
  p.injLeft.comp.resize(base.objectCount());
  p.injRight.comp.resize(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x) {
    for (int i = 0; i < A->card(x); ++i)
      p.injLeft.comp[x].push_back(classOf[x][i]);
    for (int j = 0; j < B->card(x); ++j)
      p.injRight.comp[x].push_back(classOf[x][A->card(x) + j]);
  }
  return p;
}

PshMap pushoutMediate(const PushoutPsh& p, const PshMap& u, const PshMap& v) {
  require(samePsh(u.dst, v.dst), "pushoutMediate: targets differ");
  require(samePsh(u.src, p.injLeft.src) && samePsh(v.src, p.injRight.src),
          "pushoutMediate: sources are not the summands");
  const auto& base = *p.psh->base();
  PshMap m;
  m.src = p.psh;
  m.dst = u.dst;
  m.comp.resize(base.objectCount());
  for (Obj x = 0; x < base.objectCount(); ++x) {
    m.comp[x].assign(p.psh->card(x), -1);
    auto place = [&](const PshMap& inj, const PshMap& leg, int e) {
      int cls = inj.comp[x][e];
      int val = leg.comp[x][e];
      require(m.comp[x][cls] == -1 || m.comp[x][cls] == val,
              "pushoutMediate: legs disagree on a glued class");
      m.comp[x][cls] = val;
    };
    for (int i = 0; i < u.src->card(x); ++i) place(p.injLeft, u, i);
    for (int j = 0; j < v.src->card(x); ++j) place(p.injRight, v, j);
  }
  return m;
}

namespace {

SubPsh subFromKept(PshPtr x, const std::vector<std::vector<char>>& kept) {
  const auto& base = *x->base();
  SubPsh s;
  s.elemOf.resize(base.objectCount());
  std::vector<std::vector<int>> pos(base.objectCount());
  std::vector<std::vector<std::string>> names(base.objectCount());
  for (Obj o = 0; o < base.objectCount(); ++o) {
    pos[o].assign(x->card(o), -1);
    for (int e = 0; e < x->card(o); ++e) {
      if (!kept[o][e]) continue;
      pos[o][e] = static_cast<int>(s.elemOf[o].size());
      s.elemOf[o].push_back(e);
      names[o].push_back(x->elemName(o, e));
    }
  }
  std::vector<std::vector<int>> act(base.morphismCount());
  for (Mor f = 0; f < base.morphismCount(); ++f) {
    Obj src = base.source(f), tgt = base.target(f);
    act[f].reserve(s.elemOf[tgt].size());
    for (int e : s.elemOf[tgt]) {
      int v = pos[src][x->apply(f, e)];
      require(v >= 0, "subpresheaf: kept set is not closed");
      act[f].push_back(v);
    }
  }
  s.psh = Presheaf::make(x->base(), std::move(names), std::move(act));
  s.incl.src = s.psh;
  s.incl.dst = x;
  s.incl.comp = s.elemOf;
  return s;
}

}  // namespace

SubPsh subpresheafClosure(PshPtr x,
                          const std::vector<std::vector<int>>& seeds) {
  require(x != nullptr, "subpresheafClosure: null presheaf");
  const auto& base = *x->base();
  require(static_cast<Obj>(seeds.size()) == base.objectCount(),
          "subpresheafClosure: seed table has wrong size");
  std::vector<std::vector<char>> kept(base.objectCount());
  for (Obj o = 0; o < base.objectCount(); ++o) kept[o].assign(x->card(o), 0);
  std::vector<std::pair<Obj, int>> work;
  for (Obj o = 0; o < base.objectCount(); ++o)
    for (int e : seeds[o]) {
      require(e >= 0 && e < x->card(o), "subpresheafClosure: seed out of range");
      if (!kept[o][e]) {
        kept[o][e] = 1;
        work.emplace_back(o, e);
      }
    }
  while (!work.empty()) {
    auto [o, e] = work.back();
    work.pop_back();
    for (Mor f : base.morphismsInto(o)) {
      Obj a = base.source(f);
      int v = x->apply(f, e);
      if (!kept[a][v]) {
        kept[a][v] = 1;
        work.emplace_back(a, v);
      }
    }
  }
  return subFromKept(x, kept);
}

SubPsh equalizerPsh(const PshMap& f, const PshMap& g) {
  require(f.src == g.src && f.dst == g.dst,
          "equalizerPsh: maps are not parallel");
  const auto& base = *f.src->base();
  std::vector<std::vector<char>> kept(base.objectCount());
  for (Obj o = 0; o < base.objectCount(); ++o) {
    kept[o].assign(f.src->card(o), 0);
    for (int e = 0; e < f.src->card(o); ++e)
      kept[o][e] = f.comp[o][e] == g.comp[o][e];
  }
  return subFromKept(f.src, kept);
}

QuotientPsh quotientPsh(PshPtr x,
                        const std::vector<std::array<int, 3>>& pairs) {
  require(x != nullptr, "quotientPsh: null presheaf");
  const auto& base = *x->base();
  std::vector<UF> uf;
  for (Obj o = 0; o < base.objectCount(); ++o) uf.emplace_back(x->card(o));
  for (const auto& [o, e1, e2] : pairs) {
    require(o >= 0 && o < base.objectCount() && e1 >= 0 && e1 < x->card(o) &&
                e2 >= 0 && e2 < x->card(o),
            "quotientPsh: pair out of range");
    uf[o].unite(e1, e2);
  }
  // Congruence closure: identified elements stay identified under reindexing.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mor f = 0; f < base.morphismCount(); ++f) {
      Obj s = base.source(f), t = base.target(f);
      for (int e1 = 0; e1 < x->card(t); ++e1)
        for (int e2 = e1 + 1; e2 < x->card(t); ++e2)
          if (uf[t].find(e1) == uf[t].find(e2))
            changed |= uf[s].unite(x->apply(f, e1), x->apply(f, e2));
    }
  }
  std::vector<std::vector<int>> classOf(base.objectCount());
  std::vector<std::vector<int>> reps(base.objectCount());
  std::vector<std::vector<std::string>> names(base.objectCount());
  for (Obj o = 0; o < base.objectCount(); ++o) {
    classOf[o].assign(x->card(o), -1);
    for (int e = 0; e < x->card(o); ++e) {
      int r = uf[o].find(e);
      if (classOf[o][r] == -1) {
        classOf[o][r] = static_cast<int>(reps[o].size());
        reps[o].push_back(r);
        names[o].push_back("[" + x->elemName(o, r) + "]");
      }
      classOf[o][e] = classOf[o][r];
    }
  }
  std::vector<std::vector<int>> act(base.morphismCount());
  for (Mor f = 0; f < base.morphismCount(); ++f) {
    Obj s = base.source(f), t = base.target(f);
    act[f].reserve(reps[t].size());
    for (int r : reps[t]) act[f].push_back(classOf[s][x->apply(f, r)]);
  }
  QuotientPsh q;
  q.psh = Presheaf::make(x->base(), std::move(names), std::move(act));
  q.proj.src = x;
  q.proj.dst = q.psh;
  q.proj.comp = classOf;
  return q;
}

PshMap NatHomResult::toMap(PshPtr src, PshPtr dst, std::size_t i) const {
  PshMap m;
  m.src = std::move(src);
  m.dst = std::move(dst);
  m.comp = maps.at(i);
  return m;
}

namespace {

detail::MapEnumProblem natHomProblem(const PshPtr& x, const PshPtr& y) {
  checkSameBase(x, y, "natHom");
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
    r.from = base.target(f);
    r.to = base.source(f);
    r.elemMap = x->act(f);
    r.valMap = y->act(f);
    p.rules.push_back(std::move(r));
  }
  return p;
}

}  // namespace

NatHomResult natHom(PshPtr x, PshPtr y, std::uint64_t limit, bool countOnly) {
  auto res = detail::enumerateFamilies(natHomProblem(x, y), limit, countOnly);
  NatHomResult out;
  out.maps = std::move(res.families);
  out.count = res.count;
  out.complete = res.complete;
  return out;
}

std::uint64_t natHomCount(PshPtr x, PshPtr y) {
  return detail::enumerateFamilies(natHomProblem(x, y), 0, true).count;
}

PshPi0 pshPi0(PshPtr x) {
  require(x != nullptr, "pshPi0: null presheaf");
  const auto& base = *x->base();
  std::vector<int> off(base.objectCount() + 1, 0);
  for (Obj o = 0; o < base.objectCount(); ++o) off[o + 1] = off[o] + x->card(o);
  UF uf(off.back());
  for (Mor f = 0; f < base.morphismCount(); ++f) {
    Obj s = base.source(f), t = base.target(f);
    for (int e = 0; e < x->card(t); ++e)
      uf.unite(off[t] + e, off[s] + x->apply(f, e));
  }
  PshPi0 r;
  std::vector<int> classOf(off.back(), -1);
  for (int i = 0; i < off.back(); ++i) {
    int root = uf.find(i);
    if (classOf[root] == -1) classOf[root] = r.count++;
    classOf[i] = classOf[root];
  }
  r.label.resize(base.objectCount());
  for (Obj o = 0; o < base.objectCount(); ++o)
    r.label[o].assign(classOf.begin() + off[o], classOf.begin() + off[o + 1]);
  return r;
}

int ExpPsh::indexOf(Obj b, const std::vector<std::vector<int>>& family) const {
  auto it = index_.at(b).find(family);
  require(it != index_.at(b).end(), "ExpPsh: family not present");
  return it->second;
}

ExpPsh exponentialPsh(PshPtr expnt, PshPtr target) {
  checkSameBase(expnt, target, "exponentialPsh");
  const auto& base = *expnt->base();
  ExpPsh e;
  e.expnt = expnt;
  e.target = target;
  e.prod.reserve(base.objectCount());
  e.elems.resize(base.objectCount());
  e.index_.resize(base.objectCount());
  std::vector<std::vector<std::string>> names(base.objectCount());
  for (Obj b = 0; b < base.objectCount(); ++b) {
    e.prod.push_back(productPsh(representable(expnt->base(), b), expnt));
    auto nat = natHom(e.prod[b].psh, target);
    require(nat.complete, "exponentialPsh: enumeration truncated");
    e.elems[b] = std::move(nat.maps);
    for (std::size_t k = 0; k < e.elems[b].size(); ++k) {
      e.index_[b][e.elems[b][k]] = static_cast<int>(k);
      names[b].push_back(std::to_string(k));
    }
  }
  std::vector<std::vector<int>> act(base.morphismCount());
  for (Mor f = 0; f < base.morphismCount(); ++f) {
    Obj a = base.source(f), b = base.target(f);
    act[f].reserve(e.elems[b].size());
    for (const auto& alpha : e.elems[b]) {
      // beta_z(h, u) = alpha_z(f o h, u).
      std::vector<std::vector<int>> beta(base.objectCount());
      for (Obj z = 0; z < base.objectCount(); ++z) {
        const auto& hz = base.hom(z, a);
        beta[z].reserve(hz.size() * expnt->card(z));
        for (Mor h : hz) {
          int fh = base.homPos(base.compose(f, h));
          for (int u = 0; u < expnt->card(z); ++u)
            beta[z].push_back(alpha[z][e.prod[b].pairIndex(z, fh, u)]);
        }
      }
      act[f].push_back(e.index_[a].at(beta));
    }
  }
  e.psh = Presheaf::make(expnt->base(), std::move(names), std::move(act));
  return e;
}

PshMap expPrecompose(const ExpPsh& from, const ExpPsh& to, const PshMap& g) {
  require(samePsh(g.dst, from.expnt) && samePsh(g.src, to.expnt),
          "expPrecompose: exponent map endpoints mismatch");
  require(samePsh(from.target, to.target), "expPrecompose: targets differ");
  const auto& base = *from.target->base();
  PshMap m;
  m.src = from.psh;
  m.dst = to.psh;
  m.comp.resize(base.objectCount());
  for (Obj b = 0; b < base.objectCount(); ++b) {
    m.comp[b].reserve(from.elems[b].size());
    for (const auto& alpha : from.elems[b]) {
      std::vector<std::vector<int>> beta(base.objectCount());
      for (Obj z = 0; z < base.objectCount(); ++z) {
        int nh = from.prod[b].projLeft.dst->card(z);
        beta[z].reserve(static_cast<std::size_t>(nh) * to.expnt->card(z));
        for (int h = 0; h < nh; ++h)
          for (int u = 0; u < to.expnt->card(z); ++u)
            beta[z].push_back(
                alpha[z][from.prod[b].pairIndex(z, h, g.comp[z][u])]);
      }
      m.comp[b].push_back(to.indexOf(b, beta));
    }
  }
  return m;
}

PshMap expPostcompose(const ExpPsh& from, const ExpPsh& to, const PshMap& p) {
  require(samePsh(p.src, from.target) && samePsh(p.dst, to.target),
          "expPostcompose: map endpoints mismatch");
  require(samePsh(from.expnt, to.expnt), "expPostcompose: exponents differ");
  const auto& base = *from.target->base();
  PshMap m;
  m.src = from.psh;
  m.dst = to.psh;
  m.comp.resize(base.objectCount());
  for (Obj b = 0; b < base.objectCount(); ++b) {
    m.comp[b].reserve(from.elems[b].size());
    for (const auto& alpha : from.elems[b]) {
      std::vector<std::vector<int>> beta(base.objectCount());
      for (Obj z = 0; z < base.objectCount(); ++z) {
        beta[z].reserve(alpha[z].size());
        for (int v : alpha[z]) beta[z].push_back(p.comp[z][v]);
      }
      m.comp[b].push_back(to.indexOf(b, beta));
    }
  }
  return m;
}

PshMap expUnitIso(const ExpPsh& e) {
  const auto& base = *e.target->base();
  for (Obj o = 0; o < base.objectCount(); ++o)
    require(e.expnt->card(o) == 1, "expUnitIso: exponent is not terminal");
  PshMap m;
  m.src = e.psh;
  m.dst = e.target;
  m.comp.resize(base.objectCount());
  for (Obj b = 0; b < base.objectCount(); ++b) {
    int idp = base.homPos(base.identity(b));
    m.comp[b].reserve(e.elems[b].size());
    for (const auto& alpha : e.elems[b])
      m.comp[b].push_back(alpha[b][e.prod[b].pairIndex(b, idp, 0)]);
  }
  return m;
}

SpineResult spinePsh(const DeltaCat& d, int k) {
  require(k >= 0 && k <= d.maxLevel, "spinePsh: level out of range");
  const CatPtr& base = d.cat;
  auto yk = representable(base, k);
  if (k == 0) return {yk, idPshMap(yk)};
  auto y0 = representable(base, 0);
  auto y1 = representable(base, 1);
  auto edge = [&](int i) {  // segment i of [k], as a map y[1] -> y[k]
    return representableMap(y1, 1, yk, k, d.byTuple({i - 1, i}, k));
  };
  PshPtr cur = y1;
  PshMap inc = edge(1);
  PshMap rightEnd = representableMap(y0, 0, y1, 1, d.byTuple({1}, 1));
  for (int i = 2; i <= k; ++i) {
    // Glue the left vertex of a fresh segment onto the current right end.
    PshMap left = representableMap(y0, 0, y1, 1, d.byTuple({0}, 1));
    auto po = pushoutPsh(rightEnd, left);
    PshMap nextInc = pushoutMediate(po, inc, edge(i));
    rightEnd = composePshMaps(
        po.injRight, representableMap(y0, 0, y1, 1, d.byTuple({1}, 1)));
    cur = po.psh;
    inc = nextInc;
  }
  return {cur, inc};
}

SubPsh simplexBoundary(const DeltaCat& d, int n) {
  require(n >= 0 && n <= d.maxLevel, "simplexBoundary: level out of range");
  auto yn = representable(d.cat, n);
  std::vector<std::vector<char>> kept(d.cat->objectCount());
  for (Obj z = 0; z < d.cat->objectCount(); ++z) {
    const auto& hz = d.cat->hom(z, n);
    kept[z].assign(hz.size(), 0);
    for (std::size_t i = 0; i < hz.size(); ++i) {
      std::vector<char> hit(n + 1, 0);
      for (int v : d.tuple[hz[i]]) hit[v] = 1;
      for (int v = 0; v <= n; ++v)
        if (!hit[v]) {
          kept[z][i] = 1;
          break;
        }
    }
  }
  return subFromKept(yn, kept);
}

SubPsh simplexHorn(const DeltaCat& d, int n, int i) {
  require(n >= 1 && n <= d.maxLevel && i >= 0 && i <= n,
          "simplexHorn: bad indices");
  auto yn = representable(d.cat, n);
  std::vector<std::vector<char>> kept(d.cat->objectCount());
  for (Obj z = 0; z < d.cat->objectCount(); ++z) {
    const auto& hz = d.cat->hom(z, n);
    kept[z].assign(hz.size(), 0);
    for (std::size_t p = 0; p < hz.size(); ++p) {
      std::vector<char> hit(n + 1, 0);
      for (int v : d.tuple[hz[p]]) hit[v] = 1;
      for (int v = 0; v <= n; ++v)
        if (v != i && !hit[v]) {
          kept[z][p] = 1;
          break;
        }
    }
  }
  return subFromKept(yn, kept);
}

}  // namespace catk
