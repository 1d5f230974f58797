#include "kanext.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace catk {
namespace {

bool sameBase(const CatPtr& a, const CatPtr& b) {
  return a == b || structurallyEqual(*a, *b);
}

// Contravariant values over a comma category, packaged covariantly over the
// opposite so the colimit and limit routines apply directly.
SetFunctorPtr commaDiagram(const CommaCat& cc, const PshPtr& x) {
  auto op = oppositeCat(cc.cat);
  std::vector<std::vector<std::string>> names;
  names.reserve(cc.objectData.size());
  for (const auto& [c, a] : cc.objectData) names.push_back(x->elemNames(c));
  std::vector<std::vector<int>> act;
  act.reserve(cc.morphismData.size());
  for (Mor h : cc.morphismData) act.push_back(x->act(h));
  return SetFunctor::make(std::move(op), std::move(names), std::move(act));
}

CommaCat commaBuild(const CatFunctor& F, Obj d, bool from) {
  const auto& C = *F.src;
  const auto& D = *F.dst;
  require(d >= 0 && d < D.objectCount(), "comma: object out of range");
  CommaCat r;
  CatBuilder b;
  for (Obj c = 0; c < C.objectCount(); ++c) {
    const auto& anchors = from ? D.hom(d, F.onObj(c)) : D.hom(F.onObj(c), d);
    for (Mor a : anchors) {
      b.addObject(C.objectName(c) + "|" + D.morphismName(a));
      r.objectData.push_back({c, a});
    }
  }
  std::map<std::tuple<Obj, Mor, Obj>, Mor> morIndex;
  Obj nObj = static_cast<Obj>(r.objectData.size());
  for (Obj i = 0; i < nObj; ++i) {
    auto [c1, a1] = r.objectData[i];
    for (Obj j = 0; j < nObj; ++j) {
      auto [c2, a2] = r.objectData[j];
      for (Mor h : C.hom(c1, c2)) {
        Mor need = from ? D.compose(F.onMor(h), a1) : D.compose(a2, F.onMor(h));
        if (need != (from ? a2 : a1)) continue;
        Mor m = b.addMorphism(i, j,
                              C.morphismName(h) + "|" + std::to_string(i) +
                                  ">" + std::to_string(j));
        r.morphismData.push_back(h);
        morIndex[{i, h, j}] = m;
      }
    }
  }
  for (Obj i = 0; i < nObj; ++i)
    b.setIdentity(i, morIndex.at({i, C.identity(r.objectData[i].first), i}));
  for (Mor m1 = 0; m1 < b.morphismCount(); ++m1) {
    for (Mor m2 = 0; m2 < b.morphismCount(); ++m2) {
      if (b.source(m2) != b.target(m1)) continue;
      Mor h = C.compose(r.morphismData[m2], r.morphismData[m1]);
      b.setComposite(m2, m1, morIndex.at({b.source(m1), h, b.target(m2)}));
    }
  }
  r.cat = b.build();
  r.proj.src = r.cat;
  r.proj.dst = F.src;
  for (const auto& [c, a] : r.objectData) r.proj.objMap.push_back(c);
  r.proj.morMap = r.morphismData;
  return r;
}

}  // namespace

Obj CommaCat::objectByData(Obj c, Mor anchor) const {
  auto key = std::make_pair(c, anchor);
  auto it = std::lower_bound(objectData.begin(), objectData.end(), key);
  require(it != objectData.end() && *it == key, "comma: no object (" +
                                                    std::to_string(c) + ", " +
                                                    std::to_string(anchor) +
                                                    ")");
  return static_cast<Obj>(it - objectData.begin());
}

CommaCat commaFrom(const CatFunctor& F, Obj d) { return commaBuild(F, d, true); }
CommaCat commaTo(const CatFunctor& F, Obj d) { return commaBuild(F, d, false); }

PshPtr restrictPsh(const CatFunctor& F, const PshPtr& x) {
  require(x != nullptr, "restrictPsh: null presheaf");
  require(sameBase(x->base(), F.dst), "restrictPsh: presheaf not over the target");
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<int>> act;
  names.reserve(F.src->objectCount());
  act.reserve(F.src->morphismCount());
  for (Obj c = 0; c < F.src->objectCount(); ++c)
    names.push_back(x->elemNames(F.onObj(c)));
  for (Mor f = 0; f < F.src->morphismCount(); ++f)
    act.push_back(x->act(F.onMor(f)));
  return Presheaf::make(F.src, std::move(names), std::move(act));
}

PshMap restrictOnMap(const CatFunctor& F, const PshMap& m) {
  PshMap r;
  r.src = restrictPsh(F, m.src);
  r.dst = restrictPsh(F, m.dst);
  r.comp.reserve(F.src->objectCount());
  for (Obj c = 0; c < F.src->objectCount(); ++c)
    r.comp.push_back(m.comp[F.onObj(c)]);
  return r;
}

int LanResult::classAt(Obj d, Obj c, Mor anchor, int elem) const {
  return classes[d].classOf[comma[d].objectByData(c, anchor)][elem];
}

LanResult lanExtend(const CatFunctor& F, const PshPtr& x) {
  require(x != nullptr, "lanExtend: null presheaf");
  require(sameBase(x->base(), F.src), "lanExtend: presheaf not over the source");
  const auto& D = *F.dst;
  LanResult r;
  std::vector<std::vector<std::string>> names(D.objectCount());
  for (Obj d = 0; d < D.objectCount(); ++d) {
    r.comma.push_back(commaFrom(F, d));
    r.classes.push_back(colimitSet(commaDiagram(r.comma[d], x)));
    names[d] = r.classes[d].className;
    std::vector<std::pair<Obj, int>> rep(r.classes[d].classCount, {-1, -1});
    for (Obj e = 0; e < static_cast<Obj>(r.comma[d].objectData.size()); ++e) {
      for (int v = 0; v < x->card(r.comma[d].objectData[e].first); ++v) {
        int k = r.classes[d].classOf[e][v];
        if (rep[k].first < 0) rep[k] = {e, v};
      }
    }
    r.reps.push_back(std::move(rep));
  }
  std::vector<std::vector<int>> act(D.morphismCount());
  for (Mor g = 0; g < D.morphismCount(); ++g) {
    Obj dd = D.source(g), d2 = D.target(g);
    act[g].reserve(r.classes[d2].classCount);
    for (int k = 0; k < r.classes[d2].classCount; ++k) {
      auto [e, v] = r.reps[d2][k];
      auto [c, a] = r.comma[d2].objectData[e];
      act[g].push_back(r.classAt(dd, c, D.compose(a, g), v));
    }
  }
  r.psh = Presheaf::make(F.dst, std::move(names), std::move(act));
  return r;
}

PshMap lanOnMap(const CatFunctor& F, const PshMap& m) {
  LanResult a = lanExtend(F, m.src);
  LanResult b = lanExtend(F, m.dst);
  PshMap out;
  out.src = a.psh;
  out.dst = b.psh;
  out.comp.resize(F.dst->objectCount());
  for (Obj d = 0; d < F.dst->objectCount(); ++d) {
    out.comp[d].reserve(a.classes[d].classCount);
    for (int k = 0; k < a.classes[d].classCount; ++k) {
      auto [e, v] = a.reps[d][k];
      auto [c, anchor] = a.comma[d].objectData[e];
      out.comp[d].push_back(b.classAt(d, c, anchor, m.comp[c][v]));
    }
  }
  return out;
}

PshMap lanUnit(const CatFunctor& F, const PshPtr& x) {
  LanResult lan = lanExtend(F, x);
  PshMap m;
  m.src = x;
  m.dst = restrictPsh(F, lan.psh);
  m.comp.resize(F.src->objectCount());
  for (Obj c = 0; c < F.src->objectCount(); ++c) {
    Obj fc = F.onObj(c);
    m.comp[c].reserve(x->card(c));
    for (int v = 0; v < x->card(c); ++v)
      m.comp[c].push_back(lan.classAt(fc, c, F.dst->identity(fc), v));
  }
  return m;
}

PshMap lanCounit(const CatFunctor& F, const PshPtr& y) {
  require(y != nullptr, "lanCounit: null presheaf");
  require(sameBase(y->base(), F.dst), "lanCounit: presheaf not over the target");
  LanResult lan = lanExtend(F, restrictPsh(F, y));
  PshMap m;
  m.src = lan.psh;
  m.dst = y;
  m.comp.resize(F.dst->objectCount());
  for (Obj d = 0; d < F.dst->objectCount(); ++d) {
    m.comp[d].reserve(lan.classes[d].classCount);
    for (int k = 0; k < lan.classes[d].classCount; ++k) {
      auto [e, v] = lan.reps[d][k];
      auto [c, a] = lan.comma[d].objectData[e];
      m.comp[d].push_back(y->apply(a, v));
    }
  }
  return m;
}

int RanResult::familyAt(Obj d, const std::vector<int>& family) const {
  return lims[d].indexOf(family);
}

RanResult ranExtend(const CatFunctor& F, const PshPtr& x) {
  require(x != nullptr, "ranExtend: null presheaf");
  require(sameBase(x->base(), F.src), "ranExtend: presheaf not over the source");
  const auto& D = *F.dst;
  RanResult r;
  std::vector<std::vector<std::string>> names(D.objectCount());
  for (Obj d = 0; d < D.objectCount(); ++d) {
    r.comma.push_back(commaTo(F, d));
    r.lims.push_back(limitSet(commaDiagram(r.comma[d], x)));
    for (const auto& fam : r.lims[d].families) {
      std::string n = "(";
      for (std::size_t e = 0; e < fam.size(); ++e) {
        if (e) n += ",";
        n += x->elemName(r.comma[d].objectData[e].first, fam[e]);
      }
      names[d].push_back(n + ")");
    }
  }
  std::vector<std::vector<int>> act(D.morphismCount());
  for (Mor g = 0; g < D.morphismCount(); ++g) {
    Obj dd = D.source(g), d2 = D.target(g);
    Obj nSlots = static_cast<Obj>(r.comma[dd].objectData.size());
    act[g].reserve(r.lims[d2].families.size());
    for (const auto& fam : r.lims[d2].families) {
      std::vector<int> s(nSlots);
      for (Obj e = 0; e < nSlots; ++e) {
        auto [c, anchor] = r.comma[dd].objectData[e];
        s[e] = fam[r.comma[d2].objectByData(c, D.compose(g, anchor))];
      }
      act[g].push_back(r.lims[dd].indexOf(s));
    }
  }
  r.psh = Presheaf::make(F.dst, std::move(names), std::move(act));
  return r;
}

PshMap ranOnMap(const CatFunctor& F, const PshMap& m) {
  RanResult a = ranExtend(F, m.src);
  RanResult b = ranExtend(F, m.dst);
  PshMap out;
  out.src = a.psh;
  out.dst = b.psh;
  out.comp.resize(F.dst->objectCount());
  for (Obj d = 0; d < F.dst->objectCount(); ++d) {
    for (const auto& fam : a.lims[d].families) {
      std::vector<int> t(fam.size());
      for (std::size_t e = 0; e < fam.size(); ++e)
        t[e] = m.comp[a.comma[d].objectData[e].first][fam[e]];
      out.comp[d].push_back(b.lims[d].indexOf(t));
    }
  }
  return out;
}

PshMap ranUnit(const CatFunctor& F, const PshPtr& y) {
  require(y != nullptr, "ranUnit: null presheaf");
  require(sameBase(y->base(), F.dst), "ranUnit: presheaf not over the target");
  RanResult ran = ranExtend(F, restrictPsh(F, y));
  PshMap m;
  m.src = y;
  m.dst = ran.psh;
  m.comp.resize(F.dst->objectCount());
  for (Obj d = 0; d < F.dst->objectCount(); ++d) {
    Obj nSlots = static_cast<Obj>(ran.comma[d].objectData.size());
    m.comp[d].reserve(y->card(d));
    for (int v = 0; v < y->card(d); ++v) {
      std::vector<int> fam(nSlots);
      for (Obj e = 0; e < nSlots; ++e)
        fam[e] = y->apply(ran.comma[d].objectData[e].second, v);
      m.comp[d].push_back(ran.lims[d].indexOf(fam));
    }
  }
  return m;
}

PshMap ranCounit(const CatFunctor& F, const PshPtr& x) {
  RanResult ran = ranExtend(F, x);
  PshMap m;
  m.src = restrictPsh(F, ran.psh);
  m.dst = x;
  m.comp.resize(F.src->objectCount());
  for (Obj c = 0; c < F.src->objectCount(); ++c) {
    Obj fc = F.onObj(c);
    Obj slot = ran.comma[fc].objectByData(c, F.dst->identity(fc));
    for (const auto& fam : ran.lims[fc].families)
      m.comp[c].push_back(fam[slot]);
  }
  return m;
}

int NerveResult::chainIndex(int level, Obj start,
                            const std::vector<Mor>& arrows) const {
  auto it = index[level].find({start, arrows});
  require(it != index[level].end(), "nerve: no such chain");
  return it->second;
}

NerveResult catNerve(const CatPtr& c, const DeltaCat& delta) {
  require(c != nullptr, "catNerve: null category");
  int N = delta.maxLevel;
  NerveResult r;
  r.starts.resize(N + 1);
  r.chains.resize(N + 1);
  r.index.resize(N + 1);
  std::vector<std::vector<std::string>> names(N + 1);
  for (Obj x = 0; x < c->objectCount(); ++x) {
    r.index[0][{x, {}}] = static_cast<int>(r.chains[0].size());
    r.starts[0].push_back(x);
    r.chains[0].push_back({});
    names[0].push_back(c->objectName(x));
  }
  for (int n = 1; n <= N; ++n) {
    for (std::size_t i = 0; i < r.chains[n - 1].size(); ++i) {
      Obj last = r.chains[n - 1][i].empty()
                     ? r.starts[n - 1][i]
                     : c->target(r.chains[n - 1][i].back());
      for (Mor u : c->morphismsFrom(last)) {
        auto ch = r.chains[n - 1][i];
        ch.push_back(u);
        r.index[n][{r.starts[n - 1][i], ch}] =
            static_cast<int>(r.chains[n].size());
        std::string nm = n == 1 ? c->morphismName(u)
                                : names[n - 1][i] + "*" + c->morphismName(u);
        r.starts[n].push_back(r.starts[n - 1][i]);
        r.chains[n].push_back(std::move(ch));
        names[n].push_back(std::move(nm));
      }
    }
  }
  std::vector<std::vector<int>> act(delta.cat->morphismCount());
  for (Mor f = 0; f < delta.cat->morphismCount(); ++f) {
    int m = delta.cat->source(f);
    int n = delta.cat->target(f);
    const auto& t = delta.tuple[f];
    act[f].reserve(r.chains[n].size());
    for (std::size_t i = 0; i < r.chains[n].size(); ++i) {
      const auto& ch = r.chains[n][i];
      std::vector<Obj> stop(n + 1);
      stop[0] = r.starts[n][i];
      for (int p = 1; p <= n; ++p) stop[p] = c->target(ch[p - 1]);
      std::vector<Mor> out(m);
      for (int j = 1; j <= m; ++j) {
        Mor acc = c->identity(stop[t[j - 1]]);
        for (int p = t[j - 1] + 1; p <= t[j]; ++p)
          acc = c->compose(ch[p - 1], acc);
        out[j - 1] = acc;
      }
      act[f].push_back(r.chainIndex(m, stop[t[0]], out));
    }
  }
  r.psh = Presheaf::make(delta.cat, std::move(names), std::move(act));
  return r;
}

Obj ElementsCat::objectByData(Obj a, int elem) const {
  return offset[a] + elem;
}

ElementsCat elementsCat(const PshPtr& x) {
  require(x != nullptr, "elementsCat: null presheaf");
  const auto& B = *x->base();
  ElementsCat r;
  r.offset.assign(B.objectCount() + 1, 0);
  CatBuilder b;
  for (Obj a = 0; a < B.objectCount(); ++a) {
    r.offset[a + 1] = r.offset[a] + x->card(a);
    for (int e = 0; e < x->card(a); ++e) {
      b.addObject(B.objectName(a) + ":" + x->elemName(a, e));
      r.objectData.push_back({a, e});
    }
  }
  std::map<std::pair<Mor, int>, Mor> morIndex;
  std::vector<std::pair<Mor, int>> morData;
  for (Mor u = 0; u < B.morphismCount(); ++u) {
    Obj s = B.source(u), t = B.target(u);
    for (int e2 = 0; e2 < x->card(t); ++e2) {
      Mor m = b.addMorphism(r.offset[s] + x->apply(u, e2), r.offset[t] + e2,
                            B.morphismName(u) + ":" + x->elemName(t, e2));
      morIndex[{u, e2}] = m;
      morData.push_back({u, e2});
    }
  }
  for (Obj i = 0; i < static_cast<Obj>(r.objectData.size()); ++i) {
    auto [a, e] = r.objectData[i];
    b.setIdentity(i, morIndex.at({B.identity(a), e}));
  }
  for (Mor m1 = 0; m1 < b.morphismCount(); ++m1) {
    for (Mor m2 = 0; m2 < b.morphismCount(); ++m2) {
      if (b.source(m2) != b.target(m1)) continue;
      Mor u = B.compose(morData[m2].first, morData[m1].first);
      b.setComposite(m2, m1, morIndex.at({u, morData[m2].second}));
    }
  }
  r.cat = b.build();
  r.proj.src = r.cat;
  r.proj.dst = x->base();
  for (const auto& [a, e] : r.objectData) r.proj.objMap.push_back(a);
  for (const auto& [u, e] : morData) r.proj.morMap.push_back(u);
  return r;
}

RealizeResult realize(const PshPtr& x, const DeltaCat& delta) {
  RealizeResult r;
  r.elements = elementsCat(x);
  r.nerve = catNerve(r.elements.cat, delta);
  r.pi0 = pshPi0(r.nerve.psh);
  return r;
}

ProductBase productBase(CatPtr inner, int maxLevel) {
  require(inner != nullptr, "productBase: null category");
  ProductBase b;
  b.inner = std::move(inner);
  b.delta = deltaTruncated(maxLevel);
  b.prod = productCat(b.inner, b.delta.cat);
  return b;
}

CatFunctor underlyingInclusion(const ProductBase& b, Obj d) {
  require(d >= 0 && d < b.inner->objectCount(),
          "underlyingInclusion: object out of range");
  CatFunctor F;
  F.src = b.delta.cat;
  F.dst = b.prod.cat;
  for (Obj n = 0; n < b.delta.cat->objectCount(); ++n)
    F.objMap.push_back(b.prod.pairObj(d, n));
  for (Mor a = 0; a < b.delta.cat->morphismCount(); ++a)
    F.morMap.push_back(b.prod.pairMor(b.inner->identity(d), a));
  return F;
}

CatFunctor valueInclusion(const ProductBase& b, int k) {
  require(k >= 0 && k <= b.delta.maxLevel,
          "valueInclusion: level out of range");
  CatFunctor F;
  F.src = b.inner;
  F.dst = b.prod.cat;
  for (Obj c = 0; c < b.inner->objectCount(); ++c)
    F.objMap.push_back(b.prod.pairObj(c, k));
  for (Mor u = 0; u < b.inner->morphismCount(); ++u)
    F.morMap.push_back(b.prod.pairMor(u, b.delta.cat->identity(k)));
  return F;
}

CatFunctor deltaReversal(const DeltaCat& d) {
  CatFunctor F;
  F.src = d.cat;
  F.dst = d.cat;
  for (Obj n = 0; n < d.cat->objectCount(); ++n) F.objMap.push_back(n);
  for (Mor m = 0; m < d.cat->morphismCount(); ++m) {
    int tgt = d.cat->target(m);
    const auto& t = d.tuple[m];
    std::vector<int> rt(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      rt[i] = tgt - t[t.size() - 1 - i];
    F.morMap.push_back(d.byTuple(rt, tgt));
  }
  return F;
}

CatFunctor productReversal(const ProductBase& b) {
  CatFunctor rev = deltaReversal(b.delta);
  CatFunctor F;
  F.src = b.prod.cat;
  F.dst = b.prod.cat;
  for (Obj o = 0; o < b.prod.cat->objectCount(); ++o) F.objMap.push_back(o);
  for (Mor m = 0; m < b.prod.cat->morphismCount(); ++m) {
    auto [u, a] = b.prod.morParts(m);
    F.morMap.push_back(b.prod.pairMor(u, rev.onMor(a)));
  }
  return F;
}

PshPtr underlyingPsh(const ProductBase& b, Obj d, const PshPtr& x) {
  return restrictPsh(underlyingInclusion(b, d), x);
}

PshPtr discretePsh(const ProductBase& b, const PshPtr& xOverDelta) {
  return restrictPsh(b.prod.projRight, xOverDelta);
}

PshPtr valuePsh(const ProductBase& b, int k, const PshPtr& x) {
  return restrictPsh(valueInclusion(b, k), x);
}

LanResult valueEmbedding(const ProductBase& b, const PshPtr& xOverInner) {
  return lanExtend(valueInclusion(b, 0), xOverInner);
}

PshPtr opPsh(const ProductBase& b, const PshPtr& x) {
  return restrictPsh(productReversal(b), x);
}

DiagonalBase diagonalBase(const ProductBase& b) {
  DiagonalBase db;
  db.base2 = b;
  db.prod3 = productCat(b.prod.cat, b.delta.cat);
  db.diag.src = b.prod.cat;
  db.diag.dst = db.prod3.cat;
  db.levelZero.src = b.prod.cat;
  db.levelZero.dst = db.prod3.cat;
  for (Obj o = 0; o < b.prod.cat->objectCount(); ++o) {
    auto [d, k] = b.prod.objParts(o);
    db.diag.objMap.push_back(db.prod3.pairObj(o, k));
    db.levelZero.objMap.push_back(
        db.prod3.pairObj(b.prod.pairObj(d, 0), k));
  }
  for (Mor m = 0; m < b.prod.cat->morphismCount(); ++m) {
    auto [u, a] = b.prod.morParts(m);
    db.diag.morMap.push_back(db.prod3.pairMor(m, a));
    db.levelZero.morMap.push_back(db.prod3.pairMor(
        b.prod.pairMor(u, b.delta.cat->identity(0)), a));
  }
  return db;
}

PshPtr diagonalRestrict(const DiagonalBase& db, const PshPtr& x) {
  return restrictPsh(db.diag, x);
}

RanResult diagonalRan(const DiagonalBase& db, const PshPtr& x) {
  return ranExtend(db.diag, x);
}

LanResult levelZeroEmbedding(const DiagonalBase& db, const PshPtr& x) {
  return lanExtend(db.levelZero, x);
}

}  // namespace catk
