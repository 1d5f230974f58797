#include <map>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "fincat.hpp"
#include "kanext.hpp"
#include "presheaf.hpp"

using namespace catk;

namespace {

CatPtr walkingArrow() {
  CatBuilder b;
  Obj a = b.addObject("a");
  Obj bb = b.addObject("b");
  Mor ida = b.addMorphism(a, a, "id_a");
  Mor idb = b.addMorphism(bb, bb, "id_b");
  Mor f = b.addMorphism(a, bb, "f");
  b.setIdentity(a, ida);
  b.setIdentity(bb, idb);
  b.setComposite(ida, ida, ida);
  b.setComposite(idb, idb, idb);
  b.setComposite(f, ida, f);
  b.setComposite(idb, f, f);
  return b.build();
}

CatPtr oneObject() {
  CatBuilder b;
  Obj o = b.addObject("*");
  Mor id = b.addMorphism(o, o, "id");
  b.setIdentity(o, id);
  b.setComposite(id, id, id);
  return b.build();
}

// a -> [0], b -> [1], the arrow -> vertex 1.
CatFunctor arrowToDelta(const CatPtr& w, const DeltaCat& d) {
  CatFunctor F;
  F.src = w;
  F.dst = d.cat;
  F.objMap = {0, 1};
  F.morMap = {d.cat->identity(0), d.cat->identity(1), d.byTuple({1}, 1)};
  return F;
}

CatFunctor collapseArrow(const CatPtr& w, const CatPtr& one) {
  CatFunctor F;
  F.src = w;
  F.dst = one;
  F.objMap = {0, 0};
  F.morMap = {0, 0, 0};
  return F;
}

// Two elements at each object; the arrow folds both upper elements onto the
// first lower one.
PshPtr twoTwoPsh(const CatPtr& w) {
  return Presheaf::make(w, {2, 2}, {{0, 1}, {0, 1}, {0, 0}});
}

int chainCount(const NerveResult& nv, int level) {
  return static_cast<int>(nv.chains[level].size());
}

}  // namespace

TEST_CASE("comma categories over the identity match slices") {
  auto d = deltaTruncated(2);
  auto id = identityFunctor(d.cat);
  auto over = commaTo(id, 1);
  auto slice = sliceCoslice(d.cat, 1, SliceDirection::kOver);
  CHECK(over.cat->objectCount() == slice.cat->objectCount());
  CHECK(over.cat->morphismCount() == slice.cat->morphismCount());
  CHECK(over.cat->audit().ok());
  CHECK(over.proj.audit().ok());
  auto under = commaFrom(id, 1);
  auto coslice = sliceCoslice(d.cat, 1, SliceDirection::kUnder);
  CHECK(under.cat->objectCount() == coslice.cat->objectCount());
  CHECK(under.cat->morphismCount() == coslice.cat->morphismCount());
  CHECK(under.cat->audit().ok());
  CHECK(under.proj.audit().ok());
  for (Obj e = 0; e < over.cat->objectCount(); ++e) {
    auto [c, anchor] = over.objectData[e];
    CHECK(over.objectByData(c, anchor) == e);
  }
}

TEST_CASE("comma categories along a point pick out hom sets") {
  auto w = walkingArrow();
  auto d = deltaTruncated(2);
  auto F = arrowToDelta(w, d);
  CHECK(F.audit().ok());
  auto cc = commaFrom(F, 2);
  int expected = 0;
  for (Obj c = 0; c < w->objectCount(); ++c)
    expected += static_cast<int>(d.cat->hom(2, F.onObj(c)).size());
  CHECK(cc.cat->objectCount() == expected);
  CHECK(cc.cat->audit().ok());
  CHECK(cc.proj.audit().ok());
  auto tc = commaTo(F, 2);
  CHECK(tc.cat->audit().ok());
  CHECK(tc.proj.audit().ok());
}

TEST_CASE("restriction along the identity returns the input") {
  auto d = deltaTruncated(2);
  auto id = identityFunctor(d.cat);
  auto sp = spinePsh(d, 2);
  auto r = restrictPsh(id, sp.psh);
  CHECK(pshStructurallyEqual(*r, *sp.psh));
  auto rm = restrictOnMap(id, sp.inclusion);
  CHECK(pshMapsEqual(rm, sp.inclusion));
}

TEST_CASE("extensions along the identity return the input") {
  auto d = deltaTruncated(2);
  auto id = identityFunctor(d.cat);
  auto sp = spinePsh(d, 2).psh;
  auto lan = lanExtend(id, sp);
  CHECK(pshStructurallyEqual(*lan.psh, *sp));
  auto ran = ranExtend(id, sp);
  CHECK(pshStructurallyEqual(*ran.psh, *sp));
  auto y1 = representable(d.cat, 1);
  CHECK(pshStructurallyEqual(*lanExtend(id, y1).psh, *y1));
  CHECK(pshStructurallyEqual(*ranExtend(id, y1).psh, *y1));
}

TEST_CASE("left extension of a representable is the image representable") {
  auto w = walkingArrow();
  auto d = deltaTruncated(2);
  auto F = arrowToDelta(w, d);
  for (Obj c = 0; c < w->objectCount(); ++c) {
    auto lan = lanExtend(F, representable(w, c));
    auto target = representable(d.cat, F.onObj(c));
    CHECK(lan.psh->audit().ok());
    for (Obj dd = 0; dd < d.cat->objectCount(); ++dd)
      CHECK(lan.psh->card(dd) == target->card(dd));
    PshMap iso;
    iso.src = lan.psh;
    iso.dst = target;
    iso.comp.resize(d.cat->objectCount());
    for (Obj dd = 0; dd < d.cat->objectCount(); ++dd) {
      for (int k = 0; k < lan.classes[dd].classCount; ++k) {
        auto [e, v] = lan.reps[dd][k];
        auto [cc, anchor] = lan.comma[dd].objectData[e];
        Mor u = w->hom(cc, c)[v];
        iso.comp[dd].push_back(
            d.cat->homPos(d.cat->compose(F.onMor(u), anchor)));
      }
    }
    CHECK(iso.audit().ok());
    CHECK(isIso(iso));
  }
}

TEST_CASE("extension hom counts match restriction hom counts") {
  auto w = walkingArrow();
  auto d = deltaTruncated(2);
  auto F = arrowToDelta(w, d);
  auto X = twoTwoPsh(w);
  for (const auto& Y : {spinePsh(d, 2).psh, representable(d.cat, 2)}) {
    CHECK(natHomCount(lanExtend(F, X).psh, Y) ==
          natHomCount(X, restrictPsh(F, Y)));
    CHECK(natHomCount(restrictPsh(F, Y), X) ==
          natHomCount(Y, ranExtend(F, X).psh));
  }
  auto one = oneObject();
  auto q = collapseArrow(w, one);
  auto Z = constPsh(one, 3);
  CHECK(natHomCount(lanExtend(q, X).psh, Z) ==
        natHomCount(X, restrictPsh(q, Z)));
  CHECK(natHomCount(restrictPsh(q, Z), X) ==
        natHomCount(Z, ranExtend(q, X).psh));
}

TEST_CASE("unit and counit are natural") {
  auto w = walkingArrow();
  auto d = deltaTruncated(2);
  auto F = arrowToDelta(w, d);
  auto X = twoTwoPsh(w);
  auto Y = spinePsh(d, 2).psh;
  CHECK(lanUnit(F, X).audit().ok());
  CHECK(lanCounit(F, Y).audit().ok());
  CHECK(ranUnit(F, Y).audit().ok());
  CHECK(ranCounit(F, X).audit().ok());
  CHECK(lanOnMap(F, idPshMap(X)).audit().ok());
  CHECK(pshMapsEqual(lanOnMap(F, idPshMap(X)),
                     idPshMap(lanExtend(F, X).psh)));
  CHECK(pshMapsEqual(ranOnMap(F, idPshMap(X)),
                     idPshMap(ranExtend(F, X).psh)));
}

TEST_CASE("triangle identities hold") {
  auto check = [](const CatFunctor& F, const PshPtr& X, const PshPtr& Y) {
    auto rY = restrictPsh(F, Y);
    PshMap t1 =
        composePshMaps(restrictOnMap(F, lanCounit(F, Y)), lanUnit(F, rY));
    CHECK(pshMapsEqual(t1, idPshMap(rY)));
    auto lan = lanExtend(F, X);
    PshMap t2 =
        composePshMaps(lanCounit(F, lan.psh), lanOnMap(F, lanUnit(F, X)));
    CHECK(pshMapsEqual(t2, idPshMap(lan.psh)));
    PshMap t3 =
        composePshMaps(ranCounit(F, rY), restrictOnMap(F, ranUnit(F, Y)));
    CHECK(pshMapsEqual(t3, idPshMap(rY)));
    auto ran = ranExtend(F, X);
    PshMap t4 =
        composePshMaps(ranOnMap(F, ranCounit(F, X)), ranUnit(F, ran.psh));
    CHECK(pshMapsEqual(t4, idPshMap(ran.psh)));
  };
  auto w = walkingArrow();
  auto d = deltaTruncated(2);
  check(arrowToDelta(w, d), twoTwoPsh(w), spinePsh(d, 2).psh);
  auto one = oneObject();
  check(collapseArrow(w, one), twoTwoPsh(w), constPsh(one, 3));
}

TEST_CASE("extensions along a collapse take the end values") {
  auto w = walkingArrow();
  auto one = oneObject();
  auto q = collapseArrow(w, one);
  auto X = twoTwoPsh(w);
  auto lan = lanExtend(q, X);
  CHECK(lan.psh->card(0) == 2);
  CHECK(lan.classAt(0, 0, 0, 0) == 0);
  CHECK(lan.classAt(0, 0, 0, 1) == 1);
  CHECK(lan.classAt(0, 1, 0, 0) == 0);
  CHECK(lan.classAt(0, 1, 0, 1) == 0);
  auto ran = ranExtend(q, X);
  CHECK(ran.psh->card(0) == 2);
  CHECK(ran.lims[0].families.size() == 2);
}

TEST_CASE("nerve of a category lists composable chains") {
  auto w = walkingArrow();
  auto d = deltaTruncated(2);
  auto nv = catNerve(w, d);
  CHECK(nv.psh->card(0) == 2);
  CHECK(nv.psh->card(1) == 3);
  CHECK(nv.psh->card(2) == 4);
  CHECK(nv.psh->audit().ok());
  Mor f = 2;
  int pair = nv.chainIndex(2, 0, {w->identity(0), f});
  Mor composite = d.byTuple({0, 2}, 2);
  CHECK(nv.psh->apply(composite, pair) == nv.chainIndex(1, 0, {f}));
  Mor firstLeg = d.byTuple({0, 1}, 2);
  CHECK(nv.psh->apply(firstLeg, pair) == nv.chainIndex(1, 0, {w->identity(0)}));
  Mor vertex = d.byTuple({2}, 2);
  CHECK(nv.psh->apply(vertex, pair) == nv.chainIndex(0, 1, {}));
  auto d3 = deltaTruncated(3);
  CHECK(catNerve(w, d3).psh->card(3) == 5);
}

TEST_CASE("category of elements and realization") {
  auto w = walkingArrow();
  auto d = deltaTruncated(2);
  auto yb = representable(w, 1);
  auto el = elementsCat(yb);
  CHECK(el.cat->objectCount() == 2);
  CHECK(el.cat->morphismCount() == 3);
  CHECK(el.cat->audit().ok());
  CHECK(el.proj.audit().ok());
  auto re = realize(yb, d);
  auto slice = sliceCoslice(w, 1, SliceDirection::kOver);
  auto sliceNerve = catNerve(slice.cat, d);
  for (Obj n = 0; n <= 2; ++n)
    CHECK(re.nerve.psh->card(n) == sliceNerve.psh->card(n));
  CHECK(re.pi0.count == 1);
  auto X = twoTwoPsh(w);
  CHECK(realize(X, d).pi0.count == pshPi0(X).count);
  auto none = realize(initialPsh(w), d);
  for (Obj n = 0; n <= 2; ++n) CHECK(none.nerve.psh->card(n) == 0);
}

TEST_CASE("realization classes match a direct gluing construction") {
  auto w = walkingArrow();
  auto d = deltaTruncated(2);
  for (const auto& X : {representable(w, 1), twoTwoPsh(w)}) {
    auto re = realize(X, d);
    std::vector<SliceResult> slices;
    std::vector<NerveResult> nerves;
    std::vector<std::map<Mor, Obj>> byAnchor(w->objectCount());
    for (Obj dd = 0; dd < w->objectCount(); ++dd) {
      slices.push_back(sliceCoslice(w, dd, SliceDirection::kOver));
      nerves.push_back(catNerve(slices[dd].cat, d));
      for (Obj s = 0; s < slices[dd].cat->objectCount(); ++s)
        byAnchor[dd][slices[dd].objectAnchor[s]] = s;
    }
    // Pushing a chain of triangles over dd forward along u: dd -> d2.
    auto pushChain = [&](Mor u, int level, Obj dd, int chain) {
      Obj d2 = w->target(u);
      const auto& from = slices[dd];
      const auto& to = slices[d2];
      auto mapObj = [&](Obj s) {
        return byAnchor[d2].at(w->compose(u, from.objectAnchor[s]));
      };
      Obj start = mapObj(nerves[dd].starts[level][chain]);
      std::vector<Mor> arrows;
      Obj at = nerves[dd].starts[level][chain];
      for (Mor m : nerves[dd].chains[level][chain]) {
        Mor h = from.projection.onMor(m);
        Obj s2 = from.cat->target(m);
        Mor image = kNoMor;
        for (Mor cand : to.cat->hom(mapObj(at), mapObj(s2)))
          if (to.projection.onMor(cand) == h) image = cand;
        REQUIRE(image != kNoMor);
        arrows.push_back(image);
        at = s2;
      }
      return nerves[d2].chainIndex(level, start, arrows);
    };
    for (int level = 0; level <= 2; ++level) {
      std::vector<int> base(w->objectCount() + 1, 0);
      for (Obj dd = 0; dd < w->objectCount(); ++dd)
        base[dd + 1] = base[dd] + X->card(dd) * chainCount(nerves[dd], level);
      std::vector<int> parent(base[w->objectCount()]);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
      };
      auto slot = [&](Obj dd, int x, int chain) {
        return base[dd] + x * chainCount(nerves[dd], level) + chain;
      };
      for (Mor u = 0; u < w->morphismCount(); ++u) {
        Obj dd = w->source(u), d2 = w->target(u);
        for (int x2 = 0; x2 < X->card(d2); ++x2) {
          for (int c = 0; c < chainCount(nerves[dd], level); ++c) {
            int i = find(slot(dd, X->apply(u, x2), c));
            int j = find(slot(d2, x2, pushChain(u, level, dd, c)));
            if (i != j) parent[i] = j;
          }
        }
      }
      int classes = 0;
      for (int i = 0; i < base[w->objectCount()]; ++i)
        if (find(i) == i) ++classes;
      CHECK(classes == re.nerve.psh->card(level));
    }
  }
}

TEST_CASE("product base embeddings and reversal") {
  auto w = walkingArrow();
  auto b = productBase(w, 2);
  CHECK(b.prod.cat->objectCount() == 6);
  for (Obj dd = 0; dd < 2; ++dd) CHECK(underlyingInclusion(b, dd).audit().ok());
  for (int k = 0; k <= 2; ++k) CHECK(valueInclusion(b, k).audit().ok());
  auto rev = deltaReversal(b.delta);
  CHECK(rev.audit().ok());
  CHECK(functorsEqual(composeFunctors(rev, rev), identityFunctor(b.delta.cat)));
  auto prev = productReversal(b);
  CHECK(prev.audit().ok());
  CHECK(functorsEqual(composeFunctors(prev, prev),
                      identityFunctor(b.prod.cat)));
  auto x = representable(b.prod.cat, b.prod.pairObj(1, 1));
  auto ua = underlyingPsh(b, 0, x);
  auto ub = underlyingPsh(b, 1, x);
  for (int l = 0; l <= 2; ++l) {
    CHECK(ua->card(l) ==
          static_cast<int>(b.delta.cat->hom(l, 1).size()));
    CHECK(ub->card(l) ==
          static_cast<int>(b.delta.cat->hom(l, 1).size()));
  }
  auto op = opPsh(b, x);
  CHECK(op->audit().ok());
  CHECK(pshStructurallyEqual(*opPsh(b, op), *x));
  auto disc = discretePsh(b, representable(b.delta.cat, 1));
  for (Obj dd = 0; dd < 2; ++dd)
    for (int l = 0; l <= 2; ++l)
      CHECK(disc->card(b.prod.pairObj(dd, l)) ==
            static_cast<int>(b.delta.cat->hom(l, 1).size()));
}

TEST_CASE("value embedding is inverse to the zero level") {
  auto w = walkingArrow();
  auto b = productBase(w, 2);
  auto X = twoTwoPsh(w);
  auto emb = valueEmbedding(b, X);
  CHECK(emb.psh->audit().ok());
  CHECK(pshStructurallyEqual(*valuePsh(b, 0, emb.psh), *X));
  CHECK(pshStructurallyEqual(*emb.psh, *restrictPsh(b.prod.projLeft, X)));
}

TEST_CASE("level zero embedding restricts along the diagonal to the input") {
  auto w = walkingArrow();
  auto b = productBase(w, 1);
  auto db = diagonalBase(b);
  CHECK(db.diag.audit().ok());
  CHECK(db.levelZero.audit().ok());
  auto rep = representable(b.prod.cat, b.prod.pairObj(1, 1));
  auto pair = coproductPsh(rep, representable(b.prod.cat, b.prod.pairObj(0, 1)));
  for (const auto& A : {rep, terminalPsh(b.prod.cat), pair.psh}) {
    auto emb = levelZeroEmbedding(db, A);
    CHECK(emb.psh->audit().ok());
    CHECK(pshStructurallyEqual(*diagonalRestrict(db, emb.psh), *A));
  }
}

TEST_CASE("diagonal right extension keeps constants on the diagonal") {
  auto w = walkingArrow();
  auto b = productBase(w, 1);
  auto db = diagonalBase(b);
  auto X = constPsh(b.prod.cat, 2);
  auto ran = diagonalRan(db, X);
  CHECK(ran.psh->audit().ok());
  for (Obj o = 0; o < b.prod.cat->objectCount(); ++o) {
    Obj diagTarget = db.diag.onObj(o);
    CHECK(catPi0(*ran.comma[diagTarget].cat).count == 1);
    CHECK(ran.psh->card(diagTarget) == 2);
  }
  CHECK(isIso(ranCounit(db.diag, X)));
}
