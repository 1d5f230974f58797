#include <cstdint>
#include <vector>

#include "doctest.h"
#include "fincat.hpp"

using namespace catk;

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Two objects a, b and a single crossing arrow.
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

CatPtr terminalCat() {
  CatBuilder b;
  Obj x = b.addObject("*");
  Mor e = b.addMorphism(x, x, "id");
  b.setIdentity(x, e);
  b.setComposite(e, e, e);
  return b.build();
}

}  // namespace

TEST_CASE("monotone map category has binomial hom counts") {
  auto d = deltaTruncated(3);
  REQUIRE(d.cat->objectCount() == 4);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      CHECK(d.cat->hom(n, m).size() == binomial(n + m + 1, n + 1));
  auto res = d.cat->audit();
  CHECK(res.ok());
  CHECK(res.exhaustive);
}

TEST_CASE("monotone map composition reindexes vertex tuples") {
  auto d = deltaTruncated(2);
  Mor f = d.byTuple({1}, 1);     // [0] -> [1]
  Mor g = d.byTuple({0, 2}, 2);  // [1] -> [2]
  CHECK(d.cat->compose(g, f) == d.byTuple({2}, 2));
  Mor s = d.byTuple({0, 0, 1}, 1);  // [2] -> [1]
  Mor t = d.byTuple({0, 2}, 2);
  CHECK(d.cat->compose(t, s) == d.byTuple({0, 0, 2}, 2));
  CHECK(d.cat->identity(1) == d.byTuple({0, 1}, 1));
  CHECK(d.tuple[d.byTuple({0, 2}, 2)] == std::vector<int>{0, 2});
}

TEST_CASE("opposite swaps hom sets and involutes") {
  auto d = deltaTruncated(2);
  auto op = oppositeCat(d.cat);
  REQUIRE(op->objectCount() == d.cat->objectCount());
  REQUIRE(op->morphismCount() == d.cat->morphismCount());
  for (Obj x = 0; x < 3; ++x)
    for (Obj y = 0; y < 3; ++y)
      CHECK(op->hom(x, y).size() == d.cat->hom(y, x).size());
  CHECK(op->audit().ok());
  CHECK(structurallyEqual(*oppositeCat(op), *d.cat));
  // Same ids, reversed reading of composition.
  Mor f = d.byTuple({1}, 1);
  Mor g = d.byTuple({0, 2}, 2);
  CHECK(op->compose(f, g) == d.cat->compose(g, f));
}

TEST_CASE("slice of the walking arrow") {
  auto c = walkingArrow();
  auto s = sliceCoslice(c, 1, SliceDirection::kOver);
  REQUIRE(s.cat->objectCount() == 2);  // id_b and f
  CHECK(s.cat->morphismCount() == 3);
  CHECK(s.cat->audit().ok());
  CHECK(s.projection.audit().ok());
  // The anchored f sits over a.
  for (Obj x = 0; x < 2; ++x) {
    if (c->morphismName(s.objectAnchor[x]) == "f")
      CHECK(s.projection.onObj(x) == 0);
    else
      CHECK(s.projection.onObj(x) == 1);
  }
  auto u = sliceCoslice(c, 0, SliceDirection::kUnder);
  REQUIRE(u.cat->objectCount() == 2);  // id_a and f
  CHECK(u.cat->morphismCount() == 3);
  CHECK(u.cat->audit().ok());
  CHECK(u.projection.audit().ok());
}

TEST_CASE("slices of the monotone map category") {
  auto d = deltaTruncated(1);
  auto s = sliceCoslice(d.cat, 1, SliceDirection::kOver);
  // Anchors into [1]: two from [0], three from [1].
  REQUIRE(s.cat->objectCount() == 5);
  CHECK(s.cat->audit().ok());
  CHECK(s.projection.audit().ok());
}

TEST_CASE("cell category over a terminal inner category is the monotone one") {
  auto th = thetaConstruct(terminalCat(), 2);
  auto d = deltaTruncated(2);
  REQUIRE(th.cat->objectCount() == 3);
  for (Obj x = 0; x < 3; ++x) {
    CHECK(static_cast<int>(th.objectWord[x].size()) == x);
    for (Obj y = 0; y < 3; ++y)
      CHECK(th.cat->hom(x, y).size() == d.cat->hom(x, y).size());
  }
  CHECK(th.cat->audit().ok());
}

TEST_CASE("cell category morphism count over the arrow word") {
  auto d1 = deltaTruncated(1);
  auto th = thetaConstruct(d1.cat, 1);
  REQUIRE(th.cat->objectCount() == 3);  // [0], [1]([0]), [1]([1])
  Obj a = th.objectByWord({0});
  Obj b = th.objectByWord({1});
  // Over the three monotone maps [1] -> [1]: 1 + 2 + 1 entries.
  CHECK(th.cat->hom(a, b).size() == 4);
  CHECK(th.cat->audit().ok());
}

TEST_CASE("cell category composition threads columns through the middle") {
  auto d1 = deltaTruncated(1);
  auto th = thetaConstruct(d1.cat, 1);
  Obj a = th.objectByWord({0});
  Obj b = th.objectByWord({1});
  // f: [1]([0]) -> [1]([1]) with delta (0,1) and entry <0>:[0]->[1];
  // g: [1]([1]) -> [1]([1]) with delta (0,1) and entry <0,0>:[1]->[1].
  Mor e01 = d1.byTuple({0}, 1);
  Mor c00 = d1.byTuple({0, 0}, 1);
  Mor f = th.morphismByData(a, b, {0, 1}, {e01});
  Mor g = th.morphismByData(b, b, {0, 1}, {c00});
  Mor gf = th.cat->compose(g, f);
  CHECK(th.delta[gf] == std::vector<int>{0, 1});
  CHECK(th.matrix[gf] == std::vector<Mor>{d1.cat->compose(c00, e01)});
  // Collapsing delta drops the matrix.
  Mor h = th.morphismByData(b, b, {0, 0}, {});
  CHECK(th.delta[th.cat->compose(h, f)] == std::vector<int>{0, 0});
  CHECK(th.matrix[th.cat->compose(h, f)].empty());
}

TEST_CASE("product category composes componentwise") {
  auto d = deltaTruncated(1);
  auto p = productCat(d.cat, d.cat);
  REQUIRE(p.cat->objectCount() == 4);
  REQUIRE(p.cat->morphismCount() == 49);
  CHECK(p.cat->audit().ok());
  CHECK(p.projLeft.audit().ok());
  CHECK(p.projRight.audit().ok());
  Mor f = d.byTuple({0}, 1);
  Mor g = d.byTuple({0, 0}, 1);
  auto [pf, pg] = p.morParts(p.pairMor(f, g));
  CHECK(pf == f);
  CHECK(pg == g);
}

TEST_CASE("function category on small sets") {
  auto fs = finSetCat(2);
  REQUIRE(fs.cat->objectCount() == 3);
  REQUIRE(fs.cat->morphismCount() == 11);
  CHECK(fs.cat->audit().ok());
  Mor f = fs.byTable(2, 1, {0, 0});
  Mor g = fs.byTable(1, 2, {1});
  CHECK(fs.cat->compose(g, f) == fs.byTable(2, 2, {1, 1}));
  CHECK(fs.cat->identity(fs.bySize(2)) == fs.byTable(2, 2, {0, 1}));
}

TEST_CASE("pointed function category projects to the plain one") {
  auto ps = pointedFinSetCat(2);
  REQUIRE(ps.cat->objectCount() == 3);
  REQUIRE(ps.cat->morphismCount() == 13);
  CHECK(ps.cat->audit().ok());
  CHECK(ps.projection.audit().ok());
  // Basepoint constraint: maps (2,0) -> (2,1) send slot 0 to 1.
  Obj x = ps.byData(2, 0);
  Obj y = ps.byData(2, 1);
  CHECK(ps.cat->hom(x, y).size() == 2);
}

TEST_CASE("category pullback along identities is the diagonal") {
  auto c = walkingArrow();
  auto pb = catPullback(identityFunctor(c), identityFunctor(c));
  REQUIRE(pb.cat->objectCount() == c->objectCount());
  REQUIRE(pb.cat->morphismCount() == c->morphismCount());
  CHECK(pb.cat->audit().ok());
  CHECK(pb.toLeft.audit().ok());
  CHECK(functorsEqual(pb.toLeft, pb.toRight));
}

TEST_CASE("audit reports budget truncation without a verdict") {
  auto c = walkingArrow();
  auto res = c->audit(0);
  CHECK(res.ok());
  CHECK_FALSE(res.exhaustive);
}

TEST_CASE("audit catches a broken unit law") {
  CatBuilder b;
  Obj a = b.addObject("a");
  Obj bb = b.addObject("b");
  Mor ida = b.addMorphism(a, a, "id_a");
  Mor idb = b.addMorphism(bb, bb, "id_b");
  Mor f = b.addMorphism(a, bb, "f");
  Mor g = b.addMorphism(a, bb, "g");
  b.setIdentity(a, ida);
  b.setIdentity(bb, idb);
  b.setComposite(ida, ida, ida);
  b.setComposite(idb, idb, idb);
  b.setComposite(f, ida, f);
  b.setComposite(g, ida, g);
  b.setComposite(idb, f, g);  // wrong on purpose
  b.setComposite(idb, g, g);
  auto res = b.build()->audit();
  REQUIRE_FALSE(res.ok());
  CHECK(res.issue->axiom == "unit-law");
}

TEST_CASE("audit names a missing composite") {
  CatBuilder b;
  Obj a = b.addObject("a");
  Mor ida = b.addMorphism(a, a, "id_a");
  Mor e = b.addMorphism(a, a, "e");
  b.setIdentity(a, ida);
  b.setComposite(ida, ida, ida);
  b.setComposite(e, ida, e);
  b.setComposite(ida, e, e);
  auto res = b.build()->audit();
  REQUIRE_FALSE(res.ok());
  CHECK(res.issue->axiom == "compose-missing");
  CHECK(res.issue->detail.find("e") != std::string::npos);
}

TEST_CASE("builder rejects unidentified objects") {
  CatBuilder b;
  b.addObject("a");
  CHECK_THROWS_AS(b.build(), Error);
}

TEST_CASE("functor audit catches a collapsed composite") {
  auto c = walkingArrow();
  auto t = terminalCat();
  CatFunctor F{c, t, {0, 0}, {0, 0, 0}};
  CHECK(F.audit().ok());
  CatFunctor broken{c, c, {0, 1}, {0, 1, 0}};  // sends f to id_a
  auto res = broken.audit();
  REQUIRE_FALSE(res.ok());
  CHECK(res.issue->axiom == "functor-typing");
}
