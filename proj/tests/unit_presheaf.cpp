#include <vector>

#include "doctest.h"
#include "fincat.hpp"
#include "presheaf.hpp"

using namespace catk;

TEST_CASE("representable values are hom sets") {
  auto d = deltaTruncated(2);
  auto y1 = representable(d.cat, 1);
  CHECK(y1->card(0) == 2);
  CHECK(y1->card(1) == 3);
  CHECK(y1->card(2) == 4);
  CHECK(y1->audit().ok());
}

TEST_CASE("maps out of a representable are its values") {
  auto d = deltaTruncated(2);
  auto y1 = representable(d.cat, 1);
  auto y2 = representable(d.cat, 2);
  CHECK(natHomCount(y1, y1) == 3);
  CHECK(natHomCount(representable(d.cat, 0), y1) == 2);
  CHECK(natHomCount(y1, y2) == y2->card(1));
  // The universal-element map picks out its element at the identity.
  PshMap m = yonedaMap(y2, 1, 2);
  CHECK(m.audit().ok());
  CHECK(m.apply(1, d.cat->homPos(d.cat->identity(1))) == 2);
}

TEST_CASE("natural map enumeration is ordered and complete") {
  auto d = deltaTruncated(1);
  auto y1 = representable(d.cat, 1);
  auto nat = natHom(y1, y1);
  REQUIRE(nat.count == 3);
  CHECK(nat.complete);
  for (std::size_t i = 0; i < nat.count; ++i)
    CHECK(nat.toMap(y1, y1, i).audit().ok());
  for (std::size_t i = 1; i < nat.count; ++i)
    CHECK(nat.maps[i - 1] < nat.maps[i]);
  auto capped = natHom(y1, y1, 2);
  CHECK(capped.count == 2);
  CHECK_FALSE(capped.complete);
}

TEST_CASE("product counts maps by pairs") {
  auto d = deltaTruncated(1);
  auto a = representable(d.cat, 0);
  auto b = representable(d.cat, 1);
  auto p = productPsh(a, b);
  CHECK(p.psh->audit().ok());
  CHECK(p.projLeft.audit().ok());
  CHECK(p.projRight.audit().ok());
  auto w = representable(d.cat, 1);
  CHECK(natHomCount(w, p.psh) == natHomCount(w, a) * natHomCount(w, b));
  PshMap pair = pairingMap(p, idPshMap(a), yonedaMap(b, 0, 0));
  CHECK(pair.audit().ok());
  CHECK(pshMapsEqual(composePshMaps(p.projLeft, pair), idPshMap(a)));
}

TEST_CASE("coproduct counts maps by products of legs") {
  auto d = deltaTruncated(1);
  auto a = representable(d.cat, 0);
  auto b = representable(d.cat, 1);
  auto c = coproductPsh(a, b);
  CHECK(c.psh->audit().ok());
  CHECK(isMono(c.injLeft));
  CHECK(isMono(c.injRight));
  auto w = representable(d.cat, 1);
  CHECK(natHomCount(c.psh, w) == natHomCount(a, w) * natHomCount(b, w));
  PshMap fold = copairingMap(c, yonedaMap(b, 0, 1), idPshMap(b));
  CHECK(fold.audit().ok());
  CHECK(pshMapsEqual(composePshMaps(fold, c.injRight), idPshMap(b)));
}

TEST_CASE("pullback of a pair of points") {
  auto d = deltaTruncated(1);
  auto y0 = representable(d.cat, 0);
  auto y1 = representable(d.cat, 1);
  PshMap v0 = representableMap(y0, 0, y1, 1, d.byTuple({0}, 1));
  PshMap v1 = representableMap(y0, 0, y1, 1, d.byTuple({1}, 1));
  CHECK(v0.audit().ok());
  auto pbSame = pullbackPsh(v0, v0);
  CHECK(pbSame.psh->audit().ok());
  CHECK(pbSame.psh->card(0) == 1);  // the diagonal point
  auto pbDiff = pullbackPsh(v0, v1);
  CHECK(pbDiff.psh->totalCard() == 0);
}

TEST_CASE("chain of edges glued end to end") {
  auto d = deltaTruncated(2);
  auto s = spinePsh(d, 2);
  CHECK(s.psh->card(0) == 3);
  CHECK(s.psh->card(1) == 5);
  CHECK(s.psh->card(2) == 7);
  CHECK(s.psh->audit().ok());
  CHECK(s.inclusion.audit().ok());
  CHECK(isMono(s.inclusion));
  // Maps out of the chain into the full cell are pairs of edges sharing a
  // vertex: monotone triples.
  auto y2 = representable(d.cat, 2);
  CHECK(natHomCount(s.psh, y2) == 10);
  CHECK(natHomCount(spinePsh(d, 1).psh, y2) == y2->card(1));
}

TEST_CASE("boundary and horn subobjects") {
  auto d = deltaTruncated(2);
  auto bd = simplexBoundary(d, 2);
  CHECK(bd.psh->card(0) == 3);
  CHECK(bd.psh->card(1) == 6);
  CHECK(bd.psh->card(2) == 9);
  CHECK(bd.psh->audit().ok());
  CHECK(isMono(bd.incl));
  auto horn = simplexHorn(d, 2, 1);
  CHECK(horn.psh->card(0) == 3);
  CHECK(horn.psh->card(1) == 5);
  CHECK(horn.psh->card(2) == 7);
  CHECK(horn.incl.audit().ok());
  // The middle horn of the triangle is its spine.
  auto sp = spinePsh(d, 2);
  CHECK(natHomCount(horn.psh, sp.psh) == natHomCount(sp.psh, horn.psh));
  auto b1 = simplexBoundary(d, 1);
  CHECK(b1.psh->card(0) == 2);
  CHECK(b1.psh->card(1) == 2);  // two degenerate edges
}

TEST_CASE("pushout glues along the shared part") {
  auto d = deltaTruncated(1);
  auto y0 = representable(d.cat, 0);
  auto y1 = representable(d.cat, 1);
  PshMap v0 = representableMap(y0, 0, y1, 1, d.byTuple({0}, 1));
  PshMap v1 = representableMap(y0, 0, y1, 1, d.byTuple({1}, 1));
  auto po = pushoutPsh(v1, v0);  // glue right end of one edge to left of next
  CHECK(po.psh->audit().ok());
  CHECK(po.psh->card(0) == 3);
  CHECK(po.psh->card(1) == 5);
  CHECK(po.injLeft.audit().ok());
  // Fold: keep the first edge, collapse the second onto the shared vertex.
  PshMap squash = representableMap(y1, 1, y1, 1, d.byTuple({1, 1}, 1));
  PshMap fold = pushoutMediate(po, idPshMap(y1), squash);
  CHECK(fold.audit().ok());
  CHECK(isEpi(fold));
}

TEST_CASE("equalizer of distinct points is empty") {
  auto d = deltaTruncated(1);
  auto y0 = representable(d.cat, 0);
  auto y1 = representable(d.cat, 1);
  PshMap v0 = representableMap(y0, 0, y1, 1, d.byTuple({0}, 1));
  PshMap v1 = representableMap(y0, 0, y1, 1, d.byTuple({1}, 1));
  CHECK(equalizerPsh(v0, v1).psh->totalCard() == 0);
  CHECK(equalizerPsh(v0, v0).psh->totalCard() == y0->totalCard());
}

TEST_CASE("closure of a seed element is the image of its cell") {
  auto d = deltaTruncated(2);
  auto y2 = representable(d.cat, 2);
  int edge01 = d.cat->homPos(d.byTuple({0, 1}, 2));
  auto sub = subpresheafClosure(y2, {{}, {edge01}, {}});
  CHECK(sub.psh->card(0) == 2);
  CHECK(sub.psh->card(1) == 3);
  CHECK(sub.psh->card(2) == 4);
  CHECK(sub.psh->audit().ok());
  CHECK(sub.incl.audit().ok());
}

TEST_CASE("quotient propagates vertex collapse through degeneracies") {
  auto d = deltaTruncated(1);
  auto y1 = representable(d.cat, 1);
  auto q = quotientPsh(y1, {{{0, 0, 1}}});
  CHECK(q.psh->card(0) == 1);
  // The two degenerate edges merge with each other but not with the edge.
  CHECK(q.psh->card(1) == 2);
  CHECK(q.psh->audit().ok());
  CHECK(q.proj.audit().ok());
  CHECK(isEpi(q.proj));
}

TEST_CASE("connected components") {
  auto d = deltaTruncated(2);
  auto y2 = representable(d.cat, 2);
  CHECK(pshPi0(y2).count == 1);
  auto c = coproductPsh(y2, representable(d.cat, 0));
  CHECK(pshPi0(c.psh).count == 2);
  auto bd = simplexBoundary(d, 1);  // two disjoint points
  CHECK(pshPi0(bd.psh).count == 2);
}

TEST_CASE("exponential satisfies the mapping bijection") {
  auto d = deltaTruncated(1);
  auto a = representable(d.cat, 1);
  auto x = representable(d.cat, 1);
  auto e = exponentialPsh(a, x);
  CHECK(e.psh->audit().ok());
  for (Obj w = 0; w <= 1; ++w) {
    auto yw = representable(d.cat, w);
    CHECK(natHomCount(yw, e.psh) ==
          natHomCount(productPsh(yw, a).psh, x));
  }
}

TEST_CASE("exponential by the terminal is the identity") {
  auto d = deltaTruncated(1);
  auto x = representable(d.cat, 1);
  auto t = terminalPsh(d.cat);
  auto e = exponentialPsh(t, x);
  PshMap u = expUnitIso(e);
  CHECK(u.audit().ok());
  CHECK(isIso(u));
}

TEST_CASE("exponential functoriality in both arguments") {
  auto d = deltaTruncated(1);
  auto y0 = representable(d.cat, 0);
  auto y1 = representable(d.cat, 1);
  PshMap v0 = representableMap(y0, 0, y1, 1, d.byTuple({0}, 1));
  auto e11 = exponentialPsh(y1, y1);
  auto e01 = exponentialPsh(y0, y1);
  PshMap pre = expPrecompose(e11, e01, v0);
  CHECK(pre.audit().ok());
  PshMap preId = expPrecompose(e11, e11, idPshMap(y1));
  CHECK(pshMapsEqual(preId, idPshMap(e11.psh)));
  auto t = terminalPsh(d.cat);
  auto et = exponentialPsh(y1, t);
  PshMap post = expPostcompose(e11, et, toTerminal(y1, t));
  CHECK(post.audit().ok());
  PshMap postId = expPostcompose(e11, e11, idPshMap(y1));
  CHECK(pshMapsEqual(postId, idPshMap(e11.psh)));
}

TEST_CASE("presheaf audit flags a broken action") {
  auto d = deltaTruncated(1);
  std::vector<int> card{2, 2};
  // Identity tables everywhere except a swap at one vertex inclusion; the
  // composite through the degeneracy then disagrees.
  std::vector<std::vector<int>> act(d.cat->morphismCount(),
                                    std::vector<int>{0, 1});
  act[d.byTuple({1}, 1)] = {1, 0};
  auto x = Presheaf::make(d.cat, card, act);
  auto res = x->audit();
  REQUIRE_FALSE(res.ok());
  CHECK(res.issue->axiom == "presheaf-composition");
}

TEST_CASE("map audit flags non-naturality") {
  auto d = deltaTruncated(1);
  auto y1 = representable(d.cat, 1);
  auto nat = natHom(y1, y1);
  PshMap m = nat.toMap(y1, y1, 0);
  m.comp[0][0] = 1 - m.comp[0][0];
  CHECK_FALSE(m.audit().ok());
}
