#include "fincat.hpp"

#include <algorithm>
#include <sstream>

namespace catk {
namespace {

std::string joinInts(const std::vector<int>& v, char sep = ',') {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

// All monotone tuples of `len` entries drawn from 0..max, lexicographic.
std::vector<std::vector<int>> monotoneTuples(int len, int max) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len, 0);
  if (len == 0) {
    out.push_back(cur);
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[i] == max) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < len; ++j) cur[j] = cur[i];
  }
  return out;
}

// All tuples of `len` entries drawn from 0..max, lexicographic.
std::vector<std::vector<int>> allTuples(int len, int max) {
  std::vector<std::vector<int>> out;
  if (max < 0 && len > 0) return out;
  std::vector<int> cur(len, 0);
  while (true) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[i] == max) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < len; ++j) cur[j] = 0;
  }
  return out;
}

}  // namespace

Mor FinCat::compose(Mor g, Mor f) const {
  Mor r = composeOrHole(g, f);
  if (r == kNoMor)
    fail("compose: missing composite for (" + morNames_[g] + ", " +
         morNames_[f] + ")");
  return r;
}

Mor FinCat::composeOrHole(Mor g, Mor f) const {
  if (g < 0 || g >= morphismCount() || f < 0 || f >= morphismCount())
    fail("compose: morphism id out of range");
  if (!composable(g, f))
    fail("compose: (" + morNames_[g] + ", " + morNames_[f] +
         ") not composable");
  Obj y = src_[g];
  return comp_[y][static_cast<std::size_t>(posOut_[g]) * in_[y].size() +
                  static_cast<std::size_t>(posIn_[f])];
}

Obj FinCat::objectByName(const std::string& name) const {
  for (Obj x = 0; x < objectCount(); ++x)
    if (objNames_[x] == name) return x;
  return -1;
}

Mor FinCat::morphismByName(const std::string& name) const {
  for (Mor f = 0; f < morphismCount(); ++f)
    if (morNames_[f] == name) return f;
  return kNoMor;
}

std::uint64_t FinCat::composablePairCount() const {
  std::uint64_t n = 0;
  for (Obj y = 0; y < objectCount(); ++y)
    n += static_cast<std::uint64_t>(out_[y].size()) * in_[y].size();
  return n;
}

AuditResult FinCat::audit(std::uint64_t assocBudget) const {
  AuditResult res;
  for (Obj x = 0; x < objectCount(); ++x) {
    Mor e = id_[x];
    ++res.checked;
    if (src_[e] != x || tgt_[e] != x)
      return auditFail("identity-typing",
                       "identity of " + objNames_[x] + " is not an endomap",
                       res.checked);
  }
  for (Obj y = 0; y < objectCount(); ++y) {
    for (Mor g : out_[y]) {
      for (Mor f : in_[y]) {
        ++res.checked;
        Mor gf = composeOrHole(g, f);
        if (gf == kNoMor)
          return auditFail("compose-missing",
                           "no composite for (" + morNames_[g] + ", " +
                               morNames_[f] + ")",
                           res.checked);
        if (src_[gf] != src_[f] || tgt_[gf] != tgt_[g])
          return auditFail("compose-typing",
                           "composite of (" + morNames_[g] + ", " +
                               morNames_[f] + ") has wrong endpoints",
                           res.checked);
      }
    }
  }
  for (Mor f = 0; f < morphismCount(); ++f) {
    ++res.checked;
    if (composeOrHole(id_[tgt_[f]], f) != f || composeOrHole(f, id_[src_[f]]) != f)
      return auditFail("unit-law", "identities do not fix " + morNames_[f],
                       res.checked);
  }
  std::uint64_t triples = 0;
  for (Mor g = 0; g < morphismCount(); ++g) {
    Obj y = src_[g], z = tgt_[g];
    for (Mor f : in_[y]) {
      for (Mor h : out_[z]) {
        if (triples++ >= assocBudget) {
          res.exhaustive = false;
          return res;
        }
        ++res.checked;
        if (composeOrHole(h, composeOrHole(g, f)) !=
            composeOrHole(composeOrHole(h, g), f))
          return auditFail("associativity",
                           "(" + morNames_[h] + ", " + morNames_[g] + ", " +
                               morNames_[f] + ") associates differently",
                           res.checked);
      }
    }
  }
  return res;
}

bool structurallyEqual(const FinCat& a, const FinCat& b) {
  return a.objNames_ == b.objNames_ && a.morNames_ == b.morNames_ &&
         a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.id_ == b.id_ &&
         a.comp_ == b.comp_ && a.out_ == b.out_ && a.in_ == b.in_;
}

Obj CatBuilder::addObject(std::string name) {
  objNames_.push_back(std::move(name));
  id_.push_back(kNoMor);
  return static_cast<Obj>(objNames_.size()) - 1;
}

Mor CatBuilder::addMorphism(Obj src, Obj tgt, std::string name) {
  require(src >= 0 && src < objectCount() && tgt >= 0 && tgt < objectCount(),
          "addMorphism: object id out of range");
  morNames_.push_back(std::move(name));
  src_.push_back(src);
  tgt_.push_back(tgt);
  return static_cast<Mor>(src_.size()) - 1;
}

void CatBuilder::setIdentity(Obj x, Mor f) {
  require(x >= 0 && x < objectCount(), "setIdentity: object id out of range");
  require(f >= 0 && f < morphismCount(), "setIdentity: morphism id out of range");
  require(src_[f] == x && tgt_[f] == x, "setIdentity: not an endomap of " +
                                            objNames_[x]);
  id_[x] = f;
}

void CatBuilder::setComposite(Mor g, Mor f, Mor gf) {
  require(g >= 0 && g < morphismCount() && f >= 0 && f < morphismCount() &&
              gf >= 0 && gf < morphismCount(),
          "setComposite: morphism id out of range");
  require(src_[g] == tgt_[f], "setComposite: (" + morNames_[g] + ", " +
                                  morNames_[f] + ") not composable");
  require(src_[gf] == src_[f] && tgt_[gf] == tgt_[g],
          "setComposite: composite " + morNames_[gf] + " has wrong endpoints");
  composites_.push_back({g, f, gf});
}

CatPtr CatBuilder::build() const {
  auto cat = std::shared_ptr<FinCat>(new FinCat());
  cat->objNames_ = objNames_;
  cat->morNames_ = morNames_;
  cat->src_ = src_;
  cat->tgt_ = tgt_;
  cat->id_ = id_;
  Obj nObj = objectCount();
  Mor nMor = morphismCount();
  for (Obj x = 0; x < nObj; ++x)
    require(id_[x] != kNoMor, "build: no identity for " + objNames_[x]);
  cat->hom_.assign(nObj, std::vector<std::vector<Mor>>(nObj));
  cat->out_.assign(nObj, {});
  cat->in_.assign(nObj, {});
  cat->posOut_.assign(nMor, 0);
  cat->posIn_.assign(nMor, 0);
  cat->posHom_.assign(nMor, 0);
  for (Mor f = 0; f < nMor; ++f) {
    cat->posHom_[f] = static_cast<std::int32_t>(cat->hom_[src_[f]][tgt_[f]].size());
    cat->hom_[src_[f]][tgt_[f]].push_back(f);
    cat->posOut_[f] = static_cast<std::int32_t>(cat->out_[src_[f]].size());
    cat->out_[src_[f]].push_back(f);
    cat->posIn_[f] = static_cast<std::int32_t>(cat->in_[tgt_[f]].size());
    cat->in_[tgt_[f]].push_back(f);
  }
  cat->comp_.assign(nObj, {});
  for (Obj y = 0; y < nObj; ++y)
    cat->comp_[y].assign(cat->out_[y].size() * cat->in_[y].size(), kNoMor);
  for (const auto& [g, f, gf] : composites_) {
    Obj y = src_[g];
    auto& slot = cat->comp_[y][static_cast<std::size_t>(cat->posOut_[g]) *
                                   cat->in_[y].size() +
                               static_cast<std::size_t>(cat->posIn_[f])];
    require(slot == kNoMor || slot == gf,
            "build: conflicting composites for (" + morNames_[g] + ", " +
                morNames_[f] + ")");
    slot = gf;
  }
  return cat;
}

AuditResult CatFunctor::audit(std::uint64_t budget) const {
  AuditResult res;
  require(src && dst, "functor audit: missing categories");
  if (static_cast<Obj>(objMap.size()) != src->objectCount() ||
      static_cast<Mor>(morMap.size()) != src->morphismCount())
    return auditFail("functor-shape", "object or morphism table has wrong size",
                     res.checked);
  for (Obj x = 0; x < src->objectCount(); ++x) {
    ++res.checked;
    if (objMap[x] < 0 || objMap[x] >= dst->objectCount())
      return auditFail("functor-shape",
                       "image of " + src->objectName(x) + " out of range",
                       res.checked);
  }
  for (Mor f = 0; f < src->morphismCount(); ++f) {
    ++res.checked;
    if (morMap[f] < 0 || morMap[f] >= dst->morphismCount())
      return auditFail("functor-shape",
                       "image of " + src->morphismName(f) + " out of range",
                       res.checked);
    if (dst->source(morMap[f]) != objMap[src->source(f)] ||
        dst->target(morMap[f]) != objMap[src->target(f)])
      return auditFail("functor-typing",
                       "image of " + src->morphismName(f) +
                           " has wrong endpoints",
                       res.checked);
  }
  for (Obj x = 0; x < src->objectCount(); ++x) {
    ++res.checked;
    if (morMap[src->identity(x)] != dst->identity(objMap[x]))
      return auditFail("functor-identity",
                       "identity of " + src->objectName(x) + " not preserved",
                       res.checked);
  }
  std::uint64_t pairs = 0;
  for (Obj y = 0; y < src->objectCount(); ++y) {
    for (Mor g : src->morphismsFrom(y)) {
      for (Mor f : src->morphismsInto(y)) {
        if (pairs++ >= budget) {
          res.exhaustive = false;
          return res;
        }
        ++res.checked;
        if (morMap[src->compose(g, f)] != dst->compose(morMap[g], morMap[f]))
          return auditFail("functor-composition",
                           "(" + src->morphismName(g) + ", " +
                               src->morphismName(f) + ") not preserved",
                           res.checked);
      }
    }
  }
  return res;
}

CatFunctor identityFunctor(CatPtr c) {
  CatFunctor F;
  F.src = c;
  F.dst = c;
  F.objMap.resize(c->objectCount());
  F.morMap.resize(c->morphismCount());
  for (Obj x = 0; x < c->objectCount(); ++x) F.objMap[x] = x;
  for (Mor f = 0; f < c->morphismCount(); ++f) F.morMap[f] = f;
  return F;
}

CatFunctor composeFunctors(const CatFunctor& g, const CatFunctor& f) {
  require(f.dst == g.src || structurallyEqual(*f.dst, *g.src),
          "composeFunctors: middle categories differ");
  CatFunctor h;
  h.src = f.src;
  h.dst = g.dst;
  h.objMap.reserve(f.objMap.size());
  h.morMap.reserve(f.morMap.size());
  for (Obj x : f.objMap) h.objMap.push_back(g.objMap.at(x));
  for (Mor m : f.morMap) h.morMap.push_back(g.morMap.at(m));
  return h;
}

bool functorsEqual(const CatFunctor& a, const CatFunctor& b) {
  return structurallyEqual(*a.src, *b.src) && structurallyEqual(*a.dst, *b.dst) &&
         a.objMap == b.objMap && a.morMap == b.morMap;
}

DeltaCat deltaTruncated(int N) {
  require(N >= 0, "deltaTruncated: negative level");
  DeltaCat d;
  d.maxLevel = N;
  CatBuilder b;
  for (int n = 0; n <= N; ++n) b.addObject("[" + std::to_string(n) + "]");
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= N; ++m) {
      for (auto& t : monotoneTuples(n + 1, m)) {
        Mor f = b.addMorphism(n, m,
                              "<" + joinInts(t) + ">:[" + std::to_string(n) +
                                  "]->[" + std::to_string(m) + "]");
        d.tuple.push_back(t);
        d.index_[{m, t}] = f;
      }
    }
  }
  for (int n = 0; n <= N; ++n) {
    std::vector<int> idt(n + 1);
    for (int i = 0; i <= n; ++i) idt[i] = i;
    b.setIdentity(n, d.index_.at({n, idt}));
  }
  for (Mor f = 0; f < b.morphismCount(); ++f) {
    for (Mor g = 0; g < b.morphismCount(); ++g) {
      if (b.source(g) != b.target(f)) continue;
      const auto& tf = d.tuple[f];
      const auto& tg = d.tuple[g];
      std::vector<int> tc(tf.size());
      for (std::size_t i = 0; i < tf.size(); ++i) tc[i] = tg[tf[i]];
      b.setComposite(g, f, d.index_.at({b.target(g), tc}));
    }
  }
  d.cat = b.build();
  return d;
}

Mor DeltaCat::byTuple(const std::vector<int>& t, int target) const {
  auto it = index_.find({target, t});
  require(it != index_.end(), "byTuple: no morphism <" + joinInts(t) +
                                  "> into [" + std::to_string(target) + "]");
  return it->second;
}

SliceResult sliceCoslice(CatPtr c, Obj obj, SliceDirection dir) {
  require(obj >= 0 && obj < c->objectCount(), "slice: object id out of range");
  bool over = dir == SliceDirection::kOver;
  SliceResult r;
  CatBuilder b;
  // Over: anchors are morphisms into obj; under: out of obj.
  std::vector<Mor> anchors;
  for (Mor a = 0; a < c->morphismCount(); ++a) {
    if ((over ? c->target(a) : c->source(a)) != obj) continue;
    b.addObject(c->morphismName(a));
    anchors.push_back(a);
  }
  r.objectAnchor = anchors;
  std::vector<Obj> projObj(anchors.size());
  std::vector<Mor> projMor;
  // A slice morphism is an ambient m with the triangle over obj commuting;
  // (m, co-anchor) determines the other anchor by composition.
  struct Key {
    Mor m, co;
    bool operator<(const Key& o) const {
      return m != o.m ? m < o.m : co < o.co;
    }
  };
  std::map<Key, Mor> morIndex;
  for (std::size_t ai = 0; ai < anchors.size(); ++ai) {
    Mor a = anchors[ai];
    projObj[ai] = over ? c->source(a) : c->target(a);
  }
  for (std::size_t ai = 0; ai < anchors.size(); ++ai) {
    for (std::size_t bi = 0; bi < anchors.size(); ++bi) {
      Mor aa = anchors[ai], ab = anchors[bi];
      for (Mor m : c->hom(projObj[ai], projObj[bi])) {
        bool triangle = over ? c->compose(ab, m) == aa : c->compose(m, aa) == ab;
        if (!triangle) continue;
        Mor s = b.addMorphism(static_cast<Obj>(ai), static_cast<Obj>(bi),
                              c->morphismName(m) + "@" +
                                  c->morphismName(over ? ab : aa));
        morIndex[{m, over ? ab : aa}] = s;
        projMor.push_back(m);
      }
    }
  }
  for (std::size_t ai = 0; ai < anchors.size(); ++ai)
    b.setIdentity(static_cast<Obj>(ai),
                  morIndex.at({c->identity(projObj[ai]), anchors[ai]}));
  for (Mor s1 = 0; s1 < b.morphismCount(); ++s1) {
    for (Mor s2 = 0; s2 < b.morphismCount(); ++s2) {
      if (b.source(s2) != b.target(s1)) continue;
      Mor m = c->compose(projMor[s2], projMor[s1]);
      Mor co = over ? r.objectAnchor[b.target(s2)] : r.objectAnchor[b.source(s1)];
      b.setComposite(s2, s1, morIndex.at({m, co}));
    }
  }
  r.cat = b.build();
  r.projection.src = r.cat;
  r.projection.dst = c;
  r.projection.objMap = projObj;
  r.projection.morMap = projMor;
  return r;
}

CatPtr oppositeCat(CatPtr c) {
  CatBuilder b;
  for (Obj x = 0; x < c->objectCount(); ++x) b.addObject(c->objectName(x));
  for (Mor f = 0; f < c->morphismCount(); ++f)
    b.addMorphism(c->target(f), c->source(f), c->morphismName(f));
  for (Obj x = 0; x < c->objectCount(); ++x) b.setIdentity(x, c->identity(x));
  // (g after f) in the opposite is the original f after g.
  for (Obj y = 0; y < c->objectCount(); ++y) {
    for (Mor f : c->morphismsFrom(y)) {
      for (Mor g : c->morphismsInto(y)) {
        b.setComposite(g, f, c->compose(f, g));
      }
    }
  }
  return b.build();
}

Obj ProductCat::pairObj(Obj a, Obj b) const {
  return a * right->objectCount() + b;
}

Mor ProductCat::pairMor(Mor f, Mor g) const {
  return f * right->morphismCount() + g;
}

std::pair<Obj, Obj> ProductCat::objParts(Obj x) const {
  return {x / right->objectCount(), x % right->objectCount()};
}

std::pair<Mor, Mor> ProductCat::morParts(Mor f) const {
  return {f / right->morphismCount(), f % right->morphismCount()};
}

ProductCat productCat(CatPtr a, CatPtr b) {
  ProductCat p;
  p.left = a;
  p.right = b;
  CatBuilder bd;
  for (Obj x = 0; x < a->objectCount(); ++x)
    for (Obj y = 0; y < b->objectCount(); ++y)
      bd.addObject("(" + a->objectName(x) + "," + b->objectName(y) + ")");
  for (Mor f = 0; f < a->morphismCount(); ++f)
    for (Mor g = 0; g < b->morphismCount(); ++g)
      bd.addMorphism(a->source(f) * b->objectCount() + b->source(g),
                     a->target(f) * b->objectCount() + b->target(g),
                     "(" + a->morphismName(f) + "," + b->morphismName(g) + ")");
  auto pm = [&](Mor f, Mor g) { return f * b->morphismCount() + g; };
  for (Obj x = 0; x < a->objectCount(); ++x)
    for (Obj y = 0; y < b->objectCount(); ++y)
      bd.setIdentity(x * b->objectCount() + y,
                     pm(a->identity(x), b->identity(y)));
  for (Obj ya = 0; ya < a->objectCount(); ++ya) {
    for (Mor ga : a->morphismsFrom(ya)) {
      for (Mor fa : a->morphismsInto(ya)) {
        Mor ca = a->compose(ga, fa);
        for (Obj yb = 0; yb < b->objectCount(); ++yb) {
          for (Mor gb : b->morphismsFrom(yb)) {
            for (Mor fb : b->morphismsInto(yb)) {
              bd.setComposite(pm(ga, gb), pm(fa, fb),
                              pm(ca, b->compose(gb, fb)));
            }
          }
        }
      }
    }
  }
  p.cat = bd.build();
  p.projLeft.src = p.cat;
  p.projLeft.dst = a;
  p.projRight.src = p.cat;
  p.projRight.dst = b;
  for (Obj x = 0; x < p.cat->objectCount(); ++x) {
    auto [xa, xb] = p.objParts(x);
    p.projLeft.objMap.push_back(xa);
    p.projRight.objMap.push_back(xb);
  }
  for (Mor f = 0; f < p.cat->morphismCount(); ++f) {
    auto [fa, fb] = p.morParts(f);
    p.projLeft.morMap.push_back(fa);
    p.projRight.morMap.push_back(fb);
  }
  return p;
}

namespace {

std::string thetaObjName(const FinCat& inner, const std::vector<Obj>& word) {
  std::ostringstream os;
  os << "[" << word.size() << "]";
  if (!word.empty()) {
    os << "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) os << ",";
      os << inner.objectName(word[i]);
    }
    os << ")";
  }
  return os.str();
}

std::string thetaMorName(const FinCat& inner, const std::vector<int>& delta,
                         const std::vector<Mor>& matrix,
                         const std::string& srcName,
                         const std::string& tgtName) {
  std::ostringstream os;
  os << "<" << joinInts(delta) << ">[";
  for (std::size_t p = 0; p < matrix.size(); ++p) {
    if (p) os << ",";
    os << inner.morphismName(matrix[p]);
  }
  os << "]:" << srcName << "->" << tgtName;
  return os.str();
}

}  // namespace

Obj ThetaCat::objectByWord(const std::vector<Obj>& word) const {
  auto it = wordIndex_.find(word);
  require(it != wordIndex_.end(), "objectByWord: no such object");
  return it->second;
}

Mor ThetaCat::morphismByData(Obj src, Obj tgt, const std::vector<int>& d,
                             const std::vector<Mor>& m) const {
  auto it = morIndex_.find(std::make_tuple(src, tgt, d, m));
  require(it != morIndex_.end(), "morphismByData: no such morphism");
  return it->second;
}

ThetaCat thetaConstruct(CatPtr inner, int maxK) {
  require(maxK >= 0, "thetaConstruct: negative width");
  ThetaCat th;
  th.inner = inner;
  th.maxK = maxK;
  CatBuilder b;
  for (int k = 0; k <= maxK; ++k) {
    for (auto& word : allTuples(k, inner->objectCount() - 1)) {
      std::vector<Obj> w(word.begin(), word.end());
      th.wordIndex_[w] = b.addObject(thetaObjName(*inner, w));
      th.objectWord.push_back(std::move(w));
    }
  }
  Obj nObj = b.objectCount();
  // Morphisms (delta, M): for column j in (delta[0], delta[k]], the owner
  // row i satisfies delta[i-1] < j <= delta[i]; the entry is drawn from
  // hom(c_i, d_j). M is enumerated as a mixed-radix counter over columns.
  for (Obj so = 0; so < nObj; ++so) {
    const auto& cw = th.objectWord[so];
    int k = static_cast<int>(cw.size());
    for (Obj to = 0; to < nObj; ++to) {
      const auto& dw = th.objectWord[to];
      int l = static_cast<int>(dw.size());
      for (auto& delta : monotoneTuples(k + 1, l)) {
        int lo = delta[0], hi = delta[k];
        std::vector<const std::vector<Mor>*> cols;
        bool empty = false;
        for (int j = lo + 1; j <= hi; ++j) {
          int owner = 1;
          while (delta[owner] < j) ++owner;
          const auto& h = inner->hom(cw[owner - 1], dw[j - 1]);
          if (h.empty()) empty = true;
          cols.push_back(&h);
        }
        if (empty) continue;
        std::vector<std::size_t> idx(cols.size(), 0);
        while (true) {
          std::vector<Mor> matrix(cols.size());
          for (std::size_t p = 0; p < cols.size(); ++p)
            matrix[p] = (*cols[p])[idx[p]];
          Mor f = b.addMorphism(so, to,
                                thetaMorName(*inner, delta, matrix,
                                             thetaObjName(*inner, cw),
                                             thetaObjName(*inner, dw)));
          th.delta.push_back(delta);
          th.morIndex_[std::make_tuple(so, to, delta, matrix)] = f;
          th.matrix.push_back(std::move(matrix));
          int p = static_cast<int>(cols.size()) - 1;
          while (p >= 0 && idx[p] + 1 == cols[p]->size()) --p;
          if (p < 0) break;
          ++idx[p];
          for (std::size_t q = p + 1; q < cols.size(); ++q) idx[q] = 0;
        }
      }
    }
  }
  for (Obj x = 0; x < nObj; ++x) {
    const auto& w = th.objectWord[x];
    int k = static_cast<int>(w.size());
    std::vector<int> idd(k + 1);
    for (int i = 0; i <= k; ++i) idd[i] = i;
    std::vector<Mor> idm(k);
    for (int i = 0; i < k; ++i) idm[i] = inner->identity(w[i]);
    b.setIdentity(x, th.morIndex_.at(std::make_tuple(x, x, idd, idm)));
  }
  for (Mor f = 0; f < b.morphismCount(); ++f) {
    const auto& df = th.delta[f];
    const auto& mf = th.matrix[f];
    for (Mor g = 0; g < b.morphismCount(); ++g) {
      if (b.source(g) != b.target(f)) continue;
      const auto& dg = th.delta[g];
      const auto& mg = th.matrix[g];
      std::vector<int> dc(df.size());
      for (std::size_t i = 0; i < df.size(); ++i) dc[i] = dg[df[i]];
      int lo = dc.front(), hi = dc.back();
      std::vector<Mor> mc;
      mc.reserve(hi - lo);
      for (int j = lo + 1; j <= hi; ++j) {
        // r owns column j under dg; its own column under df feeds it.
        int r = 1;
        while (dg[r] < j) ++r;
        mc.push_back(inner->compose(mg[j - dg[0] - 1], mf[r - df[0] - 1]));
      }
      b.setComposite(g, f,
                     th.morIndex_.at(std::make_tuple(b.source(f), b.target(g),
                                                     dc, mc)));
    }
  }
  th.cat = b.build();
  return th;
}

Obj FinSetCat::bySize(int s) const {
  require(s >= 0 && s <= maxSize, "bySize: size out of range");
  return s;
}

Mor FinSetCat::byTable(int srcSize, int tgtSize, const std::vector<int>& t) const {
  auto it = index_.find(std::make_tuple(srcSize, tgtSize, t));
  require(it != index_.end(), "byTable: no such function");
  return it->second;
}

FinSetCat finSetCat(int maxSize) {
  require(maxSize >= 0, "finSetCat: negative size");
  FinSetCat fs;
  fs.maxSize = maxSize;
  CatBuilder b;
  for (int s = 0; s <= maxSize; ++s) b.addObject("set" + std::to_string(s));
  for (int a = 0; a <= maxSize; ++a) {
    for (int t = 0; t <= maxSize; ++t) {
      for (auto& tab : allTuples(a, t - 1)) {
        Mor f = b.addMorphism(a, t,
                              "(" + joinInts(tab) + "):" + std::to_string(a) +
                                  "->" + std::to_string(t));
        fs.index_[std::make_tuple(a, t, tab)] = f;
        fs.table.push_back(tab);
      }
    }
  }
  for (int s = 0; s <= maxSize; ++s) {
    std::vector<int> idt(s);
    for (int i = 0; i < s; ++i) idt[i] = i;
    b.setIdentity(s, fs.index_.at(std::make_tuple(s, s, idt)));
  }
  for (Mor f = 0; f < b.morphismCount(); ++f) {
    for (Mor g = 0; g < b.morphismCount(); ++g) {
      if (b.source(g) != b.target(f)) continue;
      const auto& tf = fs.table[f];
      const auto& tg = fs.table[g];
      std::vector<int> tc(tf.size());
      for (std::size_t i = 0; i < tf.size(); ++i) tc[i] = tg[tf[i]];
      b.setComposite(g, f,
                     fs.index_.at(std::make_tuple(b.source(f), b.target(g), tc)));
    }
  }
  fs.cat = b.build();
  return fs;
}

Obj PointedFinSetCat::byData(int size, int basepoint) const {
  for (Obj x = 0; x < static_cast<Obj>(objectData.size()); ++x)
    if (objectData[x] == std::make_pair(size, basepoint)) return x;
  fail("byData: no such pointed set");
}

PointedFinSetCat pointedFinSetCat(int maxSize) {
  require(maxSize >= 1, "pointedFinSetCat: needs size at least 1");
  PointedFinSetCat ps;
  ps.base = finSetCat(maxSize);
  CatBuilder b;
  for (int s = 1; s <= maxSize; ++s)
    for (int p = 0; p < s; ++p) {
      b.addObject("set" + std::to_string(s) + "@" + std::to_string(p));
      ps.objectData.emplace_back(s, p);
    }
  std::vector<Mor> underlying;
  std::map<std::tuple<Obj, Obj, Mor>, Mor> index;
  for (Obj x = 0; x < b.objectCount(); ++x) {
    auto [a, p] = ps.objectData[x];
    for (Obj y = 0; y < b.objectCount(); ++y) {
      auto [t, q] = ps.objectData[y];
      for (auto& tab : allTuples(a, t - 1)) {
        if (tab[p] != q) continue;
        Mor f = b.addMorphism(x, y,
                              "(" + joinInts(tab) + "):set" +
                                  std::to_string(a) + "@" + std::to_string(p) +
                                  "->set" + std::to_string(t) + "@" +
                                  std::to_string(q));
        underlying.push_back(ps.base.byTable(a, t, tab));
        index[std::make_tuple(x, y, underlying.back())] = f;
      }
    }
  }
  for (Obj x = 0; x < b.objectCount(); ++x) {
    auto [s, p] = ps.objectData[x];
    std::vector<int> idt(s);
    for (int i = 0; i < s; ++i) idt[i] = i;
    b.setIdentity(x, index.at(std::make_tuple(x, x, ps.base.byTable(s, s, idt))));
  }
  for (Mor f = 0; f < b.morphismCount(); ++f) {
    for (Mor g = 0; g < b.morphismCount(); ++g) {
      if (b.source(g) != b.target(f)) continue;
      Mor u = ps.base.cat->compose(underlying[g], underlying[f]);
      b.setComposite(g, f, index.at(std::make_tuple(b.source(f), b.target(g), u)));
    }
  }
  ps.cat = b.build();
  ps.projection.src = ps.cat;
  ps.projection.dst = ps.base.cat;
  for (Obj x = 0; x < ps.cat->objectCount(); ++x)
    ps.projection.objMap.push_back(ps.objectData[x].first);
  ps.projection.morMap = underlying;
  return ps;
}

Obj CatPullbackResult::byObjPair(Obj a, Obj b) const {
  for (Obj x = 0; x < static_cast<Obj>(objPairs.size()); ++x)
    if (objPairs[x] == std::make_pair(a, b)) return x;
  fail("byObjPair: no such object");
}

CatPullbackResult catPullback(const CatFunctor& f, const CatFunctor& g) {
  require(f.dst == g.dst || structurallyEqual(*f.dst, *g.dst),
          "catPullback: targets differ");
  CatPullbackResult r;
  CatBuilder b;
  const FinCat& A = *f.src;
  const FinCat& B = *g.src;
  std::vector<std::vector<Obj>> objIndex(A.objectCount(),
                                         std::vector<Obj>(B.objectCount(), -1));
  for (Obj x = 0; x < A.objectCount(); ++x)
    for (Obj y = 0; y < B.objectCount(); ++y)
      if (f.objMap[x] == g.objMap[y]) {
        objIndex[x][y] =
            b.addObject("(" + A.objectName(x) + "," + B.objectName(y) + ")");
        r.objPairs.emplace_back(x, y);
      }
  std::map<std::pair<Mor, Mor>, Mor> morIndex;
  for (Mor m = 0; m < A.morphismCount(); ++m)
    for (Mor n = 0; n < B.morphismCount(); ++n)
      if (f.morMap[m] == g.morMap[n]) {
        Obj sx = objIndex[A.source(m)][B.source(n)];
        Obj tx = objIndex[A.target(m)][B.target(n)];
        require(sx != -1 && tx != -1, "catPullback: inconsistent functors");
        morIndex[{m, n}] = b.addMorphism(
            sx, tx, "(" + A.morphismName(m) + "," + B.morphismName(n) + ")");
        r.morPairs.emplace_back(m, n);
      }
  for (Obj x = 0; x < static_cast<Obj>(r.objPairs.size()); ++x) {
    auto [a, bb] = r.objPairs[x];
    b.setIdentity(x, morIndex.at({A.identity(a), B.identity(bb)}));
  }
  for (Mor s1 = 0; s1 < b.morphismCount(); ++s1) {
    for (Mor s2 = 0; s2 < b.morphismCount(); ++s2) {
      if (b.source(s2) != b.target(s1)) continue;
      auto [m1, n1] = r.morPairs[s1];
      auto [m2, n2] = r.morPairs[s2];
      b.setComposite(s2, s1,
                     morIndex.at({A.compose(m2, m1), B.compose(n2, n1)}));
    }
  }
  r.cat = b.build();
  r.toLeft.src = r.cat;
  r.toLeft.dst = f.src;
  r.toRight.src = r.cat;
  r.toRight.dst = g.src;
  for (auto& [a, bb] : r.objPairs) {
    r.toLeft.objMap.push_back(a);
    r.toRight.objMap.push_back(bb);
  }
  for (auto& [m, n] : r.morPairs) {
    r.toLeft.morMap.push_back(m);
    r.toRight.morMap.push_back(n);
  }
  return r;
}

Obj findInitialObject(const FinCat& c) {
  for (Obj x = 0; x < c.objectCount(); ++x) {
    bool ok = true;
    for (Obj y = 0; y < c.objectCount() && ok; ++y) {
      ok = c.hom(x, y).size() == 1;
    }
    if (ok) return x;
  }
  return -1;
}

Obj findTerminalObject(const FinCat& c) {
  for (Obj x = 0; x < c.objectCount(); ++x) {
    bool ok = true;
    for (Obj y = 0; y < c.objectCount() && ok; ++y) {
      ok = c.hom(y, x).size() == 1;
    }
    if (ok) return x;
  }
  return -1;
}

CatPi0 catPi0(const FinCat& c) {
  std::vector<int> parent(c.objectCount());
  for (Obj x = 0; x < c.objectCount(); ++x) parent[x] = x;
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  };
  for (Mor f = 0; f < c.morphismCount(); ++f) unite(c.source(f), c.target(f));
  CatPi0 r;
  r.label.resize(c.objectCount());
  std::vector<int> seen(c.objectCount(), -1);
  for (Obj x = 0; x < c.objectCount(); ++x) {
    int root = find(x);
    if (seen[root] < 0) seen[root] = r.count++;
    r.label[x] = seen[root];
  }
  return r;
}

}  // namespace catk
