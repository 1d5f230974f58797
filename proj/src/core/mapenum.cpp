#include "mapenum.hpp"

#include <utility>

#include "common.hpp"

namespace catk::detail {
namespace {

struct Searcher {
  const MapEnumProblem& p;
  MapEnumResult& out;
  std::uint64_t limit;
  bool countOnly;

  std::vector<int> slotBase;            // per group
  std::vector<std::pair<int, int>> loc; // flat slot -> (group, elem)
  std::vector<int> val;                 // flat slot -> value or -1
  std::vector<std::vector<int>> rulesFrom;
  std::vector<int> trail;

  bool allowedAt(int g, int e, int v) const {
    return p.allowed.empty() || p.allowed[g].empty() ||
           p.allowed[g][e].empty() || p.allowed[g][e][v];
  }

  // Applies one assignment plus its forced consequences; false on conflict.
  bool propagate(int slot, int v) {
    std::vector<std::pair<int, int>> queue{{slot, v}};
    while (!queue.empty()) {
      auto [s, w] = queue.back();
      queue.pop_back();
      if (val[s] != -1) {
        if (val[s] != w) return false;
        continue;
      }
      auto [g, e] = loc[s];
      if (w >= p.valueCard[g] || !allowedAt(g, e, w)) return false;
      val[s] = w;
      trail.push_back(s);
      for (int ri : rulesFrom[g]) {
        const auto& r = p.rules[ri];
        queue.emplace_back(slotBase[r.to] + r.elemMap[e], r.valMap[w]);
      }
    }
    return true;
  }

  void undoTo(std::size_t mark) {
    while (trail.size() > mark) {
      val[trail.back()] = -1;
      trail.pop_back();
    }
  }

  // Returns false when the solution limit says to stop searching.
  bool search(int pos) {
    int total = static_cast<int>(val.size());
    while (pos < total && val[pos] != -1) ++pos;
    if (pos == total) {
      ++out.count;
      if (!countOnly) {
        std::vector<std::vector<int>> family(p.domainCard.size());
        for (std::size_t g = 0; g < p.domainCard.size(); ++g) {
          family[g].assign(val.begin() + slotBase[g],
                           val.begin() + slotBase[g] + p.domainCard[g]);
        }
        out.families.push_back(std::move(family));
      }
      if (limit && out.count >= limit) {
        out.complete = false;
        return false;
      }
      return true;
    }
    auto [g, e] = loc[pos];
    for (int v = 0; v < p.valueCard[g]; ++v) {
      if (!allowedAt(g, e, v)) continue;
      std::size_t mark = trail.size();
      bool ok = propagate(pos, v);
      if (ok && !search(pos)) return false;
      undoTo(mark);
    }
    return true;
  }
};

}  // namespace

MapEnumResult enumerateFamilies(const MapEnumProblem& p, std::uint64_t limit,
                                bool countOnly) {
  std::size_t G = p.domainCard.size();
  require(p.valueCard.size() == G, "enumerateFamilies: group shape mismatch");
  for (const auto& r : p.rules) {
    require(r.from >= 0 && r.from < static_cast<int>(G) && r.to >= 0 &&
                r.to < static_cast<int>(G),
            "enumerateFamilies: rule group out of range");
    require(static_cast<int>(r.elemMap.size()) == p.domainCard[r.from] &&
                static_cast<int>(r.valMap.size()) == p.valueCard[r.from],
            "enumerateFamilies: rule table shape mismatch");
    for (int e : r.elemMap)
      require(e >= 0 && e < p.domainCard[r.to],
              "enumerateFamilies: rule element out of range");
    for (int v : r.valMap)
      require(v >= 0 && v < p.valueCard[r.to],
              "enumerateFamilies: rule value out of range");
  }

  MapEnumResult out;
  Searcher s{p, out, limit, countOnly, {}, {}, {}, {}, {}};
  s.slotBase.resize(G);
  int total = 0;
  for (std::size_t g = 0; g < G; ++g) {
    s.slotBase[g] = total;
    total += p.domainCard[g];
    for (int e = 0; e < p.domainCard[g]; ++e)
      s.loc.emplace_back(static_cast<int>(g), e);
  }
  s.val.assign(total, -1);
  s.rulesFrom.resize(G);
  for (std::size_t ri = 0; ri < p.rules.size(); ++ri)
    s.rulesFrom[p.rules[ri].from].push_back(static_cast<int>(ri));
  s.search(0);
  return out;
}

}  // namespace catk::detail
