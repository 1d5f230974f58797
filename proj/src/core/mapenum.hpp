#pragma once

#include <cstdint>
#include <vector>

namespace catk::detail {

// Backtracking enumeration of slot-group assignments under unary forcing
// rules. A family assigns, for each group g, a value in 0..valueCard[g]-1 to
// each of domainCard[g] slots. Rules fire when their trigger slot is set and
// force one other slot, so every rule is enforced on any complete family
// regardless of assignment order. Naturality systems fit this shape with one
// rule per (morphism, element).
struct MapEnumProblem {
  std::vector<int> domainCard;
  std::vector<int> valueCard;

  struct Rule {
    int from = 0, to = 0;
    // Setting slot (from, e) to v forces slot (to, elemMap[e]) to valMap[v].
    std::vector<int> elemMap;
    std::vector<int> valMap;
  };
  std::vector<Rule> rules;

  // Optional per-slot value masks; empty means unrestricted. Used to pin
  // slots (singleton mask) or restrict them to a preimage.
  std::vector<std::vector<std::vector<char>>> allowed;
};

struct MapEnumResult {
  // Per solution, per group, per slot; empty when countOnly.
  std::vector<std::vector<std::vector<int>>> families;
  std::uint64_t count = 0;
  // False when the solution limit cut the search short.
  bool complete = true;
};

// Solutions are produced in lexicographic order of the flattened assignment.
// limit = 0 means unbounded.
MapEnumResult enumerateFamilies(const MapEnumProblem& p, std::uint64_t limit,
                                bool countOnly = false);

}  // namespace catk::detail
