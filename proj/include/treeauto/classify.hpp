#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treeauto/solver.hpp"

namespace treeauto {

// Finitary: all sections at some level are trivial; depth is the least such
// level. False carries a vertex whose section recurs non-trivially.
struct FinitaryResult {
  Decision decision;
  std::optional<int> depth;
};
FinitaryResult is_finitary(const Presentation& p, const GroupWord& w,
                           int cap = -1, const Budget& budget = {},
                           TrivialityCache* cache = nullptr);

// Directed: at the least period k some unique vertex of level k carries the
// element itself as its section and every other level-k section is finitary.
// A finitary element is never directed.
struct DirectedResult {
  Decision decision;
  std::optional<int> period;
  std::optional<TreeWord> active_vertex;
  bool strongly_directed = false;  // the other sections are trivial
  bool strongly_active = false;    // w moves its active vertex
};
DirectedResult is_directed(const Presentation& p, const GroupWord& w,
                           int cap = -1, const Budget& budget = {},
                           TrivialityCache* cache = nullptr);

// Odometer: the root permutation is a full d-cycle, exactly one first-level
// section equals the element itself, and the remaining sections are trivial.
bool is_odometer(const Presentation& p, const GroupWord& w,
                 const Budget& budget = {}, TrivialityCache* cache = nullptr);

// Number of vertices with non-trivial section, per level 1..max_level.
std::vector<std::uint64_t> activity_count(const Presentation& p,
                                          const GroupWord& w, int max_level,
                                          const Budget& budget = {},
                                          TrivialityCache* cache = nullptr);

// Bounded and finite-state: at some level m every section is finitary or
// directed; witness_level is the least such m found.
struct BoundedResult {
  Decision decision;
  std::optional<int> witness_level;
};
BoundedResult is_bounded_finite_state(const Presentation& p,
                                      const GroupWord& w, int cap = -1,
                                      const Budget& budget = {},
                                      TrivialityCache* cache = nullptr);

struct ElementClass {
  FinitaryResult finitary;
  DirectedResult directed;
  bool odometer = false;
  BoundedResult bounded_finite_state;
};
ElementClass classify_element(const Presentation& p, const GroupWord& w,
                              const Budget& budget = {},
                              TrivialityCache* cache = nullptr);

}  // namespace treeauto
