#include "treeauto/classify.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treeauto/core.hpp"
#include "treeauto/errors.hpp"

namespace treeauto {

namespace {

// One level of the section profile: distinct section words with multiplicity
// and one representative vertex each. The representative is only meaningful
// when the count is 1, which is the only case callers rely on.
struct ProfileEntry {
  std::uint64_t count = 0;
  TreeWord rep;
};
using Profile = std::unordered_map<GroupWord, ProfileEntry, WordHash>;

Profile profile_root(const GroupWord& w) {
  Profile out;
  out.emplace(w, ProfileEntry{1, TreeWord{}});
  return out;
}

Profile profile_next(const Presentation& p, const Profile& cur) {
  Profile out;
  for (const auto& [word, entry] : cur) {
    for (int x = 0; x < p.degree(); ++x) {
      GroupWord child = step(p, word, x).second;
      auto [it, fresh] = out.emplace(child, ProfileEntry{0, TreeWord{}});
      if (fresh) it->second.rep = entry.rep.concat(TreeWord({x}));
      it->second.count += entry.count;
    }
  }
  return out;
}

// Shortest letter path from the closure root to node target.
TreeWord closure_path(const SectionClosure& sc, std::size_t target) {
  std::vector<int> parent(sc.nodes.size(), -1);
  std::vector<int> via(sc.nodes.size(), -1);
  std::vector<std::size_t> queue = {0};
  parent[0] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t u = queue[qi];
    if (u == target) break;
    if (u >= sc.edges.size()) continue;
    for (int x = 0; x < static_cast<int>(sc.edges[u].size()); ++x) {
      std::size_t v = static_cast<std::size_t>(sc.edges[u][x]);
      if (v == 0 || parent[v] >= 0) continue;
      parent[v] = static_cast<int>(u);
      via[v] = x;
      queue.push_back(v);
    }
  }
  std::vector<int> letters;
  for (std::size_t cur = target; cur != 0;
       cur = static_cast<std::size_t>(parent[cur]))
    letters.push_back(via[cur]);
  std::reverse(letters.begin(), letters.end());
  return TreeWord(std::move(letters));
}

}  // namespace

FinitaryResult is_finitary(const Presentation& p, const GroupWord& w, int cap,
                           const Budget& budget, TrivialityCache* cache) {
  if (cap < 0) cap = budget.classify_cap;
  FinitaryResult out;
  SectionClosure sc = section_closure(p, w, budget);
  out.decision.budget_spent = sc.explored;

  // Semantic triviality per closure node.
  std::size_t n = sc.nodes.size();
  std::vector<char> nontrivial(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Decision d = is_trivial(p, sc.nodes[i], budget, cache);
    out.decision.budget_spent += d.budget_spent;
    if (d.unknown()) {
      out.decision.verdict = Verdict::Unknown;
      return out;
    }
    nontrivial[i] = d.is_false() ? 1 : 0;
  }

  // Nodes from which a non-trivial node is reachable. Only fully expanded
  // nodes (those with an edge row) have out-edges recorded.
  std::size_t expanded = sc.edges.size();
  std::vector<std::vector<int>> rev(n);
  for (std::size_t u = 0; u < expanded; ++u)
    for (int v : sc.edges[u]) rev[static_cast<std::size_t>(v)].push_back(
        static_cast<int>(u));
  std::vector<char> reaches(n, 0);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i)
    if (nontrivial[i]) {
      reaches[i] = 1;
      queue.push_back(i);
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int u : rev[queue[qi]])
      if (!reaches[static_cast<std::size_t>(u)]) {
        reaches[static_cast<std::size_t>(u)] = 1;
        queue.push_back(static_cast<std::size_t>(u));
      }

  if (!reaches[0]) {
    // w is trivial below every vertex, hence trivial: depth 1.
    out.decision.verdict = Verdict::True;
    out.depth = 1;
    return out;
  }

  // A cycle through the reaching subgraph feeds a non-trivial section back
  // into itself, so sections stay non-trivial at every depth.
  std::vector<int> colour(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<std::size_t, int>> stack;
  stack.emplace_back(0, 0);
  colour[0] = 1;
  std::size_t cycle_node = n;
  while (!stack.empty() && cycle_node == n) {
    auto& [u, xi] = stack.back();
    if (u >= expanded || xi >= p.degree()) {
      colour[u] = 2;
      stack.pop_back();
      continue;
    }
    std::size_t v = static_cast<std::size_t>(sc.edges[u][xi]);
    ++xi;
    if (!reaches[v]) continue;
    if (colour[v] == 1) {
      cycle_node = v;
      break;
    }
    if (colour[v] == 0) {
      colour[v] = 1;
      stack.emplace_back(v, 0);
    }
  }
  if (cycle_node < n) {
    out.decision.verdict = Verdict::False;
    out.decision.witness = closure_path(sc, cycle_node);
    return out;
  }

  if (sc.truncated) {
    out.decision.verdict = Verdict::Unknown;
    return out;
  }

  // Acyclic case: the longest root path into a non-trivial node bounds the
  // last level with activity, so the depth is one past it. Not truncated, so
  // every node is expanded.
  std::vector<int> indeg(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (!reaches[u]) continue;
    for (int v : sc.edges[u])
      if (reaches[static_cast<std::size_t>(v)])
        ++indeg[static_cast<std::size_t>(v)];
  }
  std::vector<int> longest(n, -1);
  longest[0] = 0;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (reaches[i] && indeg[i] == 0) order.push_back(i);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    std::size_t u = order[qi];
    for (int vi : sc.edges[u]) {
      std::size_t v = static_cast<std::size_t>(vi);
      if (!reaches[v]) continue;
      if (longest[u] >= 0) longest[v] = std::max(longest[v], longest[u] + 1);
      if (--indeg[v] == 0) order.push_back(v);
    }
  }
  int deepest = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (nontrivial[i] && longest[i] > deepest) deepest = longest[i];
  int depth = deepest + 1;
  if (depth > cap) {
    out.decision.verdict = Verdict::Unknown;
    return out;
  }
  out.decision.verdict = Verdict::True;
  out.depth = depth;
  return out;
}

DirectedResult is_directed(const Presentation& p, const GroupWord& w, int cap,
                           const Budget& budget, TrivialityCache* cache) {
  if (cap < 0) cap = budget.classify_cap;
  DirectedResult out;
  FinitaryResult fin = is_finitary(p, w, cap, budget, cache);
  out.decision.budget_spent += fin.decision.budget_spent;
  if (fin.decision.is_true()) {
    out.decision.verdict = Verdict::False;
    return out;
  }

  Profile profile = profile_root(w);
  for (int k = 1; k <= cap; ++k) {
    profile = profile_next(p, profile);

    // Locate sections equal to w itself.
    std::uint64_t selves = 0;
    const GroupWord* self_word = nullptr;
    const ProfileEntry* self_entry = nullptr;
    bool level_undecided = false;
    for (const auto& [word, entry] : profile) {
      bool same;
      if (word == w) {
        same = true;
      } else {
        Decision eq = are_equal(p, word, w, budget, cache);
        out.decision.budget_spent += eq.budget_spent;
        if (eq.unknown()) {
          level_undecided = true;
          continue;
        }
        same = eq.is_true();
      }
      if (same) {
        selves += entry.count;
        self_word = &word;
        self_entry = &entry;
      }
    }
    if (level_undecided || selves != 1) continue;

    // All other level-k sections must be finitary.
    bool ok = true;
    bool all_trivial = true;
    for (const auto& [word, entry] : profile) {
      (void)entry;
      if (&word == self_word) continue;
      FinitaryResult f = is_finitary(p, word, cap, budget, cache);
      out.decision.budget_spent += f.decision.budget_spent;
      if (!f.decision.is_true()) {
        ok = false;
        break;
      }
      // Strongly directed needs the other sections trivial, not just rooted.
      if (all_trivial) {
        Decision triv = is_trivial(p, word, budget, cache);
        out.decision.budget_spent += triv.budget_spent;
        if (!triv.is_true()) all_trivial = false;
      }
    }
    if (!ok) continue;

    TreeWord active = self_entry->rep;
    out.decision.verdict = Verdict::True;
    out.period = k;
    out.active_vertex = active;
    out.strongly_directed = all_trivial;
    out.strongly_active = !(act(p, w, active) == active);
    return out;
  }
  out.decision.verdict = Verdict::Unknown;
  return out;
}

bool is_odometer(const Presentation& p, const GroupWord& w,
                 const Budget& budget, TrivialityCache* cache) {
  Perm root = root_perm(p, w);
  auto cycles = root.cycles(false);
  if (cycles.size() != 1 ||
      static_cast<int>(cycles.front().size()) != p.degree())
    return false;
  int selves = 0;
  for (int x = 0; x < p.degree(); ++x) {
    GroupWord s = step(p, w, x).second;
    Decision eq = are_equal(p, s, w, budget, cache);
    if (eq.is_true()) {
      ++selves;
      continue;
    }
    Decision triv = is_trivial(p, s, budget, cache);
    if (!triv.is_true()) return false;
  }
  return selves == 1;
}

std::vector<std::uint64_t> activity_count(const Presentation& p,
                                          const GroupWord& w, int max_level,
                                          const Budget& budget,
                                          TrivialityCache* cache) {
  if (max_level < 1) throw Error("activity_count: max_level must be >= 1");
  if (!checked_pow(p.degree(), max_level, budget.level_table_cap))
    throw BudgetError("activity_count: level exceeds the table budget");
  std::vector<std::uint64_t> out;
  Profile profile = profile_root(w);
  for (int level = 1; level <= max_level; ++level) {
    profile = profile_next(p, profile);
    std::uint64_t active = 0;
    for (const auto& [word, entry] : profile) {
      Decision triv = is_trivial(p, word, budget, cache);
      if (triv.unknown())
        throw BudgetError("activity_count: triviality undecided within budget");
      if (triv.is_false()) active += entry.count;
    }
    out.push_back(active);
  }
  return out;
}

BoundedResult is_bounded_finite_state(const Presentation& p,
                                      const GroupWord& w, int cap,
                                      const Budget& budget,
                                      TrivialityCache* cache) {
  if (cap < 0) cap = budget.classify_cap;
  BoundedResult out;
  // Tri-state memo: is this section finitary or directed?
  std::unordered_map<GroupWord, Verdict, WordHash> memo;
  auto tame = [&](const GroupWord& word) {
    auto it = memo.find(word);
    if (it != memo.end()) return it->second;
    Verdict v = Verdict::Unknown;
    FinitaryResult f = is_finitary(p, word, cap, budget, cache);
    out.decision.budget_spent += f.decision.budget_spent;
    if (f.decision.is_true()) {
      v = Verdict::True;
    } else {
      DirectedResult d = is_directed(p, word, cap, budget, cache);
      out.decision.budget_spent += d.decision.budget_spent;
      if (d.decision.is_true())
        v = Verdict::True;
      else if (f.decision.is_false() && d.decision.is_false())
        v = Verdict::False;
    }
    memo.emplace(word, v);
    return v;
  };

  Profile profile = profile_root(w);
  for (int m = 1; m <= cap; ++m) {
    profile = profile_next(p, profile);
    bool all = true;
    for (const auto& [word, entry] : profile) {
      (void)entry;
      if (tame(word) != Verdict::True) {
        all = false;
        break;
      }
    }
    if (all) {
      out.decision.verdict = Verdict::True;
      out.witness_level = m;
      return out;
    }
  }
  out.decision.verdict = Verdict::Unknown;
  return out;
}

ElementClass classify_element(const Presentation& p, const GroupWord& w,
                              const Budget& budget, TrivialityCache* cache) {
  TrivialityCache local;
  TrivialityCache* c = cache ? cache : &local;
  ElementClass out;
  out.finitary = is_finitary(p, w, -1, budget, c);
  out.directed = is_directed(p, w, -1, budget, c);
  out.odometer = is_odometer(p, w, budget, c);
  out.bounded_finite_state = is_bounded_finite_state(p, w, -1, budget, c);
  return out;
}

}  // namespace treeauto
