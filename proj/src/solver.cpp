#include "treeauto/solver.hpp"

#include <deque>

namespace treeauto {

std::optional<Decision> TrivialityCache::lookup(const GroupWord& w) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(w);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void TrivialityCache::store(const GroupWord& w, const Decision& d) {
  if (d.unknown()) return;
  std::lock_guard<std::mutex> lock(mu_);
  map_.emplace(w, d);
}

namespace {

struct ClosureNode {
  GroupWord word;
  int parent = -1;
  int letter = -1;
};

TreeWord path_to(const std::vector<ClosureNode>& nodes, int i) {
  std::vector<int> letters;
  for (int cur = i; cur > 0; cur = nodes[static_cast<std::size_t>(cur)].parent)
    letters.push_back(nodes[static_cast<std::size_t>(cur)].letter);
  std::reverse(letters.begin(), letters.end());
  return TreeWord(std::move(letters));
}

}  // namespace

Decision is_trivial(const Presentation& p, const GroupWord& w,
                    const Budget& budget, TrivialityCache* cache) {
  if (w.empty()) return {Verdict::True, std::nullopt, 0};
  if (cache) {
    if (auto hit = cache->lookup(w)) {
      Decision d = *hit;
      d.budget_spent = 0;
      return d;
    }
  }

  std::vector<ClosureNode> nodes;
  std::unordered_map<GroupWord, int, WordHash> seen;
  nodes.push_back({w, -1, -1});
  seen.emplace(w, 0);
  std::uint64_t explored = 0;

  auto conclude_false = [&](int bad, const TreeWord& tail) {
    // Every node on the path from the root to the bad one is non-trivial:
    // its section along the rest of the path is.
    TreeWord full = path_to(nodes, bad).concat(tail);
    if (cache) {
      int depth = static_cast<int>(full.level()) - tail.level();
      for (int cur = bad; cur >= 0;
           cur = nodes[static_cast<std::size_t>(cur)].parent) {
        std::vector<int> suffix(full.letters().begin() + depth,
                                full.letters().end());
        cache->store(nodes[static_cast<std::size_t>(cur)].word,
                     {Verdict::False, TreeWord(std::move(suffix)), 0});
        --depth;
      }
    }
    return Decision{Verdict::False, full, explored};
  };

  for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
    if (++explored > budget.closure_cap)
      return {Verdict::Unknown, std::nullopt, explored};
    GroupWord cur = nodes[qi].word;
    if (!root_perm(p, cur).is_identity())
      return conclude_false(static_cast<int>(qi), TreeWord{});
    for (int x = 0; x < p.degree(); ++x) {
      GroupWord child = step(p, cur, x).second;
      if (child.empty()) continue;
      if (seen.contains(child)) continue;
      if (cache) {
        if (auto hit = cache->lookup(child)) {
          if (hit->is_true()) {
            seen.emplace(child, -1);
            continue;
          }
          nodes.push_back({child, static_cast<int>(qi), x});
          return conclude_false(static_cast<int>(nodes.size()) - 1,
                                hit->witness.value_or(TreeWord{}));
        }
      }
      seen.emplace(child, static_cast<int>(nodes.size()));
      nodes.push_back({child, static_cast<int>(qi), x});
    }
  }

  if (cache)
    for (const ClosureNode& n : nodes)
      cache->store(n.word, {Verdict::True, std::nullopt, 0});
  return {Verdict::True, std::nullopt, explored};
}

Decision are_equal(const Presentation& p, const GroupWord& a,
                   const GroupWord& b, const Budget& budget,
                   TrivialityCache* cache) {
  return is_trivial(p, a * b.inverse(), budget, cache);
}

OrderResult order_up_to(const Presentation& p, const GroupWord& w, int max_n,
                        const Budget& budget, TrivialityCache* cache) {
  OrderResult out;
  if (w.empty()) {
    out.verdict = Verdict::True;
    out.order = 1;
    return out;
  }
  // The root permutation's order divides any power that is trivial, so only
  // its multiples need the full search.
  std::uint64_t step_n =
      root_perm(p, w).order_saturated(static_cast<std::uint64_t>(max_n));
  for (std::uint64_t n = step_n; n <= static_cast<std::uint64_t>(max_n);
       n += step_n) {
    Decision d = is_trivial(p, w.pow(static_cast<int>(n)), budget, cache);
    out.budget_spent += d.budget_spent;
    if (d.is_true()) {
      out.verdict = Verdict::True;
      out.order = static_cast<int>(n);
      return out;
    }
    if (d.unknown()) {
      out.verdict = Verdict::Unknown;
      return out;
    }
  }
  out.verdict = Verdict::False;
  return out;
}

SectionClosure section_closure(const Presentation& p, const GroupWord& w,
                               const Budget& budget) {
  SectionClosure out;
  std::unordered_map<GroupWord, int, WordHash> index;
  out.nodes.push_back(w);
  index.emplace(w, 0);
  for (std::size_t qi = 0; qi < out.nodes.size(); ++qi) {
    if (++out.explored > budget.closure_cap) {
      out.truncated = true;
      out.edges.resize(qi);  // keep only fully expanded nodes
      return out;
    }
    GroupWord cur = out.nodes[qi];
    std::vector<int> row(static_cast<std::size_t>(p.degree()), -1);
    for (int x = 0; x < p.degree(); ++x) {
      GroupWord child = step(p, cur, x).second;
      auto [it, inserted] =
          index.emplace(child, static_cast<int>(out.nodes.size()));
      if (inserted) out.nodes.push_back(child);
      row[static_cast<std::size_t>(x)] = it->second;
    }
    out.edges.push_back(std::move(row));
  }
  return out;
}

std::optional<MemberWitness> member_search(const Presentation& p,
                                           const GroupWord& target,
                                           const std::vector<GroupWord>& gens,
                                           int radius, const Budget& budget,
                                           TrivialityCache* cache) {
  struct Node {
    GroupWord word;
    std::vector<std::pair<int, int>> path;
  };
  Perm target_root = root_perm(p, target);
  std::deque<Node> queue;
  std::unordered_map<GroupWord, bool, WordHash> seen;
  queue.push_back({GroupWord{}, {}});
  seen.emplace(GroupWord{}, true);
  std::uint64_t explored = 0;
  while (!queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    if (++explored > budget.closure_cap) return std::nullopt;
    if (root_perm(p, cur.word) == target_root &&
        are_equal(p, cur.word, target, budget, cache).is_true())
      return MemberWitness{cur.path, cur.word};
    if (static_cast<int>(cur.path.size()) >= radius) continue;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (int sign : {1, -1}) {
        GroupWord next =
            cur.word * (sign > 0 ? gens[g] : gens[g].inverse());
        if (!seen.emplace(next, true).second) continue;
        auto path = cur.path;
        path.emplace_back(static_cast<int>(g), sign);
        queue.push_back({std::move(next), std::move(path)});
      }
    }
  }
  return std::nullopt;
}

}  // namespace treeauto
