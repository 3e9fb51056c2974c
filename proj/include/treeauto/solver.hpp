#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "treeauto/budget.hpp"
#include "treeauto/core.hpp"

namespace treeauto {

enum class Verdict { True, False, Unknown };

// Result of a semi-decision. Unknown only ever means a budget ran out; a
// False triviality verdict carries the vertex whose section has a non-trivial
// root permutation (the empty vertex means the root level itself).
struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::optional<TreeWord> witness;
  std::uint64_t budget_spent = 0;

  bool is_true() const { return verdict == Verdict::True; }
  bool is_false() const { return verdict == Verdict::False; }
  bool unknown() const { return verdict == Verdict::Unknown; }
};

// Optional cross-call cache of decided triviality verdicts, keyed by the
// freely reduced word. Get-or-insert is atomic; only decided verdicts are
// stored, so sharing the cache never changes an answer.
class TrivialityCache {
 public:
  std::optional<Decision> lookup(const GroupWord& w) const;
  void store(const GroupWord& w, const Decision& d);

 private:
  mutable std::mutex mu_;
  std::unordered_map<GroupWord, Decision, WordHash> map_;
};

// Coinductive word problem: w is trivial iff every reachable section has a
// trivial root permutation. Explores the section closure breadth-first and
// reports Unknown when the node budget runs out.
Decision is_trivial(const Presentation& p, const GroupWord& w,
                    const Budget& budget = {}, TrivialityCache* cache = nullptr);

Decision are_equal(const Presentation& p, const GroupWord& a,
                   const GroupWord& b, const Budget& budget = {},
                   TrivialityCache* cache = nullptr);

// Least n <= max_n with w^n trivial. False = certified absent below max_n.
struct OrderResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<int> order;
  std::uint64_t budget_spent = 0;
};
OrderResult order_up_to(const Presentation& p, const GroupWord& w, int max_n,
                        const Budget& budget = {},
                        TrivialityCache* cache = nullptr);

// The set of sections of w (w itself included, identity included when it
// occurs), as freely reduced words, with the letter-labelled edges between
// them. nodes[0] is w; edges[i][x] is the node index of the section of
// nodes[i] at letter x.
struct SectionClosure {
  std::vector<GroupWord> nodes;
  std::vector<std::vector<int>> edges;
  bool truncated = false;
  std::uint64_t explored = 0;
};
SectionClosure section_closure(const Presentation& p, const GroupWord& w,
                               const Budget& budget = {});

// Breadth-first search for a product of at most `radius` generator factors
// (generators and their inverses) semantically equal to target. Absence of a
// witness is not a proof of non-membership.
struct MemberWitness {
  std::vector<std::pair<int, int>> path;  // (generator index, sign)
  GroupWord word;
};
std::optional<MemberWitness> member_search(const Presentation& p,
                                           const GroupWord& target,
                                           const std::vector<GroupWord>& gens,
                                           int radius, const Budget& budget = {},
                                           TrivialityCache* cache = nullptr);

}  // namespace treeauto
