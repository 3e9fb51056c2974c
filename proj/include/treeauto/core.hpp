#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "treeauto/budget.hpp"
#include "treeauto/presentation.hpp"
#include "treeauto/types.hpp"

namespace treeauto {

// One level of the recursion: image of the letter under w together with the
// section of w at that letter. For a product the rightmost factor is applied
// first, and sections compose by  (h k)_x = h_{k(x)} k_x.
std::pair<int, GroupWord> step(const Presentation& p, const GroupWord& w,
                               int letter);

// Image of a vertex under the automorphism given by w.
TreeWord act(const Presentation& p, const GroupWord& w, const TreeWord& v);

// Section (remaining action below v) of w at the vertex v.
GroupWord section(const Presentation& p, const GroupWord& w,
                  const TreeWord& v);

// Permutation induced on the first level.
Perm root_perm(const Presentation& p, const GroupWord& w);

// Permutation induced on level n, letters of X^n numbered lexicographically:
// (x_1..x_n) -> sum x_i d^(n-i). Throws BudgetError when d^n exceeds the
// level-table budget.
Perm level_perm(const Presentation& p, const GroupWord& w, int n,
                const Budget& budget = {});

// Lexicographic numbering helpers for vertices of a fixed level.
std::uint64_t tree_index(int degree, const TreeWord& v);
TreeWord tree_word(int degree, std::uint64_t index, int level);

// d^n when it stays within cap.
std::optional<std::uint64_t> checked_pow(int base, int exp,
                                         std::uint64_t cap);

// Elements of the permutation group generated by gens, identity first, in
// breadth-first product order. Throws BudgetError past cap elements.
std::vector<Perm> perm_closure(const std::vector<Perm>& gens,
                               std::uint64_t cap);

}  // namespace treeauto
