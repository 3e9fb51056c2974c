#include "treeauto/core.hpp"

#include <set>
#include <string>
#include <utility>

#include "treeauto/errors.hpp"

namespace treeauto {

namespace {

void check_letter(const Presentation& p, int letter) {
  if (letter < 0 || letter >= p.degree())
    throw Error("letter " + std::to_string(letter) + " out of range for "
                "alphabet of size " + std::to_string(p.degree()));
}

}  // namespace

std::pair<int, GroupWord> step(const Presentation& p, const GroupWord& w,
                               int letter) {
  check_letter(p, letter);
  // Peel factors from the right: with w = f_1..f_n, the section at x is
  // (f_1..f_{n-1})_{f_n(x)} (f_n)_x, so per-factor sections are collected in
  // word order while the letter travels left.
  const auto& factors = w.factors();
  std::vector<std::pair<const GroupWord*, bool>> parts;  // (word, invert)
  parts.reserve(factors.size());
  int c = letter;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const State& s = p.state(it->state);
    if (it->sign > 0) {
      parts.emplace_back(&s.transitions[static_cast<std::size_t>(c)], false);
      c = s.root(c);
    } else {
      c = p.root_inverse(it->state)(c);
      parts.emplace_back(&s.transitions[static_cast<std::size_t>(c)], true);
    }
  }
  GroupWord out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (it->second)
      out.append(it->first->inverse());
    else
      out.append(*it->first);
  }
  return {c, std::move(out)};
}

TreeWord act(const Presentation& p, const GroupWord& w, const TreeWord& v) {
  TreeWord out;
  GroupWord cur = w;
  for (int i = 0; i < v.level(); ++i) {
    auto [image, sec] = step(p, cur, v[i]);
    out.push_back(image);
    cur = std::move(sec);
  }
  return out;
}

GroupWord section(const Presentation& p, const GroupWord& w,
                  const TreeWord& v) {
  GroupWord cur = w;
  for (int i = 0; i < v.level(); ++i) cur = step(p, cur, v[i]).second;
  return cur;
}

Perm root_perm(const Presentation& p, const GroupWord& w) {
  Perm out = Perm::identity(p.degree());
  for (const Factor& f : w.factors()) {
    const Perm& r =
        f.sign > 0 ? p.state(f.state).root : p.root_inverse(f.state);
    out = out.compose(r);
  }
  return out;
}

Perm level_perm(const Presentation& p, const GroupWord& w, int n,
                const Budget& budget) {
  if (n < 0) throw Error("level must be non-negative");
  auto size = checked_pow(p.degree(), n, budget.level_table_cap);
  if (!size)
    throw BudgetError("level table d^" + std::to_string(n) +
                      " exceeds the configured budget");
  std::vector<int> images(static_cast<std::size_t>(*size));
  for (std::uint64_t i = 0; i < *size; ++i) {
    TreeWord v = tree_word(p.degree(), i, n);
    images[static_cast<std::size_t>(i)] =
        static_cast<int>(tree_index(p.degree(), act(p, w, v)));
  }
  return Perm(std::move(images));
}

std::uint64_t tree_index(int degree, const TreeWord& v) {
  std::uint64_t out = 0;
  for (int i = 0; i < v.level(); ++i)
    out = out * static_cast<std::uint64_t>(degree) +
          static_cast<std::uint64_t>(v[i]);
  return out;
}

TreeWord tree_word(int degree, std::uint64_t index, int level) {
  std::vector<int> letters(static_cast<std::size_t>(level));
  for (int i = level - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] =
        static_cast<int>(index % static_cast<std::uint64_t>(degree));
    index /= static_cast<std::uint64_t>(degree);
  }
  return TreeWord(std::move(letters));
}

std::optional<std::uint64_t> checked_pow(int base, int exp,
                                         std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > cap / static_cast<std::uint64_t>(base)) return std::nullopt;
    out *= static_cast<std::uint64_t>(base);
  }
  if (out > cap) return std::nullopt;
  return out;
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens,
                               std::uint64_t cap) {
  if (gens.empty()) throw Error("perm_closure: no generators");
  int degree = gens.front().degree();
  for (const Perm& g : gens) {
    if (g.degree() != degree)
      throw Error("perm_closure: mixed permutation degrees");
  }
  std::vector<Perm> out;
  std::set<std::vector<int>> seen;
  out.push_back(Perm::identity(degree));
  seen.insert(out.front().images());
  for (std::size_t next = 0; next < out.size(); ++next) {
    Perm cur = out[next];
    for (const Perm& g : gens) {
      Perm prod = cur.compose(g);
      if (seen.insert(prod.images()).second) {
        if (out.size() >= cap)
          throw BudgetError("perm_closure: group exceeds element cap");
        out.push_back(std::move(prod));
      }
    }
  }
  return out;
}

}  // namespace treeauto
