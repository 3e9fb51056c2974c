#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "treeauto/types.hpp"

namespace treeauto {

// One named state of a wreath recursion: a root permutation and one
// transition word per letter, so that  s(x w) = root(x) . transitions[x](w).
struct State {
  std::string name;
  Perm root;
  std::vector<GroupWord> transitions;
};

// An immutable, validated system of states over a common alphabet. Words are
// index-based, so a GroupWord only has meaning relative to the presentation
// it was built for.
class Presentation {
 public:
  Presentation(Alphabet alphabet, std::vector<State> states);

  int degree() const { return alphabet_.size; }
  const Alphabet& alphabet() const { return alphabet_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  const State& state(int i) const { return states_[static_cast<std::size_t>(i)]; }
  const std::vector<State>& states() const { return states_; }

  std::optional<int> find(std::string_view name) const;
  int require(std::string_view name) const;  // throws Error on miss

  // True when every transition is empty or a single non-inverted state, i.e.
  // the presentation is a Mealy automaton.
  bool automaton_closed() const { return automaton_closed_; }

  const Perm& root_inverse(int state) const {
    return root_inverses_[static_cast<std::size_t>(state)];
  }

 private:
  Alphabet alphabet_;
  std::vector<State> states_;
  std::unordered_map<std::string, int> index_;
  std::vector<Perm> root_inverses_;
  bool automaton_closed_ = true;
};

}  // namespace treeauto
