#include "treeauto/presentation.hpp"

#include <cctype>

#include "treeauto/errors.hpp"

namespace treeauto {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Presentation::Presentation(Alphabet alphabet, std::vector<State> states)
    : alphabet_(alphabet), states_(std::move(states)) {
  if (alphabet_.size < 2) throw Error("alphabet size must be at least 2");
  if (states_.empty()) throw Error("presentation needs at least one state");
  for (int i = 0; i < state_count(); ++i) {
    const State& s = states_[static_cast<std::size_t>(i)];
    if (!valid_name(s.name))
      throw Error("invalid state name \"" + s.name + "\"");
    if (!index_.emplace(s.name, i).second)
      throw Error("duplicate state name \"" + s.name + "\"");
    if (s.root.degree() != alphabet_.size)
      throw Error("state \"" + s.name + "\": root permutation degree " +
                  std::to_string(s.root.degree()) + " does not match alphabet");
    if (static_cast<int>(s.transitions.size()) != alphabet_.size)
      throw Error("state \"" + s.name + "\": expected " +
                  std::to_string(alphabet_.size) + " transitions, got " +
                  std::to_string(s.transitions.size()));
    for (const GroupWord& w : s.transitions)
      for (const Factor& f : w.factors())
        if (f.state < 0 || f.state >= state_count())
          throw Error("state \"" + s.name + "\": transition references "
                      "unknown state index " + std::to_string(f.state));
  }
  root_inverses_.reserve(states_.size());
  for (const State& s : states_) {
    root_inverses_.push_back(s.root.inverse());
    for (const GroupWord& w : s.transitions)
      if (w.size() > 1 || (w.size() == 1 && w.factors()[0].sign < 0))
        automaton_closed_ = false;
  }
}

std::optional<int> Presentation::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Presentation::require(std::string_view name) const {
  auto found = find(name);
  if (!found) throw Error("unknown state name \"" + std::string(name) + "\"");
  return *found;
}

}  // namespace treeauto
