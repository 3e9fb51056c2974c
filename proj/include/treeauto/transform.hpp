#pragma once

#include <string>
#include <vector>

#include "treeauto/classify.hpp"

namespace treeauto {

// Level restriction: the same states over the alphabet X^k (numbered
// lexicographically), root permutations induced on level k, transitions
// obtained by following the automaton along the k letters. Requires an
// automaton-closed presentation and d^k within the alphabet cap.
Presentation restrict_level(const Presentation& p, int k,
                            const Budget& budget = {});

// Transition closure of the seed states (automaton-closed presentations
// only). The identity is not a state and never appears.
std::vector<int> self_similar_closure(const Presentation& p,
                                      std::vector<int> seeds);

// Reduced-form check for a set Y of states: every member is finitary of
// depth <= 1, or has first-level sections in {itself} union the root
// permutation group of <Y>, with exactly one self-section.
struct ReducedFormDiagnosis {
  enum class Kind { FinitaryDepthOne, DirectedForm, Fails };
  struct PerState {
    int state = 0;
    Kind kind = Kind::Fails;
    int self_letter = -1;  // for DirectedForm
    std::string reason;    // for Fails
  };
  bool ok = false;
  std::vector<PerState> states;
};
ReducedFormDiagnosis is_reduced_form(const Presentation& p,
                                     const std::vector<int>& y,
                                     const Budget& budget = {},
                                     TrivialityCache* cache = nullptr);

// Word-level variant of the same conditions; accepts presentations whose
// transitions are arbitrary words (sections are then words too).
ReducedFormDiagnosis reduced_form_conditions(const Presentation& p,
                                             const std::vector<int>& y,
                                             const Budget& budget = {},
                                             TrivialityCache* cache = nullptr);

// Image of one distinguished generator under the level-k embedding into
// Sym(X^k) x H^(X^k): its level-k permutation and the tuple of sections
// expressed over the states of the transformed presentation.
struct GeneratorEmbedding {
  std::string label;
  Perm root;
  std::vector<GroupWord> sections;
};

// Reduced form of <generators>: k is the chosen level, h the restricted
// presentation over X^k (its state set is the closure z, reindexed), z the
// closure of the finitary/directed states inside p.
struct ReducedFormResult {
  int k = 1;
  Presentation h;
  std::vector<int> z;  // state indices in p, in closure order
  std::vector<GeneratorEmbedding> embedding;
};
ReducedFormResult reduced_form(const Presentation& p,
                               const std::vector<GroupWord>& generators,
                               const std::vector<std::string>& labels,
                               const Budget& budget = {},
                               TrivialityCache* cache = nullptr);

// For a presentation in reduced form: the non-trivial first-level sections
// of the directed members of Y, together with the wreath coordinates of each
// member of Y over that set.
struct DirectedCore {
  std::vector<GroupWord> z;
  std::vector<GeneratorEmbedding> embedding;
};
DirectedCore directed_core(const Presentation& p, const std::vector<int>& y,
                           const Budget& budget = {},
                           TrivialityCache* cache = nullptr);

}  // namespace treeauto
