#include "treeauto/transform.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "treeauto/core.hpp"
#include "treeauto/errors.hpp"

namespace treeauto {

namespace {

void check_states(const Presentation& p, const std::vector<int>& y,
                  const char* who) {
  for (int s : y)
    if (s < 0 || s >= p.state_count())
      throw Error(std::string(who) + ": state index " + std::to_string(s) +
                  " out of range");
}

}  // namespace

Presentation restrict_level(const Presentation& p, int k,
                            const Budget& budget) {
  if (k < 1) throw Error("restrict_level: level must be >= 1");
  if (!p.automaton_closed())
    throw PreconditionError(
        "restrict_level: presentation is not automaton-closed");
  auto dk = checked_pow(p.degree(), k,
                        static_cast<std::uint64_t>(budget.rk_alphabet_cap));
  if (!dk)
    throw BudgetError("restrict_level: alphabet of size " +
                      std::to_string(p.degree()) + "^" + std::to_string(k) +
                      " exceeds the cap");
  int big = static_cast<int>(*dk);

  std::vector<State> states;
  states.reserve(static_cast<std::size_t>(p.state_count()));
  for (int si = 0; si < p.state_count(); ++si) {
    GroupWord w = GroupWord::state(si);
    Perm root = level_perm(p, w, k, budget);
    std::vector<GroupWord> transitions;
    transitions.reserve(static_cast<std::size_t>(big));
    for (int v = 0; v < big; ++v)
      transitions.push_back(
          section(p, w, tree_word(p.degree(), static_cast<std::uint64_t>(v),
                                  k)));
    states.push_back(
        State{p.state(si).name, std::move(root), std::move(transitions)});
  }
  return Presentation(Alphabet{big}, std::move(states));
}

std::vector<int> self_similar_closure(const Presentation& p,
                                      std::vector<int> seeds) {
  if (!p.automaton_closed())
    throw PreconditionError(
        "self_similar_closure: presentation is not automaton-closed");
  check_states(p, seeds, "self_similar_closure");
  std::vector<char> seen(static_cast<std::size_t>(p.state_count()), 0);
  std::vector<int> out;
  for (int s : seeds)
    if (!seen[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = 1;
      out.push_back(s);
    }
  for (std::size_t qi = 0; qi < out.size(); ++qi)
    for (const GroupWord& t : p.state(out[qi]).transitions) {
      if (t.empty()) continue;
      int c = t.factors().front().state;
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        out.push_back(c);
      }
    }
  return out;
}

ReducedFormDiagnosis reduced_form_conditions(const Presentation& p,
                                             const std::vector<int>& y,
                                             const Budget& budget,
                                             TrivialityCache* cache) {
  check_states(p, y, "reduced_form_conditions");
  TrivialityCache local;
  if (!cache) cache = &local;
  ReducedFormDiagnosis diag;
  diag.ok = true;
  if (y.empty()) return diag;

  std::vector<Perm> roots;
  for (int s : y) roots.push_back(p.state(s).root);
  std::set<std::vector<int>> pi;
  for (const Perm& g : perm_closure(roots, budget.perm_group_cap))
    pi.insert(g.images());

  for (int s : y) {
    const State& st = p.state(s);
    GroupWord self = GroupWord::state(s);
    ReducedFormDiagnosis::PerState row;
    row.state = s;

    std::vector<Verdict> triv(static_cast<std::size_t>(p.degree()));
    bool all_trivial = true;
    for (int x = 0; x < p.degree(); ++x) {
      triv[static_cast<std::size_t>(x)] =
          is_trivial(p, st.transitions[static_cast<std::size_t>(x)], budget,
                     cache)
              .verdict;
      if (triv[static_cast<std::size_t>(x)] != Verdict::True)
        all_trivial = false;
    }
    if (all_trivial) {
      row.kind = ReducedFormDiagnosis::Kind::FinitaryDepthOne;
      diag.states.push_back(std::move(row));
      continue;
    }

    int selves = 0;
    std::string reason;
    for (int x = 0; x < p.degree() && reason.empty(); ++x) {
      const GroupWord& t = st.transitions[static_cast<std::size_t>(x)];
      Verdict tv = triv[static_cast<std::size_t>(x)];
      if (tv == Verdict::True) continue;
      if (tv == Verdict::Unknown) {
        reason = "triviality of the section at letter " + std::to_string(x) +
                 " is undecided within budget";
        break;
      }
      bool same = t == self;
      if (!same) {
        Decision eq = are_equal(p, t, self, budget, cache);
        if (eq.unknown()) {
          reason = "equality of the section at letter " + std::to_string(x) +
                   " with the state is undecided within budget";
          break;
        }
        same = eq.is_true();
      }
      if (same) {
        ++selves;
        row.self_letter = x;
        continue;
      }
      bool in_pi = pi.count(root_perm(p, t).images()) > 0;
      bool depth_one = true;
      for (int x2 = 0; x2 < p.degree() && depth_one; ++x2)
        depth_one =
            is_trivial(p, step(p, t, x2).second, budget, cache).is_true();
      if (!in_pi || !depth_one)
        reason = "section at letter " + std::to_string(x) +
                 " is neither the state itself nor a root-group element";
    }
    if (reason.empty() && selves != 1)
      reason = "expected exactly one self-section, found " +
               std::to_string(selves);
    if (reason.empty()) {
      row.kind = ReducedFormDiagnosis::Kind::DirectedForm;
    } else {
      row.kind = ReducedFormDiagnosis::Kind::Fails;
      row.reason = std::move(reason);
      row.self_letter = -1;
      diag.ok = false;
    }
    diag.states.push_back(std::move(row));
  }
  return diag;
}

ReducedFormDiagnosis is_reduced_form(const Presentation& p,
                                     const std::vector<int>& y,
                                     const Budget& budget,
                                     TrivialityCache* cache) {
  if (!p.automaton_closed())
    throw PreconditionError(
        "is_reduced_form: presentation is not automaton-closed");
  return reduced_form_conditions(p, y, budget, cache);
}

ReducedFormResult reduced_form(const Presentation& p,
                               const std::vector<GroupWord>& generators,
                               const std::vector<std::string>& labels,
                               const Budget& budget, TrivialityCache* cache) {
  if (!p.automaton_closed())
    throw PreconditionError("reduced_form: presentation is not automaton-closed");
  if (generators.empty()) throw Error("reduced_form: no generators");
  if (labels.size() != generators.size())
    throw Error("reduced_form: one label per generator is required");
  TrivialityCache local;
  if (!cache) cache = &local;

  // Classify every state; the transform needs them all tame.
  std::vector<std::optional<int>> fin_depth(
      static_cast<std::size_t>(p.state_count()));
  std::vector<std::optional<int>> dir_period(
      static_cast<std::size_t>(p.state_count()));
  std::vector<int> seeds;
  for (int si = 0; si < p.state_count(); ++si) {
    GroupWord w = GroupWord::state(si);
    BoundedResult b = is_bounded_finite_state(p, w, -1, budget, cache);
    if (!b.decision.is_true())
      throw BudgetError("reduced_form: state \"" + p.state(si).name +
                        "\" resists classification within budget");
    FinitaryResult f = is_finitary(p, w, -1, budget, cache);
    if (f.decision.is_true()) {
      fin_depth[static_cast<std::size_t>(si)] = f.depth;
      seeds.push_back(si);
      continue;
    }
    DirectedResult dr = is_directed(p, w, -1, budget, cache);
    if (dr.decision.is_true()) {
      dir_period[static_cast<std::size_t>(si)] = dr.period;
      seeds.push_back(si);
    }
  }

  std::vector<int> z = self_similar_closure(p, seeds);
  std::vector<char> in_z(static_cast<std::size_t>(p.state_count()), 0);
  for (int s : z) in_z[static_cast<std::size_t>(s)] = 1;

  long long m = 1;
  int n = 0;
  for (int s : z) {
    if (dir_period[static_cast<std::size_t>(s)])
      m = std::lcm(m,
                   static_cast<long long>(
                       *dir_period[static_cast<std::size_t>(s)]));
    if (fin_depth[static_cast<std::size_t>(s)])
      n = std::max(n, *fin_depth[static_cast<std::size_t>(s)]);
  }

  // Least admissible level: a multiple of every period, at least the largest
  // finitary depth, with every generator section written over z.
  int k = 0;
  for (long long kk = m; k == 0; kk += m) {
    auto dk = checked_pow(p.degree(), static_cast<int>(kk),
                          static_cast<std::uint64_t>(budget.rk_alphabet_cap));
    if (!dk)
      throw BudgetError(
          "reduced_form: no admissible level within the alphabet budget");
    if (kk < std::max(n, 1)) continue;
    bool ok = true;
    for (const GroupWord& g : generators) {
      for (std::uint64_t v = 0; v < *dk && ok; ++v) {
        GroupWord s = section(
            p, g, tree_word(p.degree(), v, static_cast<int>(kk)));
        for (const Factor& f : s.factors())
          if (!in_z[static_cast<std::size_t>(f.state)]) {
            ok = false;
            break;
          }
      }
      if (!ok) break;
    }
    if (ok) k = static_cast<int>(kk);
  }

  // Restrict the closure to level k.
  std::vector<int> new_index(static_cast<std::size_t>(p.state_count()), -1);
  for (std::size_t i = 0; i < z.size(); ++i)
    new_index[static_cast<std::size_t>(z[i])] = static_cast<int>(i);
  std::vector<State> sub_states;
  for (int s : z) {
    const State& st = p.state(s);
    std::vector<GroupWord> transitions;
    for (const GroupWord& t : st.transitions) {
      if (t.empty()) {
        transitions.emplace_back();
        continue;
      }
      transitions.push_back(GroupWord::state(
          new_index[static_cast<std::size_t>(t.factors().front().state)]));
    }
    sub_states.push_back(State{st.name, st.root, std::move(transitions)});
  }
  Presentation sub(Alphabet{p.degree()}, std::move(sub_states));
  Presentation h = restrict_level(sub, k, budget);

  std::vector<GeneratorEmbedding> embedding;
  std::uint64_t big = *checked_pow(p.degree(), k, budget.level_table_cap);
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    GeneratorEmbedding emb;
    emb.label = labels[gi];
    emb.root = level_perm(p, generators[gi], k, budget);
    for (std::uint64_t v = 0; v < big; ++v) {
      GroupWord s = section(p, generators[gi], tree_word(p.degree(), v, k));
      GroupWord mapped;
      for (const Factor& f : s.factors())
        mapped.append(
            Factor{new_index[static_cast<std::size_t>(f.state)], f.sign});
      emb.sections.push_back(std::move(mapped));
    }
    embedding.push_back(std::move(emb));
  }

  std::vector<int> all_h(static_cast<std::size_t>(h.state_count()));
  std::iota(all_h.begin(), all_h.end(), 0);
  if (!reduced_form_conditions(h, all_h, budget, cache).ok)
    throw Error("reduced_form: transformed presentation failed its own check");

  return ReducedFormResult{k, std::move(h), std::move(z),
                           std::move(embedding)};
}

DirectedCore directed_core(const Presentation& p, const std::vector<int>& y,
                           const Budget& budget, TrivialityCache* cache) {
  TrivialityCache local;
  if (!cache) cache = &local;
  ReducedFormDiagnosis diag = reduced_form_conditions(p, y, budget, cache);
  if (!diag.ok)
    throw PreconditionError(
        "directed_core: the given states are not in reduced form");

  DirectedCore out;
  std::unordered_set<GroupWord, WordHash> seen;
  for (const auto& row : diag.states) {
    if (row.kind != ReducedFormDiagnosis::Kind::DirectedForm) continue;
    for (const GroupWord& t : p.state(row.state).transitions) {
      if (t.empty()) continue;
      if (is_trivial(p, t, budget, cache).is_true()) continue;
      if (seen.insert(t).second) out.z.push_back(t);
    }
  }
  for (const auto& row : diag.states) {
    const State& st = p.state(row.state);
    out.embedding.push_back(
        GeneratorEmbedding{st.name, st.root, st.transitions});
  }
  return out;
}

}  // namespace treeauto
