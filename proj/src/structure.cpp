#include "treeauto/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "treeauto/core.hpp"
#include "treeauto/errors.hpp"

namespace treeauto {

namespace {

void check_member_states(const Presentation& p, const std::vector<int>& y,
                         const char* who) {
  for (int s : y)
    if (s < 0 || s >= p.state_count())
      throw Error(std::string(who) + ": state index " + std::to_string(s) +
                  " out of range");
}

// Transition-closed: every section of a member of y is the empty word or a
// single positive member of y.
bool transition_closed(const Presentation& p, const std::vector<int>& y) {
  std::vector<char> in_y(static_cast<std::size_t>(p.state_count()), 0);
  for (int s : y) in_y[static_cast<std::size_t>(s)] = 1;
  for (int s : y)
    for (const GroupWord& t : p.state(s).transitions) {
      if (t.empty()) continue;
      if (t.size() != 1) return false;
      const Factor& f = t.factors().front();
      if (f.sign < 0 || !in_y[static_cast<std::size_t>(f.state)]) return false;
    }
  return true;
}

// Unique letter with section equal to the state itself, -1 when every section
// is trivial, -2 when the shape is neither (not a generalized basilica form).
int self_letter_of(const Presentation& p, int s, const Budget& budget,
                   TrivialityCache* cache) {
  const State& st = p.state(s);
  GroupWord self = GroupWord::state(s);
  int found = -1;
  for (int x = 0; x < p.degree(); ++x) {
    const GroupWord& t = st.transitions[static_cast<std::size_t>(x)];
    if (is_trivial(p, t, budget, cache).is_true()) continue;
    bool same = t == self || are_equal(p, t, self, budget, cache).is_true();
    if (!same || found >= 0) return -2;
    found = x;
  }
  return found;
}

}  // namespace

bool CycleGraph::connected() const {
  std::size_t total = vertex_count();
  if (total == 0) return true;
  std::vector<std::vector<std::size_t>> adj(total);
  for (const auto& [cv, letter] : edges) {
    std::size_t c = static_cast<std::size_t>(degree) +
                    static_cast<std::size_t>(cv);
    std::size_t l = static_cast<std::size_t>(letter);
    adj[c].push_back(l);
    adj[l].push_back(c);
  }
  std::vector<char> seen(total, 0);
  std::vector<std::size_t> queue = {0};
  seen[0] = 1;
  std::size_t reached = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (std::size_t nb : adj[queue[qi]])
      if (!seen[nb]) {
        seen[nb] = 1;
        ++reached;
        queue.push_back(nb);
      }
  return reached == total;
}

bool CycleGraph::tree_like() const {
  return connected() && vertex_count() == edge_count() + 1;
}

CycleGraph cycle_graph(const std::vector<Perm>& perms) {
  if (perms.empty()) throw Error("cycle_graph: no permutations");
  int degree = perms.front().degree();
  for (const Perm& g : perms)
    if (g.degree() != degree)
      throw Error("cycle_graph: mixed permutation degrees");
  CycleGraph out;
  out.degree = degree;
  out.perms = perms;
  for (std::size_t pi = 0; pi < perms.size(); ++pi)
    for (const auto& cyc : perms[pi].cycles(true)) {
      int cv = static_cast<int>(out.cycle_vertices.size());
      out.cycle_vertices.push_back(
          CycleGraph::CycleVertex{static_cast<int>(pi), cyc});
      for (int letter : cyc) out.edges.emplace_back(cv, letter);
    }
  return out;
}

bool is_tree_like(const std::vector<Perm>& perms) {
  return cycle_graph(perms).tree_like();
}

KneadingReport is_kneading(const Presentation& p, const std::vector<int>& y,
                           const Budget& budget, TrivialityCache* cache) {
  check_member_states(p, y, "is_kneading");
  if (!transition_closed(p, y))
    throw PreconditionError("is_kneading: the states are not transition-closed");
  TrivialityCache local;
  if (!cache) cache = &local;
  KneadingReport report;

  std::vector<int> nontrivial;
  for (int s : y)
    if (is_trivial(p, GroupWord::state(s), budget, cache).is_false())
      nontrivial.push_back(s);
  if (nontrivial.empty()) {
    report.failures.push_back("no non-trivial members");
    return report;
  }

  // Every non-trivial member must appear as a section exactly once.
  for (int h : nontrivial) {
    GroupWord hw = GroupWord::state(h);
    int sources = 0;
    for (int g : y)
      for (const GroupWord& t : p.state(g).transitions) {
        if (t.empty()) continue;
        if (t == hw || are_equal(p, t, hw, budget, cache).is_true())
          ++sources;
      }
    if (sources != 1)
      report.failures.push_back("state \"" + p.state(h).name + "\" is the " +
                                "section of " + std::to_string(sources) +
                                " pairs, expected exactly one");
  }

  // At most one non-trivial section per root-cycle.
  for (int g : y) {
    const State& st = p.state(g);
    for (const auto& cyc : st.root.cycles(true)) {
      int active = 0;
      for (int letter : cyc)
        if (is_trivial(p, st.transitions[static_cast<std::size_t>(letter)],
                       budget, cache)
                .is_false())
          ++active;
      if (active > 1) {
        report.failures.push_back("state \"" + st.name +
                                  "\" has two non-trivial sections in one " +
                                  "root cycle");
        break;
      }
    }
  }

  std::vector<Perm> roots;
  for (int s : nontrivial) roots.push_back(p.state(s).root);
  if (!is_tree_like(roots))
    report.failures.push_back("cycle graph is not tree-like");

  report.kneading = report.failures.empty();
  return report;
}

OrbitCountTable kneading_orbit_counts(const Presentation& p,
                                      const std::vector<int>& y, int max_i,
                                      const Budget& budget,
                                      TrivialityCache* cache) {
  check_member_states(p, y, "kneading_orbit_counts");
  if (max_i < 1)
    throw Error("kneading_orbit_counts: max_i must be >= 1");
  if (!checked_pow(p.degree(), max_i, budget.level_table_cap))
    throw BudgetError("kneading_orbit_counts: level exceeds the table budget");
  TrivialityCache local;
  if (!cache) cache = &local;

  OrbitCountTable out;
  for (int s : y)
    if (is_trivial(p, GroupWord::state(s), budget, cache).is_false())
      out.generators.push_back(s);

  auto word_less = [](const GroupWord& a, const GroupWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    for (std::size_t i = 0; i < fa.size(); ++i) {
      if (fa[i].state != fb[i].state) return fa[i].state < fb[i].state;
      if (fa[i].sign != fb[i].sign) return fa[i].sign > fb[i].sign;
    }
    return false;
  };

  for (int s : out.generators) {
    GroupWord w = GroupWord::state(s);
    std::vector<std::uint64_t> counts;
    std::vector<std::vector<GroupWord>> sections;
    std::unordered_set<GroupWord, WordHash> level = {w};
    for (int i = 1; i <= max_i; ++i) {
      counts.push_back(level_perm(p, w, i, budget).cycles(true).size());
      std::unordered_set<GroupWord, WordHash> next;
      for (const GroupWord& node : level)
        for (int x = 0; x < p.degree(); ++x)
          next.insert(step(p, node, x).second);
      level = std::move(next);
      std::vector<GroupWord> active;
      for (const GroupWord& node : level)
        if (is_trivial(p, node, budget, cache).is_false())
          active.push_back(node);
      std::sort(active.begin(), active.end(), word_less);
      sections.push_back(std::move(active));
    }
    out.counts.push_back(std::move(counts));
    out.nontrivial_sections.push_back(std::move(sections));
  }
  return out;
}

bool is_generalized_basilica(const Presentation& p, const std::vector<int>& y,
                             const Budget& budget, TrivialityCache* cache) {
  check_member_states(p, y, "is_generalized_basilica");
  TrivialityCache local;
  if (!cache) cache = &local;
  for (int s : y)
    if (self_letter_of(p, s, budget, cache) == -2) return false;
  return true;
}

bool is_balanced(const Presentation& p, const std::vector<int>& y,
                 const Budget& budget, TrivialityCache* cache) {
  TrivialityCache local;
  if (!cache) cache = &local;
  if (!is_generalized_basilica(p, y, budget, cache))
    throw PreconditionError(
        "is_balanced: the states are not in generalized basilica form");
  for (int s : y) {
    int active = self_letter_of(p, s, budget, cache);
    if (active < 0) continue;
    const Perm& root = p.state(s).root;
    int c = root.cycle_length_of(active);
    if (!root.power(c).is_identity()) return false;
  }
  return true;
}

bool is_abelian_wreath_type(const Presentation& p, const std::vector<int>& y,
                            const Budget& budget, TrivialityCache* cache) {
  check_member_states(p, y, "is_abelian_wreath_type");
  if (y.empty()) return true;
  TrivialityCache local;
  if (!cache) cache = &local;

  std::vector<Perm> roots;
  for (int s : y) roots.push_back(p.state(s).root);
  std::vector<Perm> closure = perm_closure(roots, budget.perm_group_cap);
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (std::size_t j = i + 1; j < closure.size(); ++j)
      if (!(closure[i].compose(closure[j]) == closure[j].compose(closure[i])))
        return false;
  std::set<std::vector<int>> pi;
  for (const Perm& g : closure) pi.insert(g.images());

  for (int s : y) {
    const State& st = p.state(s);
    GroupWord self = GroupWord::state(s);
    bool all_trivial = true;
    for (const GroupWord& t : st.transitions)
      if (!is_trivial(p, t, budget, cache).is_true()) all_trivial = false;
    if (all_trivial) continue;

    int selves = 0;
    for (const GroupWord& t : st.transitions) {
      if (is_trivial(p, t, budget, cache).is_true()) continue;
      if (t == self || are_equal(p, t, self, budget, cache).is_true()) {
        ++selves;
        continue;
      }
      if (!pi.count(root_perm(p, t).images())) return false;
      for (int x = 0; x < p.degree(); ++x)
        if (!is_trivial(p, step(p, t, x).second, budget, cache).is_true())
          return false;
    }
    if (selves != 1) return false;
  }
  return true;
}

std::vector<std::vector<std::uint64_t>> orbits_on_level(
    const Presentation& p, const std::vector<GroupWord>& gens, int n,
    const Budget& budget) {
  if (n < 1) throw Error("orbits_on_level: level must be >= 1");
  auto dn = checked_pow(p.degree(), n, budget.level_table_cap);
  if (!dn) throw BudgetError("orbits_on_level: level exceeds the table budget");
  std::uint64_t total = *dn;

  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::uint64_t{0});
  auto find = [&](std::uint64_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  };
  for (const GroupWord& g : gens) {
    Perm pm = level_perm(p, g, n, budget);
    for (std::uint64_t v = 0; v < total; ++v)
      unite(v, static_cast<std::uint64_t>(pm(static_cast<int>(v))));
  }

  std::vector<std::vector<std::uint64_t>> classes;
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint64_t r = find(v);
    auto [it, fresh] = index.emplace(r, classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

std::vector<bool> is_level_transitive(const Presentation& p,
                                      const std::vector<GroupWord>& gens,
                                      int max_n, const Budget& budget) {
  std::vector<bool> out;
  for (int n = 1; n <= max_n; ++n)
    out.push_back(orbits_on_level(p, gens, n, budget).size() == 1);
  return out;
}

std::optional<int> find_clean_transporter(const Presentation& p,
                                          const GroupWord& h, int v, int w,
                                          const Budget& budget,
                                          TrivialityCache* cache) {
  if (v < 0 || v >= p.degree() || w < 0 || w >= p.degree())
    throw Error("find_clean_transporter: letter out of range");
  TrivialityCache local;
  if (!cache) cache = &local;

  int selves = 0;
  for (int x = 0; x < p.degree(); ++x) {
    GroupWord t = step(p, h, x).second;
    if (is_trivial(p, t, budget, cache).is_true()) continue;
    if (are_equal(p, t, h, budget, cache).is_true()) {
      ++selves;
      continue;
    }
    throw PreconditionError(
        "find_clean_transporter: sections must lie in {1, h}");
  }
  if (selves > 1)
    throw PreconditionError(
        "find_clean_transporter: more than one self-section");

  // Exponents in the order 0, 1, -1, 2, -2, ...
  for (int step_i = 0; step_i <= 2 * (p.degree() - 1); ++step_i) {
    int i = (step_i + 1) / 2;
    if (step_i % 2 == 0) i = -i;
    GroupWord hp = h.pow(i);
    if (act(p, hp, TreeWord({v})) == TreeWord({w}) &&
        is_trivial(p, section(p, hp, TreeWord({v})), budget, cache).is_true())
      return i;
  }
  return std::nullopt;
}

std::vector<int> section_group_generators(const Presentation& p,
                                          const std::vector<int>& y,
                                          const std::vector<int>& orbit,
                                          const Budget& budget,
                                          TrivialityCache* cache) {
  TrivialityCache local;
  if (!cache) cache = &local;
  if (!is_generalized_basilica(p, y, budget, cache))
    throw PreconditionError(
        "section_group_generators: the states are not in generalized "
        "basilica form");
  std::vector<char> in_orbit(static_cast<std::size_t>(p.degree()), 0);
  for (int x : orbit) {
    if (x < 0 || x >= p.degree())
      throw Error("section_group_generators: letter out of range");
    in_orbit[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<int> out;
  for (int s : y) {
    int active = self_letter_of(p, s, budget, cache);
    if (active >= 0 && in_orbit[static_cast<std::size_t>(active)])
      out.push_back(s);
  }
  return out;
}

namespace {

std::optional<GroupWord> scan_for_odometer(const Presentation& p,
                                           const std::vector<int>& y,
                                           const Budget& budget,
                                           TrivialityCache* cache) {
  std::vector<GroupWord> queue = {GroupWord{}};
  std::vector<int> depth = {0};
  std::unordered_set<GroupWord, WordHash> seen = {GroupWord{}};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    GroupWord cur = queue[qi];
    int cur_depth = depth[qi];
    if (cur_depth > 0 && is_odometer(p, cur, budget, cache)) return cur;
    if (cur_depth >= budget.odometer_scan_radius) continue;
    for (int s : y)
      for (int sign : {1, -1}) {
        GroupWord next = cur;
        next.append(Factor{s, sign});
        if (seen.insert(next).second) {
          queue.push_back(std::move(next));
          depth.push_back(cur_depth + 1);
        }
      }
  }
  return std::nullopt;
}

}  // namespace

SelfReplicatingResult self_replicating(const Presentation& p,
                                       const std::vector<int>& y,
                                       const Budget& budget,
                                       TrivialityCache* cache) {
  check_member_states(p, y, "self_replicating");
  TrivialityCache local;
  if (!cache) cache = &local;
  SelfReplicatingResult out;

  // Directed-generator route: every member directed in generalized basilica
  // form and the first level a single orbit.
  if (!y.empty() && is_generalized_basilica(p, y, budget, cache)) {
    bool all_directed = true;
    for (int s : y)
      if (self_letter_of(p, s, budget, cache) < 0) all_directed = false;
    if (all_directed) {
      std::vector<GroupWord> words;
      for (int s : y) words.push_back(GroupWord::state(s));
      if (orbits_on_level(p, words, 1, budget).size() == 1) {
        SelfReplicatingCertificate cert;
        cert.kind = CertificateKind::DirectedGenerators;
        cert.directed_generators = y;
        out.certificates.push_back(std::move(cert));
      }
    }
  }

  // Odometer route: reduced form, an odometer in a small ball over Y, and
  // every member written over the directed core.
  if (!y.empty() && reduced_form_conditions(p, y, budget, cache).ok) {
    std::optional<GroupWord> odo = scan_for_odometer(p, y, budget, cache);
    if (odo) {
      DirectedCore core = directed_core(p, y, budget, cache);
      std::vector<MemberWitness> witnesses;
      bool all_found = true;
      for (int s : y) {
        auto found = member_search(p, GroupWord::state(s), core.z,
                                   budget.membership_radius, budget, cache);
        if (!found) {
          all_found = false;
          break;
        }
        witnesses.push_back(std::move(*found));
      }
      if (all_found) {
        SelfReplicatingCertificate cert;
        cert.kind = CertificateKind::OdometerMembership;
        cert.odometer = std::move(*odo);
        cert.witnesses = std::move(witnesses);
        out.certificates.push_back(std::move(cert));
      }
    }
  }

  out.verdict =
      out.certificates.empty() ? Verdict::Unknown : Verdict::True;
  return out;
}

}  // namespace treeauto
