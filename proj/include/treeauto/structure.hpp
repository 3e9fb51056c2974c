#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeauto/transform.hpp"

namespace treeauto {

// Bipartite cycle graph of a sequence of permutations: letter vertices on one
// side, one vertex per cycle (trivial cycles included) on the other, an edge
// joining each cycle to the letters it contains.
struct CycleGraph {
  struct CycleVertex {
    int perm = 0;              // index into perms
    std::vector<int> letters;  // the cycle, starting at its least element
  };

  int degree = 0;
  std::vector<Perm> perms;
  std::vector<CycleVertex> cycle_vertices;
  std::vector<std::pair<int, int>> edges;  // (cycle vertex index, letter)

  std::size_t vertex_count() const {
    return static_cast<std::size_t>(degree) + cycle_vertices.size();
  }
  std::size_t edge_count() const { return edges.size(); }
  bool connected() const;
  bool tree_like() const;  // connected and |V| - |E| = 1
};

CycleGraph cycle_graph(const std::vector<Perm>& perms);
bool is_tree_like(const std::vector<Perm>& perms);

// Kneading check for a transition-closed set Y of states: every non-trivial
// member is the section of exactly one (state, letter) pair, each root-cycle
// carries at most one non-trivial section, and the root permutations of the
// non-trivial members form a tree-like sequence.
struct KneadingReport {
  bool kneading = false;
  std::vector<std::string> failures;
};
KneadingReport is_kneading(const Presentation& p, const std::vector<int>& y,
                           const Budget& budget = {},
                           TrivialityCache* cache = nullptr);

// Orbit counts l_i(g) = number of <g>-orbits on level i, for i = 1..max_i,
// per non-trivial member of Y, together with the distinct non-trivial
// level-i sections of each member.
struct OrbitCountTable {
  std::vector<int> generators;  // state indices, non-trivial members of y
  std::vector<std::vector<std::uint64_t>> counts;  // [gen][i-1]
  std::vector<std::vector<std::vector<GroupWord>>> nontrivial_sections;
};
OrbitCountTable kneading_orbit_counts(const Presentation& p,
                                      const std::vector<int>& y, int max_i,
                                      const Budget& budget = {},
                                      TrivialityCache* cache = nullptr);

// Generalized basilica: every member of Y has all sections trivial, or all
// sections in {1, itself} with exactly one self-section.
bool is_generalized_basilica(const Presentation& p, const std::vector<int>& y,
                             const Budget& budget = {},
                             TrivialityCache* cache = nullptr);

// Balanced (generalized basilica input required): for each directed member,
// the least power fixing its active vertex already fixes the whole level.
bool is_balanced(const Presentation& p, const std::vector<int>& y,
                 const Budget& budget = {}, TrivialityCache* cache = nullptr);

// Abelian wreath type: the root permutation group of <Y> is abelian and each
// member has all sections trivial, or sections in {itself} union that
// permutation group with exactly one self-section.
bool is_abelian_wreath_type(const Presentation& p, const std::vector<int>& y,
                            const Budget& budget = {},
                            TrivialityCache* cache = nullptr);

// Orbits of <gens> on level n, as lexicographic vertex indices, classes
// ordered by least element.
std::vector<std::vector<std::uint64_t>> orbits_on_level(
    const Presentation& p, const std::vector<GroupWord>& gens, int n,
    const Budget& budget = {});

// One entry per level 1..max_n: does <gens> act transitively there?
std::vector<bool> is_level_transitive(const Presentation& p,
                                      const std::vector<GroupWord>& gens,
                                      int max_n, const Budget& budget = {});

// Clean transporter: an exponent i, |i| < d, with h^i(v) = w and the section
// of h^i at v trivial. Requires h to have first-level sections in {1, h}
// with at most one h.
std::optional<int> find_clean_transporter(const Presentation& p,
                                          const GroupWord& h, int v, int w,
                                          const Budget& budget = {},
                                          TrivialityCache* cache = nullptr);

// Directed members of Y whose active vertex lies in the given level-1 orbit
// (generalized basilica input required).
std::vector<int> section_group_generators(const Presentation& p,
                                          const std::vector<int>& y,
                                          const std::vector<int>& orbit,
                                          const Budget& budget = {},
                                          TrivialityCache* cache = nullptr);

// Self-replication certificates. Every certificate that checks out within
// budget is returned; the verdict is True when at least one exists and
// Unknown otherwise (never False).
enum class CertificateKind { DirectedGenerators, OdometerMembership };
struct SelfReplicatingCertificate {
  CertificateKind kind = CertificateKind::DirectedGenerators;
  std::vector<int> directed_generators;  // DirectedGenerators
  GroupWord odometer;                    // OdometerMembership
  std::vector<MemberWitness> witnesses;  // one per member of y
};
struct SelfReplicatingResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<SelfReplicatingCertificate> certificates;
};
SelfReplicatingResult self_replicating(const Presentation& p,
                                       const std::vector<int>& y,
                                       const Budget& budget = {},
                                       TrivialityCache* cache = nullptr);

}  // namespace treeauto
