#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "treeauto/catalog.hpp"
#include "treeauto/core.hpp"
#include "treeauto/errors.hpp"
#include "treeauto/structure.hpp"
#include "treeauto/text.hpp"

using namespace treeauto;

namespace {

std::vector<Perm> state_roots(const Presentation& p) {
  std::vector<Perm> out;
  for (int s = 0; s < p.state_count(); ++s) out.push_back(p.state(s).root);
  return out;
}

}  // namespace

TEST_CASE("cycle graph shapes of the catalog roots") {
  // reduced basilica: 4 letters + 5 cycles, 8 edges, one component
  CycleGraph g = cycle_graph(state_roots(basilica_reduced().presentation));
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 8);
  CHECK(g.connected());
  CHECK(g.tree_like());

  // both length-3 cycles overlap in every letter: connected but with a loop
  CycleGraph g3 = cycle_graph(state_roots(g_p(3).presentation));
  CHECK(g3.vertex_count() == 5);
  CHECK(g3.edge_count() == 6);
  CHECK(g3.connected());
  CHECK(!g3.tree_like());

  // |V| - |E| = 1 alone does not make a tree: this one is disconnected
  CycleGraph bp = cycle_graph(state_roots(balanced_pair_5().presentation));
  CHECK(bp.vertex_count() == 11);
  CHECK(bp.edge_count() == 10);
  CHECK(!bp.connected());
  CHECK(!bp.tree_like());

  CycleGraph lamp = cycle_graph(state_roots(lamplighter4().presentation));
  CHECK(lamp.vertex_count() == 9);
  CHECK(lamp.edge_count() == 8);
  CHECK(!lamp.connected());
  CHECK(!lamp.tree_like());
}

TEST_CASE("cycle graph bookkeeping") {
  // every letter sits in exactly one cycle per permutation
  for (const CatalogEntry& e : all_entries()) {
    CycleGraph g = cycle_graph(state_roots(e.presentation));
    CHECK(g.edge_count() ==
          static_cast<std::size_t>(e.presentation.state_count()) *
              static_cast<std::size_t>(e.presentation.degree()));
    oracle::GraphFacts facts = oracle::graph_recount(g);
    CHECK(facts.vertices == g.vertex_count());
    CHECK(facts.edges == g.edge_count());
    CHECK(facts.connected == g.connected());
  }

  // cycles come least-element first, trivial ones included
  CycleGraph g = cycle_graph(state_roots(basilica_reduced().presentation));
  REQUIRE(g.cycle_vertices.size() == 5);
  CHECK(g.cycle_vertices[0].perm == 0);
  CHECK(g.cycle_vertices[0].letters == std::vector<int>{0});
  CHECK(g.cycle_vertices[1].letters == std::vector<int>{1});
  CHECK(g.cycle_vertices[2].letters == std::vector<int>{2, 3});
  CHECK(g.cycle_vertices[3].perm == 1);
  CHECK(g.cycle_vertices[3].letters == std::vector<int>{0, 2});
  CHECK(g.cycle_vertices[4].letters == std::vector<int>{1, 3});

  CHECK(is_tree_like({Perm::from_cycles(2, {{0, 1}})}));
  // a lone identity leaves every letter in its own component
  CHECK(!cycle_graph({Perm::identity(3)}).connected());

  CHECK_THROWS_AS(cycle_graph({}), Error);
  CHECK_THROWS_AS(cycle_graph({Perm::identity(2), Perm::identity(3)}), Error);
}

TEST_CASE("kneading recognizer accepts the tree-like catalog entries") {
  for (const char* name : {"basilica", "basilica_r2", "dihedral_3",
                           "dihedral_2_aws"}) {
    for (const CatalogEntry& e : all_entries())
      if (e.name == name) {
        KneadingReport r =
            is_kneading(e.presentation, e.generator_indices());
        INFO(e.name);
        CHECK(r.kneading);
        CHECK(r.failures.empty());
      }
  }
}

TEST_CASE("kneading recognizer rejects with reasons") {
  CatalogEntry g3 = g_p(3);
  KneadingReport r = is_kneading(g3.presentation, g3.generator_indices());
  CHECK(!r.kneading);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0] == "cycle graph is not tree-like");

  CatalogEntry lamp = lamplighter4();
  KneadingReport rl = is_kneading(lamp.presentation, lamp.generator_indices());
  CHECK(!rl.kneading);
  REQUIRE(rl.failures.size() == 1);
  CHECK(rl.failures[0] == "cycle graph is not tree-like");

  CatalogEntry bp = balanced_pair_5();
  CHECK(!is_kneading(bp.presentation, bp.generator_indices()).kneading);

  // a state reached as a section twice, and twice within one root cycle
  Presentation twice = parse_presentation("c = (0 1) (c, c)\n");
  KneadingReport rt = is_kneading(twice, {0});
  CHECK(!rt.kneading);
  REQUIRE(rt.failures.size() == 2);
  CHECK(rt.failures[0].find("section of 2 pairs") != std::string::npos);
  CHECK(rt.failures[1].find("one root cycle") != std::string::npos);

  Presentation nothing = parse_presentation("e = (1, 1)\n");
  KneadingReport re = is_kneading(nothing, {0});
  CHECK(!re.kneading);
  REQUIRE(re.failures.size() == 1);
  CHECK(re.failures[0] == "no non-trivial members");
}

TEST_CASE("kneading requires transition-closed states") {
  CatalogEntry g = ggs(3, {1, 2});
  CHECK_THROWS_AS(is_kneading(g.presentation, g.generator_indices()),
                  PreconditionError);
  CatalogEntry w = weak_selfrep2();
  CHECK_THROWS_AS(is_kneading(w.presentation, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(is_kneading(g.presentation, {5}), Error);
}

TEST_CASE("orbit counts along the levels") {
  CatalogEntry r = basilica_reduced();
  const Presentation& p = r.presentation;
  OrbitCountTable t = kneading_orbit_counts(p, {0, 1}, 3);
  REQUIRE(t.generators == std::vector<int>{0, 1});
  REQUIRE(t.counts.size() == 2);
  CHECK(t.counts[0] == std::vector<std::uint64_t>{3, 11, 43});
  CHECK(t.counts[1] == std::vector<std::uint64_t>{2, 6, 22});

  // independent recount of the same numbers
  for (std::size_t gi = 0; gi < t.generators.size(); ++gi) {
    GroupWord w = GroupWord::state(t.generators[gi]);
    for (int i = 1; i <= 3; ++i)
      CHECK(t.counts[gi][static_cast<std::size_t>(i - 1)] ==
            oracle::orbit_count(p, w, i));
  }

  // each state is its own single non-trivial deep section
  for (std::size_t gi = 0; gi < t.generators.size(); ++gi)
    for (const auto& level : t.nontrivial_sections[gi]) {
      REQUIRE(level.size() == 1);
      CHECK(level[0] == GroupWord::state(t.generators[gi]));
    }

  CHECK_THROWS_AS(kneading_orbit_counts(p, {0, 1}, 0), Error);
  Budget tiny;
  tiny.level_table_cap = 4;
  CHECK_THROWS_AS(kneading_orbit_counts(p, {0, 1}, 3, tiny), BudgetError);
}

TEST_CASE("generalized basilica membership per entry") {
  auto flag = [](const CatalogEntry& e) {
    return is_generalized_basilica(e.presentation, e.generator_indices());
  };
  CHECK(!flag(basilica()));
  CHECK(flag(basilica_reduced()));
  CHECK(!flag(ggs(3, {1, 2})));
  CHECK(flag(g_p(3)));
  CHECK(flag(g_p(5)));
  CHECK(flag(balanced_pair_5()));
  CHECK(flag(dihedral3()));
  CHECK(!flag(dihedral2_aws()));
  CHECK(flag(lamplighter4()));
  CHECK(!flag(weak_selfrep2()));
}

TEST_CASE("balanced recognizer compares cycle length with root order") {
  CatalogEntry r = basilica_reduced();
  CHECK(is_balanced(r.presentation, {0, 1}));
  CatalogEntry g3 = g_p(3);
  CHECK(is_balanced(g3.presentation, {0, 1}));
  CatalogEntry bp = balanced_pair_5();
  CHECK(is_balanced(bp.presentation, {0, 1}));

  // dihedral: a is active on a fixed letter yet its root swaps two others
  CatalogEntry d = dihedral3();
  CHECK(!is_balanced(d.presentation, {0, 1}));
  CatalogEntry lamp = lamplighter4();
  CHECK(!is_balanced(lamp.presentation, {0, 1}));

  CatalogEntry b = basilica();
  CHECK_THROWS_AS(is_balanced(b.presentation, {0, 1}), PreconditionError);
}

TEST_CASE("abelian wreath type recognizer") {
  auto flag = [](const CatalogEntry& e) {
    return is_abelian_wreath_type(e.presentation, e.generator_indices());
  };
  CHECK(flag(ggs(3, {1, 2})));
  CHECK(flag(ggs(5, {1, 0, 0, 1})));
  CHECK(flag(dihedral2_aws()));
  CHECK(flag(g_p(3)));
  CHECK(flag(lamplighter4()));
  CHECK(!flag(basilica()));       // a section of depth two
  CHECK(!flag(basilica_reduced()));  // non-commuting roots
  CHECK(!flag(dihedral3()));      // root group S_3
  CHECK(!flag(balanced_pair_5()));

  CHECK(is_abelian_wreath_type(basilica().presentation, {}));
}

TEST_CASE("orbits_on_level partitions") {
  CatalogEntry b = basilica();
  auto orb1 = orbits_on_level(b.presentation, b.generator_words(), 1);
  CHECK(orb1 == std::vector<std::vector<std::uint64_t>>{{0, 1}});
  auto orb2 = orbits_on_level(b.presentation, b.generator_words(), 2);
  CHECK(orb2 == std::vector<std::vector<std::uint64_t>>{{0, 1, 2, 3}});

  CatalogEntry bp = balanced_pair_5();
  auto bp1 = orbits_on_level(bp.presentation, bp.generator_words(), 1);
  CHECK(bp1 == std::vector<std::vector<std::uint64_t>>{{0, 1, 2}, {3, 4}});

  CatalogEntry lamp = lamplighter4();
  auto l1 = orbits_on_level(lamp.presentation, lamp.generator_words(), 1);
  CHECK(l1 == std::vector<std::vector<std::uint64_t>>{{0, 2}, {1, 3}});

  // a single generator only contributes its own cycles
  CatalogEntry r = basilica_reduced();
  auto single = orbits_on_level(r.presentation,
                                {parse_word(r.presentation, "a")}, 1);
  CHECK(single ==
        std::vector<std::vector<std::uint64_t>>{{0}, {1}, {2, 3}});

  // agreement with the independent recount on deeper levels
  for (int n = 1; n <= 3; ++n)
    CHECK(orbits_on_level(b.presentation, b.generator_words(), n) ==
          oracle::orbit_classes(b.presentation, b.generator_words(), n));

  CHECK_THROWS_AS(orbits_on_level(b.presentation, b.generator_words(), 0),
                  Error);
  Budget tiny;
  tiny.level_table_cap = 4;
  CHECK_THROWS_AS(
      orbits_on_level(b.presentation, b.generator_words(), 3, tiny),
      BudgetError);
}

TEST_CASE("level transitivity flags") {
  CatalogEntry b = basilica();
  CHECK(is_level_transitive(b.presentation, b.generator_words(), 3) ==
        std::vector<bool>{true, true, true});
  CatalogEntry bp = balanced_pair_5();
  CHECK(is_level_transitive(bp.presentation, bp.generator_words(), 2) ==
        std::vector<bool>{false, false});
}

TEST_CASE("clean transporters along the odometer") {
  CatalogEntry r = basilica_reduced();
  const Presentation& p = r.presentation;
  GroupWord h = parse_word(p, "a*b^-1");

  CHECK(find_clean_transporter(p, h, 0, 0) == 0);
  CHECK(find_clean_transporter(p, h, 0, 3) == 1);
  CHECK(find_clean_transporter(p, h, 3, 0) == -1);
  CHECK(find_clean_transporter(p, h, 0, 1) == 2);

  // every found exponent transports the letter with a trivial section
  for (int v = 0; v < 4; ++v)
    for (int w = 0; w < 4; ++w) {
      auto i = find_clean_transporter(p, h, v, w);
      REQUIRE(i.has_value());
      GroupWord hp = h.pow(*i);
      CHECK(act(p, hp, TreeWord({v})) == TreeWord({w}));
      CHECK(is_trivial(p, section(p, hp, TreeWord({v}))).is_true());
    }

  // a only ever moves within {2, 3}
  CHECK(!find_clean_transporter(p, parse_word(p, "a"), 0, 1).has_value());

  CHECK_THROWS_AS(find_clean_transporter(p, h, 0, 4), Error);
  CHECK_THROWS_AS(find_clean_transporter(p, parse_word(p, "a*b"), 0, 1),
                  PreconditionError);
  Presentation doubler = parse_presentation("c = (0 1) (c, c)\n");
  CHECK_THROWS_AS(
      find_clean_transporter(doubler, parse_word(doubler, "c"), 0, 1),
      PreconditionError);
}

TEST_CASE("section group generators by active orbit") {
  CatalogEntry bp = balanced_pair_5();
  const Presentation& p = bp.presentation;
  CHECK(section_group_generators(p, {0, 1}, {3, 4}) ==
        std::vector<int>{0, 1});
  CHECK(section_group_generators(p, {0, 1}, {0, 1, 2}).empty());

  CatalogEntry g3 = g_p(3);
  CHECK(section_group_generators(g3.presentation, {0, 1}, {0}) ==
        std::vector<int>{0});
  CHECK(section_group_generators(g3.presentation, {0, 1}, {1}) ==
        std::vector<int>{1});

  CatalogEntry b = basilica();
  CHECK_THROWS_AS(section_group_generators(b.presentation, {0, 1}, {0}),
                  PreconditionError);
  CHECK_THROWS_AS(section_group_generators(p, {0, 1}, {9}), Error);
}

TEST_CASE("self replication certificates") {
  CatalogEntry r = basilica_reduced();
  SelfReplicatingResult res = self_replicating(r.presentation, {0, 1});
  CHECK(res.verdict == Verdict::True);
  REQUIRE(res.certificates.size() == 2);
  CHECK(res.certificates[0].kind == CertificateKind::DirectedGenerators);
  CHECK(res.certificates[0].directed_generators == std::vector<int>{0, 1});
  const SelfReplicatingCertificate& om = res.certificates[1];
  CHECK(om.kind == CertificateKind::OdometerMembership);
  CHECK(is_odometer(r.presentation, om.odometer));
  REQUIRE(om.witnesses.size() == 2);
  for (std::size_t i = 0; i < om.witnesses.size(); ++i)
    CHECK(are_equal(r.presentation, om.witnesses[i].word,
                    GroupWord::state(static_cast<int>(i)))
              .is_true());
}

TEST_CASE("self replication across the catalog") {
  auto verdict_of = [](const CatalogEntry& e) {
    return self_replicating(e.presentation, e.generator_indices());
  };

  SelfReplicatingResult g3 = verdict_of(g_p(3));
  CHECK(g3.verdict == Verdict::True);
  REQUIRE(g3.certificates.size() == 2);
  CHECK(g3.certificates[1].odometer == GroupWord::state(0));

  SelfReplicatingResult d = verdict_of(dihedral3());
  CHECK(d.verdict == Verdict::True);
  REQUIRE(d.certificates.size() == 1);
  CHECK(d.certificates[0].kind == CertificateKind::DirectedGenerators);

  // no certificate reachable: the verdict stays open, never False
  for (auto make : {basilica, lamplighter4, balanced_pair_5, dihedral2_aws,
                    weak_selfrep2}) {
    SelfReplicatingResult res = verdict_of(make());
    CHECK(res.verdict == Verdict::Unknown);
    CHECK(res.certificates.empty());
  }
  SelfReplicatingResult gg = verdict_of(ggs(3, {1, 2}));
  CHECK(gg.verdict == Verdict::Unknown);
}
