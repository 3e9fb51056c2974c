#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "treeauto/catalog.hpp"
#include "treeauto/core.hpp"
#include "treeauto/errors.hpp"
#include "treeauto/text.hpp"

using namespace treeauto;

namespace {

GroupWord random_word(std::mt19937& rng, int states, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> state(0, states - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  GroupWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i)
    w.append(Factor{state(rng), sign(rng) ? 1 : -1});
  return w;
}

TreeWord random_vertex(std::mt19937& rng, int degree, int max_level) {
  std::uniform_int_distribution<int> len(0, max_level);
  std::uniform_int_distribution<int> letter(0, degree - 1);
  TreeWord v;
  int n = len(rng);
  for (int i = 0; i < n; ++i) v.push_back(letter(rng));
  return v;
}

}  // namespace

TEST_CASE("perm basics") {
  Perm id = Perm::identity(4);
  CHECK(id.is_identity());
  CHECK(id.cycle_str() == "id");

  Perm t = Perm::from_cycles(4, {{2, 3}});
  CHECK(t(2) == 3);
  CHECK(t(3) == 2);
  CHECK(t(0) == 0);
  CHECK(t.cycle_str() == "(2 3)");
  CHECK(t.compose(t).is_identity());
  CHECK(t.inverse() == t);

  Perm c = Perm(std::vector<int>{3, 2, 0, 1});
  CHECK(c.cycle_str() == "(0 3 1 2)");
  CHECK(c.power(4).is_identity());
  CHECK(!c.power(2).is_identity());
  CHECK(c.order_saturated(100) == 4);
  CHECK(c.cycle_length_of(0) == 4);

  // compose applies the right factor first
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  CHECK(a.compose(b)(1) == 2);  // b: 1 -> 2, a: 2 -> 2
  CHECK(b.compose(a)(1) == 0);

  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0}), Error);
  CHECK_THROWS_AS(Perm::from_cycles(2, {{0, 0}}), Error);
}

TEST_CASE("group words reduce freely") {
  GroupWord a = GroupWord::state(0);
  GroupWord b = GroupWord::state(1);
  CHECK((a * a.inverse()).empty());
  CHECK((a * b * b.inverse() * a).size() == 2);
  CHECK(a.pow(3).size() == 3);
  CHECK(a.pow(-2) == a.inverse() * a.inverse());
  CHECK(a.pow(0).empty());
  CHECK(conjugate(b, a) == b * a * b.inverse());
  CHECK(commutator(a, b) == a * b * a.inverse() * b.inverse());

  WordHash h;
  CHECK(h(a * b) == h(a * b));
}

TEST_CASE("step and act on the basilica recursion") {
  CatalogEntry e = basilica();
  const Presentation& p = e.presentation;
  GroupWord a = parse_word(p, "a");
  GroupWord b = parse_word(p, "b");

  // a = (1, b): trivial root, section b at letter 1
  auto [x0, s0] = step(p, a, 0);
  CHECK(x0 == 0);
  CHECK(s0.empty());
  auto [x1, s1] = step(p, a, 1);
  CHECK(x1 == 1);
  CHECK(s1 == b);

  // b = (0 1)(1, a)
  CHECK(act(p, b, parse_tree_word(p, "0")) == parse_tree_word(p, "1"));
  CHECK(act(p, b, parse_tree_word(p, "1.0")) == parse_tree_word(p, "0.0"));
  CHECK(section(p, b, parse_tree_word(p, "1")) == a);

  // inverses: (g^-1)_x = (g_{g^-1(x)})^-1
  auto [ix, is] = step(p, b.inverse(), 0);
  CHECK(ix == 1);
  CHECK(is == a.inverse());

  // products: the right factor acts first
  GroupWord ab = a * b;
  CHECK(act(p, ab, parse_tree_word(p, "0")) == parse_tree_word(p, "1"));
  CHECK(section(p, ab, parse_tree_word(p, "0")) == b);  // a_1 b_0 = b * 1
}

TEST_CASE("act against the oracle on random words") {
  std::mt19937 rng(7);
  for (const CatalogEntry& e : all_entries()) {
    const Presentation& p = e.presentation;
    for (int trial = 0; trial < 50; ++trial) {
      GroupWord w = random_word(rng, p.state_count(), 5);
      TreeWord v = random_vertex(rng, p.degree(), 4);
      TreeWord image = act(p, w, v);
      std::vector<int> expect =
          oracle::word_image(p, w.factors(), v.letters());
      CHECK(image.letters() == expect);
    }
  }
}

TEST_CASE("sections against the oracle, semantically") {
  // act(w, v.u) = act(w, v).act(section(w, v), u) for every deeper vertex u
  std::mt19937 rng(11);
  for (const CatalogEntry& e : all_entries()) {
    const Presentation& p = e.presentation;
    for (int trial = 0; trial < 25; ++trial) {
      GroupWord w = random_word(rng, p.state_count(), 4);
      TreeWord v = random_vertex(rng, p.degree(), 3);
      GroupWord s = section(p, w, v);
      TreeWord head = act(p, w, v);
      for (int trial2 = 0; trial2 < 5; ++trial2) {
        TreeWord u = random_vertex(rng, p.degree(), 3);
        TreeWord whole = act(p, w, v.concat(u));
        TreeWord tail(oracle::word_image(p, s.factors(), u.letters()));
        CHECK(whole == head.concat(tail));
      }
    }
  }
}

TEST_CASE("root_perm and level_perm") {
  CatalogEntry e = basilica_reduced();
  const Presentation& p = e.presentation;
  GroupWord t = parse_word(p, "a*b^-1");
  CHECK(root_perm(p, t).images() == std::vector<int>{3, 2, 0, 1});
  CHECK(root_perm(p, parse_word(p, "a")).cycle_str() == "(2 3)");

  for (int n = 1; n <= 3; ++n) {
    Perm lp = level_perm(p, t, n);
    std::vector<std::uint64_t> expect = oracle::images_on_level(p, t, n);
    REQUIRE(lp.degree() == static_cast<int>(expect.size()));
    for (int i = 0; i < lp.degree(); ++i)
      CHECK(static_cast<std::uint64_t>(lp(i)) ==
            expect[static_cast<std::size_t>(i)]);
  }

  CHECK(level_perm(p, t, 0).degree() == 1);
  Budget tiny;
  tiny.level_table_cap = 4;
  CHECK_THROWS_AS(level_perm(p, t, 2, tiny), BudgetError);
}

TEST_CASE("tree indexing is lexicographic") {
  CHECK(tree_index(3, TreeWord({1, 2, 0})) == 1 * 9 + 2 * 3 + 0);
  CHECK(tree_word(3, 15, 3) == TreeWord({1, 2, 0}));
  for (std::uint64_t i = 0; i < 16; ++i)
    CHECK(tree_index(2, tree_word(2, i, 4)) == i);
  CHECK(tree_word(5, 0, 0).empty());
}

TEST_CASE("checked_pow") {
  CHECK(checked_pow(4, 3, 100) == std::uint64_t{64});
  CHECK(!checked_pow(4, 3, 63).has_value());
  CHECK(checked_pow(2, 0, 1) == std::uint64_t{1});
  CHECK(!checked_pow(10, 30, 1u << 30).has_value());  // would overflow
}

TEST_CASE("perm_closure") {
  Perm s = Perm::from_cycles(3, {{0, 1}});
  Perm t = Perm::from_cycles(3, {{1, 2}});
  std::vector<Perm> s3 = perm_closure({s, t}, 100);
  CHECK(s3.size() == 6);
  CHECK(s3[0].is_identity());

  std::vector<Perm> c2 = perm_closure({s}, 100);
  CHECK(c2.size() == 2);

  CHECK_THROWS_AS(perm_closure({s, t}, 5), BudgetError);
  CHECK_THROWS_AS(perm_closure({}, 5), Error);
}
