#include "treeauto/catalog.hpp"

#include <string>
#include <utility>
#include <vector>

#include "treeauto/core.hpp"
#include "treeauto/errors.hpp"

namespace treeauto {

namespace {

GroupWord st(int s) { return GroupWord::state(s); }

Assertion make(std::string label, Assertion::Kind kind) {
  Assertion a;
  a.label = std::move(label);
  a.kind = kind;
  return a;
}

Assertion words_equal(std::string label, GroupWord lhs, GroupWord rhs) {
  Assertion a = make(std::move(label), Assertion::Kind::WordsEqual);
  a.lhs = std::move(lhs);
  a.rhs = std::move(rhs);
  return a;
}

Assertion words_distinct(std::string label, GroupWord lhs, GroupWord rhs) {
  Assertion a = make(std::move(label), Assertion::Kind::WordsDistinct);
  a.lhs = std::move(lhs);
  a.rhs = std::move(rhs);
  return a;
}

Assertion trivial(std::string label, GroupWord lhs) {
  Assertion a = make(std::move(label), Assertion::Kind::Trivial);
  a.lhs = std::move(lhs);
  return a;
}

Assertion nontrivial(std::string label, GroupWord lhs) {
  Assertion a = make(std::move(label), Assertion::Kind::Nontrivial);
  a.lhs = std::move(lhs);
  return a;
}

Assertion section_equals(std::string label, GroupWord lhs,
                         std::vector<int> vertex, GroupWord rhs) {
  Assertion a = make(std::move(label), Assertion::Kind::SectionEquals);
  a.lhs = std::move(lhs);
  a.vertex = TreeWord(std::move(vertex));
  a.rhs = std::move(rhs);
  return a;
}

Assertion root_perm_is(std::string label, GroupWord lhs, Perm perm) {
  Assertion a = make(std::move(label), Assertion::Kind::RootPermIs);
  a.lhs = std::move(lhs);
  a.perm = std::move(perm);
  return a;
}

Assertion odometer_is(std::string label, GroupWord lhs, bool expect) {
  Assertion a = make(std::move(label), Assertion::Kind::OdometerIs);
  a.lhs = std::move(lhs);
  a.expect = expect;
  return a;
}

Assertion section_pair_is(std::string label, GroupWord lhs, GroupWord first,
                          GroupWord second) {
  Assertion a = make(std::move(label), Assertion::Kind::SectionPairIs);
  a.lhs = std::move(lhs);
  a.rhs = std::move(first);
  a.alt = std::move(second);
  return a;
}

}  // namespace

std::vector<int> CatalogEntry::generator_indices() const {
  std::vector<int> out;
  for (const std::string& name : generators)
    out.push_back(presentation.require(name));
  return out;
}

std::vector<GroupWord> CatalogEntry::generator_words() const {
  std::vector<GroupWord> out;
  for (int s : generator_indices()) out.push_back(GroupWord::state(s));
  return out;
}

CatalogEntry basilica() {
  const int A = 0, B = 1;
  Presentation p(
      Alphabet{2},
      {State{"a", Perm::identity(2), {GroupWord{}, st(B)}},
       State{"b", Perm::from_cycles(2, {{0, 1}}), {GroupWord{}, st(A)}}});
  CatalogEntry e{"basilica", std::move(p), {"a", "b"}, {}, {}};
  e.expected.reduced_form = false;
  e.expected.kneading = true;
  e.expected.generalized_basilica = false;
  e.expected.abelian_wreath_type = false;
  e.expected.self_replicating = Verdict::Unknown;
  e.expected.level1_orbits = {{0, 1}};
  e.assertions = {
      root_perm_is("a root", st(A), Perm::identity(2)),
      root_perm_is("b root", st(B), Perm::from_cycles(2, {{0, 1}})),
      section_equals("a at 1", st(A), {1}, st(B)),
      section_equals("a at 0", st(A), {0}, GroupWord{}),
      section_equals("b at 1", st(B), {1}, st(A)),
      words_distinct("a, b distinct", st(A), st(B)),
  };
  return e;
}

CatalogEntry basilica_reduced() {
  const int A = 0, B = 1;
  Presentation p(
      Alphabet{4},
      {State{"a",
             Perm::from_cycles(4, {{2, 3}}),
             {GroupWord{}, GroupWord{}, GroupWord{}, st(A)}},
       State{"b",
             Perm::from_cycles(4, {{0, 2}, {1, 3}}),
             {GroupWord{}, GroupWord{}, GroupWord{}, st(B)}}});
  CatalogEntry e{"basilica_r2", std::move(p), {"a", "b"}, {}, {}};
  e.expected.reduced_form = true;
  e.expected.kneading = true;
  e.expected.generalized_basilica = true;
  e.expected.balanced = true;
  e.expected.abelian_wreath_type = false;
  e.expected.self_replicating = Verdict::True;
  e.expected.level1_orbits = {{0, 1, 2, 3}};

  GroupWord a2 = st(A).pow(2);
  GroupWord b2 = st(B).pow(2);
  GroupWord t = st(A) * st(B).inverse();
  e.assertions = {
      root_perm_is("a^2 root", a2, Perm::identity(4)),
      section_equals("a^2 at 0", a2, {0}, GroupWord{}),
      section_equals("a^2 at 1", a2, {1}, GroupWord{}),
      section_equals("a^2 at 2", a2, {2}, st(A)),
      section_equals("a^2 at 3", a2, {3}, st(A)),
      root_perm_is("b^2 root", b2, Perm::identity(4)),
      section_equals("b^2 at 0", b2, {0}, GroupWord{}),
      section_equals("b^2 at 1", b2, {1}, st(B)),
      section_equals("b^2 at 2", b2, {2}, GroupWord{}),
      section_equals("b^2 at 3", b2, {3}, st(B)),
      root_perm_is("a b^-1 root", t, Perm::from_cycles(4, {{0, 3, 1, 2}})),
      section_equals("a b^-1 at 0", t, {0}, GroupWord{}),
      section_equals("a b^-1 at 1", t, {1}, t),
      section_equals("a b^-1 at 2", t, {2}, GroupWord{}),
      section_equals("a b^-1 at 3", t, {3}, GroupWord{}),
      odometer_is("a b^-1 odometer", t, true),
      odometer_is("a not odometer", st(A), false),
  };
  return e;
}

CatalogEntry ggs(int p, const std::vector<int>& e) {
  if (p != 3 && p != 5 && p != 7)
    throw Error("ggs: the letter count must be 3, 5 or 7");
  if (static_cast<int>(e.size()) != p - 1)
    throw Error("ggs: expected " + std::to_string(p - 1) + " exponents");
  std::vector<int> exps;
  bool any = false;
  for (int x : e) {
    int m = ((x % p) + p) % p;
    exps.push_back(m);
    if (m != 0) any = true;
  }
  if (!any) throw Error("ggs: the zero exponent vector is rejected");

  const int A = 0, B = 1;
  std::vector<int> cycle(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) cycle[static_cast<std::size_t>(i)] = i;

  std::vector<GroupWord> b_tr;
  for (int m : exps) b_tr.push_back(st(A).pow(m));
  b_tr.push_back(st(B));

  Presentation pres(
      Alphabet{p},
      {State{"a", Perm::from_cycles(p, {cycle}),
             std::vector<GroupWord>(static_cast<std::size_t>(p))},
       State{"b", Perm::identity(p), std::move(b_tr)}});

  std::string name = "ggs_" + std::to_string(p) + "_";
  for (int m : exps) name += std::to_string(m);
  CatalogEntry entry{std::move(name), std::move(pres), {"a", "b"}, {}, {}};
  entry.expected.reduced_form = true;
  entry.expected.generalized_basilica = false;
  entry.expected.abelian_wreath_type = true;
  entry.expected.level1_orbits = {std::vector<std::uint64_t>(
      static_cast<std::size_t>(p))};
  for (int i = 0; i < p; ++i)
    (*entry.expected.level1_orbits)[0][static_cast<std::size_t>(i)] =
        static_cast<std::uint64_t>(i);
  entry.expected.orders = {
      OrderCheck{"a", st(A), 2 * p, p},
      OrderCheck{"b", st(B), 2 * p, p},
  };
  entry.assertions = {
      nontrivial("b nontrivial", st(B)),
      section_equals("b at last", st(B), {p - 1}, st(B)),
  };
  return entry;
}

CatalogEntry g_p(int p) {
  if (p != 3 && p != 5 && p != 7)
    throw Error("g_p: the letter count must be 3, 5 or 7");
  const int G = 0, H = 1;
  std::vector<int> cycle(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) cycle[static_cast<std::size_t>(i)] = i;
  Perm c = Perm::from_cycles(p, {cycle});

  std::vector<GroupWord> g_tr(static_cast<std::size_t>(p));
  g_tr[0] = st(G);
  std::vector<GroupWord> h_tr(static_cast<std::size_t>(p));
  h_tr[1] = st(H);

  Presentation pres(Alphabet{p}, {State{"g", c, std::move(g_tr)},
                                  State{"h", c, std::move(h_tr)}});
  CatalogEntry entry{"g_" + std::to_string(p), std::move(pres),
                     {"g", "h"}, {}, {}};
  entry.expected.reduced_form = true;
  entry.expected.kneading = false;
  entry.expected.generalized_basilica = true;
  entry.expected.balanced = true;
  entry.expected.abelian_wreath_type = true;
  entry.expected.self_replicating = Verdict::True;
  entry.expected.level1_orbits = {std::vector<std::uint64_t>(
      static_cast<std::size_t>(p))};
  for (int i = 0; i < p; ++i)
    (*entry.expected.level1_orbits)[0][static_cast<std::size_t>(i)] =
        static_cast<std::uint64_t>(i);
  entry.expected.orders = {OrderCheck{"g", st(G), 2 * p, std::nullopt}};

  GroupWord com_big = commutator(st(G).pow(p), st(H));
  GroupWord com = commutator(st(G), st(H));
  std::vector<Assertion> as = {
      section_equals("gh at 0", st(G) * st(H), {0}, GroupWord{}),
      section_equals("hg at 0", st(H) * st(G), {0}, st(H) * st(G)),
      words_distinct("gh, hg distinct", st(G) * st(H), st(H) * st(G)),
      nontrivial("[g,h] nontrivial", com),
      root_perm_is("[g^p,h] root", com_big, Perm::identity(p)),
  };
  for (int x = 0; x < p; ++x)
    as.push_back(section_equals(
        "[g^p,h] at " + std::to_string(x), com_big, {x},
        x == 2 ? com : GroupWord{}));
  entry.assertions = std::move(as);
  return entry;
}

CatalogEntry balanced_pair_5() {
  const int A = 0, B = 1;
  Presentation p(
      Alphabet{5},
      {State{"a",
             Perm::from_cycles(5, {{0, 1}, {3, 4}}),
             {GroupWord{}, GroupWord{}, GroupWord{}, GroupWord{}, st(A)}},
       State{"b",
             Perm::from_cycles(5, {{1, 2}, {3, 4}}),
             {GroupWord{}, GroupWord{}, GroupWord{}, st(B), GroupWord{}}}});
  CatalogEntry e{"balanced_pair_5", std::move(p), {"a", "b"}, {}, {}};
  e.expected.reduced_form = true;
  e.expected.kneading = false;
  e.expected.generalized_basilica = true;
  e.expected.balanced = true;
  e.expected.self_replicating = Verdict::Unknown;
  e.expected.level1_orbits = {{0, 1, 2}, {3, 4}};

  GroupWord c = st(A) * st(B);
  GroupWord c1 = conjugate(st(B).pow(-2), c);
  GroupWord c2 = conjugate(st(B).pow(-4), c);
  e.assertions = {
      root_perm_is("ab root", c, Perm::from_cycles(5, {{0, 1, 2}})),
      section_equals("ab at 0", c, {0}, GroupWord{}),
      section_equals("ab at 1", c, {1}, GroupWord{}),
      section_equals("ab at 2", c, {2}, GroupWord{}),
      section_equals("ab at 3", c, {3}, c),
      section_equals("ab at 4", c, {4}, GroupWord{}),
      words_distinct("ab vs b^-2 ab b^2", c, c1),
      words_distinct("ab vs b^-4 ab b^4", c, c2),
      words_distinct("b^-2 ab b^2 vs b^-4 ab b^4", c1, c2),
  };
  return e;
}

CatalogEntry dihedral3() {
  const int A = 0, B = 1;
  Presentation p(Alphabet{3},
                 {State{"a",
                        Perm::from_cycles(3, {{0, 1}}),
                        {GroupWord{}, GroupWord{}, st(A)}},
                  State{"b",
                        Perm::from_cycles(3, {{0, 2}}),
                        {GroupWord{}, st(B), GroupWord{}}}});
  CatalogEntry e{"dihedral_3", std::move(p), {"a", "b"}, {}, {}};
  e.expected.reduced_form = true;
  e.expected.kneading = true;
  e.expected.generalized_basilica = true;
  e.expected.balanced = false;
  e.expected.abelian_wreath_type = false;
  e.expected.self_replicating = Verdict::True;
  e.expected.level1_orbits = {{0, 1, 2}};
  e.expected.orders = {
      OrderCheck{"a", st(A), 8, 2},
      OrderCheck{"b", st(B), 8, 2},
      OrderCheck{"ab", st(A) * st(B), 32, std::nullopt},
  };
  e.assertions = {
      nontrivial("ab nontrivial", st(A) * st(B)),
      words_distinct("ab, ba distinct", st(A) * st(B), st(B) * st(A)),
  };
  return e;
}

CatalogEntry dihedral2_aws() {
  const int A = 0, B = 1;
  Presentation p(Alphabet{2},
                 {State{"a",
                        Perm::from_cycles(2, {{0, 1}}),
                        {GroupWord{}, GroupWord{}}},
                  State{"b", Perm::identity(2), {st(A), st(B)}}});
  CatalogEntry e{"dihedral_2_aws", std::move(p), {"a", "b"}, {}, {}};
  e.expected.reduced_form = true;
  e.expected.kneading = true;
  e.expected.generalized_basilica = false;
  e.expected.abelian_wreath_type = true;
  e.expected.self_replicating = Verdict::Unknown;
  e.expected.level1_orbits = {{0, 1}};
  e.expected.orders = {
      OrderCheck{"a", st(A), 8, 2},
      OrderCheck{"b", st(B), 8, 2},
      OrderCheck{"ab", st(A) * st(B), 32, std::nullopt},
  };
  e.assertions = {
      trivial("a^2 trivial", st(A).pow(2)),
      trivial("b^2 trivial", st(B).pow(2)),
      nontrivial("ab nontrivial", st(A) * st(B)),
  };
  return e;
}

CatalogEntry lamplighter4() {
  const int A = 0, B = 1;
  Presentation p(
      Alphabet{4},
      {State{"a",
             Perm::from_cycles(4, {{0, 2}, {1, 3}}),
             {GroupWord{}, GroupWord{}, GroupWord{}, st(A)}},
       State{"b",
             Perm::from_cycles(4, {{0, 2}}),
             {GroupWord{}, st(B), GroupWord{}, GroupWord{}}}});
  CatalogEntry e{"lamplighter_4", std::move(p), {"a", "b"}, {}, {}};
  e.expected.reduced_form = true;
  e.expected.kneading = false;
  e.expected.generalized_basilica = true;
  e.expected.balanced = false;
  e.expected.abelian_wreath_type = true;
  e.expected.self_replicating = Verdict::Unknown;
  e.expected.level1_orbits = {{0, 2}, {1, 3}};
  e.expected.orders = {OrderCheck{"b", st(B), 8, 2},
                       OrderCheck{"a", st(A), 16, std::nullopt}};

  std::vector<GroupWord> conj;
  for (int i = 0; i <= 3; ++i)
    conj.push_back(conjugate(st(A).pow(i), st(B)));
  GroupWord u1 = conj[1];
  GroupWord w = st(B) * u1;
  std::vector<Assertion> as = {
      trivial("b^2 trivial", st(B).pow(2)),
      root_perm_is("aba^-1 root", u1, Perm::from_cycles(4, {{0, 2}})),
      section_equals("aba^-1 at 0", u1, {0}, GroupWord{}),
      section_equals("aba^-1 at 1", u1, {1}, GroupWord{}),
      section_equals("aba^-1 at 2", u1, {2}, GroupWord{}),
      section_equals("aba^-1 at 3", u1, {3}, st(B)),
      root_perm_is("b aba^-1 root", w, Perm::identity(4)),
      section_equals("b aba^-1 at 0", w, {0}, GroupWord{}),
      section_equals("b aba^-1 at 1", w, {1}, st(B)),
      section_equals("b aba^-1 at 2", w, {2}, GroupWord{}),
      section_equals("b aba^-1 at 3", w, {3}, st(B)),
      root_perm_is("a^2 b a^-2 root", conj[2], Perm::from_cycles(4, {{0, 2}})),
      section_equals("a^2 b a^-2 at 1", conj[2], {1}, conj[1]),
      section_equals("a^2 b a^-2 at 0", conj[2], {0}, GroupWord{}),
      section_equals("a^2 b a^-2 at 2", conj[2], {2}, GroupWord{}),
      section_equals("a^2 b a^-2 at 3", conj[2], {3}, GroupWord{}),
      section_equals("a^3 b a^-3 at 1", conj[3], {1}, GroupWord{}),
  };
  GroupWord a4conj = conjugate(st(A).pow(4), st(B));
  as.push_back(root_perm_is("a^4 b a^-4 root", a4conj,
                            Perm::from_cycles(4, {{0, 2}})));
  as.push_back(section_equals("a^4 b a^-4 at 1", a4conj, {1}, conj[2]));
  for (int i = 0; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      as.push_back(trivial(
          "conjugates " + std::to_string(i) + "," + std::to_string(j) +
              " commute",
          commutator(conj[static_cast<std::size_t>(i)],
                     conj[static_cast<std::size_t>(j)])));
      as.push_back(nontrivial(
          "product " + std::to_string(i) + std::to_string(j) + " nontrivial",
          conj[static_cast<std::size_t>(i)] *
              conj[static_cast<std::size_t>(j)]));
    }
  for (int i = 0; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      for (int k = j + 1; k <= 3; ++k)
        as.push_back(nontrivial("product " + std::to_string(i) +
                                    std::to_string(j) + std::to_string(k) +
                                    " nontrivial",
                                conj[static_cast<std::size_t>(i)] *
                                    conj[static_cast<std::size_t>(j)] *
                                    conj[static_cast<std::size_t>(k)]));
  e.assertions = std::move(as);
  return e;
}

CatalogEntry weak_selfrep2() {
  const int S = 0, A = 1;
  Presentation p(Alphabet{2},
                 {State{"s",
                        Perm::from_cycles(2, {{0, 1}}),
                        {GroupWord{}, GroupWord{}}},
                  State{"a",
                        Perm::from_cycles(2, {{0, 1}}),
                        {st(S), st(S) * st(A)}}});
  CatalogEntry e{"weak_selfrep_2", std::move(p), {"a"}, {}, {}};
  e.expected.reduced_form = false;
  e.expected.generalized_basilica = false;
  e.expected.abelian_wreath_type = false;
  e.expected.self_replicating = Verdict::Unknown;
  e.assertions = {
      trivial("s^2 trivial", st(S).pow(2)),
      words_equal("s a s = a^-1", st(S) * st(A) * st(S), st(A).pow(-1)),
      root_perm_is("a^2 root", st(A).pow(2), Perm::identity(2)),
      section_pair_is("a^2 sections", st(A).pow(2), st(A).pow(-1), st(A)),
      nontrivial("a nontrivial", st(A)),
      words_distinct("a, a^-1 distinct", st(A), st(A).pow(-1)),
  };
  return e;
}

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  out.push_back(basilica());
  out.push_back(basilica_reduced());
  CatalogEntry gupta = ggs(3, {1, 2});
  gupta.expected.self_replicating = Verdict::Unknown;
  out.push_back(std::move(gupta));
  CatalogEntry ggs5 = ggs(5, {1, 0, 0, 1});
  ggs5.expected.self_replicating = Verdict::Unknown;
  out.push_back(std::move(ggs5));
  out.push_back(g_p(3));
  out.push_back(g_p(5));
  out.push_back(balanced_pair_5());
  out.push_back(dihedral3());
  out.push_back(dihedral2_aws());
  out.push_back(lamplighter4());
  out.push_back(weak_selfrep2());
  return out;
}

bool check_assertion(const Presentation& p, const Assertion& a,
                     const Budget& budget, TrivialityCache* cache) {
  TrivialityCache local;
  if (!cache) cache = &local;
  switch (a.kind) {
    case Assertion::Kind::WordsEqual:
      return are_equal(p, a.lhs, a.rhs, budget, cache).is_true();
    case Assertion::Kind::WordsDistinct:
      return are_equal(p, a.lhs, a.rhs, budget, cache).is_false();
    case Assertion::Kind::Trivial:
      return is_trivial(p, a.lhs, budget, cache).is_true();
    case Assertion::Kind::Nontrivial:
      return is_trivial(p, a.lhs, budget, cache).is_false();
    case Assertion::Kind::SectionEquals:
      return are_equal(p, section(p, a.lhs, a.vertex), a.rhs, budget, cache)
          .is_true();
    case Assertion::Kind::RootPermIs:
      return root_perm(p, a.lhs) == a.perm;
    case Assertion::Kind::OdometerIs:
      return is_odometer(p, a.lhs, budget, cache) == a.expect;
    case Assertion::Kind::SectionPairIs: {
      if (p.degree() != 2) return false;
      GroupWord s0 = step(p, a.lhs, 0).second;
      GroupWord s1 = step(p, a.lhs, 1).second;
      auto eq = [&](const GroupWord& x, const GroupWord& y) {
        return are_equal(p, x, y, budget, cache).is_true();
      };
      return (eq(s0, a.rhs) && eq(s1, a.alt)) ||
             (eq(s0, a.alt) && eq(s1, a.rhs));
    }
  }
  return false;
}

std::vector<FlagCheckRow> check_expected_flags(const CatalogEntry& entry,
                                               const Budget& budget) {
  std::vector<FlagCheckRow> rows;
  TrivialityCache cache;
  const Presentation& p = entry.presentation;
  std::vector<int> y = entry.generator_indices();

  auto push = [&rows](std::string label, bool pass, std::string detail) {
    rows.push_back(FlagCheckRow{std::move(label), pass, std::move(detail)});
  };
  auto flag_detail = [](bool got, bool want) {
    return std::string("got ") + (got ? "true" : "false") + ", expected " +
           (want ? "true" : "false");
  };

  const ExpectedFlags& x = entry.expected;
  if (x.reduced_form) {
    bool got = p.automaton_closed()
                   ? is_reduced_form(p, y, budget, &cache).ok
                   : reduced_form_conditions(p, y, budget, &cache).ok;
    push("reduced_form", got == *x.reduced_form,
         flag_detail(got, *x.reduced_form));
  }
  if (x.kneading) {
    try {
      bool got = is_kneading(p, y, budget, &cache).kneading;
      push("kneading", got == *x.kneading, flag_detail(got, *x.kneading));
    } catch (const PreconditionError& err) {
      push("kneading", false, err.what());
    }
  }
  if (x.generalized_basilica) {
    bool got = is_generalized_basilica(p, y, budget, &cache);
    push("generalized_basilica", got == *x.generalized_basilica,
         flag_detail(got, *x.generalized_basilica));
  }
  if (x.balanced) {
    try {
      bool got = is_balanced(p, y, budget, &cache);
      push("balanced", got == *x.balanced, flag_detail(got, *x.balanced));
    } catch (const PreconditionError& err) {
      push("balanced", false, err.what());
    }
  }
  if (x.abelian_wreath_type) {
    bool got = is_abelian_wreath_type(p, y, budget, &cache);
    push("abelian_wreath_type", got == *x.abelian_wreath_type,
         flag_detail(got, *x.abelian_wreath_type));
  }
  if (x.self_replicating) {
    Verdict got = self_replicating(p, y, budget, &cache).verdict;
    auto name = [](Verdict v) {
      return v == Verdict::True ? "True"
             : v == Verdict::False ? "False"
                                   : "Unknown";
    };
    push("self_replicating", got == *x.self_replicating,
         std::string("got ") + name(got) + ", expected " +
             name(*x.self_replicating));
  }
  if (x.level1_orbits) {
    auto got = orbits_on_level(p, entry.generator_words(), 1, budget);
    bool pass = got == *x.level1_orbits;
    push("level1_orbits", pass, pass ? "" : "orbit partition differs");
  }
  for (const OrderCheck& oc : x.orders) {
    OrderResult r = order_up_to(p, oc.word, oc.max_n, budget, &cache);
    bool pass;
    std::string detail;
    if (oc.expected) {
      pass = r.verdict == Verdict::True && r.order &&
             *r.order == *oc.expected;
      detail = "expected order " + std::to_string(*oc.expected);
    } else {
      pass = r.verdict == Verdict::False;
      detail = "expected no order up to " + std::to_string(oc.max_n);
    }
    push("order(" + oc.label + ")", pass, pass ? "" : detail);
  }
  return rows;
}

}  // namespace treeauto
