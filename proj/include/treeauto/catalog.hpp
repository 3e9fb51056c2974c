#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treeauto/structure.hpp"

namespace treeauto {

// One checkable known fact about a catalog entry.
struct Assertion {
  enum class Kind {
    WordsEqual,      // lhs == rhs semantically
    WordsDistinct,   // lhs != rhs semantically
    Trivial,         // lhs trivial
    Nontrivial,      // lhs non-trivial
    SectionEquals,   // section(lhs, vertex) == rhs
    RootPermIs,      // root_perm(lhs) == perm
    OdometerIs,      // is_odometer(lhs) == expect
    SectionPairIs,   // degree-2 only: first-level sections of lhs are
                     // {rhs, alt} as a multiset
  };

  std::string label;
  Kind kind = Kind::WordsEqual;
  GroupWord lhs;
  GroupWord rhs;
  GroupWord alt;
  TreeWord vertex;
  Perm perm;
  bool expect = true;
};

struct OrderCheck {
  std::string label;
  GroupWord word;
  int max_n = 64;
  std::optional<int> expected;  // absent = certified no order below max_n
};

// Recognizer outcomes a catalog entry pins down; unset fields are not
// claimed either way.
struct ExpectedFlags {
  std::optional<bool> reduced_form;
  std::optional<bool> kneading;
  std::optional<bool> generalized_basilica;
  std::optional<bool> balanced;
  std::optional<bool> abelian_wreath_type;
  std::optional<Verdict> self_replicating;
  std::optional<std::vector<std::vector<std::uint64_t>>> level1_orbits;
  std::vector<OrderCheck> orders;
};

struct CatalogEntry {
  std::string name;
  Presentation presentation;
  std::vector<std::string> generators;  // distinguished state names
  ExpectedFlags expected;
  std::vector<Assertion> assertions;

  std::vector<int> generator_indices() const;
  std::vector<GroupWord> generator_words() const;
};

CatalogEntry basilica();
CatalogEntry basilica_reduced();
// p in {3,5,7}; e has p-1 entries mod p, not all zero.
CatalogEntry ggs(int p, const std::vector<int>& e);
CatalogEntry g_p(int p);
CatalogEntry balanced_pair_5();
CatalogEntry dihedral3();
CatalogEntry dihedral2_aws();
CatalogEntry lamplighter4();
CatalogEntry weak_selfrep2();

// The fixed list the CLI and the test suites iterate.
std::vector<CatalogEntry> all_entries();

// Shared assertion runner: true when the fact holds (Unknown counts as a
// failure so budget problems surface).
bool check_assertion(const Presentation& p, const Assertion& a,
                     const Budget& budget = {},
                     TrivialityCache* cache = nullptr);

// Expected-flag evaluation, one (label, pass) row per pinned flag.
struct FlagCheckRow {
  std::string label;
  bool pass = false;
  std::string detail;
};
std::vector<FlagCheckRow> check_expected_flags(const CatalogEntry& entry,
                                               const Budget& budget = {});

}  // namespace treeauto
