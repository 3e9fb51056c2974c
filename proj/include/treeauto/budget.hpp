#pragma once

#include <cstdint>

namespace treeauto {

// Resource limits shared by the semi-decision procedures. A search that hits
// a limit reports Unknown (or throws BudgetError where the operation has no
// Unknown channel); limits never change a decided verdict.
struct Budget {
  std::uint64_t closure_cap = 100000;   // section-closure nodes per search
  int membership_radius = 8;            // member_search ball radius
  int order_bound = 64;                 // default order_up_to limit
  int classify_cap = 12;                // depth/period/level search ceiling
  std::uint64_t level_table_cap = 1u << 20;  // d^n entries for level tables
  int rk_alphabet_cap = 4096;           // d^k ceiling for restrict_level
  int odometer_scan_radius = 3;         // ball radius in self_replicating
  std::uint64_t perm_group_cap = 1000000;  // permutation-group closure size
};

}  // namespace treeauto
