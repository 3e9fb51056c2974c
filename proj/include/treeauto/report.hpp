#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "treeauto/catalog.hpp"

namespace treeauto {

// Classification report over the distinguished states y (deterministic:
// nlohmann::json orders keys alphabetically).
nlohmann::json classification_report(const Presentation& p,
                                     const std::vector<int>& y,
                                     const Budget& budget = {});

std::string classification_text(const Presentation& p,
                                const std::vector<int>& y,
                                const Budget& budget = {});

std::string cycle_graph_dot(const CycleGraph& g,
                            const std::vector<std::string>& perm_labels);
nlohmann::json cycle_graph_json(const CycleGraph& g,
                                const std::vector<std::string>& perm_labels);

}  // namespace treeauto
