#include "treeauto/report.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "treeauto/classify.hpp"
#include "treeauto/errors.hpp"
#include "treeauto/structure.hpp"

namespace treeauto {

namespace {

using nlohmann::json;

const char* certificate_name(CertificateKind kind) {
  return kind == CertificateKind::DirectedGenerators ? "directed-generators"
                                                     : "odometer+membership";
}

struct GroupFlags {
  bool reduced_form = false;
  bool kneading = false;
  bool generalized_basilica = false;
  bool balanced = false;
  bool abelian_wreath_type = false;
  SelfReplicatingResult self_rep;
};

GroupFlags group_flags(const Presentation& p, const std::vector<int>& y,
                       const Budget& budget, TrivialityCache* cache) {
  GroupFlags out;
  out.reduced_form = reduced_form_conditions(p, y, budget, cache).ok;
  // Kneading is defined for transition-closed families only; a family that
  // is not one is reported as not kneading rather than as an error.
  try {
    out.kneading = is_kneading(p, y, budget, cache).kneading;
  } catch (const PreconditionError&) {
    out.kneading = false;
  }
  out.generalized_basilica = is_generalized_basilica(p, y, budget, cache);
  out.balanced =
      out.generalized_basilica && is_balanced(p, y, budget, cache);
  out.abelian_wreath_type = is_abelian_wreath_type(p, y, budget, cache);
  out.self_rep = self_replicating(p, y, budget, cache);
  return out;
}

}  // namespace

json classification_report(const Presentation& p, const std::vector<int>& y,
                           const Budget& budget) {
  TrivialityCache cache;
  std::uint64_t spent = 0;

  json generators = json::array();
  for (int s : y) {
    const GroupWord w = GroupWord::state(s);
    FinitaryResult fin = is_finitary(p, w, -1, budget, &cache);
    DirectedResult dir = is_directed(p, w, -1, budget, &cache);
    spent += fin.decision.budget_spent + dir.decision.budget_spent;

    json entry;
    entry["name"] = p.state(s).name;
    switch (fin.decision.verdict) {
      case Verdict::True:
        entry["finitary"] = true;
        break;
      case Verdict::False:
        entry["finitary"] = false;
        break;
      case Verdict::Unknown:
        entry["finitary"] = "unknown";
        break;
    }
    switch (dir.decision.verdict) {
      case Verdict::True:
        entry["directed"] = json{{"period", *dir.period},
                                 {"active_vertex", dir.active_vertex->str()}};
        break;
      case Verdict::False:
        entry["directed"] = false;
        break;
      case Verdict::Unknown:
        entry["directed"] = "unknown";
        break;
    }
    entry["odometer"] = is_odometer(p, w, budget, &cache);
    generators.push_back(std::move(entry));
  }

  GroupFlags flags = group_flags(p, y, budget, &cache);

  json self_rep;
  self_rep["verdict"] =
      flags.self_rep.verdict == Verdict::True ? json(true) : json("unknown");
  self_rep["certificate"] =
      flags.self_rep.certificates.empty()
          ? "unknown"
          : certificate_name(flags.self_rep.certificates.front().kind);

  json group;
  group["reduced_form"] = flags.reduced_form;
  group["kneading"] = flags.kneading;
  group["generalized_basilica"] = flags.generalized_basilica;
  group["balanced"] = flags.balanced;
  group["abelian_wreath_type"] = flags.abelian_wreath_type;
  group["self_replicating"] = std::move(self_rep);

  json budgets;
  budgets["closure_cap"] = budget.closure_cap;
  budgets["membership_radius"] = budget.membership_radius;
  budgets["order_bound"] = budget.order_bound;
  budgets["classify_cap"] = budget.classify_cap;
  budgets["level_table_cap"] = budget.level_table_cap;
  budgets["rk_alphabet_cap"] = budget.rk_alphabet_cap;
  budgets["odometer_scan_radius"] = budget.odometer_scan_radius;
  budgets["perm_group_cap"] = budget.perm_group_cap;
  budgets["spent"] = spent;

  json out;
  out["alphabet"] = p.degree();
  out["generators"] = std::move(generators);
  out["group"] = std::move(group);
  out["budgets"] = std::move(budgets);
  return out;
}

std::string classification_text(const Presentation& p,
                                const std::vector<int>& y,
                                const Budget& budget) {
  TrivialityCache cache;
  std::ostringstream out;
  out << "alphabet: " << p.degree() << "\n";

  for (int s : y) {
    const GroupWord w = GroupWord::state(s);
    FinitaryResult fin = is_finitary(p, w, -1, budget, &cache);
    DirectedResult dir = is_directed(p, w, -1, budget, &cache);
    bool odometer = is_odometer(p, w, budget, &cache);

    out << p.state(s).name << ": ";
    if (dir.decision.is_true()) {
      out << (dir.strongly_directed ? "strongly directed" : "directed")
          << ", period " << *dir.period << ", active vertex "
          << dir.active_vertex->str();
      if (dir.strongly_active) out << ", strongly active";
    } else if (fin.decision.is_true()) {
      out << "finitary, depth " << *fin.depth;
    } else if (fin.decision.is_false()) {
      out << "not finitary, directedness undecided within budget";
    } else {
      out << "undecided within budget";
    }
    if (odometer) out << ", odometer";
    out << "\n";
  }

  GroupFlags flags = group_flags(p, y, budget, &cache);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "reduced form: " << yn(flags.reduced_form) << "\n";
  out << "kneading: " << yn(flags.kneading) << "\n";
  out << "generalized basilica: " << yn(flags.generalized_basilica) << "\n";
  out << "balanced: " << yn(flags.balanced) << "\n";
  out << "abelian wreath type: " << yn(flags.abelian_wreath_type) << "\n";
  out << "self-replicating: ";
  if (flags.self_rep.verdict == Verdict::True)
    out << "yes ("
        << certificate_name(flags.self_rep.certificates.front().kind) << ")\n";
  else
    out << "unknown\n";
  return out.str();
}

std::string cycle_graph_dot(const CycleGraph& g,
                            const std::vector<std::string>& perm_labels) {
  if (perm_labels.size() != g.perms.size())
    throw Error("cycle_graph_dot: one label per permutation required");
  std::ostringstream out;
  out << "graph cycles {\n";
  for (int x = 0; x < g.degree; ++x)
    out << "  x" << x << " [shape=circle, label=\"" << x << "\"];\n";
  for (std::size_t i = 0; i < g.cycle_vertices.size(); ++i) {
    const auto& cv = g.cycle_vertices[i];
    out << "  c" << i << " [shape=box, label=\"" << perm_labels[cv.perm]
        << " (";
    for (std::size_t j = 0; j < cv.letters.size(); ++j) {
      if (j) out << ' ';
      out << cv.letters[j];
    }
    out << ")\"];\n";
  }
  for (const auto& [cv, letter] : g.edges)
    out << "  c" << cv << " -- x" << letter << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json cycle_graph_json(const CycleGraph& g,
                                const std::vector<std::string>& perm_labels) {
  if (perm_labels.size() != g.perms.size())
    throw Error("cycle_graph_json: one label per permutation required");
  json cycle_vertices = json::array();
  for (const auto& cv : g.cycle_vertices)
    cycle_vertices.push_back(
        json{{"letters", cv.letters}, {"perm", perm_labels[cv.perm]}});
  json edges = json::array();
  for (const auto& [cv, letter] : g.edges)
    edges.push_back(json::array({cv, letter}));
  return json{{"connected", g.connected()},
              {"cycle_vertices", std::move(cycle_vertices)},
              {"degree", g.degree},
              {"edges", std::move(edges)},
              {"tree_like", g.tree_like()}};
}

}  // namespace treeauto
