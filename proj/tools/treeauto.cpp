#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treeauto/catalog.hpp"
#include "treeauto/core.hpp"
#include "treeauto/errors.hpp"
#include "treeauto/report.hpp"
#include "treeauto/solver.hpp"
#include "treeauto/text.hpp"
#include "treeauto/transform.hpp"

namespace {

using namespace treeauto;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::vector<int> all_states(const Presentation& p) {
  std::vector<int> y(static_cast<std::size_t>(p.state_count()));
  std::iota(y.begin(), y.end(), 0);
  return y;
}

std::vector<GroupWord> state_words(const Presentation& p) {
  std::vector<GroupWord> words;
  for (int s = 0; s < p.state_count(); ++s)
    words.push_back(GroupWord::state(s));
  return words;
}

int run_trivial(const Presentation& p, const GroupWord& w,
                const Budget& budget) {
  Decision d = is_trivial(p, w, budget);
  if (d.is_true()) {
    std::cout << "True\n";
    return kExitTrue;
  }
  if (d.is_false()) {
    const TreeWord& v = *d.witness;
    GroupWord s = v.empty() ? w : section(p, w, v);
    std::cout << "False: root permutation " << root_perm(p, s).cycle_str();
    if (!v.empty()) std::cout << " at vertex " << v.str();
    std::cout << "\n";
    return kExitFalse;
  }
  std::cout << "Unknown: budget exhausted after exploring " << d.budget_spent
            << " nodes\n";
  return kExitUnknown;
}

int run_equal(const Presentation& p, const GroupWord& a, const GroupWord& b,
              const Budget& budget) {
  Decision d = are_equal(p, a, b, budget);
  if (d.is_true()) {
    std::cout << "True\n";
    return kExitTrue;
  }
  if (d.is_false()) {
    const TreeWord& v = *d.witness;
    if (v.empty())
      std::cout << "False: the root permutations differ\n";
    else
      std::cout << "False: the actions differ below vertex " << v.str()
                << "\n";
    return kExitFalse;
  }
  std::cout << "Unknown: budget exhausted after exploring " << d.budget_spent
            << " nodes\n";
  return kExitUnknown;
}

int run_order(const Presentation& p, const GroupWord& w, int max_n,
              const Budget& budget) {
  OrderResult r = order_up_to(p, w, max_n, budget);
  if (r.verdict == Verdict::True) {
    std::cout << *r.order << "\n";
    return kExitTrue;
  }
  if (r.verdict == Verdict::False) {
    std::cout << "no order ≤ " << max_n << "\n";
    return kExitFalse;
  }
  std::cout << "Unknown: budget exhausted after exploring " << r.budget_spent
            << " nodes\n";
  return kExitUnknown;
}

int run_reduce(const Presentation& p, const std::string& out_path,
               const Budget& budget) {
  std::vector<std::string> labels;
  for (const State& s : p.states()) labels.push_back(s.name);
  ReducedFormResult r = reduced_form(p, state_words(p), labels, budget);

  std::ostringstream out;
  out << "# level k = " << r.k << "\n";
  out << "# states kept:";
  for (int s : r.z) out << ' ' << p.state(s).name;
  out << "\n";
  for (const GeneratorEmbedding& e : r.embedding) {
    out << "# " << e.label << " = " << e.root.cycle_str() << " (";
    for (std::size_t i = 0; i < e.sections.size(); ++i) {
      if (i) out << ", ";
      out << print_word(r.h, e.sections[i]);
    }
    out << ")\n";
  }
  out << print_presentation(r.h);
  spill(out_path, out.str());
  return kExitTrue;
}

int run_verify() {
  int failures = 0;
  int checks = 0;
  Budget budget;
  for (const CatalogEntry& entry : all_entries()) {
    TrivialityCache cache;
    for (const Assertion& a : entry.assertions) {
      bool ok = check_assertion(entry.presentation, a, budget, &cache);
      ++checks;
      failures += ok ? 0 : 1;
      std::cout << (ok ? "[ ok ] " : "[FAIL] ") << entry.name << ": "
                << a.label << "\n";
    }
    for (const FlagCheckRow& row : check_expected_flags(entry, budget)) {
      ++checks;
      failures += row.pass ? 0 : 1;
      std::cout << (row.pass ? "[ ok ] " : "[FAIL] ") << entry.name << ": "
                << row.label;
      if (!row.pass && !row.detail.empty()) std::cout << " (" << row.detail
                                                      << ")";
      std::cout << "\n";
    }
  }
  std::cout << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"groups of rooted-tree automorphisms given by wreath recursion"};
  app.require_subcommand(1);

  Budget budget;
  app.add_option("--budget", budget.closure_cap,
                 "section-closure node cap for the decision procedures")
      ->capture_default_str();
  app.add_option("--max-depth", budget.classify_cap,
                 "depth/period search ceiling for the classifiers")
      ->capture_default_str();

  std::string file, word_text, word2_text, vertex_text, out_path, dot_path;
  int level_k = 1, level_n = 1, max_n = 64;
  bool as_json = false;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "presentation file")->required();
    sub->fallthrough();
    return sub;
  };

  CLI::App* act_cmd = add_file(
      app.add_subcommand("act", "image of a vertex under an element"));
  act_cmd->add_option("-e,--element", word_text, "element word")->required();
  act_cmd->add_option("-w,--vertex", vertex_text, "tree vertex")->required();

  CLI::App* section_cmd = add_file(
      app.add_subcommand("section", "section of an element at a vertex"));
  section_cmd->add_option("-e,--element", word_text, "element word")
      ->required();
  section_cmd->add_option("-w,--vertex", vertex_text, "tree vertex")
      ->required();

  CLI::App* trivial_cmd = add_file(
      app.add_subcommand("trivial", "decide whether an element is trivial"));
  trivial_cmd->add_option("-e,--element", word_text, "element word")
      ->required();

  CLI::App* equal_cmd = add_file(
      app.add_subcommand("equal", "decide whether two elements are equal"));
  equal_cmd->add_option("-e,--element", word_text, "first word")->required();
  equal_cmd->add_option("-f,--other", word2_text, "second word")->required();

  CLI::App* order_cmd = add_file(
      app.add_subcommand("order", "least n with the n-th power trivial"));
  order_cmd->add_option("-e,--element", word_text, "element word")->required();
  order_cmd->add_option("--max", max_n, "search bound")
      ->capture_default_str();

  CLI::App* classify_cmd = add_file(app.add_subcommand(
      "classify", "element and group classification report"));
  classify_cmd->add_flag("--json", as_json, "emit the JSON report");

  CLI::App* rk_cmd = add_file(app.add_subcommand(
      "rk", "restrict the presentation to the level-k subtree alphabet"));
  rk_cmd->add_option("-k,--level", level_k, "restriction level")->required();
  rk_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* reduce_cmd = add_file(app.add_subcommand(
      "reduce", "level restriction that brings the states to reduced form"));
  reduce_cmd->add_option("-o,--output", out_path,
                         "output file (default stdout)");

  CLI::App* cyclegraph_cmd = add_file(app.add_subcommand(
      "cyclegraph", "cycle graph of the root permutations"));
  cyclegraph_cmd->add_option("--dot", dot_path,
                             "write DOT here instead of printing JSON");

  CLI::App* orbits_cmd = add_file(
      app.add_subcommand("orbits", "orbits of the states on one level"));
  orbits_cmd->add_option("-n,--level", level_n, "tree level")->required();

  app.add_subcommand("verify-paper",
                     "run every recorded catalog fact, print a pass/fail "
                     "table");

  int code = kExitTrue;
  try {
    app.parse(argc, argv);

    if (app.got_subcommand("verify-paper")) return run_verify();

    Presentation p = parse_presentation(slurp(file));
    if (app.got_subcommand(act_cmd)) {
      std::cout << act(p, parse_word(p, word_text),
                       parse_tree_word(p, vertex_text))
                       .str()
                << "\n";
    } else if (app.got_subcommand(section_cmd)) {
      std::cout << print_word(p, section(p, parse_word(p, word_text),
                                         parse_tree_word(p, vertex_text)))
                << "\n";
    } else if (app.got_subcommand(trivial_cmd)) {
      code = run_trivial(p, parse_word(p, word_text), budget);
    } else if (app.got_subcommand(equal_cmd)) {
      code = run_equal(p, parse_word(p, word_text),
                       parse_word(p, word2_text), budget);
    } else if (app.got_subcommand(order_cmd)) {
      code = run_order(p, parse_word(p, word_text), max_n, budget);
    } else if (app.got_subcommand(classify_cmd)) {
      if (as_json)
        std::cout << classification_report(p, all_states(p), budget).dump(2)
                  << "\n";
      else
        std::cout << classification_text(p, all_states(p), budget);
    } else if (app.got_subcommand(rk_cmd)) {
      spill(out_path, print_presentation(restrict_level(p, level_k, budget)));
    } else if (app.got_subcommand(reduce_cmd)) {
      code = run_reduce(p, out_path, budget);
    } else if (app.got_subcommand(cyclegraph_cmd)) {
      std::vector<Perm> perms;
      std::vector<std::string> labels;
      for (const State& s : p.states()) {
        perms.push_back(s.root);
        labels.push_back(s.name);
      }
      CycleGraph g = cycle_graph(perms);
      if (cyclegraph_cmd->count("--dot"))
        spill(dot_path, cycle_graph_dot(g, labels));
      else
        std::cout << cycle_graph_json(g, labels).dump(2) << "\n";
    } else if (app.got_subcommand(orbits_cmd)) {
      for (const auto& cls :
           orbits_on_level(p, state_words(p), level_n, budget)) {
        std::cout << "{";
        for (std::size_t i = 0; i < cls.size(); ++i) {
          if (i) std::cout << ", ";
          std::cout << cls[i];
        }
        std::cout << "}\n";
      }
    }
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitTrue : kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}
