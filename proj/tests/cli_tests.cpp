// End-to-end checks of the command line tool. Takes the binary path and the
// presentations directory, runs real invocations through the shell, and pins
// outputs and exit codes. Exit status is the number of failed checks.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

std::string g_cli;
std::string g_dir;
int g_checks = 0;
int g_failures = 0;

void check(bool ok, const std::string& what) {
  ++g_checks;
  if (!ok) {
    ++g_failures;
    std::printf("[FAIL] %s\n", what.c_str());
  }
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the tool with the given (pre-quoted) argument string, stdout and
// stderr folded together.
RunResult run(const std::string& args) {
  const std::string capture = "cli_capture.txt";
  std::string cmd = quote(g_cli) + " " + args + " > " + capture + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(capture);
  return r;
}

std::string tree(const std::string& name) {
  return quote(g_dir + "/" + name + ".tree");
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

bool starts_with(const std::string& hay, const std::string& prefix) {
  return hay.rfind(prefix, 0) == 0;
}

void evaluation_commands() {
  RunResult r = run("act " + tree("basilica") + " -e a -w 1.1.1");
  check(r.code == 0 && r.out == "1.0.1\n", "act walks the recursion");

  r = run("section " + tree("basilica") + " -e 'b*a' -w 1");
  check(r.code == 0 && r.out == "a*b\n", "section prints the cocycle product");

  r = run("trivial " + tree("dihedral_3") + " -e a^2");
  check(r.code == 0 && r.out == "True\n", "trivial accepts a^2");

  r = run("trivial " + tree("basilica") + " -e b");
  check(r.code == 1 && r.out == "False: root permutation (0 1)\n",
        "trivial rejects b at the root");

  r = run("trivial " + tree("basilica") + " -e b^2");
  check(r.code == 1 &&
            starts_with(r.out, "False: root permutation (0 1) at vertex "),
        "trivial rejects b^2 with a witness vertex");

  r = run("equal " + tree("basilica") + " -e 'a*b^-1*b' -f a");
  check(r.code == 0 && r.out == "True\n", "equal sees through free reduction");

  r = run("equal " + tree("g_3") + " -e 'g*h' -f 'h*g'");
  check(r.code == 1 &&
            starts_with(r.out, "False: the actions differ below vertex "),
        "equal separates gh from hg");

  r = run("order " + tree("ggs_3_12") + " -e a");
  check(r.code == 0 && r.out == "3\n", "order finds 3");

  r = run("order " + tree("dihedral_3") + " -e 'a*b' --max 8");
  check(r.code == 1 && starts_with(r.out, "no order"),
        "order certifies absence");
}

void classify_commands() {
  RunResult r = run("classify " + tree("basilica") + " --json");
  check(r.code == 0, "classify --json exits 0");
  nlohmann::json doc = nlohmann::json::parse(r.out, nullptr, false);
  check(!doc.is_discarded(), "classify --json parses");
  if (!doc.is_discarded()) {
    check(doc["alphabet"] == 2, "basilica alphabet");
    check(doc["generators"][0]["name"] == "a" &&
              doc["generators"][0]["finitary"] == false &&
              doc["generators"][0]["directed"]["period"] == 2 &&
              doc["generators"][0]["directed"]["active_vertex"] == "1.1" &&
              doc["generators"][0]["odometer"] == false,
          "basilica first generator row");
    check(doc["group"]["reduced_form"] == false &&
              doc["group"]["kneading"] == true &&
              doc["group"]["generalized_basilica"] == false &&
              doc["group"]["balanced"] == false &&
              doc["group"]["abelian_wreath_type"] == false,
          "basilica group flags");
    check(doc["group"]["self_replicating"]["verdict"] == "unknown",
          "basilica self-replication stays open");
    check(doc["budgets"]["closure_cap"] == 100000, "default budget reported");
  }

  r = run("classify " + tree("basilica_r2") + " --json");
  doc = nlohmann::json::parse(r.out, nullptr, false);
  check(r.code == 0 && !doc.is_discarded(), "restricted basilica report");
  if (!doc.is_discarded()) {
    check(doc["group"]["reduced_form"] == true &&
              doc["group"]["kneading"] == true &&
              doc["group"]["generalized_basilica"] == true &&
              doc["group"]["balanced"] == true &&
              doc["group"]["abelian_wreath_type"] == false,
          "restricted basilica group flags");
    check(doc["group"]["self_replicating"]["verdict"] == true &&
              doc["group"]["self_replicating"]["certificate"] ==
                  "directed-generators",
          "restricted basilica certificate");
    check(doc["generators"][0]["directed"]["period"] == 1 &&
              doc["generators"][0]["directed"]["active_vertex"] == "3",
          "restricted basilica first generator row");
  }

  r = run("classify " + tree("basilica_r2"));
  check(r.code == 0 &&
            contains(r.out,
                     "a: strongly directed, period 1, active vertex 3, "
                     "strongly active") &&
            contains(r.out, "reduced form: yes") &&
            contains(r.out, "self-replicating: yes (directed-generators)"),
        "classify text report");
}

void transform_commands() {
  const std::string out_file = "cli_rk_out.tree";
  RunResult r =
      run("rk " + tree("basilica") + " -k 2 -o " + quote(out_file));
  check(r.code == 0 && slurp(out_file) == slurp(g_dir + "/basilica_r2.tree"),
        "rk -k 2 reproduces the stored restriction");

  r = run("rk " + tree("basilica") + " -k 1");
  check(r.code == 0 && r.out == slurp(g_dir + "/basilica.tree"),
        "rk -k 1 is the identity");

  r = run("reduce " + tree("basilica"));
  std::string want =
      "# level k = 2\n"
      "# states kept: a b\n"
      "# a = (2 3) (1, 1, 1, a)\n"
      "# b = (0 2)(1 3) (1, 1, 1, b)\n" +
      slurp(g_dir + "/basilica_r2.tree");
  check(r.code == 0 && r.out == want, "reduce prints the embedding and result");

  r = run("reduce " + tree("lamplighter_4"));
  check(r.code == 0 && starts_with(r.out, "# level k = 1\n"),
        "reduce keeps a reduced presentation at level 1");
}

void structure_commands() {
  RunResult r = run("cyclegraph " + tree("basilica_r2"));
  nlohmann::json doc = nlohmann::json::parse(r.out, nullptr, false);
  check(r.code == 0 && !doc.is_discarded(), "cyclegraph JSON parses");
  if (!doc.is_discarded())
    check(doc["degree"] == 4 && doc["connected"] == true &&
              doc["tree_like"] == true && doc["edges"].size() == 8 &&
              doc["cycle_vertices"].size() == 5,
          "cyclegraph facts for the restricted basilica");

  const std::string dot_file = "cli_cycles.dot";
  r = run("cyclegraph " + tree("basilica_r2") + " --dot " + quote(dot_file));
  std::string dot = slurp(dot_file);
  check(r.code == 0 && starts_with(dot, "graph cycles {") &&
            contains(dot, " -- "),
        "cyclegraph DOT export");

  r = run("orbits " + tree("balanced_pair_5") + " -n 1");
  check(r.code == 0 && r.out == "{0, 1, 2}\n{3, 4}\n",
        "orbits splits the first level");
}

void verify_command() {
  RunResult r = run("verify-paper");
  check(r.code == 0, "verify-paper exits 0");
  check(contains(r.out, " checks, 0 failures\n") && !contains(r.out, "[FAIL]"),
        "verify-paper reports no failures");
}

void failure_modes() {
  check(run("").code == 2, "no subcommand is a usage error");
  check(run("frobnicate").code == 2, "unknown subcommand is a usage error");
  check(run("act " + tree("basilica") + " -e a").code == 2,
        "missing required option is a usage error");

  RunResult r = run("trivial " + tree("no_such_entry") + " -e a");
  check(r.code == 2 && contains(r.out, "error: cannot open"),
        "unreadable file is reported");

  r = run("trivial " + tree("basilica") + " -e c");
  check(r.code == 2 && contains(r.out, "error:"), "unknown state in a word");

  check(run("trivial " + tree("basilica") + " -e 'a**b'").code == 2,
        "malformed word is a usage error");

  check(run("act " + tree("basilica") + " -e a -w 5").code == 2,
        "letter outside the alphabet is a usage error");

  r = run("rk " + tree("weak_selfrep_2") + " -k 2");
  check(r.code == 2 && contains(r.out, "error:"),
        "rk refuses word transitions");

  r = run("rk " + tree("basilica") + " -k 13");
  check(r.code == 3 && contains(r.out, "budget:"),
        "rk past the alphabet cap exits 3");

  r = run("--budget 1 trivial " + tree("basilica") + " -e b^2");
  check(r.code == 3 && starts_with(r.out, "Unknown"),
        "exhausted budget exits 3 on trivial");

  r = run("--budget 1 equal " + tree("basilica") + " -e 'a*b' -f 'b*a'");
  check(r.code == 3 && starts_with(r.out, "Unknown"),
        "exhausted budget exits 3 on equal");
}

void determinism() {
  std::string first = run("classify " + tree("g_3") + " --json").out;
  std::string second = run("classify " + tree("g_3") + " --json").out;
  check(!first.empty() && first == second, "classify output is stable");

  first = run("reduce " + tree("basilica")).out;
  second = run("reduce " + tree("basilica")).out;
  check(!first.empty() && first == second, "reduce output is stable");

  first = run("verify-paper").out;
  second = run("verify-paper").out;
  check(!first.empty() && first == second, "verify-paper output is stable");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::printf("usage: cli_tests <treeauto binary> <presentations dir>\n");
    return 1;
  }
  g_cli = argv[1];
  g_dir = argv[2];

  evaluation_commands();
  classify_commands();
  transform_commands();
  structure_commands();
  verify_command();
  failure_modes();
  determinism();

  std::printf("%d checks, %d failures\n", g_checks, g_failures);
  return g_failures;
}
