#include "treeauto/text.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeauto/errors.hpp"

namespace treeauto {

namespace {

struct Scanner {
  std::string_view text;
  int line;
  std::size_t pos = 0;
  int col0 = 1;  // column of text[0] within its source line

  int column() const { return static_cast<int>(pos) + col0; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_space() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, column());
  }

  bool eat(char c) {
    if (done() || peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected ") + what);
  }

  std::string identifier() {
    if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) ||
                    peek() == '_'))
      fail("expected a name");
    std::size_t start = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                       peek() == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  int integer() {
    std::size_t start = pos;
    if (!done() && peek() == '-') ++pos;
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    long long value = 0;
    bool negative = text[start] == '-';
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000) fail("integer too large");
      ++pos;
    }
    return static_cast<int>(negative ? -value : value);
  }
};

// One factor group: "name" or "name^k". Appends to out.
void parse_factors(Scanner& sc, const std::map<std::string, int>& names,
                   GroupWord& out) {
  sc.skip_space();
  if (sc.eat('1')) {
    sc.skip_space();
    if (!sc.done() && sc.peek() == '*')
      sc.fail("the empty word takes no further factors");
    return;
  }
  while (true) {
    sc.skip_space();
    int at = sc.column();
    std::string name = sc.identifier();
    auto it = names.find(name);
    if (it == names.end())
      throw ParseError("unknown state name \"" + name + "\"", sc.line, at);
    int exponent = 1;
    if (sc.eat('^')) exponent = sc.integer();
    out.append(GroupWord::state(it->second).pow(exponent));
    sc.skip_space();
    if (!sc.eat('*')) return;
  }
}

struct RawState {
  std::string name;
  int name_column = 1;
  int line = 1;
  std::vector<std::vector<int>> cycles;
  std::vector<int> cycle_columns;  // column of each cycle group's '('
  std::vector<std::string> words;
  std::vector<int> word_columns;
};

// A parenthesized group is either a cycle "(0 2)" or the final tuple
// "(w, w, ...)"; the tuple is the only group containing commas (and the only
// group allowed to hold word syntax).
void parse_state_line(Scanner& sc, RawState& raw) {
  sc.skip_space();
  raw.name_column = sc.column();
  raw.name = sc.identifier();
  sc.skip_space();
  sc.expect('=', "'='");

  bool saw_tuple = false;
  while (true) {
    sc.skip_space();
    if (sc.done()) break;
    int open_at = sc.column();
    sc.expect('(', "'('");

    // Look ahead for a comma before the matching ')'.
    bool has_comma = false;
    for (std::size_t i = sc.pos; i < sc.text.size() && sc.text[i] != ')'; ++i)
      if (sc.text[i] == ',') {
        has_comma = true;
        break;
      }

    if (has_comma) {
      if (saw_tuple) sc.fail("a state takes a single section tuple");
      while (true) {
        sc.skip_space();
        raw.word_columns.push_back(sc.column());
        std::size_t start = sc.pos;
        while (!sc.done() && sc.peek() != ',' && sc.peek() != ')') ++sc.pos;
        if (sc.done()) sc.fail("unterminated tuple");
        raw.words.emplace_back(sc.text.substr(start, sc.pos - start));
        if (sc.eat(')')) break;
        sc.expect(',', "','");
      }
      saw_tuple = true;
      continue;
    }

    if (saw_tuple) sc.fail("cycles must precede the section tuple");
    raw.cycle_columns.push_back(open_at);
    std::vector<int> cycle;
    while (true) {
      sc.skip_space();
      if (sc.eat(')')) break;
      if (sc.done()) sc.fail("unterminated cycle");
      cycle.push_back(sc.integer());
    }
    if (cycle.empty()) sc.fail("empty cycle");
    raw.cycles.push_back(std::move(cycle));
  }
  if (!saw_tuple)
    throw ParseError("state \"" + raw.name +
                         "\" has no section tuple (a tuple needs a comma)",
                     raw.line, raw.name_column);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<RawState> raws;
  int line_no = 0;
  std::size_t from = 0;
  while (from <= text.size()) {
    std::size_t to = text.find('\n', from);
    std::string_view line = text.substr(
        from, to == std::string_view::npos ? text.size() - from : to - from);
    ++line_no;
    from = to == std::string_view::npos ? text.size() + 1 : to + 1;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') blank = false;
    if (blank) continue;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    Scanner sc{line, line_no};
    RawState raw;
    raw.line = line_no;
    parse_state_line(sc, raw);
    raws.push_back(std::move(raw));
  }
  if (raws.empty()) throw ParseError("no states", 1, 1);

  int degree = static_cast<int>(raws.front().words.size());
  std::map<std::string, int> names;
  for (std::size_t i = 0; i < raws.size(); ++i) {
    const RawState& raw = raws[i];
    if (!names.emplace(raw.name, static_cast<int>(i)).second)
      throw ParseError("duplicate state name \"" + raw.name + "\"", raw.line,
                       raw.name_column);
    if (static_cast<int>(raw.words.size()) != degree)
      throw ParseError("state \"" + raw.name + "\" has " +
                           std::to_string(raw.words.size()) +
                           " sections, expected " + std::to_string(degree),
                       raw.line, raw.word_columns.front());
  }
  if (degree < 2) throw ParseError("alphabet needs at least two letters",
                                   raws.front().line, 1);

  std::vector<State> states;
  for (const RawState& raw : raws) {
    for (std::size_t c = 0; c < raw.cycles.size(); ++c)
      for (int letter : raw.cycles[c])
        if (letter < 0 || letter >= degree)
          throw ParseError("cycle letter " + std::to_string(letter) +
                               " out of range for alphabet of size " +
                               std::to_string(degree),
                           raw.line, raw.cycle_columns[c]);
    Perm root = Perm::identity(degree);
    try {
      root = Perm::from_cycles(degree, raw.cycles);
    } catch (const Error& err) {
      throw ParseError(err.what(), raw.line,
                       raw.cycle_columns.empty() ? raw.name_column
                                                 : raw.cycle_columns.front());
    }

    std::vector<GroupWord> transitions;
    for (std::size_t wi = 0; wi < raw.words.size(); ++wi) {
      Scanner sc{raw.words[wi], raw.line, 0, raw.word_columns[wi]};
      GroupWord word;
      parse_factors(sc, names, word);
      sc.skip_space();
      if (!sc.done())
        throw ParseError("trailing input in a section word", raw.line,
                         sc.column());
      transitions.push_back(std::move(word));
    }
    states.push_back(State{raw.name, std::move(root), std::move(transitions)});
  }
  return Presentation(Alphabet{degree}, std::move(states));
}

std::string print_word(const Presentation& p, const GroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& factors = w.factors();
  std::size_t i = 0;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    int run = static_cast<int>(j - i) * factors[i].sign;
    if (i > 0) out += "*";
    out += p.state(factors[i].state).name;
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string print_presentation(const Presentation& p) {
  std::string out;
  for (int si = 0; si < p.state_count(); ++si) {
    const State& st = p.state(si);
    out += st.name + " = ";
    for (const auto& cycle : st.root.cycles(false)) {
      out += "(";
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i > 0) out += " ";
        out += std::to_string(cycle[i]);
      }
      out += ")";
    }
    if (!st.root.is_identity()) out += " ";
    out += "(";
    for (std::size_t x = 0; x < st.transitions.size(); ++x) {
      if (x > 0) out += ", ";
      out += print_word(p, st.transitions[x]);
    }
    out += ")\n";
  }
  return out;
}

GroupWord parse_word(const Presentation& p, std::string_view text) {
  std::map<std::string, int> names;
  for (int si = 0; si < p.state_count(); ++si)
    names.emplace(p.state(si).name, si);
  Scanner sc{text, 1};
  sc.skip_space();
  if (sc.done()) sc.fail("empty word (write 1 for the identity)");
  GroupWord out;
  parse_factors(sc, names, out);
  sc.skip_space();
  if (!sc.done()) sc.fail("trailing input after the word");
  return out;
}

TreeWord parse_tree_word(const Presentation& p, std::string_view text) {
  Scanner sc{text, 1};
  sc.skip_space();
  std::vector<int> letters;
  if (!sc.done()) {
    while (true) {
      int at = sc.column();
      int letter = sc.integer();
      if (letter < 0 || letter >= p.degree())
        throw ParseError("letter " + std::to_string(letter) +
                             " out of range for alphabet of size " +
                             std::to_string(p.degree()),
                         1, at);
      letters.push_back(letter);
      if (!sc.eat('.')) break;
    }
    sc.skip_space();
    if (!sc.done()) sc.fail("trailing input after the vertex");
  }
  return TreeWord(std::move(letters));
}

}  // namespace treeauto
