#include "cardtree/text_format.hpp"

#include <sstream>

namespace cardtree {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

struct Line {
  std::string key;
  int line = 0;
  int key_col = 0;
  std::vector<Token> tokens;
};

// Splits into "key: tok tok ..." lines, dropping comments and blanks.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  int lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.resize(pos);
    size_t i = 0;
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
      ++i;
    if (i == raw.size()) continue;
    size_t key_start = i;
    while (i < raw.size() && raw[i] != ':' &&
           !std::isspace(static_cast<unsigned char>(raw[i])))
      ++i;
    if (i == raw.size() || raw[i] != ':')
      throw ParseError("expected 'key:' prefix", lineno,
                       static_cast<int>(key_start) + 1);
    Line l;
    l.key = raw.substr(key_start, i - key_start);
    l.line = lineno;
    l.key_col = static_cast<int>(key_start) + 1;
    ++i;  // skip ':'
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      if (i == raw.size()) break;
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      l.tokens.push_back(
          {raw.substr(start, i - start), lineno, static_cast<int>(start) + 1});
    }
    out.push_back(std::move(l));
  }
  return out;
}

// Splits "name:suffix" on the last colon.
std::pair<std::string, std::string> split_colon(const Token& t) {
  auto pos = t.text.rfind(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == t.text.size())
    throw ParseError("expected 'name:value', got '" + t.text + "'", t.line,
                     t.col);
  return {t.text.substr(0, pos), t.text.substr(pos + 1)};
}

int parse_colour(const std::string& s, const Token& t) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected non-negative colour, got '" + s + "'", t.line,
                     t.col);
  return std::stoi(s);
}

}  // namespace

ParityTreeAutomaton parse_automaton(const std::string& text,
                                    bool allow_incomplete) {
  std::vector<Line> lines = tokenize(text);

  bool has_colours = false, is_shell = false;
  bool shell_is_cobuchi = false;
  AcceptanceSetAutomaton shell;
  ParityTreeAutomaton a;
  bool saw_states = false, saw_alphabet = false, saw_initial = false;
  std::vector<Token> set_tokens;
  Token initial_token;

  auto symbol_of = [&](const Token& t) {
    int i = a.symbol_index(t.text);
    if (i < 0)
      throw ParseError("unknown symbol '" + t.text + "'", t.line, t.col);
    return i;
  };
  auto state_of = [&](const Token& t) {
    int i = -1;
    for (int j = 0; j < static_cast<int>(a.state_names.size()); ++j)
      if (a.state_names[j] == t.text) { i = j; break; }
    if (i < 0)
      throw ParseError("unknown state '" + t.text + "'", t.line, t.col);
    return i;
  };

  for (const Line& l : lines) {
    if (l.key == "alphabet") {
      saw_alphabet = true;
      for (const Token& t : l.tokens) a.add_symbol(t.text);
    } else if (l.key == "states") {
      saw_states = true;
      for (const Token& t : l.tokens) {
        if (t.text.find(':') != std::string::npos) {
          auto [name, col] = split_colon(t);
          a.add_state(name, parse_colour(col, t));
          has_colours = true;
        } else {
          a.add_state(t.text, 0);
        }
      }
    } else if (l.key == "initial") {
      if (l.tokens.size() != 1)
        throw ParseError("initial expects one state", l.line, l.key_col);
      initial_token = l.tokens[0];
      saw_initial = true;
    } else if (l.key == "trans") {
      if (l.tokens.size() != 4)
        throw ParseError("trans expects 'q a q0 q1'", l.line, l.key_col);
      // resolved after all declarations
    } else if (l.key == "final" || l.key == "forbidden") {
      is_shell = true;
      shell_is_cobuchi = (l.key == "forbidden");
      for (const Token& t : l.tokens) set_tokens.push_back(t);
    } else {
      throw ParseError("unknown section '" + l.key + "'", l.line, l.key_col);
    }
  }
  if (!saw_alphabet) throw ParseError("missing alphabet", 1, 1);
  if (!saw_states) throw ParseError("missing states", 1, 1);
  if (!saw_initial) throw ParseError("missing initial", 1, 1);
  if (is_shell && has_colours)
    throw ParseError("states carry colours but a final/forbidden set is given",
                     1, 1);
  if (!is_shell && !has_colours)
    throw ParseError("states need colours (name:colour)", 1, 1);

  a.initial = state_of(initial_token);
  for (const Line& l : lines) {
    if (l.key != "trans") continue;
    int q = state_of(l.tokens[0]);
    int x = symbol_of(l.tokens[1]);
    int q0 = state_of(l.tokens[2]);
    int q1 = state_of(l.tokens[3]);
    a.transitions.push_back({q, x, q0, q1});
  }

  if (is_shell) {
    shell.alphabet = a.alphabet;
    shell.state_names = a.state_names;
    shell.in_set.assign(a.state_names.size(), false);
    shell.initial = a.initial;
    shell.transitions = a.transitions;
    for (const Token& t : set_tokens) shell.in_set[state_of(t)] = true;
    a = shell_is_cobuchi ? cobuchi_to_parity(shell) : buchi_to_parity(shell);
  } else {
    a.canonicalize();
  }
  a.validate(!allow_incomplete);
  return a;
}

std::string serialize_automaton(const ParityTreeAutomaton& in) {
  ParityTreeAutomaton a = in;
  a.canonicalize();
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& s : a.alphabet) out << ' ' << s;
  out << "\nstates:";
  for (int i = 0; i < a.num_states(); ++i)
    out << ' ' << a.state_names[i] << ':' << a.colours[i];
  out << "\ninitial: " << a.state_names[a.initial] << '\n';
  for (const auto& t : a.transitions)
    out << "trans: " << a.state_names[t.q] << ' ' << a.alphabet[t.a] << ' '
        << a.state_names[t.q0] << ' ' << a.state_names[t.q1] << '\n';
  return out.str();
}

RegularTree parse_tree(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  RegularTree t;
  bool saw_nodes = false, saw_root = false;
  Token root_token;

  auto node_of = [&](const Token& tok) {
    int i = t.node_index(tok.text);
    if (i < 0)
      throw ParseError("unknown node '" + tok.text + "'", tok.line, tok.col);
    return i;
  };

  for (const Line& l : lines) {
    if (l.key == "nodes") {
      saw_nodes = true;
      for (const Token& tok : l.tokens) {
        auto [name, label] = split_colon(tok);
        t.add_node(name, label);
      }
    } else if (l.key == "root") {
      if (l.tokens.size() != 1)
        throw ParseError("root expects one node", l.line, l.key_col);
      root_token = l.tokens[0];
      saw_root = true;
    } else if (l.key == "edges") {
      if (l.tokens.size() != 3)
        throw ParseError("edges expects 'node succ0 succ1'", l.line, l.key_col);
    } else {
      throw ParseError("unknown section '" + l.key + "'", l.line, l.key_col);
    }
  }
  if (!saw_nodes) throw ParseError("missing nodes", 1, 1);
  if (!saw_root) throw ParseError("missing root", 1, 1);
  t.root = node_of(root_token);
  for (const Line& l : lines) {
    if (l.key != "edges") continue;
    int n = node_of(l.tokens[0]);
    t.succ[n] = {node_of(l.tokens[1]), node_of(l.tokens[2])};
  }
  t.canonicalize();
  t.validate();
  return t;
}

std::string serialize_tree(const RegularTree& in) {
  RegularTree t = in;
  t.canonicalize();
  std::ostringstream out;
  out << "nodes:";
  for (int i = 0; i < t.num_nodes(); ++i)
    out << ' ' << t.node_names[i] << ':' << t.labels[i];
  out << "\nroot: " << t.node_names[t.root] << '\n';
  for (int i = 0; i < t.num_nodes(); ++i)
    out << "edges: " << t.node_names[i] << ' ' << t.node_names[t.succ[i][0]]
        << ' ' << t.node_names[t.succ[i][1]] << '\n';
  return out.str();
}

}  // namespace cardtree
