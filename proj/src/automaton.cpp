#include "cardtree/automaton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cardtree {

std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::Classical: return "classical";
    case Semantics::RejFin:    return "rej-fin";
    case Semantics::RejCount:  return "rej-count";
    case Semantics::AccInf:    return "acc-inf";
    case Semantics::AccUnc:    return "acc-unc";
    case Semantics::Large:     return "large";
  }
  return "?";
}

std::optional<Semantics> semantics_from_string(const std::string& name) {
  for (Semantics s : all_semantics)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

int ParityTreeAutomaton::state_index(const std::string& name) const {
  for (int i = 0; i < num_states(); ++i)
    if (state_names[i] == name) return i;
  return -1;
}

int ParityTreeAutomaton::symbol_index(const std::string& name) const {
  for (int i = 0; i < num_symbols(); ++i)
    if (alphabet[i] == name) return i;
  return -1;
}

int ParityTreeAutomaton::add_state(const std::string& name, Colour c) {
  state_names.push_back(name);
  colours.push_back(c);
  return num_states() - 1;
}

int ParityTreeAutomaton::add_symbol(const std::string& name) {
  alphabet.push_back(name);
  return num_symbols() - 1;
}

Colour ParityTreeAutomaton::max_colour() const {
  Colour m = 0;
  for (Colour c : colours) m = std::max(m, c);
  return m;
}

std::vector<Colour> ParityTreeAutomaton::distinct_colours() const {
  std::set<Colour> s(colours.begin(), colours.end());
  return std::vector<Colour>(s.begin(), s.end());
}

bool ParityTreeAutomaton::is_complete() const {
  std::vector<char> seen(num_states() * num_symbols(), 0);
  for (const Trans& t : transitions) seen[t.q * num_symbols() + t.a] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool ParityTreeAutomaton::is_deterministic() const {
  std::vector<int> count(num_states() * num_symbols(), 0);
  for (const Trans& t : transitions) ++count[t.q * num_symbols() + t.a];
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

std::vector<std::vector<std::vector<int>>>
ParityTreeAutomaton::transition_index() const {
  std::vector<std::vector<std::vector<int>>> idx(
      num_states(), std::vector<std::vector<int>>(num_symbols()));
  for (int i = 0; i < static_cast<int>(transitions.size()); ++i)
    idx[transitions[i].q][transitions[i].a].push_back(i);
  return idx;
}

void ParityTreeAutomaton::validate(bool require_complete) const {
  if (alphabet.empty()) throw ValidationError("automaton has empty alphabet");
  if (state_names.empty()) throw ValidationError("automaton has no states");
  {
    std::set<std::string> names(state_names.begin(), state_names.end());
    if (static_cast<int>(names.size()) != num_states())
      throw ValidationError("duplicate state name");
    std::set<std::string> syms(alphabet.begin(), alphabet.end());
    if (static_cast<int>(syms.size()) != num_symbols())
      throw ValidationError("duplicate symbol");
  }
  for (Colour c : colours)
    if (c < 0) throw ValidationError("negative colour");
  if (initial < 0 || initial >= num_states())
    throw ValidationError("initial state does not resolve");
  for (const Trans& t : transitions) {
    if (t.q < 0 || t.q >= num_states() || t.q0 < 0 || t.q0 >= num_states() ||
        t.q1 < 0 || t.q1 >= num_states())
      throw ValidationError("transition references unknown state");
    if (t.a < 0 || t.a >= num_symbols())
      throw ValidationError("transition references unknown symbol");
  }
  if (require_complete) {
    std::vector<char> seen(num_states() * num_symbols(), 0);
    for (const Trans& t : transitions) seen[t.q * num_symbols() + t.a] = 1;
    for (int q = 0; q < num_states(); ++q)
      for (int a = 0; a < num_symbols(); ++a)
        if (!seen[q * num_symbols() + a])
          throw ValidationError("incomplete automaton: no transition for (" +
                                state_names[q] + ", " + alphabet[a] + ")");
  }
}

void ParityTreeAutomaton::canonicalize() {
  std::vector<int> sym_perm(num_symbols()), state_perm(num_states());
  std::iota(sym_perm.begin(), sym_perm.end(), 0);
  std::iota(state_perm.begin(), state_perm.end(), 0);
  std::sort(sym_perm.begin(), sym_perm.end(),
            [&](int x, int y) { return alphabet[x] < alphabet[y]; });
  std::sort(state_perm.begin(), state_perm.end(),
            [&](int x, int y) { return state_names[x] < state_names[y]; });

  std::vector<int> sym_to(num_symbols()), state_to(num_states());
  for (int i = 0; i < num_symbols(); ++i) sym_to[sym_perm[i]] = i;
  for (int i = 0; i < num_states(); ++i) state_to[state_perm[i]] = i;

  std::vector<std::string> new_alpha(num_symbols());
  for (int i = 0; i < num_symbols(); ++i) new_alpha[i] = alphabet[sym_perm[i]];
  std::vector<std::string> new_names(num_states());
  std::vector<Colour> new_colours(num_states());
  for (int i = 0; i < num_states(); ++i) {
    new_names[i] = state_names[state_perm[i]];
    new_colours[i] = colours[state_perm[i]];
  }
  alphabet = std::move(new_alpha);
  state_names = std::move(new_names);
  colours = std::move(new_colours);
  initial = state_to[initial];
  for (Trans& t : transitions) {
    t.q = state_to[t.q];
    t.a = sym_to[t.a];
    t.q0 = state_to[t.q0];
    t.q1 = state_to[t.q1];
  }
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()),
                    transitions.end());
}

namespace {

ParityTreeAutomaton shell_to_parity(const AcceptanceSetAutomaton& s,
                                    Colour in_colour, Colour out_colour) {
  ParityTreeAutomaton a;
  a.alphabet = s.alphabet;
  a.state_names = s.state_names;
  a.colours.resize(s.state_names.size());
  for (size_t i = 0; i < s.state_names.size(); ++i)
    a.colours[i] = s.in_set[i] ? in_colour : out_colour;
  a.initial = s.initial;
  a.transitions = s.transitions;
  a.canonicalize();
  return a;
}

}  // namespace

ParityTreeAutomaton buchi_to_parity(const BuchiSpec& b) {
  return shell_to_parity(b, 0, 1);
}

ParityTreeAutomaton cobuchi_to_parity(const CoBuchiSpec& c) {
  return shell_to_parity(c, 1, 2);
}

ParityTreeAutomaton complete_with_sink(const ParityTreeAutomaton& shell) {
  shell.validate(false);
  if (shell.is_complete()) return shell;
  ParityTreeAutomaton a = shell;
  Colour m = a.max_colour();
  Colour sink_colour = (m % 2 == 1) ? m + 2 : m + 1;
  std::string sink_name = "sink";
  while (a.state_index(sink_name) >= 0) sink_name += "'";
  int sink = a.add_state(sink_name, sink_colour);
  std::vector<char> seen(a.num_states() * a.num_symbols(), 0);
  for (const auto& t : a.transitions) seen[t.q * a.num_symbols() + t.a] = 1;
  for (int q = 0; q < a.num_states(); ++q)
    for (int x = 0; x < a.num_symbols(); ++x)
      if (!seen[q * a.num_symbols() + x])
        a.transitions.push_back({q, x, sink, sink});
  a.canonicalize();
  return a;
}

}  // namespace cardtree
