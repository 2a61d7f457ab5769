#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cardtree {

// Min-parity convention throughout: an infinite colour word is accepting
// iff the least colour occurring infinitely often is even.
using Colour = int;

class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line(line), column(column) {}
  int line;
  int column;
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Acceptance criterion applied to the branch set of a run.
enum class Semantics {
  Classical,  // every branch accepting
  RejFin,     // at most finitely many rejecting branches
  RejCount,   // at most countably many rejecting branches
  AccInf,     // infinitely many accepting branches
  AccUnc,     // uncountably many accepting branches
  Large,      // the accepting branch set is topologically large
};

inline constexpr std::array<Semantics, 6> all_semantics = {
    Semantics::Classical, Semantics::RejFin, Semantics::RejCount,
    Semantics::AccInf,    Semantics::AccUnc, Semantics::Large};

std::string to_string(Semantics s);
std::optional<Semantics> semantics_from_string(const std::string& name);

/// Nondeterministic parity automaton over full binary trees.
///
/// States and symbols are referenced by dense indices; names are opaque
/// strings kept for the text format. The canonical form (see canonicalize)
/// sorts symbols and states by name and transitions lexicographically, so
/// that serialization is deterministic.
struct ParityTreeAutomaton {
  struct Trans {
    int q, a, q0, q1;
    friend auto operator<=>(const Trans&, const Trans&) = default;
  };

  std::vector<std::string> alphabet;     // symbol names
  std::vector<std::string> state_names;
  std::vector<Colour> colours;           // per state
  int initial = 0;
  std::vector<Trans> transitions;

  int num_states() const { return static_cast<int>(state_names.size()); }
  int num_symbols() const { return static_cast<int>(alphabet.size()); }

  int state_index(const std::string& name) const;    // -1 if unknown
  int symbol_index(const std::string& name) const;   // -1 if unknown

  int add_state(const std::string& name, Colour c);
  int add_symbol(const std::string& name);

  Colour max_colour() const;
  /// Distinct colours among declared states, sorted ascending.
  std::vector<Colour> distinct_colours() const;

  bool is_complete() const;
  bool is_deterministic() const;  // exactly one transition per (state, symbol)

  /// Transition indices grouped by (state, symbol); built on demand by callers.
  std::vector<std::vector<std::vector<int>>> transition_index() const;

  /// Structural checks: references resolve, colours non-negative, alphabet
  /// non-empty, names unique. With require_complete, also reports the first
  /// missing (state, symbol) pair.
  void validate(bool require_complete = true) const;

  /// Sorts symbols/states/transitions into the canonical order.
  void canonicalize();

  bool operator==(const ParityTreeAutomaton&) const = default;
};

/// Büchi or co-Büchi automaton shell: same shape, a state set F instead of
/// colours.
struct AcceptanceSetAutomaton {
  std::vector<std::string> alphabet;
  std::vector<std::string> state_names;
  std::vector<bool> in_set;  // membership in F, per state
  int initial = 0;
  std::vector<ParityTreeAutomaton::Trans> transitions;
};

using BuchiSpec = AcceptanceSetAutomaton;
using CoBuchiSpec = AcceptanceSetAutomaton;

/// Final states get colour 0, all others 1: a branch word has even liminf
/// iff it visits F infinitely often.
ParityTreeAutomaton buchi_to_parity(const BuchiSpec& b);

/// Forbidden states get colour 1, all others 2: even liminf iff forbidden
/// states are visited finitely often.
ParityTreeAutomaton cobuchi_to_parity(const CoBuchiSpec& c);

/// Completes a partial automaton by adding one odd-coloured sink state and
/// routing every missing (state, symbol) pair to it. Language-preserving for
/// the classical semantics only; already-complete inputs are returned
/// unchanged. Idempotent.
ParityTreeAutomaton complete_with_sink(const ParityTreeAutomaton& shell);

}  // namespace cardtree
