#pragma once

#include <string>

#include "cardtree/automaton.hpp"
#include "cardtree/regular_tree.hpp"

namespace cardtree {

// Automaton file format (UTF-8, line based, '#' starts a comment):
//
//   alphabet: a b
//   states: p:2 f:1          # name:colour
//   initial: p
//   trans: p a p p           # q a q0 q1, one per line
//
// Büchi / co-Büchi variants omit the colours and add a "final:" or
// "forbidden:" line; parsing converts them to parity right away.
//
// Tree file format:
//
//   nodes: Na:a Nb:b         # name:label
//   root: Na
//   edges: Na Nb Na          # node succ0 succ1, one per line

/// Parses and validates; rejects incomplete automata unless allow_incomplete.
ParityTreeAutomaton parse_automaton(const std::string& text,
                                    bool allow_incomplete = false);

std::string serialize_automaton(const ParityTreeAutomaton& a);

RegularTree parse_tree(const std::string& text);

std::string serialize_tree(const RegularTree& t);

}  // namespace cardtree
