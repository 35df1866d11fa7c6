#pragma once

#include <string>

#include "rational/transducer.hpp"

namespace rational {

// Machine interchange format: a JSON object with fields
//   states:      list of state names
//   initial:     name of the initial state
//   transitions: map state -> map bit-character -> { "out": bit-string, "to": state }
//
// parse throws ParseError (syntax, with line/column) or InvariantError
// (incomplete or inconsistent machine, named invariant). Round trip:
// parse(serialize(T)) is state-renaming-isomorphic to T.
Transducer parse_machine(const std::string& text);
std::string serialize_machine(const Transducer& T);

// DOT digraph: one node per state, initial marked with an entry arrow, edges
// labelled "bit|output" with ε for the empty output. The two arcs of a state
// that share a target are drawn as one edge carrying both labels.
std::string to_dot(const Transducer& T);

} // namespace rational
