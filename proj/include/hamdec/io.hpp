#pragma once

#include <iosfwd>
#include <string>

#include "hamdec/graph.hpp"

namespace hamdec {

// Edge-list text format: header "n m", then m lines "u v".
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Four lines: "A: i j k...", "A0: ...", "B: ...", "B0: ...".
BiPartition read_bipartition(std::istream& in);
void write_bipartition(std::ostream& out, const BiPartition& p);

// Lines "C: v0 v1 ... v_{n-1}" per cycle and "M: u1-v1 u2-v2 ..." per
// matching; trailing "complete: yes|no".  The host graph is not serialized;
// the reader attaches the host supplied by the caller.
Decomposition read_decomposition(std::istream& in, const Graph& host);
void write_decomposition(std::ostream& out, const Decomposition& d);

std::string to_string(const Graph& g);
std::string to_string(const Decomposition& d);

}  // namespace hamdec
