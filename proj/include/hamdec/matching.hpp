#pragma once

#include <optional>

#include "hamdec/graph.hpp"

namespace hamdec {

// Hopcroft-Karp maximum matching in a bipartite graph given by left size,
// right size and adjacency from left vertices to right vertices.
// Returns match_l (size nl, -1 if unmatched) with the matching size.
struct BipartiteMatching {
    std::vector<int> match_l, match_r;
    int size = 0;
};
BipartiteMatching hopcroft_karp(int nl, int nr, const std::vector<std::vector<int>>& adj);

// Maximum matching in a general graph (blossom contraction).  Returns the
// mate array (-1 if unmatched).
std::vector<int> blossom_maximum_matching(const Graph& g);

// A perfect matching of g, or nullopt if none exists.
std::optional<EdgeList> perfect_matching(const Graph& g);

// A spanning r-regular subgraph of g, or nullopt if none exists.  Reduction
// to perfect matching via the degree gadget (each vertex v becomes d(v)
// edge-endpoints joined to d(v)-r core vertices).
std::optional<Graph> r_factor(const Graph& g, int r);

}  // namespace hamdec
