#pragma once

#include <cstdint>

#include "netcomm/digraph.hpp"

namespace netcomm {

/// Erdos-Renyi digraph: each ordered pair (i,j), i != j, is an edge
/// independently with probability p. Deterministic for a fixed seed across
/// platforms (mt19937_64 with a plain bit-shift uniform, no distributions).
Digraph random_digraph(int n, double p, std::uint64_t seed);

/// Random digraph with a fixed number of edges, sampled without replacement.
Digraph random_digraph_with_edges(int n, std::size_t m, std::uint64_t seed);

}  // namespace netcomm
