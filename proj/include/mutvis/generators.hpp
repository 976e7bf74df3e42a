#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "mutvis/graph.hpp"

namespace mutvis::gen {

// Labelings: paths and cycles are numbered consecutively along the path/cycle;
// bicliques list part A (ids 0..a-1) before part B.

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph biclique(std::size_t a, std::size_t b);
/// K_{1,k}: the center is vertex 0.
Graph star(std::size_t k);

/// Θ(p1, ..., pk): hubs a = 0 and b = 1, then the internal vertices of each path in turn,
/// ordered from a to b. Lengths must be non-decreasing with k >= 2, p1 >= 1, p2 >= 2.
Graph theta(std::span<const std::size_t> lengths);

/// Apex 0 joined to disjoint cliques of the given sizes, numbered consecutively.
Graph generalized_complete(std::span<const std::size_t> clique_sizes);

/// G_m: x_0..x_{m+2} are ids 0..m+2, y_1..y_m are m+3..2m+2, z_1..z_m are 2m+3..3m+2.
Graph g_m(std::size_t m);

struct GmLabels {
    std::size_t m;
    Vertex x(std::size_t i) const { return static_cast<Vertex>(i); }
    Vertex y(std::size_t i) const { return static_cast<Vertex>(m + 2 + i); }
    Vertex z(std::size_t i) const { return static_cast<Vertex>(2 * m + 2 + i); }
};

/// petersen (Kneser K(5,2), 2-subsets of {0..4} in lexicographic order), fig1 (g1..g12
/// as 0..11), fig2 (x1..x10 as 0..9).
Graph named(std::string_view which);

/// Uniform random labeled tree from a Prüfer sequence drawn with mt19937_64(seed).
Graph random_tree(std::size_t n, std::uint64_t seed);

} // namespace mutvis::gen
