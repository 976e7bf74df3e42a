#pragma once

#include <cstdint>
#include <vector>

#include "mutvis/graph.hpp"

namespace mutvis {

/// Every valid theta length vector (k >= 2, p1 >= 1, p2 >= 2, non-decreasing) with sum at most max_sum.
std::vector<std::vector<std::size_t>> theta_length_vectors(std::size_t max_sum);

/// Every non-increasing clique-size list of a generalized complete graph on exactly n vertices.
std::vector<std::vector<std::size_t>> generalized_complete_partitions(std::size_t n, std::size_t min_parts = 1);

/// Instances of every generator family with 2 <= n <= max_n: paths, cycles, complete
/// graphs, bicliques, stars, all theta graphs, all generalized complete graphs, G_m,
/// the three named graphs and one random tree per order.
std::vector<Graph> named_corpus(std::size_t max_n);

/// `count` random connected graphs with min_n <= n <= max_n, reproducible from seed.
std::vector<Graph> random_corpus(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed);

/// `count` random trees with min_n <= n <= max_n, reproducible from seed.
std::vector<Graph> random_trees(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed);

} // namespace mutvis
