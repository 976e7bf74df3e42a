#pragma once

#include <optional>

#include "mutvis/graph.hpp"

namespace mutvis {

/// A pair of vertices that is not visible with respect to some obstacle set.
struct BlockedPair {
    Vertex x;
    Vertex y;
    friend bool operator==(const BlockedPair &, const BlockedPair &) = default;
};

/// True iff some shortest x,y-path has no internal vertex in obstacles.
/// The endpoints themselves may belong to obstacles.
bool is_pair_visible(const Graph &g, const DistanceMatrix &d, Vertex x, Vertex y, const VertexSet &obstacles);

/// First pair (in ascending (x, y) order) of V(g) that is not x-visible, if any.
std::optional<BlockedPair> find_blocked_pair(const Graph &g, const DistanceMatrix &d, const VertexSet &x);

/// Every pair of vertices of g is visible with obstacles x.
bool is_total_mv_set(const Graph &g, const DistanceMatrix &d, const VertexSet &x);
bool is_total_mv_set(const Graph &g, const VertexSet &x);

/// First pair of members of x that is not x-visible, if any.
std::optional<BlockedPair> find_blocked_member_pair(const Graph &g, const DistanceMatrix &d, const VertexSet &x);

/// Members of x are pairwise x-visible.
bool is_mv_set(const Graph &g, const DistanceMatrix &d, const VertexSet &x);
bool is_mv_set(const Graph &g, const VertexSet &x);

/// u is not the middle vertex of a convex P3, i.e. no two non-adjacent neighbors of u
/// have u as their only common neighbor.
bool is_bypass_vertex(const Graph &g, Vertex u);

VertexSet bypass_set(const Graph &g);

} // namespace mutvis
