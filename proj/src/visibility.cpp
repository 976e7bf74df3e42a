#include "mutvis/visibility.hpp"

#include <limits>

namespace mutvis {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void check_universe(const Graph &g, const DistanceMatrix &d, const VertexSet &s) {
    if (s.universe() != g.order())
        throw InvalidInput("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                           std::to_string(g.order()));
    if (d.order() != g.order())
        throw InvalidInput("distance matrix does not belong to this graph");
}

// Hop distances from src in the walk system where members of obstacles other than src
// may be entered but never left. A vertex t is reached at its true distance exactly when
// some geodesic src..t avoids the obstacles internally.
struct RestrictedBfs {
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> queue;

    void run(const Graph &g, Vertex src, const VertexSet &obstacles) {
        dist.assign(g.order(), kUnreached);
        queue.clear();
        dist[src] = 0;
        queue.push_back(src);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            if (u != src && obstacles.contains(u))
                continue;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
};

RestrictedBfs &scratch() {
    thread_local RestrictedBfs bfs;
    return bfs;
}

} // namespace

bool is_pair_visible(const Graph &g, const DistanceMatrix &d, Vertex x, Vertex y, const VertexSet &obstacles) {
    check_universe(g, d, obstacles);
    if (x >= g.order() || y >= g.order())
        throw InvalidInput("vertex id out of range");
    if (x == y)
        throw InvalidInput("pair visibility needs two distinct vertices");
    auto &bfs = scratch();
    bfs.run(g, x, obstacles);
    return bfs.dist[y] == d(x, y);
}

std::optional<BlockedPair> find_blocked_pair(const Graph &g, const DistanceMatrix &d, const VertexSet &x) {
    check_universe(g, d, x);
    if (x.empty())
        return std::nullopt;
    auto &bfs = scratch();
    for (Vertex s = 0; s + 1 < g.order(); ++s) {
        bfs.run(g, s, x);
        for (Vertex t = s + 1; t < g.order(); ++t)
            if (bfs.dist[t] != d(s, t))
                return BlockedPair{s, t};
    }
    return std::nullopt;
}

bool is_total_mv_set(const Graph &g, const DistanceMatrix &d, const VertexSet &x) {
    return !find_blocked_pair(g, d, x).has_value();
}

bool is_total_mv_set(const Graph &g, const VertexSet &x) { return is_total_mv_set(g, all_pairs_distances(g), x); }

std::optional<BlockedPair> find_blocked_member_pair(const Graph &g, const DistanceMatrix &d, const VertexSet &x) {
    check_universe(g, d, x);
    auto members = x.members();
    auto &bfs = scratch();
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        bfs.run(g, members[i], x);
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (bfs.dist[members[j]] != d(members[i], members[j]))
                return BlockedPair{members[i], members[j]};
    }
    return std::nullopt;
}

bool is_mv_set(const Graph &g, const DistanceMatrix &d, const VertexSet &x) {
    return !find_blocked_member_pair(g, d, x).has_value();
}

bool is_mv_set(const Graph &g, const VertexSet &x) { return is_mv_set(g, all_pairs_distances(g), x); }

bool is_bypass_vertex(const Graph &g, Vertex u) {
    if (u >= g.order())
        throw InvalidInput("vertex id out of range");
    auto nbrs = g.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            Vertex a = nbrs[i];
            Vertex b = nbrs[j];
            if (g.adjacent(a, b))
                continue;
            // u is always a common neighbor; a convex P3 needs it to be the only one.
            if (g.neighbor_set(a).intersection_size(g.neighbor_set(b)) == 1)
                return false;
        }
    }
    return true;
}

VertexSet bypass_set(const Graph &g) {
    VertexSet out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        if (is_bypass_vertex(g, u))
            out.insert(u);
    return out;
}

} // namespace mutvis
