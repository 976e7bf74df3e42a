#include "mutvis/generators.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <string>

namespace mutvis::gen {

namespace {

std::string join(std::string_view head, std::span<const std::size_t> values) {
    std::string out(head);
    out += ':';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

Graph named_graph(std::size_t order, const std::vector<Edge> &edges, std::string name) {
    auto g = build_graph(order, edges);
    g.set_name(std::move(name));
    return g;
}

// Edge lists written in the 1-based labels used by the drawings.
Graph from_one_based(std::size_t order, std::initializer_list<std::pair<int, int>> edges, std::string name) {
    std::vector<Edge> out;
    for (auto [u, v] : edges)
        out.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    return named_graph(order, out, std::move(name));
}

} // namespace

Graph path(std::size_t n) {
    if (n < 1)
        throw InvalidInput("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return named_graph(n, edges, "path:" + std::to_string(n));
}

Graph cycle(std::size_t n) {
    if (n < 3)
        throw InvalidInput("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return named_graph(n, edges, "cycle:" + std::to_string(n));
}

Graph complete(std::size_t n) {
    if (n < 1)
        throw InvalidInput("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return named_graph(n, edges, "complete:" + std::to_string(n));
}

Graph biclique(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1)
        throw InvalidInput("biclique parts need at least 1 vertex each");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (std::size_t v = a; v < a + b; ++v)
            edges.emplace_back(u, static_cast<Vertex>(v));
    return named_graph(a + b, edges, "biclique:" + std::to_string(a) + "," + std::to_string(b));
}

Graph star(std::size_t k) {
    if (k < 1)
        throw InvalidInput("star needs at least 1 leaf");
    auto g = biclique(1, k);
    g.set_name("star:" + std::to_string(k));
    return g;
}

Graph theta(std::span<const std::size_t> lengths) {
    if (lengths.size() < 2)
        throw InvalidInput("theta graph needs at least two paths");
    if (!std::is_sorted(lengths.begin(), lengths.end()))
        throw InvalidInput("theta path lengths must be non-decreasing");
    if (lengths[0] < 1)
        throw InvalidInput("theta path lengths must be at least 1");
    if (lengths[1] < 2)
        throw InvalidInput("theta graph allows at most one path of length 1");
    std::vector<Edge> edges;
    Vertex next = 2;
    for (std::size_t len : lengths) {
        Vertex prev = 0;
        for (std::size_t step = 1; step < len; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return named_graph(next, edges, join("theta", lengths));
}

Graph generalized_complete(std::span<const std::size_t> clique_sizes) {
    if (clique_sizes.empty())
        throw InvalidInput("generalized complete graph needs at least one clique");
    std::vector<Edge> edges;
    Vertex next = 1;
    for (std::size_t size : clique_sizes) {
        if (size < 1)
            throw InvalidInput("clique sizes must be at least 1");
        Vertex first = next;
        for (std::size_t i = 0; i < size; ++i, ++next) {
            edges.emplace_back(0, next);
            for (Vertex w = first; w < next; ++w)
                edges.emplace_back(w, next);
        }
    }
    return named_graph(next, edges, join("gencomplete", clique_sizes));
}

Graph g_m(std::size_t m) {
    if (m < 1)
        throw InvalidInput("G_m needs m >= 1");
    GmLabels l{m};
    std::vector<Edge> edges{{l.x(0), l.x(1)}, {l.x(m + 1), l.x(m + 2)}};
    for (std::size_t i = 1; i <= m; ++i) {
        edges.emplace_back(l.y(i), l.x(i));
        edges.emplace_back(l.y(i), l.x(i + 1));
        edges.emplace_back(l.z(i), l.x(i));
        edges.emplace_back(l.z(i), l.x(i + 1));
    }
    return named_graph(3 * m + 3, edges, "gm:" + std::to_string(m));
}

Graph named(std::string_view which) {
    if (which == "petersen") {
        std::vector<std::pair<int, int>> subsets;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                subsets.emplace_back(a, b);
        std::vector<Edge> edges;
        for (Vertex i = 0; i < subsets.size(); ++i)
            for (Vertex j = i + 1; j < subsets.size(); ++j) {
                auto [a, b] = subsets[i];
                auto [c, d] = subsets[j];
                if (a != c && a != d && b != c && b != d)
                    edges.emplace_back(i, j);
            }
        return named_graph(10, edges, "petersen");
    }
    if (which == "fig1") {
        return from_one_based(12,
                              {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11},
                               {11, 12}, {12, 8}, {1, 5}, {5, 7}, {6, 8}},
                              "fig1");
    }
    if (which == "fig2") {
        return from_one_based(10,
                              {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {6, 2}, {4, 7}, {7, 5}, {3, 8}, {8, 9},
                               {8, 10}, {1, 9}, {9, 10}, {10, 5}, {6, 7}},
                              "fig2");
    }
    throw InvalidInput("unknown named graph '" + std::string(which) + "' (expected petersen|fig1|fig2)");
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n < 2)
        throw InvalidInput("random tree needs n >= 2");
    // Raw engine output keeps sequences identical across standard library implementations.
    std::mt19937_64 rng(seed);
    std::vector<Vertex> code(n - 2);
    for (auto &c : code)
        c = static_cast<Vertex>(rng() % n);

    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code)
        ++degree[c];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);
    std::vector<Edge> edges;
    for (Vertex c : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1)
            leaves.push(c);
    }
    Vertex u = leaves.top();
    leaves.pop();
    edges.emplace_back(u, leaves.top());
    return named_graph(n, edges, "randomtree:" + std::to_string(n) + "," + std::to_string(seed));
}

} // namespace mutvis::gen
