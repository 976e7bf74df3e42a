#include "mutvis/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace mutvis {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

// BFS hop distances from src; unreachable entries are kUnreached.
void bfs(const Graph &g, Vertex src, std::vector<std::uint32_t> &dist, std::vector<Vertex> &queue) {
    dist.assign(g.order(), kUnreached);
    queue.clear();
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
}

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::from(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members)
        s.insert(v);
    return s;
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v)
        s.insert(v);
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_)
        throw InvalidInput("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v < universe_)
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w != 0) {
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
            w &= w - 1;
        }
    }
    return out;
}

void VertexSet::check_same_universe(const VertexSet &other) const {
    if (universe_ != other.universe_)
        throw InvalidInput("vertex set universe mismatch: " + std::to_string(universe_) + " vs " +
                           std::to_string(other.universe_));
}

bool VertexSet::is_subset_of(const VertexSet &other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0)
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet &other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0)
            return true;
    return false;
}

std::size_t VertexSet::intersection_size(const VertexSet &other) const {
    check_same_universe(other);
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
}

VertexSet &VertexSet::operator|=(const VertexSet &other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool lex_less(const VertexSet &a, const VertexSet &b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph build_graph(std::size_t order, std::span<const Edge> edges) {
    if (order == 0)
        throw InvalidInput("graph order must be at least 1");
    Graph g;
    g.neighbors_.resize(order);
    g.rows_.assign(order, VertexSet(order));
    for (auto [u, v] : edges) {
        if (u >= order || v >= order) {
            std::ostringstream msg;
            msg << "edge (" << u << "," << v << ") has id out of range for order " << order;
            throw InvalidInput(msg.str());
        }
        if (u == v)
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].contains(v))
            continue;
        g.rows_[u].insert(v);
        g.rows_[v].insert(u);
        ++g.edge_count_;
    }
    for (Vertex v = 0; v < order; ++v)
        g.neighbors_[v] = g.rows_[v].members();
    return g;
}

std::uint32_t DistanceMatrix::diameter() const noexcept {
    return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

DistanceMatrix all_pairs_distances(const Graph &g) {
    require_connected(g);
    DistanceMatrix d;
    d.order_ = g.order();
    d.dist_.resize(g.order() * g.order());
    std::vector<std::uint32_t> row;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        bfs(g, s, row, queue);
        std::copy(row.begin(), row.end(), d.dist_.begin() + static_cast<std::ptrdiff_t>(s * g.order()));
    }
    return d;
}

bool is_connected(const Graph &g) {
    if (g.order() == 0)
        return false;
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> queue;
    bfs(g, 0, dist, queue);
    return queue.size() == g.order();
}

void require_connected(const Graph &g) {
    if (!is_connected(g))
        throw InvalidInput("graph" + (g.name().empty() ? std::string() : " '" + g.name() + "'") +
                           " is disconnected; only connected graphs are supported here");
}

std::optional<std::size_t> girth(const Graph &g) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::uint32_t> dist(g.order());
    std::vector<Vertex> parent(g.order());
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        queue.assign(1, root);
        dist[root] = 0;
        parent[root] = root;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            if (2 * std::size_t{dist[u]} + 1 >= best)
                break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min<std::size_t>(best, std::size_t{dist[u]} + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<std::size_t>::max())
        return std::nullopt;
    return best;
}

std::size_t min_degree(const Graph &g) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

VertexSet leaf_set(const Graph &g) {
    VertexSet leaves(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            leaves.insert(v);
    return leaves;
}

bool is_independent_set(const Graph &g, const VertexSet &s) {
    if (s.universe() != g.order())
        throw InvalidInput("vertex set universe does not match graph order");
    for (Vertex v : s.members())
        if (g.neighbor_set(v).intersects(s))
            return false;
    return true;
}

namespace {

std::size_t alpha_rec(const std::vector<std::uint64_t> &adj, std::uint64_t live, std::size_t chosen, std::size_t best) {
    if (live == 0)
        return std::max(chosen, best);
    if (chosen + static_cast<std::size_t>(std::popcount(live)) <= best)
        return best;
    // Branch on a vertex of maximum live degree; isolated live vertices are taken greedily.
    int pick = -1;
    int pick_deg = -1;
    for (auto rest = live; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        int deg = std::popcount(adj[static_cast<std::size_t>(v)] & live);
        if (deg == 0) {
            live &= ~(std::uint64_t{1} << v);
            ++chosen;
            continue;
        }
        if (deg > pick_deg) {
            pick_deg = deg;
            pick = v;
        }
    }
    if (pick < 0)
        return std::max(chosen, best);
    auto bit = std::uint64_t{1} << pick;
    best = alpha_rec(adj, live & ~bit & ~adj[static_cast<std::size_t>(pick)], chosen + 1, best);
    best = alpha_rec(adj, live & ~bit, chosen, best);
    return best;
}

} // namespace

std::size_t independence_number(const Graph &g, std::size_t cap) {
    if (g.order() > cap || g.order() > 64)
        throw CapExceeded("independence number search over " + std::to_string(g.order()) +
                              " vertices exceeds the cap of " + std::to_string(std::min<std::size_t>(cap, 64)) +
                              " (raise with --cap-n)",
                          "--cap-n");
    std::vector<std::uint64_t> adj(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v))
            adj[v] |= std::uint64_t{1} << w;
    std::uint64_t live = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    return alpha_rec(adj, live, 0, 0);
}

bool is_convex(const Graph &g, const DistanceMatrix &d, const VertexSet &s) {
    if (s.universe() != g.order() || d.order() != g.order())
        throw InvalidInput("vertex set universe does not match graph order");
    auto inside = s.members();
    for (std::size_t i = 0; i < inside.size(); ++i) {
        for (std::size_t j = i + 1; j < inside.size(); ++j) {
            Vertex x = inside[i];
            Vertex y = inside[j];
            for (Vertex v = 0; v < g.order(); ++v) {
                if (!s.contains(v) && d(x, v) + d(v, y) == d(x, y))
                    return false;
            }
        }
    }
    return true;
}

} // namespace mutvis
