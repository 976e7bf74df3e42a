#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mutvis {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown for malformed input: bad ids, self-loops, unknown names, bad parameters.
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an exact search would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(const std::string &what, std::string flag)
        : std::runtime_error(what), flag_(std::move(flag)) {}
    const std::string &flag() const noexcept { return flag_; }

  private:
    std::string flag_;
};

/// Subset of the vertices 0..universe-1 of some host graph, stored as a bitset.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    static VertexSet from(std::size_t universe, std::span<const Vertex> members);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    /// Members in ascending order.
    std::vector<Vertex> members() const;

    bool is_subset_of(const VertexSet &other) const;
    bool intersects(const VertexSet &other) const;
    std::size_t intersection_size(const VertexSet &other) const;

    VertexSet &operator|=(const VertexSet &other);
    VertexSet &operator&=(const VertexSet &other);
    VertexSet &operator-=(const VertexSet &other);
    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }
    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

  private:
    void check_same_universe(const VertexSet &other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Compares sorted member sequences lexicographically (the witness tie-break order).
bool lex_less(const VertexSet &a, const VertexSet &b);

/// Simple undirected graph on vertices 0..order-1. Immutable once built.
class Graph {
  public:
    Graph() = default;

    std::size_t order() const noexcept { return neighbors_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::string &name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Sorted neighbor list.
    std::span<const Vertex> neighbors(Vertex v) const { return neighbors_.at(v); }
    const VertexSet &neighbor_set(Vertex v) const { return rows_.at(v); }
    std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }

    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &a, const Graph &b) { return a.neighbors_ == b.neighbors_; }

    friend Graph build_graph(std::size_t order, std::span<const Edge> edges);

  private:
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
    std::string name_;
};

/// Builds a graph from an edge list; duplicate edges are merged, either orientation accepted.
/// Throws InvalidInput on out-of-range ids, self-loops, or order 0.
Graph build_graph(std::size_t order, std::span<const Edge> edges);
inline Graph build_graph(std::size_t order, std::initializer_list<Edge> edges) {
    return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

/// All-pairs hop distances of a connected graph, row-major.
class DistanceMatrix {
  public:
    std::size_t order() const noexcept { return order_; }
    std::uint32_t operator()(Vertex u, Vertex v) const noexcept { return dist_[u * order_ + v]; }
    std::uint32_t diameter() const noexcept;

  private:
    friend DistanceMatrix all_pairs_distances(const Graph &g);
    std::size_t order_ = 0;
    std::vector<std::uint32_t> dist_;
};

/// Throws InvalidInput if g is disconnected.
DistanceMatrix all_pairs_distances(const Graph &g);

bool is_connected(const Graph &g);
void require_connected(const Graph &g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<std::size_t> girth(const Graph &g);
std::size_t min_degree(const Graph &g);
VertexSet leaf_set(const Graph &g);

bool is_independent_set(const Graph &g, const VertexSet &s);

constexpr std::size_t kDefaultAlphaCap = 24;

/// Exact independence number. Throws CapExceeded above cap (hard ceiling 64).
std::size_t independence_number(const Graph &g, std::size_t cap = kDefaultAlphaCap);

/// True iff no vertex outside s lies on a shortest path between two members of s.
bool is_convex(const Graph &g, const DistanceMatrix &d, const VertexSet &s);

} // namespace mutvis
