#pragma once

#include <span>
#include <string>
#include <vector>

#include "mutvis/graph.hpp"

namespace mutvis {

/// A Cartesian product together with its coordinate system.
///
/// Product ids are mixed-radix over the factor orders with the last factor varying
/// fastest, so for two factors (a, b) maps to a * n(H) + b. Products of products
/// concatenate their coordinate lists; the id of a vertex does not depend on grouping.
class ProductGraph {
  public:
    /// Wraps a single graph as a one-factor product.
    explicit ProductGraph(Graph g);

    const Graph &graph() const noexcept { return graph_; }
    std::span<const Graph> factors() const noexcept { return factors_; }
    const Graph &factor(std::size_t i) const { return factors_.at(i); }
    std::vector<std::size_t> factor_orders() const;
    std::size_t factor_count() const noexcept { return factors_.size(); }
    void set_name(std::string name) { graph_.set_name(std::move(name)); }

    Vertex encode(std::span<const Vertex> coords) const;
    std::vector<Vertex> decode(Vertex id) const;

  private:
    friend ProductGraph cartesian_product(const ProductGraph &left, const ProductGraph &right);
    ProductGraph() = default;

    Graph graph_;
    std::vector<Graph> factors_;
};

/// G □ H. Both factors must be connected.
ProductGraph cartesian_product(const Graph &g, const Graph &h);
ProductGraph cartesian_product(const ProductGraph &left, const ProductGraph &right);

/// G1 □ ... □ Gk, k >= 2, built left-associated with flattened coordinates.
ProductGraph k_fold_product(std::span<const Graph> factors);

/// The layer through factor_index: the free coordinate ranges over that factor while the
/// other coordinates are fixed_coords, listed in factor order (k - 1 entries).
VertexSet layer(const ProductGraph &p, std::size_t factor_index, std::span<const Vertex> fixed_coords);

/// Image of I_G x X_H in a two-factor product G □ H. Verifies that i_g is an independent total
/// mutual-visibility set of G and x_h a total mutual-visibility set of H, and that the
/// result is a total mutual-visibility set of the product.
VertexSet lower_bound_witness(const ProductGraph &p, const VertexSet &i_g, const VertexSet &x_h);

/// (S_G x S_H) together with the pairs (extras_g[j], extras_h[j]). Verifies that
/// s_g + extras_g is an independent set of bypass vertices containing the total
/// mutual-visibility set s_g (same for H), that the extras are disjoint from the s sets
/// and equally many (at least one), and that the result is a total mutual-visibility set.
VertexSet over_visible_witness(const ProductGraph &p, const VertexSet &s_g, std::span<const Vertex> extras_g,
                               const VertexSet &s_h, std::span<const Vertex> extras_h);

} // namespace mutvis
