#include "mutvis/product.hpp"

#include "mutvis/visibility.hpp"

namespace mutvis {

ProductGraph::ProductGraph(Graph g) : graph_(g), factors_{std::move(g)} {}

std::vector<std::size_t> ProductGraph::factor_orders() const {
    std::vector<std::size_t> orders;
    orders.reserve(factors_.size());
    for (const auto &f : factors_)
        orders.push_back(f.order());
    return orders;
}

Vertex ProductGraph::encode(std::span<const Vertex> coords) const {
    if (coords.size() != factors_.size())
        throw InvalidInput("coordinate tuple has " + std::to_string(coords.size()) + " entries, expected " +
                           std::to_string(factors_.size()));
    std::size_t id = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= factors_[i].order())
            throw InvalidInput("coordinate " + std::to_string(coords[i]) + " out of range for factor " +
                               std::to_string(i));
        id = id * factors_[i].order() + coords[i];
    }
    return static_cast<Vertex>(id);
}

std::vector<Vertex> ProductGraph::decode(Vertex id) const {
    if (id >= graph_.order())
        throw InvalidInput("product vertex id " + std::to_string(id) + " out of range");
    std::vector<Vertex> coords(factors_.size());
    std::size_t rest = id;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        coords[i] = static_cast<Vertex>(rest % factors_[i].order());
        rest /= factors_[i].order();
    }
    return coords;
}

ProductGraph cartesian_product(const ProductGraph &left, const ProductGraph &right) {
    const Graph &g = left.graph();
    const Graph &h = right.graph();
    require_connected(g);
    require_connected(h);
    const std::size_t nh = h.order();
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * nh + h.edge_count() * g.order());
    for (auto [a, b] : g.edges())
        for (Vertex y = 0; y < nh; ++y)
            edges.emplace_back(static_cast<Vertex>(a * nh + y), static_cast<Vertex>(b * nh + y));
    for (Vertex x = 0; x < g.order(); ++x)
        for (auto [a, b] : h.edges())
            edges.emplace_back(static_cast<Vertex>(x * nh + a), static_cast<Vertex>(x * nh + b));

    ProductGraph p;
    p.graph_ = build_graph(g.order() * nh, edges);
    p.graph_.set_name("cp(" + g.name() + "," + h.name() + ")");
    p.factors_ = left.factors_;
    p.factors_.insert(p.factors_.end(), right.factors_.begin(), right.factors_.end());
    return p;
}

ProductGraph cartesian_product(const Graph &g, const Graph &h) {
    return cartesian_product(ProductGraph(g), ProductGraph(h));
}

ProductGraph k_fold_product(std::span<const Graph> factors) {
    if (factors.size() < 2)
        throw InvalidInput("a k-fold product needs at least two factors");
    ProductGraph acc(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = cartesian_product(acc, ProductGraph(factors[i]));
    return acc;
}

VertexSet layer(const ProductGraph &p, std::size_t factor_index, std::span<const Vertex> fixed_coords) {
    if (factor_index >= p.factor_count())
        throw InvalidInput("factor index " + std::to_string(factor_index) + " out of range");
    if (fixed_coords.size() + 1 != p.factor_count())
        throw InvalidInput("layer needs " + std::to_string(p.factor_count() - 1) + " fixed coordinates, got " +
                           std::to_string(fixed_coords.size()));
    std::vector<Vertex> coords(p.factor_count());
    for (std::size_t i = 0, j = 0; i < coords.size(); ++i)
        if (i != factor_index)
            coords[i] = fixed_coords[j++];
    VertexSet out(p.graph().order());
    for (Vertex v = 0; v < p.factor(factor_index).order(); ++v) {
        coords[factor_index] = v;
        out.insert(p.encode(coords));
    }
    return out;
}

namespace {

void require_two_factors(const ProductGraph &p) {
    if (p.factor_count() != 2)
        throw InvalidInput("witness constructions need a product of exactly two factors");
}

void require(bool condition, const std::string &what) {
    if (!condition)
        throw InvalidInput("witness precondition failed: " + what);
}

VertexSet image(const ProductGraph &p, const VertexSet &a, const VertexSet &b) {
    VertexSet out(p.graph().order());
    for (Vertex x : a.members())
        for (Vertex y : b.members())
            out.insert(p.encode(std::vector<Vertex>{x, y}));
    return out;
}

void verify_result(const ProductGraph &p, const VertexSet &u) {
    if (auto blocked = find_blocked_pair(p.graph(), all_pairs_distances(p.graph()), u))
        throw std::logic_error("constructed set is not a total mutual-visibility set: pair (" +
                               std::to_string(blocked->x) + "," + std::to_string(blocked->y) + ") is blocked");
}

} // namespace

VertexSet lower_bound_witness(const ProductGraph &p, const VertexSet &i_g, const VertexSet &x_h) {
    require_two_factors(p);
    const Graph &g = p.factor(0);
    const Graph &h = p.factor(1);
    require(i_g.universe() == g.order(), "i_g is not a vertex set of the first factor");
    require(x_h.universe() == h.order(), "x_h is not a vertex set of the second factor");
    require(is_independent_set(g, i_g), "i_g is not independent in the first factor");
    require(is_total_mv_set(g, i_g), "i_g is not a total mutual-visibility set of the first factor");
    require(is_total_mv_set(h, x_h), "x_h is not a total mutual-visibility set of the second factor");
    auto u = image(p, i_g, x_h);
    verify_result(p, u);
    return u;
}

VertexSet over_visible_witness(const ProductGraph &p, const VertexSet &s_g, std::span<const Vertex> extras_g,
                               const VertexSet &s_h, std::span<const Vertex> extras_h) {
    require_two_factors(p);
    const Graph &g = p.factor(0);
    const Graph &h = p.factor(1);
    require(!extras_g.empty() && extras_g.size() == extras_h.size(),
            "extras must be non-empty and equally many in both factors");

    auto check_side = [](const Graph &f, const VertexSet &s, std::span<const Vertex> extras, const char *side) {
        std::string tag(side);
        require(s.universe() == f.order(), "s_" + tag + " is not a vertex set of its factor");
        VertexSet all = s;
        for (Vertex e : extras) {
            require(e < f.order(), "extra vertex out of range in " + tag);
            require(!all.contains(e), "extras_" + tag + " overlaps s_" + tag + " or repeats a vertex");
            all.insert(e);
        }
        require(is_independent_set(f, all), "s_" + tag + " plus extras is not independent");
        require(all.is_subset_of(bypass_set(f)), "s_" + tag + " plus extras contains a non-bypass vertex");
        require(is_total_mv_set(f, s), "s_" + tag + " is not a total mutual-visibility set");
    };
    check_side(g, s_g, extras_g, "g");
    check_side(h, s_h, extras_h, "h");

    auto u = image(p, s_g, s_h);
    for (std::size_t j = 0; j < extras_g.size(); ++j)
        u.insert(p.encode(std::vector<Vertex>{extras_g[j], extras_h[j]}));
    verify_result(p, u);
    return u;
}

} // namespace mutvis
