#include "mutvis/solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "mutvis/visibility.hpp"

namespace mutvis {

std::string_view to_string(InvariantKind kind) {
    switch (kind) {
    case InvariantKind::mu:
        return "mu";
    case InvariantKind::mut:
        return "mut";
    case InvariantKind::muit:
        return "muit";
    case InvariantKind::bp:
        return "bp";
    case InvariantKind::alpha:
        return "alpha";
    case InvariantKind::girth:
        return "girth";
    }
    return "?";
}

std::string_view to_string(Method method) {
    switch (method) {
    case Method::pruned_search:
        return "pruned-search";
    case Method::naive_oracle:
        return "naive-oracle";
    case Method::formula:
        return "formula";
    }
    return "?";
}

InvariantKind parse_invariant(std::string_view name) {
    for (auto kind : {InvariantKind::mu, InvariantKind::mut, InvariantKind::muit, InvariantKind::bp,
                      InvariantKind::alpha, InvariantKind::girth})
        if (to_string(kind) == name)
            return kind;
    throw InvalidInput("unknown invariant '" + std::string(name) + "' (expected mu|mut|muit|bp|alpha|girth)");
}

namespace {

InvariantReport make_report(const Graph &g, InvariantKind kind, Method method) {
    InvariantReport r;
    r.kind = kind;
    r.method = method;
    r.graph_name = g.name();
    r.witness = VertexSet(g.order());
    if (g.order() == 1)
        r.notes.emplace_back("order-1 convention: the single vertex counts as a bypass vertex");
    return r;
}

void require_bp_cap(std::size_t bp, const SolverLimits &limits, std::string_view what) {
    if (bp > limits.bp_cap)
        throw CapExceeded(std::string(what) + ": bp(G) = " + std::to_string(bp) + " exceeds the bypass cap of " +
                              std::to_string(limits.bp_cap) + " (raise with --cap-bp)",
                          "--cap-bp");
}

// Sanity conditions every reported witness must satisfy; a violation is a bug, not bad input.
void ensure(bool condition, const std::string &what) {
    if (!condition)
        throw std::logic_error("internal consistency check failed: " + what);
}

SearchOptions search_options(const SolverLimits &limits) {
    SearchOptions opts;
    opts.threads = limits.threads;
    return opts;
}

} // namespace

InvariantReport max_total_mv(const Graph &g, const SolverLimits &limits) {
    auto d = all_pairs_distances(g);
    auto bp = bypass_set(g);
    require_bp_cap(bp.size(), limits, "total mutual-visibility search");
    auto candidates = bp.members();
    auto outcome = max_downward_closed(
        g.order(), candidates, [&](const VertexSet &x) { return is_total_mv_set(g, d, x); }, search_options(limits));

    auto r = make_report(g, InvariantKind::mut, Method::pruned_search);
    r.value = outcome.best.size();
    r.witness = std::move(outcome.best);
    r.stats = outcome.stats;
    ensure(is_total_mv_set(g, d, r.witness), "mu_t witness is not a total mutual-visibility set");
    ensure(r.witness.is_subset_of(bp), "mu_t witness contains a non-bypass vertex");
    ensure(r.value <= bp.size(), "mu_t exceeds bp");
    return r;
}

InvariantReport max_mv(const Graph &g, const SolverLimits &limits) {
    if (g.order() > limits.mu_cap)
        throw CapExceeded("mutual-visibility search over " + std::to_string(g.order()) +
                              " vertices exceeds the cap of " + std::to_string(limits.mu_cap) +
                              " (raise with --cap-n)",
                          "--cap-n");
    auto d = all_pairs_distances(g);
    std::vector<Vertex> candidates(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        candidates[v] = v;
    auto outcome = max_downward_closed(
        g.order(), candidates, [&](const VertexSet &x) { return is_mv_set(g, d, x); }, search_options(limits));

    auto r = make_report(g, InvariantKind::mu, Method::pruned_search);
    r.value = outcome.best.size();
    r.witness = std::move(outcome.best);
    r.stats = outcome.stats;
    ensure(is_mv_set(g, d, r.witness), "mu witness is not a mutual-visibility set");
    return r;
}

InvariantReport max_independent_total_mv(const Graph &g, const SolverLimits &limits) {
    auto d = all_pairs_distances(g);
    auto bp = bypass_set(g);
    require_bp_cap(bp.size(), limits, "independent total mutual-visibility search");
    auto candidates = bp.members();
    auto outcome = max_downward_closed(
        g.order(), candidates,
        [&](const VertexSet &x) { return is_independent_set(g, x) && is_total_mv_set(g, d, x); },
        search_options(limits));

    auto r = make_report(g, InvariantKind::muit, Method::pruned_search);
    r.value = outcome.best.size();
    r.witness = std::move(outcome.best);
    r.stats = outcome.stats;
    ensure(is_independent_set(g, r.witness) && is_total_mv_set(g, d, r.witness),
           "mu_it witness is not an independent total mutual-visibility set");
    return r;
}

InvariantReport bypass_number(const Graph &g) {
    require_connected(g);
    auto r = make_report(g, InvariantKind::bp, Method::formula);
    r.witness = bypass_set(g);
    r.value = r.witness.size();
    return r;
}

InvariantReport independence_report(const Graph &g, const SolverLimits &limits) {
    auto r = make_report(g, InvariantKind::alpha, Method::pruned_search);
    r.value = independence_number(g, limits.alpha_cap);
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        all[v] = v;
    auto outcome = max_downward_closed(
        g.order(), all, [&](const VertexSet &x) { return is_independent_set(g, x); }, search_options(limits));
    r.witness = std::move(outcome.best);
    r.stats = outcome.stats;
    ensure(r.witness.size() == r.value && is_independent_set(g, r.witness),
           "independence witness disagrees with the independence number");
    return r;
}

bool sandwich_check(const Graph &g, const SolverLimits &limits) {
    auto leaves = leaf_set(g).size();
    auto muit = max_independent_total_mv(g, limits).value;
    auto mut = max_total_mv(g, limits).value;
    auto alpha = independence_number(g, limits.alpha_cap);
    return leaves <= muit && muit <= std::min(mut, alpha);
}

InvariantReport naive_oracle(const Graph &g, InvariantKind kind, const SolverLimits &limits) {
    if (kind != InvariantKind::mu && kind != InvariantKind::mut && kind != InvariantKind::muit)
        throw InvalidInput("naive oracle supports mu, mut and muit only");
    if (g.order() > limits.oracle_cap || g.order() > 24)
        throw CapExceeded("naive oracle over " + std::to_string(g.order()) + " vertices exceeds the cap of " +
                              std::to_string(std::min<std::size_t>(limits.oracle_cap, 24)),
                          "--cap-oracle");
    auto d = all_pairs_distances(g);
    auto admissible = [&](const VertexSet &x) {
        switch (kind) {
        case InvariantKind::mu:
            return is_mv_set(g, d, x);
        case InvariantKind::mut:
            return is_total_mv_set(g, d, x);
        default:
            return is_independent_set(g, x) && is_total_mv_set(g, d, x);
        }
    };

    auto r = make_report(g, kind, Method::naive_oracle);
    const std::uint32_t n = static_cast<std::uint32_t>(g.order());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet x(n);
        for (Vertex v = 0; v < n; ++v)
            if ((mask >> v) & 1u)
                x.insert(v);
        auto size = x.size();
        if (size < r.value || (size == r.value && !lex_less(x, r.witness)))
            continue;
        if (!admissible(x))
            continue;
        r.value = size;
        r.witness = std::move(x);
    }
    return r;
}

bool mut_is_zero(const Graph &g) {
    require_connected(g);
    for (Vertex u = 0; u < g.order(); ++u)
        if (is_bypass_vertex(g, u))
            return false;
    return true;
}

InvariantReport compute_invariant(const Graph &g, InvariantKind kind, const SolverLimits &limits) {
    switch (kind) {
    case InvariantKind::mu:
        return max_mv(g, limits);
    case InvariantKind::mut:
        return max_total_mv(g, limits);
    case InvariantKind::muit:
        return max_independent_total_mv(g, limits);
    case InvariantKind::bp:
        return bypass_number(g);
    case InvariantKind::alpha:
        return independence_report(g, limits);
    case InvariantKind::girth:
        break;
    }
    auto r = make_report(g, InvariantKind::girth, Method::formula);
    auto gi = girth(g);
    r.infinite = !gi.has_value();
    r.value = gi.value_or(0);
    return r;
}

} // namespace mutvis
