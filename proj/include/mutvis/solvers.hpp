#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mutvis/graph.hpp"
#include "mutvis/search.hpp"

namespace mutvis {

enum class InvariantKind { mu, mut, muit, bp, alpha, girth };
enum class Method { pruned_search, naive_oracle, formula };

std::string_view to_string(InvariantKind kind);
std::string_view to_string(Method method);
/// Throws InvalidInput for unknown names.
InvariantKind parse_invariant(std::string_view name);

constexpr std::size_t kDefaultBypassCap = 30;
constexpr std::size_t kDefaultMuCap = 20;
constexpr std::size_t kDefaultOracleCap = 14;

struct SolverLimits {
    std::size_t bp_cap = kDefaultBypassCap;
    std::size_t mu_cap = kDefaultMuCap;
    std::size_t oracle_cap = kDefaultOracleCap;
    std::size_t alpha_cap = kDefaultAlphaCap;
    unsigned threads = 1;
};

struct InvariantReport {
    InvariantKind kind = InvariantKind::mut;
    std::size_t value = 0;
    /// Set for the girth of an acyclic graph; value is then meaningless.
    bool infinite = false;
    VertexSet witness;
    Method method = Method::pruned_search;
    std::string graph_name;
    std::vector<std::string> notes;
    SearchStats stats;
};

/// mu_t(g) with a lexicographically smallest mu_t-set. Candidates are the bypass vertices.
InvariantReport max_total_mv(const Graph &g, const SolverLimits &limits = {});

/// mu(g) with a lexicographically smallest mu-set.
InvariantReport max_mv(const Graph &g, const SolverLimits &limits = {});

/// Largest set that is both independent and a total mutual-visibility set.
InvariantReport max_independent_total_mv(const Graph &g, const SolverLimits &limits = {});

/// Number of bypass vertices; the witness is BP(g).
InvariantReport bypass_number(const Graph &g);

/// alpha(g); the witness is a largest independent set.
InvariantReport independence_report(const Graph &g, const SolverLimits &limits = {});

/// Checks leaves <= mu_it <= min(mu_t, alpha).
bool sandwich_check(const Graph &g, const SolverLimits &limits = {});

/// Exhaustive enumeration of all 2^n vertex subsets against the definitional checkers.
/// kind must be mu, mut or muit; n(g) <= limits.oracle_cap.
InvariantReport naive_oracle(const Graph &g, InvariantKind kind, const SolverLimits &limits = {});

/// Dispatches on kind. girth carries no witness.
InvariantReport compute_invariant(const Graph &g, InvariantKind kind, const SolverLimits &limits = {});

/// mu_t(g) == 0, decided through bp(g) == 0. Order-1 graphs return false.
bool mut_is_zero(const Graph &g);

} // namespace mutvis
