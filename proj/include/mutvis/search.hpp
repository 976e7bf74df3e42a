#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "mutvis/graph.hpp"

namespace mutvis {

/// Hard ceiling on the number of candidates the subset search can handle.
constexpr std::size_t kMaxSearchCandidates = 256;

struct SearchOptions {
    unsigned threads = 1;
    /// Learned forbidden subsets kept per worker.
    std::size_t max_nogoods = 20000;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t predicate_calls = 0;
    std::uint64_t nogoods = 0;
};

struct SearchOutcome {
    VertexSet best;
    SearchStats stats;
};

/// Membership test for a downward-closed family of vertex sets. Must be safe to call
/// concurrently when SearchOptions::threads > 1.
using SetPredicate = std::function<bool(const VertexSet &)>;

/// Finds a largest member of a downward-closed family among subsets of `candidates`.
///
/// Sets grow in ascending candidate order, include-branch first, so the first maximum
/// met is the lexicographically smallest one; that is the returned witness for any
/// thread count. A failed extension X+v is shrunk by deletion to a minimal forbidden
/// subset (a nogood). Nogoods prune candidates that would complete one, and a greedy
/// packing of disjoint nogood remainders bounds what the undecided candidates can add.
///
/// `candidates` must be strictly ascending ids below `universe`, at most kMaxSearchCandidates.
SearchOutcome max_downward_closed(std::size_t universe, std::span<const Vertex> candidates,
                                  const SetPredicate &admissible, const SearchOptions &options = {});

} // namespace mutvis
