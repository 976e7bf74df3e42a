#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mutvis/solvers.hpp"

namespace mutvis {

enum class Status { pass, fail, skipped_cap };
std::string_view to_string(Status status);

/// One checked instance of a result.
struct VerificationRecord {
    std::string theorem_id;
    std::string instance;
    std::string expected;
    std::string observed;
    Status status = Status::pass;
};

/// Knobs shared by all suites. Zero means "use the suite default".
struct VerifyOptions {
    SolverLimits limits;
    /// Overrides the suite's instance list (graph specs), where the suite takes one.
    std::vector<std::string> graphs;
    std::size_t max_n = 0;
    std::size_t count = 0;
    std::uint64_t seed = 1;
};

struct Suite {
    std::string id;
    std::string summary;
    std::function<std::vector<VerificationRecord>(const VerifyOptions &)> run;
};

const std::vector<Suite> &verification_suites();

/// Throws InvalidInput for an unknown id.
std::vector<VerificationRecord> run_suite(std::string_view id, const VerifyOptions &options);

/// True when no record failed; skipped-cap records do not count as failures.
bool all_passed(const std::vector<VerificationRecord> &records);

std::string format_set(const VertexSet &s);

} // namespace mutvis
