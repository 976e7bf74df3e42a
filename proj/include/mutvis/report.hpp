#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mutvis/product.hpp"
#include "mutvis/solvers.hpp"
#include "mutvis/verify.hpp"

namespace mutvis {

enum class OutputFormat { json, csv, text };

/// Throws InvalidInput for anything but json, csv or text.
OutputFormat parse_format(std::string_view name);

struct RenderOptions {
    OutputFormat format = OutputFormat::json;
    bool witness = false;
    /// Omits timestamp, elapsed time and search statistics so reruns are byte-identical.
    bool stable = false;
    double elapsed_ms = 0;
};

std::string render_invariant(const ProductGraph &p, const InvariantReport &report, const RenderOptions &options);

std::string render_records(const std::vector<VerificationRecord> &records, const RenderOptions &options);

} // namespace mutvis
