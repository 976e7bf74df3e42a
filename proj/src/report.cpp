#include "mutvis/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace mutvis {

using json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view name) {
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "text")
        return OutputFormat::text;
    throw InvalidInput("unknown format '" + std::string(name) + "' (expected json|csv|text)");
}

namespace {

std::string timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string coords_text(const std::vector<Vertex> &coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i)
        out += (i ? "," : "") + std::to_string(coords[i]);
    return out + ")";
}

std::string join(const std::vector<std::string> &parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

std::string render_invariant(const ProductGraph &p, const InvariantReport &r, const RenderOptions &o) {
    const Graph &g = p.graph();
    bool show_coords = o.witness && p.factor_count() > 1;
    auto members = r.witness.members();
    std::string value = r.infinite ? "inf" : std::to_string(r.value);

    if (o.format == OutputFormat::json) {
        json j;
        j["graph"] = g.name();
        j["order"] = g.order();
        j["edges"] = g.edge_count();
        j["invariant"] = std::string(to_string(r.kind));
        j["value"] = r.infinite ? json(nullptr) : json(r.value);
        j["method"] = std::string(to_string(r.method));
        if (o.witness) {
            j["witness"] = members;
            if (show_coords) {
                json coords = json::array();
                for (Vertex v : members)
                    coords.push_back(p.decode(v));
                j["witness_coords"] = coords;
            }
        }
        j["notes"] = r.notes;
        if (!o.stable) {
            j["stats"] = {{"nodes", r.stats.nodes},
                          {"predicate_calls", r.stats.predicate_calls},
                          {"nogoods", r.stats.nogoods}};
            j["elapsed_ms"] = o.elapsed_ms;
            j["timestamp"] = timestamp();
        }
        return j.dump(2) + "\n";
    }

    std::vector<std::string> witness_ids;
    std::vector<std::string> witness_coords;
    for (Vertex v : members) {
        witness_ids.push_back(std::to_string(v));
        if (show_coords)
            witness_coords.push_back(coords_text(p.decode(v)));
    }

    std::ostringstream out;
    if (o.format == OutputFormat::csv) {
        out << "graph,order,edges,invariant,value,method";
        if (o.witness)
            out << ",witness";
        if (show_coords)
            out << ",witness_coords";
        if (!o.stable)
            out << ",elapsed_ms,timestamp";
        out << "\n"
            << csv_field(g.name()) << ',' << g.order() << ',' << g.edge_count() << ',' << to_string(r.kind) << ','
            << value << ',' << to_string(r.method);
        if (o.witness)
            out << ',' << csv_field(join(witness_ids, " "));
        if (show_coords)
            out << ',' << csv_field(join(witness_coords, " "));
        if (!o.stable)
            out << ',' << o.elapsed_ms << ',' << timestamp();
        out << "\n";
        return out.str();
    }

    out << "graph:     " << g.name() << " (n=" << g.order() << ", m=" << g.edge_count() << ")\n"
        << to_string(r.kind) << ": " << value << " [" << to_string(r.method) << "]\n";
    if (o.witness) {
        out << "witness:   {" << join(witness_ids, ",") << "}\n";
        if (show_coords)
            out << "coords:    " << join(witness_coords, " ") << "\n";
    }
    for (const auto &note : r.notes)
        out << "note:      " << note << "\n";
    if (!o.stable)
        out << "elapsed:   " << o.elapsed_ms << " ms\n";
    return out.str();
}

std::string render_records(const std::vector<VerificationRecord> &records, const RenderOptions &o) {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto &rec : records)
        ++counts[static_cast<int>(rec.status)];

    if (o.format == OutputFormat::json) {
        json j;
        j["records"] = json::array();
        for (const auto &rec : records)
            j["records"].push_back({{"theorem_id", rec.theorem_id},
                                    {"instance", rec.instance},
                                    {"expected", rec.expected},
                                    {"observed", rec.observed},
                                    {"status", std::string(to_string(rec.status))}});
        j["summary"] = {{"total", records.size()},
                        {"pass", counts[0]},
                        {"fail", counts[1]},
                        {"skipped_cap", counts[2]}};
        if (!o.stable) {
            j["elapsed_ms"] = o.elapsed_ms;
            j["timestamp"] = timestamp();
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    if (o.format == OutputFormat::csv) {
        out << "theorem_id,instance,expected,observed,status\n";
        for (const auto &rec : records)
            out << csv_field(rec.theorem_id) << ',' << csv_field(rec.instance) << ',' << csv_field(rec.expected)
                << ',' << csv_field(rec.observed) << ',' << to_string(rec.status) << "\n";
        return out.str();
    }

    for (const auto &rec : records)
        out << std::left << std::setw(11) << to_string(rec.status) << ' ' << rec.theorem_id << ' ' << rec.instance
            << ": expected " << rec.expected << "; observed " << rec.observed << "\n";
    out << records.size() << " records: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
        << " skipped-cap\n";
    if (!o.stable)
        out << "elapsed: " << o.elapsed_ms << " ms\n";
    return out.str();
}

} // namespace mutvis
