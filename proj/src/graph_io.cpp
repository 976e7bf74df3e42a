#include "mutvis/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace mutvis {

namespace {

[[noreturn]] void bad_line(const std::string &source, std::size_t line, const std::string &what) {
    throw InvalidInput(source + ":" + std::to_string(line) + ": " + what);
}

bool parse_count(const std::string &token, std::uint64_t &out) {
    if (token.empty() || token.size() > 18)
        return false;
    out = 0;
    for (char c : token) {
        if (c < '0' || c > '9')
            return false;
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return true;
}

} // namespace

Graph read_graph(std::istream &in, const std::string &source) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::uint64_t> order;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;)
            tokens.push_back(t);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        if (!order) {
            std::uint64_t n = 0;
            if (tokens.size() != 1 || !parse_count(tokens[0], n))
                bad_line(source, line_no, "expected the vertex count on the first line");
            if (n == 0)
                bad_line(source, line_no, "vertex count must be at least 1");
            order = n;
            continue;
        }
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        if (tokens.size() != 2 || !parse_count(tokens[0], u) || !parse_count(tokens[1], v))
            bad_line(source, line_no, "expected an edge 'u v'");
        for (auto id : {u, v})
            if (id >= *order)
                bad_line(source, line_no,
                         "id " + std::to_string(id) + " out of range (n = " + std::to_string(*order) + ")");
        if (u == v)
            bad_line(source, line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!order)
        throw InvalidInput(source + ": no vertex count found");
    auto g = build_graph(static_cast<std::size_t>(*order), edges);
    g.set_name(source);
    return g;
}

Graph parse_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open graph file '" + path + "'");
    return read_graph(in, path);
}

void write_graph(std::ostream &out, const Graph &g, const std::string &header) {
    if (!header.empty())
        out << "# " << header << '\n';
    out << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void export_graph_file(const std::string &path, const Graph &g, const std::string &header) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write graph file '" + path + "'");
    write_graph(out, g, header);
    out.flush();
    if (!out)
        throw std::runtime_error("error while writing graph file '" + path + "'");
}

} // namespace mutvis
