#include "mutvis/graph_spec.hpp"

#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "mutvis/generators.hpp"
#include "mutvis/graph_io.hpp"

namespace mutvis {

namespace {

constexpr int kMaxProductDepth = 3;

class SpecParser {
  public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    ProductGraph parse() {
        auto g = parse_spec(0);
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return g;
    }

  private:
    [[noreturn]] void fail(const std::string &what) const {
        throw InvalidInput("graph spec '" + std::string(text_) + "': " + what + " at offset " +
                           std::to_string(pos_));
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
    bool peek_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    void expect(char c) {
        if (!peek(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view word() {
        auto start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a family name");
        return text_.substr(start, pos_ - start);
    }

    std::uint64_t number() {
        if (!peek_digit())
            fail("expected a number");
        std::uint64_t value = 0;
        while (peek_digit()) {
            auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (UINT64_MAX - digit) / 10)
                fail("number too large");
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    // Integers after "name:"; a comma continues the list only when a digit follows,
    // so "cp(theta:2,2,4,complete:3)" splits correctly.
    std::vector<std::uint64_t> arguments() {
        std::vector<std::uint64_t> args;
        if (!peek(':'))
            return args;
        ++pos_;
        args.push_back(number());
        while (peek(',') && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            args.push_back(number());
        }
        return args;
    }

    void arity(std::string_view name, const std::vector<std::uint64_t> &args, std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            fail("'" + std::string(name) + "' takes " +
                 (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                 " parameter(s), got " + std::to_string(args.size()));
    }

    ProductGraph parse_spec(int depth) {
        auto name = word();
        if (name == "cp") {
            if (depth >= kMaxProductDepth)
                fail("cp nesting deeper than " + std::to_string(kMaxProductDepth));
            expect('(');
            std::vector<ProductGraph> parts;
            parts.push_back(parse_spec(depth + 1));
            while (peek(',')) {
                ++pos_;
                parts.push_back(parse_spec(depth + 1));
            }
            expect(')');
            if (parts.size() < 2 || parts.size() > 3)
                fail("cp takes 2 or 3 factors");
            auto acc = cartesian_product(parts[0], parts[1]);
            std::string label = "cp(" + parts[0].graph().name() + "," + parts[1].graph().name();
            if (parts.size() == 3) {
                acc = cartesian_product(acc, parts[2]);
                label += "," + parts[2].graph().name();
            }
            acc.set_name(label + ")");
            return acc;
        }
        auto args = arguments();
        return ProductGraph(build_family(name, args));
    }

    Graph build_family(std::string_view name, const std::vector<std::uint64_t> &args) {
        auto n = [&](std::size_t i) { return static_cast<std::size_t>(args[i]); };
        auto sizes = [&] { return std::vector<std::size_t>(args.begin(), args.end()); };
        if (name == "path") {
            arity(name, args, 1, 1);
            return gen::path(n(0));
        }
        if (name == "cycle") {
            arity(name, args, 1, 1);
            return gen::cycle(n(0));
        }
        if (name == "complete") {
            arity(name, args, 1, 1);
            return gen::complete(n(0));
        }
        if (name == "biclique") {
            arity(name, args, 2, 2);
            return gen::biclique(n(0), n(1));
        }
        if (name == "star") {
            arity(name, args, 1, 1);
            return gen::star(n(0));
        }
        if (name == "theta") {
            arity(name, args, 2, 64);
            auto lengths = sizes();
            return gen::theta(lengths);
        }
        if (name == "gencomplete") {
            arity(name, args, 1, 64);
            auto cliques = sizes();
            return gen::generalized_complete(cliques);
        }
        if (name == "gm") {
            arity(name, args, 1, 1);
            return gen::g_m(n(0));
        }
        if (name == "randomtree") {
            arity(name, args, 2, 2);
            return gen::random_tree(n(0), args[1]);
        }
        if (name == "randomgraph") {
            arity(name, args, 2, 3);
            unsigned percent = args.size() == 3 ? static_cast<unsigned>(args[2]) : 30;
            return random_connected_graph(n(0), args[1], percent);
        }
        if (name == "petersen" || name == "fig1" || name == "fig2") {
            arity(name, args, 0, 0);
            return gen::named(name);
        }
        fail("unknown family '" + std::string(name) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ProductGraph parse_graph_spec(std::string_view spec) { return SpecParser(spec).parse(); }

ProductGraph load_graph_source(std::string_view source) {
    if (!source.empty() && source.front() == '@')
        return ProductGraph(parse_graph_file(std::string(source.substr(1))));
    return parse_graph_spec(source);
}

Graph random_connected_graph(std::size_t n, std::uint64_t seed, unsigned percent) {
    if (percent > 100)
        throw InvalidInput("edge percentage must be at most 100");
    auto tree = gen::random_tree(n, seed);
    auto edges = tree.edges();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!tree.adjacent(u, v) && rng() % 100 < percent)
                edges.emplace_back(u, v);
    auto g = build_graph(n, edges);
    g.set_name("randomgraph:" + std::to_string(n) + "," + std::to_string(seed) +
               (percent == 30 ? std::string() : "," + std::to_string(percent)));
    return g;
}

} // namespace mutvis
