#include "mutvis/corpus.hpp"

#include <functional>
#include <random>

#include "mutvis/generators.hpp"
#include "mutvis/graph_spec.hpp"

namespace mutvis {

std::vector<std::vector<std::size_t>> theta_length_vectors(std::size_t max_sum) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t min_next, std::size_t budget) {
        if (current.size() >= 2)
            out.push_back(current);
        for (std::size_t p = min_next; p <= budget; ++p) {
            // Only the first path may have length 1.
            if (current.size() == 1 && p < 2)
                continue;
            current.push_back(p);
            extend(p, budget - p);
            current.pop_back();
        }
    };
    extend(1, max_sum);
    return out;
}

std::vector<std::vector<std::size_t>> generalized_complete_partitions(std::size_t n, std::size_t min_parts) {
    std::vector<std::vector<std::size_t>> out;
    if (n < 2)
        return out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> split = [&](std::size_t rest, std::size_t max_part) {
        if (rest == 0) {
            if (current.size() >= min_parts)
                out.push_back(current);
            return;
        }
        for (std::size_t part = std::min(rest, max_part); part >= 1; --part) {
            current.push_back(part);
            split(rest - part, part);
            current.pop_back();
        }
    };
    split(n - 1, n - 1);
    return out;
}

std::vector<Graph> named_corpus(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 2; n <= max_n; ++n)
        out.push_back(gen::path(n));
    for (std::size_t n = 3; n <= max_n; ++n)
        out.push_back(gen::cycle(n));
    for (std::size_t n = 2; n <= max_n; ++n)
        out.push_back(gen::complete(n));
    for (std::size_t a = 2; a <= max_n; ++a)
        for (std::size_t b = a; a + b <= max_n; ++b)
            out.push_back(gen::biclique(a, b));
    for (std::size_t k = 2; k + 1 <= max_n; ++k)
        out.push_back(gen::star(k));
    for (const auto &lengths : theta_length_vectors(2 * max_n)) {
        std::size_t order = 2;
        for (auto p : lengths)
            order += p - 1;
        if (order <= max_n)
            out.push_back(gen::theta(lengths));
    }
    for (std::size_t n = 2; n <= max_n; ++n)
        for (const auto &parts : generalized_complete_partitions(n))
            out.push_back(gen::generalized_complete(parts));
    for (std::size_t m = 1; 3 * m + 3 <= max_n; ++m)
        out.push_back(gen::g_m(m));
    for (auto name : {"petersen", "fig1", "fig2"}) {
        auto g = gen::named(name);
        if (g.order() <= max_n)
            out.push_back(std::move(g));
    }
    for (std::size_t n = 3; n <= max_n; ++n)
        out.push_back(gen::random_tree(n, 1));
    return out;
}

namespace {

std::vector<std::pair<std::size_t, std::uint64_t>> draw_instances(std::size_t count, std::size_t min_n,
                                                                  std::size_t max_n, std::uint64_t seed) {
    if (min_n > max_n)
        throw InvalidInput("empty order range for random instances");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = min_n + static_cast<std::size_t>(rng() % (max_n - min_n + 1));
        std::uint64_t instance_seed = rng() % 1000000;
        out.emplace_back(n, instance_seed);
    }
    return out;
}

} // namespace

std::vector<Graph> random_corpus(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed) {
    std::vector<Graph> out;
    for (auto [n, s] : draw_instances(count, std::max<std::size_t>(min_n, 2), max_n, seed))
        out.push_back(random_connected_graph(n, s));
    return out;
}

std::vector<Graph> random_trees(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed) {
    std::vector<Graph> out;
    for (auto [n, s] : draw_instances(count, std::max<std::size_t>(min_n, 2), max_n, seed))
        out.push_back(gen::random_tree(n, s));
    return out;
}

} // namespace mutvis
