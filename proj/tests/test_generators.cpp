#include <doctest.h>

#include <algorithm>

#include "mutvis/corpus.hpp"
#include "mutvis/generators.hpp"
#include "mutvis/graph_spec.hpp"
#include "mutvis/solvers.hpp"
#include "mutvis/visibility.hpp"

using namespace mutvis;

TEST_CASE("basic families") {
    CHECK(gen::complete(4).edge_count() == 6);
    CHECK(gen::cycle(5).edge_count() == 5);
    CHECK(gen::path(1).order() == 1);
    auto b = gen::biclique(2, 3);
    CHECK(b.edge_count() == 6);
    CHECK(b.adjacent(0, 2));
    CHECK_FALSE(b.adjacent(0, 1));
    CHECK(gen::star(4) == gen::biclique(1, 4));
    CHECK_THROWS_AS(gen::cycle(2), InvalidInput);
    CHECK_THROWS_AS(gen::path(0), InvalidInput);
    CHECK_THROWS_AS(gen::biclique(0, 3), InvalidInput);
}

TEST_CASE("theta graphs") {
    for (const auto &lengths : theta_length_vectors(12)) {
        auto g = gen::theta(lengths);
        std::size_t sum = 0, internal = 0;
        for (auto p : lengths) {
            sum += p;
            internal += p - 1;
        }
        CHECK(g.order() == 2 + internal);
        CHECK(g.edge_count() == sum);
        CHECK(g.degree(0) == lengths.size());
        CHECK(g.degree(1) == lengths.size());
        CHECK(is_connected(g));
    }
    std::vector<std::size_t> c5{1, 4};
    auto g = gen::theta(c5);
    CHECK(g.order() == 5);
    CHECK(min_degree(g) == 2);
    CHECK(g.edge_count() == 5);
    for (auto bad : {std::vector<std::size_t>{1, 1, 3}, std::vector<std::size_t>{3}, std::vector<std::size_t>{3, 2},
                     std::vector<std::size_t>{0, 2}})
        CHECK_THROWS_AS(gen::theta(bad), InvalidInput);
}

TEST_CASE("generalized complete graphs") {
    std::vector<std::size_t> ones{1, 1, 1, 1};
    CHECK(gen::generalized_complete(ones) == gen::star(4));
    std::vector<std::size_t> parts{3, 2};
    auto g = gen::generalized_complete(parts);
    CHECK(g.order() == 6);
    CHECK(g.degree(0) == 5);
    CHECK(g.edge_count() == 5 + 3 + 1);
    std::vector<std::size_t> empty;
    CHECK_THROWS_AS(gen::generalized_complete(empty), InvalidInput);
}

TEST_CASE("G_m structure") {
    for (std::size_t m = 1; m <= 5; ++m) {
        auto g = gen::g_m(m);
        gen::GmLabels l{m};
        CHECK(g.order() == 3 * m + 3);
        CHECK(g.degree(l.x(0)) == 1);
        CHECK(g.degree(l.x(m + 2)) == 1);
        for (std::size_t i = 1; i <= m; ++i) {
            CHECK(g.degree(l.y(i)) == 2);
            CHECK(g.degree(l.z(i)) == 2);
            CHECK(g.adjacent(l.y(i), l.x(i)));
            CHECK(g.adjacent(l.z(i), l.x(i + 1)));
        }
        CHECK(is_connected(g));
    }
    CHECK_THROWS_AS(gen::g_m(0), InvalidInput);
}

TEST_CASE("named graphs") {
    auto fig1 = gen::named("fig1");
    CHECK(fig1.order() == 12);
    CHECK(fig1.edge_count() == 15);
    auto fig2 = gen::named("fig2");
    CHECK(fig2.order() == 10);
    CHECK(fig2.edge_count() == 15);
    auto pet = gen::named("petersen");
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(girth(pet) == 5u);
    CHECK_THROWS_AS(gen::named("heawood"), InvalidInput);
}

TEST_CASE("random trees are deterministic trees") {
    CHECK(gen::random_tree(2, 99) == gen::path(2));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto t = gen::random_tree(2 + seed % 12, seed);
        CHECK(t.edge_count() == t.order() - 1);
        CHECK(is_connected(t));
        CHECK(t == gen::random_tree(2 + seed % 12, seed));
    }
    CHECK(gen::random_tree(8, 42).name() == "randomtree:8,42");
    CHECK_THROWS_AS(gen::random_tree(1, 0), InvalidInput);
}

TEST_CASE("spec grammar") {
    CHECK(parse_graph_spec("theta:2,2,4").graph().name() == "theta:2,2,4");
    auto p = parse_graph_spec("cp(theta:2,2,4,complete:3)");
    CHECK(p.graph().order() == 21);
    CHECK(p.factor_count() == 2);
    CHECK(p.graph().name() == "cp(theta:2,2,4,complete:3)");
    auto q = parse_graph_spec("cp(complete:2,cp(path:2,path:2),cycle:3)");
    CHECK(q.factor_count() == 4);
    CHECK(q.graph().order() == 24);
    CHECK(parse_graph_spec("cp(cp(cp(path:2,path:2),path:2),path:2)").graph().order() == 16);
    CHECK(parse_graph_spec("randomtree:7,3").graph() == gen::random_tree(7, 3));
    CHECK(parse_graph_spec("gencomplete:2,2").graph().order() == 5);

    for (const char *bad : {"", "cycle", "cycle:", "cycle:2", "path:3,4", "theta:2", "cp(path:2)",
                            "cp(path:2,path:2,path:2,path:2)", "cp(path:2,path:2", "cycle:5x", "foo:3",
                            "cp(cp(cp(cp(path:2,path:2),path:2),path:2),path:2)", "petersen:1",
                            "cycle:99999999999999999999999"})
        CHECK_THROWS_AS(parse_graph_spec(bad), InvalidInput);
}

TEST_CASE("corpus helpers") {
    auto vectors = theta_length_vectors(6);
    for (const auto &v : vectors) {
        CHECK(v.size() >= 2);
        CHECK(v[1] >= 2);
        CHECK(std::is_sorted(v.begin(), v.end()));
    }
    CHECK(generalized_complete_partitions(5).size() == 5);
    CHECK(generalized_complete_partitions(5, 2).size() == 4);
    auto a = random_corpus(5, 3, 8, 1);
    auto b = random_corpus(5, 3, 8, 1);
    CHECK(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(is_connected(a[i]));
    }
    for (const auto &g : named_corpus(12))
        CHECK_MESSAGE(is_connected(g), g.name());
}
