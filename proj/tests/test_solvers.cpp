#include <doctest.h>

#include "mutvis/corpus.hpp"
#include "mutvis/generators.hpp"
#include "mutvis/graph_spec.hpp"
#include "mutvis/solvers.hpp"
#include "mutvis/visibility.hpp"
#include "support/oracle.hpp"

using namespace mutvis;

namespace {

std::size_t mut(const Graph &g) { return max_total_mv(g).value; }
Graph theta(std::initializer_list<std::size_t> p) {
    std::vector<std::size_t> v(p);
    return gen::theta(v);
}

} // namespace

TEST_CASE("total mutual-visibility numbers of named graphs") {
    for (std::size_t a = 3; a <= 5; ++a)
        for (std::size_t b = 3; b <= 5; ++b)
            CHECK(mut(gen::biclique(a, b)) == a + b - 2);
    CHECK(mut(gen::named("petersen")) == 0);
    CHECK(mut(gen::named("fig1")) == 1);
    CHECK(mut(gen::named("fig2")) == 0);
    CHECK(mut(gen::cycle(6)) == 0);
    CHECK(mut(gen::complete(2)) == 2);
    CHECK(mut(gen::complete(7)) == 7);

    auto t = theta({2, 2, 4});
    auto r = max_total_mv(t);
    CHECK(r.value == 1);
    CHECK(r.witness == VertexSet(t.order(), {2}));
    CHECK(is_total_mv_set(t, VertexSet(t.order(), {3})));
}

TEST_CASE("theta_i and G_m families") {
    CHECK(mut(theta({2, 2, 3})) == 1);
    CHECK(mut(theta({2, 2, 2, 4})) == 2);
    CHECK(mut(theta({2, 2, 2, 2, 3, 5})) == 3);
    for (std::size_t m = 1; m <= 4; ++m) {
        auto g = gen::g_m(m);
        auto r = max_total_mv(g);
        CHECK(r.value == m + 2);
        CHECK(bypass_set(g).size() == 2 * m + 2);
        gen::GmLabels l{m};
        VertexSet w(g.order(), {l.x(0), l.x(m + 2)});
        for (std::size_t i = 1; i <= m; ++i)
            w.insert(l.y(i));
        CHECK(r.witness == w);
        CHECK(is_independent_set(g, w));
        CHECK(max_independent_total_mv(g).value == m + 2);
    }
}

TEST_CASE("theta(2,2,2) is K_{2,3}") {
    auto g = theta({2, 2, 2});
    oracle::Checker ref(g);
    CHECK(bypass_set(g).size() == 5);
    CHECK(mut(g) == 3);
    CHECK(ref.mut() == 3);
}

TEST_CASE("generalized complete graphs") {
    std::vector<std::size_t> two_two{2, 2};
    CHECK(mut(gen::generalized_complete(two_two)) == 4);
    for (std::size_t n = 3; n <= 9; ++n)
        for (const auto &parts : generalized_complete_partitions(n, 2))
            CHECK(mut(gen::generalized_complete(parts)) == n - 1);
}

TEST_CASE("trees") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto t = gen::random_tree(3 + seed % 10, seed);
        auto l = leaf_set(t).size();
        CHECK(max_mv(t).value == l);
        CHECK(mut(t) == l);
        CHECK(max_independent_total_mv(t).value == l);
    }
    CHECK(max_mv(gen::cycle(4)).value == 3);
    CHECK(max_mv(gen::complete(5)).value == 5);
    CHECK(max_independent_total_mv(gen::complete(5)).value == 1);
}

TEST_CASE("pruned solvers agree with the enumeration oracles") {
    auto corpus = named_corpus(8);
    for (auto &g : random_corpus(40, 2, 8, 17))
        corpus.push_back(std::move(g));
    for (const auto &g : corpus) {
        oracle::Checker ref(g);
        auto mu = max_mv(g);
        auto mt = max_total_mv(g);
        auto mit = max_independent_total_mv(g);
        CHECK_MESSAGE(mu.value == static_cast<std::size_t>(ref.mu()), g.name());
        CHECK_MESSAGE(mt.value == static_cast<std::size_t>(ref.mut()), g.name());
        CHECK_MESSAGE(mit.value == static_cast<std::size_t>(ref.muit()), g.name());
        CHECK(ref.mutual(oracle::mask_of(mu.witness)));
        CHECK(ref.total(oracle::mask_of(mt.witness)));
        CHECK(ref.total(oracle::mask_of(mit.witness)));
        CHECK(ref.independent(oracle::mask_of(mit.witness)));
        CHECK(mt.value <= mu.value);
        CHECK(mt.value <= bypass_set(g).size());
        for (auto kind : {InvariantKind::mu, InvariantKind::mut, InvariantKind::muit}) {
            auto naive = naive_oracle(g, kind);
            auto pruned = compute_invariant(g, kind);
            CHECK(naive.value == pruned.value);
            CHECK(naive.witness == pruned.witness);
        }
    }
}

TEST_CASE("witness is independent of thread count") {
    for (const char *spec : {"cp(star:3,complete:4)", "gm:4", "cp(gencomplete:2,2,complete:3)", "biclique:5,5"}) {
        auto g = parse_graph_spec(spec).graph();
        SolverLimits one;
        SolverLimits many;
        many.threads = 4;
        auto a = max_total_mv(g, one);
        auto b = max_total_mv(g, many);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(max_mv(g.order() <= 20 ? g : gen::path(3), one).witness ==
              max_mv(g.order() <= 20 ? g : gen::path(3), many).witness);
    }
}

TEST_CASE("zero characterization and corollaries") {
    auto corpus = named_corpus(10);
    for (auto &g : random_corpus(40, 2, 10, 23))
        corpus.push_back(std::move(g));
    for (const auto &g : corpus) {
        bool zero = mut_is_zero(g);
        CHECK(zero == bypass_set(g).empty());
        CHECK(zero == (mut(g) == 0));
        auto gi = girth(g);
        if (!gi || *gi >= 5)
            CHECK(zero == (min_degree(g) >= 2));
    }
    for (const auto &lengths : theta_length_vectors(12)) {
        auto g = gen::theta(lengths);
        auto p1 = lengths[0], p2 = lengths[1];
        bool predicted = (p1 == 1 && p2 >= 4) || (p1 == 2 && p2 >= 3) || p1 >= 3;
        CHECK_MESSAGE(mut_is_zero(g) == predicted, g.name());
    }
    CHECK(oracle::Checker(theta({1, 3})).mut() == 2);
    CHECK(oracle::Checker(theta({1, 4})).mut() == 0);
    CHECK_FALSE(mut_is_zero(gen::complete(1)));
}

TEST_CASE("sandwich inequality") {
    for (const auto &g : named_corpus(8)) {
        if (g.order() < 3)
            continue;
        CHECK_MESSAGE(sandwich_check(g), g.name());
    }
    // The leaves of K2 are adjacent, so the leaf bound fails there.
    CHECK_FALSE(sandwich_check(gen::path(2)));
}

TEST_CASE("caps and conventions") {
    SolverLimits tight;
    tight.bp_cap = 3;
    CHECK_THROWS_WITH_AS(max_total_mv(gen::g_m(2), tight), doctest::Contains("--cap-bp"), CapExceeded);
    CHECK_THROWS_AS(max_mv(gen::path(21)), CapExceeded);
    CHECK_THROWS_AS(naive_oracle(gen::path(15), InvariantKind::mut), CapExceeded);
    CHECK_THROWS_AS(naive_oracle(gen::path(5), InvariantKind::bp), InvalidInput);
    CHECK_THROWS_AS(max_total_mv(build_graph(4, {{0, 1}, {2, 3}})), InvalidInput);

    auto k1 = max_total_mv(gen::complete(1));
    CHECK(k1.value == 1);
    CHECK_FALSE(k1.notes.empty());

    auto gi = compute_invariant(gen::path(4), InvariantKind::girth);
    CHECK(gi.infinite);
    CHECK(compute_invariant(gen::named("petersen"), InvariantKind::girth).value == 5);
    CHECK(compute_invariant(gen::named("petersen"), InvariantKind::alpha).value == 4);
    CHECK(parse_invariant("muit") == InvariantKind::muit);
    CHECK_THROWS_AS(parse_invariant("nu"), InvalidInput);
}
