#include "mutvis/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mutvis/corpus.hpp"
#include "mutvis/generators.hpp"
#include "mutvis/graph_spec.hpp"
#include "mutvis/product.hpp"
#include "mutvis/visibility.hpp"

namespace mutvis {

std::string_view to_string(Status status) {
    switch (status) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped_cap:
        return "skipped-cap";
    }
    return "?";
}

std::string format_set(const VertexSet &s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s.members()) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

bool all_passed(const std::vector<VerificationRecord> &records) {
    return std::none_of(records.begin(), records.end(), [](const auto &r) { return r.status == Status::fail; });
}

namespace {

struct Observation {
    std::string text;
    bool ok;
};

class Recorder {
  public:
    explicit Recorder(std::string id) : id_(std::move(id)) {}

    template <class Body> void check(const std::string &instance, const std::string &expected, Body &&body) {
        try {
            Observation obs = body();
            records_.push_back({id_, instance, expected, obs.text, obs.ok ? Status::pass : Status::fail});
        } catch (const CapExceeded &e) {
            records_.push_back({id_, instance, expected, e.what(), Status::skipped_cap});
        }
    }

    std::vector<VerificationRecord> take() { return std::move(records_); }

  private:
    std::string id_;
    std::vector<VerificationRecord> records_;
};

std::size_t pick(std::size_t value, std::size_t fallback) { return value != 0 ? value : fallback; }

std::string str(std::size_t v) { return std::to_string(v); }

std::vector<Graph> parse_all(const std::vector<std::string> &specs) {
    std::vector<Graph> out;
    for (const auto &spec : specs)
        out.push_back(load_graph_source(spec).graph());
    return out;
}

std::vector<Graph> override_or(const VerifyOptions &o, std::vector<Graph> fallback) {
    return o.graphs.empty() ? fallback : parse_all(o.graphs);
}

std::vector<Graph> standard_corpus(const VerifyOptions &o, std::size_t max_n, std::size_t random_count,
                                   std::size_t random_max_n) {
    if (!o.graphs.empty())
        return parse_all(o.graphs);
    auto graphs = named_corpus(pick(o.max_n, max_n));
    for (auto &g : random_corpus(pick(o.count, random_count), 2, std::min(pick(o.max_n, max_n), random_max_n), o.seed))
        graphs.push_back(std::move(g));
    return graphs;
}

Graph theta_of(std::initializer_list<std::size_t> lengths) {
    std::vector<std::size_t> v(lengths);
    return gen::theta(v);
}

std::size_t mut_of(const Graph &g, const SolverLimits &limits) { return max_total_mv(g, limits).value; }

bool is_star(const Graph &g) {
    if (g.order() < 2)
        return false;
    std::size_t centers = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == g.order() - 1)
            ++centers;
        else if (g.degree(v) != 1)
            return false;
    }
    return g.order() == 2 || centers == 1;
}

// ---------------------------------------------------------------------------
// Preliminaries and bypass vertices

std::vector<VerificationRecord> downward_closure(const VerifyOptions &o) {
    Recorder rec("prop:subsets-are-ok");
    std::mt19937_64 rng(o.seed);
    constexpr std::size_t kSamples = 100;
    for (const auto &g : standard_corpus(o, 10, 10, 10)) {
        rec.check(g.name(), "all " + str(kSamples) + " random subsets of a mu_t-set are total mutual-visibility sets",
                  [&] {
                      auto d = all_pairs_distances(g);
                      auto witness = max_total_mv(g, o.limits).witness;
                      auto members = witness.members();
                      std::size_t good = 0;
                      for (std::size_t s = 0; s < kSamples; ++s) {
                          VertexSet y(g.order());
                          for (Vertex v : members)
                              if (rng() & 1u)
                                  y.insert(v);
                          good += is_total_mv_set(g, d, y) ? 1 : 0;
                      }
                      return Observation{"witness " + format_set(witness) + ": " + str(good) + "/" + str(kSamples),
                                         good == kSamples};
                  });
    }
    return rec.take();
}

std::vector<VerificationRecord> singleton_law(const VerifyOptions &o) {
    Recorder rec("lem:bypass-vertex-is-good");
    for (const auto &g : standard_corpus(o, 12, 30, 10)) {
        rec.check(g.name(), "{u} is a total mutual-visibility set iff u is a bypass vertex", [&] {
            auto d = all_pairs_distances(g);
            std::size_t agree = 0;
            for (Vertex u = 0; u < g.order(); ++u)
                agree += is_total_mv_set(g, d, VertexSet(g.order(), {u})) == is_bypass_vertex(g, u) ? 1 : 0;
            return Observation{"agree on " + str(agree) + "/" + str(g.order()) + " vertices", agree == g.order()};
        });
    }
    return rec.take();
}

std::vector<VerificationRecord> exclusion_law(const VerifyOptions &o) {
    Recorder rec("lem:non-bypass-in-not-in");
    for (const auto &g : standard_corpus(o, 9, 10, 9)) {
        rec.check(g.name(), "no total mutual-visibility set contains a non-bypass vertex", [&] {
            if (g.order() > o.limits.oracle_cap)
                throw CapExceeded("subset enumeration over " + str(g.order()) + " vertices exceeds the oracle cap",
                                  "--cap-oracle");
            auto d = all_pairs_distances(g);
            auto bp = bypass_set(g);
            std::size_t total = 0;
            std::size_t bad = 0;
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.order()); ++mask) {
                VertexSet x(g.order());
                for (Vertex v = 0; v < g.order(); ++v)
                    if ((mask >> v) & 1u)
                        x.insert(v);
                if (!is_total_mv_set(g, d, x))
                    continue;
                ++total;
                bad += x.is_subset_of(bp) ? 0 : 1;
            }
            return Observation{str(total) + " total mutual-visibility sets, " + str(bad) + " touch non-bypass vertices",
                               bad == 0};
        });
    }
    return rec.take();
}

std::vector<VerificationRecord> bp_upper_bound(const VerifyOptions &o) {
    Recorder rec("eq:bounded-by-bp");
    for (const auto &g : standard_corpus(o, 12, 30, 10)) {
        rec.check(g.name(), "mu_t <= bp", [&] {
            auto bp = bypass_set(g).size();
            auto mut = mut_of(g, o.limits);
            return Observation{"mut=" + str(mut) + " bp=" + str(bp), mut <= bp};
        });
    }
    return rec.take();
}

std::vector<VerificationRecord> bypass_examples(const VerifyOptions &o) {
    Recorder rec("ex:bypass-examples");
    std::size_t top = pick(o.max_n, 8);
    for (std::size_t n = 1; n <= top; ++n) {
        auto g = gen::complete(n);
        rec.check(g.name(), "bp=" + str(n), [&] {
            auto bp = bypass_set(g).size();
            return Observation{"bp=" + str(bp), bp == n};
        });
    }
    for (std::size_t n = 5; n <= top + 4; ++n) {
        auto g = gen::cycle(n);
        rec.check(g.name(), "bp=0", [&] {
            auto bp = bypass_set(g).size();
            return Observation{"bp=" + str(bp), bp == 0};
        });
    }
    for (std::size_t a = 2; a <= 5; ++a) {
        for (std::size_t b = a; b <= 5; ++b) {
            auto g = gen::biclique(a, b);
            std::string expected = "bp=" + str(a + b);
            if (a >= 3)
                expected += " mut=mu=" + str(a + b - 2);
            rec.check(g.name(), expected, [&] {
                auto bp = bypass_set(g).size();
                std::string text = "bp=" + str(bp);
                bool ok = bp == a + b;
                if (a >= 3) {
                    auto mut = mut_of(g, o.limits);
                    auto mu = max_mv(g, o.limits).value;
                    text += " mut=" + str(mut) + " mu=" + str(mu);
                    ok = ok && mut == a + b - 2 && mu == a + b - 2;
                }
                return Observation{text, ok};
            });
        }
    }
    return rec.take();
}

std::vector<VerificationRecord> sporadic_graphs(const VerifyOptions &o) {
    Recorder rec("ex:sporadic");
    auto fig1 = gen::named("fig1");
    rec.check("fig1", "BP={g6,g7} (ids {5,6}) mut=1", [&] {
        auto bp = bypass_set(fig1);
        auto mut = mut_of(fig1, o.limits);
        return Observation{"BP=" + format_set(bp) + " mut=" + str(mut),
                           bp == VertexSet(fig1.order(), {5, 6}) && mut == 1};
    });
    auto fig2 = gen::named("fig2");
    rec.check("fig2", "mut=0", [&] {
        auto mut = mut_of(fig2, o.limits);
        return Observation{"mut=" + str(mut) + " bp=" + str(bypass_set(fig2).size()), mut == 0};
    });
    auto petersen = gen::named("petersen");
    rec.check("petersen", "mut=0 girth=5 delta=3", [&] {
        auto mut = mut_of(petersen, o.limits);
        auto gi = girth(petersen).value_or(0);
        auto delta = min_degree(petersen);
        return Observation{"mut=" + str(mut) + " girth=" + str(gi) + " delta=" + str(delta),
                           mut == 0 && gi == 5 && delta == 3};
    });
    return rec.take();
}

std::vector<VerificationRecord> tree_values(const VerifyOptions &o) {
    Recorder rec("prop:for-trees");
    for (const auto &t : override_or(o, random_trees(pick(o.count, 20), 3, pick(o.max_n, 10), o.seed))) {
        rec.check(t.name(), "L is a mutual-visibility set and mu=mut=muit=|L|", [&] {
            auto leaves = leaf_set(t);
            auto l = leaves.size();
            auto mu = max_mv(t, o.limits).value;
            auto mut = mut_of(t, o.limits);
            auto muit = max_independent_total_mv(t, o.limits).value;
            bool ok = is_mv_set(t, leaves) && is_total_mv_set(t, leaves) && mu == l && mut == l && muit == l;
            return Observation{"|L|=" + str(l) + " mu=" + str(mu) + " mut=" + str(mut) + " muit=" + str(muit), ok};
        });
    }
    return rec.take();
}

std::vector<VerificationRecord> sandwich(const VerifyOptions &o) {
    Recorder rec("ineq:sandwich");
    for (const auto &g : standard_corpus(o, 10, 10, 10)) {
        rec.check(g.name(), "leaves <= muit <= min(mut, alpha)", [&] {
            auto l = leaf_set(g).size();
            auto muit = max_independent_total_mv(g, o.limits).value;
            auto mut = mut_of(g, o.limits);
            auto alpha = independence_number(g, o.limits.alpha_cap);
            return Observation{"leaves=" + str(l) + " muit=" + str(muit) + " mut=" + str(mut) + " alpha=" + str(alpha),
                               l <= muit && muit <= std::min(mut, alpha)};
        });
    }
    return rec.take();
}

// ---------------------------------------------------------------------------
// Graphs with mu_t = 0

std::vector<VerificationRecord> zero_characterization(const VerifyOptions &o) {
    Recorder rec("thm:main-characterization-for-0");
    for (const auto &g : standard_corpus(o, 12, 30, 10)) {
        rec.check(g.name(), "mut=0 iff bp=0 (oracle agrees where n <= oracle cap)", [&] {
            auto bp = bypass_set(g).size();
            auto mut = mut_of(g, o.limits);
            std::string text = "bp=" + str(bp) + " mut=" + str(mut);
            bool ok = (mut == 0) == (bp == 0) && mut_is_zero(g) == (bp == 0);
            if (g.order() <= o.limits.oracle_cap) {
                auto oracle = naive_oracle(g, InvariantKind::mut, o.limits).value;
                text += " oracle=" + str(oracle);
                ok = ok && oracle == mut;
            }
            return Observation{text, ok};
        });
    }
    return rec.take();
}

std::vector<VerificationRecord> girth_zero_law(const VerifyOptions &o) {
    Recorder rec("cor:girth");
    auto corpus = standard_corpus(o, 12, 30, 10);
    for (std::size_t n = 5; n <= 16; ++n)
        corpus.push_back(gen::cycle(n));
    for (const auto &g : corpus) {
        auto gi = girth(g);
        if (gi && *gi < 5)
            continue;
        rec.check(g.name(), "girth >= 5: mut=0 iff delta >= 2", [&] {
            bool zero = mut_is_zero(g);
            auto delta = min_degree(g);
            auto mut = mut_of(g, o.limits);
            return Observation{"girth=" + (gi ? str(*gi) : std::string("inf")) + " delta=" + str(delta) +
                                   " mut=" + str(mut),
                               zero == (delta >= 2) && zero == (mut == 0)};
        });
    }
    return rec.take();
}

std::vector<VerificationRecord> theta_zero_law(const VerifyOptions &o) {
    Recorder rec("cor:theta");
    for (const auto &lengths : theta_length_vectors(pick(o.max_n, 12))) {
        auto g = gen::theta(lengths);
        std::size_t p1 = lengths[0];
        std::size_t p2 = lengths[1];
        bool predicted = (p1 == 1 && p2 >= 4) || (p1 == 2 && p2 >= 3) || p1 >= 3;
        rec.check(g.name(), predicted ? "mut=0" : "mut>=1", [&] {
            bool zero = mut_is_zero(g);
            auto mut = mut_of(g, o.limits);
            std::string text = "mut=" + str(mut);
            bool ok = zero == predicted && (mut == 0) == predicted;
            if (g.order() <= o.limits.oracle_cap) {
                auto oracle = naive_oracle(g, InvariantKind::mut, o.limits).value;
                text += " oracle=" + str(oracle);
                ok = ok && oracle == mut;
            }
            return Observation{text, ok};
        });
    }
    return rec.take();
}

std::vector<VerificationRecord> product_zero_law(const VerifyOptions &o) {
    Recorder rec("thm:cp");
    auto factors = override_or(o, named_corpus(pick(o.max_n, 5)));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = i; j < factors.size(); ++j) {
            const auto &g = factors[i];
            const auto &h = factors[j];
            bool expected = mut_is_zero(g) || mut_is_zero(h);
            rec.check("cp(" + g.name() + "," + h.name() + ")", expected ? "mut=0" : "mut>=1", [&] {
                auto p = cartesian_product(g, h);
                bool zero = mut_is_zero(p.graph());
                std::string text = std::string("bp-zero=") + (zero ? "yes" : "no");
                bool ok = zero == expected;
                auto bp = bypass_set(p.graph()).size();
                if (bp <= o.limits.bp_cap) {
                    auto mut = mut_of(p.graph(), o.limits);
                    text += " mut=" + str(mut);
                    ok = ok && (mut == 0) == expected;
                }
                return Observation{text, ok};
            });
        }
    }
    return rec.take();
}

std::vector<VerificationRecord> k_factor_zero_law(const VerifyOptions &o) {
    Recorder rec("cor:cp");
    auto factors = override_or(o, {gen::path(2), gen::path(3), gen::complete(3), gen::cycle(4), gen::cycle(5),
                                   gen::cycle(6), gen::star(3)});
    for (std::size_t a = 0; a < factors.size(); ++a) {
        for (std::size_t b = a; b < factors.size(); ++b) {
            for (std::size_t c = b; c < factors.size(); ++c) {
                std::vector<Graph> triple{factors[a], factors[b], factors[c]};
                bool expected = std::any_of(triple.begin(), triple.end(), [](const Graph &f) { return mut_is_zero(f); });
                std::string name = "cp(" + triple[0].name() + "," + triple[1].name() + "," + triple[2].name() + ")";
                rec.check(name, expected ? "mut=0" : "mut>=1", [&] {
                    auto p = k_fold_product(triple);
                    bool zero = mut_is_zero(p.graph());
                    std::string text = std::string("bp-zero=") + (zero ? "yes" : "no");
                    bool ok = zero == expected;
                    if (p.graph().order() <= 40 && bypass_set(p.graph()).size() <= o.limits.bp_cap) {
                        auto mut = mut_of(p.graph(), o.limits);
                        text += " mut=" + str(mut);
                        ok = ok && (mut == 0) == expected;
                    }
                    return Observation{text, ok};
                });
            }
        }
    }
    return rec.take();
}

// ---------------------------------------------------------------------------
// Cartesian products

std::vector<VerificationRecord> product_bounds(const VerifyOptions &o) {
    Recorder rec("thm:cp-bounds");
    std::size_t wanted = pick(o.count, 20);
    std::size_t max_n = pick(o.max_n, 7);
    std::vector<std::pair<Graph, Graph>> pairs;
    if (!o.graphs.empty()) {
        auto gs = parse_all(o.graphs);
        for (std::size_t i = 0; i + 1 < gs.size(); i += 2)
            pairs.emplace_back(gs[i], gs[i + 1]);
    } else {
        // Draw graphs until `wanted` pairs with muit >= 1 on both sides and a product
        // whose bypass count fits the cap have been collected.
        std::mt19937_64 rng(o.seed);
        std::optional<Graph> pending;
        for (std::size_t attempt = 0; pairs.size() < wanted && attempt < 200 * wanted; ++attempt) {
            std::size_t n = 2 + static_cast<std::size_t>(rng() % (max_n - 1));
            auto g = random_connected_graph(n, rng() % 1000000);
            if (max_independent_total_mv(g, o.limits).value == 0)
                continue;
            if (!pending) {
                pending = std::move(g);
                continue;
            }
            if (bypass_set(*pending).size() * bypass_set(g).size() > o.limits.bp_cap)
                continue;
            pairs.emplace_back(std::move(*pending), std::move(g));
            pending.reset();
        }
    }
    for (const auto &[g, h] : pairs) {
        rec.check("cp(" + g.name() + "," + h.name() + ")",
                  "max(muit(H)mut(G), muit(G)mut(H)) <= mut(GxH) <= min(mut(G)n(H), mut(H)n(G))", [&] {
                      auto mut_g = mut_of(g, o.limits);
                      auto mut_h = mut_of(h, o.limits);
                      auto muit_g = max_independent_total_mv(g, o.limits).value;
                      auto muit_h = max_independent_total_mv(h, o.limits).value;
                      auto mut_p = mut_of(cartesian_product(g, h).graph(), o.limits);
                      auto lower = std::max(muit_h * mut_g, muit_g * mut_h);
                      auto upper = std::min(mut_g * h.order(), mut_h * g.order());
                      return Observation{str(lower) + " <= " + str(mut_p) + " <= " + str(upper),
                                         lower <= mut_p && mut_p <= upper};
                  });
    }
    return rec.take();
}

std::vector<VerificationRecord> both_factors_one(const VerifyOptions &o) {
    Recorder rec("prop:both-factors-mut-1");
    auto pool = override_or(o, named_corpus(pick(o.max_n, 6)));
    std::vector<std::pair<Graph, VertexSet>> big;
    std::vector<std::pair<Graph, VertexSet>> positive;
    for (const auto &g : pool) {
        try {
            auto r = max_total_mv(g, o.limits);
            if (r.value >= 2)
                big.emplace_back(g, r.witness);
            if (r.value >= 1 && g.order() <= 5)
                positive.emplace_back(g, r.witness);
        } catch (const CapExceeded &) {
        }
    }
    for (const auto &[g, xg] : big) {
        for (const auto &[h, xh] : positive) {
            rec.check("cp(" + g.name() + "," + h.name() + ")", "mut(G)>=2 and mut(H)>=1 give mut(GxH)>=2", [&] {
                auto p = cartesian_product(g, h);
                auto mg = xg.members();
                Vertex y = xh.members().front();
                VertexSet pair(p.graph().order(), {p.encode(std::vector<Vertex>{mg[0], y}),
                                                   p.encode(std::vector<Vertex>{mg[1], y})});
                bool ok = is_total_mv_set(p.graph(), pair);
                return Observation{"witness " + format_set(pair) + (ok ? " verified" : " blocked"), ok};
            });
        }
    }
    return rec.take();
}

std::vector<VerificationRecord> complete_by_complete(const VerifyOptions &o) {
    Recorder rec("prop:cp-complete-by-complete");
    std::size_t top = pick(o.max_n, 5);
    for (std::size_t n = 2; n <= top; ++n) {
        for (std::size_t m = 2; m <= top; ++m) {
            auto p = cartesian_product(gen::complete(n), gen::complete(m));
            rec.check(p.graph().name(), "mut=" + str(std::max(n, m)), [&] {
                auto mut = mut_of(p.graph(), o.limits);
                return Observation{"mut=" + str(mut), mut == std::max(n, m)};
            });
        }
    }
    return rec.take();
}

std::vector<VerificationRecord> cycle_by_complete(const VerifyOptions &o) {
    Recorder rec("prop:cp-cycle-by-complete");
    for (std::size_t s = 3; s <= pick(o.max_n, 7); ++s) {
        for (std::size_t n = 3; n <= 5; ++n) {
            auto p = cartesian_product(gen::cycle(s), gen::complete(n));
            std::size_t expected = s >= 5 ? 0 : n;
            rec.check(p.graph().name(), "mut=" + str(expected), [&] {
                if (s >= 5) {
                    auto bp = bypass_set(p.graph()).size();
                    return Observation{"bp=" + str(bp) + " so mut=0", bp == 0};
                }
                auto mut = mut_of(p.graph(), o.limits);
                return Observation{"mut=" + str(mut), mut == expected};
            });
        }
    }
    return rec.take();
}

std::vector<Graph> default_second_factors() {
    return {gen::complete(3), gen::complete(4), gen::cycle(3), gen::cycle(4), theta_of({2, 2, 4}), gen::biclique(3, 3)};
}

std::vector<VerificationRecord> tree_by_graph(const VerifyOptions &o) {
    Recorder rec("thm:cp-tree-by-graphs");
    auto trees = random_trees(pick(o.count, 20), 3, pick(o.max_n, 8), o.seed);
    auto others = override_or(o, default_second_factors());
    for (const auto &t : trees) {
        auto mut_t = mut_of(t, o.limits);
        for (const auto &h : others) {
            rec.check("cp(" + t.name() + "," + h.name() + ")", "mut(TxH) = mut(T)*mut(H)", [&] {
                auto mut_h = mut_of(h, o.limits);
                auto mut_p = mut_of(cartesian_product(t, h).graph(), o.limits);
                return Observation{"mut(TxH)=" + str(mut_p) + " mut(T)=" + str(mut_t) + " mut(H)=" + str(mut_h),
                                   mut_p == mut_t * mut_h};
            });
        }
    }
    return rec.take();
}

std::vector<VerificationRecord> tree_by_complete(const VerifyOptions &o) {
    Recorder rec("cor:tree-by-complete");
    for (const auto &t : random_trees(pick(o.count, 10), 3, pick(o.max_n, 8), o.seed)) {
        auto mut_t = mut_of(t, o.limits);
        for (std::size_t n = 2; n <= 5; ++n) {
            auto p = cartesian_product(t, gen::complete(n));
            rec.check(p.graph().name(), "mut=" + str(n * mut_t), [&] {
                auto mut = mut_of(p.graph(), o.limits);
                return Observation{"mut=" + str(mut), mut == n * mut_t};
            });
        }
    }
    return rec.take();
}

std::vector<Graph> nontrivial_generalized_complete(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 3; n <= max_n; ++n)
        for (const auto &parts : generalized_complete_partitions(n, 2))
            out.push_back(gen::generalized_complete(parts));
    return out;
}

std::vector<VerificationRecord> generalized_complete_value(const VerifyOptions &o) {
    Recorder rec("prop:generalized-complete");
    for (const auto &g : override_or(o, nontrivial_generalized_complete(pick(o.max_n, 10)))) {
        rec.check(g.name(), "mut=" + str(g.order() - 1), [&] {
            auto mut = mut_of(g, o.limits);
            return Observation{"mut=" + str(mut), mut == g.order() - 1};
        });
    }
    return rec.take();
}

std::vector<VerificationRecord> generalized_complete_products(const VerifyOptions &o) {
    Recorder rec("thm:cp-generalized-complete");
    auto graphs = override_or(o, nontrivial_generalized_complete(pick(o.max_n, 7)));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i; j < graphs.size(); ++j) {
            const auto &g = graphs[i];
            const auto &h = graphs[j];
            auto bound = (g.order() - 1) * (h.order() - 1);
            bool star = is_star(g) || is_star(h);
            rec.check("cp(" + g.name() + "," + h.name() + ")",
                      "mut <= " + str(bound) + (star ? " with equality" : " strictly"), [&] {
                          auto mut_p = mut_of(cartesian_product(g, h).graph(), o.limits);
                          return Observation{"mut=" + str(mut_p), star ? mut_p == bound : mut_p < bound};
                      });
        }
    }
    return rec.take();
}

std::vector<VerificationRecord> layers_convex(const VerifyOptions &o) {
    Recorder rec("fact:layers-convex");
    auto factors = override_or(o, named_corpus(pick(o.max_n, 5)));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = i; j < factors.size(); ++j) {
            auto p = cartesian_product(factors[i], factors[j]);
            rec.check(p.graph().name(), "every layer is convex", [&] {
                auto d = all_pairs_distances(p.graph());
                std::size_t layers = 0;
                std::size_t convex = 0;
                for (std::size_t free = 0; free < 2; ++free) {
                    for (Vertex c = 0; c < p.factor(1 - free).order(); ++c) {
                        std::vector<Vertex> fixed{c};
                        ++layers;
                        convex += is_convex(p.graph(), d, layer(p, free, fixed)) ? 1 : 0;
                    }
                }
                return Observation{str(convex) + "/" + str(layers) + " layers convex", convex == layers};
            });
        }
    }
    return rec.take();
}

// ---------------------------------------------------------------------------
// Over-visibility

// Greedy ascending extension of s by bypass vertices that keep the set independent.
std::vector<Vertex> independent_bypass_extension(const Graph &g, const VertexSet &s) {
    VertexSet all = s;
    std::vector<Vertex> extras;
    for (Vertex v : bypass_set(g).members()) {
        if (all.contains(v) || g.neighbor_set(v).intersects(all))
            continue;
        all.insert(v);
        extras.push_back(v);
    }
    return extras;
}

std::vector<VerificationRecord> over_visible(const VerifyOptions &o) {
    Recorder rec("the:over-visible");
    std::vector<std::string> specs = o.graphs;
    if (specs.empty())
        specs = {"theta:2,2,4", "theta:2,2,3", "theta:2,2,2,3", "gm:1", "gm:2", "gm:3", "gm:4", "gm:5"};
    for (const auto &spec : specs) {
        auto g = load_graph_source(spec).graph();
        rec.check("cp(" + g.name() + "," + g.name() + ")", "verified witness with more than mut(G)^2 vertices", [&] {
            auto s = max_total_mv(g, o.limits).witness;
            auto extras = independent_bypass_extension(g, s);
            if (!is_independent_set(g, s) || extras.empty())
                return Observation{"mu_t-set " + format_set(s) + " has no independent bypass extension", false};
            auto p = cartesian_product(g, g);
            auto u = over_visible_witness(p, s, extras, s, extras);
            auto product = s.size() * s.size();
            std::string text = "|U|=" + str(u.size()) + " verified; mut(G)^2=" + str(product);
            if (bypass_set(p.graph()).size() <= o.limits.bp_cap)
                text += "; exact mut(GxG)=" + str(mut_of(p.graph(), o.limits));
            return Observation{text, u.size() > product};
        });
    }
    return rec.take();
}

std::vector<VerificationRecord> theta_i_family(const VerifyOptions &o) {
    Recorder rec("ex:theta-i");
    for (std::size_t i = 2; i <= pick(o.max_n, 4); ++i) {
        for (std::size_t extra = 1; extra <= 2; ++extra) {
            for (std::size_t tail : {3, 4}) {
                std::vector<std::size_t> lengths(i, 2);
                lengths.insert(lengths.end(), extra, tail);
                auto g = gen::theta(lengths);
                rec.check(g.name(), "bp=" + str(i) + " independent, BP not TMV, mut=" + str(i - 1), [&] {
                    auto bp = bypass_set(g);
                    auto mut = mut_of(g, o.limits);
                    bool ok = bp.size() == i && is_independent_set(g, bp) && !is_total_mv_set(g, bp) && mut == i - 1;
                    return Observation{"BP=" + format_set(bp) + " mut=" + str(mut), ok};
                });
            }
        }
    }
    return rec.take();
}

std::vector<VerificationRecord> gm_family(const VerifyOptions &o) {
    Recorder rec("ex:gm");
    for (std::size_t m = 1; m <= pick(o.max_n, 4); ++m) {
        auto g = gen::g_m(m);
        gen::GmLabels l{m};
        rec.check(g.name(), "bp=" + str(2 * m + 2) + " independent, mut=" + str(m + 2) + " with {x0,x_{m+2},y1..ym}",
                  [&] {
                      VertexSet expected_bp(g.order(), {l.x(0), l.x(m + 2)});
                      VertexSet witness(g.order(), {l.x(0), l.x(m + 2)});
                      for (std::size_t i = 1; i <= m; ++i) {
                          expected_bp.insert(l.y(i));
                          expected_bp.insert(l.z(i));
                          witness.insert(l.y(i));
                      }
                      auto bp = bypass_set(g);
                      auto mut = mut_of(g, o.limits);
                      bool ok = bp == expected_bp && is_independent_set(g, bp) && mut == m + 2 &&
                                is_independent_set(g, witness) && is_total_mv_set(g, witness) &&
                                bp.size() - mut == m;
                      return Observation{"bp=" + str(bp.size()) + " mut=" + str(mut), ok};
                  });
    }
    return rec.take();
}

} // namespace

const std::vector<Suite> &verification_suites() {
    static const std::vector<Suite> suites{
        {"prop:subsets-are-ok", "subsets of total mutual-visibility sets stay total mutual-visibility sets",
         downward_closure},
        {"lem:bypass-vertex-is-good", "{u} is a total mutual-visibility set iff u is a bypass vertex", singleton_law},
        {"lem:non-bypass-in-not-in", "non-bypass vertices lie in no total mutual-visibility set", exclusion_law},
        {"eq:bounded-by-bp", "mu_t(G) <= bp(G)", bp_upper_bound},
        {"ex:bypass-examples", "bp(K_n)=n, bp(K_{n,m})=n+m, bp(C_n)=0, mu_t(K_{n,m})=n+m-2", bypass_examples},
        {"ex:sporadic", "fig1, fig2 and the Petersen graph", sporadic_graphs},
        {"prop:for-trees", "trees: leaves form a mu-set and mu = mu_t = mu_it = leaf count", tree_values},
        {"ineq:sandwich", "leaves <= mu_it <= min(mu_t, alpha)", sandwich},
        {"thm:main-characterization-for-0", "mu_t(G) = 0 iff bp(G) = 0", zero_characterization},
        {"cor:girth", "girth >= 5: mu_t(G) = 0 iff min degree >= 2", girth_zero_law},
        {"cor:theta", "theta graphs with mu_t = 0", theta_zero_law},
        {"thm:cp", "mu_t(G x H) = 0 iff a factor has mu_t = 0", product_zero_law},
        {"cor:cp", "three-factor products: mu_t = 0 iff some factor has mu_t = 0", k_factor_zero_law},
        {"fact:layers-convex", "layers of a Cartesian product are convex", layers_convex},
        {"thm:cp-bounds", "lower and upper bounds on mu_t(G x H)", product_bounds},
        {"prop:both-factors-mut-1", "mu_t(G) >= 2 and mu_t(H) >= 1 give mu_t(G x H) >= 2", both_factors_one},
        {"prop:cp-complete-by-complete", "mu_t(K_n x K_m) = max(n, m)", complete_by_complete},
        {"prop:cp-cycle-by-complete", "mu_t(C_s x K_n) = n for s <= 4, 0 for s >= 5", cycle_by_complete},
        {"thm:cp-tree-by-graphs", "mu_t(T x H) = mu_t(T) mu_t(H)", tree_by_graph},
        {"cor:tree-by-complete", "mu_t(T x K_n) = n mu_t(T)", tree_by_complete},
        {"prop:generalized-complete", "non-trivial generalized complete graphs have mu_t = n - 1",
         generalized_complete_value},
        {"thm:cp-generalized-complete", "mu_t(G x H) <= (n(G)-1)(n(H)-1), equality iff a factor is a star",
         generalized_complete_products},
        {"the:over-visible", "bypass over-visible factors: mu_t(G x H) > mu_t(G) mu_t(H)", over_visible},
        {"ex:theta-i", "Theta_i: bp = i and mu_t = i - 1", theta_i_family},
        {"ex:gm", "G_m: bp = 2m + 2 and mu_t = m + 2", gm_family},
    };
    return suites;
}

std::vector<VerificationRecord> run_suite(std::string_view id, const VerifyOptions &options) {
    for (const auto &suite : verification_suites())
        if (suite.id == id)
            return suite.run(options);
    throw InvalidInput("unknown theorem id '" + std::string(id) + "' (see 'mutvis info --suites')");
}

} // namespace mutvis
