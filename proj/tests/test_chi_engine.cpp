#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "bichroma/chi_engine.hpp"
#include "bichroma/verify.hpp"

using namespace bichroma;

namespace {

std::vector<MultiGraph> mixed_corpus(unsigned seed, int count) {
    std::vector<MultiGraph> corpus = {path_graph(1), path_graph(4),  cycle_graph(1),
                                      cycle_graph(2), cycle_graph(5), sneaky_graph(2, 2, 1)};
    std::mt19937 rng(seed);
    for (int i = 0; i < count; ++i)
        corpus.push_back(random_multigraph(rng, 6, 8));
    return corpus;
}

// Weighted independent-set count: sum over independent, loop-free S of
// l^(n-|S|). Matches chi at x = 1.
mpz_class independence_sum(const MultiGraph& g, int l) {
    int n = g.vertex_count();
    mpz_class lz(l), total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const Edge& e : g.edges()) {
            if ((mask & (1u << (e.u - 1))) && (mask & (1u << (e.v - 1)))) {
                independent = false;
                break;
            }
        }
        if (!independent)
            continue;
        mpz_class w;
        mpz_pow_ui(w.get_mpz_t(), lz.get_mpz_t(),
                   static_cast<unsigned long>(n - std::popcount(mask)));
        total += w;
    }
    return total;
}

} // namespace

TEST_CASE("compute_chi base cases and families") {
    CHECK(compute_chi(MultiGraph()) == BiPoly(1));
    CHECK(compute_chi(path_graph(1)) == BiPoly::parse("x + y"));
    CHECK(compute_chi(cycle_graph(1)) == BiPoly::parse("y"));
    CHECK(compute_chi(path_graph(2)) == BiPoly::parse("x^2 + 2*x*y + y^2 - x"));
    CHECK(compute_chi(cycle_graph(2)) == BiPoly::parse("x^2 + 2*x*y + y^2 - x"));
    CHECK(compute_chi(cycle_graph(3)).eval(1, 1) == 4);
    CHECK(compute_chi(MultiGraph(3)) == BiPoly::xy_power(3));
}

TEST_CASE("count_bruteforce") {
    CHECK(count_bruteforce(path_graph(2), {2, 1}) == 7);
    CHECK(count_bruteforce(cycle_graph(1), {3, 2}) == 2);
    CHECK(count_bruteforce(cycle_graph(2), {1, 1}) == 3);
    CHECK(count_bruteforce(cycle_graph(3), {3, 0}) == 6);
    CHECK(count_bruteforce(MultiGraph(), {0, 0}) == 1);
    CHECK(count_bruteforce(path_graph(2), {0, 0}) == 0);

    CHECK_THROWS_AS(count_bruteforce(path_graph(9), {1, 1}), capacity_error);
    CHECK_THROWS_AS(count_bruteforce(path_graph(2), {4, 3}), capacity_error);
    BruteForceBudget raised{.max_vertices = 10, .max_colors = 8};
    CHECK(count_bruteforce(path_graph(9), {1, 1}, raised) == 89); // F_11
}

TEST_CASE("count_subset_expansion") {
    CHECK(count_subset_expansion(path_graph(2), {1, 1}) == 3);
    CHECK(count_subset_expansion(cycle_graph(1), {1, 1}) == 1);

    SUBCASE("l = 0 reduces to the classical coloring count") {
        std::mt19937 rng(211);
        for (int i = 0; i < 50; ++i) {
            MultiGraph g = random_multigraph(rng, 6, 8);
            for (int k = 0; k <= 3; ++k)
                CHECK(count_subset_expansion(g, {k, 0}) == count_bruteforce(g, {k, 0}));
        }
    }

    CHECK_THROWS_AS(count_subset_expansion(path_graph(13), {1, 1}), capacity_error);
    CHECK_THROWS_AS(count_subset_expansion(path_graph(2), {5, 1}), capacity_error);
}

TEST_CASE("oracle equivalence on a small corpus") {
    OracleCheckOptions opts;
    opts.exhaustive_max_vertices = 4;
    opts.random_samples = 120;
    OracleCheckReport rep = verify_oracle_equivalence(opts);
    CHECK(rep.pass);
    CHECK(rep.failed == 0);
    CHECK(rep.exhaustive_graphs == 1 + 1 + 2 + 8 + 64);
    CHECK(rep.random_graphs == 120);
}

TEST_CASE("configuration independence") {
    auto corpus = mixed_corpus(307, 25);
    std::vector<BiPoly> reference;
    reference.reserve(corpus.size());
    for (const MultiGraph& g : corpus)
        reference.push_back(compute_chi(g));

    for (KeyMode memo : {KeyMode::labeled, KeyMode::canonical}) {
        for (EdgeStrategy strategy :
             {EdgeStrategy::loops_first_then_max_degree_sum, EdgeStrategy::first_edge}) {
            for (bool dedup : {false, true}) {
                for (bool factor : {false, true}) {
                    EngineConfig cfg{memo, strategy, dedup, factor};
                    ChiEngine engine(cfg);
                    for (std::size_t i = 0; i < corpus.size(); ++i)
                        CHECK(engine.chi(corpus[i]) == reference[i]);
                }
            }
        }
    }
}

TEST_CASE("canonical memo keys collapse isomorphic relabelings") {
    MultiGraph zigzag(3, {Edge(1, 3), Edge(3, 2)});

    ChiEngine labeled{{.memo_mode = KeyMode::labeled}};
    labeled.chi(path_graph(3));
    std::size_t baseline = labeled.memo_size();
    labeled.chi(zigzag);
    CHECK(labeled.memo_size() > baseline); // distinct labeled keys

    ChiEngine canonical{{.memo_mode = KeyMode::canonical}};
    canonical.chi(path_graph(3));
    std::size_t canon_baseline = canonical.memo_size();
    canonical.chi(zigzag);
    CHECK(canonical.memo_size() == canon_baseline); // single isomorphism class
}

TEST_CASE("deletion-contraction is edge-choice independent") {
    auto corpus = mixed_corpus(311, 20);
    for (const MultiGraph& g : corpus) {
        if (g.edge_count() == 0 || g.edge_count() > 6)
            continue;
        BiPoly expected = compute_chi(g);
        ChiEngine engine;
        for (const Edge& e : g.edges()) {
            auto deleted = g.delete_edge(e);
            auto [contracted, v] = g.contract_edge(e);
            BiPoly via_e = engine.chi(deleted) - engine.chi(contracted) +
                           BiPoly::y() * engine.chi(contracted.delete_vertices({v}));
            CHECK(via_e == expected);
        }
    }
}

TEST_CASE("recursion depth stays within |V| + |E|") {
    auto corpus = mixed_corpus(313, 30);
    for (const MultiGraph& g : corpus) {
        for (EdgeStrategy strategy :
             {EdgeStrategy::loops_first_then_max_degree_sum, EdgeStrategy::first_edge}) {
            EngineConfig cfg;
            cfg.strategy = strategy;
            cfg.factor_loops = false;
            cfg.drop_parallel_duplicates = false;
            ChiEngine engine(cfg);
            engine.chi(g);
            CHECK(engine.peak_depth() <= g.vertex_count() + g.edge_count());
        }
    }
}

TEST_CASE("simplify") {
    Simplified c2 = simplify(cycle_graph(2));
    CHECK(c2.residual == path_graph(2));
    CHECK(c2.multiplier == BiPoly(1));

    Simplified c1 = simplify(cycle_graph(1));
    CHECK(c1.residual == MultiGraph());
    CHECK(c1.multiplier == BiPoly::y());

    Simplified p3 = simplify(path_graph(3));
    CHECK(p3.residual == path_graph(3));
    CHECK(p3.multiplier == BiPoly(1));

    SUBCASE("chi factors through the residual") {
        std::mt19937 rng(317);
        ChiEngine engine;
        for (int i = 0; i < 150; ++i) {
            MultiGraph g = random_multigraph(rng, 6, 8);
            Simplified s = simplify(g);
            CHECK(s.residual.is_simple());
            CHECK(engine.chi(g) == s.multiplier * engine.chi(s.residual));
        }
    }
}

TEST_CASE("chi_wildcard vertex and edge rules") {
    ChiEngine engine;

    SUBCASE("cycle(4), vertex rule") {
        MultiGraph c4 = cycle_graph(4);
        BiPoly a3 = engine.chi(path_graph(3)).eval_x(1);
        BiPoly a1 = engine.chi(path_graph(1)).eval_x(1);
        BiPoly expected = a3.scaled_y(1) + a1.scaled_y(2);
        for (Vertex v = 1; v <= 4; ++v)
            CHECK(chi_wildcard(engine, c4, Focus::at_vertex(v)) == expected);
        CHECK(expected.eval(1, 1) == 7); // L_4
    }

    SUBCASE("path(2), vertex rule at an end") {
        CHECK(chi_wildcard(engine, path_graph(2), Focus::at_vertex(1)) == BiPoly::parse("y^2 + 2*y"));
    }

    SUBCASE("sneaky(2,2,2), edge rule on the chord") {
        MultiGraph g = sneaky_graph(2, 2, 2);
        BiPoly got = chi_wildcard(engine, g, Focus::at_edge(2, 5));
        BiPoly a7 = engine.chi(path_graph(7)).eval_x(1);
        BiPoly a1 = engine.chi(path_graph(1)).eval_x(1);
        CHECK(got == a7 - a1.scaled_y(4));
        CHECK(got.eval(1, 1) == 32);
        CHECK(got == engine.chi(g).eval_x(1));
    }

    SUBCASE("non-simple input is reduced first") {
        MultiGraph g(3, {Edge(1, 2), Edge(2, 3), Edge(3, 3), Edge(1, 2)});
        BiPoly expected = engine.chi(g).eval_x(1);
        CHECK(chi_wildcard(engine, g, Focus::at_vertex(1)) == expected);
        CHECK(chi_wildcard(engine, g, Focus::at_edge(1, 2)) == expected);
        CHECK_THROWS_AS(chi_wildcard(engine, g, Focus::at_vertex(3)), input_error);
        CHECK_THROWS_AS(chi_wildcard(engine, g, Focus::at_edge(2, 3)), input_error);
        CHECK_THROWS_AS(chi_wildcard(engine, g, Focus::at_edge(3, 3)), unsupported_focus_error);
    }

    SUBCASE("unknown focus") {
        CHECK_THROWS_AS(chi_wildcard(engine, path_graph(2), Focus::at_vertex(5)), input_error);
        CHECK_THROWS_AS(chi_wildcard(engine, path_graph(2), Focus::at_edge(1, 3)), input_error);
    }
}

TEST_CASE("both wildcard rules agree with chi at x=1 on simple graphs") {
    ChiEngine engine;
    for (int n = 1; n <= 4; ++n) {
        for (const MultiGraph& g : all_simple_graphs(n)) {
            BiPoly expected = engine.chi(g).eval_x(1);
            for (Vertex v = 1; v <= n; ++v)
                CHECK(chi_wildcard(engine, g, Focus::at_vertex(v)) == expected);
            for (const Edge& e : g.edges())
                CHECK(chi_wildcard(engine, g, Focus::at_edge(e)) == expected);
        }
    }
}

TEST_CASE("specialization at y=0 is the chromatic polynomial") {
    const BiPoly X = BiPoly::x();
    CHECK(compute_chi(cycle_graph(3)).eval_y(0) == X * (X - BiPoly(1)) * (X - BiPoly(2)));

    BiPoly xm1 = X - BiPoly(1);
    CHECK(compute_chi(cycle_graph(4)).eval_y(0) == xm1 * xm1 * xm1 * xm1 + xm1);

    for (int n = 1; n <= 6; ++n) {
        BiPoly expected = X;
        for (int i = 1; i < n; ++i)
            expected *= xm1;
        CHECK(compute_chi(path_graph(n)).eval_y(0) == expected);
    }
}

TEST_CASE("specialization at x=1 is the weighted independence count") {
    auto corpus = mixed_corpus(331, 40);
    ChiEngine engine;
    for (const MultiGraph& g : corpus) {
        BiPoly chi = engine.chi(g);
        for (int l = 0; l <= 3; ++l)
            CHECK(chi.eval(1, l) == independence_sum(g, l));
    }
}
