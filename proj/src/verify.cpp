#include "bichroma/verify.hpp"

#include <algorithm>

#include "bichroma/sequences.hpp"

namespace bichroma {

std::vector<MultiGraph> all_simple_graphs(int n) {
    if (n < 0)
        throw input_error("all_simple_graphs needs n >= 0");
    if (n > 6)
        throw capacity_error("all_simple_graphs capped at 6 vertices (2^21 graphs), got " +
                             std::to_string(n));
    std::vector<Edge> slots;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            slots.emplace_back(u, v);
    std::vector<MultiGraph> out;
    out.reserve(1ull << slots.size());
    for (unsigned long long mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1ull << i))
                es.push_back(slots[i]);
        out.emplace_back(n, std::move(es));
    }
    return out;
}

MultiGraph random_multigraph(std::mt19937& rng, int max_vertices, int max_edges) {
    if (max_vertices < 1 || max_edges < 0)
        throw input_error("random_multigraph needs max_vertices >= 1 and max_edges >= 0");
    // Plain modulo keeps the stream identical across standard libraries.
    int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices));
    int m = static_cast<int>(rng() % static_cast<unsigned>(max_edges + 1));
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Vertex u = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        Vertex v = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        es.emplace_back(u, v);
    }
    return MultiGraph(n, std::move(es));
}

namespace {

struct OracleRun {
    const OracleCheckOptions& opts;
    OracleCheckReport report;
    ChiEngine engine;
    BruteForceBudget brute_budget;
    SubsetExpansionBudget subset_budget;

    explicit OracleRun(const OracleCheckOptions& o) : opts(o) {
        brute_budget.max_vertices = std::max(8, std::max(o.exhaustive_max_vertices, o.random_max_vertices));
        brute_budget.max_colors = std::max(6, 2 * o.kl_max);
        subset_budget.max_k = std::max(4, o.kl_max);
        subset_budget.max_vertices = std::max(12, std::max(o.exhaustive_max_vertices, o.random_max_vertices));
    }

    // Returns the number of comparisons done for this graph.
    long long check_graph(const MultiGraph& g) {
        BiPoly poly = engine.chi(g);
        long long checks = 0;
        for (int k = 0; k <= opts.kl_max; ++k) {
            for (int l = 0; l <= opts.kl_max; ++l) {
                if (k + l < 1)
                    continue;
                mpz_class symbolic = poly.eval(k, l);
                mpz_class brute = count_bruteforce(g, {k, l}, brute_budget);
                mpz_class subset = count_subset_expansion(g, {k, l}, subset_budget);
                checks += 2;
                if (symbolic != brute || symbolic != subset) {
                    ++report.failed;
                    report.pass = false;
                    if (report.first_failure.empty()) {
                        report.first_failure = "graph " + g.canonical_key(KeyMode::labeled) + " at (k=" +
                                               std::to_string(k) + ",l=" + std::to_string(l) +
                                               "): symbolic=" + symbolic.get_str() + " brute=" +
                                               brute.get_str() + " subset=" + subset.get_str();
                    }
                }
            }
        }
        return checks;
    }
};

} // namespace

OracleCheckReport verify_oracle_equivalence(const OracleCheckOptions& opts) {
    OracleRun run(opts);
    for (int n = 0; n <= opts.exhaustive_max_vertices; ++n) {
        for (const MultiGraph& g : all_simple_graphs(n)) {
            run.report.exhaustive_checks += run.check_graph(g);
            ++run.report.exhaustive_graphs;
        }
    }
    std::mt19937 rng(opts.seed);
    for (int i = 0; i < opts.random_samples; ++i) {
        MultiGraph g = random_multigraph(rng, opts.random_max_vertices, opts.random_max_edges);
        run.report.random_checks += run.check_graph(g);
        ++run.report.random_graphs;
    }
    return run.report;
}

SneakyCheckReport verify_sneaky(int r, int s, int t, int l) {
    if (l < 0)
        throw input_error("verify_sneaky needs l >= 0");
    MultiGraph g = sneaky_graph(r, s, t);
    const int n = g.vertex_count();

    SneakyCheckReport report;
    report.r = r;
    report.s = s;
    report.t = t;
    report.l = l;

    BruteForceBudget budget;
    budget.max_vertices = std::max(budget.max_vertices, n);
    budget.max_colors = std::max(budget.max_colors, 1 + l);
    report.brute = count_bruteforce(g, {1, l}, budget);

    ChiEngine engine;
    Vertex hinge = r + s + 1;
    report.vertex_value = chi_wildcard(engine, g, Focus::at_vertex(hinge)).eval(1, l);
    report.edge_value = chi_wildcard(engine, g, Focus::at_edge(r, hinge)).eval(1, l);

    auto a = a_seq({1, l}, n);
    auto at = [&](int i) { return a[static_cast<std::size_t>(i)]; };
    mpz_class lz(l);
    mpz_class l3 = lz * lz * lz;
    mpz_class l4 = l3 * lz;
    report.closed_lhs = lz * at(r + s) * at(t) + l3 * at(r - 1) * at(s - 1) * at(t - 1);
    report.closed_rhs = at(r + s + t + 1) - l4 * at(r - 2) * at(s - 2) * at(t - 1);

    report.pass = report.brute == report.vertex_value && report.brute == report.edge_value &&
                  report.brute == report.closed_lhs && report.brute == report.closed_rhs;
    return report;
}

} // namespace bichroma
