#include "bichroma/chi_engine.hpp"

#include <algorithm>
#include <cmath>

namespace bichroma {

std::string ChiEngine::memo_key(const MultiGraph& g) const {
    if (cfg_.memo_mode == KeyMode::canonical && g.vertex_count() <= cfg_.canonical_cap)
        return "c" + g.canonical_key(KeyMode::canonical, cfg_.canonical_cap);
    return "l" + g.canonical_key(KeyMode::labeled);
}

Edge ChiEngine::pick_edge(const MultiGraph& g) const {
    auto es = g.edges();
    if (cfg_.strategy == EdgeStrategy::first_edge)
        return es[0];

    for (const Edge& e : es)
        if (e.is_loop())
            return e;
    for (std::size_t i = 1; i < es.size(); ++i)
        if (es[i] == es[i - 1])
            return es[i];

    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (const Edge& e : es) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    Edge best = es[0];
    int best_sum = deg[static_cast<std::size_t>(best.u)] + deg[static_cast<std::size_t>(best.v)];
    for (const Edge& e : es) {
        int sum = deg[static_cast<std::size_t>(e.u)] + deg[static_cast<std::size_t>(e.v)];
        if (sum > best_sum) {
            best = e;
            best_sum = sum;
        }
    }
    return best;
}

BiPoly ChiEngine::chi(const MultiGraph& g) { return chi_impl(g, 0); }

BiPoly ChiEngine::chi_impl(const MultiGraph& g, int depth) {
    peak_depth_ = std::max(peak_depth_, depth);
    std::string key = memo_key(g);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    BiPoly result;
    if (g.edge_count() == 0) {
        result = BiPoly::xy_power(g.vertex_count());
    } else if (std::vector<Vertex> looped;
               cfg_.factor_loops && !(looped = g.loop_vertices()).empty()) {
        // A looped vertex is forced onto a wildcard and then constrains nothing.
        result = BiPoly::monomial(0, static_cast<int>(looped.size())) *
                 chi_impl(g.delete_vertices(looped), depth + 1);
    } else if (MultiGraph dedup;
               cfg_.drop_parallel_duplicates &&
               (dedup = g.without_duplicate_edges()).edge_count() != g.edge_count()) {
        result = chi_impl(dedup, depth + 1);
    } else if (auto comps = g.components(); comps.size() >= 2) {
        result = BiPoly(1);
        for (const MultiGraph& c : comps)
            result *= chi_impl(c, depth + 1);
    } else {
        Edge e = pick_edge(g);
        MultiGraph deleted = g.delete_edge(e);
        auto [contracted, v] = g.contract_edge(e);
        MultiGraph contracted_minus_v = contracted.delete_vertices({v});
        result = chi_impl(deleted, depth + 1) - chi_impl(contracted, depth + 1) +
                 BiPoly::y() * chi_impl(contracted_minus_v, depth + 1);
    }

    memo_.emplace(std::move(key), result);
    return result;
}

BiPoly compute_chi(const MultiGraph& g, EngineConfig cfg) {
    ChiEngine engine(cfg);
    return engine.chi(g);
}

namespace {

// Earlier-neighbor lists drive the backtracking enumeration: when vertex i
// receives a color we only check edges whose other endpoint is already set.
struct BacktrackPrep {
    std::vector<std::vector<int>> earlier; // 0-based
    std::vector<char> has_loop;
};

BacktrackPrep prepare(const MultiGraph& g, const std::vector<int>& keep_index) {
    int m = 0;
    for (int idx : keep_index)
        m = std::max(m, idx + 1);
    BacktrackPrep prep;
    prep.earlier.resize(static_cast<std::size_t>(m));
    prep.has_loop.assign(static_cast<std::size_t>(m), 0);
    for (const Edge& e : g.edges()) {
        int a = keep_index[static_cast<std::size_t>(e.u - 1)];
        int b = keep_index[static_cast<std::size_t>(e.v - 1)];
        if (a < 0 || b < 0)
            continue;
        if (a == b) {
            prep.has_loop[static_cast<std::size_t>(a)] = 1;
        } else {
            prep.earlier[static_cast<std::size_t>(std::max(a, b))].push_back(std::min(a, b));
        }
    }
    return prep;
}

// Counts colorings of the kept vertices with k clashing colors and l free
// ones. Leaf counts stay below 2^62 for every admissible budget.
unsigned long long count_colorings(const BacktrackPrep& prep, int k, int l) {
    int m = static_cast<int>(prep.earlier.size());
    std::vector<int> color(static_cast<std::size_t>(m), -1);
    unsigned long long total = 0;

    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            ++total;
            return;
        }
        for (int c = 0; c < k + l; ++c) {
            if (c < k) {
                if (prep.has_loop[static_cast<std::size_t>(i)])
                    continue;
                bool clash = false;
                for (int j : prep.earlier[static_cast<std::size_t>(i)]) {
                    if (color[static_cast<std::size_t>(j)] == c) {
                        clash = true;
                        break;
                    }
                }
                if (clash)
                    continue;
            }
            color[static_cast<std::size_t>(i)] = c;
            self(self, i + 1);
        }
        color[static_cast<std::size_t>(i)] = -1;
    };
    rec(rec, 0);
    return total;
}

} // namespace

mpz_class count_bruteforce(const MultiGraph& g, ColoringParams p, BruteForceBudget budget) {
    if (p.k < 0 || p.l < 0)
        throw input_error("coloring params must be nonnegative");
    int n = g.vertex_count();
    if (n > budget.max_vertices)
        throw capacity_error("brute-force oracle limited to " + std::to_string(budget.max_vertices) +
                             " vertices, graph has " + std::to_string(n));
    if (p.k + p.l > budget.max_colors)
        throw capacity_error("brute-force oracle limited to k+l <= " + std::to_string(budget.max_colors) +
                             ", got " + std::to_string(p.k + p.l));
    // Guard the unsigned accumulator: (k+l)^n must stay below 2^62.
    double bits = n * std::log2(std::max(2, p.k + p.l));
    if (bits > 62)
        throw capacity_error("brute-force state space exceeds 2^62 assignments");

    std::vector<int> keep_index(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        keep_index[static_cast<std::size_t>(i)] = i;
    return mpz_class(static_cast<unsigned long>(count_colorings(prepare(g, keep_index), p.k, p.l)));
}

mpz_class count_subset_expansion(const MultiGraph& g, ColoringParams p, SubsetExpansionBudget budget) {
    if (p.k < 0 || p.l < 0)
        throw input_error("coloring params must be nonnegative");
    int n = g.vertex_count();
    if (n > budget.max_vertices)
        throw capacity_error("subset-expansion oracle limited to " + std::to_string(budget.max_vertices) +
                             " vertices, graph has " + std::to_string(n));
    if (p.k > budget.max_k)
        throw capacity_error("subset-expansion oracle limited to k <= " + std::to_string(budget.max_k) +
                             ", got " + std::to_string(p.k));
    if (n > 30)
        throw capacity_error("subset-expansion enumeration capped at 30 vertices");

    mpz_class l(p.l);
    mpz_class total = 0;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> keep_index(static_cast<std::size_t>(n), -1);
        int kept = 0;
        for (int i = 0; i < n; ++i)
            if (!(mask & (1ull << i)))
                keep_index[static_cast<std::size_t>(i)] = kept++;
        unsigned long long proper = count_colorings(prepare(g, keep_index), p.k, 0);
        if (proper == 0)
            continue;
        mpz_class weight;
        mpz_pow_ui(weight.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(n - kept));
        total += weight * mpz_class(static_cast<unsigned long>(proper));
    }
    return total;
}

Simplified simplify(const MultiGraph& g) {
    std::vector<Vertex> looped = g.loop_vertices();
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (Vertex v : looped)
        removed[static_cast<std::size_t>(v)] = 1;

    Simplified out;
    out.residual = g.delete_vertices(looped).without_duplicate_edges();
    out.multiplier = BiPoly::monomial(0, static_cast<int>(looped.size()));
    out.vertex_map.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    int next = 0;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (!removed[static_cast<std::size_t>(v)])
            out.vertex_map[static_cast<std::size_t>(v)] = ++next;
    return out;
}

BiPoly chi_wildcard(ChiEngine& engine, const MultiGraph& g, const Focus& f) {
    // Validate the focus against the original graph first.
    if (f.kind == Focus::Kind::vertex) {
        if (!g.has_vertex(f.vertex))
            throw input_error("unknown vertex " + std::to_string(f.vertex));
    } else {
        if (!g.has_edge(f.edge))
            throw input_error("edge focus not present in graph");
        if (f.edge.is_loop())
            throw unsupported_focus_error("loop not admissible as edge focus");
    }

    Simplified simp = simplify(g);
    const MultiGraph& r = simp.residual;

    Focus rf = f;
    if (f.kind == Focus::Kind::vertex) {
        rf.vertex = simp.vertex_map[static_cast<std::size_t>(f.vertex)];
        if (rf.vertex == 0)
            throw input_error("vertex focus removed by loop simplification");
    } else {
        Vertex a = simp.vertex_map[static_cast<std::size_t>(f.edge.u)];
        Vertex b = simp.vertex_map[static_cast<std::size_t>(f.edge.v)];
        if (a == 0 || b == 0)
            throw input_error("edge focus removed by loop simplification");
        rf.edge = Edge(a, b);
    }

    auto chi_at_x1 = [&](const MultiGraph& h) { return engine.chi(h).eval_x(1); };

    BiPoly value;
    if (rf.kind == Focus::Kind::vertex) {
        int d = r.degree(rf);
        BiPoly minus_v = chi_at_x1(r.delete_vertices({rf.vertex}));
        BiPoly minus_link = chi_at_x1(r.delete_vertices(r.closed_neighborhood(rf)));
        value = minus_v.scaled_y(1) + minus_link.scaled_y(d);
    } else {
        // The exponent counts the distinct vertices forced onto wildcards
        // when both endpoints take the proper color. It equals
        // deg(u)+deg(v)-2 only when the endpoints share no neighbor.
        auto link = r.closed_neighborhood(rf);
        int d = static_cast<int>(link.size()) - 2;
        BiPoly minus_e = chi_at_x1(r.delete_edge(rf.edge));
        BiPoly minus_link = chi_at_x1(r.delete_vertices(link));
        value = minus_e - minus_link.scaled_y(d);
    }
    return simp.multiplier * value;
}

} // namespace bichroma
