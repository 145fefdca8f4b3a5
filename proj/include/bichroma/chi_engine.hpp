#pragma once

#include <unordered_map>

#include "bichroma/bipoly.hpp"
#include "bichroma/multigraph.hpp"

namespace bichroma {

// The pair (k, l): k proper colors that clash along edges, l wildcard colors
// that never clash. chi_G evaluated at (k, l) counts the proper colorings.
struct ColoringParams {
    int k = 0;
    int l = 0;
};

enum class EdgeStrategy {
    loops_first_then_max_degree_sum, // loops, then parallels, then max deg(u)+deg(v)
    first_edge,
};

struct EngineConfig {
    KeyMode memo_mode = KeyMode::labeled;
    EdgeStrategy strategy = EdgeStrategy::loops_first_then_max_degree_sum;
    bool drop_parallel_duplicates = true;
    bool factor_loops = true;
    int canonical_cap = 10; // beyond this the memo falls back to labeled keys
};

// Memoized deletion-contraction evaluator for chi_G(x,y):
//
//   chi_G = chi_{G\e} - chi_{G/e} + y * chi_{(G/e)\v}
//
// with the edgeless base case chi = (x+y)^n and multiplicativity across
// components. Every configuration computes the same polynomial; the knobs
// only trade recursion shape against memo hit rate.
//
// The memo table is not synchronized: use one engine per thread or guard
// chi() externally. Everything else in this module is pure values.
class ChiEngine {
public:
    explicit ChiEngine(EngineConfig cfg = {}) : cfg_(cfg) {}

    BiPoly chi(const MultiGraph& g);

    const EngineConfig& config() const { return cfg_; }
    std::size_t memo_size() const { return memo_.size(); }
    // Deepest recursion level reached so far (top-level call = depth 0).
    int peak_depth() const { return peak_depth_; }

private:
    BiPoly chi_impl(const MultiGraph& g, int depth);
    std::string memo_key(const MultiGraph& g) const;
    Edge pick_edge(const MultiGraph& g) const;

    EngineConfig cfg_;
    std::unordered_map<std::string, BiPoly> memo_;
    int peak_depth_ = 0;
};

// Convenience wrapper: one-shot computation with a fresh engine.
BiPoly compute_chi(const MultiGraph& g, EngineConfig cfg = {});

struct BruteForceBudget {
    int max_vertices = 8;
    int max_colors = 6; // bound on k + l
};

// Exhaustive enumeration of all (k+l)^n colorings, counting the proper ones.
// The primary independent oracle for chi.
mpz_class count_bruteforce(const MultiGraph& g, ColoringParams p, BruteForceBudget budget = {});

struct SubsetExpansionBudget {
    int max_k = 4;
    int max_vertices = 12;
};

// Second independent oracle: sum over wildcard sets W of l^|W| times the
// number of proper k-colorings (no wildcards) of the graph induced on V\W.
mpz_class count_subset_expansion(const MultiGraph& g, ColoringParams p, SubsetExpansionBudget budget = {});

// Chi-preserving reduction: drops parallel duplicates and removes each
// looped vertex v with the factor chi_G = y * chi_{G\v}. The residual is
// simple and chi(G) = multiplier * chi(residual).
struct Simplified {
    MultiGraph residual;
    BiPoly multiplier;
    // 1-based old label -> residual label, 0 if the vertex was removed.
    std::vector<Vertex> vertex_map;
};

Simplified simplify(const MultiGraph& g);

// chi_G(1,y) from a single application of the vertex or edge rule
//
//   chi_G(1,y) = y * chi_{G\v}(1,y) + y^deg(v) * chi_{G\link(v)}(1,y)
//   chi_G(1,y) = chi_{G\e}(1,y) - y^d * chi_{G\link(e)}(1,y)
//
// selected by the focus kind, where d = |link(e)| - 2 is the number of
// vertices an all-proper edge forces onto wildcards (deg(u)+deg(v)-2 when
// the endpoints share no neighbor). The graph is reduced to its simple
// residual first; sub-values come from the engine restricted to x = 1.
// The result has no x terms.
BiPoly chi_wildcard(ChiEngine& engine, const MultiGraph& g, const Focus& f);

} // namespace bichroma
