#pragma once

#include <random>
#include <string>
#include <vector>

#include "bichroma/chi_engine.hpp"
#include "bichroma/multigraph.hpp"

namespace bichroma {

// Every simple graph on exactly n labeled vertices (one per edge subset).
std::vector<MultiGraph> all_simple_graphs(int n);

// Uniform-ish random multigraph: order in 1..max_vertices, up to max_edges
// edges with endpoints drawn independently, so loops and parallels occur.
MultiGraph random_multigraph(std::mt19937& rng, int max_vertices, int max_edges);

struct OracleCheckOptions {
    int exhaustive_max_vertices = 4;
    int random_samples = 200;
    int random_max_vertices = 6;
    int random_max_edges = 8;
    int kl_max = 3;
    unsigned seed = 20240601;
};

struct OracleCheckReport {
    bool pass = true;
    long long exhaustive_graphs = 0;
    long long exhaustive_checks = 0;
    long long random_graphs = 0;
    long long random_checks = 0;
    long long failed = 0;
    std::string first_failure;
};

// Cross-checks the symbolic chi against both counting oracles on the
// exhaustive simple corpus and a seeded random multigraph corpus, for every
// (k,l) in [0,kl_max]^2 with k+l >= 1.
OracleCheckReport verify_oracle_equivalence(const OracleCheckOptions& opts = {});

struct SneakyCheckReport {
    int r = 0, s = 0, t = 0, l = 0;
    bool pass = true;
    mpz_class brute;        // exhaustive count of (1,l)-colorings
    mpz_class vertex_value; // vertex rule at r+s+1, evaluated at y=l
    mpz_class edge_value;   // edge rule at {r, r+s+1}, evaluated at y=l
    mpz_class closed_lhs;   // l a_{r+s} a_t + l^3 a_{r-1} a_{s-1} a_{t-1}
    mpz_class closed_rhs;   // a_{r+s+t+1} - l^4 a_{r-2} a_{s-2} a_{t-1}
};

// The chord graph on r+s+t+1 vertices admits two one-step decompositions;
// both must agree with exhaustive counting and with the closed sequence
// expressions they expand to.
SneakyCheckReport verify_sneaky(int r, int s, int t, int l);

} // namespace bichroma
