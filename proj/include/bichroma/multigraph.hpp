#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bichroma/errors.hpp"

namespace bichroma {

using Vertex = int; // 1-based labels, contiguous 1..n

// Undirected edge with normalized endpoints (u <= v). u == v is a loop.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool is_loop() const { return u == v; }
    auto operator<=>(const Edge&) const = default;
};

// A point of interest for the link/degree operations: either a vertex or an
// edge of the graph it is applied against.
struct Focus {
    enum class Kind { vertex, edge };

    Kind kind = Kind::vertex;
    Vertex vertex = 0; // valid when kind == vertex
    Edge edge;         // valid when kind == edge

    static Focus at_vertex(Vertex v) {
        Focus f;
        f.kind = Kind::vertex;
        f.vertex = v;
        return f;
    }
    static Focus at_edge(Edge e) {
        Focus f;
        f.kind = Kind::edge;
        f.edge = e;
        return f;
    }
    static Focus at_edge(Vertex u, Vertex v) { return at_edge(Edge(u, v)); }
};

enum class KeyMode { labeled, canonical };

// Labeled undirected multigraph with loops and parallel edges. Vertices are
// the labels 1..n; the edge multiset is kept sorted, so two graphs compare
// equal exactly when they have the same order and the same edge multiset.
// All surgery operations return new values and relabel by order-preserving
// compaction, keeping labels contiguous.
class MultiGraph {
public:
    MultiGraph() = default; // the empty graph (n = 0)
    explicit MultiGraph(int n);
    MultiGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }

    bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }
    bool has_edge(Edge e) const;
    int multiplicity(Edge e) const;
    bool is_simple() const; // no loops, no parallel edges

    // Vertices carrying at least one loop, ascending.
    std::vector<Vertex> loop_vertices() const;
    // Same graph with parallel duplicates collapsed to a single copy.
    MultiGraph without_duplicate_edges() const;

    // Removes exactly one copy of e; vertex set unchanged.
    MultiGraph delete_edge(Edge e) const;

    // Contracts one copy of a non-loop edge: the endpoints merge, surviving
    // parallel copies between them become loops at the merged vertex. For a
    // loop the edge is simply removed and the vertex kept. Returns the graph
    // and the label of the vertex e contracted to.
    std::pair<MultiGraph, Vertex> contract_edge(Edge e) const;

    // Removes the given vertices and every edge touching them.
    MultiGraph delete_vertices(const std::vector<Vertex>& vs) const;

    // Closed neighborhood: {v} u N(v) for a vertex focus, link(u) u link(v)
    // for a non-loop edge focus. Result is sorted and duplicate-free.
    std::vector<Vertex> closed_neighborhood(const Focus& f) const;

    // Vertex focus: endpoint count with multiplicity, a loop contributes 2.
    // Edge focus {u,v}: deg(u) + deg(v) - 2; loops are not admissible.
    int degree(const Focus& f) const;

    // Connected components ordered by smallest original label, each with its
    // labels compacted to 1..size.
    std::vector<MultiGraph> components() const;

    // Deterministic byte string usable as a cache key. Labeled mode encodes
    // the order and sorted edge multiset; canonical mode minimizes the
    // labeled key over all vertex relabelings and is capped at
    // canonical_cap vertices (capacity_error beyond).
    std::string canonical_key(KeyMode mode, int canonical_cap = 10) const;

    bool operator==(const MultiGraph&) const = default;

private:
    int vertex_degree(Vertex v) const;
    std::vector<Vertex> vertex_closed_neighborhood(Vertex v) const;
    void require_edge(Edge e) const;

    int n_ = 0;
    std::vector<Edge> edges_; // sorted
};

// Graph family constructors.
struct FamilySpec {
    enum class Kind { path, cycle, sneaky };

    Kind kind = Kind::path;
    int n = 0;             // path/cycle: number of vertices (n >= 1)
    int r = 0, s = 0, t = 0; // sneaky: r,s >= 2, t >= 1

    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec sneaky(int r, int s, int t);
};

// path(n): vertices 1..n with edges {i,i+1}. cycle(n): path(n) closed up by
// {n,1}; cycle(1) is a single looped vertex, cycle(2) a doubled edge.
// sneaky(r,s,t): the path on r+s+t+1 vertices plus the chord {r, r+s+1}.
MultiGraph build_family(const FamilySpec& spec);

MultiGraph path_graph(int n);
MultiGraph cycle_graph(int n);
MultiGraph sneaky_graph(int r, int s, int t);

// Line-oriented ".mg" text format:
//   # comment
//   p <n> <m>
//   e <u> <v>     (m lines; u = v is a loop, repeated lines are parallels)
MultiGraph parse_graph(const std::string& text);
std::string serialize_graph(const MultiGraph& g);

} // namespace bichroma
