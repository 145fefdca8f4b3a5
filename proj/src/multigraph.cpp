#include "bichroma/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bichroma {

namespace {

std::string describe(Edge e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

} // namespace

MultiGraph::MultiGraph(int n) : n_(n) {
    if (n < 0)
        throw input_error("vertex count must be nonnegative, got " + std::to_string(n));
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0)
        throw input_error("vertex count must be nonnegative, got " + std::to_string(n));
    for (const Edge& e : edges_) {
        if (e.u < 1 || e.v > n_)
            throw input_error("edge " + describe(e) + " out of range 1.." + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
}

bool MultiGraph::has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int MultiGraph::multiplicity(Edge e) const {
    auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
    return static_cast<int>(hi - lo);
}

bool MultiGraph::is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].is_loop())
            return false;
        if (i > 0 && edges_[i] == edges_[i - 1])
            return false;
    }
    return true;
}

std::vector<Vertex> MultiGraph::loop_vertices() const {
    std::vector<Vertex> out;
    for (const Edge& e : edges_)
        if (e.is_loop() && (out.empty() || out.back() != e.u))
            out.push_back(e.u);
    return out;
}

MultiGraph MultiGraph::without_duplicate_edges() const {
    std::vector<Edge> uniq = edges_;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    MultiGraph g;
    g.n_ = n_;
    g.edges_ = std::move(uniq);
    return g;
}

void MultiGraph::require_edge(Edge e) const {
    if (!has_edge(e))
        throw input_error("edge " + describe(e) + " not present in graph");
}

MultiGraph MultiGraph::delete_edge(Edge e) const {
    require_edge(e);
    MultiGraph g = *this;
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), e);
    g.edges_.erase(it);
    return g;
}

std::pair<MultiGraph, Vertex> MultiGraph::contract_edge(Edge e) const {
    require_edge(e);
    if (e.is_loop())
        return {delete_edge(e), e.u};

    // Merge v into u (u < v), drop the contracted copy, shift labels > v down.
    const Vertex u = e.u, v = e.v;
    std::vector<Edge> out;
    out.reserve(edges_.size() - 1);
    bool skipped = false;
    for (const Edge& f : edges_) {
        if (!skipped && f == e) {
            skipped = true;
            continue;
        }
        auto remap = [&](Vertex w) { return w == v ? u : (w > v ? w - 1 : w); };
        out.emplace_back(remap(f.u), remap(f.v));
    }
    MultiGraph g(n_ - 1, std::move(out));
    return {std::move(g), u};
}

MultiGraph MultiGraph::delete_vertices(const std::vector<Vertex>& vs) const {
    std::vector<char> removed(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex v : vs) {
        if (!has_vertex(v))
            throw input_error("unknown vertex " + std::to_string(v));
        removed[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Vertex> relabel(static_cast<std::size_t>(n_) + 1, 0);
    int next = 0;
    for (Vertex v = 1; v <= n_; ++v)
        if (!removed[static_cast<std::size_t>(v)])
            relabel[static_cast<std::size_t>(v)] = ++next;

    std::vector<Edge> out;
    for (const Edge& f : edges_) {
        if (removed[static_cast<std::size_t>(f.u)] || removed[static_cast<std::size_t>(f.v)])
            continue;
        out.emplace_back(relabel[static_cast<std::size_t>(f.u)], relabel[static_cast<std::size_t>(f.v)]);
    }
    return MultiGraph(next, std::move(out));
}

int MultiGraph::vertex_degree(Vertex v) const {
    int d = 0;
    for (const Edge& f : edges_) {
        if (f.u == v)
            ++d;
        if (f.v == v)
            ++d;
    }
    return d;
}

std::vector<Vertex> MultiGraph::vertex_closed_neighborhood(Vertex v) const {
    std::vector<Vertex> out{v};
    for (const Edge& f : edges_) {
        if (f.u == v)
            out.push_back(f.v);
        if (f.v == v)
            out.push_back(f.u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> MultiGraph::closed_neighborhood(const Focus& f) const {
    if (f.kind == Focus::Kind::vertex) {
        if (!has_vertex(f.vertex))
            throw input_error("unknown vertex " + std::to_string(f.vertex));
        return vertex_closed_neighborhood(f.vertex);
    }
    require_edge(f.edge);
    if (f.edge.is_loop())
        throw unsupported_focus_error("loop " + describe(f.edge) + " not admissible as edge focus");
    auto a = vertex_closed_neighborhood(f.edge.u);
    auto b = vertex_closed_neighborhood(f.edge.v);
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int MultiGraph::degree(const Focus& f) const {
    if (f.kind == Focus::Kind::vertex) {
        if (!has_vertex(f.vertex))
            throw input_error("unknown vertex " + std::to_string(f.vertex));
        return vertex_degree(f.vertex);
    }
    require_edge(f.edge);
    if (f.edge.is_loop())
        throw unsupported_focus_error("loop " + describe(f.edge) + " not admissible as edge focus");
    return vertex_degree(f.edge.u) + vertex_degree(f.edge.v) - 2;
}

std::vector<MultiGraph> MultiGraph::components() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_) + 1);
    for (const Edge& f : edges_) {
        adj[static_cast<std::size_t>(f.u)].push_back(f.v);
        adj[static_cast<std::size_t>(f.v)].push_back(f.u);
    }
    std::vector<int> comp(static_cast<std::size_t>(n_) + 1, 0);
    int ncomp = 0;
    for (Vertex start = 1; start <= n_; ++start) {
        if (comp[static_cast<std::size_t>(start)] != 0)
            continue;
        ++ncomp;
        std::vector<Vertex> stack{start};
        comp[static_cast<std::size_t>(start)] = ncomp;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(w)] == 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
            }
        }
    }

    // Scanning vertices in order assigns component ids by smallest label.
    std::vector<int> size(static_cast<std::size_t>(ncomp) + 1, 0);
    std::vector<Vertex> relabel(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex v = 1; v <= n_; ++v)
        relabel[static_cast<std::size_t>(v)] = ++size[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];

    std::vector<std::vector<Edge>> comp_edges(static_cast<std::size_t>(ncomp) + 1);
    for (const Edge& f : edges_) {
        int c = comp[static_cast<std::size_t>(f.u)];
        comp_edges[static_cast<std::size_t>(c)].emplace_back(relabel[static_cast<std::size_t>(f.u)],
                                                             relabel[static_cast<std::size_t>(f.v)]);
    }

    std::vector<MultiGraph> out;
    out.reserve(static_cast<std::size_t>(ncomp));
    for (int c = 1; c <= ncomp; ++c)
        out.emplace_back(size[static_cast<std::size_t>(c)], std::move(comp_edges[static_cast<std::size_t>(c)]));
    return out;
}

std::string MultiGraph::canonical_key(KeyMode mode, int canonical_cap) const {
    auto serialize = [](int n, const std::vector<Edge>& es) {
        std::string key = std::to_string(n) + ":";
        for (const Edge& e : es) {
            key += std::to_string(e.u);
            key += '-';
            key += std::to_string(e.v);
            key += ',';
        }
        return key;
    };
    if (mode == KeyMode::labeled)
        return serialize(n_, edges_);

    if (n_ > canonical_cap)
        throw capacity_error("canonical key limited to " + std::to_string(canonical_cap) +
                             " vertices, graph has " + std::to_string(n_));

    std::vector<Vertex> perm(static_cast<std::size_t>(n_));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Edge> best = edges_;
    std::vector<Edge> cur(edges_.size());
    do {
        for (std::size_t i = 0; i < edges_.size(); ++i)
            cur[i] = Edge(perm[static_cast<std::size_t>(edges_[i].u) - 1],
                          perm[static_cast<std::size_t>(edges_[i].v) - 1]);
        std::sort(cur.begin(), cur.end());
        if (cur < best)
            best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return serialize(n_, best);
}

FamilySpec FamilySpec::path(int n) {
    FamilySpec s;
    s.kind = Kind::path;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::cycle(int n) {
    FamilySpec s;
    s.kind = Kind::cycle;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::sneaky(int r, int s, int t) {
    FamilySpec f;
    f.kind = Kind::sneaky;
    f.r = r;
    f.s = s;
    f.t = t;
    return f;
}

MultiGraph path_graph(int n) {
    if (n < 1)
        throw input_error("path graph needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i)
        es.emplace_back(i, i + 1);
    return MultiGraph(n, std::move(es));
}

MultiGraph cycle_graph(int n) {
    if (n < 1)
        throw input_error("cycle graph needs n >= 1, got " + std::to_string(n));
    if (n == 1)
        return MultiGraph(1, {Edge(1, 1)});
    if (n == 2)
        return MultiGraph(2, {Edge(1, 2), Edge(1, 2)});
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i)
        es.emplace_back(i, i + 1);
    es.emplace_back(n, 1);
    return MultiGraph(n, std::move(es));
}

MultiGraph sneaky_graph(int r, int s, int t) {
    if (r < 2 || s < 2 || t < 1)
        throw input_error("sneaky graph needs r,s >= 2 and t >= 1, got (" + std::to_string(r) +
                          "," + std::to_string(s) + "," + std::to_string(t) + ")");
    int n = r + s + t + 1;
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i)
        es.emplace_back(i, i + 1);
    es.emplace_back(r, r + s + 1);
    return MultiGraph(n, std::move(es));
}

MultiGraph build_family(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilySpec::Kind::path:
        return path_graph(spec.n);
    case FamilySpec::Kind::cycle:
        return cycle_graph(spec.n);
    case FamilySpec::Kind::sneaky:
        return sneaky_graph(spec.r, spec.s, spec.t);
    }
    throw input_error("unknown family kind");
}

MultiGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;

    auto fail = [&](const std::string& msg) -> void {
        throw input_error("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (n < 0) {
            if (tag != "p")
                fail("expected header 'p <n> <m>', got '" + tag + "'");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                fail("malformed header 'p <n> <m>'");
            std::string rest;
            if (ls >> rest)
                fail("trailing content after header");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (tag != "e")
            fail("expected edge line 'e <u> <v>', got '" + tag + "'");
        int u = 0, v = 0;
        if (!(ls >> u >> v))
            fail("malformed edge line 'e <u> <v>'");
        std::string rest;
        if (ls >> rest)
            fail("trailing content after edge");
        if (u < 1 || u > n || v < 1 || v > n)
            fail("endpoint out of range 1.." + std::to_string(n));
        if (static_cast<int>(edges.size()) == m)
            fail("more than the declared " + std::to_string(m) + " edges");
        edges.emplace_back(u, v);
    }
    ++lineno;
    if (n < 0)
        fail("missing header 'p <n> <m>'");
    if (static_cast<int>(edges.size()) != m)
        fail("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return MultiGraph(n, std::move(edges));
}

std::string serialize_graph(const MultiGraph& g) {
    std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

} // namespace bichroma
