#pragma once

#include <pendant/digraph.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Exact exponential-time decision procedures. They are slow on purpose:
// every answer comes from exhaustive search, so they can serve as ground
// truth for the solvers and gadget constructions.

namespace pendant {

using Path = std::vector<Vertex>;

// ---------------------------------------------------------------- linkage

/// Two vertex-disjoint paths s1->t1 and s2->t2, or nullopt. Terminals must be distinct.
inline std::optional<std::pair<Path, Path>> directed_two_linkage(const Digraph &d, Vertex s1, Vertex t1, Vertex s2,
                                                                 Vertex t2)
{
    const std::array<Vertex, 4> ends{s1, t1, s2, t2};
    for (Vertex v : ends)
        if (v < 0 || v >= d.order())
            throw InvalidDigraph("linkage terminal out of range");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ends[i] == ends[j])
                throw InvalidDigraph("linkage terminals must be distinct");

    const int n = d.order();
    std::vector<char> on_first(n, 0);
    Path first{s1};
    on_first[s1] = 1;
    std::optional<std::pair<Path, Path>> found;

    // shortest s2->t2 path avoiding the vertices of the current first path
    auto second_path = [&]() -> std::optional<Path> {
        std::vector<Vertex> prev(n, -1);
        std::vector<char> seen(n, 0);
        std::vector<Vertex> queue{s2};
        seen[s2] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            Vertex v = queue[h];
            if (v == t2) {
                Path p;
                for (Vertex x = t2; x != -1; x = prev[x])
                    p.push_back(x);
                std::reverse(p.begin(), p.end());
                return p;
            }
            for (Vertex w : d.out_neighbours(v))
                if (! seen[w] && ! on_first[w]) {
                    seen[w] = 1;
                    prev[w] = v;
                    queue.push_back(w);
                }
        }
        return std::nullopt;
    };

    // every simple s1->t1 path that avoids s2 and t2
    auto extend = [&](auto &self, Vertex v) -> bool {
        if (v == t1) {
            if (auto p2 = second_path()) {
                found.emplace(first, *p2);
                return true;
            }
            return false;
        }
        for (Vertex w : d.out_neighbours(v)) {
            if (on_first[w] || w == s2 || w == t2)
                continue;
            on_first[w] = 1;
            first.push_back(w);
            if (self(self, w))
                return true;
            first.pop_back();
            on_first[w] = 0;
        }
        return false;
    };
    extend(extend, s1);
    return found;
}

/**
 * A request for one path per (source, target) pair whose internal vertices
 * avoid `forbidden_internal`, every endpoint of every pair, and every vertex
 * of every other path. Endpoints may be shared between pairs.
 */
struct LinkageQuery
{
    Digraph host;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<Vertex> forbidden_internal;
};

/**
 * Paths for every pair of the query (in the query's pair order), pairwise
 * arc-disjoint and internally vertex-disjoint as described on LinkageQuery.
 * Search order: lexicographically smallest unfinished pair first, neighbours
 * ascending.
 */
inline std::optional<std::vector<Path>> constrained_disjoint_paths(const Digraph &host,
                                                                    const std::vector<std::pair<Vertex, Vertex>> &pairs,
                                                                    const std::vector<Vertex> &forbidden_internal)
{
    const int n = host.order();
    std::vector<char> blocked(n, 0), used(n, 0), on_path(n, 0);
    for (Vertex v : forbidden_internal)
        if (v >= 0 && v < n)
            blocked[v] = 1;
    for (auto [s, t] : pairs) {
        if (s < 0 || s >= n || t < 0 || t >= n)
            throw InvalidDigraph("linkage endpoint out of range");
        if (s == t)
            throw InvalidDigraph("linkage pair with equal endpoints");
        blocked[s] = blocked[t] = 1;
    }

    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pairs[a] < pairs[b]; });

    std::vector<char> arc_used(static_cast<std::size_t>(n) * n, 0);
    auto arc_cell = [&](Vertex u, Vertex v) -> char & { return arc_used[static_cast<std::size_t>(u) * n + v]; };
    std::vector<Path> paths(pairs.size());

    auto solve = [&](auto &self, std::size_t pos) -> bool {
        if (pos == order.size())
            return true;
        const std::size_t which = order[pos];
        const auto [s, t] = pairs[which];
        Path &path = paths[which];
        path.assign(1, s);

        auto walk = [&](auto &walk_self, Vertex v) -> bool {
            for (Vertex w : host.out_neighbours(v)) {
                if (arc_cell(v, w))
                    continue;
                if (w == t) {
                    arc_cell(v, w) = 1;
                    path.push_back(w);
                    if (self(self, pos + 1))
                        return true;
                    path.pop_back();
                    arc_cell(v, w) = 0;
                    continue;
                }
                if (blocked[w] || used[w] || on_path[w])
                    continue;
                on_path[w] = used[w] = 1;
                arc_cell(v, w) = 1;
                path.push_back(w);
                if (walk_self(walk_self, w))
                    return true;
                path.pop_back();
                arc_cell(v, w) = 0;
                on_path[w] = used[w] = 0;
            }
            return false;
        };
        return walk(walk, s);
    };

    if (! solve(solve, 0))
        return std::nullopt;
    return paths;
}

inline std::optional<std::vector<Path>> constrained_disjoint_paths(const LinkageQuery &q)
{
    return constrained_disjoint_paths(q.host, q.pairs, q.forbidden_internal);
}

// ------------------------------------------------------------ hypergraphs

struct Hypergraph
{
    int n_vertices = 0;
    std::vector<std::vector<Vertex>> edges; ///< each sorted, nonempty

    /// Throws InvalidDigraph on empty edges, repeated or out-of-range vertices; sorts each edge.
    static Hypergraph make(int n, std::vector<std::vector<Vertex>> edges)
    {
        if (n < 0)
            throw InvalidDigraph("negative hypergraph order");
        for (auto &e : edges) {
            if (e.empty())
                throw InvalidDigraph("empty hyperedge");
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw InvalidDigraph("repeated vertex in hyperedge");
            if (e.front() < 0 || e.back() >= n)
                throw InvalidDigraph("hyperedge vertex out of range");
        }
        return Hypergraph{n, std::move(edges)};
    }

    friend bool operator==(const Hypergraph &, const Hypergraph &) = default;
};

enum class Colour : std::uint8_t
{
    red,
    blue,
};

/// A red/blue colouring in which every edge sees both colours, or nullopt.
inline std::optional<std::vector<Colour>> hypergraph_two_coloring(const Hypergraph &h)
{
    for (const auto &e : h.edges)
        if (e.size() < 2)
            return std::nullopt;

    // edges grouped by their largest vertex: checked as soon as they are fully coloured
    std::vector<std::vector<std::size_t>> closing(h.n_vertices);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        closing[h.edges[i].back()].push_back(i);

    std::vector<Colour> colour(h.n_vertices, Colour::red);
    auto bichromatic = [&](const std::vector<Vertex> &e) {
        return std::any_of(e.begin(), e.end(), [&](Vertex v) { return colour[v] != colour[e.front()]; });
    };
    auto assign = [&](auto &self, Vertex v) -> bool {
        if (v == h.n_vertices)
            return true;
        for (Colour c : {Colour::red, Colour::blue}) {
            colour[v] = c;
            bool ok = std::all_of(closing[v].begin(), closing[v].end(),
                                  [&](std::size_t i) { return bichromatic(h.edges[i]); });
            if (ok && self(self, v + 1))
                return true;
        }
        return false;
    };
    if (! assign(assign, 0))
        return std::nullopt;
    return colour;
}

// -------------------------------------------------------------- tripartite

struct TripartiteInstance
{
    int q = 0;
    std::vector<Vertex> part_a, part_b, part_c;
    std::vector<std::pair<Vertex, Vertex>> edges; ///< undirected, endpoints in different parts

    /// Vertices are 0..3q-1; the three parts must partition them into equal blocks.
    static TripartiteInstance make(int q, std::vector<Vertex> a, std::vector<Vertex> b, std::vector<Vertex> c,
                                   std::vector<std::pair<Vertex, Vertex>> edges)
    {
        if (q < 1)
            throw InvalidDigraph("tripartite instance needs q >= 1");
        if (static_cast<int>(a.size()) != q || static_cast<int>(b.size()) != q || static_cast<int>(c.size()) != q)
            throw InvalidDigraph("tripartite parts must all have size q");
        std::vector<int> part(3 * q, -1);
        int idx = 0;
        for (const auto *p : {&a, &b, &c}) {
            for (Vertex v : *p) {
                if (v < 0 || v >= 3 * q)
                    throw InvalidDigraph("tripartite vertex out of range");
                if (part[v] != -1)
                    throw InvalidDigraph("tripartite parts overlap");
                part[v] = idx;
            }
            ++idx;
        }
        for (auto &[u, v] : edges) {
            if (u < 0 || v < 0 || u >= 3 * q || v >= 3 * q)
                throw InvalidDigraph("tripartite edge endpoint out of range");
            if (part[u] == part[v])
                throw InvalidDigraph("tripartite edge inside a part");
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InvalidDigraph("duplicate tripartite edge");
        return TripartiteInstance{q, std::move(a), std::move(b), std::move(c), std::move(edges)};
    }

    [[nodiscard]] int order() const { return 3 * q; }

    friend bool operator==(const TripartiteInstance &, const TripartiteInstance &) = default;
};

using Triple = std::array<Vertex, 3>; ///< (a, b, c)

/// A partition into q transversal triples, each inducing a connected subgraph, or nullopt.
inline std::optional<std::vector<Triple>> cllm_solve(const TripartiteInstance &g)
{
    const int n = g.order();
    std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : g.edges)
        adj[static_cast<std::size_t>(u) * n + v] = adj[static_cast<std::size_t>(v) * n + u] = 1;
    auto edge = [&](Vertex u, Vertex v) { return adj[static_cast<std::size_t>(u) * n + v] != 0; };
    auto connected = [&](Vertex a, Vertex b, Vertex c) { return edge(a, b) + edge(a, c) + edge(b, c) >= 2; };

    std::vector<char> used_b(n, 0), used_c(n, 0);
    std::vector<Triple> triples;
    auto place = [&](auto &self, std::size_t i) -> bool {
        if (i == g.part_a.size())
            return true;
        Vertex a = g.part_a[i];
        for (Vertex b : g.part_b) {
            if (used_b[b])
                continue;
            for (Vertex c : g.part_c) {
                if (used_c[c] || ! connected(a, b, c))
                    continue;
                used_b[b] = used_c[c] = 1;
                triples.push_back({a, b, c});
                if (self(self, i + 1))
                    return true;
                triples.pop_back();
                used_b[b] = used_c[c] = 0;
            }
        }
        return false;
    };
    if (! place(place, 0))
        return std::nullopt;
    return triples;
}

// ------------------------------------------------------------ connectivity

/**
 * Maximum number of internally vertex-disjoint u->v paths (Menger), via unit
 * vertex capacities on a split graph. A direct arc u->v counts as one path.
 */
inline int local_connectivity(const Digraph &d, Vertex u, Vertex v)
{
    const int n = d.order();
    // node 2x = x_in, 2x+1 = x_out
    struct Edge
    {
        int to, cap;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj(2 * n);
    auto add = [&](int a, int b, int cap) {
        adj[a].push_back(static_cast<int>(edges.size()));
        edges.push_back({b, cap});
        adj[b].push_back(static_cast<int>(edges.size()));
        edges.push_back({a, 0});
    };
    const int big = n + 1;
    for (Vertex x = 0; x < n; ++x)
        add(2 * x, 2 * x + 1, (x == u || x == v) ? big : 1);
    for (const Arc &a : d.arcs())
        add(2 * a.tail + 1, 2 * a.head, 1);

    const int source = 2 * u + 1, sink = 2 * v;
    int flow = 0;
    std::vector<int> via(2 * n);
    for (;;) {
        std::fill(via.begin(), via.end(), -1);
        std::vector<int> queue{source};
        via[source] = -2;
        for (std::size_t h = 0; h < queue.size() && via[sink] == -1; ++h) {
            int x = queue[h];
            for (int e : adj[x])
                if (edges[e].cap > 0 && via[edges[e].to] == -1) {
                    via[edges[e].to] = e;
                    queue.push_back(edges[e].to);
                }
        }
        if (via[sink] == -1)
            return flow;
        for (int x = sink; x != source;) {
            int e = via[x];
            edges[e].cap -= 1;
            edges[e ^ 1].cap += 1;
            x = edges[e ^ 1].to;
        }
        ++flow;
    }
}

/// Vertex-strong connectivity; n-1 for the complete digraph, 0 when not strong.
inline int vertex_connectivity(const Digraph &d)
{
    const int n = d.order();
    if (n < 2)
        throw InvalidDigraph("vertex connectivity needs at least two vertices");
    int best = n - 1;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && ! d.has_arc(u, v))
                best = std::min(best, local_connectivity(d, u, v));
    return best;
}

} // namespace pendant
