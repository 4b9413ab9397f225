#pragma once

#include <pendant/digraph.hpp>
#include <pendant/oracles.hpp>
#include <pendant/steiner.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

// Reduction instances for the hardness results. Every constructor records a
// name for each output vertex so a packing can be read back in terms of the
// source instance.

namespace pendant {

struct VertexName
{
    std::string name;
    Vertex id = 0;

    friend bool operator==(const VertexName &, const VertexName &) = default;
};

struct GadgetInstance
{
    Digraph digraph;
    TerminalSpec spec;
    std::vector<VertexName> provenance; ///< one entry per vertex, ids 0..n-1 in order
    std::string source;                 ///< short description of the source instance

    /// Id of the vertex with the given name; throws std::out_of_range if absent.
    [[nodiscard]] Vertex id_of(const std::string &name) const
    {
        for (const auto &p : provenance)
            if (p.name == name)
                return p.id;
        throw std::out_of_range("no gadget vertex named " + name);
    }
};

namespace detail {

    class GadgetBuilder
    {
    public:
        Vertex add(std::string name)
        {
            Vertex id = static_cast<Vertex>(names_.size());
            names_.push_back({std::move(name), id});
            return id;
        }
        void arc(Vertex u, Vertex v) { arcs_.push_back({u, v}); }
        void both(Vertex u, Vertex v)
        {
            arcs_.push_back({u, v});
            arcs_.push_back({v, u});
        }
        [[nodiscard]] int order() const { return static_cast<int>(names_.size()); }

        GadgetInstance finish(Vertex root, std::vector<Vertex> sinks, std::string source)
        {
            GadgetInstance g;
            g.digraph = Digraph::build(order(), arcs_);
            g.spec = TerminalSpec::make(order(), root, std::move(sinks));
            g.provenance = std::move(names_);
            g.source = std::move(source);
            return g;
        }

    private:
        std::vector<VertexName> names_;
        std::vector<Arc> arcs_;
    };

    inline std::string idx(int i) { return std::to_string(i); }

} // namespace detail

/**
 * Eulerian gadget from a 2-linkage instance (D*, s1, t1, s2, t2).
 *
 * Keeps D* on ids 0..|D*|-1, then adds r, u1, u2, U = {u3..u_{k-1}} and
 * V = {v1..v_{ell-2}}. Terminals are {r, u1, u2} u U with root r.
 */
inline GadgetInstance gadget_eulerian(const Digraph &dstar, Vertex s1, Vertex s2, Vertex t1, Vertex t2, int k, int ell)
{
    if (k < 3)
        throw InvalidDigraph("eulerian gadget needs k >= 3");
    if (ell < 2)
        throw InvalidDigraph("eulerian gadget needs ell >= 2");
    const int m = dstar.order();
    for (Vertex v : {s1, s2, t1, t2})
        if (v < 0 || v >= m)
            throw InvalidDigraph("linkage terminal out of range");
    if (s1 == s2 || s1 == t1 || s1 == t2 || s2 == t1 || s2 == t2 || t1 == t2)
        throw InvalidDigraph("linkage terminals must be distinct");

    detail::GadgetBuilder b;
    for (Vertex v = 0; v < m; ++v) {
        std::string name = "Dstar_" + detail::idx(v);
        if (v == s1)
            name = "s_1";
        else if (v == s2)
            name = "s_2";
        else if (v == t1)
            name = "t_1";
        else if (v == t2)
            name = "t_2";
        b.add(name);
    }
    for (const Arc &a : dstar.arcs())
        b.arc(a.tail, a.head);
    const Vertex r = b.add("r");
    const Vertex u1 = b.add("u_1");
    const Vertex u2 = b.add("u_2");
    std::vector<Vertex> big_u, big_v;
    for (int i = 3; i <= k - 1; ++i)
        big_u.push_back(b.add("u_" + detail::idx(i)));
    for (int i = 1; i <= ell - 2; ++i)
        big_v.push_back(b.add("v_" + detail::idx(i)));

    b.arc(r, s1);
    b.arc(r, s2);
    b.both(t1, u1);
    b.both(t2, u2);
    b.arc(s1, u2);
    b.arc(s2, u1);
    b.arc(u1, r);
    b.arc(u2, r);
    for (Vertex v : big_v) {
        b.both(r, v);
        for (Vertex u : big_u)
            b.both(v, u);
    }
    for (Vertex u : big_u) {
        b.both(t1, u);
        b.both(t2, u);
    }

    std::vector<Vertex> sinks{u1, u2};
    sinks.insert(sinks.end(), big_u.begin(), big_u.end());
    return b.finish(r, std::move(sinks),
                    "2-linkage on " + detail::idx(m) + " vertices, k=" + detail::idx(k) + ", ell=" + detail::idx(ell));
}

/**
 * Symmetric gadget from a balanced tripartite graph G = (A, B, C).
 *
 * G keeps ids 0..3q-1; then s_1..s_{k-1} and r. Every edge of G becomes a
 * digon, r is joined to A, s_1 to B, and s_2..s_{k-1} to C.
 */
inline GadgetInstance gadget_cllm(const TripartiteInstance &g, int k)
{
    if (k < 3)
        throw InvalidDigraph("cllm gadget needs k >= 3");
    const int q = g.q;
    if (static_cast<int>(g.part_a.size()) != q || static_cast<int>(g.part_b.size()) != q ||
        static_cast<int>(g.part_c.size()) != q)
        throw InvalidDigraph("cllm gadget needs parts of equal size");

    detail::GadgetBuilder b;
    std::vector<std::string> names(3 * q);
    for (int i = 0; i < q; ++i) {
        names[g.part_a[i]] = "a_" + detail::idx(i + 1);
        names[g.part_b[i]] = "b_" + detail::idx(i + 1);
        names[g.part_c[i]] = "c_" + detail::idx(i + 1);
    }
    for (auto &n : names)
        b.add(std::move(n));
    for (auto [u, v] : g.edges)
        b.both(u, v);
    std::vector<Vertex> s;
    for (int i = 1; i <= k - 1; ++i)
        s.push_back(b.add("s_" + detail::idx(i)));
    const Vertex r = b.add("r");
    for (Vertex a : g.part_a)
        b.both(r, a);
    for (Vertex v : g.part_b)
        b.both(s[0], v);
    for (int i = 1; i < k - 1; ++i)
        for (Vertex w : g.part_c)
            b.both(s[i], w);
    return b.finish(r, s, "tripartite q=" + detail::idx(q) + ", k=" + detail::idx(k));
}

/**
 * Symmetric gadget from a hypergraph H.
 *
 * Vertices of H keep ids 0..n-1, then one vertex per edge, u_1..u_{ell-2}
 * and r. Terminals are the edge vertices plus r, so k = |E(H)| + 1.
 */
inline GadgetInstance gadget_hypergraph(const Hypergraph &h, int ell)
{
    if (ell < 2)
        throw InvalidDigraph("hypergraph gadget needs ell >= 2");
    if (h.edges.empty())
        throw InvalidDigraph("hypergraph gadget needs at least one edge");
    for (const auto &e : h.edges)
        if (e.size() < 2)
            throw InvalidDigraph("hypergraph gadget needs edges of size at least 2");

    detail::GadgetBuilder b;
    for (Vertex x = 0; x < h.n_vertices; ++x)
        b.add("x_" + detail::idx(x));
    std::vector<Vertex> edge_ids;
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        edge_ids.push_back(b.add("e_" + detail::idx(static_cast<int>(i) + 1)));
    std::vector<Vertex> us;
    for (int i = 1; i <= ell - 2; ++i)
        us.push_back(b.add("u_" + detail::idx(i)));
    const Vertex r = b.add("r");

    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (Vertex x : h.edges[i])
            b.both(x, edge_ids[i]);
    for (Vertex u : us) {
        b.both(r, u);
        for (Vertex e : edge_ids)
            b.both(u, e);
    }
    for (Vertex x = 0; x < h.n_vertices; ++x) {
        for (Vertex y = x + 1; y < h.n_vertices; ++y)
            b.both(x, y);
        b.both(r, x);
    }
    return b.finish(r, edge_ids,
                    "hypergraph n=" + detail::idx(h.n_vertices) + ", m=" + detail::idx(static_cast<int>(h.edges.size())) +
                        ", ell=" + detail::idx(ell));
}

/// Number of copies of H placed by gadget_amplifier.
inline long long amplifier_copy_count(int big_n)
{
    const long long n = big_n;
    return (n * n - 2 * n + 2) * (n - 1) / 2;
}

/**
 * Gap amplifier from a 2-linkage instance (H, x1, y1, x2, y2).
 *
 * Grid layout: rows i = 1..N start at s_i; columns are (j, k) for blocks
 * j = 1..N and k in [N] \ {j}. Row i holds u_{i,j} in column (j, i) and a
 * copy H_{ij}^k in column (j, k) when i < k and j <= N-1. Rows run left to
 * right into x1 and out of y1; columns run from u_{k,j} through
 * H_{(k-1)j}^k, ..., H_{1j}^k into x2 and out of y2, ending at t_j.
 * Then r -> s_i, s_i -> t_i and the diagonal chains over the u vertices.
 */
inline GadgetInstance gadget_amplifier(const Digraph &h, Vertex x1, Vertex y1, Vertex x2, Vertex y2, int big_n)
{
    if (big_n < 2)
        throw InvalidDigraph("amplifier needs N >= 2");
    const int hn = h.order();
    for (Vertex v : {x1, y1, x2, y2})
        if (v < 0 || v >= hn)
            throw InvalidDigraph("linkage terminal out of range");
    if (x1 == y1 || x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2 || x2 == y2)
        throw InvalidDigraph("linkage terminals must be distinct");
    const int n = big_n;
    using detail::idx;
    detail::GadgetBuilder b;

    const Vertex r = b.add("r");
    std::vector<Vertex> s(n + 1), t(n + 1);
    for (int i = 1; i <= n; ++i)
        s[i] = b.add("s_" + idx(i));
    for (int i = 1; i <= n; ++i)
        t[i] = b.add("t_" + idx(i));
    std::vector<std::vector<Vertex>> u(n + 1, std::vector<Vertex>(n + 1, -1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                u[i][j] = b.add("u_{" + idx(i) + "," + idx(j) + "}");

    struct Copy
    {
        Vertex x1, y1, x2, y2;
    };
    std::map<std::tuple<int, int, int>, Copy> copies;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i < k; ++i)
            for (int j = 1; j <= n - 1; ++j) {
                if (j == k)
                    continue;
                const std::string tag = idx(i) + "," + idx(j) + "}^{" + idx(k) + "}";
                std::vector<Vertex> ids(hn);
                for (Vertex v = 0; v < hn; ++v) {
                    std::string name;
                    if (v == x1)
                        name = "x_{1," + tag;
                    else if (v == y1)
                        name = "y_{1," + tag;
                    else if (v == x2)
                        name = "x_{2," + tag;
                    else if (v == y2)
                        name = "y_{2," + tag;
                    else
                        name = "H_{" + tag + ":" + idx(v);
                    ids[v] = b.add(std::move(name));
                }
                for (const Arc &a : h.arcs())
                    b.arc(ids[a.tail], ids[a.head]);
                copies[{i, j, k}] = Copy{ids[x1], ids[y1], ids[x2], ids[y2]};
            }

    // rows
    for (int i = 1; i <= n; ++i) {
        Vertex exit = s[i];
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (k == j)
                    continue;
                if (k == i) {
                    b.arc(exit, u[i][j]);
                    exit = u[i][j];
                }
                else if (k > i && j <= n - 1) {
                    const Copy &c = copies.at({i, j, k});
                    b.arc(exit, c.x1);
                    exit = c.y1;
                }
            }
    }
    // columns
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (k == j)
                continue;
            Vertex exit = u[k][j];
            if (j <= n - 1)
                for (int i = k - 1; i >= 1; --i) {
                    const Copy &c = copies.at({i, j, k});
                    b.arc(exit, c.x2);
                    exit = c.y2;
                }
            b.arc(exit, t[j]);
        }

    for (int i = 1; i <= n; ++i) {
        b.arc(r, s[i]);
        b.arc(s[i], t[i]);
    }
    Vertex prev = s[1];
    for (int i = 2; i <= n; ++i) {
        b.arc(prev, u[i][1]);
        prev = u[i][1];
    }
    for (int q = 2; q <= n - 1; ++q) {
        prev = -1;
        for (int a = q; a >= 1; --a) {
            const int c = q + 1 - a;
            if (a == c)
                continue;
            if (prev >= 0)
                b.arc(prev, u[a][c]);
            prev = u[a][c];
        }
    }

    std::vector<Vertex> sinks(t.begin() + 1, t.end());
    return b.finish(r, std::move(sinks), "2-linkage on " + idx(hn) + " vertices, N=" + idx(n));
}

} // namespace pendant
