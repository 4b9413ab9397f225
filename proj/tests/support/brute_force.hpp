#pragma once

// Deliberately naive reference implementations. They share only the Digraph
// container with the library and recompute everything from definitions.

#include <pendant/digraph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace brute {

using pendant::Arc;
using pendant::Digraph;
using pendant::Vertex;

struct Tree
{
    std::vector<Arc> arcs; // sorted
    std::vector<Vertex> vertices;
};

/// Definition check: out-tree at r on `parent` (parent[r] = -1), terminals of total degree one.
inline bool is_pendant(const std::vector<Vertex> &w, const std::vector<Vertex> &parent, Vertex r,
                       const std::vector<char> &terminal)
{
    const int n = static_cast<int>(parent.size());
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (Vertex v : w)
        if (v != r) {
            ++outdeg[parent[v]];
            ++indeg[v];
        }
    // every vertex must reach r by following parents within |w| steps
    for (Vertex v : w) {
        Vertex cur = v;
        int steps = 0;
        while (cur != r && steps <= static_cast<int>(w.size())) {
            cur = parent[cur];
            ++steps;
        }
        if (cur != r)
            return false;
    }
    for (Vertex v : w)
        if (terminal[v] && indeg[v] + outdeg[v] != 1)
            return false;
    return true;
}

/**
 * Every pendant (S,r)-tree, by choosing a vertex set W containing S and a
 * parent in W for each vertex other than r. When `minimal_only`, keeps
 * trees whose degree-one vertices are exactly S.
 */
inline std::vector<Tree> pendant_trees(const Digraph &d, Vertex r, const std::vector<Vertex> &sinks, bool minimal_only)
{
    const int n = d.order();
    std::vector<char> terminal(n, 0);
    terminal[r] = 1;
    for (Vertex s : sinks)
        terminal[s] = 1;
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v)
        if (! terminal[v])
            others.push_back(v);

    std::set<std::vector<Arc>> seen;
    std::vector<Tree> out;
    for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
        std::vector<Vertex> w{r};
        w.insert(w.end(), sinks.begin(), sinks.end());
        for (std::size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1)
                w.push_back(others[i]);
        std::sort(w.begin(), w.end());
        std::vector<char> in_w(n, 0);
        for (Vertex v : w)
            in_w[v] = 1;
        std::vector<Vertex> kids;
        for (Vertex v : w)
            if (v != r)
                kids.push_back(v);
        std::vector<std::vector<Vertex>> choices;
        bool possible = true;
        for (Vertex v : kids) {
            std::vector<Vertex> c;
            for (Vertex u = 0; u < n; ++u)
                if (in_w[u] && d.has_arc(u, v) && ! (terminal[u] && u != r))
                    c.push_back(u);
            if (c.empty())
                possible = false;
            choices.push_back(std::move(c));
        }
        if (! possible)
            continue;
        std::vector<Vertex> parent(n, -1);
        std::vector<std::size_t> pick(kids.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < kids.size(); ++i)
                parent[kids[i]] = choices[i][pick[i]];
            if (is_pendant(w, parent, r, terminal)) {
                std::vector<int> deg(n, 0);
                Tree t;
                for (Vertex v : kids) {
                    t.arcs.push_back({parent[v], v});
                    ++deg[parent[v]];
                    ++deg[v];
                }
                bool minimal = true;
                for (Vertex v : w)
                    if (! terminal[v] && deg[v] == 1)
                        minimal = false;
                std::sort(t.arcs.begin(), t.arcs.end());
                t.vertices = w;
                if ((! minimal_only || minimal) && seen.insert(t.arcs).second)
                    out.push_back(std::move(t));
            }
            std::size_t pos = 0;
            while (pos < kids.size() && ++pick[pos] == choices[pos].size()) {
                pick[pos] = 0;
                ++pos;
            }
            if (pos == kids.size())
                break;
        }
    }
    std::sort(out.begin(), out.end(), [](const Tree &a, const Tree &b) { return a.arcs < b.arcs; });
    return out;
}

/// Largest family of pairwise arc-disjoint trees whose vertex sets meet exactly in S.
inline int max_packing(const std::vector<Tree> &trees, const std::vector<char> &terminal)
{
    std::vector<std::vector<Vertex>> inner;
    for (const auto &t : trees) {
        std::vector<Vertex> vs;
        for (Vertex v : t.vertices)
            if (! terminal[v])
                vs.push_back(v);
        inner.push_back(std::move(vs));
    }
    auto compatible = [&](std::size_t a, std::size_t b) {
        for (Vertex v : inner[a])
            if (std::find(inner[b].begin(), inner[b].end(), v) != inner[b].end())
                return false;
        for (const Arc &x : trees[a].arcs)
            if (std::find(trees[b].arcs.begin(), trees[b].arcs.end(), x) != trees[b].arcs.end())
                return false;
        return true;
    };
    int best = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (std::size_t i = from; i < trees.size(); ++i) {
            if (! std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible(c, i); }))
                continue;
            chosen.push_back(i);
            go(i + 1);
            chosen.pop_back();
        }
    };
    go(0);
    return best;
}

inline int tau_sr(const Digraph &d, Vertex r, const std::vector<Vertex> &sinks, bool minimal_only = true)
{
    std::vector<char> terminal(d.order(), 0);
    terminal[r] = 1;
    for (Vertex s : sinks)
        terminal[s] = 1;
    return max_packing(pendant_trees(d, r, sinks, minimal_only), terminal);
}

/// Minimum over all k-subsets and roots.
inline int tau_k(const Digraph &d, int k)
{
    const int n = d.order();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k)
            continue;
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v);
        for (Vertex r : s) {
            std::vector<Vertex> sinks;
            for (Vertex v : s)
                if (v != r)
                    sinks.push_back(v);
            best = std::min(best, tau_sr(d, r, sinks));
        }
    }
    return best;
}

inline bool strongly_connected_without(const Digraph &d, std::uint32_t removed)
{
    const int n = d.order();
    std::vector<Vertex> alive;
    for (Vertex v = 0; v < n; ++v)
        if (! (removed >> v & 1))
            alive.push_back(v);
    for (Vertex s : alive) {
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (! stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : d.out_neighbours(v))
                if (! seen[w] && ! (removed >> w & 1)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        for (Vertex v : alive)
            if (! seen[v])
                return false;
    }
    return true;
}

/// Smallest vertex set whose removal leaves a non-strong digraph; n-1 for the complete digraph.
inline int kappa(const Digraph &d)
{
    const int n = d.order();
    int best = n - 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best || n - size < 2)
            continue;
        if (! strongly_connected_without(d, mask))
            best = size;
    }
    return best;
}

/// Every simple path from s to t avoiding `avoid`.
inline void simple_paths(const Digraph &d, Vertex s, Vertex t, const std::vector<char> &avoid,
                         std::vector<std::vector<Vertex>> &out)
{
    std::vector<Vertex> path{s};
    std::vector<char> on(d.order(), 0);
    on[s] = 1;
    std::function<void(Vertex)> go = [&](Vertex v) {
        if (v == t) {
            out.push_back(path);
            return;
        }
        for (Vertex w : d.out_neighbours(v)) {
            if (on[w] || avoid[w])
                continue;
            on[w] = 1;
            path.push_back(w);
            go(w);
            path.pop_back();
            on[w] = 0;
        }
    };
    go(s);
}

inline bool two_linkage(const Digraph &d, Vertex s1, Vertex t1, Vertex s2, Vertex t2)
{
    std::vector<char> none(d.order(), 0);
    std::vector<std::vector<Vertex>> p1, p2;
    simple_paths(d, s1, t1, none, p1);
    simple_paths(d, s2, t2, none, p2);
    for (const auto &a : p1)
        for (const auto &b : p2) {
            bool disjoint = true;
            for (Vertex v : a)
                if (std::find(b.begin(), b.end(), v) != b.end())
                    disjoint = false;
            if (disjoint)
                return true;
        }
    return false;
}

inline bool two_colourable(int n, const std::vector<std::vector<Vertex>> &edges)
{
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool good = true;
        for (const auto &e : edges) {
            bool red = false, blue = false;
            for (Vertex v : e)
                (mask >> v & 1 ? red : blue) = true;
            good = good && red && blue;
        }
        if (good)
            return true;
    }
    return false;
}

/// Tries every pairing of A with B and of A with C.
inline bool cllm(int q, const std::vector<Vertex> &a, std::vector<Vertex> b, std::vector<Vertex> c,
                 const std::vector<std::pair<Vertex, Vertex>> &edges)
{
    auto adj = [&](Vertex u, Vertex v) {
        return std::find(edges.begin(), edges.end(), std::make_pair(std::min(u, v), std::max(u, v))) != edges.end();
    };
    std::sort(b.begin(), b.end());
    do {
        std::vector<Vertex> cc = c;
        std::sort(cc.begin(), cc.end());
        do {
            bool good = true;
            for (int i = 0; i < q && good; ++i) {
                int links = adj(a[i], b[i]) + adj(a[i], cc[i]) + adj(b[i], cc[i]);
                good = links >= 2;
            }
            if (good)
                return true;
        } while (std::next_permutation(cc.begin(), cc.end()));
    } while (std::next_permutation(b.begin(), b.end()));
    return false;
}

/// |(V \ S, S \ {r})| by a plain scan of the arc list.
inline int boundary(const Digraph &d, Vertex r, const std::vector<Vertex> &sinks)
{
    int count = 0;
    for (const Arc &a : d.arcs()) {
        bool tail_in = a.tail == r || std::find(sinks.begin(), sinks.end(), a.tail) != sinks.end();
        bool head_sink = std::find(sinks.begin(), sinks.end(), a.head) != sinks.end();
        if (! tail_in && head_sink)
            ++count;
    }
    return count;
}

/// Out-trees on {r} u S u R with r of out-degree one, sinks as leaves and each R vertex with two or more children.
inline std::size_t count_skeleton_shapes(int k, int branch)
{
    // nodes: 0 = r, 1..k-1 sinks, k..k+branch-1 branch vertices
    const int total = k + branch;
    std::vector<int> parent(total, 0);
    std::size_t count = 0;
    std::vector<int> parentable{0};
    for (int b = 0; b < branch; ++b)
        parentable.push_back(k + b);
    std::function<void(int)> go = [&](int v) {
        if (v == total) {
            std::vector<int> kids(total, 0);
            for (int x = 1; x < total; ++x)
                ++kids[parent[x]];
            if (kids[0] != 1)
                return;
            for (int b = 0; b < branch; ++b)
                if (kids[k + b] < 2)
                    return;
            for (int x = 1; x < total; ++x) {
                int cur = x, steps = 0;
                while (cur != 0 && steps <= total) {
                    cur = parent[cur];
                    ++steps;
                }
                if (cur != 0)
                    return;
            }
            ++count;
            return;
        }
        for (int p : parentable) {
            if (p == v)
                continue;
            parent[v] = p;
            go(v + 1);
        }
    };
    go(1);
    return count;
}

} // namespace brute
