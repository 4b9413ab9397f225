#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pendant {

/// Dense vertex id in 0..n-1.
using Vertex = int;

struct Arc
{
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc &, const Arc &) = default;
    friend bool operator==(const Arc &, const Arc &) = default;
};

/// Thrown when a digraph (or any structure built on one) would violate its invariants.
class InvalidDigraph : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct DegreeSummary
{
    int delta_plus = 0;
    int delta_minus = 0;
    int delta_zero = 0;

    friend bool operator==(const DegreeSummary &, const DegreeSummary &) = default;
};

/**
 * Immutable simple digraph on vertices 0..n-1.
 *
 * Arcs are kept sorted; out/in neighbour lists are sorted ascending and an
 * n*n adjacency matrix gives constant-time arc lookup. Values are freely
 * copyable and safe to share between threads once built.
 */
class Digraph
{
public:
    Digraph() = default;

    /// Validating constructor: rejects loops, duplicate arcs and out-of-range ids.
    static Digraph build(int n, std::span<const Arc> arcs)
    {
        if (n < 0)
            throw InvalidDigraph("negative vertex count");
        Digraph d;
        d.n_ = n;
        d.matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        d.out_.resize(n);
        d.in_.resize(n);
        d.arcs_.reserve(arcs.size());
        for (const Arc &a : arcs) {
            if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
                throw InvalidDigraph("vertex id out of range in arc (" + std::to_string(a.tail) + "," +
                                     std::to_string(a.head) + ")");
            if (a.tail == a.head)
                throw InvalidDigraph("loop at vertex " + std::to_string(a.tail));
            auto &cell = d.matrix_[d.index(a.tail, a.head)];
            if (cell)
                throw InvalidDigraph("duplicate arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
            cell = 1;
            d.arcs_.push_back(a);
        }
        std::sort(d.arcs_.begin(), d.arcs_.end());
        for (const Arc &a : d.arcs_) {
            d.out_[a.tail].push_back(a.head);
            d.in_[a.head].push_back(a.tail);
        }
        for (auto &l : d.in_)
            std::sort(l.begin(), l.end());
        return d;
    }

    static Digraph build(int n, std::initializer_list<Arc> arcs)
    {
        return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
    }

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] std::size_t size() const { return arcs_.size(); }
    [[nodiscard]] const std::vector<Arc> &arcs() const { return arcs_; }

    [[nodiscard]] bool has_arc(Vertex u, Vertex v) const
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            return false;
        return matrix_[index(u, v)] != 0;
    }
    [[nodiscard]] bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }

    [[nodiscard]] const std::vector<Vertex> &out_neighbours(Vertex v) const { return out_[v]; }
    [[nodiscard]] const std::vector<Vertex> &in_neighbours(Vertex v) const { return in_[v]; }
    [[nodiscard]] int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    [[nodiscard]] int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

    friend bool operator==(const Digraph &a, const Digraph &b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

private:
    [[nodiscard]] std::size_t index(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_, in_;
    std::vector<char> matrix_;
};

inline Digraph build_digraph(int n, std::span<const Arc> arcs) { return Digraph::build(n, arcs); }

inline Digraph build_digraph(int n, const std::vector<std::pair<int, int>> &pairs)
{
    std::vector<Arc> arcs;
    arcs.reserve(pairs.size());
    for (auto [u, v] : pairs)
        arcs.push_back({u, v});
    return Digraph::build(n, arcs);
}

inline bool is_symmetric(const Digraph &d)
{
    return std::all_of(d.arcs().begin(), d.arcs().end(), [&](const Arc &a) { return d.has_arc(a.head, a.tail); });
}

/// Connectivity of the underlying undirected graph. The empty digraph counts as connected.
inline bool is_weakly_connected(const Digraph &d)
{
    const int n = d.order();
    if (n <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const auto *list : {&d.out_neighbours(v), &d.in_neighbours(v)})
            for (Vertex w : *list)
                if (! seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
    }
    return count == n;
}

/// Vertices reachable from `source` along arcs (including `source`).
inline std::vector<char> reachable_from(const Digraph &d, Vertex source)
{
    std::vector<char> seen(d.order(), 0);
    std::vector<Vertex> stack{source};
    seen[source] = 1;
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : d.out_neighbours(v))
            if (! seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return seen;
}

inline bool is_strong(const Digraph &d)
{
    if (d.order() <= 1)
        return true;
    auto fwd = reachable_from(d, 0);
    if (std::find(fwd.begin(), fwd.end(), 0) != fwd.end())
        return false;
    // reverse reachability via in-lists
    std::vector<char> seen(d.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : d.in_neighbours(v))
            if (! seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

inline bool is_eulerian(const Digraph &d)
{
    for (Vertex v = 0; v < d.order(); ++v)
        if (d.out_degree(v) != d.in_degree(v))
            return false;
    return is_weakly_connected(d);
}

inline Digraph complement(const Digraph &d)
{
    std::vector<Arc> arcs;
    const int n = d.order();
    arcs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) - d.size());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && ! d.has_arc(u, v))
                arcs.push_back({u, v});
    return Digraph::build(n, arcs);
}

inline Digraph reverse(const Digraph &d)
{
    std::vector<Arc> arcs;
    arcs.reserve(d.size());
    for (const Arc &a : d.arcs())
        arcs.push_back({a.head, a.tail});
    return Digraph::build(d.order(), arcs);
}

/// Same vertex set, arc set A(d) plus `extra`.
inline Digraph with_arcs(const Digraph &d, std::span<const Arc> extra)
{
    std::vector<Arc> arcs = d.arcs();
    arcs.insert(arcs.end(), extra.begin(), extra.end());
    return Digraph::build(d.order(), arcs);
}

/// Same vertex set, arc set A(d) minus `removed` (arcs not present are ignored).
inline Digraph without_arcs(const Digraph &d, std::span<const Arc> removed)
{
    std::vector<Arc> arcs;
    arcs.reserve(d.size());
    for (const Arc &a : d.arcs())
        if (std::find(removed.begin(), removed.end(), a) == removed.end())
            arcs.push_back(a);
    return Digraph::build(d.order(), arcs);
}

inline DegreeSummary degree_summary(const Digraph &d)
{
    if (d.order() < 1)
        throw InvalidDigraph("degree summary of the empty digraph");
    DegreeSummary s{d.out_degree(0), d.in_degree(0), 0};
    for (Vertex v = 1; v < d.order(); ++v) {
        s.delta_plus = std::min(s.delta_plus, d.out_degree(v));
        s.delta_minus = std::min(s.delta_minus, d.in_degree(v));
    }
    s.delta_zero = std::min(s.delta_plus, s.delta_minus);
    return s;
}

} // namespace pendant
