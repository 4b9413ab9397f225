#pragma once

#include <pendant/digraph.hpp>
#include <pendant/steiner.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <vector>

// Closed-form upper bounds on tau_{S,r} and tau_k. None of these need a
// packing search, so the solvers use them for pruning.

namespace pendant {

/// |(V \ S, S \ {r})|: arcs entering a non-root terminal from outside S.
inline int boundary_arcs(const Digraph &d, const TerminalSpec &spec)
{
    int count = 0;
    for (Vertex s : spec.sinks())
        for (Vertex w : d.in_neighbours(s))
            if (! spec.contains(w))
                ++count;
    return count;
}

/// floor(|(V \ S, S \ {r})| / (k-1)) for one terminal spec.
inline int cut_value(const Digraph &d, const TerminalSpec &spec)
{
    return boundary_arcs(d, spec) / (spec.k() - 1);
}

/// Minimum of cut_value over every (S, r) with |S| = k. Requires 3 <= k <= n.
inline int bound_cut(const Digraph &d, int k, std::map<TerminalSpec, int> *per_spec = nullptr)
{
    if (k < 3 || k > d.order())
        throw InvalidDigraph("cut bound needs 3 <= k <= n");
    int best = std::numeric_limits<int>::max();
    for_each_terminal_spec(d.order(), k, [&](const TerminalSpec &spec) {
        int c = cut_value(d, spec);
        if (per_spec)
            per_spec->emplace(spec, c);
        best = std::min(best, c);
        return per_spec != nullptr || best > 0;
    });
    return best;
}

inline int bound_semidegree(const Digraph &d)
{
    auto s = degree_summary(d);
    return std::min(s.delta_plus, s.delta_minus);
}

/// k >= max(delta0 + 1, 3): some (S, r) of size k has no pendant tree at all.
inline bool zero_rule(const Digraph &d, int k)
{
    return k >= std::max(degree_summary(d).delta_zero + 1, 3);
}

/**
 * The (S, r) that makes tau_{S,r} = 0 when zero_rule fires: either a
 * minimum out-degree root with all its out-neighbours in S, or a minimum
 * in-degree terminal with all its in-neighbours in S (one of them the root).
 * Remaining places are filled with the smallest unused ids.
 */
inline std::optional<TerminalSpec> zero_rule_witness(const Digraph &d, int k)
{
    if (! zero_rule(d, k) || k > d.order())
        return std::nullopt;
    const int n = d.order();
    auto summary = degree_summary(d);
    std::vector<char> in_s(n, 0);
    Vertex root = -1;
    auto fill = [&](std::vector<Vertex> forced) {
        for (Vertex v : forced)
            in_s[v] = 1;
        int have = static_cast<int>(std::count(in_s.begin(), in_s.end(), 1));
        for (Vertex v = 0; v < n && have < k; ++v)
            if (! in_s[v]) {
                in_s[v] = 1;
                ++have;
            }
    };
    if (summary.delta_plus <= summary.delta_minus) {
        Vertex v = 0;
        while (d.out_degree(v) != summary.delta_plus)
            ++v;
        root = v;
        std::vector<Vertex> forced = d.out_neighbours(v);
        forced.push_back(v);
        fill(forced);
    }
    else {
        Vertex u = 0;
        while (d.in_degree(u) != summary.delta_minus)
            ++u;
        std::vector<Vertex> forced = d.in_neighbours(u);
        root = forced.empty() ? (u == 0 ? 1 : 0) : forced.front();
        forced.push_back(u);
        forced.push_back(root);
        fill(forced);
    }
    std::vector<Vertex> sinks;
    for (Vertex v = 0; v < n; ++v)
        if (in_s[v] && v != root)
            sinks.push_back(v);
    return TerminalSpec::make(n, root, std::move(sinks));
}

/**
 * Upper bounds on tau_{S,r} that hold for one spec:
 * for k >= 3 the cut bound, |N+(r) \ S| and min over sinks of |N-(s) \ S|;
 * for k = 2 the direct arc r->s plus the smaller of the two outside degrees.
 */
inline int spec_upper_bound(const Digraph &d, const TerminalSpec &spec)
{
    auto outside = [&](const std::vector<Vertex> &vs) {
        return static_cast<int>(std::count_if(vs.begin(), vs.end(), [&](Vertex v) { return ! spec.contains(v); }));
    };
    int bound = outside(d.out_neighbours(spec.root()));
    for (Vertex s : spec.sinks())
        bound = std::min(bound, outside(d.in_neighbours(s)));
    if (spec.k() == 2)
        return bound + (d.has_arc(spec.root(), spec.sinks().front()) ? 1 : 0);
    return std::min(bound, cut_value(d, spec));
}

struct BoundsReport
{
    int order_bound = 0;      ///< n - k
    int semidegree_bound = 0; ///< min(delta+, delta-)
    bool zero_rule_fires = false;
    int cut_bound = 0;
    std::optional<std::map<TerminalSpec, int>> per_spec_cut;
};

inline BoundsReport bounds_report(const Digraph &d, int k, bool keep_per_spec = false)
{
    BoundsReport r;
    r.order_bound = d.order() - k;
    r.semidegree_bound = bound_semidegree(d);
    r.zero_rule_fires = zero_rule(d, k);
    if (keep_per_spec) {
        r.per_spec_cut.emplace();
        r.cut_bound = bound_cut(d, k, &*r.per_spec_cut);
    }
    else
        r.cut_bound = bound_cut(d, k);
    return r;
}

} // namespace pendant
