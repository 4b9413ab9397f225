#pragma once

#include <pendant/digraph.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace pendant {

/**
 * A terminal set S together with its root r.
 *
 * `sinks` holds S \ {r} in ascending order; the root is kept separately so
 * that "root first" text forms round-trip without reordering.
 */
class TerminalSpec
{
public:
    TerminalSpec() = default;

    /// Throws InvalidDigraph unless r is not repeated, every id lies in 0..n-1 and 2 <= k <= n.
    static TerminalSpec make(int n, Vertex root, std::vector<Vertex> sinks)
    {
        std::sort(sinks.begin(), sinks.end());
        if (std::adjacent_find(sinks.begin(), sinks.end()) != sinks.end())
            throw InvalidDigraph("terminal listed twice");
        if (std::find(sinks.begin(), sinks.end(), root) != sinks.end())
            throw InvalidDigraph("root listed among the other terminals");
        auto bad = [n](Vertex v) { return v < 0 || v >= n; };
        if (bad(root) || std::any_of(sinks.begin(), sinks.end(), bad))
            throw InvalidDigraph("terminal id out of range");
        if (sinks.empty())
            throw InvalidDigraph("a terminal set needs at least two vertices");
        TerminalSpec s;
        s.root_ = root;
        s.sinks_ = std::move(sinks);
        s.order_ = n;
        return s;
    }

    [[nodiscard]] Vertex root() const { return root_; }
    [[nodiscard]] const std::vector<Vertex> &sinks() const { return sinks_; }
    [[nodiscard]] int k() const { return static_cast<int>(sinks_.size()) + 1; }
    [[nodiscard]] int host_order() const { return order_; }

    [[nodiscard]] bool contains(Vertex v) const
    {
        return v == root_ || std::binary_search(sinks_.begin(), sinks_.end(), v);
    }

    /// S in ascending order.
    [[nodiscard]] std::vector<Vertex> members() const
    {
        std::vector<Vertex> all = sinks_;
        all.insert(std::upper_bound(all.begin(), all.end(), root_), root_);
        return all;
    }

    [[nodiscard]] std::vector<char> mask(int n) const
    {
        std::vector<char> m(n, 0);
        m[root_] = 1;
        for (Vertex s : sinks_)
            m[s] = 1;
        return m;
    }

    friend bool operator==(const TerminalSpec &a, const TerminalSpec &b)
    {
        return a.root_ == b.root_ && a.sinks_ == b.sinks_;
    }
    friend auto operator<=>(const TerminalSpec &a, const TerminalSpec &b)
    {
        if (auto c = a.members() <=> b.members(); c != 0)
            return c;
        return a.root_ <=> b.root_;
    }

private:
    Vertex root_ = 0;
    std::vector<Vertex> sinks_;
    int order_ = 0;
};

/**
 * Visits every (S, r) with |S| = k over vertices 0..n-1: subsets in
 * lexicographic order, roots ascending within a subset. The visitor returns
 * false to stop.
 */
template <typename Visitor>
void for_each_terminal_spec(int n, int k, Visitor &&visit)
{
    if (k < 2 || k > n)
        return;
    std::vector<Vertex> members(k);
    std::iota(members.begin(), members.end(), 0);
    for (;;) {
        for (int ri = 0; ri < k; ++ri) {
            std::vector<Vertex> sinks;
            sinks.reserve(k - 1);
            for (int j = 0; j < k; ++j)
                if (j != ri)
                    sinks.push_back(members[j]);
            if (! visit(TerminalSpec::make(n, members[ri], std::move(sinks))))
                return;
        }
        int i = k - 1;
        while (i >= 0 && members[i] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++members[i];
        for (int j = i + 1; j < k; ++j)
            members[j] = members[j - 1] + 1;
    }
}

struct PendantTree
{
    Vertex root = 0;
    std::vector<Arc> arcs; ///< sorted ascending

    [[nodiscard]] std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> vs{root};
        for (const Arc &a : arcs) {
            vs.push_back(a.tail);
            vs.push_back(a.head);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    friend bool operator==(const PendantTree &, const PendantTree &) = default;
    friend auto operator<=>(const PendantTree &a, const PendantTree &b) { return a.arcs <=> b.arcs; }
};

inline PendantTree make_tree(Vertex root, std::vector<Arc> arcs)
{
    std::sort(arcs.begin(), arcs.end());
    return PendantTree{root, std::move(arcs)};
}

struct Packing
{
    TerminalSpec spec;
    std::vector<PendantTree> trees;
};

struct Skeleton
{
    TerminalSpec spec;
    std::vector<Vertex> branch_set; ///< R, ascending, disjoint from S
    std::vector<Arc> arcs;          ///< abstract arcs over S u R, ascending

    friend bool operator==(const Skeleton &a, const Skeleton &b)
    {
        return a.branch_set == b.branch_set && a.arcs == b.arcs;
    }
};

enum class TreeDefect
{
    none,
    not_a_tree,
    wrong_root,
    terminal_degree,
    arc_not_in_host,
};

inline std::string_view to_string(TreeDefect d)
{
    switch (d) {
    case TreeDefect::none: return "ok";
    case TreeDefect::not_a_tree: return "not-a-tree";
    case TreeDefect::wrong_root: return "wrong-root";
    case TreeDefect::terminal_degree: return "terminal-degree";
    case TreeDefect::arc_not_in_host: return "arc-not-in-host";
    }
    return "unknown";
}

struct TreeCheck
{
    TreeDefect defect = TreeDefect::none;
    [[nodiscard]] bool ok() const { return defect == TreeDefect::none; }
    explicit operator bool() const { return ok(); }
};

inline TreeCheck validate_pendant_tree(const Digraph &d, const TerminalSpec &spec, const PendantTree &t)
{
    const int n = d.order();
    for (const Arc &a : t.arcs)
        if (! d.has_arc(a))
            return {TreeDefect::arc_not_in_host};
    if (t.root < 0 || t.root >= n || spec.root() >= n || (! spec.sinks().empty() && spec.sinks().back() >= n))
        return {TreeDefect::arc_not_in_host};
    if (t.root != spec.root())
        return {TreeDefect::wrong_root};

    // Out-tree: root has in-degree 0, every other vertex in-degree 1, all reachable from root.
    std::vector<int> indeg(n, 0), deg(n, 0);
    std::vector<std::vector<Vertex>> children(n);
    std::vector<char> present(n, 0);
    present[t.root] = 1;
    for (std::size_t i = 0; i < t.arcs.size(); ++i) {
        const Arc &a = t.arcs[i];
        if (i > 0 && t.arcs[i - 1] == a)
            return {TreeDefect::not_a_tree};
        ++indeg[a.head];
        ++deg[a.head];
        ++deg[a.tail];
        present[a.tail] = present[a.head] = 1;
        children[a.tail].push_back(a.head);
    }
    if (indeg[t.root] != 0)
        return {TreeDefect::not_a_tree};
    int vertex_count = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (! present[v])
            continue;
        ++vertex_count;
        if (v != t.root && indeg[v] != 1)
            return {TreeDefect::not_a_tree};
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{t.root};
    seen[t.root] = 1;
    int reached = 1;
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : children[v])
            if (! seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != vertex_count)
        return {TreeDefect::not_a_tree};

    if (deg[spec.root()] != 1)
        return {TreeDefect::terminal_degree};
    for (Vertex s : spec.sinks())
        if (deg[s] != 1)
            return {TreeDefect::terminal_degree};
    return {};
}

enum class PackingDefect
{
    none,
    bad_tree,
    shared_arc,
    shared_internal_vertex,
};

inline std::string_view to_string(PackingDefect d)
{
    switch (d) {
    case PackingDefect::none: return "ok";
    case PackingDefect::bad_tree: return "bad-tree";
    case PackingDefect::shared_arc: return "shared-arc";
    case PackingDefect::shared_internal_vertex: return "shared-internal-vertex";
    }
    return "unknown";
}

struct PackingCheck
{
    PackingDefect defect = PackingDefect::none;
    std::size_t first = 0;  ///< offending tree (or first of the offending pair)
    std::size_t second = 0; ///< second tree of the offending pair
    TreeDefect tree_defect = TreeDefect::none;

    [[nodiscard]] bool ok() const { return defect == PackingDefect::none; }
    explicit operator bool() const { return ok(); }
};

inline PackingCheck validate_packing(const Digraph &d, const Packing &p)
{
    for (std::size_t i = 0; i < p.trees.size(); ++i)
        if (auto c = validate_pendant_tree(d, p.spec, p.trees[i]); ! c)
            return {PackingDefect::bad_tree, i, i, c.defect};

    std::vector<std::vector<Vertex>> internals;
    internals.reserve(p.trees.size());
    for (const auto &t : p.trees) {
        auto vs = t.vertices();
        std::erase_if(vs, [&](Vertex v) { return p.spec.contains(v); });
        internals.push_back(std::move(vs));
    }
    for (std::size_t i = 0; i < p.trees.size(); ++i)
        for (std::size_t j = i + 1; j < p.trees.size(); ++j) {
            const auto &a = p.trees[i].arcs, &b = p.trees[j].arcs;
            std::vector<Arc> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (! common.empty())
                return {PackingDefect::shared_arc, i, j, TreeDefect::none};
            std::vector<Vertex> shared;
            std::set_intersection(internals[i].begin(), internals[i].end(), internals[j].begin(),
                                  internals[j].end(), std::back_inserter(shared));
            if (! shared.empty())
                return {PackingDefect::shared_internal_vertex, i, j, TreeDefect::none};
        }
    return {};
}

/// Vertices of `t` outside S, ascending.
inline std::vector<Vertex> internal_vertices(const PendantTree &t, const TerminalSpec &spec)
{
    auto vs = t.vertices();
    std::erase_if(vs, [&](Vertex v) { return spec.contains(v); });
    return vs;
}

/// Contracts the degree-two non-terminals of a minimal pendant tree.
inline Skeleton skeleton_of(const PendantTree &t, const TerminalSpec &spec)
{
    std::vector<Vertex> parent_of;
    Vertex max_id = t.root;
    for (const Arc &a : t.arcs)
        max_id = std::max({max_id, a.tail, a.head});
    parent_of.assign(max_id + 1, -1);
    std::vector<int> outdeg(max_id + 1, 0);
    for (const Arc &a : t.arcs) {
        parent_of[a.head] = a.tail;
        ++outdeg[a.tail];
    }
    Skeleton s;
    s.spec = spec;
    for (Vertex v : t.vertices())
        if (! spec.contains(v) && outdeg[v] >= 2)
            s.branch_set.push_back(v);
    auto kept = [&](Vertex v) {
        return v == t.root || std::binary_search(s.branch_set.begin(), s.branch_set.end(), v);
    };
    std::vector<Vertex> lower = spec.sinks();
    lower.insert(lower.end(), s.branch_set.begin(), s.branch_set.end());
    for (Vertex v : lower) {
        Vertex u = parent_of[v];
        while (u >= 0 && ! kept(u))
            u = parent_of[u];
        s.arcs.push_back({u, v});
    }
    std::sort(s.arcs.begin(), s.arcs.end());
    return s;
}

/**
 * Every skeleton shape for `spec` over branch sets drawn from V(D) \ S.
 *
 * A skeleton is an out-tree on S u R rooted at r where r has one child, the
 * other terminals are leaves and every vertex of R has at least two
 * children (so |R| <= k-2). Arcs are abstract: they need not exist in D.
 * The visitor returns false to stop the enumeration early.
 */
template <typename Visitor>
void for_each_skeleton(const Digraph &d, const TerminalSpec &spec, Visitor &&visit)
{
    const int k = spec.k();
    std::vector<Vertex> free;
    for (Vertex v = 0; v < d.order(); ++v)
        if (! spec.contains(v))
            free.push_back(v);

    const std::vector<Vertex> &sinks = spec.sinks();
    std::vector<Vertex> branch;

    // Checks one parent assignment: parents[i] indexes into {r} u R (0 = r).
    auto emit_shapes = [&](const std::vector<Vertex> &R) -> bool {
        const int rcount = static_cast<int>(R.size());
        const int children = (k - 1) + rcount; // sinks first, then R
        std::vector<int> parents(children, 0);
        std::vector<int> outdeg(rcount + 1);
        for (;;) {
            std::fill(outdeg.begin(), outdeg.end(), 0);
            bool ok = true;
            for (int c = 0; c < children; ++c) {
                // a branch vertex may not be its own parent
                if (c >= k - 1 && parents[c] == c - (k - 1) + 1)
                    ok = false;
                ++outdeg[parents[c]];
            }
            ok = ok && outdeg[0] == 1;
            for (int b = 1; ok && b <= rcount; ++b)
                ok = outdeg[b] >= 2;
            if (ok) {
                // every branch vertex must lead back to r
                for (int b = 0; ok && b < rcount; ++b) {
                    int cur = b, steps = 0;
                    while (steps <= rcount) {
                        int p = parents[(k - 1) + cur];
                        if (p == 0)
                            break;
                        cur = p - 1;
                        ++steps;
                    }
                    ok = steps <= rcount;
                }
            }
            if (ok) {
                Skeleton s;
                s.spec = spec;
                s.branch_set = R;
                auto name = [&](int p) { return p == 0 ? spec.root() : R[p - 1]; };
                for (int c = 0; c < k - 1; ++c)
                    s.arcs.push_back({name(parents[c]), sinks[c]});
                for (int b = 0; b < rcount; ++b)
                    s.arcs.push_back({name(parents[(k - 1) + b]), R[b]});
                std::sort(s.arcs.begin(), s.arcs.end());
                if (! visit(s))
                    return false;
            }
            int pos = 0;
            while (pos < children && ++parents[pos] > rcount) {
                parents[pos] = 0;
                ++pos;
            }
            if (pos == children)
                return true;
        }
    };

    // Branch sets by increasing size, lexicographic within a size.
    for (int size = 0; size <= std::min<int>(k - 2, static_cast<int>(free.size())); ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            branch.clear();
            for (int i : idx)
                branch.push_back(free[i]);
            if (! emit_shapes(branch))
                return;
            int i = size - 1;
            while (i >= 0 && idx[i] == static_cast<int>(free.size()) - size + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
}

inline std::vector<Skeleton> enumerate_skeletons(const Digraph &d, const TerminalSpec &spec)
{
    std::vector<Skeleton> out;
    for_each_skeleton(d, spec, [&](const Skeleton &s) {
        out.push_back(s);
        return true;
    });
    return out;
}

enum class TreeScope
{
    minimal, ///< degree-one vertices are exactly S
    all,     ///< every pendant (S,r)-tree, including ones with non-terminal leaves
};

namespace detail {

    /**
     * Include/exclude search over frontier arcs. Each out-tree is reached
     * along exactly one branch: the chosen arc is either in it or excluded
     * for the rest of the branch.
     */
    class TreeEnumerator
    {
    public:
        using Visitor = std::function<bool(const std::vector<Arc> &)>;

        TreeEnumerator(const Digraph &d, const TerminalSpec &spec, TreeScope scope) :
            d_(d),
            n_(d.order()),
            root_(spec.root()),
            k_(spec.k()),
            scope_(scope),
            terminal_(spec.mask(d.order())),
            in_tree_(n_, 0),
            tree_out_(n_, 0),
            excluded_(static_cast<std::size_t>(n_) * n_, 0),
            reach_(n_, 0)
        {
            in_tree_[root_] = 1;
            missing_ = k_ - 1;
        }

        std::size_t run(const Visitor &visit)
        {
            visit_ = &visit;
            recurse();
            return nodes_;
        }

    private:
        [[nodiscard]] bool excluded(Vertex u, Vertex v) const
        {
            return excluded_[static_cast<std::size_t>(u) * n_ + v] != 0;
        }
        [[nodiscard]] bool extendable(Vertex u) const
        {
            return in_tree_[u] && (u == root_ ? ! root_has_child_ : ! terminal_[u]);
        }
        [[nodiscard]] bool allowed(Vertex u, Vertex v) const
        {
            return ! in_tree_[v] && ! excluded(u, v) && (u != root_ || k_ == 2 || ! terminal_[v]);
        }
        [[nodiscard]] std::optional<Vertex> first_candidate_from(Vertex u) const
        {
            for (Vertex v : d_.out_neighbours(u))
                if (allowed(u, v))
                    return v;
            return std::nullopt;
        }

        // Every missing terminal still has a possible parent reachable from the tree.
        bool feasible()
        {
            if (missing_ == 0)
                return true;
            std::fill(reach_.begin(), reach_.end(), 0);
            queue_.clear();
            for (Vertex v = 0; v < n_; ++v)
                if (extendable(v)) {
                    reach_[v] = 1;
                    queue_.push_back(v);
                }
            for (std::size_t h = 0; h < queue_.size(); ++h) {
                Vertex w = queue_[h];
                for (Vertex v : d_.out_neighbours(w))
                    if (! reach_[v] && ! terminal_[v] && allowed(w, v)) {
                        reach_[v] = 1;
                        queue_.push_back(v);
                    }
            }
            for (Vertex s = 0; s < n_; ++s) {
                if (! terminal_[s] || in_tree_[s])
                    continue;
                bool parent = false;
                for (Vertex w : d_.in_neighbours(s))
                    if (reach_[w] && allowed(w, s)) {
                        parent = true;
                        break;
                    }
                if (! parent)
                    return false;
            }
            return true;
        }

        bool choose(Arc &arc) const
        {
            if (scope_ == TreeScope::minimal) {
                std::optional<Vertex> leaf;
                for (Vertex v = 0; v < n_; ++v)
                    if (in_tree_[v] && ! terminal_[v] && tree_out_[v] == 0) {
                        auto c = first_candidate_from(v);
                        if (! c)
                            return false; // a non-terminal leaf that can never grow
                        if (! leaf) {
                            leaf = v;
                            arc = {v, *c};
                        }
                    }
                if (leaf)
                    return true;
            }
            for (Vertex u = 0; u < n_; ++u)
                if (extendable(u))
                    if (auto c = first_candidate_from(u)) {
                        arc = {u, *c};
                        return true;
                    }
            return false;
        }

        [[nodiscard]] bool complete_minimal() const
        {
            if (! root_has_child_)
                return false;
            for (Vertex v = 0; v < n_; ++v)
                if (in_tree_[v] && ! terminal_[v] && tree_out_[v] == 0)
                    return false;
            return true;
        }

        bool emit()
        {
            sorted_ = stack_;
            std::sort(sorted_.begin(), sorted_.end());
            return (*visit_)(sorted_);
        }

        bool recurse()
        {
            ++nodes_;
            if (scope_ == TreeScope::minimal && missing_ == 0)
                return complete_minimal() ? emit() : true;
            if (! feasible())
                return true;
            Arc arc;
            if (! choose(arc)) {
                if (scope_ == TreeScope::all && missing_ == 0 && root_has_child_)
                    return emit();
                return true;
            }

            include(arc);
            bool go_on = recurse();
            remove(arc);
            if (! go_on)
                return false;

            auto &cell = excluded_[static_cast<std::size_t>(arc.tail) * n_ + arc.head];
            cell = 1;
            go_on = recurse();
            cell = 0;
            return go_on;
        }

        void include(const Arc &a)
        {
            stack_.push_back(a);
            in_tree_[a.head] = 1;
            ++tree_out_[a.tail];
            if (a.tail == root_)
                root_has_child_ = true;
            if (terminal_[a.head])
                --missing_;
        }

        void remove(const Arc &a)
        {
            stack_.pop_back();
            in_tree_[a.head] = 0;
            --tree_out_[a.tail];
            if (a.tail == root_)
                root_has_child_ = false;
            if (terminal_[a.head])
                ++missing_;
        }

        const Digraph &d_;
        int n_;
        Vertex root_;
        int k_;
        TreeScope scope_;
        std::vector<char> terminal_;
        std::vector<char> in_tree_;
        std::vector<int> tree_out_;
        std::vector<char> excluded_;
        std::vector<char> reach_;
        std::vector<Vertex> queue_;
        std::vector<Arc> stack_, sorted_;
        bool root_has_child_ = false;
        int missing_ = 0;
        std::size_t nodes_ = 0;
        const Visitor *visit_ = nullptr;
    };

} // namespace detail

/// Streams pendant trees (arc lists, sorted) to `visit`; returns the number of search nodes.
template <typename Visitor>
std::size_t for_each_pendant_tree(const Digraph &d, const TerminalSpec &spec, Visitor &&visit,
                                  TreeScope scope = TreeScope::minimal)
{
    detail::TreeEnumerator e(d, spec, scope);
    detail::TreeEnumerator::Visitor v = [&](const std::vector<Arc> &arcs) -> bool {
        if constexpr (std::is_same_v<std::invoke_result_t<Visitor &, const std::vector<Arc> &>, void>) {
            visit(arcs);
            return true;
        }
        else
            return visit(arcs);
    };
    return e.run(v);
}

/// All minimal pendant (S,r)-trees (or all pendant trees), deduplicated and in lexicographic arc order.
inline std::vector<PendantTree> enumerate_pendant_trees(const Digraph &d, const TerminalSpec &spec,
                                                        TreeScope scope = TreeScope::minimal)
{
    std::vector<PendantTree> out;
    for_each_pendant_tree(
        d, spec, [&](const std::vector<Arc> &arcs) { out.push_back(PendantTree{spec.root(), arcs}); }, scope);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace pendant
