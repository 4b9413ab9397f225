#pragma once

#include <pendant/bounds.hpp>
#include <pendant/digraph.hpp>
#include <pendant/oracles.hpp>
#include <pendant/steiner.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pendant {

struct SolveStats
{
    std::size_t trees_enumerated = 0; ///< minimal trees seen
    std::size_t candidate_sets = 0;   ///< inclusion-minimal internal vertex sets kept
    std::size_t search_nodes = 0;     ///< branch-and-bound nodes
    std::size_t enumeration_nodes = 0;
};

struct SolveResult
{
    int value = 0;
    Packing certificate;
    /// True when the search stopped at the requested target: value means "at least".
    bool lower_bound_only = false;
    int upper_bound = 0; ///< the closed-form bound checked before searching
    SolveStats stats;
};

namespace detail {

    using VertexSet = boost::dynamic_bitset<>;

    /// Maximum packing of pairwise disjoint internal sets, branching on r's out-neighbours.
    class PackingSearch
    {
    public:
        struct Item
        {
            VertexSet internal;
            PendantTree tree;
        };

        PackingSearch(const Digraph &d, const TerminalSpec &spec, std::vector<Item> items, int cap)
            : d_(d), spec_(spec), items_(std::move(items)), cap_(cap)
        {
            const int n = d.order();
            for (Vertex x : d.out_neighbours(spec.root()))
                if (! spec.contains(x))
                    candidates_.push_back(x);
            std::vector<int> slot(n, -1);
            for (std::size_t i = 0; i < candidates_.size(); ++i)
                slot[candidates_[i]] = static_cast<int>(i);
            by_candidate_.resize(candidates_.size());
            for (std::size_t i = 0; i < items_.size(); ++i) {
                int first = -1;
                for (std::size_t v = items_[i].internal.find_first(); v != VertexSet::npos;
                     v = items_[i].internal.find_next(v))
                    if (slot[v] >= 0 && (first < 0 || slot[v] < first))
                        first = slot[v];
                if (first >= 0)
                    by_candidate_[first].push_back(i);
            }
            for (Vertex s : spec.sinks()) {
                std::vector<Vertex> parents;
                for (Vertex w : d.in_neighbours(s))
                    if (! spec.contains(w))
                        parents.push_back(w);
                sink_parents_.push_back(std::move(parents));
            }
            used_.resize(n);
        }

        /// Stops once `cap` sets are packed.
        std::vector<std::size_t> run()
        {
            recurse(0);
            return best_;
        }

        [[nodiscard]] std::size_t nodes() const { return nodes_; }

    private:
        int bound(std::size_t from) const
        {
            int open = 0;
            for (std::size_t i = from; i < candidates_.size(); ++i)
                if (! used_[candidates_[i]])
                    ++open;
            for (const auto &parents : sink_parents_) {
                int free = 0;
                for (Vertex w : parents)
                    if (! used_[w])
                        ++free;
                open = std::min(open, free);
            }
            return static_cast<int>(chosen_.size()) + open;
        }

        void recurse(std::size_t pos)
        {
            ++nodes_;
            if (chosen_.size() > best_.size())
                best_ = chosen_;
            if (static_cast<int>(best_.size()) >= cap_ || pos == candidates_.size())
                return;
            if (bound(pos) <= static_cast<int>(best_.size()))
                return;
            if (! used_[candidates_[pos]]) {
                for (std::size_t i : by_candidate_[pos]) {
                    const VertexSet &set = items_[i].internal;
                    if (set.intersects(used_))
                        continue;
                    used_ |= set;
                    chosen_.push_back(i);
                    recurse(pos + 1);
                    chosen_.pop_back();
                    used_ -= set;
                    if (static_cast<int>(best_.size()) >= cap_)
                        return;
                    if (bound(pos) <= static_cast<int>(best_.size()))
                        return;
                }
            }
            recurse(pos + 1);
        }

        const Digraph &d_;
        const TerminalSpec &spec_;
        std::vector<Item> items_;
        int cap_;
        std::vector<Vertex> candidates_;
        std::vector<std::vector<std::size_t>> by_candidate_;
        std::vector<std::vector<Vertex>> sink_parents_;
        VertexSet used_;
        std::vector<std::size_t> chosen_, best_;
        std::size_t nodes_ = 0;

    public:
        [[nodiscard]] const std::vector<Item> &items() const { return items_; }
    };

} // namespace detail

/**
 * Exact tau_{S,r}(D) with a certificate packing.
 *
 * Minimal pendant trees are grouped by internal vertex set; only
 * inclusion-minimal sets are kept (a subset of a feasible set serves every
 * packing the superset does), and a branch and bound over r's non-terminal
 * out-neighbours packs disjoint sets. With `target`, the search stops as soon
 * as `target` trees are found and `lower_bound_only` is set.
 */
inline SolveResult solve_tau_sr(const Digraph &d, const TerminalSpec &spec, std::optional<int> target = std::nullopt)
{
    if (spec.host_order() != d.order())
        throw InvalidDigraph("terminal spec was built for a digraph of a different order");
    SolveResult res;
    res.certificate.spec = spec;
    res.upper_bound = spec_upper_bound(d, spec);
    const int n = d.order();
    const Vertex r = spec.root();

    if (target && *target <= 0) {
        res.lower_bound_only = true;
        return res;
    }
    if (res.upper_bound == 0)
        return res;

    const bool direct = spec.k() == 2 && d.has_arc(r, spec.sinks().front());
    const int fixed = direct ? 1 : 0;
    int cap = res.upper_bound - fixed;
    if (target)
        cap = std::min(cap, *target - fixed);
    std::vector<PendantTree> trees;
    if (direct)
        trees.push_back(make_tree(r, {{r, spec.sinks().front()}}));
    auto finish = [&] {
        std::sort(trees.begin(), trees.end());
        res.value = static_cast<int>(trees.size());
        res.certificate.trees = std::move(trees);
        res.lower_bound_only = target && res.value >= *target;
        return res;
    };
    if (cap <= 0)
        return finish();

    std::map<detail::VertexSet, PendantTree> by_set;
    res.stats.enumeration_nodes = for_each_pendant_tree(d, spec, [&](const std::vector<Arc> &arcs) {
        ++res.stats.trees_enumerated;
        detail::VertexSet set(n);
        for (const Arc &a : arcs)
            for (Vertex v : {a.tail, a.head})
                if (! spec.contains(v))
                    set.set(v);
        if (set.none())
            return; // the direct arc r->s when k = 2, counted separately
        PendantTree t{r, arcs};
        auto it = by_set.find(set);
        if (it == by_set.end())
            by_set.emplace(std::move(set), std::move(t));
        else if (t < it->second)
            it->second = std::move(t);
    });

    std::vector<detail::PackingSearch::Item> items;
    {
        std::vector<std::pair<detail::VertexSet, PendantTree>> all(by_set.begin(), by_set.end());
        std::stable_sort(all.begin(), all.end(),
                         [](const auto &a, const auto &b) { return a.first.count() < b.first.count(); });
        for (auto &[set, tree] : all) {
            bool dominated = std::any_of(items.begin(), items.end(),
                                         [&](const auto &kept) { return kept.internal.is_subset_of(set); });
            if (! dominated)
                items.push_back({set, tree});
        }
        std::sort(items.begin(), items.end(), [](const auto &a, const auto &b) { return a.tree < b.tree; });
    }
    res.stats.candidate_sets = items.size();

    detail::PackingSearch search(d, spec, std::move(items), cap);
    auto chosen = search.run();
    res.stats.search_nodes = search.nodes();
    for (std::size_t i : chosen)
        trees.push_back(search.items()[i].tree);
    return finish();
}

struct TauKOptions
{
    /// Worker threads for independent (S, r) solves; 0 reads PENDANT_THREADS, defaulting to 1.
    int threads = 0;
    /// Solve every spec exactly and keep all values (disables target pruning).
    bool keep_per_spec = false;
};

struct TauKResult
{
    int value = 0;
    TerminalSpec witness_spec;
    std::optional<std::map<TerminalSpec, int>> per_spec;
    bool zero_rule_applied = false;
};

inline int default_thread_count()
{
    if (const char *env = std::getenv("PENDANT_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 256)
            return static_cast<int>(v);
    }
    return 1;
}

/**
 * tau_k(D): minimum of tau_{S,r} over every |S| = k and r in S.
 *
 * The witness is the lexicographically first spec (subset order, then root)
 * attaining the minimum, independent of the number of threads. Specs after
 * the first are only solved far enough to tell whether they beat the
 * current minimum.
 */
inline TauKResult solve_tau_k(const Digraph &d, int k, TauKOptions options = {})
{
    const int n = d.order();
    if (k < 2 || k > n)
        throw InvalidDigraph("tau_k needs 2 <= k <= n");
    std::vector<TerminalSpec> specs;
    for_each_terminal_spec(n, k, [&](const TerminalSpec &s) {
        specs.push_back(s);
        return true;
    });
    const int threads = std::max(1, options.threads > 0 ? options.threads : default_thread_count());
    TauKResult out;

    if (options.keep_per_spec) {
        std::vector<int> values(specs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < specs.size();)
                values[i] = solve_tau_sr(d, specs[i]).value;
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto &t : pool)
            t.join();
        out.per_spec.emplace();
        std::size_t best = 0;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            out.per_spec->emplace(specs[i], values[i]);
            if (values[i] < values[best])
                best = i;
        }
        out.value = values[best];
        out.witness_spec = specs[best];
        return out;
    }

    if (k >= 3 && zero_rule(d, k)) {
        for (const auto &s : specs)
            if (solve_tau_sr(d, s, 1).value == 0) {
                out.value = 0;
                out.witness_spec = s;
                out.zero_rule_applied = true;
                return out;
            }
        // unreachable if the zero rule is sound; fall through to the exact scan
    }

    // status: -1 unsolved, otherwise the value; `at_least` marks early stops.
    std::vector<int> value(specs.size(), -1);
    std::vector<char> at_least(specs.size(), 0);
    std::atomic<int> best{std::numeric_limits<int>::max()};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
            int cur = best.load();
            if (cur == 0)
                return;
            auto res = cur == std::numeric_limits<int>::max() ? solve_tau_sr(d, specs[i])
                                                              : solve_tau_sr(d, specs[i], cur);
            value[i] = res.value;
            at_least[i] = res.lower_bound_only ? 1 : 0;
            if (! res.lower_bound_only) {
                int seen = best.load();
                while (res.value < seen && ! best.compare_exchange_weak(seen, res.value)) {
                }
            }
        }
    };
    if (threads == 1)
        worker();
    else {
        // solve the first spec alone so every later solve has a target
        if (! specs.empty()) {
            next = 1;
            auto res = solve_tau_sr(d, specs[0]);
            value[0] = res.value;
            best = res.value;
        }
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }

    const int m = best.load();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        bool hit = false;
        if (value[i] < 0)
            hit = solve_tau_sr(d, specs[i], m + 1).value == m;
        else if (! at_least[i])
            hit = value[i] == m;
        else if (value[i] <= m)
            hit = solve_tau_sr(d, specs[i], m + 1).value == m;
        if (hit) {
            out.value = m;
            out.witness_spec = specs[i];
            return out;
        }
    }
    throw std::logic_error("tau_k scan lost its witness");
}

struct SymmetricDecision
{
    bool holds = false;
    std::optional<Packing> certificate;
    std::size_t tuples_examined = 0;
};

/**
 * Decides tau_{S,r}(D) >= ell on a symmetric digraph by the skeleton-tuple
 * procedure: pick ell skeletons with pairwise disjoint branch sets, keep the
 * skeleton arcs already present in D, and realize every other skeleton arc by
 * a path in D - A(D[S]) whose interior avoids S and every branch vertex of the
 * tuple. Path interiors are also pairwise disjoint and arc-disjoint.
 *
 * For k = 2 the single skeleton arc r->s can be kept by only one tree; later
 * copies in the tuple are realized by paths instead.
 */
inline SymmetricDecision decide_tau_symmetric(const Digraph &d, const TerminalSpec &spec, int ell)
{
    if (! is_symmetric(d))
        throw InvalidDigraph("decide_tau_symmetric needs a symmetric digraph");
    if (ell < 1)
        throw InvalidDigraph("ell must be at least 1");
    SymmetricDecision out;
    const int n = d.order();
    const auto skeletons = enumerate_skeletons(d, spec);

    std::vector<Arc> inside;
    for (const Arc &a : d.arcs())
        if (spec.contains(a.tail) && spec.contains(a.head))
            inside.push_back(a);
    const Digraph host = without_arcs(d, inside);

    std::vector<std::size_t> tuple;
    std::vector<char> branch_used(n, 0);

    auto realize = [&]() -> std::optional<Packing> {
        ++out.tuples_examined;
        std::vector<char> kept(static_cast<std::size_t>(n) * n, 0);
        std::vector<std::vector<Arc>> tree_arcs(tuple.size());
        std::vector<std::pair<Vertex, Vertex>> pairs;
        std::vector<std::size_t> owner;
        for (std::size_t t = 0; t < tuple.size(); ++t)
            for (const Arc &a : skeletons[tuple[t]].arcs) {
                char &cell = kept[static_cast<std::size_t>(a.tail) * n + a.head];
                if (d.has_arc(a) && ! cell) {
                    cell = 1;
                    tree_arcs[t].push_back(a);
                }
                else {
                    pairs.emplace_back(a.tail, a.head);
                    owner.push_back(t);
                }
            }
        std::vector<Vertex> forbidden = spec.members();
        for (Vertex v = 0; v < n; ++v)
            if (branch_used[v])
                forbidden.push_back(v);
        // kept arcs are off limits to the paths
        std::vector<Arc> kept_arcs;
        for (const auto &ta : tree_arcs)
            kept_arcs.insert(kept_arcs.end(), ta.begin(), ta.end());
        const Digraph paths_host = kept_arcs.empty() ? host : without_arcs(host, kept_arcs);
        auto paths = constrained_disjoint_paths(paths_host, pairs, forbidden);
        if (! paths)
            return std::nullopt;
        for (std::size_t p = 0; p < paths->size(); ++p) {
            const Path &path = (*paths)[p];
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                tree_arcs[owner[p]].push_back({path[i], path[i + 1]});
        }
        Packing packing{spec, {}};
        for (auto &ta : tree_arcs)
            packing.trees.push_back(make_tree(spec.root(), std::move(ta)));
        std::sort(packing.trees.begin(), packing.trees.end());
        if (! validate_packing(d, packing).ok())
            return std::nullopt;
        return packing;
    };

    auto search = [&](auto &self, std::size_t from) -> bool {
        if (static_cast<int>(tuple.size()) == ell) {
            if (auto p = realize()) {
                out.certificate = std::move(p);
                return true;
            }
            return false;
        }
        for (std::size_t i = from; i < skeletons.size(); ++i) {
            const auto &branch = skeletons[i].branch_set;
            if (std::any_of(branch.begin(), branch.end(), [&](Vertex v) { return branch_used[v]; }))
                continue;
            for (Vertex v : branch)
                branch_used[v] = 1;
            tuple.push_back(i);
            bool found = self(self, i);
            tuple.pop_back();
            for (Vertex v : branch)
                branch_used[v] = 0;
            if (found)
                return true;
        }
        return false;
    };
    out.holds = search(search, 0);
    return out;
}

} // namespace pendant
