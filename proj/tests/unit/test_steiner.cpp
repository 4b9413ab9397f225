#include <pendant/generators.hpp>
#include <pendant/steiner.hpp>

#include "brute_force.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace pendant;

namespace {

std::vector<std::vector<Arc>> arc_lists(const std::vector<PendantTree> &ts)
{
    std::vector<std::vector<Arc>> out;
    for (const auto &t : ts)
        out.push_back(t.arcs);
    return out;
}

std::vector<std::vector<Arc>> arc_lists(const std::vector<brute::Tree> &ts)
{
    std::vector<std::vector<Arc>> out;
    for (const auto &t : ts)
        out.push_back(t.arcs);
    return out;
}

long long choose(int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    long long c = 1;
    for (int i = 1; i <= r; ++i)
        c = c * (n - r + i) / i;
    return c;
}

} // namespace

TEST(TerminalSpec, NormalisesAndValidates)
{
    auto s = TerminalSpec::make(5, 3, {4, 1});
    EXPECT_EQ(s.root(), 3);
    EXPECT_EQ(s.sinks(), (std::vector<Vertex>{1, 4}));
    EXPECT_EQ(s.k(), 3);
    EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 3, 4}));
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(0));
    EXPECT_THROW(TerminalSpec::make(5, 3, {}), InvalidDigraph);
    EXPECT_THROW(TerminalSpec::make(5, 3, {3, 1}), InvalidDigraph);
    EXPECT_THROW(TerminalSpec::make(5, 3, {1, 1}), InvalidDigraph);
    EXPECT_THROW(TerminalSpec::make(5, 3, {5}), InvalidDigraph);
}

TEST(TerminalSpec, EnumerationOrderAndCount)
{
    std::vector<TerminalSpec> specs;
    for_each_terminal_spec(5, 3, [&](const TerminalSpec &s) {
        specs.push_back(s);
        return true;
    });
    ASSERT_EQ(specs.size(), 30u);
    EXPECT_TRUE(std::is_sorted(specs.begin(), specs.end()));
    EXPECT_EQ(specs.front(), TerminalSpec::make(5, 0, {1, 2}));
    EXPECT_EQ(specs[1], TerminalSpec::make(5, 1, {0, 2}));
    EXPECT_EQ(specs.back(), TerminalSpec::make(5, 4, {2, 3}));
}

TEST(ValidateTree, FigureOnePendantTree)
{
    auto d = build_digraph(4, {{0, 1}, {1, 2}, {1, 3}});
    auto spec = TerminalSpec::make(4, 0, {2, 3});
    auto check = validate_pendant_tree(d, spec, make_tree(0, {{0, 1}, {1, 2}, {1, 3}}));
    EXPECT_TRUE(check.ok());
}

TEST(ValidateTree, FigureOneNonPendantTree)
{
    auto d = build_digraph(3, {{0, 1}, {0, 2}});
    auto spec = TerminalSpec::make(3, 0, {1, 2});
    auto check = validate_pendant_tree(d, spec, make_tree(0, {{0, 1}, {0, 2}}));
    EXPECT_EQ(check.defect, TreeDefect::terminal_degree);
    EXPECT_EQ(to_string(check.defect), "terminal-degree");
}

TEST(ValidateTree, SingleArcForTwoTerminals)
{
    auto d = build_digraph(2, {{0, 1}});
    EXPECT_TRUE(validate_pendant_tree(d, TerminalSpec::make(2, 0, {1}), make_tree(0, {{0, 1}})).ok());
}

TEST(ValidateTree, OtherDefects)
{
    auto d = build_digraph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 0}});
    auto spec = TerminalSpec::make(4, 0, {2, 3});
    EXPECT_EQ(validate_pendant_tree(d, spec, make_tree(0, {{0, 1}, {1, 2}, {1, 3}, {0, 2}})).defect,
              TreeDefect::arc_not_in_host);
    EXPECT_EQ(validate_pendant_tree(d, spec, make_tree(1, {{1, 2}, {1, 3}})).defect, TreeDefect::wrong_root);
    // 2 gets two parents
    auto d2 = build_digraph(5, {{0, 1}, {1, 2}, {4, 2}, {1, 3}, {1, 4}});
    auto spec5 = TerminalSpec::make(5, 0, {2, 3});
    EXPECT_EQ(validate_pendant_tree(d2, spec5, make_tree(0, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {4, 2}})).defect,
              TreeDefect::not_a_tree);
    // a terminal missing from the tree
    EXPECT_FALSE(validate_pendant_tree(d, spec, make_tree(0, {{0, 1}, {1, 2}})).ok());
    // empty tree
    EXPECT_FALSE(validate_pendant_tree(d, spec, make_tree(0, {})).ok());
}

TEST(ValidatePacking, EmptyIsValid)
{
    auto d = build_digraph(3, {{0, 1}});
    EXPECT_TRUE(validate_packing(d, Packing{TerminalSpec::make(3, 0, {1}), {}}).ok());
}

TEST(ValidatePacking, SharedInternalVertexAndArc)
{
    auto d = generate({Family::bidirected_complete, 5});
    auto spec = TerminalSpec::make(5, 0, {1, 2});
    auto t1 = make_tree(0, {{0, 3}, {3, 1}, {3, 4}, {4, 2}});
    auto t2 = make_tree(0, {{0, 4}, {4, 1}, {4, 3}, {3, 2}});
    auto check = validate_packing(d, Packing{spec, {t1, t2}});
    EXPECT_EQ(check.defect, PackingDefect::shared_internal_vertex);
    EXPECT_EQ(check.first, 0u);
    EXPECT_EQ(check.second, 1u);

    auto d2 = build_digraph(2, {{0, 1}});
    auto spec2 = TerminalSpec::make(2, 0, {1});
    auto arc = make_tree(0, {{0, 1}});
    EXPECT_EQ(validate_packing(d2, Packing{spec2, {arc, arc}}).defect, PackingDefect::shared_arc);

    auto bad = make_tree(0, {{0, 1}, {0, 2}});
    auto check3 = validate_packing(d, Packing{spec, {bad}});
    EXPECT_EQ(check3.defect, PackingDefect::bad_tree);
    EXPECT_EQ(check3.tree_defect, TreeDefect::terminal_degree);

    auto u1 = make_tree(0, {{0, 3}, {3, 1}, {3, 2}});
    auto u2 = make_tree(0, {{0, 4}, {4, 1}, {4, 2}});
    EXPECT_TRUE(validate_packing(d, Packing{spec, {u1, u2}}).ok());
}

TEST(Skeletons, TwoTerminalsHaveOneShape)
{
    auto d = generate({Family::bidirected_complete, 5});
    auto sk = enumerate_skeletons(d, TerminalSpec::make(5, 0, {1}));
    ASSERT_EQ(sk.size(), 1u);
    EXPECT_TRUE(sk[0].branch_set.empty());
    EXPECT_EQ(sk[0].arcs, (std::vector<Arc>{{0, 1}}));
}

TEST(Skeletons, ThreeTerminalsHaveOneShapePerBranchVertex)
{
    for (int n = 3; n <= 7; ++n) {
        auto d = generate({Family::bidirected_complete, n});
        auto sk = enumerate_skeletons(d, TerminalSpec::make(n, 0, {1, 2}));
        EXPECT_EQ(sk.size(), static_cast<std::size_t>(n - 3));
        for (const auto &s : sk) {
            ASSERT_EQ(s.branch_set.size(), 1u);
            Vertex x = s.branch_set[0];
            EXPECT_EQ(s.arcs, (std::vector<Arc>{{0, x}, {x, 1}, {x, 2}}));
        }
    }
}

TEST(Skeletons, CountsMatchShapeEnumeration)
{
    for (int n = 4; n <= 8; ++n)
        for (int k = 2; k <= std::min(n, 5); ++k) {
            auto d = Digraph::build(n, std::span<const Arc>{});
            std::vector<Vertex> sinks;
            for (int i = 1; i < k; ++i)
                sinks.push_back(i);
            auto sk = enumerate_skeletons(d, TerminalSpec::make(n, 0, sinks));
            std::size_t expected = 0;
            for (int b = 0; b <= k - 2; ++b)
                expected += choose(n - k, b) * brute::count_skeleton_shapes(k, b);
            EXPECT_EQ(sk.size(), expected) << "n=" << n << " k=" << k;
            std::set<std::pair<std::vector<Vertex>, std::vector<Arc>>> unique;
            for (const auto &s : sk)
                unique.insert({s.branch_set, s.arcs});
            EXPECT_EQ(unique.size(), sk.size());
        }
}

TEST(Skeletons, ShapeInvariants)
{
    auto d = Digraph::build(7, std::span<const Arc>{});
    auto spec = TerminalSpec::make(7, 2, {0, 4, 5});
    for (const auto &s : enumerate_skeletons(d, spec)) {
        std::map<Vertex, int> deg;
        for (const Arc &a : s.arcs) {
            ++deg[a.tail];
            ++deg[a.head];
        }
        for (Vertex v : spec.members())
            EXPECT_EQ(deg[v], 1);
        for (Vertex v : s.branch_set) {
            EXPECT_GE(deg[v], 3);
            EXPECT_FALSE(spec.contains(v));
        }
        EXPECT_LE(static_cast<int>(s.branch_set.size()), spec.k() - 2);
        EXPECT_EQ(s.arcs.size(), spec.sinks().size() + s.branch_set.size());
    }
}

TEST(PendantTrees, DirectedFourCycleHasNone)
{
    auto d = build_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto spec = TerminalSpec::make(4, 0, {1, 2});
    EXPECT_TRUE(enumerate_pendant_trees(d, spec).empty());
    EXPECT_TRUE(brute::pendant_trees(d, 0, {1, 2}, true).empty());
}

TEST(PendantTrees, BidirectedK4MatchesBruteForce)
{
    auto d = generate({Family::bidirected_complete, 4});
    auto spec = TerminalSpec::make(4, 0, {1, 2});
    auto trees = enumerate_pendant_trees(d, spec);
    auto expected = brute::pendant_trees(d, 0, {1, 2}, true);
    EXPECT_EQ(arc_lists(trees), arc_lists(expected));
    // the only minimal tree uses vertex 3 as the branch
    ASSERT_EQ(trees.size(), 1u);
    EXPECT_EQ(trees[0].arcs, (std::vector<Arc>{{0, 3}, {3, 1}, {3, 2}}));
}

TEST(PendantTrees, BidirectedK5MatchesBruteForce)
{
    auto d = generate({Family::bidirected_complete, 5});
    auto spec = TerminalSpec::make(5, 0, {1, 2});
    auto trees = enumerate_pendant_trees(d, spec);
    EXPECT_EQ(arc_lists(trees), arc_lists(brute::pendant_trees(d, 0, {1, 2}, true)));
    // two stars, two paths into a branch vertex, four trees branching twice
    EXPECT_EQ(trees.size(), 8u);
}

TEST(PendantTrees, FigureOneHostHasExactlyOne)
{
    auto d = build_digraph(4, {{0, 1}, {1, 2}, {1, 3}});
    auto trees = enumerate_pendant_trees(d, TerminalSpec::make(4, 0, {2, 3}));
    ASSERT_EQ(trees.size(), 1u);
    EXPECT_EQ(trees[0].arcs, (std::vector<Arc>{{0, 1}, {1, 2}, {1, 3}}));
}

TEST(PendantTrees, MatchBruteForceOnRandomDigraphs)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 4 + static_cast<int>(seed % 3);
        auto d = generate({Family::random_digraph, n, 0.55, seed});
        for (int k : {2, 3, 4}) {
            std::vector<Vertex> sinks;
            for (int i = 1; i < k; ++i)
                sinks.push_back((static_cast<int>(seed) + i) % n);
            Vertex r = static_cast<Vertex>(seed % n);
            if (std::find(sinks.begin(), sinks.end(), r) != sinks.end())
                continue;
            auto spec = TerminalSpec::make(n, r, sinks);
            auto minimal = enumerate_pendant_trees(d, spec);
            EXPECT_EQ(arc_lists(minimal), arc_lists(brute::pendant_trees(d, r, spec.sinks(), true)))
                << "seed " << seed << " k " << k;
            auto all = enumerate_pendant_trees(d, spec, TreeScope::all);
            EXPECT_EQ(arc_lists(all), arc_lists(brute::pendant_trees(d, r, spec.sinks(), false)))
                << "seed " << seed << " k " << k;
            for (const auto &t : all)
                EXPECT_TRUE(validate_pendant_tree(d, spec, t).ok());
        }
    }
}

TEST(PendantTrees, SkeletonOfEveryMinimalTreeIsEnumerated)
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto d = generate({Family::random_symmetric, 7, 0.6, seed});
        auto spec = TerminalSpec::make(7, 0, {1, 2, 3});
        auto skeletons = enumerate_skeletons(d, spec);
        for (const auto &t : enumerate_pendant_trees(d, spec)) {
            auto s = skeleton_of(t, spec);
            EXPECT_NE(std::find(skeletons.begin(), skeletons.end(), s), skeletons.end());
        }
    }
}

TEST(PendantTrees, NoTerminalParentsAreTerminalsForKAtLeastThree)
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto d = generate({Family::random_digraph, 6, 0.6, seed});
        auto spec = TerminalSpec::make(6, 1, {0, 3, 5});
        for (const auto &t : enumerate_pendant_trees(d, spec))
            for (const Arc &a : t.arcs)
                if (spec.contains(a.head)) {
                    EXPECT_FALSE(spec.contains(a.tail));
                }
    }
}

TEST(PendantTrees, MinimalTreesAreLosslessForPacking)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 5 + static_cast<int>(seed % 2);
        auto d = generate({Family::random_digraph, n, 0.6, seed + 100});
        for (int k : {2, 3}) {
            std::vector<Vertex> sinks;
            for (int i = 1; i < k; ++i)
                sinks.push_back(i);
            EXPECT_EQ(brute::tau_sr(d, 0, sinks, true), brute::tau_sr(d, 0, sinks, false)) << "seed " << seed;
        }
    }
}

TEST(PendantTrees, VisitorCanStopEarly)
{
    auto d = generate({Family::bidirected_complete, 6});
    int seen = 0;
    for_each_pendant_tree(d, TerminalSpec::make(6, 0, {1, 2}), [&](const std::vector<Arc> &) {
        ++seen;
        return seen < 3;
    });
    EXPECT_EQ(seen, 3);
}
