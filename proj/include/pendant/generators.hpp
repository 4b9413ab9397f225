#pragma once

#include <pendant/digraph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Seeded instance families. Every generator checks its family predicate on
// the result and throws if it does not hold.

namespace pendant {

enum class Family
{
    bidirected_complete,
    bidirected_complete_minus_arc,
    star_orientation,
    transitive_tournament,
    random_tournament,
    random_digraph,
    random_symmetric,
    random_eulerian,
};

inline constexpr std::string_view family_names[] = {
    "bidirected-complete", "bidirected-complete-minus-arc", "star-orientation", "transitive-tournament",
    "random-tournament",   "random-digraph",                "random-symmetric", "random-eulerian",
};

inline std::string_view to_string(Family f) { return family_names[static_cast<int>(f)]; }

inline std::optional<Family> family_from_string(std::string_view name)
{
    for (std::size_t i = 0; i < std::size(family_names); ++i)
        if (family_names[i] == name)
            return static_cast<Family>(i);
    return std::nullopt;
}

struct GeneratorParams
{
    Family family = Family::random_digraph;
    int n = 0;
    double p = 0.5; ///< arc (or digon) probability for the random-digraph and random-symmetric families
    std::uint64_t seed = 0;
};

namespace detail {

    /// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
    inline double unit(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), by rejection so results do not depend on the library's distributions.
    inline std::uint64_t below(std::mt19937_64 &rng, std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do
            x = rng();
        while (x >= limit);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::vector<T> &v, std::mt19937_64 &rng)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(rng, i)]);
    }

    inline Digraph bidirected_complete(int n)
    {
        std::vector<Arc> arcs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v)
                    arcs.push_back({u, v});
        return Digraph::build(n, arcs);
    }

    inline Digraph random_eulerian(int n, std::mt19937_64 &rng)
    {
        if (n == 1)
            return Digraph::build(1, std::span<const Arc>{});
        for (int attempt = 0; attempt < 1000; ++attempt) {
            std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
            std::vector<Arc> arcs;
            const int cycles = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(n)));
            for (int c = 0; c < cycles; ++c) {
                std::vector<Vertex> order(n);
                std::iota(order.begin(), order.end(), 0);
                shuffle(order, rng);
                const int len = 2 + static_cast<int>(below(rng, static_cast<std::uint64_t>(n - 1)));
                order.resize(len);
                bool free = true;
                for (int i = 0; i < len && free; ++i) {
                    Vertex u = order[i], v = order[(i + 1) % len];
                    free = ! used[static_cast<std::size_t>(u) * n + v];
                }
                if (! free)
                    continue;
                for (int i = 0; i < len; ++i) {
                    Vertex u = order[i], v = order[(i + 1) % len];
                    used[static_cast<std::size_t>(u) * n + v] = 1;
                    arcs.push_back({u, v});
                }
            }
            Digraph d = Digraph::build(n, arcs);
            bool covers = true;
            for (Vertex v = 0; v < n; ++v)
                covers = covers && d.out_degree(v) > 0;
            if (covers && is_eulerian(d))
                return d;
        }
        throw std::runtime_error("random-eulerian: no connected instance after 1000 attempts");
    }

} // namespace detail

inline bool family_predicate(Family f, const Digraph &d)
{
    const int n = d.order();
    const std::size_t full = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0);
    auto tournament = [&] {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (d.has_arc(u, v) == d.has_arc(v, u))
                    return false;
        return true;
    };
    switch (f) {
    case Family::bidirected_complete:
        return d.size() == full;
    case Family::bidirected_complete_minus_arc:
        return d.size() + 1 == full;
    case Family::star_orientation:
        return d.size() == static_cast<std::size_t>(n - 1) && d.out_degree(0) == n - 1;
    case Family::transitive_tournament:
        return tournament() && (n <= 1 || ! is_strong(d));
    case Family::random_tournament:
        return tournament();
    case Family::random_digraph:
        return true;
    case Family::random_symmetric:
        return is_symmetric(d);
    case Family::random_eulerian:
        return is_eulerian(d);
    }
    return false;
}

/// Builds one instance of the family; random families are reproducible from the seed.
inline Digraph generate(const GeneratorParams &params)
{
    const int n = params.n;
    if (n < 1)
        throw std::invalid_argument("generator needs n >= 1");
    if (params.p < 0.0 || params.p > 1.0)
        throw std::invalid_argument("generator needs 0 <= p <= 1");
    if (params.family == Family::bidirected_complete_minus_arc && n < 2)
        throw std::invalid_argument("bidirected-complete-minus-arc needs n >= 2");
    std::mt19937_64 rng(params.seed);
    std::vector<Arc> arcs;
    Digraph d;
    switch (params.family) {
    case Family::bidirected_complete:
        d = detail::bidirected_complete(n);
        break;
    case Family::bidirected_complete_minus_arc: {
        auto all = detail::bidirected_complete(n).arcs();
        all.erase(all.begin() + static_cast<std::ptrdiff_t>(detail::below(rng, all.size())));
        d = Digraph::build(n, all);
        break;
    }
    case Family::star_orientation:
        for (Vertex v = 1; v < n; ++v)
            arcs.push_back({0, v});
        d = Digraph::build(n, arcs);
        break;
    case Family::transitive_tournament:
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                arcs.push_back({u, v});
        d = Digraph::build(n, arcs);
        break;
    case Family::random_tournament:
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                arcs.push_back(detail::unit(rng) < 0.5 ? Arc{u, v} : Arc{v, u});
        d = Digraph::build(n, arcs);
        break;
    case Family::random_digraph:
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v && detail::unit(rng) < params.p)
                    arcs.push_back({u, v});
        d = Digraph::build(n, arcs);
        break;
    case Family::random_symmetric:
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (detail::unit(rng) < params.p) {
                    arcs.push_back({u, v});
                    arcs.push_back({v, u});
                }
        d = Digraph::build(n, arcs);
        break;
    case Family::random_eulerian:
        d = detail::random_eulerian(n, rng);
        break;
    }
    if (! family_predicate(params.family, d))
        throw std::logic_error("generated instance fails the " + std::string(to_string(params.family)) +
                               " predicate");
    return d;
}

} // namespace pendant
