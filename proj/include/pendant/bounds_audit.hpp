#pragma once

#include <pendant/bounds.hpp>
#include <pendant/solvers.hpp>

#include <string>
#include <vector>

// Checks exact solver values against the closed-form bounds. A violated
// bound is an implementation error; a bound that is not attained is only
// informational.

namespace pendant {

struct BoundFinding
{
    std::string bound; ///< e.g. "order", "semidegree", "cut", "zero-rule"
    int limit = 0;
    int value = 0;
    bool violated = false;
    bool tight = false;
};

struct BoundsAudit
{
    int tau_k = 0;
    BoundsReport report;
    std::vector<BoundFinding> findings;

    [[nodiscard]] bool any_violation() const
    {
        for (const auto &f : findings)
            if (f.violated)
                return true;
        return false;
    }
};

/// Audits tau_k(D) against n-k, min semi-degree, the cut bound and the zero rule. Requires 3 <= k <= n.
inline BoundsAudit audit_bounds(const Digraph &d, int k, TauKOptions options = {})
{
    BoundsAudit a;
    a.report = bounds_report(d, k);
    a.tau_k = solve_tau_k(d, k, options).value;
    auto add = [&](std::string name, int limit) {
        a.findings.push_back({std::move(name), limit, a.tau_k, a.tau_k > limit || a.tau_k < 0, a.tau_k == limit});
    };
    add("order", a.report.order_bound);
    add("semidegree", a.report.semidegree_bound);
    add("cut", a.report.cut_bound);
    if (a.report.zero_rule_fires)
        add("zero-rule", 0);
    return a;
}

struct NordhausGaddumReport
{
    int n = 0;
    int k = 0;
    int tau = 0;            ///< tau_k(D)
    int tau_complement = 0; ///< tau_k(D^c)
    int sum = 0;
    int product = 0;
    int sum_upper = 0;     ///< n - k
    int product_upper = 0; ///< floor(((n-k)/2)^2)
    bool sum_ok = false;
    bool product_ok = false;
    bool sum_attains_upper = false;
    bool sum_attains_zero = false;
    bool product_attains_upper = false;
    bool product_attains_zero = false;

    [[nodiscard]] bool ok() const { return sum_ok && product_ok; }
};

inline NordhausGaddumReport nordhaus_gaddum_check(const Digraph &d, int k, TauKOptions options = {})
{
    if (k < 3 || k > d.order())
        throw InvalidDigraph("Nordhaus-Gaddum check needs 3 <= k <= n");
    NordhausGaddumReport r;
    r.n = d.order();
    r.k = k;
    r.tau = solve_tau_k(d, k, options).value;
    r.tau_complement = solve_tau_k(complement(d), k, options).value;
    r.sum = r.tau + r.tau_complement;
    r.product = r.tau * r.tau_complement;
    r.sum_upper = r.n - k;
    r.product_upper = (r.n - k) * (r.n - k) / 4;
    r.sum_ok = r.sum >= 0 && r.sum <= r.sum_upper;
    r.product_ok = r.product >= 0 && r.product <= r.product_upper;
    r.sum_attains_upper = r.sum == r.sum_upper;
    r.sum_attains_zero = r.sum == 0;
    r.product_attains_upper = r.product == r.product_upper;
    r.product_attains_zero = r.product == 0;
    return r;
}

} // namespace pendant
