#include "heckeq/collapse.hpp"

#include <algorithm>

#include "heckeq/errors.hpp"

namespace heckeq {

namespace {

bool odd_finite(int m) { return m != CoxeterDiagram::infinite_weight && m % 2 == 1; }

} // namespace

CollapseReport collapsed_subset(const CoxeterDiagram& d) {
    int n = d.size();
    std::vector<bool> live(n);
    for (int v = 0; v < n; ++v) live[v] = !d.param(v).is_zero();

    std::vector<bool> in_r(n, false), seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start] || !live[start]) continue;
        std::vector<int> comp, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& [w, m] : d.neighbors(v))
                if (odd_finite(m) && live[w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        bool two_values = false;
        for (int v : comp)
            if (d.param(v) != d.param(comp[0])) two_values = true;
        if (two_values)
            for (int v : comp) in_r[v] = true;
    }

    CollapseReport report;
    std::vector<int> survivors;
    for (int v = 0; v < n; ++v)
        (in_r[v] ? report.collapsed : survivors).push_back(v);
    report.forced_identity = report.collapsed;
    report.reduced = induced_subdiagram(d, survivors);
    return report;
}

bool is_collapse_free(const CoxeterDiagram& d) {
    for (const auto& e : d.edges())
        if (odd_finite(e.m) && d.param(e.u) != d.param(e.v) &&
            !d.param(e.u).is_zero() && !d.param(e.v).is_zero())
            return false;
    return true;
}

bool is_admissible(const CoxeterDiagram& d, const std::vector<int>& r) {
    std::vector<bool> in_r(d.size(), false);
    for (int v : r) {
        if (v < 0 || v >= d.size()) fail_domain("is_admissible: unknown vertex index");
        in_r[v] = true;
    }
    for (const auto& e : d.edges())
        if (odd_finite(e.m) && in_r[e.u] != in_r[e.v] &&
            !d.param(e.u).is_zero() && !d.param(e.v).is_zero())
            return false;
    return true;
}

bool is_commutative(const CoxeterDiagram& d) {
    if (!is_collapse_free(d)) fail_domain("is_commutative needs a collapse-free diagram");
    for (const auto& e : d.edges()) {
        if (e.m != 3) return false;
        if (d.param(e.u).is_zero() == d.param(e.v).is_zero()) return false;
    }
    return true;
}

} // namespace heckeq
