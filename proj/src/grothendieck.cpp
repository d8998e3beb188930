#include "heckeq/grothendieck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "heckeq/commutative.hpp"
#include "heckeq/diagram.hpp"
#include "heckeq/errors.hpp"

namespace heckeq {

namespace {

int checked_size(const Composition& a) {
    int n = 0;
    for (int p : a) {
        if (p < 1) fail_domain("composition parts must be positive");
        n += p;
    }
    return n;
}

int raw_size(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

// Concatenation of a and b with the boundary parts merged.
Composition merged(const Composition& a, const Composition& b) {
    Composition m(a.begin(), a.end() - 1);
    m.push_back(a.back() + b.front());
    m.insert(m.end(), b.begin() + 1, b.end());
    return m;
}

void scale_add(CompSum& acc, const CompSum& x, long long c) {
    for (const auto& [k, v] : x) comp_add(acc, k, v * c);
}

} // namespace

int comp_size(const Composition& a) { return checked_size(a); }

std::vector<int> descent_set(const Composition& a) {
    checked_size(a);
    std::vector<int> d;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        acc += a[i];
        d.push_back(acc);
    }
    return d;
}

Composition composition_from_descents(int n, const std::vector<int>& d) {
    if (n < 0) fail_domain("composition size must be nonnegative");
    std::vector<int> s = d;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        fail_domain("descent set has a repeated element");
    if (!s.empty() && (s.front() < 1 || s.back() > n - 1))
        fail_domain("descent outside 1..n-1");
    Composition a;
    int prev = 0;
    for (int v : s) {
        a.push_back(v - prev);
        prev = v;
    }
    if (n > prev) a.push_back(n - prev);
    return a;
}

bool is_proper(const Composition& a) {
    checked_size(a);
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (a[i] == 1) return false;
    return true;
}

Composition complement(const Composition& a) {
    const int n = checked_size(a);
    if (n == 0) fail_domain("the empty composition has no complement");
    std::vector<int> d = descent_set(a);
    std::vector<int> rest;
    std::size_t at = 0;
    for (int v = 1; v <= n - 1; ++v) {
        if (at < d.size() && d[at] == v)
            ++at;
        else
            rest.push_back(v);
    }
    return composition_from_descents(n, rest);
}

std::pair<Composition, Composition> split(const Composition& a, int i) {
    const int n = checked_size(a);
    if (i < 0 || i > n) fail_domain("split position out of range");
    Composition head, tail;
    int acc = 0;
    std::size_t at = 0;
    while (at < a.size() && acc + a[at] <= i) {
        head.push_back(a[at]);
        acc += a[at];
        ++at;
    }
    if (acc < i) {
        head.push_back(i - acc);
        tail.push_back(a[at] - (i - acc));
        ++at;
    }
    tail.insert(tail.end(), a.begin() + static_cast<std::ptrdiff_t>(at), a.end());
    return {head, tail};
}

bool CompLess::operator()(const Composition& x, const Composition& y) const {
    const int nx = raw_size(x), ny = raw_size(y);
    if (nx != ny) return nx < ny;
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
}

bool CompPairLess::operator()(const CompPair& x, const CompPair& y) const {
    CompLess less;
    if (less(x.first, y.first)) return true;
    if (less(y.first, x.first)) return false;
    return less(x.second, y.second);
}

void comp_add(CompSum& sum, const Composition& a, long long c) {
    if (c == 0) return;
    auto it = sum.find(a);
    if (it == sum.end()) {
        sum.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second == 0) sum.erase(it);
}

void tensor_add(TensorSum& sum, const Composition& a, const Composition& b, long long c) {
    if (c == 0) return;
    CompPair key{a, b};
    auto it = sum.find(key);
    if (it == sum.end()) {
        sum.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) sum.erase(it);
}

CompSum comp_product(const Composition& a, const Composition& b) {
    checked_size(a);
    checked_size(b);
    CompSum out;
    if (a.empty() || b.empty()) {
        comp_add(out, a.empty() ? b : a, 1);
        return out;
    }
    Composition concat = a;
    concat.insert(concat.end(), b.begin(), b.end());
    comp_add(out, concat, 1);
    comp_add(out, merged(a, b), 1);
    return out;
}

TensorSum comp_coproduct(const Composition& a) {
    const int n = checked_size(a);
    TensorSum out;
    for (int i = 0; i <= n; ++i) {
        auto [head, tail] = split(a, i);
        tensor_add(out, head, tail, 1);
    }
    return out;
}

CompSum g0_product(const Composition& a, const Composition& b) {
    if (!is_proper(a) || !is_proper(b)) fail_domain("the product needs proper compositions");
    CompSum out;
    if (a.empty() || b.empty()) {
        comp_add(out, a.empty() ? b : a, 1);
        return out;
    }
    Composition concat = a;
    concat.insert(concat.end(), b.begin(), b.end());
    if (is_proper(concat)) comp_add(out, concat, 1);
    comp_add(out, merged(a, b), 1);
    return out;
}

TensorSum g0_coproduct(const Composition& a) {
    if (!is_proper(a)) fail_domain("the coproduct needs a proper composition");
    return comp_coproduct(a);
}

CompSum sigma(const Composition& a) {
    checked_size(a);
    CompSum out;
    if (is_proper(a)) comp_add(out, a, 1);
    return out;
}

CompSum iota(const Composition& a) {
    if (!is_proper(a)) fail_domain("the embedding needs a proper composition");
    CompSum out;
    comp_add(out, a, 1);
    return out;
}

long long pairing(const CompSum& x, const CompSum& y) {
    const CompSum& small = x.size() <= y.size() ? x : y;
    const CompSum& large = x.size() <= y.size() ? y : x;
    long long total = 0;
    for (const auto& [k, v] : small) {
        auto it = large.find(k);
        if (it != large.end()) total += v * it->second;
    }
    return total;
}

long long pairing(const TensorSum& x, const TensorSum& y) {
    const TensorSum& small = x.size() <= y.size() ? x : y;
    const TensorSum& large = x.size() <= y.size() ? y : x;
    long long total = 0;
    for (const auto& [k, v] : small) {
        auto it = large.find(k);
        if (it != large.end()) total += v * it->second;
    }
    return total;
}

SignedComposition antipode_comp(const Composition& a) {
    const int n = checked_size(a);
    if (n == 0) return {1, {}};
    return {n % 2 == 0 ? 1 : -1, complement(a)};
}

CompSum antipode_g0(const Composition& a) {
    if (!is_proper(a)) fail_domain("the antipode needs a proper composition");
    CompSum out;
    const int n = comp_size(a);
    if (n == 0) {
        comp_add(out, a, 1);
        return out;
    }
    Composition c = complement(a);
    if (is_proper(c)) comp_add(out, c, n % 2 == 0 ? 1 : -1);
    return out;
}

AntipodeReport verify_antipode(int n_max) {
    if (n_max > 16) fail_cap("the convolution check covers sizes up to 16");
    AntipodeReport rep;
    for (int n = 0; n <= n_max; ++n) {
        const std::uint32_t masks = n == 0 ? 1u : 1u << (n - 1);
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            std::vector<int> d;
            for (int v = 1; v <= n - 1; ++v)
                if ((mask >> (v - 1)) & 1u) d.push_back(v);
            Composition a = composition_from_descents(n, d);

            CompSum expected;
            if (n == 0) comp_add(expected, {}, 1);
            CompSum left, right;
            for (int i = 0; i <= n; ++i) {
                auto [head, tail] = split(a, i);
                SignedComposition sh = antipode_comp(head);
                scale_add(left, comp_product(sh.comp, tail), sh.sign);
                SignedComposition st = antipode_comp(tail);
                scale_add(right, comp_product(head, st.comp), st.sign);
            }
            ++rep.checked;
            if (left != expected) {
                rep.first_violation =
                    "left convolution fails at " + composition_str(a);
                return rep;
            }
            if (right != expected) {
                rep.first_violation =
                    "right convolution fails at " + composition_str(a);
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

std::vector<Composition> proper_compositions(int n) {
    if (n < 0) fail_domain("composition size must be nonnegative");
    std::vector<Composition> out;
    Composition cur;
    std::function<void(int, bool)> rec = [&](int m, bool first) {
        for (int p = 1; p <= m; ++p) {
            if (p == m) {
                cur.push_back(p);
                out.push_back(cur);
                cur.pop_back();
            } else if (first || p >= 2) {
                cur.push_back(p);
                rec(m - p, false);
                cur.pop_back();
            }
        }
    };
    if (n == 0)
        out.push_back({});
    else
        rec(n, true);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        return b < a;
    });
    return out;
}

BratteliDiagram bratteli(int levels) {
    if (levels < 0) fail_domain("the level count must be nonnegative");
    if (levels > 30) fail_cap("the diagram covers at most 30 levels");
    BratteliDiagram diag;
    diag.levels.resize(static_cast<std::size_t>(levels) + 1);
    diag.parent.resize(static_cast<std::size_t>(levels) + 1);
    std::map<Composition, int> index; // previous level's positions
    for (int n = 0; n <= levels; ++n) {
        diag.levels[n] = proper_compositions(n);
        if (n > 0) {
            diag.parent[n].reserve(diag.levels[n].size());
            for (const auto& a : diag.levels[n]) {
                std::vector<int> d;
                for (int v : descent_set(a))
                    if (v <= n - 2) d.push_back(v);
                auto it = index.find(composition_from_descents(n - 1, d));
                if (it == index.end())
                    fail_domain("restriction target missing from the diagram");
                diag.parent[n].push_back(it->second);
            }
        }
        index.clear();
        for (std::size_t j = 0; j < diag.levels[n].size(); ++j)
            index.emplace(diag.levels[n][j], static_cast<int>(j));
    }
    return diag;
}

std::vector<std::pair<std::uint32_t, BigInt>> fib_decomposition(int n, std::uint32_t r) {
    if (n < 0) fail_domain("the path length must be nonnegative");
    if (n > 25) fail_cap("the decomposition covers paths with at most 25 vertices");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        names.push_back(std::to_string(v + 1));
        if (v + 1 < n) edges.emplace_back(v, v + 1);
    }
    SimpleGraph g(names, edges);
    if ((r & ~g.full_mask()) != 0) fail_domain("marked vertices outside the path");

    std::vector<std::pair<std::uint32_t, BigInt>> out;
    for (std::uint32_t i : independent_subsets(g, g.full_mask() & ~r))
        out.emplace_back(i, count_independent_subsets(g, r & ~g.neighborhood(i)));
    return out;
}

std::string composition_str(const Composition& a) {
    checked_size(a);
    if (a.empty()) return "()";
    bool digits = true;
    for (int p : a) digits = digits && p <= 9;
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!digits && i) out += ",";
        out += std::to_string(a[i]);
    }
    return out;
}

std::string compsum_str(const CompSum& x) {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : x) {
        if (out.empty())
            out += v < 0 ? "-" : "";
        else
            out += v < 0 ? " - " : " + ";
        const long long mag = v < 0 ? -v : v;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += composition_str(k);
    }
    return out;
}

std::string tensor_str(const TensorSum& x) {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : x) {
        if (out.empty())
            out += v < 0 ? "-" : "";
        else
            out += v < 0 ? " - " : " + ";
        const long long mag = v < 0 ? -v : v;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += composition_str(k.first) + "(x)" + composition_str(k.second);
    }
    return out;
}

} // namespace heckeq
