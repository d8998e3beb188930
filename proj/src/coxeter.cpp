#include "heckeq/coxeter.hpp"

#include <algorithm>
#include <unordered_set>

#include "heckeq/errors.hpp"

namespace heckeq {

std::string TypeLabel::str() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::BC: return "BC" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::H3: return "H3";
        case Family::H4: return "H4";
        case Family::I2: return "I2(" + std::to_string(m) + ")";
        case Family::NotFinite: return "NotFinite";
    }
    return "NotFinite";
}

namespace {

TypeLabel not_finite(int rank) {
    TypeLabel t;
    t.family = Family::NotFinite;
    t.rank = rank;
    t.finite = false;
    return t;
}

TypeLabel finite_label(Family f, int rank, BigInt order, int m = 0) {
    TypeLabel t;
    t.family = f;
    t.rank = rank;
    t.m = m;
    t.finite = true;
    t.order = std::move(order);
    return t;
}

// Orders a tree path starting from the endpoint with the least index and
// returns the vertex sequence, or empty if the diagram is not a path.
std::vector<int> as_path(const CoxeterDiagram& d) {
    int n = d.size();
    if (n == 1) return {0};
    std::vector<int> ends;
    for (int v = 0; v < n; ++v) {
        if (d.neighbors(v).size() > 2) return {};
        if (d.neighbors(v).size() == 1) ends.push_back(v);
    }
    if (ends.size() != 2) return {}; // connected with all degrees 2: a cycle
    std::vector<int> path{std::min(ends[0], ends[1])};
    int prev = -1;
    while (static_cast<int>(path.size()) < n) {
        int cur = path.back(), next = -1;
        for (const auto& [w, mw] : d.neighbors(cur)) {
            (void)mw;
            if (w != prev) next = w;
        }
        if (next < 0) return {};
        prev = cur;
        path.push_back(next);
    }
    return path;
}

} // namespace

TypeLabel classify_component(const CoxeterDiagram& d) {
    if (connected_components(d).size() != 1) fail_domain("classify_component needs a connected diagram");
    int n = d.size();
    for (const auto& e : d.edges())
        if (e.m == CoxeterDiagram::infinite_weight) return not_finite(n);

    if (n == 1) return finite_label(Family::A, 1, 2);
    if (n == 2) {
        int m = d.edges()[0].m;
        if (m == 3) return finite_label(Family::A, 2, 6);
        return finite_label(Family::I2, 2, 2 * m, m);
    }

    auto path = as_path(d);
    if (!path.empty()) {
        std::vector<int> weights;
        for (int i = 0; i + 1 < n; ++i) weights.push_back(d.weight(path[i], path[i + 1]));
        auto rev = weights;
        std::reverse(rev.begin(), rev.end());
        if (rev < weights) weights = rev;
        // weights now ordered with the lexicographically smaller end first
        int big = 0;
        for (int w : weights) big += (w > 3);
        if (big == 0) return finite_label(Family::A, n, factorial(n + 1));
        if (big == 1) {
            if (weights.back() == 4) {
                BigInt order = factorial(n);
                order <<= n;
                return finite_label(Family::BC, n, order);
            }
            if (n == 4 && weights[1] == 4) return finite_label(Family::F4, 4, 1152);
            if (weights.back() == 5 && n == 3) return finite_label(Family::H3, 3, 120);
            if (weights.back() == 5 && n == 4) return finite_label(Family::H4, 4, 14400);
        }
        return not_finite(n);
    }

    if (!is_simply_laced(d)) return not_finite(n);
    // Simply-laced non-path: finite only for a tree with one degree-3 fork.
    int fork = -1;
    for (int v = 0; v < n; ++v) {
        if (d.neighbors(v).size() > 3) return not_finite(n);
        if (d.neighbors(v).size() == 3) {
            if (fork >= 0) return not_finite(n);
            fork = v;
        }
    }
    if (fork < 0) return not_finite(n); // cycle
    if (static_cast<int>(d.edges().size()) != n - 1) return not_finite(n);
    std::vector<int> arms;
    for (const auto& [start, mw] : d.neighbors(fork)) {
        (void)mw;
        int len = 1, prev = fork, cur = start;
        for (;;) {
            int next = -1;
            for (const auto& [w, m2] : d.neighbors(cur)) {
                (void)m2;
                if (w != prev) next = w;
            }
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
        BigInt order = factorial(n);
        order <<= (n - 1);
        return finite_label(Family::D, n, order);
    }
    if (arms[0] == 1 && arms[1] == 2) {
        if (arms[2] == 2) return finite_label(Family::E6, 6, 51840);
        if (arms[2] == 3) return finite_label(Family::E7, 7, 2903040);
        if (arms[2] == 4) return finite_label(Family::E8, 8, 696729600);
    }
    return not_finite(n);
}

GroupOrder group_order(const CoxeterDiagram& d) {
    GroupOrder g;
    g.finite = true;
    g.order = 1;
    for (const auto& comp : connected_components(d)) {
        auto label = classify_component(induced_subdiagram(d, comp));
        if (!label.finite) return {false, 0};
        g.order *= label.order;
    }
    return g;
}

namespace {

// Hashed dedup over matrices stored in a shared arena; the sentinel index
// equal to the current element count refers to a candidate appended at the
// arena tail but not yet committed.
struct ArenaHash {
    const std::vector<std::int8_t>* arena;
    std::size_t stride;
    std::size_t operator()(std::int32_t idx) const {
        const std::int8_t* p = arena->data() + static_cast<std::size_t>(idx) * stride;
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < stride; ++i) {
            h ^= static_cast<std::uint8_t>(p[i]);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct ArenaEq {
    const std::vector<std::int8_t>* arena;
    std::size_t stride;
    bool operator()(std::int32_t a, std::int32_t b) const {
        return std::equal(arena->begin() + static_cast<std::size_t>(a) * stride,
                          arena->begin() + (static_cast<std::size_t>(a) + 1) * stride,
                          arena->begin() + static_cast<std::size_t>(b) * stride);
    }
};

} // namespace

CoxGroup::CoxGroup(const CoxeterDiagram& d, std::size_t cap) {
    if (!is_simply_laced(d)) fail_domain("group enumeration needs a simply-laced diagram");
    auto total = group_order(d);
    if (!total.finite) fail_domain("group enumeration needs a finite-type diagram");
    if (total.order > cap)
        fail_cap("group has " + total.order.str() + " elements, above the cap of " +
                 std::to_string(cap));
    std::size_t n_elems = static_cast<std::size_t>(total.order);

    rank_ = d.size();
    std::size_t stride = static_cast<std::size_t>(rank_) * rank_;
    mats_.reserve((n_elems + 1) * stride);
    length_.reserve(n_elems);
    support_.reserve(n_elems);
    mult_.assign(static_cast<std::size_t>(rank_) * n_elems, -1);

    ArenaHash hash{&mats_, stride};
    ArenaEq eq{&mats_, stride};
    std::unordered_set<std::int32_t, ArenaHash, ArenaEq> seen(n_elems * 2, hash, eq);

    mats_.resize(stride, 0);
    for (int i = 0; i < rank_; ++i) mats_[static_cast<std::size_t>(i) * rank_ + i] = 1;
    length_.push_back(0);
    seen.insert(0);

    for (std::int32_t w = 0; w < static_cast<std::int32_t>(length_.size()); ++w) {
        for (int s = 0; s < rank_; ++s) {
            if (mult_[static_cast<std::size_t>(s) * n_elems + w] >= 0) continue;
            // Left multiplication by s replaces row s with the sum of the
            // adjacent rows minus row s.
            std::int32_t cand = static_cast<std::int32_t>(length_.size());
            mats_.insert(mats_.end(), mats_.begin() + static_cast<std::size_t>(w) * stride,
                         mats_.begin() + (static_cast<std::size_t>(w) + 1) * stride);
            std::int8_t* row = mats_.data() + static_cast<std::size_t>(cand) * stride +
                               static_cast<std::size_t>(s) * rank_;
            const std::int8_t* base = mats_.data() + static_cast<std::size_t>(cand) * stride;
            for (int j = 0; j < rank_; ++j) row[j] = static_cast<std::int8_t>(-row[j]);
            for (const auto& [t, m2] : d.neighbors(s)) {
                (void)m2;
                const std::int8_t* other = base + static_cast<std::size_t>(t) * rank_;
                for (int j = 0; j < rank_; ++j) row[j] = static_cast<std::int8_t>(row[j] + other[j]);
            }
            auto [it, inserted] = seen.insert(cand);
            if (inserted) {
                length_.push_back(length_[w] + 1);
                mult_[static_cast<std::size_t>(s) * n_elems + w] = cand;
                mult_[static_cast<std::size_t>(s) * n_elems + cand] = w;
            } else {
                mats_.resize(static_cast<std::size_t>(cand) * stride);
                mult_[static_cast<std::size_t>(s) * n_elems + w] = *it;
                mult_[static_cast<std::size_t>(s) * n_elems + *it] = w;
            }
        }
    }
    if (length_.size() != n_elems)
        fail_domain("group enumeration produced " + std::to_string(length_.size()) +
                    " elements, expected " + total.order.str());

    // Canonical words by the least-left-descent recursion; BFS order makes
    // every parent index smaller than its children within shorter lengths.
    word_off_.assign(n_elems + 1, 0);
    for (std::size_t w = 0; w < n_elems; ++w)
        word_off_[w + 1] = word_off_[w] + static_cast<std::uint64_t>(length_[w]);
    word_arena_.resize(word_off_[n_elems]);
    support_.assign(n_elems, 0);
    for (std::int32_t w = 1; w < static_cast<std::int32_t>(n_elems); ++w) {
        int s = 0;
        while (length_[left_mult(s, w)] > length_[w]) ++s;
        std::int32_t parent = left_mult(s, w);
        word_arena_[word_off_[w]] = static_cast<std::int8_t>(s);
        std::copy(word_arena_.begin() + word_off_[parent], word_arena_.begin() + word_off_[parent + 1],
                  word_arena_.begin() + word_off_[w] + 1);
        support_[w] = support_[parent] | (1u << s);
    }
}

std::vector<std::int8_t> CoxGroup::word(int w) const {
    return {word_arena_.begin() + word_off_[w], word_arena_.begin() + word_off_[w + 1]};
}

std::vector<std::int8_t> CoxGroup::matrix(int w) const {
    std::size_t stride = static_cast<std::size_t>(rank_) * rank_;
    return {mats_.begin() + static_cast<std::size_t>(w) * stride,
            mats_.begin() + (static_cast<std::size_t>(w) + 1) * stride};
}

GroupElement CoxGroup::element(int w) const {
    GroupElement e;
    e.word = word(w);
    e.support = support_[w];
    e.matrix = matrix(w);
    return e;
}

std::vector<GroupElement> enumerate_group(const CoxeterDiagram& d, std::size_t cap) {
    CoxGroup g(d, cap);
    std::vector<GroupElement> out;
    out.reserve(g.size());
    for (std::size_t w = 0; w < g.size(); ++w) out.push_back(g.element(static_cast<int>(w)));
    return out;
}

BigInt elements_avoiding(const CoxeterDiagram& d, const std::vector<int>& b, std::size_t cap) {
    if (!is_simply_laced(d)) fail_domain("elements_avoiding needs a simply-laced diagram");
    std::vector<bool> banned(d.size(), false);
    for (int v : b) {
        if (v < 0 || v >= d.size()) fail_domain("elements_avoiding: unknown vertex index");
        banned[v] = true;
    }
    std::vector<int> keep;
    for (int v = 0; v < d.size(); ++v)
        if (!banned[v]) keep.push_back(v);
    auto total = group_order(induced_subdiagram(d, keep));
    if (!total.finite) fail_domain("parabolic subgroup is not of finite type");
    if (total.order > cap)
        fail_cap("parabolic subgroup has " + total.order.str() + " elements, above the cap of " +
                 std::to_string(cap));
    return total.order;
}

} // namespace heckeq
