#include "heckeq/commutative.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "heckeq/collapse.hpp"
#include "heckeq/errors.hpp"

namespace heckeq {

bool vertex_set_less(std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    // The lowest differing vertex decides; the set containing it comes first.
    std::uint32_t diff = a ^ b;
    return (a >> std::countr_zero(diff)) & 1u;
}

namespace {

void enum_rec(const SimpleGraph& g, std::uint32_t allowed, std::uint32_t cur,
              std::vector<std::uint32_t>& out, std::size_t cap) {
    if (allowed == 0) {
        if (out.size() >= cap)
            fail_cap("more than " + std::to_string(cap) + " independent sets");
        out.push_back(cur);
        return;
    }
    int v = std::countr_zero(allowed);
    enum_rec(g, allowed & ~(1u << v), cur, out, cap);
    enum_rec(g, allowed & ~(1u << v) & ~g.adj(v), cur | (1u << v), out, cap);
}

// Connected component of v inside mask.
std::uint32_t component_of(const SimpleGraph& g, std::uint32_t mask, int v) {
    std::uint32_t comp = 1u << v, frontier = comp;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f;) {
            int u = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj(u) & mask & ~comp;
        }
        comp |= next;
        frontier = next;
    }
    return comp;
}

BigInt count_rec(const SimpleGraph& g, std::uint32_t allowed) {
    BigInt total = 1;
    std::uint32_t rest = allowed;
    while (rest) {
        std::uint32_t comp = component_of(g, rest, std::countr_zero(rest));
        rest &= ~comp;
        if (std::popcount(comp) == 1) {
            total *= 2;
            continue;
        }
        // Branch on a vertex of maximal degree within the component.
        int pivot = -1, best = -1;
        for (std::uint32_t c = comp; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            int deg = std::popcount(g.adj(v) & comp);
            if (deg > best) {
                best = deg;
                pivot = v;
            }
        }
        total *= count_rec(g, comp & ~(1u << pivot)) +
                 count_rec(g, comp & ~(1u << pivot) & ~g.adj(pivot));
    }
    return total;
}

} // namespace

std::vector<std::uint32_t> independent_subsets(const SimpleGraph& g, std::uint32_t allowed,
                                               std::size_t cap) {
    std::vector<std::uint32_t> out;
    enum_rec(g, allowed & g.full_mask(), 0, out, cap);
    std::sort(out.begin(), out.end(), vertex_set_less);
    return out;
}

std::vector<std::uint32_t> independent_sets(const SimpleGraph& g, std::size_t cap) {
    return independent_subsets(g, g.full_mask(), cap);
}

BigInt count_independent_subsets(const SimpleGraph& g, std::uint32_t allowed) {
    return count_rec(g, allowed & g.full_mask());
}

BigInt count_independent_sets(const SimpleGraph& g) {
    return count_rec(g, g.full_mask());
}

CommElement comm_add(const CommElement& a, const CommElement& b) {
    CommElement r = a;
    for (const auto& [mono, c] : b.coeffs) {
        auto it = r.coeffs.find(mono);
        if (it == r.coeffs.end()) {
            r.coeffs.emplace(mono, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.coeffs.erase(it);
        }
    }
    return r;
}

CommElement comm_scale(const Scalar& c, const CommElement& a) {
    CommElement r;
    if (c.is_zero()) return r;
    for (const auto& [mono, x] : a.coeffs) r.coeffs.emplace(mono, c * x);
    return r;
}

HGRAlgebra::HGRAlgebra(SimpleGraph graph, std::uint32_t nil_set, FieldSpec field, std::size_t cap)
    : g_(std::move(graph)), r_(nil_set), field_(field), cap_(cap) {
    if (r_ & ~g_.full_mask()) fail_domain("nilpotent set contains vertices outside the graph");
    basis_ = independent_subsets(g_, g_.full_mask(), cap_);
    labels_ = independent_subsets(g_, g_.full_mask() & ~r_, cap_);
}

void HGRAlgebra::require_independent(std::uint32_t i, const std::string& what) const {
    if (i & ~g_.full_mask()) fail_domain(what + " contains vertices outside the graph");
    for (std::uint32_t c = i; c;) {
        int v = std::countr_zero(c);
        c &= c - 1;
        if (g_.adj(v) & i) fail_domain(what + " is not an independent set");
    }
}

CommElement HGRAlgebra::multiply_monomials(std::uint32_t i, std::uint32_t j) const {
    require_independent(i, "left factor");
    require_independent(j, "right factor");
    CommElement r;
    if (i & j & r_) return r;
    std::uint32_t u = i | j;
    if (g_.neighborhood(u) & u) return r;
    r.coeffs.emplace(u, Scalar::one(field_));
    return r;
}

CommElement HGRAlgebra::defining_module_action(int v, std::uint32_t i) const {
    require_independent(i, "monomial");
    if (v < 0 || v >= g_.size()) fail_domain("vertex index out of range");
    std::uint32_t bit = 1u << v;
    CommElement r;
    if ((i & bit & r_) != 0) return r;
    if (g_.adj(v) & i) return r;
    r.coeffs.emplace(i | bit, Scalar::one(field_));
    return r;
}

CommElement HGRAlgebra::multiply(const CommElement& a, const CommElement& b) const {
    CommElement r;
    for (const auto& [mi, ci] : a.coeffs)
        for (const auto& [mj, cj] : b.coeffs) {
            CommElement t = multiply_monomials(mi, mj);
            if (t.is_zero()) continue;
            r = comm_add(r, comm_scale(ci * cj, t));
        }
    return r;
}

CommElement HGRAlgebra::unit() const {
    CommElement r;
    r.coeffs.emplace(0u, Scalar::one(field_));
    return r;
}

CommElement HGRAlgebra::alternating_sum(std::uint32_t base, std::uint32_t allowed) const {
    CommElement r;
    Scalar one = Scalar::one(field_);
    Scalar minus_one = -one;
    for (std::uint32_t k : independent_subsets(g_, allowed, cap_))
        r.coeffs.emplace(base | k, std::popcount(k) % 2 == 0 ? one : minus_one);
    return r;
}

const std::vector<std::pair<std::uint32_t, CommElement>>& HGRAlgebra::idempotents() const {
    if (idem_.empty() && !labels_.empty()) {
        for (std::uint32_t i : labels_) {
            std::uint32_t allowed = g_.full_mask() & ~r_ & ~i & ~g_.neighborhood(i);
            idem_.emplace_back(i, alternating_sum(i, allowed));
        }
    }
    return idem_;
}

std::vector<CommElement> HGRAlgebra::projective_basis(std::uint32_t i) const {
    require_independent(i, "module label");
    if (i & r_) fail_domain("module label meets the nilpotent set");
    std::vector<CommElement> out;
    for (std::uint32_t j : independent_subsets(g_, r_ & ~g_.neighborhood(i), cap_)) {
        std::uint32_t allowed =
            g_.full_mask() & ~r_ & ~i & ~g_.neighborhood(i | j);
        out.push_back(alternating_sum(i | j, allowed));
    }
    return out;
}

std::vector<std::pair<std::uint32_t, BigInt>> HGRAlgebra::cartan_matrix() const {
    std::vector<std::pair<std::uint32_t, BigInt>> out;
    out.reserve(labels_.size());
    for (std::uint32_t i : labels_)
        out.emplace_back(i, count_independent_subsets(g_, r_ & ~g_.neighborhood(i)));
    return out;
}

std::vector<CommElement> HGRAlgebra::radical_basis() const {
    std::vector<CommElement> out;
    for (std::uint32_t i : basis_) {
        if ((i & r_) == 0) continue;
        CommElement e;
        e.coeffs.emplace(i, Scalar::one(field_));
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<std::uint32_t> HGRAlgebra::socle_labels(std::uint32_t i) const {
    require_independent(i, "module label");
    if (i & r_) fail_domain("module label meets the nilpotent set");
    std::uint32_t allowed = r_ & ~g_.neighborhood(i);
    std::vector<std::uint32_t> out;
    for (std::uint32_t j : independent_subsets(g_, allowed, cap_))
        if ((allowed & ~(j | g_.neighborhood(j))) == 0) out.push_back(j);
    return out;
}

std::uint32_t HGRAlgebra::restrict_simple(std::uint32_t i, std::uint32_t vsub) const {
    require_independent(i, "module label");
    if (vsub & ~g_.full_mask()) fail_domain("vertex subset contains vertices outside the graph");
    return i & vsub;
}

std::vector<std::uint32_t> HGRAlgebra::induce_simple_semisimple(std::uint32_t vsub,
                                                                std::uint32_t isub) const {
    if (r_ != 0)
        fail_domain("simple induction needs an empty nilpotent set; induce a projective instead");
    if (vsub & ~g_.full_mask()) fail_domain("vertex subset contains vertices outside the graph");
    if (isub & ~vsub) fail_domain("label is not contained in the vertex subset");
    require_independent(isub, "module label");
    std::vector<std::uint32_t> out;
    for (std::uint32_t i : basis_)
        if ((i & vsub) == isub) out.push_back(i);
    return out;
}

std::vector<std::uint32_t> HGRAlgebra::induce_projective(std::uint32_t vsub,
                                                         std::uint32_t j) const {
    if (vsub & ~g_.full_mask()) fail_domain("vertex subset contains vertices outside the graph");
    if (j & ~vsub) fail_domain("label is not contained in the vertex subset");
    if (j & r_) fail_domain("module label meets the nilpotent set");
    require_independent(j, "module label");
    std::vector<std::uint32_t> out;
    for (std::uint32_t k : labels_)
        if ((k & vsub) == j) out.push_back(k);
    return out;
}

std::string HGRAlgebra::set_str(std::uint32_t i) const {
    std::string s = "{";
    bool first = true;
    for (std::uint32_t c = i; c;) {
        int v = std::countr_zero(c);
        c &= c - 1;
        if (!first) s += ",";
        s += g_.name(v);
        first = false;
    }
    return s + "}";
}

std::string HGRAlgebra::monomial_str(std::uint32_t i) const {
    if (i == 0) return "1";
    std::string s;
    for (std::uint32_t c = i; c;) {
        int v = std::countr_zero(c);
        c &= c - 1;
        if (!s.empty()) s += "*";
        s += "x_" + g_.name(v);
    }
    return s;
}

std::string HGRAlgebra::element_str(const CommElement& e) const {
    if (e.coeffs.empty()) return "0";
    std::vector<std::uint32_t> monos;
    monos.reserve(e.coeffs.size());
    for (const auto& [mono, c] : e.coeffs) monos.push_back(mono);
    std::sort(monos.begin(), monos.end(), vertex_set_less);
    std::string s;
    for (std::uint32_t mono : monos) {
        const Scalar& c = e.coeffs.at(mono);
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (s.empty()) {
            if (negative) {
                s += "-";
                cs = cs.substr(1);
            }
        } else {
            s += negative ? " - " : " + ";
            if (negative) cs = cs.substr(1);
        }
        if (mono == 0) {
            s += cs;
        } else if (cs == "1") {
            s += monomial_str(mono);
        } else {
            s += cs + "*" + monomial_str(mono);
        }
    }
    return s;
}

HGRAlgebra from_hecke(const CoxeterDiagram& d) {
    if (!is_commutative(d)) fail_domain("diagram does not present a commutative algebra");
    Scalar minus_one = -Scalar::one(d.field());
    std::uint32_t r = 0;
    for (int v = 0; v < d.size(); ++v)
        if (d.param(v) == minus_one) r |= 1u << v;
    return HGRAlgebra(underlying_graph(d), r, d.field());
}

namespace {

std::vector<std::string> poset_tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::vector<std::string> toks;
    std::istringstream is(body);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void poset_fail(int lineno, const std::string& msg) {
    fail_domain("line " + std::to_string(lineno) + ": " + msg);
}

} // namespace

RankTwoPoset parse_poset(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    RankTwoPoset z;
    struct RawCover { std::string upper, lower; int lineno; };
    std::vector<RawCover> raw;

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = poset_tokenize(line);
        if (toks.empty()) continue;
        if (!saw_header) {
            if (toks.size() != 1 || toks[0] != "poset")
                poset_fail(lineno, "poset file must start with a 'poset' header line");
            saw_header = true;
        } else if (toks[0] == "element") {
            if (toks.size() != 2) poset_fail(lineno, "expected 'element <name>'");
            z.names.push_back(toks[1]);
        } else if (toks[0] == "cover") {
            if (toks.size() != 3) poset_fail(lineno, "expected 'cover <upper> <lower>'");
            raw.push_back({toks[1], toks[2], lineno});
        } else {
            poset_fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!saw_header) fail_domain("empty poset file");

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < z.names.size(); ++i)
        if (!index.emplace(z.names[i], static_cast<int>(i)).second)
            fail_domain("duplicate element '" + z.names[i] + "'");
    for (const auto& c : raw) {
        auto u = index.find(c.upper);
        auto l = index.find(c.lower);
        if (u == index.end()) poset_fail(c.lineno, "unknown element '" + c.upper + "'");
        if (l == index.end()) poset_fail(c.lineno, "unknown element '" + c.lower + "'");
        if (u->second == l->second) poset_fail(c.lineno, "element cannot cover itself");
        z.covers.emplace_back(u->second, l->second);
    }
    std::sort(z.covers.begin(), z.covers.end());
    for (std::size_t i = 1; i < z.covers.size(); ++i)
        if (z.covers[i] == z.covers[i - 1])
            fail_domain("duplicate cover " + z.names[z.covers[i].first] + " > " +
                        z.names[z.covers[i].second]);
    return z;
}

namespace {

using PosetElement = std::map<std::uint32_t, Scalar>;

void add_into(PosetElement& e, std::uint32_t mono, const Scalar& c) {
    auto it = e.find(mono);
    if (it == e.end()) {
        e.emplace(mono, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) e.erase(it);
    }
}

// Monomial basis arithmetic for the poset algebra: parameter 0 on upper
// elements and 1 on lower ones, so each generator maps a monomial to a single
// monomial.
struct PosetAlgebra {
    const SimpleGraph& g;
    std::uint32_t uppers;
    FieldSpec field;

    std::uint32_t apply(int v, std::uint32_t mono) const {
        std::uint32_t bit = 1u << v;
        if (uppers & bit) {
            if (mono & bit) return mono;
            return (mono & ~g.adj(v)) | bit;
        }
        if (mono & bit) return mono & ~bit;
        if (g.adj(v) & mono) return mono;
        return mono | bit;
    }

    std::uint32_t apply_set(std::uint32_t set, std::uint32_t mono) const {
        for (std::uint32_t s = set; s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            mono = apply(v, mono);
        }
        return mono;
    }

    // Product over the rescaled generators: upper elements stay as is, lower
    // ones become (T + 1)/2.
    PosetElement rescaled_monomial(std::uint32_t set) const {
        PosetElement e;
        e.emplace(0u, Scalar::one(field));
        Scalar half = Scalar::one(field) / Scalar::from_int(field, 2);
        for (std::uint32_t c = set; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            PosetElement next;
            if (uppers & (1u << v)) {
                for (const auto& [mono, coeff] : e) add_into(next, apply(v, mono), coeff);
            } else {
                for (const auto& [mono, coeff] : e) {
                    add_into(next, mono, half * coeff);
                    add_into(next, apply(v, mono), half * coeff);
                }
            }
            e = std::move(next);
        }
        return e;
    }
};

} // namespace

MoebiusReport moebius_check(const RankTwoPoset& z, const FieldSpec& field) {
    if (field.characteristic() == 2)
        fail_domain("rescaling the lower generators needs characteristic other than 2");
    if (z.size() > 20) fail_cap("poset has more than 20 elements");

    std::uint32_t uppers = 0, lowers_covered = 0;
    for (const auto& [u, l] : z.covers) {
        uppers |= 1u << u;
        lowers_covered |= 1u << l;
    }
    if (uppers & lowers_covered) {
        int v = std::countr_zero(uppers & lowers_covered);
        fail_domain("not rank two: element '" + z.names[v] + "' both covers and is covered");
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, l] : z.covers) edges.emplace_back(std::min(u, l), std::max(u, l));
    SimpleGraph g(z.names, edges);
    PosetAlgebra alg{g, uppers, field};

    // Order ideals: down-closed subsets. In rank two a subset is down-closed
    // exactly when each chosen upper element brings all elements it covers.
    std::vector<std::uint32_t> below(z.size(), 0);
    for (const auto& [u, l] : z.covers) below[u] |= 1u << l;
    auto ideal_of = [&](std::uint32_t set) {
        std::uint32_t j = set;
        for (std::uint32_t c = set & uppers; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            j |= below[v];
        }
        return j;
    };
    auto is_ideal = [&](std::uint32_t set) { return ideal_of(set) == set; };

    MoebiusReport report;
    std::vector<std::uint32_t> antichains = independent_sets(g);
    report.antichains = antichains.size();
    std::uint64_t ideal_count = 0;
    std::uint32_t all = g.full_mask();
    for (std::uint32_t set = 0;; ++set) {
        if (is_ideal(set)) ++ideal_count;
        if (set == all) break;
    }
    report.ideals = ideal_count;
    if (report.antichains != report.ideals) {
        report.first_violation = "antichain and ideal counts differ";
        return report;
    }

    auto maximal_of = [&](std::uint32_t ideal) {
        std::uint32_t covered = 0;
        for (std::uint32_t c = ideal & uppers; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            covered |= below[v];
        }
        return ideal & ~covered;
    };

    std::vector<PosetElement> rescaled;
    rescaled.reserve(antichains.size());
    std::size_t total_terms = 0;
    for (std::uint32_t a : antichains) {
        rescaled.push_back(alg.rescaled_monomial(a));
        total_terms += rescaled.back().size();
    }
    if (total_terms > 20000)
        fail_cap("expanded monomials exceed the pairwise check budget");

    for (std::size_t i = 0; i < antichains.size(); ++i) {
        for (std::size_t j = 0; j < antichains.size(); ++j) {
            std::uint32_t union_ideal = ideal_of(antichains[i]) | ideal_of(antichains[j]);
            std::uint32_t compose = maximal_of(union_ideal);
            PosetElement product;
            for (const auto& [mj, cj] : rescaled[j])
                for (const auto& [mi, ci] : rescaled[i])
                    add_into(product, alg.apply_set(mj, mi), ci * cj);
            ++report.pairs_checked;
            if (ideal_of(compose) != union_ideal) {
                report.first_violation = "ideal of the composition differs from the union";
                return report;
            }
            auto pos = std::lower_bound(antichains.begin(), antichains.end(), compose,
                                        vertex_set_less);
            if (pos == antichains.end() || *pos != compose ||
                product != rescaled[pos - antichains.begin()]) {
                report.first_violation =
                    "product of rescaled monomials is not the rescaled composition";
                return report;
            }
        }
    }
    report.ok = true;
    return report;
}

} // namespace heckeq
