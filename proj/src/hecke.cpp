#include "heckeq/hecke.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "heckeq/collapse.hpp"
#include "heckeq/commutative.hpp"
#include "heckeq/errors.hpp"

namespace heckeq {

namespace {

std::string vertex_set_str(const CoxeterDiagram& d, const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += d.name(vs[i]);
    }
    out += "}";
    return out;
}

void require_wq_diagram(const CoxeterDiagram& d) {
    if (!is_simply_laced(d)) fail_domain("the tuple basis needs a simply-laced diagram");
    if (!is_collapse_free(d)) fail_domain("the tuple basis needs a collapse-free diagram");
}

// Block groups in partition order; rejects infinite blocks by name.
std::vector<CoxGroup> block_groups(const CoxeterDiagram& d, const BlockPartition& p,
                                   std::size_t cap) {
    std::vector<CoxGroup> groups;
    groups.reserve(p.blocks.size());
    for (const auto& blk : p.blocks) {
        CoxeterDiagram sub = induced_subdiagram(d, blk);
        GroupOrder go = group_order(sub);
        if (!go.finite)
            fail_domain("block " + vertex_set_str(d, blk) + " generates an infinite group");
        groups.emplace_back(sub, cap);
    }
    return groups;
}

// All tuples whose dominated coordinates are the identity, sorted
// lexicographically by per-block element index.
std::vector<WqTuple> enumerate_tuples(const BlockPartition& p,
                                      const std::vector<CoxGroup>& groups, std::size_t cap) {
    const int k = p.block_count();
    std::vector<int> zeros, nonzeros;
    for (int i = 0; i < k; ++i)
        (p.block_param[i].is_zero() ? zeros : nonzeros).push_back(i);

    std::vector<WqTuple> out;
    WqTuple t(static_cast<std::size_t>(k), 0);

    std::function<void(std::size_t)> fill_free = [&](std::size_t fi) {
        if (fi == nonzeros.size()) {
            if (out.size() >= cap) fail_cap("tuple enumeration exceeds the element cap");
            out.push_back(t);
            return;
        }
        int j = nonzeros[fi];
        bool dominated = false;
        for (int i : zeros) {
            if (groups[i].support(t[i]) & p.dom_sources[i][j]) {
                dominated = true;
                break;
            }
        }
        if (dominated) {
            t[j] = 0;
            fill_free(fi + 1);
            return;
        }
        const std::int32_t n = static_cast<std::int32_t>(groups[j].size());
        for (std::int32_t w = 0; w < n; ++w) {
            t[j] = w;
            fill_free(fi + 1);
        }
        t[j] = 0;
    };
    std::function<void(std::size_t)> fill_zero = [&](std::size_t zi) {
        if (zi == zeros.size()) {
            fill_free(0);
            return;
        }
        int i = zeros[zi];
        const std::int32_t n = static_cast<std::int32_t>(groups[i].size());
        for (std::int32_t w = 0; w < n; ++w) {
            t[i] = w;
            fill_zero(zi + 1);
        }
        t[i] = 0;
    };
    fill_zero(0);
    std::sort(out.begin(), out.end());
    return out;
}

void add_term(std::map<std::int32_t, Scalar>& m, std::int32_t key, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, v);
        return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) m.erase(it);
}

} // namespace

BlockPartition block_partition(const CoxeterDiagram& d) {
    const int n = d.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : d.edges())
        if (d.param(e.u) == d.param(e.v)) parent[find(e.u)] = find(e.v);

    BlockPartition p;
    p.block_of.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (p.block_of[r] < 0) {
            p.block_of[r] = p.block_count();
            p.blocks.emplace_back();
            p.block_param.push_back(d.param(r));
        }
        p.block_of[v] = p.block_of[r];
        p.blocks[p.block_of[v]].push_back(v);
    }

    const int k = p.block_count();
    p.dom_sources.assign(static_cast<std::size_t>(k), std::vector<std::uint32_t>(k, 0));
    auto local_pos = [&](int v) {
        const auto& blk = p.blocks[p.block_of[v]];
        return static_cast<int>(std::lower_bound(blk.begin(), blk.end(), v) - blk.begin());
    };
    for (const auto& e : d.edges()) {
        int i = p.block_of[e.u], j = p.block_of[e.v];
        if (i == j) continue;
        int u = e.u, v = e.v;
        if (i > j) {
            std::swap(i, j);
            std::swap(u, v);
        }
        p.cross_edges[{i, j}].emplace_back(u, v);
        if (e.m == 3) {
            if (d.param(e.u).is_zero())
                p.dom_sources[p.block_of[e.u]][p.block_of[e.v]] |= 1u << local_pos(e.u);
            if (d.param(e.v).is_zero())
                p.dom_sources[p.block_of[e.v]][p.block_of[e.u]] |= 1u << local_pos(e.v);
        }
    }
    return p;
}

bool dominates(const BlockPartition& p, int i, const GroupElement& w, int j) {
    if (i < 0 || j < 0 || i >= p.block_count() || j >= p.block_count())
        fail_domain("block index out of range");
    if (i == j) fail_domain("a block does not dominate itself");
    return (w.support & p.dom_sources[i][j]) != 0;
}

std::vector<WqTuple> enumerate_Wq(const CoxeterDiagram& d, std::size_t cap) {
    require_wq_diagram(d);
    BlockPartition p = block_partition(d);
    std::vector<CoxGroup> groups = block_groups(d, p, cap);
    return enumerate_tuples(p, groups, cap);
}

BigInt count_Wq(const CoxeterDiagram& d) {
    require_wq_diagram(d);
    BlockPartition p = block_partition(d);
    const int k = p.block_count();

    std::vector<CoxeterDiagram> subs;
    std::vector<BigInt> orders;
    subs.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        subs.push_back(induced_subdiagram(d, p.blocks[i]));
        GroupOrder go = group_order(subs.back());
        if (!go.finite)
            fail_domain("block " + vertex_set_str(d, p.blocks[i]) +
                        " generates an infinite group");
        orders.push_back(go.order);
    }

    std::vector<int> zeros, nonzeros;
    for (int i = 0; i < k; ++i)
        (p.block_param[i].is_zero() ? zeros : nonzeros).push_back(i);
    if (nonzeros.size() > 20) fail_cap("too many nonzero blocks for the subset scan");

    // Order of the parabolic of zero block zi avoiding the local generators in u.
    std::vector<std::map<std::uint32_t, BigInt>> memo(zeros.size());
    auto avoid = [&](std::size_t zi, std::uint32_t u) -> const BigInt& {
        auto it = memo[zi].find(u);
        if (it != memo[zi].end()) return it->second;
        int i = zeros[zi];
        std::vector<int> keep;
        for (int pos = 0; pos < static_cast<int>(p.blocks[i].size()); ++pos)
            if (!((u >> pos) & 1u)) keep.push_back(pos);
        BigInt val = group_order(induced_subdiagram(subs[i], keep)).order;
        return memo[zi].emplace(u, std::move(val)).first->second;
    };

    BigInt total = 0;
    const std::uint32_t subsets = 1u << nonzeros.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        BigInt term = 1;
        for (std::size_t t = 0; t < nonzeros.size(); ++t)
            if ((mask >> t) & 1u) term *= orders[nonzeros[t]] - 1;
        for (std::size_t zi = 0; zi < zeros.size(); ++zi) {
            std::uint32_t u = 0;
            for (std::size_t t = 0; t < nonzeros.size(); ++t)
                if ((mask >> t) & 1u) u |= p.dom_sources[zeros[zi]][nonzeros[t]];
            term *= avoid(zi, u);
        }
        total += term;
    }
    return total;
}

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
    HeckeElement out = a;
    for (const auto& [k, v] : b.coeffs) add_term(out.coeffs, k, v);
    return out;
}

HeckeElement hecke_scale(const Scalar& c, const HeckeElement& a) {
    HeckeElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : a.coeffs) add_term(out.coeffs, k, c * v);
    return out;
}

WqAlgebra::WqAlgebra(const CoxeterDiagram& d, std::size_t cap) : d_(d) {
    require_wq_diagram(d_);
    part_ = block_partition(d_);
    groups_ = block_groups(d_, part_, cap);
    for (int i = 0; i < part_.block_count(); ++i)
        if (part_.block_param[i].is_zero()) zero_blocks_.push_back(i);
    local_of_.assign(static_cast<std::size_t>(d_.size()), {-1, -1});
    for (int i = 0; i < part_.block_count(); ++i)
        for (std::size_t pos = 0; pos < part_.blocks[i].size(); ++pos)
            local_of_[part_.blocks[i][pos]] = {i, static_cast<int>(pos)};
    basis_ = enumerate_tuples(part_, groups_, cap);
    rows_.resize(static_cast<std::size_t>(d_.size()));
}

std::int32_t WqAlgebra::index_of(const WqTuple& t) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), t);
    if (it == basis_.end() || *it != t) fail_domain("tuple is not a basis element");
    return static_cast<std::int32_t>(it - basis_.begin());
}

HeckeElement WqAlgebra::unit() const { return basis_element(0); }

HeckeElement WqAlgebra::basis_element(std::int32_t idx) const {
    if (idx < 0 || static_cast<std::size_t>(idx) >= basis_.size())
        fail_domain("basis index out of range");
    HeckeElement x;
    x.coeffs.emplace(idx, Scalar::one(d_.field()));
    return x;
}

const std::vector<WqAlgebra::ActionEntry>& WqAlgebra::action_row(int s) const {
    if (s < 0 || s >= d_.size()) fail_domain("generator index out of range");
    auto& row = rows_[static_cast<std::size_t>(s)];
    if (!row.empty()) return row;

    const auto [i, pos] = local_of_[static_cast<std::size_t>(s)];
    const bool qzero = part_.block_param[i].is_zero();
    row.resize(basis_.size());
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const WqTuple& t = basis_[b];
        bool dominated = false;
        for (int z : zero_blocks_) {
            if (z != i && (groups_[z].support(t[z]) & part_.dom_sources[z][i])) {
                dominated = true;
                break;
            }
        }
        if (dominated) {
            row[b] = {static_cast<std::int32_t>(b), 0};
            continue;
        }
        const std::int32_t wi = t[i];
        const std::int32_t swi =
            static_cast<std::int32_t>(groups_[i].left_mult(pos, wi));
        if (groups_[i].length(swi) < groups_[i].length(wi)) {
            if (qzero) {
                row[b] = {static_cast<std::int32_t>(b), 0};
            } else {
                WqTuple shifted = t;
                shifted[i] = swi;
                row[b] = {index_of(shifted), 2};
            }
            continue;
        }
        WqTuple shifted = t;
        shifted[i] = swi;
        if (qzero) {
            for (int j = 0; j < part_.block_count(); ++j)
                if (j != i && ((part_.dom_sources[i][j] >> pos) & 1u)) shifted[j] = 0;
        }
        row[b] = {index_of(shifted), 1};
    }
    return row;
}

HeckeElement WqAlgebra::generator_action(int s, const HeckeElement& x) const {
    const auto& row = action_row(s);
    const Scalar q = d_.param(s);
    const Scalar omq = Scalar::one(d_.field()) - q;
    HeckeElement out;
    for (const auto& [idx, c] : x.coeffs) {
        const ActionEntry& e = row[static_cast<std::size_t>(idx)];
        switch (e.kind) {
            case 0: add_term(out.coeffs, idx, c); break;
            case 1: add_term(out.coeffs, e.target, c); break;
            default:
                add_term(out.coeffs, idx, omq * c);
                add_term(out.coeffs, e.target, q * c);
        }
    }
    return out;
}

HeckeElement WqAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
    HeckeElement out;
    for (const auto& [ua, ca] : a.coeffs) {
        HeckeElement y = b;
        const WqTuple& t = basis_[static_cast<std::size_t>(ua)];
        for (int i = part_.block_count() - 1; i >= 0; --i) {
            const std::vector<std::int8_t> w = groups_[i].word(t[i]);
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                y = generator_action(part_.blocks[i][static_cast<std::size_t>(*it)], y);
        }
        for (const auto& [idx, cy] : y.coeffs) add_term(out.coeffs, idx, ca * cy);
    }
    return out;
}

std::string WqAlgebra::tuple_str(std::int32_t idx) const {
    if (idx < 0 || static_cast<std::size_t>(idx) >= basis_.size())
        fail_domain("basis index out of range");
    const WqTuple& t = basis_[static_cast<std::size_t>(idx)];
    std::string out = "(";
    for (int i = 0; i < part_.block_count(); ++i) {
        if (i) out += ", ";
        if (t[i] == 0) {
            out += "1";
            continue;
        }
        const std::vector<std::int8_t> w = groups_[i].word(t[i]);
        for (std::size_t l = 0; l < w.size(); ++l) {
            if (l) out += "*";
            out += d_.name(part_.blocks[i][static_cast<std::size_t>(w[l])]);
        }
    }
    out += ")";
    return out;
}

DihedralModule::DihedralModule(const CoxeterDiagram& d) : d_(d) {
    if (d_.size() != 2 || d_.edges().size() != 1)
        fail_domain("the alternating-word module needs two vertices joined by one edge");
    m_ = d_.edges()[0].m;
    if (m_ == CoxeterDiagram::infinite_weight || m_ % 2 == 0)
        fail_domain("the alternating-word module needs a finite odd edge weight");
    const bool z0 = d_.param(0).is_zero();
    if (z0 == d_.param(1).is_zero())
        fail_domain("the alternating-word module needs one zero and one nonzero parameter");
    zero_vertex_ = z0 ? 0 : 1;
    q_ = d_.param(1 - zero_vertex_);
}

HeckeElement DihedralModule::unit() const { return basis_element(0); }

HeckeElement DihedralModule::basis_element(std::int32_t idx) const {
    if (idx < 0 || idx >= dim()) fail_domain("basis index out of range");
    HeckeElement x;
    x.coeffs.emplace(idx, Scalar::one(d_.field()));
    return x;
}

HeckeElement DihedralModule::generator_action(int s, const HeckeElement& x) const {
    if (s < 0 || s > 1) fail_domain("generator index out of range");
    const bool by_s = (s == zero_vertex_); // the zero-parameter generator
    const std::int32_t top = m_ - 2;       // chain length bound
    const Scalar omq = Scalar::one(d_.field()) - q_;
    HeckeElement out;
    for (const auto& [idx, c] : x.coeffs) {
        if (idx == 0) {
            add_term(out.coeffs, by_s ? 1 : top + 1, c);
        } else if (idx <= top) {
            // Words starting with the zero-parameter generator.
            const std::int32_t k = idx;
            if (by_s)
                add_term(out.coeffs, idx, c);
            else
                add_term(out.coeffs, k < top ? top + k + 1 : top, c);
        } else {
            // Words starting with the nonzero-parameter generator.
            const std::int32_t k = idx - top;
            if (by_s) {
                add_term(out.coeffs, k < top ? k + 1 : top, c);
            } else {
                add_term(out.coeffs, k - 1, q_ * c);
                add_term(out.coeffs, idx, omq * c);
            }
        }
    }
    return out;
}

std::string DihedralModule::basis_str(std::int32_t idx) const {
    if (idx < 0 || idx >= dim()) fail_domain("basis index out of range");
    if (idx == 0) return "1";
    const std::int32_t top = m_ - 2;
    int first = idx <= top ? zero_vertex_ : 1 - zero_vertex_;
    int len = idx <= top ? idx : idx - top;
    std::string out;
    for (int l = 0; l < len; ++l) {
        if (l) out += "*";
        out += d_.name(l % 2 == 0 ? first : 1 - first);
    }
    return out;
}

namespace {

// Evenly spaced basis indices: everything when dim <= cap.
std::vector<std::int32_t> sample_indices(std::size_t dim, std::size_t cap) {
    if (cap == 0) cap = 1;
    const std::size_t stride = dim <= cap ? 1 : (dim + cap - 1) / cap;
    std::vector<std::int32_t> out;
    for (std::size_t b = 0; b < dim; b += stride) out.push_back(static_cast<std::int32_t>(b));
    return out;
}

} // namespace

RelationReport verify_relations(const CoxeterDiagram& d, std::size_t sample_cap) {
    RelationReport rep;
    if (is_simply_laced(d) && is_collapse_free(d)) {
        WqAlgebra alg(d);
        rep.dim = alg.dim();
        const std::vector<std::int32_t> sample = sample_indices(alg.dim(), sample_cap);
        const Scalar one = Scalar::one(d.field());
        for (int s = 0; s < d.size(); ++s) {
            const Scalar q = d.param(s);
            for (std::int32_t b : sample) {
                HeckeElement x = alg.basis_element(b);
                HeckeElement tx = alg.generator_action(s, x);
                HeckeElement lhs = alg.generator_action(s, tx);
                HeckeElement rhs = hecke_add(hecke_scale(one - q, tx), hecke_scale(q, x));
                ++rep.checks;
                if (!(lhs == rhs)) {
                    rep.first_violation = "quadratic relation fails at generator " +
                                          d.name(s) + " on basis vector " + std::to_string(b);
                    return rep;
                }
            }
        }
        for (int u = 0; u < d.size(); ++u) {
            for (int v = u + 1; v < d.size(); ++v) {
                const int m = d.weight(u, v);
                for (std::int32_t b : sample) {
                    HeckeElement x = alg.basis_element(b);
                    HeckeElement lhs, rhs;
                    if (m == 2) {
                        lhs = alg.generator_action(u, alg.generator_action(v, x));
                        rhs = alg.generator_action(v, alg.generator_action(u, x));
                    } else {
                        lhs = alg.generator_action(
                            u, alg.generator_action(v, alg.generator_action(u, x)));
                        rhs = alg.generator_action(
                            v, alg.generator_action(u, alg.generator_action(v, x)));
                    }
                    ++rep.checks;
                    if (!(lhs == rhs)) {
                        rep.first_violation = "braid relation fails for (" + d.name(u) +
                                              ", " + d.name(v) + ") on basis vector " +
                                              std::to_string(b);
                        return rep;
                    }
                }
            }
        }
        rep.ok = true;
        return rep;
    }

    if (d.size() == 2 && d.edges().size() == 1) {
        const int m = d.edges()[0].m;
        if (m != CoxeterDiagram::infinite_weight && m % 2 == 1 &&
            d.param(0).is_zero() != d.param(1).is_zero()) {
            DihedralModule mod(d);
            rep.dim = mod.dim();
            const std::vector<std::int32_t> sample =
                sample_indices(static_cast<std::size_t>(mod.dim()), sample_cap);
            const Scalar one = Scalar::one(d.field());
            for (int s = 0; s < 2; ++s) {
                const Scalar q = d.param(s);
                for (std::int32_t b : sample) {
                    HeckeElement x = mod.basis_element(b);
                    HeckeElement tx = mod.generator_action(s, x);
                    HeckeElement lhs = mod.generator_action(s, tx);
                    HeckeElement rhs = hecke_add(hecke_scale(one - q, tx), hecke_scale(q, x));
                    ++rep.checks;
                    if (!(lhs == rhs)) {
                        rep.first_violation = "quadratic relation fails at generator " +
                                              d.name(s) + " on basis vector " +
                                              std::to_string(b);
                        return rep;
                    }
                }
            }
            for (std::int32_t b : sample) {
                HeckeElement lhs = mod.basis_element(b);
                HeckeElement rhs = lhs;
                for (int l = m - 1; l >= 0; --l) {
                    lhs = mod.generator_action(l % 2 == 0 ? 0 : 1, lhs);
                    rhs = mod.generator_action(l % 2 == 0 ? 1 : 0, rhs);
                }
                ++rep.checks;
                if (!(lhs == rhs)) {
                    rep.first_violation = "braid relation fails for (" + d.name(0) + ", " +
                                          d.name(1) + ") on basis vector " + std::to_string(b);
                    return rep;
                }
            }
            rep.ok = true;
            return rep;
        }
    }
    fail_domain("relation verification covers simply-laced collapse-free diagrams and "
                "two-vertex odd diagrams with one zero parameter");
}

std::string Dimension::str() const {
    switch (kind) {
        case Kind::infinite: return "inf";
        case Kind::unknown:  return "unknown";
        default:             return value.str();
    }
}

Dimension dimension(const CoxeterDiagram& d) {
    const CollapseReport rep = collapsed_subset(d);
    const CoxeterDiagram& red = rep.reduced;

    Dimension out;
    bool unknown = false;
    std::string unknown_detail;
    for (const auto& comp : connected_components(red)) {
        CoxeterDiagram sub = induced_subdiagram(red, comp);

        bool equal_on_odd = true;
        for (const auto& e : sub.edges()) {
            if (e.m != CoxeterDiagram::infinite_weight && e.m % 2 == 1 &&
                !(sub.param(e.u) == sub.param(e.v))) {
                equal_on_odd = false;
                break;
            }
        }
        if (equal_on_odd) {
            GroupOrder go = group_order(sub);
            if (!go.finite) {
                out.kind = Dimension::Kind::infinite;
                out.detail = "component " + vertex_set_str(red, comp) +
                             " generates an infinite group";
                return out;
            }
            out.value *= go.order;
            continue;
        }
        if (is_simply_laced(sub)) {
            BlockPartition part = block_partition(sub);
            bool infinite = false;
            for (const auto& blk : part.blocks) {
                if (!group_order(induced_subdiagram(sub, blk)).finite) {
                    out.kind = Dimension::Kind::infinite;
                    out.detail = "block " + vertex_set_str(sub, blk) +
                                 " generates an infinite group";
                    infinite = true;
                    break;
                }
            }
            if (infinite) return out;
            out.value *= count_Wq(sub);
            continue;
        }
        if (sub.size() == 2 && sub.edges().size() == 1) {
            const int m = sub.edges()[0].m;
            if (m != CoxeterDiagram::infinite_weight && m % 2 == 1 &&
                sub.param(0).is_zero() != sub.param(1).is_zero()) {
                out.value *= 2 * m - 3;
                continue;
            }
        }
        if (!unknown) {
            unknown = true;
            unknown_detail = "component " + vertex_set_str(red, comp) +
                             " is outside the supported cases";
        }
    }
    if (unknown) {
        out.kind = Dimension::Kind::unknown;
        out.detail = unknown_detail;
    }
    return out;
}

BigInt count_Wq_typeA(const std::vector<int>& pattern) {
    // Maximal runs of equal zero/nonzero flags.
    std::vector<std::pair<int, int>> runs; // (flag, length)
    for (int v : pattern) {
        const int flag = v != 0 ? 1 : 0;
        if (!runs.empty() && runs.back().first == flag)
            ++runs.back().second;
        else
            runs.emplace_back(flag, 1);
    }

    // c[x][y]: elements of the zero run's symmetric group whose support
    // contains the boundary generators as prescribed (x left, y right).
    auto profile = [](int a, int x, int y) -> BigInt {
        const BigInt fm = factorial(a - 1), f = factorial(a), fp = factorial(a + 1);
        if (x == 0 && y == 0) return fm;
        if (x != y) return f - fm;
        return fp - 2 * f + fm;
    };

    std::map<int, BigInt> state{{0, BigInt(1)}}; // right-boundary flag -> count
    int pending = 0;                             // unresolved nonzero-run length
    for (const auto& [flag, len] : runs) {
        if (flag == 1) {
            pending = len;
            continue;
        }
        std::map<int, BigInt> next;
        for (const auto& [yprev, cnt] : state) {
            for (int x = 0; x < 2; ++x) {
                const BigInt free_factor =
                    pending == 0 ? BigInt(1)
                                 : (yprev || x ? BigInt(1) : factorial(pending + 1));
                for (int y = 0; y < 2; ++y) {
                    const BigInt c = profile(len, x, y);
                    if (c == 0) continue;
                    next[y] += cnt * c * free_factor;
                }
            }
        }
        state = std::move(next);
        pending = 0;
    }
    BigInt total = 0;
    for (const auto& [yprev, cnt] : state) {
        const BigInt free_factor =
            pending == 0 ? BigInt(1) : (yprev ? BigInt(1) : factorial(pending + 1));
        total += cnt * free_factor;
    }
    return total;
}

MinDimScan min_dimension_scan_typeA(int n, int bound) {
    if (n < 0) fail_domain("the path length must be nonnegative");
    if (n > bound) fail_cap("the pattern scan covers at most " + std::to_string(bound) +
                            " vertices; raise the bound explicitly");
    if (n > 30) fail_cap("the pattern scan covers at most 30 vertices");
    MinDimScan scan;
    scan.n = n;
    std::vector<int> pattern(static_cast<std::size_t>(n), 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::string text;
        for (int i = 0; i < n; ++i) {
            pattern[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            text += ((mask >> i) & 1u) ? '1' : '0';
        }
        BigInt dim = count_Wq_typeA(pattern);
        if (scan.patterns.empty() || dim < scan.minimum) {
            scan.minimum = dim;
            scan.patterns.assign(1, text);
        } else if (dim == scan.minimum) {
            scan.patterns.push_back(text);
        }
    }
    return scan;
}

ConjectureScanReport conjecture_scan(const CoxeterDiagram& d) {
    if (!is_simply_laced(d)) fail_domain("the pattern scan needs a simply-laced diagram");
    const int n = d.size();
    if (n > 16) fail_cap("the pattern scan covers at most 16 vertices");

    // Two-color the underlying graph; an odd cycle has no independent-set bound.
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& nb : d.neighbors(v)) {
                const int w = nb.first;
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    fail_domain("the underlying graph is not bipartite");
                }
            }
        }
    }

    ConjectureScanReport rep;
    rep.independent_sets = count_independent_sets(underlying_graph(d));

    const Scalar zero = Scalar::zero(d.field());
    const Scalar one = Scalar::one(d.field());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::string text;
        std::vector<Scalar> params;
        params.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const bool nonzero = (mask >> i) & 1u;
            text += nonzero ? '1' : '0';
            params.push_back(nonzero ? one : zero);
        }
        CoxeterDiagram pd(d.field(), d.names(), params, d.edges());

        BlockPartition part = block_partition(pd);
        bool infinite = false;
        for (const auto& blk : part.blocks) {
            if (!group_order(induced_subdiagram(pd, blk)).finite) {
                infinite = true;
                break;
            }
        }
        if (infinite) {
            rep.skipped.push_back(text);
            continue;
        }
        BigInt dim = count_Wq(pd);
        if (!rep.have_min || dim < rep.min_dimension) {
            rep.have_min = true;
            rep.min_dimension = dim;
            rep.attaining.assign(1, text);
        } else if (dim == rep.min_dimension) {
            rep.attaining.push_back(text);
        }
    }

    if (!rep.have_min) {
        rep.message = "every pattern was skipped";
    } else if (rep.min_dimension < rep.independent_sets) {
        rep.counterexample = true;
        rep.message = "minimum dimension " + rep.min_dimension.str() +
                      " is below the independent-set count " + rep.independent_sets.str();
    } else {
        rep.message = "minimum dimension " + rep.min_dimension.str() +
                      " matches the independent-set count";
    }
    return rep;
}

} // namespace heckeq
