// Commutative monomial algebras H(G,R) on a graph G with a nilpotent vertex
// set R: monomial arithmetic over independent sets, idempotents, projective
// modules, Cartan data, radical and socle, induction and restriction, and the
// order-ideal multiplicativity check for rank-two posets.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckeq/diagram.hpp"
#include "heckeq/numbers.hpp"
#include "heckeq/scalar.hpp"

namespace heckeq {

// Orders vertex sets by cardinality, then lexicographically as ascending
// vertex index lists.
bool vertex_set_less(std::uint32_t a, std::uint32_t b);

inline constexpr std::size_t indep_enum_cap = std::size_t{1} << 22;

// All independent subsets of `allowed`, sorted by (size, lex).
std::vector<std::uint32_t> independent_subsets(const SimpleGraph& g, std::uint32_t allowed,
                                               std::size_t cap = indep_enum_cap);

// All independent sets of g, sorted by (size, lex).
std::vector<std::uint32_t> independent_sets(const SimpleGraph& g,
                                            std::size_t cap = indep_enum_cap);

// Number of independent subsets of `allowed`, without materializing them.
BigInt count_independent_subsets(const SimpleGraph& g, std::uint32_t allowed);
BigInt count_independent_sets(const SimpleGraph& g);

// Sparse linear combination of monomials X_I, keyed by independent vertex set.
// No explicit zero coefficients are stored.
struct CommElement {
    std::map<std::uint32_t, Scalar> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const CommElement& o) const { return coeffs == o.coeffs; }
};

CommElement comm_add(const CommElement& a, const CommElement& b);
CommElement comm_scale(const Scalar& c, const CommElement& a);

// The algebra with one generator x_v per vertex, relations x_u x_v = 0 on
// edges, x_v^2 = x_v off R, and x_r^2 = 0 on R. Basis {X_I : I independent}.
class HGRAlgebra {
public:
    HGRAlgebra(SimpleGraph graph, std::uint32_t nil_set,
               FieldSpec field = FieldSpec::rationals(), std::size_t cap = indep_enum_cap);

    const SimpleGraph& graph() const { return g_; }
    std::uint32_t nil_set() const { return r_; }
    const FieldSpec& field() const { return field_; }

    // Independent sets of G, sorted by (size, lex).
    const std::vector<std::uint32_t>& basis() const { return basis_; }
    // Independent sets of G-R, sorted by (size, lex); these label both the
    // simple and the projective indecomposable modules.
    const std::vector<std::uint32_t>& module_labels() const { return labels_; }

    // X_I * X_J: zero when I+J contains an edge or I and J share an R vertex,
    // X_{I+J} otherwise.
    CommElement multiply_monomials(std::uint32_t i, std::uint32_t j) const;

    // Action of x_v on the defining module: X_I goes to zero when v lies in
    // both I and R or when I+{v} is dependent, and to X_{I+{v}} otherwise.
    CommElement defining_module_action(int v, std::uint32_t i) const;

    CommElement multiply(const CommElement& a, const CommElement& b) const;
    CommElement unit() const;

    // Complete set of primitive orthogonal idempotents E_I = X_I X^-_{G-R-I},
    // one per module label, expanded into the monomial basis.
    const std::vector<std::pair<std::uint32_t, CommElement>>& idempotents() const;

    // Monomial-basis expansion of {X_{I+J} X^-_{G-R-I} : J independent in
    // R-N(I)}, a basis of the projective indecomposable P_I.
    std::vector<CommElement> projective_basis(std::uint32_t i) const;

    // Diagonal Cartan entries: label I paired with the number of independent
    // sets of R-N(I).
    std::vector<std::pair<std::uint32_t, BigInt>> cartan_matrix() const;

    // Basis of the radical: the monomials meeting R.
    std::vector<CommElement> radical_basis() const;

    // Maximal independent subsets of R-N(I), labeling the socle of P_I.
    std::vector<std::uint32_t> socle_labels(std::uint32_t i) const;

    bool is_semisimple() const { return r_ == 0; }

    // Label of the restriction of the simple C_I to the subalgebra on vsub.
    std::uint32_t restrict_simple(std::uint32_t i, std::uint32_t vsub) const;

    // Labels of the simple summands induced from C_{isub} on the subgraph on
    // vsub; requires R to be empty.
    std::vector<std::uint32_t> induce_simple_semisimple(std::uint32_t vsub,
                                                        std::uint32_t isub) const;

    // Labels K of the projective summands of the induction of P_j from the
    // subgraph on vsub: all K independent in G-R with K restricted to vsub
    // equal to j.
    std::vector<std::uint32_t> induce_projective(std::uint32_t vsub, std::uint32_t j) const;

    std::string set_str(std::uint32_t i) const;
    std::string monomial_str(std::uint32_t i) const;
    std::string element_str(const CommElement& e) const;

private:
    void require_independent(std::uint32_t i, const std::string& what) const;
    CommElement alternating_sum(std::uint32_t base, std::uint32_t allowed) const;

    SimpleGraph g_;
    std::uint32_t r_ = 0;
    FieldSpec field_;
    std::size_t cap_ = indep_enum_cap;
    std::vector<std::uint32_t> basis_;
    std::vector<std::uint32_t> labels_;
    mutable std::vector<std::pair<std::uint32_t, CommElement>> idem_;
};

// Realizes a collapse-free commutative diagram as H(G,R) over its field:
// G is the underlying graph and R collects the vertices with parameter -1.
HGRAlgebra from_hecke(const CoxeterDiagram& d);

// Finite poset in which every relation is a single cover.
struct RankTwoPoset {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> covers; // (upper, lower)

    int size() const { return static_cast<int>(names.size()); }
};

// Text format: `poset` header, `element <name>` and `cover <upper> <lower>` lines.
RankTwoPoset parse_poset(const std::string& text);

struct MoebiusReport {
    bool ok = false;
    BigInt antichains = 0;  // independent sets of the cover graph
    BigInt ideals = 0;      // order ideals of the poset
    std::uint64_t pairs_checked = 0;
    std::string first_violation; // empty when ok
};

// Builds the algebra on the cover graph with parameter 0 on upper and 1 on
// lower elements, rescales the lower generators to idempotents, and verifies
// that products of rescaled monomials track unions of order ideals.
MoebiusReport moebius_check(const RankTwoPoset& z,
                            const FieldSpec& field = FieldSpec::rationals());

} // namespace heckeq
