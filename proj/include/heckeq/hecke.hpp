// Basis and arithmetic for simply-laced algebras with independent parameters:
// block partition, W(q) tuple enumeration, the regular action, relation
// verification (including the odd two-vertex module), the dimension
// dispatcher, and the type-A pattern scans.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckeq/coxeter.hpp"
#include "heckeq/diagram.hpp"
#include "heckeq/numbers.hpp"
#include "heckeq/scalar.hpp"

namespace heckeq {

// Connected equal-parameter pieces left after deleting every edge whose
// endpoints carry distinct parameters. Cross edges then have exactly one
// zero side.
struct BlockPartition {
    std::vector<std::vector<int>> blocks; // sorted vertex lists, ordered by least vertex
    std::vector<Scalar> block_param;
    std::vector<int> block_of;            // vertex index -> block index
    // All cross edges (s, t) with s in blocks[i], t in blocks[j], keyed by (i, j).
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cross_edges;
    // dom_sources[i][j]: zero-parameter generators of block i with an edge
    // into block j, as a mask over block i's local generator positions.
    std::vector<std::vector<std::uint32_t>> dom_sources;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

BlockPartition block_partition(const CoxeterDiagram& d);

// Whether w (an element of block i's group) forces block j to the identity:
// some zero-parameter generator in the support of w has an edge into block j.
bool dominates(const BlockPartition& p, int i, const GroupElement& w, int j);

// One group element index per block; basis tuples of the algebra.
using WqTuple = std::vector<std::int32_t>;

// All tuples with dominated coordinates equal to the identity, sorted
// lexicographically by per-block element index.
std::vector<WqTuple> enumerate_Wq(const CoxeterDiagram& d,
                                  std::size_t cap = CoxGroup::default_cap);

// |W(q)| by inclusion-exclusion over the free nonzero blocks, without
// enumerating tuples. Requires collapse-free simply laced with finite blocks.
BigInt count_Wq(const CoxeterDiagram& d);

// Sparse vector over basis indices of a WqAlgebra or a DihedralModule.
struct HeckeElement {
    std::map<std::int32_t, Scalar> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const HeckeElement& o) const { return coeffs == o.coeffs; }
};

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const Scalar& c, const HeckeElement& a);

// The algebra of a collapse-free simply-laced diagram, realized on its basis
// of W(q) tuples through the regular action of the generators.
class WqAlgebra {
public:
    explicit WqAlgebra(const CoxeterDiagram& d, std::size_t cap = CoxGroup::default_cap);

    const CoxeterDiagram& diagram() const { return d_; }
    const BlockPartition& partition() const { return part_; }
    const CoxGroup& block_group(int i) const { return groups_[i]; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<WqTuple>& basis() const { return basis_; }

    std::int32_t index_of(const WqTuple& t) const; // domain error when absent
    HeckeElement unit() const;
    HeckeElement basis_element(std::int32_t idx) const;

    // Left multiplication by T_s extended linearly; s is a vertex index.
    HeckeElement generator_action(int s, const HeckeElement& x) const;

    // Bilinear product: each basis index of a acts on b through the canonical
    // words of its block coordinates.
    HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;

    std::string tuple_str(std::int32_t idx) const;

private:
    struct ActionEntry {
        std::int32_t target;
        std::int8_t kind; // 0 fix, 1 move, 2 decay into (1-q)*self + q*target
    };
    const std::vector<ActionEntry>& action_row(int s) const;

    CoxeterDiagram d_;
    BlockPartition part_;
    std::vector<CoxGroup> groups_;
    std::vector<int> zero_blocks_;
    std::vector<std::pair<int, int>> local_of_; // vertex -> (block, local position)
    std::vector<WqTuple> basis_;
    mutable std::vector<std::vector<ActionEntry>> rows_;
};

// The (2m-3)-dimensional module of a two-vertex diagram with one odd edge of
// weight m and parameters {0, q != 0}: basis of alternating words in the two
// generators, one chain per starting letter.
class DihedralModule {
public:
    explicit DihedralModule(const CoxeterDiagram& d);

    const CoxeterDiagram& diagram() const { return d_; }
    int weight() const { return m_; }
    int dim() const { return 2 * m_ - 3; }
    int zero_vertex() const { return zero_vertex_; }

    HeckeElement unit() const;
    HeckeElement basis_element(std::int32_t idx) const;
    HeckeElement generator_action(int s, const HeckeElement& x) const;

    std::string basis_str(std::int32_t idx) const;

private:
    CoxeterDiagram d_;
    int m_ = 3;
    int zero_vertex_ = 0;
    Scalar q_;
};

struct RelationReport {
    bool ok = false;
    BigInt dim = 0;
    std::uint64_t checks = 0;
    std::string first_violation; // empty when ok
};

// Verifies the quadratic relation of every generator and all braid relations
// as identities on the represented basis: on W(q) tuples for simply-laced
// diagrams, and on the alternating-word module for odd two-vertex diagrams
// with a zero parameter. Basis vectors are sampled evenly beyond sample_cap.
RelationReport verify_relations(const CoxeterDiagram& d, std::size_t sample_cap = 512);

struct Dimension {
    enum class Kind { finite, infinite, unknown };

    Kind kind = Kind::finite;
    BigInt value = 1;     // meaningful for finite only
    std::string detail;   // blocking component for infinite/unknown

    std::string str() const;
};

// Dimension dispatcher: collapse-reduce, split into components, and per
// component use the full-group count when parameters agree across odd edges,
// the W(q) count when simply laced, the 2m-3 module for odd two-vertex
// diagrams with a zero parameter, and Unknown otherwise.
Dimension dimension(const CoxeterDiagram& d);

// |W(q)| for a type-A path whose parameters follow the given zero/nonzero
// pattern, by dynamic programming over maximal runs.
BigInt count_Wq_typeA(const std::vector<int>& pattern);

struct MinDimScan {
    int n = 0;
    BigInt minimum = 0;
    std::vector<std::string> patterns; // zero/nonzero strings attaining the minimum
};

// Scans all 2^n zero/nonzero patterns on the type-A path.
MinDimScan min_dimension_scan_typeA(int n, int bound = 9);

struct ConjectureScanReport {
    BigInt independent_sets = 0;
    bool have_min = false;
    BigInt min_dimension = 0;
    std::vector<std::string> attaining;
    std::vector<std::string> skipped; // patterns with an infinite block
    bool counterexample = false;
    std::string message;
};

// Compares the minimum dimension over all zero/nonzero patterns on a
// simply-laced bipartite diagram against the independent-set count of its
// underlying graph.
ConjectureScanReport conjecture_scan(const CoxeterDiagram& d);

} // namespace heckeq
