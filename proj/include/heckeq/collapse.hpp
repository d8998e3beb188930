// Collapse analysis: which generators are forced to the identity, when no
// generator degenerates, admissible subsets, and the commutativity test.
#pragma once

#include <vector>

#include "heckeq/diagram.hpp"

namespace heckeq {

struct CollapseReport {
    std::vector<int> collapsed;       // vertices forced to the identity, sorted
    CoxeterDiagram reduced;           // induced diagram on the complement
    std::vector<int> forced_identity; // same set as collapsed
};

// Union of the connected components of the odd-weight nonzero-parameter
// subgraph that carry at least two distinct parameter values.
CollapseReport collapsed_subset(const CoxeterDiagram& d);

// Every odd-weight edge with unequal parameters has a zero endpoint.
bool is_collapse_free(const CoxeterDiagram& d);

// Every odd-weight edge crossing the boundary of r has a zero endpoint.
bool is_admissible(const CoxeterDiagram& d, const std::vector<int>& r);

// Simply laced with exactly one zero parameter per edge. Requires a
// collapse-free diagram.
bool is_commutative(const CoxeterDiagram& d);

} // namespace heckeq
