// Parameter-labeled Coxeter diagrams, plain simple graphs, and their text formats.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckeq/scalar.hpp"

namespace heckeq {

// Edge of a Coxeter diagram; absent pairs mean weight 2. Finite weights are >= 3,
// m = infinity is the sentinel below.
struct DiagramEdge {
    int u, v;  // u < v, vertex indices
    int m;
};

class CoxeterDiagram {
public:
    static constexpr int infinite_weight = -1;

    CoxeterDiagram() = default;
    CoxeterDiagram(FieldSpec field, std::vector<std::string> names,
                   std::vector<Scalar> params, std::vector<DiagramEdge> edges);

    int size() const { return static_cast<int>(names_.size()); }
    const FieldSpec& field() const { return field_; }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    int vertex_index(const std::string& name) const; // -1 if absent
    const Scalar& param(int v) const { return params_[v]; }
    const std::vector<Scalar>& params() const { return params_; }

    // 2 when the pair is not an edge; infinite_weight for m = infinity.
    int weight(int u, int v) const;
    const std::vector<DiagramEdge>& edges() const { return edges_; }
    // (neighbor, weight) pairs sorted by neighbor index; only stored edges (m >= 3).
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::vector<std::string> names_;
    std::vector<Scalar> params_;
    std::vector<DiagramEdge> edges_; // sorted by (u, v)
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::map<std::string, int> index_;
};

CoxeterDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const CoxeterDiagram& d);

// Vertex set U kept in the original declaration order.
CoxeterDiagram induced_subdiagram(const CoxeterDiagram& d, const std::vector<int>& u);

// Partition into maximal connected vertex sets, ordered by least vertex index.
std::vector<std::vector<int>> connected_components(const CoxeterDiagram& d);

bool is_simply_laced(const CoxeterDiagram& d);

// Unweighted simple graph on at most 30 vertices, adjacency as bitmasks.
class SimpleGraph {
public:
    static constexpr int max_vertices = 30;

    SimpleGraph() = default;
    SimpleGraph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    int vertex_index(const std::string& name) const;

    std::uint32_t adj(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::uint32_t full_mask() const { return size() == 0 ? 0u : (size() == 32 ? ~0u : (1u << size()) - 1u); }

    // Union of the adjacency sets of the vertices in `set`.
    std::uint32_t neighborhood(std::uint32_t set) const;

private:
    std::vector<std::string> names_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::pair<int, int>> edges_; // sorted, u < v
    std::map<std::string, int> index_;
};

struct GraphInput {
    SimpleGraph graph;
    std::uint32_t nil_set = 0; // vertices marked `nil`
};

GraphInput parse_graph(const std::string& text);

// Forgets weights and parameters; keeps vertex names and order.
SimpleGraph underlying_graph(const CoxeterDiagram& d);

} // namespace heckeq
