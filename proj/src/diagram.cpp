#include "heckeq/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "heckeq/errors.hpp"

namespace heckeq {

CoxeterDiagram::CoxeterDiagram(FieldSpec field, std::vector<std::string> names,
                               std::vector<Scalar> params, std::vector<DiagramEdge> edges)
    : field_(field), names_(std::move(names)), params_(std::move(params)), edges_(std::move(edges)) {
    if (params_.size() != names_.size())
        fail_domain("diagram needs exactly one parameter per vertex");
    for (int i = 0; i < size(); ++i) {
        if (params_[i].field() != field_)
            fail_domain("parameter of vertex '" + names_[i] + "' is not in field " + field_.str());
        if (!index_.emplace(names_[i], i).second)
            fail_domain("duplicate vertex '" + names_[i] + "'");
    }
    adj_.assign(names_.size(), {});
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= size()) fail_domain("edge endpoint out of range");
        if (e.u == e.v) fail_domain("self-loop at vertex '" + names_[e.u] + "'");
        if (e.m != infinite_weight && e.m < 3)
            fail_domain("edge weight must be at least 3 (weight 2 means no edge)");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const DiagramEdge& a, const DiagramEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            fail_domain("duplicate edge " + names_[edges_[i].u] + " " + names_[edges_[i].v]);
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.m);
        adj_[e.v].emplace_back(e.u, e.m);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int CoxeterDiagram::vertex_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int CoxeterDiagram::weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& [w, m] : adj_[u])
        if (w == v) return m;
    return 2;
}

namespace {

// Strips '#' comments and splits a line into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::vector<std::string> toks;
    std::istringstream is(body);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
    fail_domain("line " + std::to_string(lineno) + ": " + msg);
}

} // namespace

CoxeterDiagram parse_diagram(const std::string& text) {
    FieldSpec field = FieldSpec::rationals();
    bool field_fixed = false, saw_content = false;
    std::vector<std::string> names;
    std::vector<std::string> param_texts;
    struct RawEdge { std::string u, v; int m; int lineno; };
    std::vector<RawEdge> raw_edges;

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "field") {
            if (saw_content) parse_fail(lineno, "field line must precede vertices and edges");
            if (field_fixed) parse_fail(lineno, "duplicate field line");
            if (toks.size() == 2 && toks[1] == "rational") {
                field = FieldSpec::rationals();
            } else if (toks.size() == 3 && toks[1] == "fp") {
                std::uint32_t p = 0;
                try {
                    p = static_cast<std::uint32_t>(std::stoul(toks[2]));
                } catch (...) {
                    parse_fail(lineno, "bad field modulus '" + toks[2] + "'");
                }
                field = FieldSpec::prime_field(p);
            } else {
                parse_fail(lineno, "expected 'field rational' or 'field fp <p>'");
            }
            field_fixed = true;
        } else if (toks[0] == "vertex") {
            saw_content = true;
            if (toks.size() != 3 || toks[2].rfind("q=", 0) != 0)
                parse_fail(lineno, "expected 'vertex <name> q=<value>'");
            names.push_back(toks[1]);
            param_texts.push_back(toks[2].substr(2));
        } else if (toks[0] == "edge") {
            saw_content = true;
            if (toks.size() != 4) parse_fail(lineno, "expected 'edge <u> <v> <m|inf>'");
            int m;
            if (toks[3] == "inf") {
                m = CoxeterDiagram::infinite_weight;
            } else {
                try {
                    m = std::stoi(toks[3]);
                } catch (...) {
                    parse_fail(lineno, "bad edge weight '" + toks[3] + "'");
                }
                if (m < 3) parse_fail(lineno, "edge weight must be at least 3");
            }
            raw_edges.push_back({toks[1], toks[2], m, lineno});
        } else {
            parse_fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }

    std::vector<Scalar> params;
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!seen.emplace(names[i], static_cast<int>(i)).second)
            fail_domain("duplicate vertex '" + names[i] + "'");
        params.push_back(Scalar::parse(field, param_texts[i]));
    }
    std::vector<DiagramEdge> edges;
    for (const auto& e : raw_edges) {
        auto iu = seen.find(e.u), iv = seen.find(e.v);
        if (iu == seen.end()) parse_fail(e.lineno, "unknown vertex '" + e.u + "'");
        if (iv == seen.end()) parse_fail(e.lineno, "unknown vertex '" + e.v + "'");
        if (iu->second == iv->second) parse_fail(e.lineno, "self-loop at '" + e.u + "'");
        edges.push_back({iu->second, iv->second, e.m});
    }
    return CoxeterDiagram(field, std::move(names), std::move(params), std::move(edges));
}

std::string serialize_diagram(const CoxeterDiagram& d) {
    std::ostringstream os;
    os << "field " << d.field().str() << "\n";
    for (int v = 0; v < d.size(); ++v)
        os << "vertex " << d.name(v) << " q=" << d.param(v).str() << "\n";
    for (const auto& e : d.edges()) {
        os << "edge " << d.name(e.u) << " " << d.name(e.v) << " ";
        if (e.m == CoxeterDiagram::infinite_weight)
            os << "inf";
        else
            os << e.m;
        os << "\n";
    }
    return os.str();
}

CoxeterDiagram induced_subdiagram(const CoxeterDiagram& d, const std::vector<int>& u) {
    std::vector<int> keep = u;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.size() != u.size()) fail_domain("induced subdiagram: repeated vertex");
    std::vector<int> old_to_new(d.size(), -1);
    std::vector<std::string> names;
    std::vector<Scalar> params;
    for (int v : keep) {
        if (v < 0 || v >= d.size()) fail_domain("induced subdiagram: unknown vertex index");
        old_to_new[v] = static_cast<int>(names.size());
        names.push_back(d.name(v));
        params.push_back(d.param(v));
    }
    std::vector<DiagramEdge> edges;
    for (const auto& e : d.edges())
        if (old_to_new[e.u] >= 0 && old_to_new[e.v] >= 0)
            edges.push_back({old_to_new[e.u], old_to_new[e.v], e.m});
    return CoxeterDiagram(d.field(), std::move(names), std::move(params), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const CoxeterDiagram& d) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(d.size(), false);
    for (int start = 0; start < d.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& [w, m] : d.neighbors(v)) {
                (void)m;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_simply_laced(const CoxeterDiagram& d) {
    for (const auto& e : d.edges())
        if (e.m != 3) return false;
    return true;
}

SimpleGraph::SimpleGraph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
    if (size() > max_vertices)
        fail_cap("graph has " + std::to_string(size()) + " vertices; at most " +
                 std::to_string(max_vertices) + " supported");
    for (int i = 0; i < size(); ++i)
        if (!index_.emplace(names_[i], i).second)
            fail_domain("duplicate vertex '" + names_[i] + "'");
    adj_.assign(names_.size(), 0);
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= size()) fail_domain("edge endpoint out of range");
        if (u == v) fail_domain("self-loop at vertex '" + names_[u] + "'");
        if ((adj_[u] >> v) & 1u) fail_domain("duplicate edge " + names_[u] + " " + names_[v]);
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

int SimpleGraph::vertex_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

std::uint32_t SimpleGraph::neighborhood(std::uint32_t set) const {
    std::uint32_t nb = 0;
    for (std::uint32_t s = set; s; s &= s - 1)
        nb |= adj_[__builtin_ctz(s)];
    return nb;
}

GraphInput parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    std::vector<std::string> names;
    std::vector<int> nil_flags;
    struct RawEdge { std::string u, v; int lineno; };
    std::vector<RawEdge> raw_edges;

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!saw_header) {
            if (toks.size() != 1 || toks[0] != "graph")
                parse_fail(lineno, "graph file must start with a 'graph' header line");
            saw_header = true;
        } else if (toks[0] == "vertex") {
            if (toks.size() == 2) {
                names.push_back(toks[1]);
                nil_flags.push_back(0);
            } else if (toks.size() == 3 && toks[2] == "nil") {
                names.push_back(toks[1]);
                nil_flags.push_back(1);
            } else {
                parse_fail(lineno, "expected 'vertex <name> [nil]'");
            }
        } else if (toks[0] == "edge") {
            if (toks.size() != 3) parse_fail(lineno, "expected 'edge <u> <v>'");
            raw_edges.push_back({toks[1], toks[2], lineno});
        } else {
            parse_fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!saw_header) fail_domain("empty graph file");

    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!seen.emplace(names[i], static_cast<int>(i)).second)
            fail_domain("duplicate vertex '" + names[i] + "'");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : raw_edges) {
        auto iu = seen.find(e.u), iv = seen.find(e.v);
        if (iu == seen.end()) parse_fail(e.lineno, "unknown vertex '" + e.u + "'");
        if (iv == seen.end()) parse_fail(e.lineno, "unknown vertex '" + e.v + "'");
        edges.emplace_back(iu->second, iv->second);
    }
    GraphInput gi;
    gi.graph = SimpleGraph(std::move(names), edges);
    for (std::size_t i = 0; i < nil_flags.size(); ++i)
        if (nil_flags[i]) gi.nil_set |= 1u << i;
    return gi;
}

SimpleGraph underlying_graph(const CoxeterDiagram& d) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : d.edges()) edges.emplace_back(e.u, e.v);
    return SimpleGraph(d.names(), edges);
}

} // namespace heckeq
