#include "heckeq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "heckeq/collapse.hpp"
#include "heckeq/commutative.hpp"
#include "heckeq/diagram.hpp"
#include "heckeq/errors.hpp"
#include "heckeq/grothendieck.hpp"
#include "heckeq/hecke.hpp"
#include "heckeq/numbers.hpp"
#include "heckeq/scalar.hpp"

namespace heckeq {
namespace {

using Json = nlohmann::ordered_json;

// Text lines for the human report plus the JSON payload fields.
struct Output {
    std::vector<std::string> lines;
    Json value;
    Json items;

    void line(std::string s) { lines.push_back(std::move(s)); }
};

int code_of(Errc c) {
    switch (c) {
        case Errc::usage: return 2;
        case Errc::cap:   return 3;
        default:          return 1;
    }
}

std::string join(const std::vector<std::string>& parts) {
    if (parts.empty()) return "(none)";
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += " ";
        s += p;
    }
    return s;
}

void emit(std::ostream& out, bool as_json, const std::string& kind, const Output& o) {
    if (as_json) {
        Json j;
        j["status"] = "ok";
        j["kind"] = kind;
        j["value"] = o.value;
        if (!o.items.is_null()) j["items"] = o.items;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& l : o.lines) out << l << "\n";
    }
}

int emit_error(std::ostream& out, std::ostream& err, bool as_json, const std::string& kind,
               const Error& e) {
    if (as_json) {
        Json j;
        j["status"] = "error";
        j["kind"] = kind;
        j["error_code"] = e.code_name();
        j["value"] = e.what();
        out << j.dump(2) << "\n";
    } else {
        err << "error (" << e.code_name() << "): " << e.what() << "\n";
    }
    return code_of(e.code());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_usage("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// First directive of the file: "graph", "poset", or "" for the diagram format.
std::string sniff_format(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line.substr(0, line.find('#')));
        std::string tok;
        if (ls >> tok) return tok == "graph" || tok == "poset" ? tok : "";
    }
    return "";
}

CoxeterDiagram load_diagram(const std::string& path) {
    std::string text = read_file(path);
    std::string fmt = sniff_format(text);
    if (!fmt.empty()) fail_domain("'" + path + "' is a " + fmt + " file, expected a diagram");
    return parse_diagram(text);
}

// Graph files directly, diagram files through their commutative presentation.
HGRAlgebra load_hgr(const std::string& path) {
    std::string text = read_file(path);
    std::string fmt = sniff_format(text);
    if (fmt == "poset") fail_domain("'" + path + "' is a poset file, expected a graph or diagram");
    if (fmt == "graph") {
        GraphInput gi = parse_graph(text);
        return HGRAlgebra(gi.graph, gi.nil_set);
    }
    return from_hecke(parse_diagram(text));
}

RankTwoPoset load_poset(const std::string& path) {
    std::string text = read_file(path);
    if (sniff_format(text) != "poset") fail_domain("'" + path + "' is not a poset file");
    return parse_poset(text);
}

// Comma-separated vertex names; "{}" is the empty set.
std::uint32_t parse_vertex_set(const SimpleGraph& g, const std::string& text) {
    if (text == "{}") return 0;
    std::uint32_t set = 0;
    std::istringstream is(text);
    std::string name;
    while (std::getline(is, name, ',')) {
        int v = g.vertex_index(name);
        if (v < 0) fail_usage("unknown vertex '" + name + "'");
        set |= std::uint32_t{1} << v;
    }
    if (set == 0) fail_usage("empty vertex set; write {} for the empty set");
    return set;
}

// Comma-separated vertex numbers 1..30; "{}" is the empty set.
std::uint32_t parse_int_set(const std::string& text) {
    if (text.empty() || text == "{}") return 0;
    std::uint32_t set = 0;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (...) {
            fail_usage("bad vertex number '" + tok + "'");
        }
        if (v < 1 || v > 30) fail_usage("vertex number " + std::to_string(v) + " out of range");
        set |= std::uint32_t{1} << (v - 1);
    }
    return set;
}

std::string int_set_str(std::uint32_t set) {
    std::string s = "{";
    bool first = true;
    while (set) {
        int v = std::countr_zero(set);
        set &= set - 1;
        if (!first) s += ",";
        s += std::to_string(v + 1);
        first = false;
    }
    return s + "}";
}

// Digit string when all parts are single digits, comma list otherwise;
// "()" is the empty composition.
Composition parse_composition(const std::string& text) {
    if (text == "()") return {};
    if (text.empty()) fail_usage("empty composition; write () for the empty composition");
    Composition parts;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                std::size_t used = 0;
                int p = std::stoi(tok, &used);
                if (used != tok.size() || p <= 0) throw std::invalid_argument(tok);
                parts.push_back(p);
            } catch (...) {
                fail_usage("bad composition part '" + tok + "'");
            }
        }
        return parts;
    }
    for (char c : text) {
        if (c < '1' || c > '9')
            fail_usage("bad composition '" + text + "': use digits 1-9 or a comma list");
        parts.push_back(c - '0');
    }
    return parts;
}

CompSum single(const Composition& a) {
    CompSum s;
    comp_add(s, a, 1);
    return s;
}

Output cmd_collapse(const std::string& file) {
    CoxeterDiagram d = load_diagram(file);
    CollapseReport rep = collapsed_subset(d);
    std::vector<std::string> names;
    names.reserve(rep.collapsed.size());
    for (int v : rep.collapsed) names.push_back(d.name(v));

    Output o;
    o.line("collapsed (" + std::to_string(names.size()) + "): " + join(names));
    o.line("reduced (" + std::to_string(rep.reduced.size()) + " vertices):");
    std::istringstream rs(serialize_diagram(rep.reduced));
    std::string line;
    while (std::getline(rs, line)) o.line(line);
    o.value = names.size();
    o.items = Json(names);
    return o;
}

Output cmd_check(const std::string& file, const std::string& subset, bool have_subset) {
    CoxeterDiagram d = load_diagram(file);
    bool cf = is_collapse_free(d);
    bool comm = cf && is_commutative(d);

    Output o;
    Json v;
    o.line(std::string("collapse_free: ") + (cf ? "yes" : "no"));
    o.line(std::string("commutative: ") + (comm ? "yes" : "no"));
    v["collapse_free"] = cf;
    v["commutative"] = comm;
    if (have_subset) {
        std::vector<int> r;
        if (subset != "{}") {
            std::istringstream is(subset);
            std::string name;
            while (std::getline(is, name, ',')) {
                int idx = d.vertex_index(name);
                if (idx < 0) fail_usage("unknown vertex '" + name + "'");
                r.push_back(idx);
            }
        }
        bool adm = is_admissible(d, r);
        o.line(std::string("admissible: ") + (adm ? "yes" : "no"));
        v["admissible"] = adm;
    }
    o.value = v;
    return o;
}

Output cmd_dimension(const std::string& file) {
    std::string text = read_file(file);
    std::string fmt = sniff_format(text);
    Output o;
    if (fmt == "poset") fail_domain("'" + file + "' is a poset file, expected a graph or diagram");
    if (fmt == "graph") {
        BigInt n = count_independent_sets(parse_graph(text).graph);
        o.line(n.str());
        o.value = n.str();
        return o;
    }
    Dimension dim = dimension(parse_diagram(text));
    if (dim.kind == Dimension::Kind::unknown)
        o.line("unknown: " + dim.detail);
    else
        o.line(dim.str());
    o.value = dim.str();
    if (!dim.detail.empty()) o.items = Json::array({dim.detail});
    return o;
}

Output cmd_basis(const std::string& file) {
    std::string text = read_file(file);
    std::string fmt = sniff_format(text);
    Output o;
    o.items = Json::array();
    if (fmt == "poset") fail_domain("'" + file + "' is a poset file, expected a graph or diagram");
    if (fmt == "graph") {
        GraphInput gi = parse_graph(text);
        HGRAlgebra alg(gi.graph, gi.nil_set);
        o.line("dimension: " + std::to_string(alg.basis().size()));
        for (std::uint32_t i : alg.basis()) {
            o.line(alg.monomial_str(i));
            o.items.push_back(alg.monomial_str(i));
        }
        o.value = alg.basis().size();
        return o;
    }
    WqAlgebra alg(parse_diagram(text));
    o.line("dimension: " + std::to_string(alg.dim()));
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(alg.dim()); ++i) {
        o.line(alg.tuple_str(i));
        o.items.push_back(alg.tuple_str(i));
    }
    o.value = alg.dim();
    return o;
}

Output cmd_cartan(const std::string& file) {
    HGRAlgebra alg = load_hgr(file);
    Output o;
    o.items = Json::array();
    BigInt total = 0;
    for (const auto& [label, n] : alg.cartan_matrix()) {
        o.line("C" + alg.set_str(label) + ": " + n.str());
        o.items.push_back(Json::array({alg.set_str(label), n.str()}));
        total += n;
    }
    o.line("total: " + total.str());
    o.value = total.str();
    return o;
}

Output cmd_idempotents(const std::string& file) {
    HGRAlgebra alg = load_hgr(file);
    Output o;
    o.items = Json::array();
    const auto& idem = alg.idempotents();
    for (const auto& [label, e] : idem) {
        o.line("e" + alg.set_str(label) + " = " + alg.element_str(e));
        o.items.push_back(Json::array({alg.set_str(label), alg.element_str(e)}));
    }
    o.value = idem.size();
    return o;
}

Output cmd_radical(const std::string& file) {
    HGRAlgebra alg = load_hgr(file);
    Output o;
    o.items = Json::array();
    auto basis = alg.radical_basis();
    o.line("dimension: " + std::to_string(basis.size()));
    for (const auto& e : basis) {
        o.line(alg.element_str(e));
        o.items.push_back(alg.element_str(e));
    }
    o.value = basis.size();
    return o;
}

Output cmd_socle(const std::string& file, const std::string& label, bool have_label) {
    HGRAlgebra alg = load_hgr(file);
    std::vector<std::uint32_t> labels;
    if (have_label)
        labels.push_back(parse_vertex_set(alg.graph(), label));
    else
        labels = alg.module_labels();

    Output o;
    o.items = Json::array();
    for (std::uint32_t i : labels) {
        std::vector<std::string> socs;
        Json names = Json::array();
        for (std::uint32_t k : alg.socle_labels(i)) {
            socs.push_back(alg.set_str(k));
            names.push_back(alg.set_str(k));
        }
        o.line("P" + alg.set_str(i) + ": " + join(socs));
        o.items.push_back(Json::array({alg.set_str(i), names}));
    }
    o.value = labels.size();
    return o;
}

Output cmd_induce(const std::string& file, const std::string& vsub_text,
                  const std::string& label_text, bool simple) {
    HGRAlgebra alg = load_hgr(file);
    std::uint32_t vsub = parse_vertex_set(alg.graph(), vsub_text);
    std::uint32_t label = parse_vertex_set(alg.graph(), label_text);
    std::vector<std::uint32_t> out = simple ? alg.induce_simple_semisimple(vsub, label)
                                            : alg.induce_projective(vsub, label);
    const char* prefix = simple ? "C" : "P";

    Output o;
    o.items = Json::array();
    std::vector<std::string> names;
    for (std::uint32_t k : out) {
        names.push_back(prefix + alg.set_str(k));
        o.items.push_back(alg.set_str(k));
    }
    o.line("summands (" + std::to_string(out.size()) + "): " + join(names));
    o.value = out.size();
    return o;
}

Output cmd_restrict(const std::string& file, const std::string& vsub_text,
                    const std::string& label_text) {
    HGRAlgebra alg = load_hgr(file);
    std::uint32_t vsub = parse_vertex_set(alg.graph(), vsub_text);
    std::uint32_t label = parse_vertex_set(alg.graph(), label_text);
    std::uint32_t k = alg.restrict_simple(label, vsub);

    Output o;
    o.line("C" + alg.set_str(k));
    o.value = alg.set_str(k);
    return o;
}

void require_proper(const Composition& a) {
    if (!is_proper(a))
        fail_domain("composition " + composition_str(a) + " has an internal part 1");
}

Output cmd_g0_product(const std::string& a, const std::string& b) {
    Output o;
    std::string s = compsum_str(g0_product(parse_composition(a), parse_composition(b)));
    o.line(s);
    o.value = s;
    return o;
}

Output cmd_g0_coproduct(const std::string& a) {
    Output o;
    std::string s = tensor_str(g0_coproduct(parse_composition(a)));
    o.line(s);
    o.value = s;
    return o;
}

Output cmd_g0_antipode(const std::string& a) {
    Output o;
    std::string s = compsum_str(antipode_g0(parse_composition(a)));
    o.line(s);
    o.value = s;
    return o;
}

Output cmd_g0_pairing(const std::string& a, const std::string& b) {
    Composition x = parse_composition(a), y = parse_composition(b);
    require_proper(x);
    require_proper(y);
    Output o;
    long long p = pairing(single(x), single(y));
    o.line(std::to_string(p));
    o.value = p;
    return o;
}

Output cmd_bratteli(int levels) {
    BratteliDiagram bd = bratteli(levels);
    Output o;
    o.items = Json::array();
    for (std::size_t n = 0; n < bd.levels.size(); ++n) {
        std::vector<std::string> comps;
        Json level = Json::array();
        for (std::size_t j = 0; j < bd.levels[n].size(); ++j) {
            comps.push_back(composition_str(bd.levels[n][j]));
            int parent = n == 0 ? -1 : bd.parent[n][j];
            level.push_back(Json::array({comps.back(), parent}));
        }
        o.line("level " + std::to_string(n) + ": " + join(comps));
        o.items.push_back(level);
    }
    if (bd.levels.size() > 1) {
        o.line("edges:");
        for (std::size_t n = 1; n < bd.levels.size(); ++n)
            for (std::size_t j = 0; j < bd.levels[n].size(); ++j)
                o.line(composition_str(bd.levels[n][j]) + " -> " +
                       composition_str(bd.levels[n - 1][bd.parent[n][j]]));
    }
    o.value = bd.levels.size();
    return o;
}

Output cmd_fibdecomp(int n, const std::string& marked) {
    std::uint32_t r = parse_int_set(marked);
    Output o;
    o.items = Json::array();
    BigInt total = 0;
    for (const auto& [set, val] : fib_decomposition(n, r)) {
        o.line(int_set_str(set) + ": " + val.str());
        o.items.push_back(Json::array({int_set_str(set), val.str()}));
        total += val;
    }
    o.line("total: " + total.str());
    o.value = total.str();
    return o;
}

Output cmd_scan_min_dim(int n, int bound) {
    MinDimScan scan = min_dimension_scan_typeA(n, bound);
    Output o;
    o.line("n: " + std::to_string(scan.n));
    o.line("minimum: " + scan.minimum.str());
    o.line("patterns: " + join(scan.patterns));
    o.value = scan.minimum.str();
    o.items = Json(scan.patterns);
    return o;
}

Output cmd_scan_conjecture(const std::string& file) {
    ConjectureScanReport rep = conjecture_scan(load_diagram(file));
    Output o;
    o.line("independent_sets: " + rep.independent_sets.str());
    o.line("min_dimension: " + (rep.have_min ? rep.min_dimension.str() : "(none)"));
    o.line("attaining: " + join(rep.attaining));
    o.line("skipped: " + join(rep.skipped));
    o.line(std::string("counterexample: ") + (rep.counterexample ? "yes" : "no"));
    if (!rep.message.empty()) o.line(rep.message);

    Json v;
    v["independent_sets"] = rep.independent_sets.str();
    if (rep.have_min) v["min_dimension"] = rep.min_dimension.str();
    v["counterexample"] = rep.counterexample;
    v["skipped"] = Json(rep.skipped);
    if (!rep.message.empty()) v["message"] = rep.message;
    o.value = v;
    o.items = Json(rep.attaining);
    return o;
}

Output cmd_verify_relations(const std::string& file, std::size_t samples) {
    RelationReport rep = verify_relations(load_diagram(file), samples);
    Output o;
    o.line(std::string("ok: ") + (rep.ok ? "yes" : "no"));
    o.line("dimension: " + rep.dim.str());
    o.line("checks: " + std::to_string(rep.checks));
    if (!rep.first_violation.empty()) o.line("violation: " + rep.first_violation);

    Json v;
    v["ok"] = rep.ok;
    v["dimension"] = rep.dim.str();
    v["checks"] = rep.checks;
    if (!rep.first_violation.empty()) v["first_violation"] = rep.first_violation;
    o.value = v;
    return o;
}

Output cmd_verify_antipode(int n) {
    AntipodeReport rep = verify_antipode(n);
    Output o;
    o.line(std::string("ok: ") + (rep.ok ? "yes" : "no"));
    o.line("checked: " + std::to_string(rep.checked));
    if (!rep.first_violation.empty()) o.line("violation: " + rep.first_violation);

    Json v;
    v["ok"] = rep.ok;
    v["checked"] = rep.checked;
    if (!rep.first_violation.empty()) v["first_violation"] = rep.first_violation;
    o.value = v;
    return o;
}

Output cmd_verify_moebius(const std::string& file, int characteristic) {
    RankTwoPoset z = load_poset(file);
    FieldSpec field = characteristic == 0
                          ? FieldSpec::rationals()
                          : FieldSpec::prime_field(static_cast<std::uint32_t>(characteristic));
    MoebiusReport rep = moebius_check(z, field);
    Output o;
    o.line(std::string("ok: ") + (rep.ok ? "yes" : "no"));
    o.line("antichains: " + rep.antichains.str());
    o.line("ideals: " + rep.ideals.str());
    o.line("pairs_checked: " + std::to_string(rep.pairs_checked));
    if (!rep.first_violation.empty()) o.line("violation: " + rep.first_violation);

    Json v;
    v["ok"] = rep.ok;
    v["antichains"] = rep.antichains.str();
    v["ideals"] = rep.ideals.str();
    v["pairs_checked"] = rep.pairs_checked;
    if (!rep.first_violation.empty()) v["first_violation"] = rep.first_violation;
    o.value = v;
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hecke algebras with independent parameters"};
    app.name("heckeq");
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "print a JSON object instead of text");

    std::string file, subset, vsub, label, comp_a, comp_b, marked;
    bool simple = false;
    int n = 0, levels = 0, bound = 9, characteristic = 0;
    std::size_t samples = 512;

    auto* c_collapse = app.add_subcommand("collapse", "collapsed generators and the reduced diagram");
    c_collapse->add_option("file", file, "diagram file")->required();

    auto* c_check = app.add_subcommand("check", "collapse-free, commutative and admissible tests");
    c_check->add_option("file", file, "diagram file")->required();
    auto* subset_opt = c_check->add_option("--subset", subset, "vertex names, or {}");

    auto* c_dimension = app.add_subcommand("dimension", "algebra dimension of a diagram or graph");
    c_dimension->add_option("file", file, "diagram or graph file")->required();

    auto* c_basis = app.add_subcommand("basis", "tuple basis of a diagram or monomial basis of a graph");
    c_basis->add_option("file", file, "diagram or graph file")->required();

    auto* c_cartan = app.add_subcommand("cartan", "diagonal Cartan entries");
    c_cartan->add_option("file", file, "graph or commutative diagram file")->required();

    auto* c_idem = app.add_subcommand("idempotents", "primitive orthogonal idempotents");
    c_idem->add_option("file", file, "graph or commutative diagram file")->required();

    auto* c_radical = app.add_subcommand("radical", "basis of the radical");
    c_radical->add_option("file", file, "graph or commutative diagram file")->required();

    auto* c_socle = app.add_subcommand("socle", "socle labels of the projective modules");
    c_socle->add_option("file", file, "graph or commutative diagram file")->required();
    auto* label_opt = c_socle->add_option("label", label, "module label, or {}");

    auto* c_induce = app.add_subcommand("induce", "summands of an induced module");
    c_induce->add_option("file", file, "graph or commutative diagram file")->required();
    c_induce->add_option("subset", vsub, "vertex subset carrying the subalgebra")->required();
    c_induce->add_option("label", label, "module label inside the subset, or {}")->required();
    c_induce->add_flag("--simple", simple, "induce a simple module (empty nilpotent set only)");

    auto* c_restrict = app.add_subcommand("restrict", "restriction of a simple module");
    c_restrict->add_option("file", file, "graph or commutative diagram file")->required();
    c_restrict->add_option("subset", vsub, "vertex subset carrying the subalgebra")->required();
    c_restrict->add_option("label", label, "module label, or {}")->required();

    auto* c_g0 = app.add_subcommand("g0", "composition operations");
    c_g0->require_subcommand(1);
    auto* c_g0_product = c_g0->add_subcommand("product", "product of two compositions");
    c_g0_product->add_option("a", comp_a, "composition")->required();
    c_g0_product->add_option("b", comp_b, "composition")->required();
    auto* c_g0_coproduct = c_g0->add_subcommand("coproduct", "coproduct of a composition");
    c_g0_coproduct->add_option("a", comp_a, "composition")->required();
    auto* c_g0_antipode = c_g0->add_subcommand("antipode", "antipode of a composition");
    c_g0_antipode->add_option("a", comp_a, "composition")->required();
    auto* c_g0_pairing = c_g0->add_subcommand("pairing", "duality pairing of two compositions");
    c_g0_pairing->add_option("a", comp_a, "composition")->required();
    c_g0_pairing->add_option("b", comp_b, "composition")->required();

    auto* c_bratteli = app.add_subcommand("bratteli", "layered restriction diagram");
    c_bratteli->add_option("levels", levels, "number of levels above the root")->required();

    auto* c_fibdecomp = app.add_subcommand("fibdecomp", "Fibonacci decomposition of a marked path");
    c_fibdecomp->add_option("n", n, "path length")->required();
    c_fibdecomp->add_option("marked", marked, "marked vertex numbers, or {}");

    auto* c_scan_min = app.add_subcommand("scan-min-dim", "minimum dimension over parameter patterns");
    c_scan_min->add_option("n", n, "path length")->required();
    c_scan_min->add_option("--bound", bound, "largest allowed n");

    auto* c_scan_conj = app.add_subcommand("scan-conjecture",
                                           "compare pattern dimensions with the independent-set count");
    c_scan_conj->add_option("file", file, "diagram file")->required();

    auto* c_verify = app.add_subcommand("verify", "verification suites");
    c_verify->require_subcommand(1);
    auto* c_v_rel = c_verify->add_subcommand("relations", "defining relations on the represented basis");
    c_v_rel->add_option("file", file, "diagram file")->required();
    c_v_rel->add_option("--samples", samples, "basis sample bound");
    auto* c_v_anti = c_verify->add_subcommand("antipode", "antipode convolution identity");
    c_v_anti->add_option("n", n, "largest composition size")->required();
    auto* c_v_moeb = c_verify->add_subcommand("moebius", "order-ideal multiplicativity on a poset");
    c_v_moeb->add_option("file", file, "poset file")->required();
    c_v_moeb->add_option("--char", characteristic, "field characteristic, 0 for the rationals");

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();
    for (auto* sub : c_g0->get_subcommands(nullptr)) sub->fallthrough();
    for (auto* sub : c_verify->get_subcommands(nullptr)) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        bool j = std::find(args.begin(), args.end(), "--json") != args.end();
        std::string kind = args.empty() || args[0].empty() || args[0][0] == '-' ? "cli" : args[0];
        return emit_error(out, err, j, kind, Error(Errc::usage, e.what()));
    }

    std::string kind;
    try {
        Output o;
        if (*c_collapse) {
            kind = "collapse";
            o = cmd_collapse(file);
        } else if (*c_check) {
            kind = "check";
            o = cmd_check(file, subset, subset_opt->count() > 0);
        } else if (*c_dimension) {
            kind = "dimension";
            o = cmd_dimension(file);
        } else if (*c_basis) {
            kind = "basis";
            o = cmd_basis(file);
        } else if (*c_cartan) {
            kind = "cartan";
            o = cmd_cartan(file);
        } else if (*c_idem) {
            kind = "idempotents";
            o = cmd_idempotents(file);
        } else if (*c_radical) {
            kind = "radical";
            o = cmd_radical(file);
        } else if (*c_socle) {
            kind = "socle";
            o = cmd_socle(file, label, label_opt->count() > 0);
        } else if (*c_induce) {
            kind = "induce";
            o = cmd_induce(file, vsub, label, simple);
        } else if (*c_restrict) {
            kind = "restrict";
            o = cmd_restrict(file, vsub, label);
        } else if (*c_g0_product) {
            kind = "g0-product";
            o = cmd_g0_product(comp_a, comp_b);
        } else if (*c_g0_coproduct) {
            kind = "g0-coproduct";
            o = cmd_g0_coproduct(comp_a);
        } else if (*c_g0_antipode) {
            kind = "g0-antipode";
            o = cmd_g0_antipode(comp_a);
        } else if (*c_g0_pairing) {
            kind = "g0-pairing";
            o = cmd_g0_pairing(comp_a, comp_b);
        } else if (*c_bratteli) {
            kind = "bratteli";
            o = cmd_bratteli(levels);
        } else if (*c_fibdecomp) {
            kind = "fibdecomp";
            o = cmd_fibdecomp(n, marked);
        } else if (*c_scan_min) {
            kind = "scan-min-dim";
            o = cmd_scan_min_dim(n, bound);
        } else if (*c_scan_conj) {
            kind = "scan-conjecture";
            o = cmd_scan_conjecture(file);
        } else if (*c_v_rel) {
            kind = "verify-relations";
            o = cmd_verify_relations(file, samples);
        } else if (*c_v_anti) {
            kind = "verify-antipode";
            o = cmd_verify_antipode(n);
        } else if (*c_v_moeb) {
            kind = "verify-moebius";
            o = cmd_verify_moebius(file, characteristic);
        } else {
            fail_usage("missing subcommand");
        }
        emit(out, as_json, kind, o);
        return 0;
    } catch (const Error& e) {
        return emit_error(out, err, as_json, kind, e);
    }
}

} // namespace heckeq
