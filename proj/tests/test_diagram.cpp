#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckeq/diagram.hpp"
#include "heckeq/errors.hpp"

using namespace heckeq;

namespace {

const char* kPath3 =
    "field rational\n"
    "vertex s1 q=0\n"
    "vertex s2 q=1\n"
    "vertex s3 q=0\n"
    "edge s1 s2 3\n"
    "edge s2 s3 3\n";

} // namespace

TEST_CASE("parse a labeled path") {
    auto d = parse_diagram(kPath3);
    CHECK(d.size() == 3);
    CHECK(d.vertex_index("s2") == 1);
    CHECK(d.vertex_index("nope") == -1);
    CHECK(d.param(0).is_zero());
    CHECK(d.param(1).is_one());
    CHECK(d.weight(0, 1) == 3);
    CHECK(d.weight(1, 0) == 3);
    CHECK(d.weight(0, 2) == 2);
    CHECK(d.edges().size() == 2);
    CHECK(is_simply_laced(d));
}

TEST_CASE("serialize then parse is the identity") {
    auto d = parse_diagram(
        "field fp 7\n"
        "vertex a q=3\n"
        "vertex b q=0\n"
        "vertex c q=1/2\n"
        "edge a b 4\n"
        "edge b c inf\n");
    CHECK(d.field() == FieldSpec::prime_field(7));
    CHECK(d.weight(1, 2) == CoxeterDiagram::infinite_weight);
    CHECK_FALSE(is_simply_laced(d));
    auto text = serialize_diagram(d);
    auto d2 = parse_diagram(text);
    CHECK(serialize_diagram(d2) == text);
    CHECK(d2.size() == d.size());
    for (int v = 0; v < d.size(); ++v) {
        CHECK(d2.name(v) == d.name(v));
        CHECK(d2.param(v) == d.param(v));
    }
    CHECK(d2.weight(0, 1) == 4);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_diagram("vertex a q=0\nvertex a q=1\n"),
                         doctest::Contains("duplicate vertex"), Error);
    CHECK_THROWS_WITH_AS(parse_diagram("vertex a q=0\nedge a b 3\n"),
                         doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_diagram("vertex a q=0\nedge a a 3\n"),
                         doctest::Contains("self-loop"), Error);
    CHECK_THROWS_WITH_AS(parse_diagram("vertex a q=0\nvertex b q=0\nedge a b 2\n"),
                         doctest::Contains("line 3"), Error);
    CHECK_THROWS_AS(parse_diagram("vertex a\n"), Error);
    CHECK_THROWS_AS(parse_diagram("hello\n"), Error);
    CHECK_THROWS_AS(parse_diagram("vertex a q=0\nfield fp 5\n"), Error);
    CHECK_THROWS_AS(parse_diagram("field fp 4\n"), Error);
}

TEST_CASE("comments and blank lines are skipped") {
    auto d = parse_diagram("# header\n\nfield rational # trailing\nvertex a q=2 # two\n");
    CHECK(d.size() == 1);
    CHECK(d.param(0).str() == "2");
}

TEST_CASE("induced subdiagram keeps order and edges") {
    auto d = parse_diagram(kPath3);
    auto sub = induced_subdiagram(d, {2, 0});
    CHECK(sub.size() == 2);
    CHECK(sub.name(0) == "s1");
    CHECK(sub.name(1) == "s3");
    CHECK(sub.edges().empty());
    auto sub2 = induced_subdiagram(d, {1, 2});
    CHECK(sub2.edges().size() == 1);
    CHECK(sub2.weight(0, 1) == 3);
    CHECK_THROWS_AS(induced_subdiagram(d, {0, 0}), Error);
    CHECK_THROWS_AS(induced_subdiagram(d, {5}), Error);
}

TEST_CASE("connected components are sorted by least vertex") {
    auto d = parse_diagram(
        "vertex a q=0\nvertex b q=0\nvertex c q=0\nvertex d q=0\n"
        "edge a c 3\nedge b d 5\n");
    auto comps = connected_components(d);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1, 3});
}

TEST_CASE("graph files parse with nil marks") {
    auto gi = parse_graph(
        "graph\n"
        "vertex a\n"
        "vertex b nil\n"
        "vertex c\n"
        "edge a b\n"
        "edge b c\n");
    CHECK(gi.graph.size() == 3);
    CHECK(gi.nil_set == 0b010u);
    CHECK(gi.graph.has_edge(0, 1));
    CHECK_FALSE(gi.graph.has_edge(0, 2));
    CHECK(gi.graph.neighborhood(0b001u) == 0b010u);
    CHECK(gi.graph.neighborhood(0b010u) == 0b101u);
    CHECK_THROWS_AS(parse_graph("vertex a\n"), Error);
    CHECK_THROWS_AS(parse_graph("graph\nedge a b\n"), Error);
    CHECK_THROWS_AS(parse_graph("graph\nvertex a\nedge a a\n"), Error);
}

TEST_CASE("underlying graph forgets weights") {
    auto d = parse_diagram(kPath3);
    auto g = underlying_graph(d);
    CHECK(g.size() == 3);
    CHECK(g.edges().size() == 2);
    CHECK(g.name(1) == "s2");
}
