#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "heckeq/coxeter.hpp"
#include "heckeq/errors.hpp"

using namespace heckeq;

namespace {

// Path with n vertices named s1..sn and the given consecutive edge weights
// (all 3 when omitted); parameters all zero, irrelevant here.
CoxeterDiagram path_diagram(int n, std::vector<int> weights = {}) {
    if (weights.empty()) weights.assign(n > 0 ? n - 1 : 0, 3);
    std::ostringstream os;
    for (int i = 1; i <= n; ++i) os << "vertex s" << i << " q=0\n";
    for (int i = 1; i < n; ++i) {
        os << "edge s" << i << " s" << i + 1 << " ";
        if (weights[i - 1] < 0)
            os << "inf\n";
        else
            os << weights[i - 1] << "\n";
    }
    return parse_diagram(os.str());
}

CoxeterDiagram from_edges(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    std::ostringstream os;
    for (int i = 0; i < n; ++i) os << "vertex s" << i << " q=0\n";
    for (auto [u, v, m] : edges) os << "edge s" << u << " s" << v << " " << m << "\n";
    return parse_diagram(os.str());
}

} // namespace

TEST_CASE("classification of finite and affine shapes") {
    for (int n = 1; n <= 6; ++n) {
        auto label = classify_component(path_diagram(n));
        CHECK(label.family == Family::A);
        CHECK(label.rank == n);
        CHECK(label.order == factorial(n + 1));
    }
    CHECK(classify_component(path_diagram(2, {4})).str() == "I2(4)");
    CHECK(classify_component(path_diagram(2, {4})).order == 8);
    CHECK(classify_component(path_diagram(2, {7})).order == 14);
    CHECK(classify_component(path_diagram(2, {-1})).finite == false);
    CHECK(classify_component(path_diagram(3, {4, 3})).str() == "BC3");
    CHECK(classify_component(path_diagram(3, {4, 3})).order == 48);
    CHECK(classify_component(path_diagram(5, {3, 3, 3, 4})).order == 3840);
    CHECK(classify_component(path_diagram(4, {3, 4, 3})).str() == "F4");
    CHECK(classify_component(path_diagram(4, {3, 4, 3})).order == 1152);
    CHECK(classify_component(path_diagram(3, {5, 3})).str() == "H3");
    CHECK(classify_component(path_diagram(3, {5, 3})).order == 120);
    CHECK(classify_component(path_diagram(4, {3, 3, 5})).order == 14400);
    CHECK(classify_component(path_diagram(3, {6, 3})).finite == false);
    CHECK(classify_component(path_diagram(4, {4, 3, 4})).finite == false);
    CHECK(classify_component(path_diagram(5, {3, 4, 3, 3})).finite == false);

    // 4-cycle of weight-3 edges is affine
    auto cycle = from_edges(4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 0, 3}});
    CHECK(classify_component(cycle).finite == false);

    auto d4 = from_edges(4, {{0, 1, 3}, {1, 2, 3}, {1, 3, 3}});
    CHECK(classify_component(d4).str() == "D4");
    CHECK(classify_component(d4).order == 192);
    auto d6 = from_edges(6, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {3, 5, 3}});
    CHECK(classify_component(d6).str() == "D6");
    CHECK(classify_component(d6).order == 23040);

    auto e6 = from_edges(6, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {2, 5, 3}});
    CHECK(classify_component(e6).order == 51840);
    auto e7 = from_edges(7, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {2, 6, 3}});
    CHECK(classify_component(e7).order == 2903040);
    auto e8 = from_edges(8,
                         {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {2, 7, 3}});
    CHECK(classify_component(e8).order == 696729600);

    // affine shapes: 4-leaf star, two forks, and the E6 extension
    auto star4 = from_edges(5, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}});
    CHECK(classify_component(star4).finite == false);
    auto twofork = from_edges(6, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {1, 4, 3}, {2, 5, 3}});
    CHECK(classify_component(twofork).finite == false);
    auto e6t = from_edges(7, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {2, 5, 3}, {5, 6, 3}});
    CHECK(classify_component(e6t).finite == false);

    CHECK_THROWS_AS(classify_component(from_edges(2, {})), Error); // disconnected
}

TEST_CASE("BFS enumeration of the symmetric group on 3 letters") {
    auto elems = enumerate_group(path_diagram(2));
    REQUIRE(elems.size() == 6);
    std::multiset<int> lengths;
    for (const auto& w : elems) lengths.insert(w.length());
    CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3});
    CHECK(elems[0].word.empty());
    CHECK(elems[0].support == 0);
    // the long element has two reduced words; the canonical one is lex-least
    CHECK(elems[5].word == std::vector<std::int8_t>{0, 1, 0});
    CHECK(elems[5].support == 0b11u);
}

TEST_CASE("canonical words are lex-least among all reduced words") {
    auto d = from_edges(4, {{0, 1, 3}, {1, 2, 3}, {1, 3, 3}}); // D4
    CoxGroup g(d);
    REQUIRE(g.size() == 192);
    // layer by layer, the lex-least reduced word of an element is the least
    // candidate s + (lex-least word of s*element) over its left descents
    std::map<int, std::vector<std::int8_t>> layer{{0, {}}};
    std::size_t visited = 1;
    for (int len = 1; !layer.empty(); ++len) {
        std::map<int, std::vector<std::int8_t>> next;
        for (const auto& [e, w] : layer)
            for (int s = 0; s < g.rank(); ++s) {
                int to = g.left_mult(s, e);
                if (g.length(to) != len) continue;
                auto cand = w;
                cand.insert(cand.begin(), static_cast<std::int8_t>(s));
                auto it = next.find(to);
                if (it == next.end() || cand < it->second) next[to] = cand;
            }
        for (const auto& [e, w] : next) CHECK(g.word(e) == w);
        visited += next.size();
        layer = std::move(next);
    }
    CHECK(visited == g.size());
}

TEST_CASE("left multiplication changes length by one") {
    auto d = from_edges(4, {{0, 1, 3}, {1, 2, 3}, {1, 3, 3}});
    CoxGroup g(d);
    for (std::size_t w = 0; w < g.size(); ++w)
        for (int s = 0; s < g.rank(); ++s) {
            int diff = g.length(g.left_mult(s, static_cast<int>(w))) - g.length(static_cast<int>(w));
            CHECK((diff == 1 || diff == -1));
        }
}

TEST_CASE("support matches word letters and element counts match orders") {
    for (int n = 1; n <= 5; ++n) {
        auto elems = enumerate_group(path_diagram(n));
        CHECK(BigInt(elems.size()) == classify_component(path_diagram(n)).order);
        for (const auto& w : elems) {
            std::uint32_t sup = 0;
            for (auto c : w.word) sup |= 1u << c;
            CHECK(sup == w.support);
            CHECK(static_cast<int>(w.word.size()) == w.length());
        }
    }
}

TEST_CASE("replaying canonical words reproduces elements") {
    auto d = path_diagram(4);
    CoxGroup g(d);
    for (std::size_t w = 0; w < g.size(); ++w) {
        int cur = 0;
        auto word = g.word(static_cast<int>(w));
        for (auto it = word.rbegin(); it != word.rend(); ++it) cur = g.left_mult(*it, cur);
        CHECK(cur == static_cast<int>(w));
    }
}

TEST_CASE("enumeration rejects bad inputs") {
    CHECK_THROWS_AS(enumerate_group(path_diagram(2, {4})), Error); // not simply laced
    auto cycle = from_edges(3, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
    CHECK_THROWS_AS(enumerate_group(cycle), Error); // not finite
    try {
        enumerate_group(path_diagram(5), 10);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::cap);
    }
}

TEST_CASE("disconnected diagrams enumerate as direct products") {
    auto d = from_edges(4, {{0, 1, 3}, {2, 3, 3}});
    CHECK(enumerate_group(d).size() == 36);
    CHECK(group_order(d).order == 36);
}

TEST_CASE("parabolic counts") {
    auto d = path_diagram(3);
    CHECK(elements_avoiding(d, {0}) == 6);
    CHECK(elements_avoiding(d, {}) == 24);
    CHECK(elements_avoiding(d, {0, 2}) == 2);
    // agreement with direct filtering
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> b;
        for (int v = 0; v < 3; ++v)
            if ((mask >> v) & 1) b.push_back(v);
        BigInt count = 0;
        for (const auto& w : enumerate_group(d))
            if (!(w.support & static_cast<std::uint32_t>(mask))) ++count;
        CHECK(count == elements_avoiding(d, b));
    }
}
