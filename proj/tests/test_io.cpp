#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace kohnert;
using namespace fixtures;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("polynomial JSON round-trip") {
    CHECK(polynomial_from_json(to_json(t5_character())) == t5_character());
    std::mt19937 rng(4);
    for (int k = 0; k < 200; ++k) {
        auto f = random_polynomial(rng, 4, 5, 6);
        CHECK(polynomial_from_json(json::parse(to_json(f).dump())) == f);
    }
    Polynomial huge(1);
    huge.add_term({1}, Integer("123456789012345678901234567890"));
    auto j = to_json(huge);
    CHECK(j["terms"][0]["coef"].is_string());
    CHECK(polynomial_from_json(j) == huge);
    CHECK(to_json(Polynomial::monomial({2, 0, 1}))["terms"][0]["exp"] == json::parse("[2,0,1]"));
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"n":1,"terms":[{"exp":[-1],"coef":1}]})")),
                    precondition_error);
}

TEST_CASE("diagram and labeling JSON") {
    CHECK(to_json(Diagram{{1, 2}, {2, 1}}).dump() == "[[1,2],[2,1]]");
    CHECK(to_json(WeakComposition{0, 1, 2}).dump() == "[0,1,2]");
    LabeledDiagram l{{{1, 1}, 2}};
    CHECK(to_json(l).dump() == R"({"cells":[{"r":1,"c":1,"label":2}]})");
}

TEST_CASE("tableau rendering") {
    CHECK(render_tableau(Tableau{{{1, 1}, {2}, {3}}}) == "3\n2\n1 1\n");
    CHECK(render_labeled({{{1, 2}, 3}, {{2, 1}, 12}}) == ".3\nc.\n");
}

TEST_CASE("poset DOT output") {
    auto dot = poset_dot(nw_example());
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(count(dot, "[label=") == 17);
    CHECK(count(dot, " -> ") == 31);
    CHECK(dot.find(R"(....\n#...\n##..\n.#..\n)") == std::string::npos);
    CHECK(dot.find(R"(..\n#.\n##\n.#\n)") != std::string::npos);
}

TEST_CASE("crystal DOT output") {
    auto comps = components<Diagram>(kohnert_closure(nw_example()).members(), 4);
    auto dot = crystal_dot(comps);
    CHECK(count(dot, "subgraph cluster_") == 2);
    CHECK(count(dot, " -> ") == 18);
    CHECK(count(dot, "color=3") == 2);
    auto tab = crystal_graph(demazure_crystal({2, 1, 1, 0}, {0, 1, 2, 1}, 4), 4);
    auto tdot = crystal_dot(std::vector{tab});
    CHECK(count(tdot, " -> ") == 12);
    CHECK(tdot.find(R"(3\n2\n1 1\n)") != std::string::npos);
}
