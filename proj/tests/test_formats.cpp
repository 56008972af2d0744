#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bmg/gadgets.hpp"
#include "bmg/graph.hpp"
#include "bmg/rational.hpp"

#include <sstream>

using namespace bmg;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/2") == Rational(3) / 2);
    CHECK(parse_rational("-3/2") == Rational(-3) / 2);
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("6/4") == Rational(3) / 2);
    CHECK(to_string(Rational(3) / 2) == "3/2");
    CHECK(to_string(Rational(-1) / 2) == "-1/2");
    CHECK(to_string(Rational(4) / 2) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("two"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("graph round trip") {
    GameGraph g;
    g.simple = false;
    g.add_vertex("a", Side::A, 2);
    g.add_vertex("b", Side::B, 2);
    g.add_vertex("c", Side::None, 1);
    g.add_edge(0, 1, Rational(3) / 2);
    g.add_edge(1, 2, 2, 1);
    std::vector<std::pair<std::string, std::string>> roles{{"a", "left"}, {"b", "right"}};

    std::ostringstream os;
    write_graph(os, g, &roles);
    std::istringstream is(os.str());
    std::vector<std::pair<std::string, std::string>> roles_back;
    GameGraph back = parse_graph(is, &roles_back);

    CHECK(back.simple == g.simple);
    REQUIRE(back.num_vertices() == g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) {
        CHECK(back.vertices[i].name == g.vertices[i].name);
        CHECK(back.vertices[i].side == g.vertices[i].side);
        CHECK(back.vertices[i].b == g.vertices[i].b);
    }
    REQUIRE(back.edges.size() == g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(back.edges[i].u == g.edges[i].u);
        CHECK(back.edges[i].v == g.edges[i].v);
        CHECK(back.edges[i].w == g.edges[i].w);
        CHECK(back.edges[i].max_mult == g.edges[i].max_mult);
    }
    CHECK(roles_back == roles);
}

TEST_CASE("writing is byte-deterministic") {
    GameGraph g;
    g.add_vertex("a", Side::A, 1);
    g.add_vertex("b", Side::B, 1);
    g.add_edge(0, 1, 1);
    std::ostringstream o1, o2;
    write_graph(o1, g);
    write_graph(o2, g);
    CHECK(o1.str() == o2.str());
}

namespace {

int error_line(const std::string& text) {
    std::istringstream is(text);
    try {
        parse_graph(is);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("positioned parse errors") {
    CHECK(error_line("players\na X\n") == 2);                    // bad side
    CHECK(error_line("a A\n") == 1);                             // before any section
    CHECK(error_line("players\na A\nb\nq 1\n") == 4);            // unknown player
    CHECK(error_line("players\na A\nb\na 0\n") == 4);            // nonpositive capacity
    CHECK(error_line("players\na A\nedges\na a 1\n") == 4);      // loop
    CHECK(error_line("players\na A\nb B\nedges\na b 1/0\n") == 5);
    CHECK(error_line("mode weird\n") == 1);
    CHECK(error_line("players\na A\na B\n") == 3);               // duplicate name
}

TEST_CASE("comments and blank lines are ignored") {
    std::istringstream is(
        "# a tiny instance\n"
        "players\n"
        "\n"
        "a A  # left\n"
        "b B\n"
        "b\n"
        "a 1\n"
        "b 1\n"
        "edges\n"
        "a b 3/2\n");
    GameGraph g = parse_graph(is);
    CHECK(g.num_vertices() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].w == Rational(3) / 2);
}

TEST_CASE("X3C parse errors are positioned") {
    std::istringstream bad1("1\ne1 e2\n");
    CHECK_THROWS_AS(parse_x3c(bad1), ParseError);
    std::istringstream bad2("");
    CHECK_THROWS_AS(parse_x3c(bad2), ParseError);
    std::istringstream bad3("1 2\ne1 e2 e3\n");
    CHECK_THROWS_AS(parse_x3c(bad3), ParseError);
    // Wrong ground-set size surfaces as a precondition failure.
    std::istringstream bad4("2\ne1 e2 e3\ne1 e2 e3\ne1 e2 e3\n");
    CHECK_THROWS_AS(parse_x3c(bad4), PreconditionError);
}
