#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bmg/bmatching.hpp"
#include "bmg/gadgets.hpp"

#include <random>

using namespace bmg;

namespace {

GameGraph k33(int b = 3) {
    GameGraph g;
    for (int i = 0; i < 3; ++i)
        g.add_vertex("l" + std::to_string(i + 1), Side::A, b);
    for (int i = 0; i < 3; ++i)
        g.add_vertex("r" + std::to_string(i + 1), Side::B, b);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            g.add_edge(i, 3 + j, 1);
    return g;
}

GameGraph triangle2() {
    GameGraph g;
    g.simple = false;
    g.add_vertex("a", Side::None, 2);
    g.add_vertex("b", Side::None, 2);
    g.add_vertex("c", Side::None, 2);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 0, 1);
    return g;
}

GameGraph c4_b2() {
    GameGraph g;
    g.simple = false;
    g.add_vertex("a", Side::A, 2);
    g.add_vertex("b", Side::B, 2);
    g.add_vertex("c", Side::A, 2);
    g.add_vertex("d", Side::B, 2);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 1);
    g.add_edge(3, 0, 1);
    return g;
}

}  // namespace

TEST_CASE("K33 saturates at b=3") {
    GameGraph g = k33();
    Coalition all = Coalition::grand(6);
    CHECK(value(g, all) == 9);
    Matching m = max_matching(g, all);
    CHECK(m.mult == std::vector<int>(9, 1));
    CHECK(m.weight(g) == 9);
}

TEST_CASE("gadget shape values match the frozen classes") {
    GameGraph base;
    base.add_vertex("a", Side::A);
    base.add_vertex("b", Side::B);
    base.add_edge(0, 1, 1);
    NucleolusGadget gad = build_nucleolus_gadget(base);
    const auto& t = gad.tails[0];
    int n = gad.graph.num_vertices();
    // Shape (2,3): two of {u, v_u, w_u} plus all of {x_u, y_u, z_u}.
    CHECK(value(gad.graph, Coalition::of({0, t.v, t.x, t.y, t.z}, n)) == 6);
    // Shape (1,1) -> 1; shape (3,0) -> 0; complete gadget -> 9.
    CHECK(value(gad.graph, Coalition::of({t.w, t.y}, n)) == 1);
    CHECK(value(gad.graph, Coalition::of({0, t.v, t.w}, n)) == 0);
    CHECK(value(gad.graph, gad.complete_gadget(0)) == 9);
}

TEST_CASE("non-simple triangle and square") {
    CHECK(value(triangle2(), Coalition::grand(3)) == 3);
    CHECK(value(c4_b2(), Coalition::grand(4)) == 4);
    // Doubling a single edge is optimal for any pair.
    CHECK(value(c4_b2(), Coalition::of({0, 1}, 4)) == 2);
}

TEST_CASE("doubled edges fall short on a path with unit endpoints") {
    GameGraph g;
    g.simple = false;
    g.add_vertex("p", Side::None, 1);
    g.add_vertex("q", Side::None, 2);
    g.add_vertex("r", Side::None, 2);
    g.add_vertex("s", Side::None, 1);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 1);
    CHECK(value(g, Coalition::grand(4)) == 3);
    // Parallel edges only: a doubled edge needs capacity two at both ends,
    // so only the middle edge qualifies and the best reaches just 2.
    GameGraph ones;
    ones.add_vertex("q", Side::None, 1);
    ones.add_vertex("r", Side::None, 1);
    ones.add_edge(0, 1, 1);
    CHECK(2 * value(ones, Coalition::grand(2)) == 2);
}

TEST_CASE("fast parallel-edge oracle equals the exhaustive one") {
    GameGraph g = c4_b2();
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
        Coalition s{bits, 4};
        CHECK(nonsimple2_value_fast(g, s) == value(g, s));
    }
    CHECK_THROWS_AS(nonsimple2_value_fast(triangle2(), Coalition::grand(3)),
                    PreconditionError);
    GameGraph simple = c4_b2();
    simple.simple = true;
    CHECK_THROWS_AS(nonsimple2_value_fast(simple, Coalition::grand(4)), PreconditionError);
}

TEST_CASE("witness is the lexicographically smallest optimum") {
    GameGraph g;
    g.simple = false;
    g.add_vertex("a", Side::A, 1);
    g.add_vertex("b", Side::B, 1);
    g.add_edge(0, 1, 1);
    g.add_edge(0, 1, 1);  // equal-weight parallel copy
    Matching m = max_matching(g, Coalition::grand(2));
    CHECK(m.mult == std::vector<int>{0, 1});
}

TEST_CASE("scale refusal on oversized induced edge sets") {
    GameGraph g;
    for (int i = 0; i < 26; ++i)
        g.add_vertex("v" + std::to_string(i), Side::None, 1);
    for (int i = 0; i + 1 < 26; ++i)
        g.add_edge(i, i + 1, 1);
    CHECK_THROWS_AS(value(g, Coalition::grand(26)), ScaleRefusal);
    CHECK(value(g, Coalition::grand(26), /*edge_cap=*/30) == 13);
}

TEST_CASE("negative weight edges never help") {
    GameGraph g;
    g.add_vertex("a", Side::None, 1);
    g.add_vertex("b", Side::None, 1);
    g.add_vertex("c", Side::None, 1);
    g.add_edge(0, 1, Rational(-5));
    g.add_edge(1, 2, 1);
    CHECK(value(g, Coalition::grand(3)) == 1);
    Matching m = max_matching(g, Coalition::grand(3));
    CHECK(m.mult == std::vector<int>{0, 1});
}

TEST_CASE("monotonicity and capacity bound on random graphs") {
    std::mt19937 rng(7031);
    std::uniform_int_distribution<int> n_d(3, 7), b_d(1, 3), w_d(1, 5), coin(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        GameGraph g;
        int n = n_d(rng);
        for (int i = 0; i < n; ++i)
            g.add_vertex("v" + std::to_string(i), Side::None, b_d(rng));
        g.simple = coin(rng) == 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng))
                    g.add_edge(i, j, w_d(rng));
        for (std::uint64_t bits = 0; bits + 1 < (1u << n); ++bits) {
            Coalition s{bits, n};
            Rational vs = value(g, s);
            // Monotone under adding one player.
            for (int i = 0; i < n; ++i)
                if (!s.contains(i))
                    CHECK(value(g, s.with(i)) >= vs);
            // Capacity bound: at most (max weight) * (sum of b) / 2.
            Rational cap = 0;
            for (int i : s.members())
                cap += g.vertices[i].b;
            CHECK(vs <= cap * 5 / 2);
        }
    }
}

TEST_CASE("matching components") {
    GameGraph g;
    g.add_vertex("a", Side::None, 1);
    g.add_vertex("b", Side::None, 1);
    g.add_vertex("c", Side::None, 1);
    g.add_vertex("d", Side::None, 1);
    g.add_edge(0, 1, 1);
    g.add_edge(2, 3, 1);
    Coalition all = Coalition::grand(4);
    Matching m = max_matching(g, all);
    auto comps = matching_components(g, all, m);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == Coalition::of({0, 1}, 4));
    CHECK(comps[1] == Coalition::of({2, 3}, 4));
}

TEST_CASE("connectivity of every maximum matching") {
    GameGraph path;
    path.add_vertex("a", Side::None, 1);
    path.add_vertex("b", Side::None, 1);
    path.add_vertex("c", Side::None, 1);
    path.add_edge(0, 1, 1);
    path.add_edge(1, 2, 1);
    // Either edge is optimal and leaves a vertex uncovered.
    CHECK_FALSE(all_max_matchings_connected(path, Coalition::grand(3), 100000));
    CHECK(all_max_matchings_connected(path, Coalition::of({0, 1}, 3), 100000));
    // Empty optimum: connected iff at most one vertex.
    CHECK(all_max_matchings_connected(path, Coalition::of({0}, 3), 100000));
    CHECK_FALSE(all_max_matchings_connected(path, Coalition::of({0, 2}, 3), 100000));
    CHECK_THROWS_AS(all_max_matchings_connected(path, Coalition::grand(3), 1), ScaleRefusal);
}
