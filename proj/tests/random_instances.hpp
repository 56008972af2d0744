// Seeded generators shared by the unit and acceptance suites. Everything
// here is deterministic given the RNG state.
#pragma once

#include "bmg/game.hpp"
#include "bmg/graph.hpp"

#include <random>
#include <string>

namespace bmg::testing {

/// Simple bipartite graph with b = 2 on side A and at most `k` side-B
/// vertices with b = 2; at most 10 vertices, at least one edge.
inline GameGraph random_two_cover_instance(std::mt19937& rng, int k) {
    GameGraph g;
    std::uniform_int_distribution<int> na_d(2, 4), w_d(1, 4);
    int na = na_d(rng);
    std::uniform_int_distribution<int> nb_d(2, 10 - na > 6 ? 6 : 10 - na);
    int nb = nb_d(rng);
    for (int i = 0; i < na; ++i)
        g.add_vertex("a" + std::to_string(i + 1), Side::A, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    int twos = 0;
    for (int i = 0; i < nb; ++i) {
        int b = (twos < k && coin(rng)) ? 2 : 1;
        if (b == 2) ++twos;
        g.add_vertex("b" + std::to_string(i + 1), Side::B, b);
    }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            if (coin(rng))
                g.add_edge(i, na + j, w_d(rng));
    if (g.edges.empty())
        g.add_edge(0, na, w_d(rng));
    return g;
}

/// Non-simple bipartite graph with b = 2 everywhere; at most 10 vertices,
/// at least one edge.
inline GameGraph random_parallel_instance(std::mt19937& rng) {
    GameGraph g;
    g.simple = false;
    std::uniform_int_distribution<int> na_d(2, 4), w_d(1, 4);
    int na = na_d(rng);
    std::uniform_int_distribution<int> nb_d(2, 10 - na > 6 ? 6 : 10 - na);
    int nb = nb_d(rng);
    for (int i = 0; i < na; ++i)
        g.add_vertex("a" + std::to_string(i + 1), Side::A, 2);
    for (int i = 0; i < nb; ++i)
        g.add_vertex("b" + std::to_string(i + 1), Side::B, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            if (coin(rng))
                g.add_edge(i, na + j, w_d(rng));
    if (g.edges.empty())
        g.add_edge(0, na, w_d(rng));
    return g;
}

/// Random imputation: individual minimums plus a random split of the slack.
inline Allocation random_imputation(const Game& game, std::mt19937& rng) {
    const int n = game.num_players();
    Allocation x;
    x.values.resize(n);
    Rational slack = game.grand_value();
    for (int i = 0; i < n; ++i) {
        x.values[i] = game.value(Coalition::singleton(i, n));
        slack -= x.values[i];
    }
    std::uniform_int_distribution<int> w_d(0, 9);
    std::vector<int> w(n);
    int total = 0;
    for (int i = 0; i < n; ++i)
        total += (w[i] = w_d(rng));
    if (total == 0) {
        w[0] = 1;
        total = 1;
    }
    for (int i = 0; i < n; ++i)
        x.values[i] += slack * w[i] / total;
    // Rounding the integer split exactly: the shares sum to slack by
    // construction since the weights sum to `total`.
    return x;
}

}  // namespace bmg::testing
