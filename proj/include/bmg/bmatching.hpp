#pragma once

#include "bmg/coalition.hpp"
#include "bmg/graph.hpp"
#include "bmg/rational.hpp"

#include <vector>

namespace bmg {

/// Edge multiplicities aligned with GameGraph::edges.
struct Matching {
    std::vector<int> mult;

    Rational weight(const GameGraph& g) const;
};

constexpr int kDefaultEdgeCap = 24;

/// Maximum weight of a b-matching in G[S]. Exact exhaustive search with
/// degree-bound pruning; refuses induced subgraphs with more than
/// `edge_cap` usable edges.
Rational value(const GameGraph& g, Coalition s, int edge_cap = kDefaultEdgeCap);

/// Witness for value(); lexicographically smallest multiplicity vector
/// among the optima.
Matching max_matching(const GameGraph& g, Coalition s, int edge_cap = kDefaultEdgeCap);

/// Bipartite b=2 non-simple shortcut: twice the maximum weight 1-matching.
/// Rejects graphs without consistent bipartition labels (the identity fails
/// on odd cycles) or with b != 2 somewhere.
Rational nonsimple2_value_fast(const GameGraph& g, Coalition s, int edge_cap = kDefaultEdgeCap);

/// Vertex sets of connected components of the subgraph of G[S] induced by
/// edges of positive multiplicity; isolated vertices excluded. Canonical order.
std::vector<Coalition> matching_components(const GameGraph& g, Coalition s, const Matching& m);

/// Exhaustively checks whether every maximum b-matching M of G[S] makes
/// G[S][M] connected, the matched subgraph taken over all of S (an uncovered
/// vertex disconnects it). `cap` bounds the number of search nodes; beyond it
/// the check refuses rather than guessing.
bool all_max_matchings_connected(const GameGraph& g, Coalition s, long cap);

}  // namespace bmg
