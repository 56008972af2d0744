#pragma once

#include "bmg/game.hpp"
#include "bmg/lp.hpp"

#include <string>
#include <vector>

namespace bmg {

enum class FamilyKind { Full, SizeBounded, CharsetI, CharsetII, Custom };

/// Deduplicated family of proper nonempty coalitions with provenance.
struct CoalitionFamily {
    std::vector<Coalition> coalitions;  // canonical order
    FamilyKind kind = FamilyKind::Custom;
    int k = -1;  // size bound parameter, when meaningful

    static CoalitionFamily full(int n);
    static CoalitionFamily size_bounded(int n, int k_max);
    static CoalitionFamily custom(std::vector<Coalition> coalitions);
};

struct SchemeRound {
    Rational epsilon;
    std::vector<Coalition> fixed;  // canonical order
    Allocation point;
};

struct SchemeTrace {
    std::vector<SchemeRound> rounds;
    Allocation final;
};

/// The sequential LP scheme: maximize the minimum excess over the family,
/// pin every coalition tight in all optima, and repeat until the fixed
/// equalities (with efficiency) have full rank. Individual rationality is
/// carried as a permanent hard constraint in every round.
SchemeTrace kopelowitz(const Game& game, const CoalitionFamily& family);

/// Scheme over all proper coalitions; refuses more than 16 players.
SchemeTrace nucleolus_bruteforce_trace(const Game& game);
Allocation nucleolus_bruteforce(const Game& game);

/// Nucleolus of a simple b<=2 bipartite game where side A has b=2 throughout
/// and at most k vertices of side B have b=2, via the family of all
/// coalitions on at most 2k+3 vertices.
Allocation nucleolus_charset_i(const GameGraph& g, int k, int edge_cap = kDefaultEdgeCap);
SchemeTrace nucleolus_charset_i_trace(const GameGraph& g, int k, int edge_cap = kDefaultEdgeCap);

/// Nucleolus of a non-simple b=2 bipartite game via the family of all
/// singletons and pairs, with the parallel-edge value shortcut as oracle.
Allocation nucleolus_charset_ii(const GameGraph& g, int edge_cap = kDefaultEdgeCap);
SchemeTrace nucleolus_charset_ii_trace(const GameGraph& g, int edge_cap = kDefaultEdgeCap);

/// Exact equality test against the brute-force nucleolus.
bool is_nucleolus(const Game& game, const Allocation& candidate);

/// Core allocation of a non-simple 2-matching game from the edge-cover dual:
/// allocation = 2 * raw dual point. Both are kept for audit.
struct DualCoreResult {
    Allocation allocation;
    Allocation raw;
    Rational dual_value;
};
DualCoreResult dual_core_allocation(const GameGraph& g);

std::string format_trace(const Game& game, const SchemeTrace& trace);

}  // namespace bmg
