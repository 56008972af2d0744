#pragma once

#include "bmg/bmatching.hpp"
#include "bmg/coalition.hpp"
#include "bmg/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bmg {

/// Payoff vector over the player index space. No efficiency or rationality
/// is assumed; predicates check those.
struct Allocation {
    std::vector<Rational> values;

    Rational sum(Coalition s) const;
    Rational total() const;
};

/// A cooperative game: players plus a pure, deterministic value oracle.
/// Oracle results are memoized by coalition bitmask.
class Game {
public:
    using Oracle = std::function<Rational(Coalition)>;

    Game(std::vector<std::string> player_names, Oracle oracle);

    /// Simple or non-simple b-matching game on a graph.
    static Game from_graph(const GameGraph& g, int edge_cap = kDefaultEdgeCap);

    int num_players() const { return static_cast<int>(names_.size()); }
    const std::string& player_name(int i) const { return names_.at(i); }
    const std::vector<std::string>& player_names() const { return names_; }

    Rational value(Coalition s) const;
    Rational grand_value() const { return value(Coalition::grand(num_players())); }

private:
    std::vector<std::string> names_;
    Oracle oracle_;
    mutable std::unordered_map<std::uint64_t, Rational> memo_;
};

/// e(S, x) = x(S) - v(S).
Rational excess(const Game& game, Coalition s, const Allocation& x);

struct ExcessEntry {
    Coalition coalition;
    Rational excess;
};

/// Excesses over a family, sorted non-decreasing; ties broken by canonical
/// coalition order.
struct ExcessVector {
    std::vector<ExcessEntry> entries;
};

ExcessVector excess_vector(const Game& game, const Allocation& x,
                           const std::vector<Coalition>& family);

bool is_imputation(const Game& game, const Allocation& x);

struct CoreCheck {
    bool ok;
    std::optional<Coalition> violation;  // first violator in canonical order
};

CoreCheck core_check(const Game& game, const Allocation& x,
                     const std::vector<Coalition>& family);

enum class Ordering { Less, Equal, Greater };

/// Lexicographic comparison of the sorted excess sequences.
Ordering lex_compare(const ExcessVector& a, const ExcessVector& b);

/// All of S: proper nonempty coalitions, canonical order.
std::vector<Coalition> all_proper_coalitions(int n);

}  // namespace bmg
