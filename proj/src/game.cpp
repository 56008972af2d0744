#include "bmg/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmg {

Rational Allocation::sum(Coalition s) const {
    Rational acc = 0;
    for (int i = 0; i < s.player_count; ++i)
        if (s.contains(i)) acc += values.at(i);
    return acc;
}

Rational Allocation::total() const {
    Rational acc = 0;
    for (const auto& v : values)
        acc += v;
    return acc;
}

Game::Game(std::vector<std::string> player_names, Oracle oracle)
    : names_(std::move(player_names)), oracle_(std::move(oracle)) {
    if (names_.empty() || names_.size() > 64)
        throw PreconditionError("games need between 1 and 64 players");
}

Game Game::from_graph(const GameGraph& g, int edge_cap) {
    std::vector<std::string> names;
    names.reserve(g.vertices.size());
    for (const auto& v : g.vertices)
        names.push_back(v.name);
    GameGraph graph = g;
    return Game(std::move(names),
                [graph, edge_cap](Coalition s) { return bmg::value(graph, s, edge_cap); });
}

Rational Game::value(Coalition s) const {
    if (s.player_count != num_players())
        throw PreconditionError("coalition index space does not match the game");
    if (s.is_empty())
        return 0;
    auto it = memo_.find(s.bits);
    if (it != memo_.end())
        return it->second;
    Rational v = oracle_(s);
    memo_.emplace(s.bits, v);
    return v;
}

Rational excess(const Game& game, Coalition s, const Allocation& x) {
    if (static_cast<int>(x.values.size()) != game.num_players())
        throw PreconditionError("allocation size does not match the game");
    return x.sum(s) - game.value(s);
}

ExcessVector excess_vector(const Game& game, const Allocation& x,
                           const std::vector<Coalition>& family) {
    ExcessVector out;
    out.entries.reserve(family.size());
    for (const auto& s : family)
        out.entries.push_back({s, excess(game, s, x)});
    std::sort(out.entries.begin(), out.entries.end(),
              [](const ExcessEntry& a, const ExcessEntry& b) {
                  if (a.excess != b.excess) return a.excess < b.excess;
                  return a.coalition < b.coalition;
              });
    return out;
}

bool is_imputation(const Game& game, const Allocation& x) {
    if (x.total() != game.grand_value())
        return false;
    const int n = game.num_players();
    for (int i = 0; i < n; ++i)
        if (x.values[i] < game.value(Coalition::singleton(i, n)))
            return false;
    return true;
}

CoreCheck core_check(const Game& game, const Allocation& x,
                     const std::vector<Coalition>& family) {
    std::vector<Coalition> ordered = family;
    std::sort(ordered.begin(), ordered.end());
    for (const auto& s : ordered)
        if (excess(game, s, x) < 0)
            return {false, s};
    return {true, std::nullopt};
}

Ordering lex_compare(const ExcessVector& a, const ExcessVector& b) {
    if (a.entries.size() != b.entries.size())
        throw PreconditionError("excess vectors built over families of different size");
    for (size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].excess < b.entries[i].excess) return Ordering::Less;
        if (a.entries[i].excess > b.entries[i].excess) return Ordering::Greater;
    }
    return Ordering::Equal;
}

std::vector<Coalition> all_proper_coalitions(int n) {
    if (n < 1 || n > 25)
        throw ScaleRefusal("full coalition enumeration capped at 25 players");
    std::vector<Coalition> out;
    const std::uint64_t grand = (std::uint64_t{1} << n) - 1;
    out.reserve(grand - 1);
    for (std::uint64_t bits = 1; bits < grand; ++bits)
        out.push_back({bits, n});
    return out;
}

}  // namespace bmg
