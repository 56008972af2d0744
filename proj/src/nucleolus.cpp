#include "bmg/nucleolus.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace bmg {

namespace {

std::vector<Coalition> dedup(std::vector<Coalition> cs) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    for (const auto& c : cs)
        if (c.is_empty() || c.is_grand())
            throw PreconditionError("coalition families exclude the empty and grand coalitions");
    return cs;
}

void subsets_up_to(int n, int k_max, std::vector<Coalition>& out) {
    // Enumerates coalitions of size <= k_max directly, without a 2^n sweep.
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (!pick.empty() && static_cast<int>(pick.size()) < n) {
            Coalition c = Coalition::empty(n);
            for (int i : pick)
                c = c.with(i);
            out.push_back(c);
        }
        if (static_cast<int>(pick.size()) == k_max) return;
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

CoalitionFamily CoalitionFamily::full(int n) {
    return {all_proper_coalitions(n), FamilyKind::Full, -1};
}

CoalitionFamily CoalitionFamily::size_bounded(int n, int k_max) {
    std::vector<Coalition> cs;
    subsets_up_to(n, k_max, cs);
    return {dedup(std::move(cs)), FamilyKind::SizeBounded, k_max};
}

CoalitionFamily CoalitionFamily::custom(std::vector<Coalition> coalitions) {
    return {dedup(std::move(coalitions)), FamilyKind::Custom, -1};
}

namespace {

LinExpr indicator(Coalition s) {
    LinExpr e;
    for (int i : s.members())
        e[i] = 1;
    return e;
}

LpModel build_round_model(const Game& game,
                          const std::vector<std::pair<Coalition, Rational>>& fixed,
                          const std::vector<Coalition>& unfixed) {
    const int n = game.num_players();
    LpModel model;
    for (int i = 0; i < n; ++i)
        model.add_variable("x_" + game.player_name(i), /*is_free=*/true);
    int eps = model.add_variable("eps", /*is_free=*/true);
    model.set_objective(Sense::Maximize, LinExpr{{eps, Rational(1)}});
    model.add_constraint(indicator(Coalition::grand(n)), Rel::Eq, game.grand_value());
    for (const auto& [s, level] : fixed)
        model.add_constraint(indicator(s), Rel::Eq, game.value(s) + level);
    for (const auto& s : unfixed) {
        LinExpr e = indicator(s);
        e[eps] = -1;
        model.add_constraint(std::move(e), Rel::Ge, game.value(s));
    }
    for (int i = 0; i < n; ++i)
        model.add_constraint(LinExpr{{i, Rational(1)}}, Rel::Ge,
                             game.value(Coalition::singleton(i, n)));
    return model;
}

Allocation point_of(const LpOutcome& out, int n) {
    Allocation a;
    a.values.assign(out.point.begin(), out.point.begin() + n);
    return a;
}

}  // namespace

SchemeTrace kopelowitz(const Game& game, const CoalitionFamily& family) {
    if (family.coalitions.empty())
        throw PreconditionError("coalition family is empty");
    const int n = game.num_players();

    std::vector<std::pair<Coalition, Rational>> fixed;
    std::vector<Coalition> unfixed = family.coalitions;
    std::vector<LinExpr> equalities{indicator(Coalition::grand(n))};
    SchemeTrace trace;

    for (;;) {
        if (unfixed.empty()) {
            int residual = n - affine_rank(equalities, n);
            throw std::runtime_error(
                "coalition family exhausted before pinning a unique point; residual dimension " +
                std::to_string(residual));
        }
        LpModel model = build_round_model(game, fixed, unfixed);
        LpOutcome out = solve(model);
        if (out.status == LpStatus::Infeasible)
            throw std::runtime_error("imputation polytope is empty");
        if (out.status == LpStatus::Unbounded)
            throw std::runtime_error("scheme LP unbounded; value oracle inconsistent");
        const Rational eps_l = out.value;
        Allocation point = point_of(out, n);

        // Only coalitions tight at the found optimum can be tight at every
        // optimum; certify each survivor with a face probe and use every
        // probe point to discard candidates wholesale.
        std::deque<Coalition> candidates;
        for (const auto& s : unfixed)
            if (point.sum(s) == game.value(s) + eps_l)
                candidates.push_back(s);
        std::vector<Coalition> newly_fixed;
        while (!candidates.empty()) {
            Coalition s = candidates.front();
            Rational bound = game.value(s) + eps_l;
            LpOutcome face = solve_over_optimal_face(model, indicator(s));
            if (face.value == bound) {
                newly_fixed.push_back(s);
                candidates.pop_front();
                continue;
            }
            Allocation face_point = point_of(face, n);
            std::erase_if(candidates, [&](const Coalition& t) {
                return face_point.sum(t) > game.value(t) + eps_l;
            });
        }
        if (newly_fixed.empty())
            throw std::logic_error("scheme round fixed no coalition");
        if (!trace.rounds.empty() && eps_l < trace.rounds.back().epsilon)
            throw std::logic_error("scheme epsilon decreased across rounds");

        std::sort(newly_fixed.begin(), newly_fixed.end());
        trace.rounds.push_back({eps_l, newly_fixed, point});
        for (const auto& s : newly_fixed) {
            fixed.emplace_back(s, eps_l);
            equalities.push_back(indicator(s));
            std::erase(unfixed, s);
        }
        if (affine_rank(equalities, n) == n) {
            trace.final = point;
            return trace;
        }
    }
}

SchemeTrace nucleolus_bruteforce_trace(const Game& game) {
    if (game.num_players() > 16)
        throw ScaleRefusal("brute-force nucleolus capped at 16 players");
    return kopelowitz(game, CoalitionFamily::full(game.num_players()));
}

Allocation nucleolus_bruteforce(const Game& game) {
    return nucleolus_bruteforce_trace(game).final;
}

SchemeTrace nucleolus_charset_i_trace(const GameGraph& g, int k, int edge_cap) {
    if (!g.simple)
        throw PreconditionError("charset-i applies to simple games");
    if (!g.sides_consistent() || !g.is_bipartite())
        throw PreconditionError("charset-i requires a consistently labelled bipartite graph");
    if (k < 0)
        throw PreconditionError("k must be nonnegative");
    int b2_on_b = 0;
    for (const auto& v : g.vertices) {
        if (v.b > 2)
            throw PreconditionError("charset-i requires b <= 2, violated at " + v.name);
        if (v.side == Side::A && v.b != 2)
            throw PreconditionError("charset-i requires b = 2 on side A, violated at " + v.name);
        if (v.side == Side::B && v.b == 2)
            ++b2_on_b;
    }
    if (b2_on_b > k)
        throw PreconditionError("side B has " + std::to_string(b2_on_b) +
                                " vertices with b = 2, more than k = " + std::to_string(k));
    Game game = Game::from_graph(g, edge_cap);
    CoalitionFamily fam = CoalitionFamily::size_bounded(g.num_vertices(), 2 * k + 3);
    fam.kind = FamilyKind::CharsetI;
    fam.k = k;
    return kopelowitz(game, fam);
}

Allocation nucleolus_charset_i(const GameGraph& g, int k, int edge_cap) {
    return nucleolus_charset_i_trace(g, k, edge_cap).final;
}

SchemeTrace nucleolus_charset_ii_trace(const GameGraph& g, int edge_cap) {
    if (g.simple)
        throw PreconditionError("charset-ii applies to non-simple games");
    if (!g.sides_consistent() || !g.is_bipartite())
        throw PreconditionError("charset-ii requires a consistently labelled bipartite graph");
    for (const auto& v : g.vertices)
        if (v.b != 2)
            throw PreconditionError("charset-ii requires b = 2 everywhere, violated at " + v.name);
    std::vector<std::string> names;
    for (const auto& v : g.vertices)
        names.push_back(v.name);
    GameGraph graph = g;
    Game game(std::move(names), [graph, edge_cap](Coalition s) {
        return nonsimple2_value_fast(graph, s, edge_cap);
    });
    CoalitionFamily fam = CoalitionFamily::size_bounded(g.num_vertices(), 2);
    fam.kind = FamilyKind::CharsetII;
    return kopelowitz(game, fam);
}

Allocation nucleolus_charset_ii(const GameGraph& g, int edge_cap) {
    return nucleolus_charset_ii_trace(g, edge_cap).final;
}

bool is_nucleolus(const Game& game, const Allocation& candidate) {
    if (static_cast<int>(candidate.values.size()) != game.num_players())
        throw PreconditionError("candidate size does not match the game");
    Allocation z = nucleolus_bruteforce(game);
    return z.values == candidate.values;
}

DualCoreResult dual_core_allocation(const GameGraph& g) {
    if (g.simple)
        throw PreconditionError("dual core allocation applies to non-simple games");
    for (const auto& v : g.vertices)
        if (v.b != 2)
            throw PreconditionError("dual core allocation requires b = 2 everywhere");
    LpModel model;
    LinExpr obj;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int idx = model.add_variable(g.vertices[v].name);
        obj[idx] = 2;
    }
    model.set_objective(Sense::Minimize, obj);
    for (const auto& e : g.edges)
        model.add_constraint(LinExpr{{e.u, Rational(1)}, {e.v, Rational(1)}}, Rel::Ge, e.w);
    LpOutcome out = solve(model);
    if (out.status != LpStatus::Optimal)
        throw std::logic_error("edge-cover dual should always be solvable");
    DualCoreResult res;
    res.raw.values = out.point;
    res.allocation.values.reserve(out.point.size());
    for (const auto& v : out.point)
        res.allocation.values.push_back(2 * v);
    res.dual_value = out.value;
    return res;
}

std::string format_trace(const Game& game, const SchemeTrace& trace) {
    std::ostringstream os;
    for (size_t r = 0; r < trace.rounds.size(); ++r) {
        const auto& round = trace.rounds[r];
        os << "round " << (r + 1) << " eps " << to_string(round.epsilon) << " fixed";
        for (const auto& s : round.fixed) {
            os << " {";
            bool first = true;
            for (int i : s.members()) {
                if (!first) os << ',';
                os << game.player_name(i);
                first = false;
            }
            os << '}';
        }
        os << '\n';
    }
    os << "final";
    for (int i = 0; i < game.num_players(); ++i)
        os << ' ' << game.player_name(i) << '=' << to_string(trace.final.values[i]);
    os << '\n';
    return os.str();
}

}  // namespace bmg
