#include "bmg/bmatching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bmg {

Rational Matching::weight(const GameGraph& g) const {
    Rational w = 0;
    for (size_t i = 0; i < mult.size(); ++i)
        if (mult[i] > 0) w += g.edges[i].w * mult[i];
    return w;
}

namespace {

struct InducedEdge {
    int index;  // position in g.edges
    int u, v;
    Rational w;
    int max_mult;
};

// Usable edges of G[S]: both endpoints in S and positive weight. Edges of
// non-positive weight never appear in a maximum b-matching since the empty
// matching is feasible and optima are taken lexicographically smallest.
std::vector<InducedEdge> induced_edges(const GameGraph& g, Coalition s) {
    if (s.player_count != g.num_vertices())
        throw PreconditionError("coalition index space does not match the graph");
    std::vector<InducedEdge> out;
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const auto& e = g.edges[i];
        if (!s.contains(e.u) || !s.contains(e.v) || e.w <= 0) continue;
        int cap = g.simple ? 1 : std::min(g.vertices[e.u].b, g.vertices[e.v].b);
        if (!g.simple && e.max_mult)
            cap = std::min(cap, *e.max_mult);
        if (cap <= 0) continue;
        out.push_back({i, e.u, e.v, e.w, cap});
    }
    return out;
}

void check_cap(const std::vector<InducedEdge>& es, int edge_cap) {
    if (static_cast<int>(es.size()) > edge_cap)
        throw ScaleRefusal("induced subgraph has " + std::to_string(es.size()) +
                           " edges, above the exhaustive-search cap of " +
                           std::to_string(edge_cap));
}

std::vector<Rational> suffix_bounds(const std::vector<InducedEdge>& es) {
    std::vector<Rational> bound(es.size() + 1, Rational(0));
    for (int k = static_cast<int>(es.size()) - 1; k >= 0; --k)
        bound[k] = bound[k + 1] + es[k].w * es[k].max_mult;
    return bound;
}

// Pass 1: optimal value. Multiplicities tried high to low so that a good
// incumbent is found early for the bound pruning.
Rational best_value(const GameGraph& g, const std::vector<InducedEdge>& es) {
    auto bound = suffix_bounds(es);
    std::vector<int> slack(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        slack[v] = g.vertices[v].b;
    Rational best = 0;
    std::function<void(size_t, Rational)> go = [&](size_t k, Rational cur) {
        if (cur > best) best = cur;
        if (k == es.size() || cur + bound[k] <= best) return;
        const auto& e = es[k];
        int top = std::min({e.max_mult, slack[e.u], slack[e.v]});
        for (int m = top; m >= 0; --m) {
            slack[e.u] -= m;
            slack[e.v] -= m;
            go(k + 1, cur + e.w * m);
            slack[e.u] += m;
            slack[e.v] += m;
        }
    };
    go(0, Rational(0));
    return best;
}

}  // namespace

Rational value(const GameGraph& g, Coalition s, int edge_cap) {
    auto es = induced_edges(g, s);
    check_cap(es, edge_cap);
    return best_value(g, es);
}

Matching max_matching(const GameGraph& g, Coalition s, int edge_cap) {
    auto es = induced_edges(g, s);
    check_cap(es, edge_cap);
    Rational opt = best_value(g, es);
    auto bound = suffix_bounds(es);
    std::vector<int> slack(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        slack[v] = g.vertices[v].b;

    // Pass 2: lexicographic DFS (multiplicities low to high); the first leaf
    // surviving the strict bound prune attains the optimum and is the
    // lexicographically smallest such vector.
    Matching m;
    m.mult.assign(g.edges.size(), 0);
    std::vector<int> chosen(es.size(), 0);
    std::function<bool(size_t, Rational)> go = [&](size_t k, Rational cur) -> bool {
        if (cur + bound[k] < opt) return false;
        if (k == es.size()) return true;
        const auto& e = es[k];
        int top = std::min({e.max_mult, slack[e.u], slack[e.v]});
        for (int mm = 0; mm <= top; ++mm) {
            slack[e.u] -= mm;
            slack[e.v] -= mm;
            if (go(k + 1, cur + e.w * mm)) {
                chosen[k] = mm;
                return true;
            }
            slack[e.u] += mm;
            slack[e.v] += mm;
        }
        return false;
    };
    bool found = go(0, Rational(0));
    if (!found)
        throw std::logic_error("witness search failed to reach its own optimum");
    for (size_t k = 0; k < es.size(); ++k)
        m.mult[es[k].index] = chosen[k];
    return m;
}

Rational nonsimple2_value_fast(const GameGraph& g, Coalition s, int edge_cap) {
    if (g.simple)
        throw PreconditionError("fast path applies to non-simple games only");
    if (!g.sides_consistent())
        throw PreconditionError("fast path requires a consistently labelled bipartite graph");
    for (const auto& v : g.vertices)
        if (v.b != 2)
            throw PreconditionError("fast path requires b = 2 everywhere, violated at " + v.name);
    GameGraph ones = g;
    ones.simple = true;
    for (auto& v : ones.vertices)
        v.b = 1;
    return 2 * value(ones, s, edge_cap);
}

std::vector<Coalition> matching_components(const GameGraph& g, Coalition s, const Matching& m) {
    if (m.mult.size() != g.edges.size())
        throw PreconditionError("matching does not match the graph's edge list");
    std::vector<int> used(g.num_vertices(), 0);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (m.mult[i] < 0)
            throw PreconditionError("negative edge multiplicity");
        if (m.mult[i] == 0) continue;
        const auto& e = g.edges[i];
        if (!s.contains(e.u) || !s.contains(e.v))
            throw PreconditionError("matching uses an edge outside the coalition");
        used[e.u] += m.mult[i];
        used[e.v] += m.mult[i];
        if (g.simple && m.mult[i] > 1)
            throw PreconditionError("simple game cannot repeat an edge");
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (used[v] > g.vertices[v].b)
            throw PreconditionError("matching violates the capacity of " + g.vertices[v].name);

    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (size_t i = 0; i < g.edges.size(); ++i)
        if (m.mult[i] > 0)
            parent[find(g.edges[i].u)] = find(g.edges[i].v);

    std::vector<Coalition> comps;
    for (int root = 0; root < g.num_vertices(); ++root) {
        if (used[root] == 0 || find(root) != root) continue;
        Coalition c = Coalition::empty(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v)
            if (used[v] > 0 && find(v) == root) c = c.with(v);
        comps.push_back(c);
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool all_max_matchings_connected(const GameGraph& g, Coalition s, long cap) {
    auto es = induced_edges(g, s);
    check_cap(es, kDefaultEdgeCap);
    Rational opt = best_value(g, es);
    if (opt == 0)
        return s.size() <= 1;  // the empty maximum matching spans nothing

    auto bound = suffix_bounds(es);
    std::vector<int> slack(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        slack[v] = g.vertices[v].b;
    long nodes = 0;
    std::vector<int> chosen(es.size(), 0);
    bool all_connected = true;

    std::function<void(size_t, Rational)> go = [&](size_t k, Rational cur) {
        if (!all_connected) return;
        if (++nodes > cap)
            throw ScaleRefusal("maximum-matching enumeration exceeded its node cap");
        if (cur + bound[k] < opt) return;
        if (k == es.size()) {
            Matching m;
            m.mult.assign(g.edges.size(), 0);
            for (size_t i = 0; i < es.size(); ++i)
                m.mult[es[i].index] = chosen[i];
            auto comps = matching_components(g, s, m);
            if (comps.size() != 1 || comps[0] != s)
                all_connected = false;
            return;
        }
        const auto& e = es[k];
        int top = std::min({e.max_mult, slack[e.u], slack[e.v]});
        for (int mm = 0; mm <= top; ++mm) {
            chosen[k] = mm;
            slack[e.u] -= mm;
            slack[e.v] -= mm;
            go(k + 1, cur + e.w * mm);
            slack[e.u] += mm;
            slack[e.v] += mm;
        }
        chosen[k] = 0;
    };
    go(0, Rational(0));
    return all_connected;
}

}  // namespace bmg
