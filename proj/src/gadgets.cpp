#include "bmg/gadgets.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace bmg {

namespace {

// Assigns A/B labels from a fresh 2-colouring. Returns false on odd cycles.
bool colour_sides(GameGraph& g) {
    std::vector<int> colour(g.num_vertices(), -1);
    std::vector<std::vector<int>> adj(g.num_vertices());
    for (const auto& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        g.vertices[v].side = colour[v] == 0 ? Side::A : Side::B;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// X3C instances

int X3CInstance::element_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(elements.size()); ++i)
        if (elements[i] == name) return i;
    return -1;
}

bool X3CInstance::restricted() const {
    std::vector<int> count(elements.size(), 0);
    for (const auto& s : subsets)
        for (int e : s)
            ++count[e];
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 3; });
}

void X3CInstance::validate() const {
    if (k <= 0)
        throw PreconditionError("instance needs k >= 1");
    if (static_cast<int>(elements.size()) != 3 * k)
        throw PreconditionError("ground set must have exactly 3k elements");
    for (const auto& s : subsets) {
        for (int e : s)
            if (e < 0 || e >= static_cast<int>(elements.size()))
                throw PreconditionError("subset references an unknown element");
        if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2])
            throw PreconditionError("subsets must have three distinct elements");
    }
}

X3CInstance parse_x3c(std::istream& in) {
    X3CInstance inst;
    std::string line;
    int lineno = 0;
    bool have_k = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream iss(line.substr(0, line.find('#')));
        std::vector<std::string> toks;
        std::string t;
        while (iss >> t)
            toks.push_back(t);
        if (toks.empty()) continue;
        if (!have_k) {
            if (toks.size() != 1)
                throw ParseError(lineno, "expected the `k` header line");
            inst.k = std::stoi(toks[0]);
            have_k = true;
            continue;
        }
        if (toks.size() != 3)
            throw ParseError(lineno, "expected three element names");
        std::array<int, 3> subset{};
        for (int j = 0; j < 3; ++j) {
            int idx = inst.element_index(toks[j]);
            if (idx < 0) {
                inst.elements.push_back(toks[j]);
                idx = static_cast<int>(inst.elements.size()) - 1;
            }
            subset[j] = idx;
        }
        std::sort(subset.begin(), subset.end());
        inst.subsets.push_back(subset);
    }
    if (!have_k)
        throw ParseError(lineno, "missing `k` header line");
    inst.validate();
    return inst;
}

X3CInstance parse_x3c_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file: " + path);
    return parse_x3c(in);
}

void write_x3c(std::ostream& out, const X3CInstance& inst) {
    out << inst.k << '\n';
    for (const auto& s : inst.subsets)
        out << inst.elements[s[0]] << ' ' << inst.elements[s[1]] << ' ' << inst.elements[s[2]]
            << '\n';
}

std::optional<std::vector<int>> x3c_bruteforce(const X3CInstance& inst, int cap) {
    inst.validate();
    if (static_cast<int>(inst.subsets.size()) > cap)
        throw ScaleRefusal("exact-cover search capped at " + std::to_string(cap) + " subsets");
    const int n = static_cast<int>(inst.elements.size());
    std::vector<bool> covered(n, false);
    std::vector<int> chosen;
    auto rec = [&](auto&& self) -> bool {
        int first = -1;
        for (int i = 0; i < n; ++i)
            if (!covered[i]) { first = i; break; }
        if (first < 0) return true;
        for (int j = 0; j < static_cast<int>(inst.subsets.size()); ++j) {
            const auto& s = inst.subsets[j];
            if (std::find(s.begin(), s.end(), first) == s.end()) continue;
            if (covered[s[0]] || covered[s[1]] || covered[s[2]]) continue;
            for (int e : s) covered[e] = true;
            chosen.push_back(j);
            if (self(self)) return true;
            chosen.pop_back();
            for (int e : s) covered[e] = false;
        }
        return false;
    };
    if (!rec(rec))
        return std::nullopt;
    return chosen;
}

// ---------------------------------------------------------------------------
// Nucleolus gadget

Coalition NucleolusGadget::complete_gadget(int which) const {
    const Tail& t = tails.at(which);
    return Coalition::of({originals.at(which), t.v, t.w, t.x, t.y, t.z}, graph.num_vertices());
}

Coalition NucleolusGadget::gadget_vertices(int which) const {
    const Tail& t = tails.at(which);
    return Coalition::of({t.v, t.w, t.x, t.y, t.z}, graph.num_vertices());
}

Coalition NucleolusGadget::original_coalition() const {
    Coalition c = Coalition::empty(graph.num_vertices());
    for (int u : originals)
        c = c.with(u);
    return c;
}

std::vector<std::pair<std::string, std::string>> NucleolusGadget::roles() const {
    std::vector<std::pair<std::string, std::string>> out;
    auto name = [&](int v) { return graph.vertices[v].name; };
    for (size_t i = 0; i < originals.size(); ++i) {
        out.emplace_back(name(originals[i]), "original");
        out.emplace_back(name(tails[i].v), "v");
        out.emplace_back(name(tails[i].w), "w");
        out.emplace_back(name(tails[i].x), "x");
        out.emplace_back(name(tails[i].y), "y");
        out.emplace_back(name(tails[i].z), "z");
    }
    return out;
}

NucleolusGadget build_nucleolus_gadget(const GameGraph& g) {
    if (g.edges.empty())
        throw PreconditionError("gadget construction needs a nonempty edge set");
    GameGraph in = g;
    if (!in.sides_consistent() && !colour_sides(in))
        throw PreconditionError("gadget construction requires a bipartite input");

    NucleolusGadget out;
    out.graph.simple = true;
    for (const auto& v : in.vertices)
        out.graph.add_vertex(v.name, v.side, 3);
    for (const auto& e : in.edges)
        out.graph.add_edge(e.u, e.v, 1);
    for (int u = 0; u < in.num_vertices(); ++u) {
        const std::string& base = in.vertices[u].name;
        Side same = in.vertices[u].side;
        Side other = same == Side::A ? Side::B : Side::A;
        NucleolusGadget::Tail t;
        t.v = out.graph.add_vertex("v@" + base, same, 3);
        t.w = out.graph.add_vertex("w@" + base, same, 3);
        t.x = out.graph.add_vertex("x@" + base, other, 3);
        t.y = out.graph.add_vertex("y@" + base, other, 3);
        t.z = out.graph.add_vertex("z@" + base, other, 3);
        for (int left : {u, t.v, t.w})
            for (int right : {t.x, t.y, t.z})
                out.graph.add_edge(left, right, 1);
        out.originals.push_back(u);
        out.tails.push_back(t);
    }
    return out;
}

Allocation make_xstar(const NucleolusGadget& g) {
    Allocation a;
    a.values.assign(g.graph.num_vertices(), Rational(3, 2));
    return a;
}

Allocation make_xdelta(const NucleolusGadget& g, const Rational& delta) {
    if (delta <= 0 || delta >= Rational(1, 2))
        throw PreconditionError("delta must satisfy 0 < delta < 1/2");
    Allocation a;
    a.values.assign(g.graph.num_vertices(), Rational(3, 2) - delta / 5);
    for (int u : g.originals)
        a.values[u] = Rational(3, 2) + delta;
    return a;
}

namespace {

void assign_shape(Table1Row& r, const std::pair<int, int>& key) {
    r.left = key.first;
    r.right = key.second;
}
void assign_shape(Table2Row& r, const std::tuple<int, int, int>& key) {
    r.u = std::get<0>(key);
    r.vw = std::get<1>(key);
    r.xyz = std::get<2>(key);
}

template <typename Row, typename Shape>
std::vector<Row> gadget_table(const NucleolusGadget& g, const Allocation& x, Shape shape) {
    const int n = g.graph.num_vertices();
    Coalition vu = g.complete_gadget(0);
    auto members = vu.members();
    std::map<decltype(shape(Coalition::empty(n))), Row> rows;
    for (unsigned mask = 1; mask + 1 < (1u << members.size()); ++mask) {
        Coalition s = Coalition::empty(n);
        for (size_t i = 0; i < members.size(); ++i)
            if ((mask >> i) & 1) s = s.with(members[i]);
        Rational nu = value(g.graph, s);
        Rational exc = x.sum(s) - nu;
        auto key = shape(s);
        auto it = rows.find(key);
        if (it == rows.end()) {
            Row row{};
            assign_shape(row, key);
            row.nu = nu;
            row.excess = exc;
            row.class_size = 1;
            rows.emplace(key, row);
        } else {
            if (it->second.nu != nu || it->second.excess != exc)
                throw std::logic_error("gadget shape class is not constant; construction bug");
            ++it->second.class_size;
        }
    }
    std::vector<Row> out;
    for (auto& [key, row] : rows)
        out.push_back(row);
    return out;
}

}  // namespace

std::vector<Table1Row> excess_table1(const NucleolusGadget& g) {
    int u = g.originals.at(0);
    const auto& t = g.tails.at(0);
    Allocation xstar = make_xstar(g);
    auto shape = [&](Coalition s) {
        int left = (s.contains(u) ? 1 : 0) + (s.contains(t.v) ? 1 : 0) + (s.contains(t.w) ? 1 : 0);
        int right = (s.contains(t.x) ? 1 : 0) + (s.contains(t.y) ? 1 : 0) + (s.contains(t.z) ? 1 : 0);
        return std::pair<int, int>{left, right};
    };
    return gadget_table<Table1Row>(g, xstar, shape);
}

std::vector<Table2Row> excess_table2(const NucleolusGadget& g, const Rational& delta) {
    int u = g.originals.at(0);
    const auto& t = g.tails.at(0);
    Allocation xdelta = make_xdelta(g, delta);
    auto shape = [&](Coalition s) {
        int cu = s.contains(u) ? 1 : 0;
        int vw = (s.contains(t.v) ? 1 : 0) + (s.contains(t.w) ? 1 : 0);
        int xyz = (s.contains(t.x) ? 1 : 0) + (s.contains(t.y) ? 1 : 0) + (s.contains(t.z) ? 1 : 0);
        return std::tuple<int, int, int>{cu, vw, xyz};
    };
    return gadget_table<Table2Row>(g, xdelta, shape);
}

// ---------------------------------------------------------------------------
// Reduction graph

std::vector<int> X3cGraph::b_vertices(int copy) const {
    std::vector<int> out = copies.at(copy).b1;
    out.insert(out.end(), copies[copy].b2.begin(), copies[copy].b2.end());
    out.insert(out.end(), copies[copy].b3.begin(), copies[copy].b3.end());
    return out;
}

std::vector<std::pair<std::string, std::string>> X3cGraph::roles() const {
    std::vector<std::pair<std::string, std::string>> out;
    auto name = [&](int v) { return graph.vertices[v].name; };
    for (int c = 0; c < 2; ++c) {
        for (int v : copies[c].b1) out.emplace_back(name(v), "B1");
        for (int v : copies[c].b2) out.emplace_back(name(v), "B2");
        for (int v : copies[c].b3) out.emplace_back(name(v), "B3");
        for (int v : copies[c].sets) out.emplace_back(name(v), "set");
        for (const auto& ores : copies[c].ores)
            for (const auto& o : ores) {
                out.emplace_back(name(o.u), "ore-u");
                out.emplace_back(name(o.w), "ore-w");
                out.emplace_back(name(o.cu), "ore-cu");
                out.emplace_back(name(o.cw), "ore-cw");
            }
    }
    return out;
}

X3cGraph build_x3c_graph(const X3CInstance& inst) {
    inst.validate();
    if (!inst.restricted())
        throw PreconditionError(
            "reduction requires the restricted instance (every element in exactly three subsets)");
    X3cGraph out;
    out.instance = inst;
    const int k = inst.k;
    const int n = 3 * k;
    const int t = static_cast<int>(inst.subsets.size());

    // containing[i] = the three subsets holding element i, ascending.
    std::vector<std::vector<int>> containing(n);
    for (int j = 0; j < t; ++j)
        for (int e : inst.subsets[j])
            containing[e].push_back(j);

    // G0: element-subset incidence.
    for (int i = 0; i < n; ++i)
        out.g0.add_vertex(inst.elements[i]);
    for (int j = 0; j < t; ++j)
        out.g0.add_vertex("S" + std::to_string(j + 1));
    for (int j = 0; j < t; ++j)
        for (int e : inst.subsets[j])
            out.g0.add_edge(e, n + j, 1);
    colour_sides(out.g0);

    // G1: G0 plus the 7k-vertex backbone.
    out.g1 = out.g0;
    std::vector<int> b1(7 * k);
    for (int i = 1; i <= 7 * k; ++i)
        b1[i - 1] = out.g1.add_vertex("b" + std::to_string(i));
    auto bb = [&](int i) { return b1[i - 1]; };  // 1-based
    for (int i = 1; i <= n; ++i) {
        out.g1.add_edge(bb(i), i - 1, 1);  // b_i -- a_i
        out.g1.add_edge(bb(i), bb(3 * k + i), 1);
        out.g1.add_edge(bb(i), i > 1 ? bb(3 * k + i - 1) : bb(6 * k), 1);
    }
    for (int j = 1; j <= k; ++j)
        for (int d = 0; d < 3; ++d)
            out.g1.add_edge(bb(6 * k + j), bb(3 * k + 3 * j - 2 + d), 1);
    colour_sides(out.g1);

    // One substituted copy. `suffix` distinguishes the mirror.
    auto build_copy = [&](GameGraph& g, X3cGraph::Copy& copy, const std::string& suffix) {
        copy = {};
        for (int i = 1; i <= 7 * k; ++i) {
            int v = g.add_vertex("b" + std::to_string(i) + suffix);
            if (i <= 3 * k)
                copy.b1.push_back(v);
            else if (i <= 6 * k)
                copy.b2.push_back(v);
            else
                copy.b3.push_back(v);
        }
        for (int j = 0; j < t; ++j)
            copy.sets.push_back(g.add_vertex("S" + std::to_string(j + 1) + suffix));
        auto cb = [&](int i) {  // 1-based over b_1..b_7k
            return i <= 3 * k ? copy.b1[i - 1] : i <= 6 * k ? copy.b2[i - 3 * k - 1]
                                                            : copy.b3[i - 6 * k - 1];
        };
        for (int i = 1; i <= n; ++i) {
            std::array<X3cGraph::Ore, 3> ores{};
            int prev_w = cb(i);  // w_{i,0} = b_i
            for (int j = 1; j <= 3; ++j) {
                std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]" + suffix;
                X3cGraph::Ore o;
                o.u = g.add_vertex("u" + tag);
                o.w = g.add_vertex("w" + tag);
                o.cu = g.add_vertex("cu" + tag);
                o.cw = g.add_vertex("cw" + tag);
                g.add_edge(prev_w, o.u, 1);
                g.add_edge(o.u, o.w, 1);
                g.add_edge(o.w, copy.sets[containing[i - 1][j - 1]], 1);
                g.add_edge(o.u, o.cu, 1);
                g.add_edge(o.w, o.cw, 1);
                g.add_edge(o.cu, o.cw, 1);
                prev_w = o.w;
                ores[j - 1] = o;
            }
            copy.ores.push_back(ores);
        }
        for (int i = 1; i <= n; ++i) {
            g.add_edge(cb(i), cb(3 * k + i), 1);
            g.add_edge(cb(i), i > 1 ? cb(3 * k + i - 1) : cb(6 * k), 1);
        }
        for (int j = 1; j <= k; ++j)
            for (int d = 0; d < 3; ++d)
                g.add_edge(cb(6 * k + j), cb(3 * k + 3 * j - 2 + d), 1);
    };

    X3cGraph::Copy scratch;
    build_copy(out.g2, scratch, "");
    colour_sides(out.g2);

    build_copy(out.graph, out.copies[0], "");
    build_copy(out.graph, out.copies[1], "'");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j) {
            out.graph.add_edge(out.copies[0].ores[i][j].cw, out.copies[1].ores[i][j].cw, 1);
            out.graph.add_edge(out.copies[0].ores[i][j].cu, out.copies[1].ores[i][j].cu, 1);
        }
    if (!colour_sides(out.graph))
        throw std::logic_error("reduction graph is not bipartite; construction bug");
    return out;
}

// ---------------------------------------------------------------------------
// Witnesses and detectors

namespace {

SubgraphWitness witness_from_edges(const GameGraph& g, std::vector<int> edge_idx) {
    SubgraphWitness w;
    w.edges = std::move(edge_idx);
    w.degrees.assign(g.num_vertices(), 0);
    for (int i : w.edges) {
        ++w.degrees[g.edges[i].u];
        ++w.degrees[g.edges[i].v];
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (w.degrees[v] == 2) w.special.push_back(v);
    return w;
}

void mark_trivial(const GameGraph& g, SubgraphWitness& w) {
    if (w.special.size() != 2) return;
    std::vector<bool> in_h(g.edges.size(), false);
    for (int i : w.edges) in_h[i] = true;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (in_h[i]) continue;
        const auto& e = g.edges[i];
        if ((e.u == w.special[0] && e.v == w.special[1]) ||
            (e.u == w.special[1] && e.v == w.special[0])) {
            w.trivial = true;
            return;
        }
    }
}

// Exhaustive search for a nonempty subgraph whose vertex degrees are all 3
// except for exactly `specials_wanted` vertices of degree 2.
std::optional<SubgraphWitness> detect_degree_subgraph(const GameGraph& g, int specials_wanted,
                                                      int cap) {
    const int m = static_cast<int>(g.edges.size());
    if (m > cap)
        throw ScaleRefusal("subgraph detection capped at " + std::to_string(cap) + " edges");
    // last[v]: index of the last edge incident to v; after it, v's degree
    // is final and can be checked.
    std::vector<int> last(g.num_vertices(), -1);
    for (int i = 0; i < m; ++i) {
        last[g.edges[i].u] = i;
        last[g.edges[i].v] = i;
    }
    std::vector<int> deg(g.num_vertices(), 0);
    std::vector<int> chosen;
    int specials = 0;

    auto rec = [&](auto&& self, int k) -> bool {
        if (k == m)
            return !chosen.empty() && specials == specials_wanted;
        const auto& e = g.edges[k];
        for (bool take : {true, false}) {
            if (take && (deg[e.u] >= 3 || deg[e.v] >= 3)) continue;
            if (take) {
                ++deg[e.u];
                ++deg[e.v];
                chosen.push_back(k);
            }
            bool ok = true;
            int fixed = 0;
            for (int v : {e.u, e.v}) {
                if (last[v] != k) continue;
                if (deg[v] == 1) { ok = false; }
                if (deg[v] == 2) {
                    ++specials;
                    ++fixed;
                    if (specials > specials_wanted) ok = false;
                }
            }
            if (ok && self(self, k + 1))
                return true;
            specials -= fixed;
            if (take) {
                --deg[e.u];
                --deg[e.v];
                chosen.pop_back();
            }
        }
        return false;
    };
    if (!rec(rec, 0))
        return std::nullopt;
    SubgraphWitness w = witness_from_edges(g, chosen);
    mark_trivial(g, w);
    return w;
}

}  // namespace

std::optional<SubgraphWitness> detect_cubic(const GameGraph& g, int cap) {
    return detect_degree_subgraph(g, 0, cap);
}

std::optional<SubgraphWitness> detect_2fc(const GameGraph& g, int cap) {
    return detect_degree_subgraph(g, 2, cap);
}

std::optional<int> delta_parameter(const GameGraph& g, int cap) {
    if (detect_cubic(g, cap))
        return 0;
    if (detect_2fc(g, cap))
        return 1;
    return std::nullopt;
}

SubgraphWitness cover_to_cubic(const X3cGraph& g, const std::vector<int>& cover) {
    const auto& inst = g.instance;
    const int n = 3 * inst.k;
    std::vector<int> covered_by(n, -1);
    for (int j : cover) {
        if (j < 0 || j >= static_cast<int>(inst.subsets.size()))
            throw PreconditionError("cover references an unknown subset");
        for (int e : inst.subsets[j]) {
            if (covered_by[e] >= 0)
                throw PreconditionError("not an exact cover: element " + inst.elements[e] +
                                        " covered twice");
            covered_by[e] = j;
        }
    }
    for (int i = 0; i < n; ++i)
        if (covered_by[i] < 0)
            throw PreconditionError("not an exact cover: element " + inst.elements[i] +
                                    " uncovered");

    std::vector<std::vector<int>> containing(n);
    for (int j = 0; j < static_cast<int>(inst.subsets.size()); ++j)
        for (int e : inst.subsets[j])
            containing[e].push_back(j);

    std::vector<bool> in_h(g.graph.num_vertices(), false);
    for (int c = 0; c < 2; ++c) {
        for (int v : g.b_vertices(c))
            in_h[v] = true;
        for (int j : cover)
            in_h[g.copies[c].sets[j]] = true;
        for (int i = 0; i < n; ++i) {
            // Walk the ore up to the covering subset's branch: the unique
            // b_i--S path picks up O_{i,1}..O_{i,j*}.
            int jstar = static_cast<int>(
                std::find(containing[i].begin(), containing[i].end(), covered_by[i]) -
                containing[i].begin());
            for (int j = 0; j <= jstar; ++j) {
                const auto& o = g.copies[c].ores[i][j];
                in_h[o.u] = in_h[o.w] = in_h[o.cu] = in_h[o.cw] = true;
            }
        }
    }
    std::vector<int> edges;
    for (int i = 0; i < static_cast<int>(g.graph.edges.size()); ++i)
        if (in_h[g.graph.edges[i].u] && in_h[g.graph.edges[i].v])
            edges.push_back(i);
    SubgraphWitness w = witness_from_edges(g.graph, edges);
    for (int v = 0; v < g.graph.num_vertices(); ++v)
        if (in_h[v] != (w.degrees[v] > 0) || (in_h[v] && w.degrees[v] != 3))
            throw std::logic_error("cover witness failed the degree-3 check at " +
                                   g.graph.vertices[v].name + "; construction bug");
    return w;
}

// ---------------------------------------------------------------------------
// Structural reports

namespace {

bool induced_connected(const GameGraph& g, const std::vector<int>& verts, int skip) {
    std::vector<int> id(g.num_vertices(), -1);
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i] != skip) id[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(verts.size());
    for (const auto& e : g.edges)
        if (id[e.u] >= 0 && id[e.v] >= 0) {
            adj[id[e.u]].push_back(id[e.v]);
            adj[id[e.v]].push_back(id[e.u]);
        }
    int start = -1, want = 0;
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i] != skip) {
            if (start < 0) start = static_cast<int>(i);
            ++want;
        }
    if (want == 0) return true;
    std::vector<bool> seen(verts.size(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    int seen_count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++seen_count;
                stack.push_back(w);
            }
    }
    return seen_count == want;
}

bool two_vertex_connected(const GameGraph& g, const std::vector<int>& verts) {
    if (verts.size() < 3) return false;
    if (!induced_connected(g, verts, -1)) return false;
    for (int v : verts)
        if (!induced_connected(g, verts, v)) return false;
    return true;
}

}  // namespace

std::string StructuralReport::to_string() const {
    std::ostringstream os;
    os << "bipartite " << (bipartite ? "yes" : "no") << '\n';
    os << "max-degree " << max_degree << '\n';
    for (const auto& [role, count] : role_counts)
        os << "count " << role << ' ' << count << '\n';
    for (const auto& f : failures)
        os << "FAIL " << f << '\n';
    os << (failures.empty() ? "structure ok" : "structure broken") << '\n';
    return os.str();
}

StructuralReport structural_check(const NucleolusGadget& g) {
    StructuralReport rep;
    rep.bipartite = g.graph.is_bipartite();
    rep.max_degree = g.graph.max_degree();
    rep.role_counts = {{"original", static_cast<int>(g.originals.size())},
                       {"gadget", 5 * static_cast<int>(g.originals.size())}};
    if (!rep.bipartite)
        rep.failures.push_back("graph is not bipartite");
    if (g.graph.num_vertices() != 6 * static_cast<int>(g.originals.size()))
        rep.failures.push_back("vertex count is not 6x the original count");

    // Each complete gadget must induce exactly a K_{3,3}.
    for (size_t i = 0; i < g.originals.size(); ++i) {
        const auto& t = g.tails[i];
        int u = g.originals[i];
        std::vector<int> left{u, t.v, t.w}, right{t.x, t.y, t.z};
        int cross = 0, stray = 0;
        for (const auto& e : g.graph.edges) {
            bool eu_left = std::count(left.begin(), left.end(), e.u);
            bool ev_left = std::count(left.begin(), left.end(), e.v);
            bool eu_right = std::count(right.begin(), right.end(), e.u);
            bool ev_right = std::count(right.begin(), right.end(), e.v);
            if ((eu_left && ev_right) || (eu_right && ev_left))
                ++cross;
            else if (eu_right || ev_right || (e.u != u && eu_left) || (e.v != u && ev_left))
                ++stray;
        }
        if (cross != 9 || stray != 0)
            rep.failures.push_back("gadget of " + g.graph.vertices[u].name +
                                   " does not induce a clean K_{3,3}");
    }
    return rep;
}

StructuralReport structural_check(const X3cGraph& g) {
    StructuralReport rep;
    rep.bipartite = g.graph.is_bipartite();
    rep.max_degree = g.graph.max_degree();
    const int k = g.instance.k;
    rep.role_counts = {{"B", 14 * k},
                       {"set", 2 * static_cast<int>(g.instance.subsets.size())},
                       {"ore", 2 * 36 * k}};
    if (!rep.bipartite)
        rep.failures.push_back("graph is not bipartite");
    if (rep.max_degree > 4)
        rep.failures.push_back("max degree exceeds 4");
    for (int c = 0; c < 2; ++c) {
        if (!two_vertex_connected(g.graph, g.b_vertices(c)))
            rep.failures.push_back("G[B] copy " + std::to_string(c) +
                                   " is not 2-vertex-connected");
        for (size_t i = 0; i < g.copies[c].ores.size(); ++i)
            for (int j = 0; j < 3; ++j) {
                const auto& o = g.copies[c].ores[i][j];
                std::vector<int> verts{o.u, o.w, o.cu, o.cw};
                if (!two_vertex_connected(g.graph, verts))
                    rep.failures.push_back("ore (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ") copy " + std::to_string(c) +
                                           " is not 2-vertex-connected");
            }
    }
    return rep;
}

}  // namespace bmg
