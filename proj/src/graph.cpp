#include "bmg/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bmg {

int GameGraph::add_vertex(std::string name, Side side, int b) {
    if (b <= 0)
        throw PreconditionError("vertex capacity must be positive: " + name);
    if (index_of(name) >= 0)
        throw PreconditionError("duplicate vertex name: " + name);
    vertices.push_back({std::move(name), side, b});
    return num_vertices() - 1;
}

void GameGraph::add_edge(int u, int v, Rational w, std::optional<int> max_mult) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw PreconditionError("edge endpoint out of range");
    if (u == v)
        throw PreconditionError("loop edge at " + vertices[u].name);
    edges.push_back({u, v, std::move(w), max_mult});
}

void GameGraph::add_edge(const std::string& u, const std::string& v, Rational w) {
    add_edge(require(u), require(v), std::move(w));
}

int GameGraph::index_of(const std::string& name) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i].name == name) return i;
    return -1;
}

int GameGraph::require(const std::string& name) const {
    int i = index_of(name);
    if (i < 0)
        throw PreconditionError("unknown player: " + name);
    return i;
}

int GameGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges)
        if (e.u == v || e.v == v) ++d;
    return d;
}

int GameGraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < num_vertices(); ++v)
        best = std::max(best, degree(v));
    return best;
}

bool GameGraph::is_bipartite() const {
    std::vector<int> colour(num_vertices(), -1);
    std::vector<std::vector<int>> adj(num_vertices());
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (int s = 0; s < num_vertices(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : adj[v]) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    q.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool GameGraph::sides_consistent() const {
    for (const auto& v : vertices)
        if (v.side == Side::None) return false;
    for (const auto& e : edges)
        if (vertices[e.u].side == vertices[e.v].side) return false;
    return true;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string clean = line.substr(0, line.find('#'));
    std::istringstream iss(clean);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t)
        toks.push_back(t);
    return toks;
}

}  // namespace

GameGraph parse_graph(std::istream& in,
                      std::vector<std::pair<std::string, std::string>>* roles) {
    GameGraph g;
    enum class Section { None, Players, B, Edges, Roles } section = Section::None;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() == 2 && toks[0] == "mode") {
            if (toks[1] == "simple")
                g.simple = true;
            else if (toks[1] == "non-simple")
                g.simple = false;
            else
                throw ParseError(lineno, "mode must be simple or non-simple");
            continue;
        }
        if (toks.size() == 1 &&
            (toks[0] == "players" || toks[0] == "b" || toks[0] == "edges" || toks[0] == "roles")) {
            section = toks[0] == "players" ? Section::Players
                    : toks[0] == "b"       ? Section::B
                    : toks[0] == "edges"   ? Section::Edges
                                           : Section::Roles;
            continue;
        }
        try {
            switch (section) {
                case Section::None:
                    throw ParseError(lineno, "content before any section header");
                case Section::Players: {
                    if (toks.size() != 2)
                        throw ParseError(lineno, "expected `name side`");
                    Side side = toks[1] == "A"   ? Side::A
                              : toks[1] == "B"   ? Side::B
                              : toks[1] == "-"   ? Side::None
                                                 : throw ParseError(lineno, "side must be A, B or -");
                    g.add_vertex(toks[0], side);
                    break;
                }
                case Section::B: {
                    if (toks.size() != 2)
                        throw ParseError(lineno, "expected `name integer`");
                    int v = g.index_of(toks[0]);
                    if (v < 0)
                        throw ParseError(lineno, "unknown player: " + toks[0]);
                    int b = std::stoi(toks[1]);
                    if (b <= 0)
                        throw ParseError(lineno, "capacity must be positive");
                    g.vertices[v].b = b;
                    break;
                }
                case Section::Edges: {
                    if (toks.size() < 3 || toks.size() > 4)
                        throw ParseError(lineno, "expected `u v weight [mult_allowed]`");
                    int u = g.index_of(toks[0]);
                    int v = g.index_of(toks[1]);
                    if (u < 0)
                        throw ParseError(lineno, "unknown player: " + toks[0]);
                    if (v < 0)
                        throw ParseError(lineno, "unknown player: " + toks[1]);
                    std::optional<int> mult;
                    if (toks.size() == 4)
                        mult = std::stoi(toks[3]);
                    g.add_edge(u, v, parse_rational(toks[2]), mult);
                    break;
                }
                case Section::Roles: {
                    if (toks.size() != 2)
                        throw ParseError(lineno, "expected `name role`");
                    if (g.index_of(toks[0]) < 0)
                        throw ParseError(lineno, "unknown player: " + toks[0]);
                    if (roles)
                        roles->emplace_back(toks[0], toks[1]);
                    break;
                }
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return g;
}

GameGraph parse_graph_file(const std::string& path,
                           std::vector<std::pair<std::string, std::string>>* roles) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in, roles);
}

void write_graph(std::ostream& out, const GameGraph& g,
                 const std::vector<std::pair<std::string, std::string>>* roles) {
    if (!g.simple)
        out << "mode non-simple\n";
    out << "players\n";
    for (const auto& v : g.vertices) {
        char s = v.side == Side::A ? 'A' : v.side == Side::B ? 'B' : '-';
        out << v.name << ' ' << s << '\n';
    }
    out << "b\n";
    for (const auto& v : g.vertices)
        out << v.name << ' ' << v.b << '\n';
    out << "edges\n";
    for (const auto& e : g.edges) {
        out << g.vertices[e.u].name << ' ' << g.vertices[e.v].name << ' ' << to_string(e.w);
        if (e.max_mult)
            out << ' ' << *e.max_mult;
        out << '\n';
    }
    if (roles && !roles->empty()) {
        out << "roles\n";
        for (const auto& [name, role] : *roles)
            out << name << ' ' << role << '\n';
    }
}

}  // namespace bmg
