#pragma once

#include "bmg/rational.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmg {

enum class Side { A, B, None };

/// Positioned parse failure for the graph / instance file formats.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ScaleRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected multigraph with per-vertex capacities. `simple` decides whether
/// b-matchings may repeat an edge.
struct GameGraph {
    struct Vertex {
        std::string name;
        Side side = Side::None;
        int b = 1;
    };
    struct Edge {
        int u;
        int v;
        Rational w;
        std::optional<int> max_mult;  // per-edge override, non-simple games only
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    bool simple = true;

    int add_vertex(std::string name, Side side = Side::None, int b = 1);
    void add_edge(int u, int v, Rational w = 1, std::optional<int> max_mult = {});
    void add_edge(const std::string& u, const std::string& v, Rational w = 1);

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int index_of(const std::string& name) const;  // -1 when absent
    int require(const std::string& name) const;   // throws on unknown name

    int degree(int v) const;
    int max_degree() const;

    /// Two-colouring check; fills Side labels from the colouring when the
    /// graph carries none. Returns false for odd cycles.
    bool is_bipartite() const;

    /// True when every edge crosses the A/B side labels (all labelled).
    bool sides_consistent() const;
};

/// Shared text format: `players`, `b`, `edges` sections plus an optional
/// `roles` section; `#` starts a comment. An optional `mode non-simple`
/// line (before the sections) allows repeated edges.
GameGraph parse_graph(std::istream& in,
                      std::vector<std::pair<std::string, std::string>>* roles = nullptr);
GameGraph parse_graph_file(const std::string& path,
                           std::vector<std::pair<std::string, std::string>>* roles = nullptr);
void write_graph(std::ostream& out, const GameGraph& g,
                 const std::vector<std::pair<std::string, std::string>>* roles = nullptr);

}  // namespace bmg
