#pragma once

#include "bmg/bmatching.hpp"
#include "bmg/game.hpp"
#include "bmg/graph.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bmg {

/// Restricted exact-cover instance: |X| = 3k, all subsets of size 3.
struct X3CInstance {
    std::vector<std::string> elements;          // ground set, stable order
    std::vector<std::array<int, 3>> subsets;    // element indices, sorted
    int k = 0;

    int element_index(const std::string& name) const;
    /// Every element in exactly three subsets.
    bool restricted() const;
    void validate() const;
};

X3CInstance parse_x3c(std::istream& in);
X3CInstance parse_x3c_file(const std::string& path);
void write_x3c(std::ostream& out, const X3CInstance& inst);

/// The 3-matching hardness gadget: each original vertex grows a K_{3,3}
/// block of five new vertices. Unit weights, b = 3 everywhere.
struct NucleolusGadget {
    GameGraph graph;
    std::vector<int> originals;
    struct Tail {
        int v, w, x, y, z;
    };
    std::vector<Tail> tails;  // parallel to originals

    Coalition complete_gadget(int which) const;   // V_u
    Coalition gadget_vertices(int which) const;   // T_u
    Coalition original_coalition() const;         // the embedded input vertices
    std::vector<std::pair<std::string, std::string>> roles() const;
};

NucleolusGadget build_nucleolus_gadget(const GameGraph& g);

Allocation make_xstar(const NucleolusGadget& g);
Allocation make_xdelta(const NucleolusGadget& g, const Rational& delta);  // 0 < delta < 1/2

struct Table1Row {
    int left;   // |S n {u, v_u, w_u}|
    int right;  // |S n {x_u, y_u, z_u}|
    Rational nu;
    Rational excess;
    int class_size;
};
struct Table2Row {
    int u;    // |S n {u}|
    int vw;   // |S n {v_u, w_u}|
    int xyz;  // |S n {x_u, y_u, z_u}|
    Rational nu;
    Rational excess;
    int class_size;
};

/// Enumerates all proper subsets of one complete gadget grouped by shape,
/// with (nu, excess) computed from the value oracle. A shape class with a
/// non-constant excess is a construction bug and throws.
std::vector<Table1Row> excess_table1(const NucleolusGadget& g);
std::vector<Table2Row> excess_table2(const NucleolusGadget& g, const Rational& delta);

/// The exact-cover reduction graph: two mirrored copies of the backbone
/// with 12-vertex ore substitutions, linked through the c-vertices.
struct X3cGraph {
    X3CInstance instance;
    GameGraph g0, g1, g2;  // intermediates; g2 is one substituted copy
    GameGraph graph;       // final graph, both copies plus cross edges

    struct Ore {
        int u, w, cu, cw;
    };
    struct Copy {
        std::vector<int> b1, b2, b3;
        std::vector<int> sets;                   // subset vertices
        std::vector<std::array<Ore, 3>> ores;    // per element, j = 1..3
    };
    std::array<Copy, 2> copies;

    std::vector<int> b_vertices(int copy) const;  // B1 u B2 u B3
    std::vector<std::pair<std::string, std::string>> roles() const;
};

X3cGraph build_x3c_graph(const X3CInstance& inst);

struct SubgraphWitness {
    std::vector<int> edges;    // indices into the graph's edge list
    std::vector<int> degrees;  // per vertex, from `edges`
    std::vector<int> special;  // the degree-2 vertices of a 2FC witness
    bool trivial = false;      // one missing edge upgrades the 2FC to cubic
};

/// Constructive direction of the reduction: the cover induces a cubic
/// subgraph, degree-checked rather than assumed.
SubgraphWitness cover_to_cubic(const X3cGraph& g, const std::vector<int>& cover);

constexpr int kDefaultDetectCap = 22;

std::optional<SubgraphWitness> detect_cubic(const GameGraph& g, int cap = kDefaultDetectCap);
std::optional<SubgraphWitness> detect_2fc(const GameGraph& g, int cap = kDefaultDetectCap);

/// 0 when a cubic subgraph exists, 1 when only a two-from-cubic subgraph
/// does, nullopt when neither.
std::optional<int> delta_parameter(const GameGraph& g, int cap = kDefaultDetectCap);

std::optional<std::vector<int>> x3c_bruteforce(const X3CInstance& inst, int cap = 20);

struct StructuralReport {
    bool bipartite = false;
    int max_degree = 0;
    std::vector<std::pair<std::string, int>> role_counts;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    std::string to_string() const;
};

StructuralReport structural_check(const NucleolusGadget& g);
StructuralReport structural_check(const X3cGraph& g);

}  // namespace bmg
