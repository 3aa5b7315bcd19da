#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

/// The abstract Carter surface of a diagram, as an oriented ribbon graph.
///
/// Vertices are the real crossings (4-valent); edges are the arcs of the
/// diagram between consecutive passages, arc k running from endpoint k-1 to
/// endpoint k and arc 0 closing up through the basepoint (long case) or
/// plainly (closed case). Each arc has two half-edges: 2*arc at its tail,
/// 2*arc+1 at its head. The rotation at a vertex lists its four half-edges
/// in the cyclic order induced by the crossing's local picture and sign;
/// faces are the orbits of the rotation system and cap the graph into a
/// closed oriented surface.
struct RibbonGraph {
    int n_vertices = 0;
    int n_arcs = 0;
    std::vector<int> vertex_labels;               // vertex index -> chord label
    std::vector<int> vertex_of_half;              // half-edge -> vertex
    std::vector<std::array<int, 4>> rotation;     // vertex -> half-edges, ccw
    std::vector<int> slot_of_half;                // half-edge -> slot 0..3
    bool has_basepoint = false;                   // marked point on arc 0

    static int tail_half(int arc) { return 2 * arc; }
    static int head_half(int arc) { return 2 * arc + 1; }
    static int other_half(int h) { return h ^ 1; }

    /// Face boundary walks: each face as the list of half-edges it is
    /// traced through. The walks partition the 2E half-edges.
    std::vector<std::vector<int>> faces() const;
    /// g = (2 - V + E - F) / 2; 0 for the empty diagram.
    int genus() const;
};

/// A vertex passage of a cycle: arrives via half-edge `in`, leaves via
/// half-edge `out`. Two passages of one walk through the same vertex
/// contribute to pairings independently.
struct Corner {
    int vertex;
    int in_half;
    int out_half;
};

/// A homology cycle as a closed edge-walk with corner data.
struct CycleWalk {
    const RibbonGraph* graph = nullptr;
    std::vector<int> arcs;          // arcs traversed, in diagram direction
    std::vector<Corner> corners;    // one per vertex passage
};

/// Homological intersection number of two cycles on the closed oriented
/// Carter surface: the second walk is pushed off to its left and local
/// signs are summed over shared vertex passages. Bilinear, antisymmetric.
/// Throws std::invalid_argument if the walks live on different graphs.
int pair(const CycleWalk& c, const CycleWalk& d);

/// All intersection numbers among the smoothing cycles of a long diagram,
/// indexed by ascending chord label: A[i][j] = alpha_i . alpha_j,
/// B[i][j] = alpha_i . beta_j, C[i][j] = beta_i . beta_j,
/// v[i] = alpha_i . gamma_D.
struct PairingTables {
    std::vector<int> labels;
    std::vector<std::vector<int>> A;
    std::vector<std::vector<int>> B;
    std::vector<std::vector<int>> C;
    std::vector<int> v;

    int index_of(int label) const;
    /// TSV dump with row/column chord labels, one matrix per block.
    std::string tsv() const;

    bool operator==(const PairingTables&) const = default;
};

/// Builder and cycle factory for the Carter surface of one diagram.
/// Construct once, then query cycles and pairings; all queries are pure.
class CarterSurface {
public:
    explicit CarterSurface(const LongDiagram& d);
    explicit CarterSurface(const ClosedDiagram& d);

    const RibbonGraph& graph() const { return graph_; }
    int genus() const { return graph_.genus(); }

    /// Smoothing cycles at a chord of a long diagram: alpha avoids the
    /// basepoint, beta contains it; alpha + beta = gamma as homology classes.
    CycleWalk alpha(int label) const;
    CycleWalk beta(int label) const;
    /// The full diagram cycle gamma_D.
    CycleWalk gamma() const;

    /// Closed-knot cycles: gamma_over runs from the over passage of the
    /// chord to its under passage, gamma_bar is the complementary walk.
    CycleWalk gamma_over(int label) const;
    CycleWalk gamma_bar(int label) const;

private:
    void build(const std::vector<Endpoint>& eps, bool long_diagram);
    /// Walk over arcs first_arc..last_arc (cyclically), closed at the
    /// vertex of chord `label`.
    CycleWalk range_walk(int first_arc, int last_arc, int corner_label) const;
    std::pair<int, int> chord_positions(int label) const;

    RibbonGraph graph_;
    std::map<int, std::pair<int, int>> positions_;  // label -> (over, under) pos
    std::vector<int> vertex_of_pos_;                // endpoint position -> vertex
    bool long_ = true;
};

/// PairingTables of a long diagram (OpenMP-parallel over table entries).
PairingTables pairing_tables(const LongDiagram& d);
/// Plain serial reference implementation, kept for testing and benchmarks.
PairingTables pairing_tables_serial(const LongDiagram& d);

}  // namespace vknot
