#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

/// Kink order for a first-move insertion.
enum class KinkOrder { OverFirst, UnderFirst };
/// Strand orientation pattern for a second-move insertion.
enum class R2Variant { Parallel, Antiparallel };

/// Inserts an isolated chord with both endpoints adjacent at the given
/// slot (0..2n). Type is 0 iff order is OverFirst.
LongDiagram r1_insert(const LongDiagram& d, int position, int sign, KinkOrder order);
/// Removes a chord whose two endpoints are adjacent. Throws if not a kink.
LongDiagram r1_delete(const LongDiagram& d, int label);
/// Chord labels deletable by r1_delete.
std::vector<int> r1_kinks(const LongDiagram& d);

/// Inserts a canceling pair of chords: one endpoint pair at slot pos1,
/// the other at slot pos2 (0 <= pos1 < pos2 <= 2n). The strand named by
/// over_first carries both over-passages; the chords get signs
/// (sign, -sign) and the same type.
LongDiagram r2_insert(const LongDiagram& d, int pos1, int pos2, R2Variant variant,
                      bool over_first, int sign);
/// Removes a detected canceling pair. Throws if the pair is not one.
LongDiagram r2_delete(const LongDiagram& d, int label1, int label2);
/// All unordered label pairs deletable by r2_delete.
std::vector<std::pair<int, int>> r2_pairs(const LongDiagram& d);

/// A third-move site: three chords pairwise sharing an adjacent endpoint
/// pair; pair_pos[k] is the first position of the k-th adjacent pair.
struct R3Triple {
    std::array<int, 3> labels;
    std::array<int, 3> pair_pos;

    bool operator==(const R3Triple&) const = default;
};

/// Conservatively detected sound third-move sites: the three connecting
/// arcs bound a triangular face of the Carter surface, avoid the
/// basepoint arc, and the over/under pattern has one all-over strand and
/// one all-under strand.
std::vector<R3Triple> r3_triples(const LongDiagram& d);
/// Swaps the two tokens within each of the three adjacent pairs. Throws
/// if the triple is not currently detected by r3_triples.
LongDiagram r3_apply(const LongDiagram& d, const R3Triple& triple);

/// Uniform random interleaving of n chords with independent fair signs
/// and over/under orders; deterministic in the seed.
LongDiagram random_diagram(int n, std::uint64_t seed);

/// One applied move, with enough parameters to replay it.
struct MoveEvent {
    std::string kind;  // R1_insert | R1_delete | R2_insert | R2_delete | R3
    nlohmann::ordered_json params;
};

/// Applies `steps` random sound moves starting from d; returns the event
/// and the diagram after each step. Deterministic in the seed.
std::vector<std::pair<MoveEvent, LongDiagram>> random_walk(const LongDiagram& d, int steps,
                                                           std::uint64_t seed);

enum class MarkRule { CrossingChange, Virtualization };

/// A diagram with k distinguished chords; variant(delta) applies the rule
/// at exactly the marks whose bit in delta is set.
struct MarkedDiagram {
    LongDiagram base;
    std::vector<int> marks;
    MarkRule rule = MarkRule::CrossingChange;

    LongDiagram variant(std::uint32_t delta) const;
};

/// Evaluates one named polynomial invariant of a long diagram. Selectors:
/// W0 W1, F00 F01 F10 F11, G.., H.., Wtilde Ftilde Gtilde Htilde,
/// closedW closedI closedII (computed on the closure).
LaurentPoly select_invariant(const LongDiagram& d, const std::string& selector);

/// sum over delta in {0,1}^k of (-1)^|delta| invariant(variant(delta)).
LaurentPoly alternating_sum(const MarkedDiagram& m, const std::string& selector);

/// A 2-marked crossing-change diagram on which the intersection
/// polynomials have nonzero alternating sum, proving they are not
/// degree-one finite-type invariants.
struct DegreeTwoWitness {
    MarkedDiagram marked;
    int a = 0, b = 0;
    LaurentPoly f_sum, g_sum, h_sum;
};

DegreeTwoWitness degree_two_witness(MarkRule rule = MarkRule::CrossingChange);

}  // namespace vknot
