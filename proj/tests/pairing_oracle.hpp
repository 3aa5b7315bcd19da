#pragma once

#include "vknot/surface.hpp"

namespace vknot::testing {

/// Independent recomputation of an intersection number, used only to
/// cross-check the corner-based pairing. The ribbon graph is reduced to a
/// one-vertex map by contracting a spanning tree; each cycle becomes a
/// signed vector over the remaining loop edges, and the pairing is the
/// chord-interleaving form of the one-vertex map applied to those vectors.
int oracle_pair(const CycleWalk& c, const CycleWalk& d);

}  // namespace vknot::testing
