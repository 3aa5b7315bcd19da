#pragma once

#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"
#include "vknot/surface.hpp"

namespace vknot {

/// An infinite test family built on one flat curve with n+1 crossings
/// (n >= 2): every intersection number has a closed form, so the whole
/// pipeline can be checked exactly at any size.
///
/// family_K(n): all chords of type 0, signs -1,...,-1,+1.
/// family_Kprime(n): chords 1..n of type 1, chord n+1 of type 0, all +1.
LongDiagram family_K(int n);
LongDiagram family_Kprime(int n);

/// Closed-form pairing tables shared by both family members
/// (the intersection numbers depend only on the flat curve).
PairingTables family_expected_tables(int n);

/// Closed-form invariants of family_K(n) / family_Kprime(n).
InvariantReport family_K_expected(int n);
InvariantReport family_Kprime_expected(int n);

}  // namespace vknot
