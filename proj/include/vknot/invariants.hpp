#pragma once

#include <array>
#include <string>

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"
#include "vknot/surface.hpp"

namespace vknot {

/// The full set of polynomial invariants of a long virtual knot:
/// the two writhe polynomials W[a], the twelve intersection polynomials
/// F/G/H[a][b], and the tilde combinations invariant also under
/// forbidden moves.
struct InvariantReport {
    int n_chords = 0;   // diagram data, not an invariant
    int genus = 0;      // Carter-surface genus of this diagram, not an invariant
    std::array<int, 2> omega{0, 0};  // a-writhes; change under first moves
    std::array<LaurentPoly, 2> W;
    std::array<std::array<LaurentPoly, 2>, 2> F, G, H;
    LaurentPoly W_tilde, F_tilde, G_tilde, H_tilde;

    /// Equality of the knot invariants only: the fourteen W/F/G/H
    /// polynomials and the tilde combinations. The diagram-dependent
    /// fields (chord count, genus, writhes) are ignored.
    bool operator==(const InvariantReport& rhs) const {
        return W == rhs.W && F == rhs.F && G == rhs.G && H == rhs.H &&
               W_tilde == rhs.W_tilde && F_tilde == rhs.F_tilde && G_tilde == rhs.G_tilde &&
               H_tilde == rhs.H_tilde;
    }
    bool operator!=(const InvariantReport& rhs) const { return !(*this == rhs); }
};

/// W_a(K;t) = sum over type-a chords of eps_i (t^(alpha_i . beta_i) - 1).
LaurentPoly writhe_polynomial(const LongDiagram& d, int a);

/// One of the diagram-dependent double sums the invariants are corrected
/// from; kind is 'f' (alpha.alpha), 'g' (alpha.beta), or 'h' (beta.beta).
/// Not itself an invariant.
LaurentPoly raw_sum(const LongDiagram& d, char kind, int a, int b);

/// One intersection polynomial; family is 'F', 'G', or 'H'.
LaurentPoly intersection_polynomial(const LongDiagram& d, char family, int a, int b);

/// The four combinations invariant under crossing changes.
struct TildeInvariants {
    LaurentPoly W, F, G, H;

    bool operator==(const TildeInvariants&) const = default;
};

TildeInvariants tilde_invariants(const LongDiagram& d);

/// Computes all fourteen polynomials from one set of pairing tables.
InvariantReport invariants(const LongDiagram& d);
/// Same values via the serial pairing kernel; kept for testing.
InvariantReport invariants_serial(const LongDiagram& d);

/// invariants(d), then verifies the report's internal guarantees
/// (vanishing at t = 1 and the reciprocity relations) before returning;
/// throws std::logic_error if any fails.
InvariantReport full_report(const LongDiagram& d);

/// The writhe polynomial W and the first and second intersection
/// polynomials of a virtual knot.
struct ClosedInvariants {
    LaurentPoly W, first, second;

    bool operator==(const ClosedInvariants&) const = default;
};

ClosedInvariants closed_invariants(const ClosedDiagram& d);
LaurentPoly closed_writhe_polynomial(const ClosedDiagram& d);
LaurentPoly closed_first(const ClosedDiagram& d);
LaurentPoly closed_second(const ClosedDiagram& d);

/// The five identities among derivative values at t = 1 that every long
/// virtual knot satisfies. All fields are true for genuine invariants.
struct DerivativeChecks {
    bool writhe_first_equal;       // W_0'(1) == W_1'(1)
    bool g_diagonal_vanish;        // G_00'(1) == G_11'(1) == 0
    bool g_off_diagonal_cancel;    // G_01'(1) + G_10'(1) == 0
    bool f_matches_h_offdiag;      // F_01'(1) == H_01'(1), F_10'(1) == H_10'(1)
    bool second_derivative_mod4;   // F_00'' + F_11'' + H_00'' + H_11'' == 0 (mod 4) at 1

    bool all() const {
        return writhe_first_equal && g_diagonal_vanish && g_off_diagonal_cancel &&
               f_matches_h_offdiag && second_derivative_mod4;
    }
};

DerivativeChecks check_derivative_identities(const InvariantReport& r);
DerivativeChecks check_derivative_identities(const LongDiagram& d);

}  // namespace vknot
