#include "vknot/invariants.hpp"

#include <stdexcept>

namespace vknot {

namespace {

InvariantReport report_from_tables(const LongDiagram& d, const PairingTables& t) {
    InvariantReport r;
    r.n_chords = static_cast<int>(d.chord_count());
    r.genus = CarterSurface(d).genus();
    r.omega = {d.writhe(0), d.writhe(1)};

    const int n = static_cast<int>(t.labels.size());
    std::vector<int> type(n), eps(n);
    for (int i = 0; i < n; ++i) {
        type[i] = d.crossing_type(t.labels[i]);
        eps[i] = d.chord(t.labels[i]).sign;
    }

    for (int i = 0; i < n; ++i)
        r.W[type[i]] += LaurentPoly::t_power_minus_one(t.B[i][i]).scaled(eps[i]);

    std::array<std::array<LaurentPoly, 2>, 2> f{}, g{}, h{};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int c = eps[i] * eps[j];
            f[type[i]][type[j]] += LaurentPoly::t_power_minus_one(t.A[i][j]).scaled(c);
            g[type[i]][type[j]] += LaurentPoly::t_power_minus_one(t.B[i][j]).scaled(c);
            h[type[i]][type[j]] += LaurentPoly::t_power_minus_one(t.C[i][j]).scaled(c);
        }
    }
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            r.F[a][b] = f[a][b];
            r.G[a][b] = g[a][b] - r.W[a].scaled(r.omega[b]);
            r.H[a][b] = h[a][b] - r.W[b].scaled(r.omega[a]) -
                        r.W[a].invert_var().scaled(r.omega[b]);
        }
    }

    r.W_tilde = r.W[0] - r.W[1];
    r.F_tilde = r.F[0][0] - r.F[0][1] - r.F[1][0] + r.F[1][1];
    r.G_tilde = r.G[0][0] - r.G[0][1] - r.G[1][0] + r.G[1][1];
    r.H_tilde = r.H[0][0] - r.H[0][1] - r.H[1][0] + r.H[1][1];
    return r;
}

}  // namespace

LaurentPoly writhe_polynomial(const LongDiagram& d, int a) {
    if (a != 0 && a != 1) throw std::invalid_argument("crossing type must be 0 or 1");
    return invariants(d).W[a];
}

LaurentPoly raw_sum(const LongDiagram& d, char kind, int a, int b) {
    if (a < 0 || a > 1 || b < 0 || b > 1)
        throw std::invalid_argument("crossing types must be 0 or 1");
    const PairingTables t = pairing_tables(d);
    const auto entry = [&](int i, int j) -> int {
        switch (kind) {
            case 'f': return t.A[i][j];
            case 'g': return t.B[i][j];
            case 'h': return t.C[i][j];
            default: throw std::invalid_argument("kind must be 'f', 'g', or 'h'");
        }
    };
    LaurentPoly sum;
    const int n = static_cast<int>(t.labels.size());
    for (int i = 0; i < n; ++i) {
        if (d.crossing_type(t.labels[i]) != a) continue;
        for (int j = 0; j < n; ++j) {
            if (d.crossing_type(t.labels[j]) != b) continue;
            const int c = d.chord(t.labels[i]).sign * d.chord(t.labels[j]).sign;
            sum += LaurentPoly::t_power_minus_one(entry(i, j)).scaled(c);
        }
    }
    return sum;
}

LaurentPoly intersection_polynomial(const LongDiagram& d, char family, int a, int b) {
    if (a < 0 || a > 1 || b < 0 || b > 1)
        throw std::invalid_argument("crossing types must be 0 or 1");
    const InvariantReport r = invariants(d);
    switch (family) {
        case 'F': return r.F[a][b];
        case 'G': return r.G[a][b];
        case 'H': return r.H[a][b];
        default: throw std::invalid_argument("family must be 'F', 'G', or 'H'");
    }
}

InvariantReport invariants(const LongDiagram& d) {
    return report_from_tables(d, pairing_tables(d));
}

InvariantReport invariants_serial(const LongDiagram& d) {
    return report_from_tables(d, pairing_tables_serial(d));
}

TildeInvariants tilde_invariants(const LongDiagram& d) {
    const InvariantReport r = invariants(d);
    return {r.W_tilde, r.F_tilde, r.G_tilde, r.H_tilde};
}

InvariantReport full_report(const LongDiagram& d) {
    const InvariantReport r = invariants(d);
    const auto vanishes = [](const LaurentPoly& p) { return p.eval_at_one() == 0; };
    bool ok = vanishes(r.W[0]) && vanishes(r.W[1]);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            ok = ok && vanishes(r.F[a][b]) && vanishes(r.G[a][b]) && vanishes(r.H[a][b]);
    ok = ok && r.F[0][0].is_reciprocal() && r.F[1][1].is_reciprocal() &&
         r.H[0][0].is_reciprocal() && r.H[1][1].is_reciprocal() &&
         r.F[0][1] == r.F[1][0].invert_var() && r.H[0][1] == r.H[1][0].invert_var();
    if (!ok) throw std::logic_error("invariant report violates its internal guarantees");
    return r;
}

ClosedInvariants closed_invariants(const ClosedDiagram& d) {
    const CarterSurface surface(d);
    const auto labels = d.labels();
    const int n = static_cast<int>(labels.size());
    std::vector<CycleWalk> over(n), bar(n);
    std::vector<int> eps(n);
    for (int i = 0; i < n; ++i) {
        over[i] = surface.gamma_over(labels[i]);
        bar[i] = surface.gamma_bar(labels[i]);
        eps[i] = d.chord(labels[i]).sign;
    }
    const int omega = d.total_writhe();

    ClosedInvariants r;
    for (int i = 0; i < n; ++i)
        r.W += LaurentPoly::t_power_minus_one(pair(over[i], bar[i])).scaled(eps[i]);

    LaurentPoly mixed, same, same_bar;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int c = eps[i] * eps[j];
            mixed += LaurentPoly::t_power_minus_one(pair(over[i], bar[j])).scaled(c);
            same += LaurentPoly::t_power_minus_one(pair(over[i], over[j])).scaled(c);
            same_bar += LaurentPoly::t_power_minus_one(pair(bar[i], bar[j])).scaled(c);
        }
    }
    r.first = mixed - r.W.scaled(omega);
    r.second = same + same_bar - (r.W + r.W.invert_var()).scaled(omega);
    return r;
}

LaurentPoly closed_writhe_polynomial(const ClosedDiagram& d) { return closed_invariants(d).W; }
LaurentPoly closed_first(const ClosedDiagram& d) { return closed_invariants(d).first; }
LaurentPoly closed_second(const ClosedDiagram& d) { return closed_invariants(d).second; }

DerivativeChecks check_derivative_identities(const LongDiagram& d) {
    return check_derivative_identities(invariants(d));
}

DerivativeChecks check_derivative_identities(const InvariantReport& r) {
    DerivativeChecks c{};
    c.writhe_first_equal = r.W[0].derivative_at_one(1) == r.W[1].derivative_at_one(1);
    c.g_diagonal_vanish = r.G[0][0].derivative_at_one(1) == 0 &&
                          r.G[1][1].derivative_at_one(1) == 0;
    c.g_off_diagonal_cancel =
        r.G[0][1].derivative_at_one(1) + r.G[1][0].derivative_at_one(1) == 0;
    c.f_matches_h_offdiag =
        r.F[0][1].derivative_at_one(1) == r.H[0][1].derivative_at_one(1) &&
        r.F[1][0].derivative_at_one(1) == r.H[1][0].derivative_at_one(1);
    const Coeff second = r.F[0][0].derivative_at_one(2) + r.F[1][1].derivative_at_one(2) +
                         r.H[0][0].derivative_at_one(2) + r.H[1][1].derivative_at_one(2);
    c.second_derivative_mod4 = second % 4 == 0;
    return c;
}

}  // namespace vknot
