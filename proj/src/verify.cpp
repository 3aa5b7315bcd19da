#include "vknot/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "vknot/family.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

namespace vknot {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxCertificates = 5;

void record_failure(SuiteResult& r, ordered_json certificate) {
    ++r.failures;
    if (r.certificates.size() < kMaxCertificates)
        r.certificates.push_back(std::move(certificate));
}

LongDiagram trial_diagram(std::mt19937_64& rng, int min_chords, int max_chords) {
    const int n = std::uniform_int_distribution<int>(min_chords, max_chords)(rng);
    return random_diagram(n, rng());
}

ordered_json poly_pair(const LaurentPoly& expected, const LaurentPoly& actual) {
    return ordered_json{{"expected", expected.str()}, {"actual", actual.str()}};
}

/// Runs `trials` independent checks; each check gets its own generator
/// seeded from (seed, trial), so results do not depend on scheduling.
void for_each_trial(SuiteResult& r,
                    const std::function<void(SuiteResult&, int, std::mt19937_64&)>& body) {
    std::vector<SuiteResult> parts(r.trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int trial = 0; trial < r.trials; ++trial) {
        std::mt19937_64 rng(r.seed * 0x9e3779b97f4a7c15ULL + trial);
        body(parts[trial], trial, rng);
    }
    for (const SuiteResult& p : parts) {
        r.checks += p.checks;
        r.failures += p.failures;
        for (const auto& c : p.certificates)
            if (r.certificates.size() < kMaxCertificates) r.certificates.push_back(c);
    }
}

void suite_moves(SuiteResult& r) {
    for_each_trial(r, [](SuiteResult& out, int trial, std::mt19937_64& rng) {
        const LongDiagram d = trial_diagram(rng, 0, 12);
        const InvariantReport base = full_report(d);
        const std::uint64_t walk_seed = rng();
        int step = 0;
        for (const auto& [event, moved] : random_walk(d, 20, walk_seed)) {
            ++out.checks;
            if (full_report(moved) != base) {
                record_failure(out, ordered_json{{"trial", trial},
                                                 {"base", d.code()},
                                                 {"step", step},
                                                 {"event", event.kind},
                                                 {"params", event.params},
                                                 {"after", moved.code()}});
                break;
            }
            ++step;
        }
    });
}

void suite_symmetry(SuiteResult& r) {
    for_each_trial(r, [](SuiteResult& out, int trial, std::mt19937_64& rng) {
        const LongDiagram d = trial_diagram(rng, 0, 10);
        const InvariantReport base = invariants(d);
        const InvariantReport sw = invariants(d.switch_all());
        const InvariantReport rev = invariants(d.reversed());
        const InvariantReport mir = invariants(d.mirrored());
        bool ok = true;
        for (int a = 0; a < 2; ++a) {
            ok = ok && sw.W[a] == -base.W[1 - a];
            ok = ok && rev.W[a] == base.W[1 - a];
            ok = ok && mir.W[a] == -base.W[a].invert_var();
            for (int b = 0; b < 2; ++b) {
                ok = ok && sw.F[a][b] == base.F[1 - a][1 - b] &&
                     sw.G[a][b] == base.G[1 - a][1 - b] && sw.H[a][b] == base.H[1 - a][1 - b];
                ok = ok && rev.F[a][b] == base.F[1 - a][1 - b] &&
                     rev.G[a][b] == base.G[1 - a][1 - b] && rev.H[a][b] == base.H[1 - a][1 - b];
                ok = ok && mir.F[a][b] == base.F[a][b].invert_var() &&
                     mir.G[a][b] == base.G[a][b].invert_var() &&
                     mir.H[a][b] == base.H[a][b].invert_var();
            }
        }
        ++out.checks;
        if (!ok)
            record_failure(out, ordered_json{{"trial", trial},
                                             {"base", d.code()},
                                             {"what", "symmetry identity violated"}});
    });
    // Eight mutually distinct symmetry variants of one family member and
    // its writhe polynomials witness that all eight knot variants differ.
    for (int n = 2; n <= 8; ++n) {
        const InvariantReport base = invariants(family_Kprime(n));
        std::vector<LaurentPoly> eight;
        for (int a = 0; a < 2; ++a)
            for (const LaurentPoly& w : {base.W[a], base.W[a].invert_var()})
                for (int s : {+1, -1}) eight.push_back(w.scaled(s));
        ++r.checks;
        bool distinct = true;
        for (std::size_t i = 0; i < eight.size(); ++i)
            for (std::size_t j = i + 1; j < eight.size(); ++j)
                if (eight[i] == eight[j]) distinct = false;
        if (!distinct)
            record_failure(r, ordered_json{{"what", "symmetry variants not distinct"}, {"n", n}});
    }
}

void suite_product(SuiteResult& r) {
    for_each_trial(r, [](SuiteResult& out, int trial, std::mt19937_64& rng) {
        const LongDiagram lhs = trial_diagram(rng, 0, 8);
        const LongDiagram rhs = trial_diagram(rng, 0, 8);
        const LongDiagram prod = product(lhs, rhs);
        const InvariantReport a = invariants(lhs);
        const InvariantReport b = invariants(rhs);
        const InvariantReport p = invariants(prod);
        bool ok = true;
        for (int x = 0; x < 2; ++x) ok = ok && p.W[x] == a.W[x] + b.W[x];
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                ok = ok && p.F[x][y] == a.F[x][y] + b.F[x][y];
                ok = ok && p.G[x][y] == a.G[x][y] + b.G[x][y];
                const LaurentPoly cross = a.W[x].invert_var() * b.W[y] +
                                          b.W[x].invert_var() * a.W[y];
                ok = ok && p.H[x][y] == a.H[x][y] + b.H[x][y] + cross;
            }
        }
        // Block structure of the product's pairing tables.
        const PairingTables ta = pairing_tables(lhs);
        const PairingTables tb = pairing_tables(rhs);
        const PairingTables tp = pairing_tables(prod);
        const int n = static_cast<int>(ta.labels.size());
        const int m = static_cast<int>(tp.labels.size());
        for (int i = 0; i < m && ok; ++i) {
            for (int j = 0; j < m && ok; ++j) {
                const bool il = i < n, jl = j < n;
                int ea, eb, ec;
                if (il && jl) {
                    ea = ta.A[i][j];
                    eb = ta.B[i][j];
                    ec = ta.C[i][j];
                } else if (!il && !jl) {
                    ea = tb.A[i - n][j - n];
                    eb = tb.B[i - n][j - n];
                    ec = tb.C[i - n][j - n];
                } else if (il) {
                    ea = 0;
                    eb = ta.B[i][i];
                    ec = -ta.B[i][i] + tb.B[j - n][j - n];
                } else {
                    ea = 0;
                    eb = tb.B[i - n][i - n];
                    ec = -tb.B[i - n][i - n] + ta.B[j][j];
                }
                ok = tp.A[i][j] == ea && tp.B[i][j] == eb && tp.C[i][j] == ec;
            }
        }
        ++out.checks;
        if (!ok)
            record_failure(out, ordered_json{{"trial", trial},
                                             {"lhs", lhs.code()},
                                             {"rhs", rhs.code()},
                                             {"what", "product identity violated"}});
    });
}

void suite_crossing_change(SuiteResult& r) {
    for_each_trial(r, [](SuiteResult& out, int trial, std::mt19937_64& rng) {
        const LongDiagram d = trial_diagram(rng, 1, 10);
        const auto labels = d.labels();
        const int label =
            labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)];
        const TildeInvariants base = tilde_invariants(d);
        bool ok = tilde_invariants(d.crossing_change(label)) == base;

        const InvariantReport desc = invariants(d.descending());
        ok = ok && desc.W[0] == base.W && desc.W[1].is_zero();
        ok = ok && desc.F[0][0] == base.F && desc.G[0][0] == base.G && desc.H[0][0] == base.H;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                if (x != 0 || y != 0)
                    ok = ok && desc.F[x][y].is_zero() && desc.G[x][y].is_zero() &&
                         desc.H[x][y].is_zero();
        ++out.checks;
        if (!ok)
            record_failure(out, ordered_json{{"trial", trial},
                                             {"base", d.code()},
                                             {"label", label},
                                             {"what", "crossing-change identity violated"}});
    });
}

void suite_finite_type(SuiteResult& r) {
    for_each_trial(r, [](SuiteResult& out, int trial, std::mt19937_64& rng) {
        // Degree-one vanishing for the writhe polynomials: 2 marks.
        {
            const LongDiagram d = trial_diagram(rng, 2, 8);
            auto labels = d.labels();
            std::shuffle(labels.begin(), labels.end(), rng);
            const MarkedDiagram m{d, {labels[0], labels[1]}, MarkRule::CrossingChange};
            ++out.checks;
            if (!alternating_sum(m, "W0").is_zero() || !alternating_sum(m, "W1").is_zero())
                record_failure(out, ordered_json{{"trial", trial},
                                                 {"base", d.code()},
                                                 {"marks", m.marks},
                                                 {"what", "2-marked writhe sum nonzero"}});
        }
        // Degree-two vanishing for all intersection polynomials: 3 marks.
        {
            const LongDiagram d = trial_diagram(rng, 3, 8);
            auto labels = d.labels();
            std::shuffle(labels.begin(), labels.end(), rng);
            const MarkedDiagram m{d, {labels[0], labels[1], labels[2]},
                                  MarkRule::CrossingChange};
            ++out.checks;
            bool ok = true;
            for (const char* fam : {"F", "G", "H"})
                for (const char* ab : {"00", "01", "10", "11"})
                    ok = ok && alternating_sum(m, std::string(fam) + ab).is_zero();
            if (!ok)
                record_failure(out, ordered_json{{"trial", trial},
                                                 {"base", d.code()},
                                                 {"marks", m.marks},
                                                 {"what", "3-marked intersection sum nonzero"}});
        }
    });

    // The searched degree-two witness must reproduce the known sums.
    {
        const DegreeTwoWitness w = degree_two_witness();
        const LaurentPoly fe{{1, 1}, {0, -2}, {-1, 1}};
        ++r.checks;
        if (w.f_sum != fe || w.g_sum != -fe || w.h_sum != -fe ||
            alternating_sum(w.marked,
                            std::string("F") + char('0' + w.a) + char('0' + w.b)) != w.f_sum)
            record_failure(r, ordered_json{{"what", "degree-two witness mismatch"},
                                           {"base", w.marked.base.code()},
                                           {"F", w.f_sum.str()},
                                           {"G", w.g_sum.str()},
                                           {"H", w.h_sum.str()}});
    }

    // Virtualization sums do not vanish at any number of marks: on the
    // golden family, the (n-2)-marked sum of W0 equals the binomial
    // combination of closed forms and keeps maximal degree n.
    for (int n = 4; n <= 8; ++n) {
        std::vector<int> marks;
        for (int i = 1; i <= n - 2; ++i) marks.push_back(i);
        const MarkedDiagram mk{family_K(n), marks, MarkRule::Virtualization};
        LaurentPoly expected;
        long long binom = 1;  // C(n-2, s)
        for (int s = 0; s <= n - 2; ++s) {
            const LaurentPoly w0 = family_K_expected(s + 2).W[0];
            expected += w0.scaled(((n - 2 - s) % 2 == 0 ? 1 : -1) * binom);
            binom = binom * (n - 2 - s) / (s + 1);
        }
        const LaurentPoly got = alternating_sum(mk, "W0");
        ++r.checks;
        if (got != expected || got.max_exponent() != n)
            record_failure(r, ordered_json{{"what", "virtualization W0 sum mismatch"},
                                           {"n", n},
                                           {"expected", expected.str()},
                                           {"actual", got.str()}});
        ++r.checks;
        if (alternating_sum(mk, "F00").max_exponent() != n - 1 ||
            alternating_sum(mk, "G00").max_exponent() != n ||
            alternating_sum(mk, "H00").max_exponent() != n)
            record_failure(r, ordered_json{{"what", "virtualization degree mismatch on K"},
                                           {"n", n}});
        const MarkedDiagram mkp{family_Kprime(n), marks, MarkRule::Virtualization};
        ++r.checks;
        if (alternating_sum(mkp, "F01").max_exponent() != n - 1 ||
            alternating_sum(mkp, "G01").max_exponent() != n ||
            alternating_sum(mkp, "H10").max_exponent() != n)
            record_failure(r, ordered_json{{"what", "virtualization degree mismatch on Kprime"},
                                           {"n", n}});
    }
}

void suite_closure(SuiteResult& r) {
    for_each_trial(r, [](SuiteResult& out, int trial, std::mt19937_64& rng) {
        const LongDiagram d = trial_diagram(rng, 0, 10);
        const InvariantReport lr = invariants(d);
        const ClosedInvariants c = closed_invariants(closure(d));
        const LaurentPoly w = lr.W[0] + lr.W[1].invert_var();
        const LaurentPoly first = lr.F[0][1] + lr.G[0][0] + lr.G[1][1].invert_var() +
                                  lr.H[0][1].invert_var();
        const LaurentPoly second = lr.F[0][0] + lr.F[1][1] + lr.G[0][1] +
                                   lr.G[0][1].invert_var() + lr.G[1][0] +
                                   lr.G[1][0].invert_var() + lr.H[0][0] + lr.H[1][1];
        ++out.checks;
        if (c.W != w || c.first != first || c.second != second)
            record_failure(out, ordered_json{{"trial", trial},
                                             {"base", d.code()},
                                             {"W", poly_pair(w, c.W)},
                                             {"I", poly_pair(first, c.first)},
                                             {"II", poly_pair(second, c.second)}});
    });
}

void suite_derivatives(SuiteResult& r) {
    for_each_trial(r, [](SuiteResult& out, int trial, std::mt19937_64& rng) {
        const LongDiagram d = trial_diagram(rng, 0, 10);
        ++out.checks;
        if (!check_derivative_identities(d).all())
            record_failure(out, ordered_json{{"trial", trial},
                                             {"base", d.code()},
                                             {"what", "derivative identity violated"}});
    });
}

}  // namespace

nlohmann::ordered_json SuiteResult::to_json() const {
    return ordered_json{{"suite", suite},        {"trials", trials},
                        {"seed", seed},          {"checks", checks},
                        {"failures", failures},  {"passed", passed()},
                        {"certificates", certificates}};
}

std::vector<std::string> suite_names() {
    return {"moves",       "symmetry",    "product", "crossing-change",
            "finite-type", "closure",     "derivatives"};
}

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed) {
    if (trials < 0) throw std::invalid_argument("trials must be non-negative");
    SuiteResult r;
    r.suite = name;
    r.trials = trials;
    r.seed = seed;
    if (name == "moves")
        suite_moves(r);
    else if (name == "symmetry")
        suite_symmetry(r);
    else if (name == "product")
        suite_product(r);
    else if (name == "crossing-change")
        suite_crossing_change(r);
    else if (name == "finite-type")
        suite_finite_type(r);
    else if (name == "closure")
        suite_closure(r);
    else if (name == "derivatives")
        suite_derivatives(r);
    else
        throw std::invalid_argument("unknown suite: " + name);
    return r;
}

}  // namespace vknot
