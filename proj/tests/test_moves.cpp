#include <doctest.h>

#include <random>

#include "vknot/family.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

using namespace vknot;

TEST_CASE("first move insert and delete") {
    const LongDiagram d = LongDiagram::parse("O1+ U1+");
    const LongDiagram k = r1_insert(d, 1, -1, KinkOrder::UnderFirst);
    CHECK(k.chord_count() == 2);
    const int added = k.max_label();
    CHECK(k.crossing_type(added) == 1);
    CHECK(k.chord(added).sign == -1);
    CHECK(r1_delete(k, added) == d);
    CHECK(r1_insert(d, 0, +1, KinkOrder::OverFirst).crossing_type(d.max_label() + 1) == 0);
    CHECK_THROWS_AS(r1_delete(LongDiagram::parse("O1+ U2+ U1+ O2+"), 1),
                    std::invalid_argument);  // endpoints not adjacent
    CHECK_THROWS_AS(r1_insert(d, 3, +1, KinkOrder::OverFirst), std::out_of_range);
    const auto kinks = r1_kinks(k);
    CHECK(kinks == std::vector<int>{added});
}

TEST_CASE("second move insert and delete") {
    const LongDiagram d = LongDiagram::parse("O1+ U1+");
    const LongDiagram e = r2_insert(d, 0, 2, R2Variant::Parallel, true, +1);
    CHECK(e.chord_count() == 3);
    const auto pairs = r2_pairs(e);
    REQUIRE(!pairs.empty());
    bool restored = false;
    for (auto [x, y] : pairs)
        if (r2_delete(e, x, y) == d) restored = true;
    CHECK(restored);
    CHECK_THROWS_AS(r2_delete(e, 1, e.max_label()), std::invalid_argument);
    // same-slot insertion exists only in the antiparallel pattern
    CHECK(r2_insert(LongDiagram{}, 0, 0, R2Variant::Antiparallel, true, +1).chord_count() == 2);
    CHECK_THROWS_AS(r2_insert(LongDiagram{}, 0, 0, R2Variant::Parallel, true, +1),
                    std::invalid_argument);
    const auto canceling = r2_insert(LongDiagram{}, 0, 0, R2Variant::Antiparallel, false, -1);
    CHECK(invariants(canceling) == invariants(LongDiagram{}));
}

TEST_CASE("canceling pairs need opposite signs and adjacency") {
    CHECK(r2_pairs(LongDiagram::parse("O1+ O2- U1+ O3+ U2- U3+")).empty());  // separated
    CHECK(r2_pairs(LongDiagram::parse("O1+ O2- U1+ U2-")) ==
          std::vector<std::pair<int, int>>{{1, 2}});  // interleaved pattern
    CHECK(r2_pairs(LongDiagram::parse("O1+ O2+ U2+ U1+")).empty());  // equal signs
    CHECK(r2_pairs(LongDiagram::parse("O1+ O2- U2- U1+")) ==
          std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("third move on its smallest sound site") {
    const LongDiagram d = LongDiagram::parse("O1+ O2+ U1+ O3+ U2+ U3+");
    const auto sites = r3_triples(d);
    REQUIRE(sites.size() == 1);
    const LongDiagram e = r3_apply(d, sites[0]);
    CHECK(e != d);
    CHECK(e.writhe(0) == d.writhe(0));
    CHECK(e.writhe(1) == d.writhe(1));
    CHECK(invariants(e) == invariants(d));
    // the move is an involution through the corresponding site of e
    const auto back = r3_triples(e);
    REQUIRE(back.size() == 1);
    CHECK(r3_apply(e, back[0]) == d);
    // stale site data is rejected
    CHECK_THROWS_AS(r3_apply(LongDiagram::parse("O1+ U1+"), sites[0]), std::invalid_argument);
}

TEST_CASE("alternating triangles are not third-move sites") {
    CHECK(r3_triples(LongDiagram::parse("O1+ U2+ O3+ U1+ O2+ U3+")).empty());
}

TEST_CASE("random diagrams and walks are deterministic") {
    CHECK(random_diagram(0, 5) == LongDiagram{});
    CHECK(random_diagram(6, 99) == random_diagram(6, 99));
    CHECK(random_diagram(6, 99) != random_diagram(6, 100));
    const LongDiagram d = random_diagram(5, 7);
    const auto walk1 = random_walk(d, 12, 3);
    const auto walk2 = random_walk(d, 12, 3);
    REQUIRE(walk1.size() == 12);
    for (std::size_t i = 0; i < walk1.size(); ++i) {
        CHECK(walk1[i].first.kind == walk2[i].first.kind);
        CHECK(walk1[i].second == walk2[i].second);
    }
}

TEST_CASE("walks preserve every polynomial invariant") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const LongDiagram d = random_diagram(1 + int(rng() % 8), rng());
        const InvariantReport base = full_report(d);
        for (const auto& [event, step] : random_walk(d, 15, rng()))
            CHECK(full_report(step) == base);
    }
}

TEST_CASE("marked variants apply the rule at the marked chords") {
    const MarkedDiagram m{LongDiagram::parse("O1+ U2+ U1+ O2+"), {1, 2},
                          MarkRule::CrossingChange};
    CHECK(m.variant(0) == m.base);
    CHECK(m.variant(1) == m.base.crossing_change(1));
    CHECK(m.variant(3) == m.base.crossing_change(1).crossing_change(2));
    const MarkedDiagram v{m.base, {2}, MarkRule::Virtualization};
    CHECK(v.variant(1) == m.base.virtualized(2));
}

TEST_CASE("writhe polynomials are degree-one finite-type") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        LongDiagram d = random_diagram(4 + int(rng() % 5), rng());
        auto labels = d.labels();
        std::shuffle(labels.begin(), labels.end(), rng);
        const MarkedDiagram m{d, {labels[0], labels[1]}, MarkRule::CrossingChange};
        CHECK(alternating_sum(m, "W0").is_zero());
        CHECK(alternating_sum(m, "W1").is_zero());
    }
}

TEST_CASE("intersection polynomials are degree-two finite-type") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 4; ++trial) {
        LongDiagram d = random_diagram(5 + int(rng() % 4), rng());
        auto labels = d.labels();
        std::shuffle(labels.begin(), labels.end(), rng);
        const MarkedDiagram m{d, {labels[0], labels[1], labels[2]},
                              MarkRule::CrossingChange};
        for (const char* sel : {"F00", "F01", "F10", "F11", "G00", "G01", "G10", "G11",
                                "H00", "H01", "H10", "H11"})
            CHECK(alternating_sum(m, sel).is_zero());
    }
}

TEST_CASE("degree-two witness and its exact sums") {
    const DegreeTwoWitness w = degree_two_witness(MarkRule::CrossingChange);
    CHECK(w.marked.base.code() == "O1+ O2+ U1+ U2+");
    CHECK(w.marked.marks == std::vector<int>{1, 2});
    CHECK(w.a == 0);
    CHECK(w.b == 0);
    const LaurentPoly spike =
        LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(0, 2) + LaurentPoly::monomial(-1, 1);
    CHECK(w.f_sum == spike);
    CHECK(w.g_sum == -spike);
    CHECK(w.h_sum == -spike);
    CHECK(alternating_sum(w.marked, "F00") == spike);
}

TEST_CASE("virtualization alternating sum on a family member") {
    const MarkedDiagram m{family_K(4), {1, 2}, MarkRule::Virtualization};
    const LaurentPoly got = alternating_sum(m, "W0");
    // t^4 - 2 t^3 + t^2
    LaurentPoly want = LaurentPoly::monomial(4, 1) - LaurentPoly::monomial(3, 2) +
                       LaurentPoly::monomial(2, 1);
    CHECK(got == want);
}

TEST_CASE("selector names are validated") {
    const LongDiagram d = LongDiagram::parse("O1+ U1+");
    CHECK(select_invariant(d, "W0") == writhe_polynomial(d, 0));
    CHECK(select_invariant(d, "closedW") == closed_writhe_polynomial(closure(d)));
    CHECK_THROWS_AS(select_invariant(d, "nope"), std::invalid_argument);
}
