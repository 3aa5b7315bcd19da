#include <doctest.h>

#include <algorithm>

#include "vknot/gauss.hpp"

using namespace vknot;

TEST_CASE("parse round trip and chord data") {
    const LongDiagram d = LongDiagram::parse("O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(d.chord_count() == 3);
    CHECK(d.code() == "O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(LongDiagram::parse(d.code()) == d);
    CHECK(d.chord(2).over_pos == 4);
    CHECK(d.chord(2).under_pos == 1);
    CHECK(d.chord(2).sign == +1);
    CHECK(d.crossing_type(1) == 0);
    CHECK(d.crossing_type(2) == 1);
    CHECK(d.labels() == std::vector<int>{1, 2, 3});
    CHECK(d.max_label() == 3);
    CHECK(d.has_chord(3));
    CHECK(!d.has_chord(4));
    CHECK_THROWS_AS(d.chord(9), std::out_of_range);
    CHECK(LongDiagram::parse("  ").chord_count() == 0);
    CHECK(LongDiagram::parse("O2-, U2-").code() == "O2- U2-");
}

TEST_CASE("parse errors carry byte positions") {
    CHECK_THROWS_AS(LongDiagram::parse("O1+ U1-"), parse_error);     // sign mismatch
    CHECK_THROWS_AS(LongDiagram::parse("O1+ O1+"), parse_error);     // two overs
    CHECK_THROWS_AS(LongDiagram::parse("O1+"), parse_error);         // unmatched
    CHECK_THROWS_AS(LongDiagram::parse("O1+ U1+ O1+"), parse_error); // three tokens
    CHECK_THROWS_AS(LongDiagram::parse("X1+"), parse_error);
    CHECK_THROWS_AS(LongDiagram::parse("O0+ U0+"), parse_error);     // labels positive
    try {
        LongDiagram::parse("O1+ Q2+");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("writhes") {
    const LongDiagram d = LongDiagram::parse("O1+ O2- U1+ U2- O3+ U3+");
    // chords 1,2 type 0; chord 3 type 0; none type 1
    CHECK(d.writhe(0) == 1);
    CHECK(d.writhe(1) == 0);
    const LongDiagram e = LongDiagram::parse("U1+ O2- O1+ U2-");
    CHECK(e.writhe(0) == -1);
    CHECK(e.writhe(1) == 1);
    CHECK_THROWS_AS(d.writhe(2), std::invalid_argument);
}

TEST_CASE("involutive transforms") {
    const LongDiagram d = LongDiagram::parse("O1+ U2- O3+ U1+ O2- U3+");
    CHECK(d.switch_all().switch_all() == d);
    CHECK(d.reversed().reversed() == d);
    CHECK(d.mirrored().mirrored() == d);
    CHECK(d.crossing_change(2).crossing_change(2) == d);
    CHECK(d.switch_all().code() == "U1- O2+ U3- O1- U2+ O3-");
    CHECK(d.mirrored().code() == "O1- U2+ O3- U1- O2+ U3-");
    CHECK(d.reversed().code() == "U3+ O2- U1+ O3+ U2- O1+");
}

TEST_CASE("crossing change and virtualization") {
    const LongDiagram d = LongDiagram::parse("O1+ U2+ U1+ O2+");
    const LongDiagram c = d.crossing_change(1);
    CHECK(c.code() == "U1- U2+ O1- O2+");
    CHECK(c.crossing_type(1) == 1 - d.crossing_type(1));
    CHECK(c.chord(1).sign == -d.chord(1).sign);
    CHECK(d.virtualized(1).code() == "U2+ O2+");
    CHECK(d.virtualized(1).virtualized(2).chord_count() == 0);
}

TEST_CASE("descending and untwisted") {
    const LongDiagram d = LongDiagram::parse("U1+ O2- O1+ U2-");
    const LongDiagram desc = d.descending();
    for (int l : desc.labels()) CHECK(desc.crossing_type(l) == 0);
    const LongDiagram u = d.untwisted();
    CHECK(u.writhe(0) == 0);
    CHECK(u.writhe(1) == 0);
    // untwisting only appends kinks at the right end
    const auto& eps = u.endpoints();
    for (std::size_t i = 0; i < d.endpoints().size(); ++i)
        CHECK(eps[i] == d.endpoints()[i]);
}

TEST_CASE("canonical relabeling") {
    const LongDiagram d = LongDiagram::parse("O7- U3+ U7- O3+");
    CHECK(d.canonical().code() == "O1- U2+ U1- O2+");
    CHECK(d.canonical().canonical() == d.canonical());
}

TEST_CASE("product shifts labels") {
    const LongDiagram a = LongDiagram::parse("O1+ U1+");
    const LongDiagram b = LongDiagram::parse("O1- U2- U1- O2-");
    const LongDiagram p = product(a, b);
    CHECK(p.code() == "O1+ U1+ O2- U3- U2- O3-");
    CHECK(product(LongDiagram{}, b) == b);
    CHECK(product(a, LongDiagram{}) == a);
}

TEST_CASE("json round trip") {
    const LongDiagram d = LongDiagram::parse("O1+ U2- U1+ O2-");
    CHECK(LongDiagram::from_json(d.to_json()) == d);
    CHECK(LongDiagram::from_json(LongDiagram{}.to_json()) == LongDiagram{});
}

TEST_CASE("closure equality is cyclic") {
    const LongDiagram d = LongDiagram::parse("O1+ U2+ U1+ O2+");
    const ClosedDiagram c = closure(d);
    // rotate the endpoint list by hand
    auto eps = d.endpoints();
    std::rotate(eps.begin(), eps.begin() + 1, eps.end());
    CHECK(c == ClosedDiagram::from_endpoints(eps));
    CHECK(c.total_writhe() == 2);
    CHECK(closure(LongDiagram{}) == ClosedDiagram{});
    CHECK(c != closure(d.mirrored()));
}
