#include <doctest.h>

#include <stdexcept>

#include "vknot/laurent.hpp"

using vknot::Coeff;
using vknot::LaurentPoly;

TEST_CASE("canonical form drops zero coefficients") {
    const LaurentPoly p{{2, 1}, {1, 0}, {0, -1}};
    CHECK(p.terms().size() == 2);
    CHECK(p.coeff(1) == 0);
    CHECK(LaurentPoly::t_power_minus_one(0).is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("arithmetic") {
    const LaurentPoly a{{1, 1}, {0, -1}};   // t - 1
    const LaurentPoly b{{1, 1}, {0, 1}};    // t + 1
    CHECK(a * b == LaurentPoly{{2, 1}, {0, -1}});
    CHECK(a + b == LaurentPoly{{1, 2}});
    CHECK(-a == LaurentPoly{{0, 1}, {1, -1}});
    CHECK(a.scaled(3) == LaurentPoly{{1, 3}, {0, -3}});
    CHECK(a.scaled(0).is_zero());
    LaurentPoly c = a;
    c += b;
    c -= a;
    CHECK(c == b);
    CHECK(LaurentPoly{} * a == LaurentPoly{});
}

TEST_CASE("exponent bounds and evaluation") {
    const LaurentPoly p{{3, 2}, {-2, 5}};
    CHECK(p.max_exponent() == 3);
    CHECK(p.min_exponent() == -2);
    CHECK(!LaurentPoly{}.max_exponent().has_value());
    CHECK(p.eval_at_one() == 7);
}

TEST_CASE("variable inversion and reciprocity") {
    const LaurentPoly p{{2, 1}, {0, -3}, {-2, 1}};
    CHECK(p.invert_var() == p);
    CHECK(p.is_reciprocal());
    const LaurentPoly q{{1, 1}, {0, -1}};
    CHECK(q.invert_var() == LaurentPoly{{-1, 1}, {0, -1}});
    CHECK(!q.is_reciprocal());
}

TEST_CASE("derivative values at t = 1") {
    // p = t^2 - 2t + 1: p'(1) = 0, p''(1) = 2.
    const LaurentPoly p{{2, 1}, {1, -2}, {0, 1}};
    CHECK(p.derivative_at_one(1) == 0);
    CHECK(p.derivative_at_one(2) == 2);
    const LaurentPoly q{{-1, 1}, {0, -1}};  // t^-1 - 1
    CHECK(q.derivative_at_one(1) == -1);
    CHECK(q.derivative_at_one(2) == 2);
    CHECK_THROWS_AS(p.derivative_at_one(3), std::invalid_argument);
}

TEST_CASE("rendering") {
    const LaurentPoly p{{2, 1}, {1, -2}, {0, 1}};
    CHECK(p.str() == "t^2 - 2*t + 1");
    CHECK(p.latex() == "t^{2}-2t+1");
    CHECK(LaurentPoly{}.str() == "0");
    const LaurentPoly q{{1, -2}, {0, 3}, {-1, 1}, {-2, -2}};
    CHECK(q.str() == "-2*t + 3 + t^-1 - 2*t^-2");
}

TEST_CASE("big coefficients stay exact") {
    LaurentPoly p = LaurentPoly::one();
    for (int i = 0; i < 40; ++i) p = p.scaled(10);
    Coeff expected(1);
    for (int i = 0; i < 40; ++i) expected *= 10;
    CHECK(p.coeff(0) == expected);
}

TEST_CASE("exponent overflow in products is refused") {
    const LaurentPoly big = LaurentPoly::monomial(1 << 30, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
