/**
 * @file test_laurent.cpp
 * @brief Laurent polynomial arithmetic, (q-1)-adic valuation and rendering.
 */
#include <doctest.h>

#include "qdual/errors.hpp"
#include "qdual/laurent.hpp"
#include "qdual/parse.hpp"

using namespace qdual;

TEST_SUITE("laurent") {
    TEST_CASE("rendering uses ascending exponents") {
        LaurentPoly a = LaurentPoly::monomial(Rational(-1, 2), -2) + LaurentPoly::q_power(1);
        CHECK(a.to_string() == "-1/2*q^-2 + q");
        CHECK(LaurentPoly().to_string() == "0");
        CHECK(parse_scalar("q - q^-1").to_string() == "-q^-1 + q");
    }

    TEST_CASE("ring operations") {
        const LaurentPoly q = LaurentPoly::q_power(1);
        const LaurentPoly qi = LaurentPoly::q_power(-1);
        CHECK(q * qi == LaurentPoly(1));
        CHECK((q + 1) * (q - 1) == q * q - 1);
        CHECK((q - q) .is_zero());
        CHECK(q.is_unit());
        CHECK(LaurentPoly::monomial(3, 5).is_unit());
        CHECK_FALSE((q + 1).is_unit());
        CHECK(q.pow(3) == LaurentPoly::q_power(3));
        CHECK(LaurentPoly::monomial(2, 3).unit_inverse() == LaurentPoly::monomial(Rational(1, 2), -3));
    }

    TEST_CASE("(q-1)-adic valuation and exact shifts") {
        const LaurentPoly q = LaurentPoly::q_power(1);
        CHECK(lp_q1_valuation(q - 1) == 1);
        CHECK(lp_q1_valuation(q * q - 2 * q + 1) == 2);
        CHECK(lp_q1_valuation(q - LaurentPoly::q_power(-1)) == 1);
        CHECK(lp_q1_valuation(q + 1) == 0);
        CHECK(lp_q1_valuation(LaurentPoly()) == kInfinity);
        CHECK(lp_shift_q1(q * q - 1, -1) == q + 1);
        CHECK(lp_shift_q1(LaurentPoly(1), 2) == LaurentPoly::h_power(2));
        CHECK_THROWS_AS(lp_shift_q1(q + 1, -1), NotDivisible);
        CHECK(lp_eval1(q * q + 3 * LaurentPoly::q_power(-4)) == Rational(4));
        auto [v, u] = lp_split_q1((q - 1) * (q - 1) * (q + 2));
        CHECK(v == 2);
        CHECK(u == q + 2);
    }

    TEST_CASE("valuation rendering") {
        CHECK(valuation_string(3) == "3");
        CHECK(valuation_string(kInfinity) == "inf");
    }
}
