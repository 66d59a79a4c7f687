/**
 * @file test_parse.cpp
 * @brief Expression grammar and presentation-file format.
 */
#include <doctest.h>

#include "qdual/catalog.hpp"
#include "qdual/errors.hpp"
#include "qdual/parse.hpp"

using namespace qdual;

namespace {

const char* kE2File = R"(algebra E2_file
class qfa
generators b, a, ainv
inverse a, ainv
relation a*b - q*b*a
relation ainv*b - q^-1*b*ainv
coproduct a = a @ a
coproduct ainv = ainv @ ainv
coproduct b = b @ ainv + a @ b
counit a = 1
counit ainv = 1
counit b = 0
antipode a = ainv
antipode ainv = a
antipode b = -q^-1*b   # S(b) = -a^-1 b a = -q^-1 b
lattice free: b^k a^m
)";

}  // namespace

TEST_SUITE("parse") {
    TEST_CASE("expressions normalize against the presentation") {
        const Presentation& p = catalog_get("Uq_sl2_hat").hat;
        CHECK(parse_element("E*F - F*E", p) == p.gen("Gamma"));
        CHECK(parse_element("1", p) == NcElement::one());
        TensorElement t = parse_expression("(q-1)*H @ E", p);
        CHECK(t.arity() == 2);
        CHECK(p.render(t) == "(-1 + q)*H @ E");
        CHECK(equal_in(parse_element("K^-1", p), p.gen("Kinv"), p));
        CHECK(parse_element("2/3*E # trailing comment", p) == LaurentPoly(Rational(2, 3)) * p.gen("E"));
    }

    TEST_CASE("precedence: ^ over * over @ over unary minus over + and -") {
        const Presentation& p = catalog_get("Uq_sl2_hat").hat;
        CHECK(parse_element("-E^2", p) == -parse_element("E*E", p));
        CHECK(parse_element("q^2*E - E", p) == (LaurentPoly::q_power(2) - 1) * p.gen("E"));
        CHECK(parse_expression("-E @ F", p) == -parse_expression("(E) @ (F)", p));
    }

    TEST_CASE("errors carry positions and types") {
        const Presentation& p = catalog_get("Uq_sl2_hat").hat;
        CHECK_THROWS_AS(parse_element("E +", p), ParseError);
        CHECK_THROWS_AS(parse_element("X", p), UnknownGenerator);
        CHECK_THROWS_AS(parse_expression("E @ F + E", p), ArityMismatch);
        try {
            parse_element("E * $", p);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
            CHECK(e.column == 5);
        }
    }

    TEST_CASE("presentation file loads and round-trips") {
        Presentation p = parse_presentation_file(kE2File);
        CHECK(p.name == "E2_file");
        CHECK(parse_element("a*b", p) == parse_element("q*b*a", p));
        Presentation again = parse_presentation_file(serialize_presentation(p));
        CHECK(serialize_presentation(again) == serialize_presentation(p));
    }

    TEST_CASE("catalog serialization round-trips") {
        for (const char* name : {"Fq_E2_hat", "Uq_sl2_hat", "Fq_SL3_hat", "Uq_hn_s_hat(2)"}) {
            const Presentation& p = catalog_get(name).hat;
            const std::string text = serialize_presentation(p);
            Presentation back = parse_presentation_file(text);
            CHECK(serialize_presentation(back) == text);
            CHECK(back.rules.size() == p.rules.size());
        }
    }

    TEST_CASE("incomplete Hopf data is rejected") {
        std::string text = kE2File;
        text.erase(text.find("antipode b"), std::string("antipode b = -q^-1*b   # S(b) = -a^-1 b a = -q^-1 b\n").size());
        CHECK_THROWS_AS(parse_presentation_file(text), ParseError);
    }

    TEST_CASE("a wrong antipode fails the Hopf check") {
        std::string text = kE2File;
        const std::string bad = "antipode b = -b";
        text.replace(text.find("antipode b = -q^-1*b"), std::string("antipode b = -q^-1*b").size(), bad);
        CHECK_THROWS_AS(parse_presentation_file(text), HopfCheckFailed);
    }
}
