/**
 * @file test_classical.cpp
 * @brief Semiclassical limits: brackets, cobrackets, generator maps and the
 *        Poisson / co-Poisson property suites.
 */
#include <doctest.h>

#include "qdual/catalog.hpp"
#include "qdual/classical.hpp"
#include "qdual/drinfeld.hpp"
#include "qdual/errors.hpp"
#include "qdual/hopf.hpp"
#include "qdual/parse.hpp"
#include "qdual/tensor.hpp"

using namespace qdual;

TEST_SUITE("classical") {
    TEST_CASE("brackets in the tilde of Uq_sl2_hat") {
        const Presentation& t = tilde_of(catalog_get("Uq_sl2_hat"));
        const NcElement ed = t.gen("Ed"), fd = t.gen("Fd");
        // {Ed, Fd} is Gammad at q = 1.
        CHECK(zero_at_one(poisson_bracket(ed, fd, t) - t.gen("Gammad"), t));
        // {K, Ed} = 2 Ed K at q = 1.
        CHECK(zero_at_one(poisson_bracket(t.gen("K"), ed, t) - LaurentPoly(2) * multiply(ed, t.gen("K"), t), t));
        CHECK(poisson_bracket(ed, ed, t).is_zero());
    }

    TEST_CASE("cobrackets") {
        const Presentation& t = tilde_of(catalog_get("Fq_Hn_hat(2)"));
        CHECK(co_poisson_cobracket(t.gen("E1"), t).is_zero());
        CHECK(co_poisson_cobracket(NcElement::one(), t).is_zero());
        const Presentation& s = tilde_of(catalog_get("Fq_SL2_hat"));
        CHECK(zero_at_one(co_poisson_cobracket(s.gen("Hp"), s) - parse_expression("E @ F - F @ E", s), s));
    }

    TEST_CASE("specialize picks the limit kind and rejects the wrong one") {
        const Presentation& f = catalog_get("Fq_SL2_hat").hat;
        PoissonPresentation lim = specialize(f);
        CHECK(lim.marker == LimitMarker::Poisson);
        CHECK(lim.bracket.size() == 5);
        CHECK_THROWS_AS(specialize(f, LimitMarker::CoPoisson), NotCocommutativeAtLimit);
        const Presentation& u = catalog_get("Uq_sl2_hat").hat;
        CHECK(specialize(u).marker == LimitMarker::CoPoisson);
        CHECK_THROWS_AS(specialize(u, LimitMarker::Poisson), NotCommutativeAtLimit);
        CHECK(render_limit_table(f, lim).find("POISSON") != std::string::npos);
    }

    TEST_CASE("classical tables extend by the Leibniz rules") {
        const Presentation& t = catalog_classical("F_sSL2star");
        const NcElement xz = parse_element("x*z", t), ziy = parse_element("zinv*y", t);
        CHECK(equal_in(classical_bracket(xz, ziy, t), parse_element("1/2*z^2 - 1/2*zinv^2", t), t));
        const Presentation& u = catalog_classical("U_sl2star");
        CHECK(tensor_is_zero(classical_cobracket(u.gen("h"), u) - parse_expression("e @ f - f @ e", u), u));
    }

    TEST_CASE("generator maps of every entry with a known limit") {
        for (const char* name : {"Uq_sl2_hat", "Uq_sl2_hat_sc", "Fq_SL2_hat", "Uq_e2_s_hat", "Uq_e2_a_hat", "Fq_E2_hat",
                                 "Fq_aE2_hat", "Uq_hn_s_hat(2)", "Uq_hn_a_hat(2)", "Fq_Hn_hat(2)"}) {
            const CatalogEntry& e = catalog_get(name);
            REQUIRE(e.limit_map.has_value());
            INFO(name);
            CHECK(check_generator_map(tilde_of(e), *e.limit_map).ok());
        }
    }

    TEST_CASE("a wrong image is caught by the generator map check") {
        const CatalogEntry& e = catalog_get("Fq_SL2_hat");
        GeneratorMap m = *e.limit_map;
        for (auto& [g, img] : m.images)
            if (g == "Hp") img = "2*h";
        CHECK_FALSE(check_generator_map(tilde_of(e), m).ok());
    }

    TEST_CASE("property suites on small entries") {
        CHECK(poisson_properties(catalog_get("Fq_SL2_hat").hat).ok());
        CHECK(poisson_properties(tilde_of(catalog_get("Uq_e2_s_hat"))).ok());
        CHECK(copoisson_properties(catalog_get("Uq_e2_a_hat").hat).ok());
        CHECK(copoisson_properties(tilde_of(catalog_get("Fq_E2_hat"))).ok());
    }
}
