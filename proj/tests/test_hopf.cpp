/**
 * @file test_hopf.cpp
 * @brief Hopf axioms on the catalog, iterated coproducts and Drinfeld's delta maps.
 */
#include <doctest.h>

#include "qdual/catalog.hpp"
#include "qdual/drinfeld.hpp"
#include "qdual/hopf.hpp"
#include "qdual/parse.hpp"

#include <string>

using namespace qdual;

namespace {

TensorElement power_tensor(const std::string& g, int n, const std::string& last, const Presentation& p) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (i ? " @ " : "") + g;
    if (!last.empty()) s += (n ? " @ " : "") + last;
    return parse_expression(s, p);
}

LaurentPoly h_pow(int k) { return LaurentPoly::h_power(k); }

}  // namespace

TEST_SUITE("hopf") {
    TEST_CASE("every quantum entry satisfies the Hopf axioms on generators") {
        for (const char* name : {"Uq_sl2_hat", "Uq_sl2_hat_sc", "Fq_SL2_hat", "Fq_SL3_hat", "Uq_e2_s_hat", "Uq_e2_a_hat",
                                 "Fq_E2_hat", "Fq_aE2_hat", "Uq_hn_s_hat(2)", "Uq_hn_a_hat(2)", "Fq_Hn_hat(2)"}) {
            INFO(name);
            CHECK(check_hopf(catalog_get(name).hat, 16).ok());
        }
    }

    TEST_CASE("iterated coproduct conventions") {
        const Presentation& p = catalog_get("Uq_sl2_hat").hat;
        const NcElement e = p.gen("E");
        CHECK(iterated_coproduct(e, 0, p).arity() == 0);
        CHECK(iterated_coproduct(e, 1, p) == TensorElement::from_element(e));
        CHECK(tensor_is_zero(iterated_coproduct(e, 3, p) - parse_expression("E @ 1 @ 1 + K @ E @ 1 + K @ K @ E", p), p));
        CHECK(iterated_coproduct(p.gen("K"), 0, p).scalar_value() == LaurentPoly(1));
    }

    TEST_CASE("delta_n of E and H in Uq_sl2_hat") {
        const Presentation& p = catalog_get("Uq_sl2_hat").hat;
        for (int n = 1; n <= 5; ++n) {
            CAPTURE(n);
            CHECK(tensor_is_zero(delta_n(p.gen("E"), n, p) - h_pow(n - 1) * power_tensor("H", n - 1, "E", p), p));
            CHECK(tensor_is_zero(delta_n(p.gen("H"), n, p) - h_pow(n - 1) * power_tensor("H", n, "", p), p));
        }
    }

    TEST_CASE("delta_n of D+ and D- in Uq_e2_s_hat") {
        const Presentation& p = catalog_get("Uq_e2_s_hat").hat;
        for (const char* g : {"Dp", "Dm"})
            for (int n = 1; n <= 5; ++n) {
                CAPTURE(n);
                CHECK(tensor_is_zero(delta_n(p.gen(g), n, p) - h_pow(n - 1) * power_tensor(g, n, "", p), p));
            }
    }

    TEST_CASE("delta_m of (q-1)H in the tilde of Fq_Hn_hat") {
        for (int n = 1; n <= 3; ++n) {
            const CatalogEntry& e = catalog_get("Fq_Hn_hat(" + std::to_string(n) + ")");
            const Presentation& t = tilde_of(e);
            const NcElement hdot = h_pow(1) * t.gen("H");
            std::string sum;
            for (int i = 1; i <= n; ++i) sum += (i > 1 ? " + " : "") + std::string("E") + std::to_string(i) + " @ F" + std::to_string(i);
            CHECK(tensor_is_zero(delta_n(hdot, 2, t) - h_pow(2) * parse_expression(sum, t), t));
            for (int m = 3; m <= 5; ++m) CHECK(delta_n(hdot, m, t).is_zero());
        }
    }

    TEST_CASE("delta_n agrees with inclusion-exclusion") {
        for (const char* name : {"Uq_sl2_hat", "Fq_SL2_hat", "Uq_e2_a_hat", "Fq_aE2_hat", "Uq_hn_s_hat(1)"}) {
            const Presentation& p = catalog_get(name).hat;
            for (int g = 0; g < p.size(); ++g)
                for (int n = 0; n <= 4; ++n) {
                    const NcElement x = NcElement::monomial(p.letter(g));
                    CHECK(tensor_is_zero(delta_n(x, n, p) - delta_via_subsets(x, n, p), p));
                }
        }
    }

    TEST_CASE("structure maps are algebra maps on products") {
        const Presentation& p = catalog_get("Fq_SL2_hat").hat;
        const NcElement x = parse_element("a*b + q*c*d", p), y = parse_element("d - b*c", p);
        CHECK(tensor_is_zero(apply_coproduct(multiply(x, y, p), p) -
                                 tensor_multiply(apply_coproduct(x, p), apply_coproduct(y, p), p), p));
        CHECK(apply_counit(multiply(x, y, p), p) == apply_counit(x, p) * apply_counit(y, p));
        CHECK(is_zero(apply_antipode(multiply(x, y, p), p) - multiply(apply_antipode(y, p), apply_antipode(x, p), p), p));
    }
}
