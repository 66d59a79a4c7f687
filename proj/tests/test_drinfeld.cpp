/**
 * @file test_drinfeld.cpp
 * @brief Lattice valuations, the bounded membership test, tilde presentations
 *        and the double-tilde identities.
 */
#include <doctest.h>

#include "qdual/catalog.hpp"
#include "qdual/drinfeld.hpp"
#include "qdual/errors.hpp"
#include "qdual/parse.hpp"

using namespace qdual;

namespace {

MembershipVerdict member(const char* entry, const char* expr, int n_max = 4) {
    const Presentation& p = catalog_get(entry).hat;
    return tilde_member(parse_element(expr, p), p, n_max, expr);
}

}  // namespace

TEST_SUITE("drinfeld") {
    TEST_CASE("lattice valuation on a spanning lattice") {
        const Presentation& p = catalog_get("Uq_sl2_hat").hat;
        auto v = [&](const char* s) { return lattice_valuation(parse_element(s, p), p); };
        CHECK(v("K - 1") == 1);
        CHECK(v("K - Kinv") == 1);
        CHECK(v("Gamma") == 0);
        CHECK(v("(q-1)^2*E*F") == 2);
        CHECK(v("0") == kInfinity);
        CHECK(v("K") == 0);
        CHECK(window_slack() >= 0);
    }

    TEST_CASE("lattice valuation on free lattices is the coefficient valuation") {
        const Presentation& p = catalog_get("Fq_SL2_hat").hat;
        CHECK(lattice_valuation(parse_element("(q-1)*b*c + (q^2-1)*a", p), p) == 1);
        CHECK(lattice_valuation(parse_element("b", p), p) == 0);
    }

    TEST_CASE("quotients at q = 1") {
        const Presentation& p = catalog_get("Uq_sl2_hat").hat;
        const NcElement h = lattice_quotient_at_one(parse_element("K - 1", p), 1, p);
        CHECK(zero_at_one(h - p.gen("H"), p));
        CHECK_THROWS_AS(lattice_quotient_at_one(parse_element("K - 1", p), 2, p), NotDivisible);
        CHECK(zero_at_one(parse_element("K - 1", p), p));
        CHECK_FALSE(zero_at_one(parse_element("E", p), p));
    }

    TEST_CASE("membership: unscaled generators are excluded with a small witness") {
        for (auto [entry, g] : {std::pair{"Uq_sl2_hat", "E"}, std::pair{"Uq_sl2_hat", "F"}, std::pair{"Uq_e2_s_hat", "E"},
                                std::pair{"Uq_e2_a_hat", "F"}, std::pair{"Uq_hn_s_hat(2)", "E2"}, std::pair{"Uq_hn_a_hat(1)", "F1"}}) {
            MembershipVerdict m = member(entry, g);
            INFO(entry, " ", g);
            CHECK(m.verdict == Verdict::NotMember);
            CHECK(m.witness >= 1);
            CHECK(m.witness <= 3);
        }
    }

    TEST_CASE("membership: rescaled generators and grouplikes pass") {
        CHECK(member("Uq_sl2_hat", "(q-1)*E").verdict == Verdict::MemberUpToBound);
        CHECK(member("Uq_sl2_hat", "(q-1)*H").verdict == Verdict::MemberUpToBound);
        CHECK(member("Uq_sl2_hat", "K").verdict == Verdict::MemberUpToBound);
        CHECK(member("Uq_sl2_hat", "1").verdict == Verdict::MemberUpToBound);
        CHECK(member("Uq_e2_s_hat", "(q-1)*F").verdict == Verdict::MemberUpToBound);
        const MembershipVerdict m = member("Uq_sl2_hat", "(q-1)*E", 3);
        REQUIRE(m.profile.size() == 3);
        CHECK(m.profile[0].second == 1);
        CHECK(m.profile[2].second == 3);
    }

    TEST_CASE("tilde presentations verify by substitution") {
        for (const char* name : {"Uq_sl2_hat", "Uq_sl2_hat_sc", "Fq_SL2_hat", "Fq_SL3_hat", "Uq_e2_s_hat", "Uq_e2_a_hat",
                                 "Fq_E2_hat", "Fq_aE2_hat", "Uq_hn_s_hat(2)", "Uq_hn_a_hat(2)", "Fq_Hn_hat(2)"}) {
            const CatalogEntry& e = catalog_get(name);
            INFO(name);
            CHECK(verify_tilde_images(e, tilde_of(e)).ok());
        }
        CHECK_THROWS_AS(tilde_presentation(catalog_get("Fq_SL2_hat")), VerificationFailed);
        CHECK_THROWS_AS(tilde_F_presentation(catalog_get("Uq_sl2_hat")), VerificationFailed);
    }

    TEST_CASE("double tilde regenerates the hat algebras") {
        for (const char* name : {"Uq_sl2_hat", "Fq_SL2_hat", "Uq_e2_s_hat", "Uq_e2_a_hat", "Fq_E2_hat", "Fq_aE2_hat",
                                 "Uq_hn_s_hat(1)", "Uq_hn_a_hat(1)", "Fq_Hn_hat(2)"}) {
            INFO(name);
            CHECK(double_tilde_check(catalog_get(name), 3).ok());
        }
    }

    TEST_CASE("the derived SL3 tilde presentation is a QUEA") {
        const Presentation& t = tilde_F_presentation(catalog_get("Fq_SL3_hat"));
        CHECK(t.classification == Classification::QUEA);
        CHECK(t.size() == 9);
    }
}
