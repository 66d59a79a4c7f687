/**
 * @file acceptance.cpp
 * @brief Acceptance driver: one PASS/FAIL line per criterion, with timing and
 *        the reason for each failure.  Exit status is the number of failures.
 */
#include "qdual/catalog.hpp"
#include "qdual/classical.hpp"
#include "qdual/drinfeld.hpp"
#include "qdual/errors.hpp"
#include "qdual/hopf.hpp"
#include "qdual/parse.hpp"
#include "qdual/tensor.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qdual;

namespace {

const std::vector<std::string> kSingles = {"Uq_sl2_hat", "Uq_sl2_hat_sc", "Fq_SL2_hat", "Fq_SL3_hat",
                                           "Uq_e2_s_hat", "Uq_e2_a_hat", "Fq_E2_hat", "Fq_aE2_hat"};
const std::vector<std::string> kFamilies = {"Uq_hn_s_hat", "Uq_hn_a_hat", "Fq_Hn_hat"};

std::vector<std::string> entries(int n_lo, int n_hi) {
    std::vector<std::string> out = kSingles;
    for (const std::string& f : kFamilies)
        for (int n = n_lo; n <= n_hi; ++n) out.push_back(f + "(" + std::to_string(n) + ")");
    return out;
}

bool is_quea(const CatalogEntry& e) { return e.hat.classification == Classification::QUEA; }

/// Collects failure reasons for one criterion.
struct Outcome {
    std::vector<std::string> failures;
    std::string note;
    void fail(const std::string& what) { failures.push_back(what); }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    void report(const std::string& where, const Report& r) {
        for (const CheckEntry& c : r.entries)
            if (!c.passed) fail(where + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
};

LaurentPoly h_pow(int k) { return LaurentPoly::h_power(k); }

TensorElement power_tensor(const std::string& g, int n, const std::string& last, const Presentation& p) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (i ? " @ " : "") + g;
    if (!last.empty()) s += (n ? " @ " : "") + last;
    return parse_expression(s, p);
}

void hopf_suite(Outcome& o) {
    for (const std::string& name : entries(1, 3)) o.report(name, check_hopf(catalog_get(name).hat, 64));
}

void delta_formulas(Outcome& o) {
    const Presentation& u = catalog_get("Uq_sl2_hat").hat;
    for (int n = 1; n <= 5; ++n) {
        o.expect(tensor_is_zero(delta_n(u.gen("E"), n, u) - h_pow(n - 1) * power_tensor("H", n - 1, "E", u), u),
                 "delta_" + std::to_string(n) + "(E)");
        o.expect(tensor_is_zero(delta_n(u.gen("H"), n, u) - h_pow(n - 1) * power_tensor("H", n, "", u), u),
                 "delta_" + std::to_string(n) + "(H)");
    }
    const Presentation& e2 = catalog_get("Uq_e2_s_hat").hat;
    for (const char* g : {"Dp", "Dm"})
        for (int n = 1; n <= 5; ++n)
            o.expect(tensor_is_zero(delta_n(e2.gen(g), n, e2) - h_pow(n - 1) * power_tensor(g, n, "", e2), e2),
                     "delta_" + std::to_string(n) + "(" + g + ")");
    for (int n = 1; n <= 3; ++n) {
        const Presentation& t = tilde_of(catalog_get("Fq_Hn_hat(" + std::to_string(n) + ")"));
        const NcElement hdot = h_pow(1) * t.gen("H");
        std::string sum;
        for (int i = 1; i <= n; ++i) sum += (i > 1 ? " + " : "") + std::string("E") + std::to_string(i) + " @ F" + std::to_string(i);
        o.expect(tensor_is_zero(delta_n(hdot, 2, t) - h_pow(2) * parse_expression(sum, t), t),
                 "delta_2(Hdot) in H_" + std::to_string(n));
        for (int m = 3; m <= 5; ++m)
            o.expect(delta_n(hdot, m, t).is_zero(), "delta_" + std::to_string(m) + "(Hdot) in H_" + std::to_string(n));
    }
}

void membership(Outcome& o) {
    int inconclusive = 0;
    for (const std::string& name : entries(1, 3)) {
        const CatalogEntry& e = catalog_get(name);
        if (!is_quea(e)) continue;
        for (const TildeImage& t : e.tilde_images) {
            const NcElement x = h_pow(t.shift) * parse_element(t.expr, e.hat);
            const MembershipVerdict v = tilde_member(x, e.hat, 4, t.generator);
            if (v.verdict == Verdict::Inconclusive) ++inconclusive;
            o.expect(v.verdict == Verdict::MemberUpToBound,
                     name + ": " + t.generator + " is " + verdict_name(v.verdict) + (v.note.empty() ? "" : " - " + v.note));
        }
        for (const std::string& g : e.excluded) {
            if (g != "E" && g != "F" && g.rfind("E", 0) != 0 && g.rfind("F", 0) != 0) continue;
            const MembershipVerdict v = tilde_member(e.hat.gen(g), e.hat, 3, g);
            o.expect(v.verdict == Verdict::NotMember && v.witness >= 1 && v.witness <= 3,
                     name + ": " + g + " is " + verdict_name(v.verdict));
        }
    }
    if (inconclusive)
        o.note = std::to_string(inconclusive) +
                 " declared generators stay INCONCLUSIVE: every tested n satisfies the bound, "
                 "but the valuation margin has not stabilized by n = 4";
}

void tilde_presentations(Outcome& o) {
    for (const std::string& name : entries(1, 3)) {
        const CatalogEntry& e = catalog_get(name);
        try {
            o.report(name, verify_tilde_images(e, tilde_of(e)));
        } catch (const Error& ex) {
            o.fail(name + ": " + ex.what());
        }
    }
}

void double_tilde(Outcome& o) {
    for (const std::string& name : entries(1, 3)) o.report(name, double_tilde_check(catalog_get(name), 3));
}

void generator_maps(Outcome& o) {
    for (const std::string& name : entries(1, 3)) {
        const CatalogEntry& e = catalog_get(name);
        if (!e.limit_map) continue;
        o.report(name, check_generator_map(tilde_of(e), *e.limit_map));
    }
    // The two identities singled out: {Ed, Fd} -> (z^2 - z^-2)/2 and Hp -> e@f - f@e.
    const Presentation& us = tilde_of(catalog_get("Uq_sl2_hat"));
    const Presentation& sl2star = catalog_classical("F_sSL2star");
    const NcElement br = map_element(poisson_bracket(us.gen("Ed"), us.gen("Fd"), us),
                                     [&] {
                                         std::vector<NcElement> imgs;
                                         for (const auto& [g, x] : catalog_get("Uq_sl2_hat").limit_map->images)
                                             imgs.push_back(parse_element(x, sl2star));
                                         return imgs;
                                     }(),
                                     sl2star);
    o.expect(equal_in(br, parse_element("1/2*z^2 - 1/2*zinv^2", sl2star), sl2star), "{Ed, Fd} -> (z^2 - z^-2)/2");
    const Presentation& fs = tilde_of(catalog_get("Fq_SL2_hat"));
    const Presentation& usl2 = catalog_classical("U_sl2star");
    std::vector<NcElement> imgs;
    for (const auto& [g, x] : catalog_get("Fq_SL2_hat").limit_map->images) imgs.push_back(parse_element(x, usl2));
    const TensorElement cb = map_tensor(co_poisson_cobracket(fs.gen("Hp"), fs), imgs, usl2);
    o.expect(tensor_is_zero(cb - parse_expression("e @ f - f @ e", usl2), usl2), "cobracket(Hp) -> e@f - f@e");
}

void delta_oracle(Outcome& o) {
    for (const std::string& name : entries(1, 3)) {
        const Presentation& p = catalog_get(name).hat;
        for (int g = 0; g < p.size(); ++g) {
            const NcElement x = NcElement::monomial(p.letter(g));
            for (int n = 1; n <= 4; ++n)
                o.expect(tensor_is_zero(delta_n(x, n, p) - delta_via_subsets(x, n, p), p),
                         name + ": delta_" + std::to_string(n) + "(" + p.generators[static_cast<size_t>(g)].name + ")");
        }
    }
}

void rewriting(Outcome& o) {
    for (const std::string& name : entries(1, 3)) o.report(name, overlap_check(catalog_get(name).hat, 64));
    std::string text = serialize_presentation(catalog_get("Fq_SL2_hat").hat);
    const std::string good = "a*b - q*b*a", bad = "a*b - q^2*b*a";
    const size_t at = text.find(good);
    if (at == std::string::npos) {
        o.fail("negative control: relation a*b - q*b*a not found");
        return;
    }
    text.replace(at, good.size(), bad);
    try {
        const Presentation corrupted = parse_presentation_file(text, false);
        o.expect(!overlap_check(corrupted, 64).ok(), "negative control: corrupted presentation passed overlap_check");
    } catch (const Error&) {
        // Rejected while loading: the control is caught either way.
    }
}

void limit_structure(Outcome& o) {
    for (const std::string& name : entries(1, 2)) {
        const CatalogEntry& e = catalog_get(name);
        for (const Presentation* p : {&e.hat, &tilde_of(e)}) {
            try {
                const bool poisson = limit_marker(*p) == LimitMarker::Poisson;
                o.report(p->name, poisson ? poisson_properties(*p) : copoisson_properties(*p));
            } catch (const Error& ex) {
                o.fail(p->name + ": " + ex.what());
            }
        }
    }
    o.note = "families checked for n <= 2";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"Hopf axioms on all quantum entries", hopf_suite},
        {"delta_n formulas", delta_formulas},
        {"membership verdicts", membership},
        {"tilde presentations", tilde_presentations},
        {"double tilde", double_tilde},
        {"specialization maps", generator_maps},
        {"delta_n vs inclusion-exclusion", delta_oracle},
        {"rewriting overlaps and negative control", rewriting},
        {"Poisson / co-Poisson limit structure", limit_structure},
    };
    int failed = 0, index = 0;
    for (const auto& [title, run] : criteria) {
        ++index;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > 60) o.fail("took longer than 60 s");
        const bool ok = o.failures.empty();
        failed += !ok;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (ok ? "PASS" : "FAIL") << " " << index << " " << title << " (" << secs << " s)";
        if (!o.note.empty()) line << " [" << o.note << "]";
        std::cout << line.str() << "\n";
        for (size_t i = 0; i < o.failures.size() && i < 12; ++i) std::cout << "    " << o.failures[i] << "\n";
        if (o.failures.size() > 12) std::cout << "    ... " << o.failures.size() - 12 << " more\n";
        std::cout.flush();
    }
    return failed;
}
