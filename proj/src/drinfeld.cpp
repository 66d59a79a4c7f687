/**
 * @file drinfeld.cpp
 * @brief Membership profiles, tilde presentations and the double-tilde check.
 */
#include "qdual/drinfeld.hpp"

#include "qdual/errors.hpp"
#include "qdual/hopf.hpp"
#include "qdual/parse.hpp"
#include "qdual/tensor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qdual {

std::vector<std::pair<int, Valuation>> valuation_profile(const NcElement& x, const Presentation& p, int n_max) {
    std::vector<std::pair<int, Valuation>> out;
    NcElement n = normal_form(x, p);
    for (int k = 1; k <= n_max; ++k) {
        TensorElement d = delta_n(n, k, p);
        Valuation v = lattice_valuation(d, p);
        out.emplace_back(k, v);
        // delta_k = 0 forces delta_m = 0 for m > k.
        if (v == kInfinity && tensor_is_zero(d, p)) {
            for (int m = k + 1; m <= n_max; ++m) out.emplace_back(m, kInfinity);
            break;
        }
    }
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::MemberUpToBound: return "MEMBER-UP-TO-BOUND";
        case Verdict::NotMember: return "NOT-MEMBER";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

MembershipVerdict tilde_member(const NcElement& x, const Presentation& p, int n_max, const std::string& description) {
    MembershipVerdict m;
    m.element = description.empty() ? p.render(normal_form(x, p)) : description;
    m.max_n = n_max;
    m.profile = valuation_profile(x, p, n_max);
    for (const auto& [n, v] : m.profile)
        if (v < n) {
            m.verdict = Verdict::NotMember;
            m.witness = n;
            m.note = "valuation of delta_" + std::to_string(n) + " is " + valuation_string(v) + " < " + std::to_string(n);
            return m;
        }
    for (const auto& [n, v] : m.profile)
        if (v == kInfinity) {
            m.verdict = Verdict::MemberUpToBound;
            m.note = "delta_n vanishes from n = " + std::to_string(n) + "; tested up to n = " + std::to_string(n_max);
            return m;
        }
    size_t k = std::min<size_t>(3, m.profile.size());
    bool monotone = k > 0;
    for (size_t i = m.profile.size() - k + 1; i < m.profile.size(); ++i) {
        Valuation prev = m.profile[i - 1].second - m.profile[i - 1].first;
        Valuation cur = m.profile[i].second - m.profile[i].first;
        if (cur < prev) monotone = false;
    }
    if (monotone) {
        m.verdict = Verdict::MemberUpToBound;
        m.note = "margin valuation - n non-decreasing over the last " + std::to_string(k) + " tested n; bounded test up to n = " +
                 std::to_string(n_max);
    } else {
        m.verdict = Verdict::Inconclusive;
        m.note = "all tested n pass but the margin is not yet stable";
    }
    return m;
}

// ---------------------------------------------------------------- substitution

namespace {

struct TildeMap {
    std::vector<NcElement> images;  ///< per tilde generator, in the hat algebra
    std::vector<int> shifts;
};

TildeMap tilde_map(const CatalogEntry& e, const Presentation& tilde) {
    TildeMap m;
    m.images.resize(static_cast<size_t>(tilde.size()));
    m.shifts.assign(static_cast<size_t>(tilde.size()), 0);
    std::vector<bool> seen(static_cast<size_t>(tilde.size()), false);
    for (const TildeImage& t : e.tilde_images) {
        int g = tilde.generator_index(t.generator);
        if (g < 0) throw VerificationFailed("tilde image for unknown generator " + t.generator);
        m.images[static_cast<size_t>(g)] = parse_element(t.expr, e.hat);
        m.shifts[static_cast<size_t>(g)] = t.shift;
        seen[static_cast<size_t>(g)] = true;
    }
    for (int g = 0; g < tilde.size(); ++g)
        if (!seen[static_cast<size_t>(g)])
            throw VerificationFailed("no declared rescaling for tilde generator " + tilde.generators[static_cast<size_t>(g)].name);
    return m;
}

// Σ c (q-1)^(shift - m) images, with m the least shift; returns m through `least`.
TensorElement substitute(const TensorElement& x, const TildeMap& tm, const Presentation& hat, int* least) {
    std::map<Word, NcElement> word_cache;
    auto image_of = [&](const Word& w) -> const NcElement& {
        auto it = word_cache.find(w);
        if (it != word_cache.end()) return it->second;
        NcElement v = NcElement::one();
        for (char ch : w) v = multiply(v, tm.images[static_cast<unsigned char>(ch)], hat);
        return word_cache.emplace(w, v).first->second;
    };
    auto shift_of = [&](const WordTuple& t) {
        int s = 0;
        for (const Word& w : t)
            for (char ch : w) s += tm.shifts[static_cast<unsigned char>(ch)];
        return s;
    };
    int m = 0;
    bool first = true;
    for (const auto& [t, c] : x.terms()) {
        int s = shift_of(t);
        m = first ? s : std::min(m, s);
        first = false;
    }
    TensorElement out(x.arity());
    for (const auto& [t, c] : x.terms()) {
        std::vector<NcElement> slots;
        for (const Word& w : t) slots.push_back(image_of(w));
        TensorElement term = x.arity() == 0 ? TensorElement::scalar(1) : tensor_of(slots);
        out += (c * LaurentPoly::h_power(shift_of(t) - m)) * term;
    }
    *least = m;
    return tensor_normal_form(out, hat);
}

// Checks (q-1)^a A = (q-1)^b B in the hat algebra.
bool equal_shifted(const TensorElement& a, int sa, const TensorElement& b, int sb, const Presentation& hat) {
    int m = std::min(sa, sb);
    return tensor_is_zero(shift_q1(a, sa - m) - shift_q1(b, sb - m), hat);
}

Presentation parse_checked(const std::string& text) { return parse_presentation_file(text, true); }

}  // namespace

NcElement tilde_to_hat(const CatalogEntry& e, const Presentation& tilde, const NcElement& x, int* clear) {
    TildeMap tm = tilde_map(e, tilde);
    int m = 0;
    TensorElement t = substitute(TensorElement::from_element(x), tm, e.hat, &m);
    *clear = std::max(0, -m);
    return shift_q1(t, m + *clear).as_element();
}

Report verify_tilde_images(const CatalogEntry& e, const Presentation& tilde) {
    Report r;
    r.title = "substitution of " + tilde.name + " into " + e.hat.name;
    TildeMap tm = tilde_map(e, tilde);
    const Presentation& hat = e.hat;
    for (size_t i = 0; i < tilde.relations.size(); ++i) {
        int m = 0;
        TensorElement s = substitute(TensorElement::from_element(tilde.relations[i]), tm, hat, &m);
        r.add("relation " + tilde.render(tilde.relations[i]), tensor_is_zero(s, hat));
    }
    for (int g = 0; g < tilde.size(); ++g) {
        const size_t gi = static_cast<size_t>(g);
        const std::string& name = tilde.generators[gi].name;
        const int sg = tm.shifts[gi];
        const NcElement& P = tm.images[gi];
        int m = 0;
        TensorElement rhs = substitute(tilde.hopf.coproduct[gi], tm, hat, &m);
        r.add("coproduct " + name, equal_shifted(apply_coproduct(P, hat), sg, rhs, m, hat));
        TensorElement cou = TensorElement::scalar(tilde.hopf.counit[gi]);
        r.add("counit " + name, equal_shifted(TensorElement::scalar(apply_counit(P, hat)), sg, cou, 0, hat));
        TensorElement ant = substitute(TensorElement::from_element(tilde.hopf.antipode[gi]), tm, hat, &m);
        r.add("antipode " + name, equal_shifted(TensorElement::from_element(apply_antipode(P, hat)), sg, ant, m, hat));
    }
    return r;
}

// ---------------------------------------------------------------- derived F~ presentations

namespace {

// Free (unnormalized) substitution of generator images into words.
NcElement substitute_free(const NcElement& x, const std::vector<NcElement>& images) {
    NcElement out;
    for (const auto& [w, c] : x.terms()) {
        NcElement v = NcElement::one();
        for (char ch : w) v = concat(v, images[static_cast<unsigned char>(ch)]);
        out += c * v;
    }
    return out;
}

TensorElement substitute_free(const TensorElement& x, const std::vector<NcElement>& images) {
    TensorElement out(x.arity());
    for (const auto& [t, c] : x.terms()) {
        std::vector<NcElement> slots;
        for (const Word& w : t) slots.push_back(substitute_free(NcElement::monomial(w), images));
        out += c * tensor_of(slots);
    }
    return out;
}

NcElement divide_h(const NcElement& x, const std::string& what) {
    Valuation v = x.coeff_valuation();
    if (v == kInfinity) return x;
    if (v < 1) throw VerificationFailed("derived tilde datum is not divisible by (q-1): " + what);
    return shift_q1(x, -1);
}

}  // namespace

std::string derive_tilde_F_text(const CatalogEntry& e) {
    const Presentation& hat = e.hat;
    // Tilde generator of each hat generator: images are (g - counit(g)) / (q-1).
    std::vector<std::string> names(static_cast<size_t>(hat.size()));
    for (const TildeImage& t : e.tilde_images) {
        if (t.shift != -1) throw VerificationFailed("derived tilde presentations need shift -1 images");
        NcElement img = parse_element(t.expr, hat);
        int found = -1;
        for (const auto& [w, c] : img.terms())
            if (w.size() == 1) found = static_cast<unsigned char>(w[0]);
        if (found < 0) throw VerificationFailed("tilde image of " + t.generator + " is not an augmented generator");
        names[static_cast<size_t>(found)] = t.generator;
    }
    Presentation free;
    for (int g = 0; g < hat.size(); ++g) {
        if (names[static_cast<size_t>(g)].empty())
            throw VerificationFailed("hat generator " + hat.generators[static_cast<size_t>(g)].name + " has no tilde generator");
        Generator gen;
        gen.name = names[static_cast<size_t>(g)];
        gen.pbw_index = g;
        free.generators.push_back(gen);
    }
    free.build();
    // rho = counit(rho) + (q-1) r
    std::vector<NcElement> images;
    for (int g = 0; g < hat.size(); ++g)
        images.push_back(NcElement::scalar(hat.hopf.counit[static_cast<size_t>(g)]) +
                         NcElement::monomial(free.letter(g), LaurentPoly::h_power(1)));
    std::ostringstream os;
    os << "algebra " << e.tilde_name << "\nclass quea\ngenerators ";
    for (int g = 0; g < hat.size(); ++g) os << (g ? ", " : "") << names[static_cast<size_t>(g)];
    os << "\n";
    for (const NcElement& rel : hat.relations) {
        NcElement s = substitute_free(rel, images);
        Valuation v = s.coeff_valuation();
        if (v == kInfinity) continue;
        os << "relation " << free.render(shift_q1(s, -static_cast<int>(v))) << "\n";
    }
    for (int g = 0; g < hat.size(); ++g) {
        const size_t gi = static_cast<size_t>(g);
        const std::string& n = names[gi];
        TensorElement cop = substitute_free(hat.hopf.coproduct[gi], images);
        cop -= hat.hopf.counit[gi] * TensorElement::unit(2);
        if (tensor_coeff_valuation(cop) < 1) throw VerificationFailed("derived coproduct not divisible for " + n);
        os << "coproduct " << n << " = " << free.render(shift_q1(cop, -1)) << "\n";
        os << "counit " << n << " = 0\n";
        NcElement ant = substitute_free(hat.hopf.antipode[gi], images) - NcElement::scalar(hat.hopf.counit[gi]);
        os << "antipode " << n << " = " << free.render(divide_h(ant, "antipode " + n)) << "\n";
    }
    os << "lattice span:";
    for (int g = 0; g < hat.size(); ++g) os << " " << names[static_cast<size_t>(g)] << "^n" << g;
    os << "\n";
    for (const auto& [g, d] : hat.lattice.grading) os << "grading " << names[static_cast<size_t>(g)] << " = " << d << "\n";
    return os.str();
}

// ---------------------------------------------------------------- cached tilde algebras

const Presentation& tilde_of(const CatalogEntry& e) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<Presentation>> loaded;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = loaded.find(e.name);
        if (it != loaded.end()) return *it->second;
    }
    std::string text = e.tilde_text.empty() ? derive_tilde_F_text(e) : e.tilde_text;
    auto t = std::make_unique<Presentation>(parse_checked(text));
    Report r = verify_tilde_images(e, *t);
    if (!r.ok())
        for (const CheckEntry& c : r.entries)
            if (!c.passed) throw VerificationFailed(t->name + ": substituted " + c.name + " is nonzero in " + e.hat.name);
    std::lock_guard<std::mutex> lock(mutex);
    return *loaded.emplace(e.name, std::move(t)).first->second;
}

const Presentation& tilde_presentation(const CatalogEntry& e) {
    if (e.hat.classification != Classification::QUEA)
        throw VerificationFailed(e.name + " is not a QUEA entry; use tilde-f");
    return tilde_of(e);
}

const Presentation& tilde_F_presentation(const CatalogEntry& e) {
    if (e.hat.classification != Classification::QFA)
        throw VerificationFailed(e.name + " is not a QFA entry; use tilde");
    return tilde_of(e);
}

// ---------------------------------------------------------------- double tilde

Report double_tilde_check(const CatalogEntry& e, int n_max) {
    Report r;
    const Presentation& hat = e.hat;
    const Presentation& tilde = tilde_of(e);
    TildeMap tm = tilde_map(e, tilde);
    r.title = "double tilde of " + hat.name;
    // (q-1) x_g = g~ - counit(g~), x_g expressed in the hat algebra.
    std::map<std::string, NcElement> dt;
    if (hat.classification == Classification::QUEA) {
        // F~ of a QFA needs no membership test: its generators (g~ - counit)/(q-1) span (q-1)^-1 I.
        for (const auto& [g, expr] : e.double_tilde_images) dt[g] = parse_element(expr, hat);
    } else {
        for (int g = 0; g < tilde.size(); ++g) {
            const size_t gi = static_cast<size_t>(g);
            const std::string& name = tilde.generators[gi].name;
            NcElement scaled = NcElement::monomial(tilde.letter(g), LaurentPoly::h_power(1));
            MembershipVerdict v = tilde_member(scaled, tilde, n_max, "(q-1)*" + name);
            r.add("(q-1)*" + name + " in tilde of " + tilde.name, v.verdict == Verdict::MemberUpToBound,
                  verdict_name(v.verdict) + " " + v.note);
            // (q-1) * g~ in the hat algebra is the image times (q-1)^(shift+1).
            dt[name] = shift_q1(tm.images[gi], tm.shifts[gi] + 1);
        }
    }
    for (int g = 0; g < tilde.size(); ++g) {
        const size_t gi = static_cast<size_t>(g);
        const std::string& name = tilde.generators[gi].name;
        auto it = dt.find(name);
        if (it == dt.end()) {
            r.add("double tilde generator of " + name, false, "no declared image");
            continue;
        }
        if (hat.classification == Classification::QUEA) {
            // (q-1) x = image - counit
            TensorElement lhs = TensorElement::from_element(shift_q1(it->second, 1));
            TensorElement rhs = TensorElement::from_element(shift_q1(tm.images[gi], tm.shifts[gi]) -
                                                            NcElement::scalar(tilde.hopf.counit[gi]));
            r.add("(q-1)*dt_" + name + " = " + name + " - counit(" + name + ")", tensor_is_zero(lhs - rhs, hat));
        }
    }
    // Hat generators from double-tilde generators.
    Environment env;
    for (const auto& [name, x] : dt) env["dt_" + name] = TensorElement::from_element(x);
    std::vector<std::pair<std::string, std::string>> back = e.hat_from_double_tilde;
    if (back.empty() && hat.classification == Classification::QFA) {
        // g = counit(g) + dt_g~ for the generator g~ = (g - counit(g))/(q-1).
        for (const TildeImage& t : e.tilde_images) {
            NcElement img = parse_element(t.expr, hat);
            for (const auto& [w, c] : img.terms())
                if (w.size() == 1)
                    back.emplace_back(hat.generators[static_cast<unsigned char>(w[0])].name,
                                      hat.hopf.counit[static_cast<unsigned char>(w[0])].to_string() + " + dt_" + t.generator);
        }
    }
    std::vector<bool> covered(static_cast<size_t>(hat.size()), false);
    for (const auto& [g, expr] : back) {
        int gi = hat.generator_index(g);
        if (gi < 0) {
            r.add("regenerate " + g, false, "unknown hat generator");
            continue;
        }
        covered[static_cast<size_t>(gi)] = true;
        NcElement val = normal_form(parse_element(expr, hat, env), hat);
        r.add("regenerate " + g + " = " + expr, equal_in(val, hat.gen(g), hat));
    }
    for (int g = 0; g < hat.size(); ++g)
        if (!covered[static_cast<size_t>(g)])
            r.add("regenerate " + hat.generators[static_cast<size_t>(g)].name, false, "not expressed in double-tilde generators");
    return r;
}

}  // namespace qdual
