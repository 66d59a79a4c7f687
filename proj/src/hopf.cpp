/**
 * @file hopf.cpp
 * @brief Hopf structure maps and axiom checks.
 */
#include "qdual/hopf.hpp"

#include "cache.hpp"
#include "qdual/errors.hpp"

#include <random>

namespace qdual {

namespace {

constexpr size_t kMaxMemo = 200000;

TensorElement coproduct_word(const Word& w, const Presentation& p) {
    if (w.empty()) return TensorElement::unit(2);
    if (w.size() == 1) return p.hopf.coproduct[static_cast<unsigned char>(w[0])];
    PresentationCache& cache = p.cache();
    {
        std::lock_guard<std::recursive_mutex> lock(cache.mutex);
        auto hit = cache.coproduct.find(w);
        if (hit != cache.coproduct.end()) return hit->second;
    }
    TensorElement r = tensor_multiply(coproduct_word(w.substr(0, w.size() - 1), p),
                                      p.hopf.coproduct[static_cast<unsigned char>(w.back())], p);
    std::lock_guard<std::recursive_mutex> lock(cache.mutex);
    if (cache.coproduct.size() > kMaxMemo) cache.coproduct.clear();
    cache.coproduct.emplace(w, r);
    return r;
}

NcElement antipode_word(const Word& w, const Presentation& p) {
    if (w.empty()) return NcElement::one();
    if (w.size() == 1) return normal_form(p.hopf.antipode[static_cast<unsigned char>(w[0])], p);
    PresentationCache& cache = p.cache();
    {
        std::lock_guard<std::recursive_mutex> lock(cache.mutex);
        auto hit = cache.antipode.find(w);
        if (hit != cache.antipode.end()) return hit->second;
    }
    // S(w' g) = S(g) S(w').
    NcElement r = multiply(p.hopf.antipode[static_cast<unsigned char>(w.back())],
                           antipode_word(w.substr(0, w.size() - 1), p), p);
    std::lock_guard<std::recursive_mutex> lock(cache.mutex);
    if (cache.antipode.size() > kMaxMemo) cache.antipode.clear();
    cache.antipode.emplace(w, r);
    return r;
}

}  // namespace

LaurentPoly counit_word(const Word& w, const Presentation& p) {
    LaurentPoly c(1);
    for (char ch : w) {
        c *= p.hopf.counit[static_cast<unsigned char>(ch)];
        if (c.is_zero()) break;
    }
    return c;
}

LaurentPoly apply_counit(const NcElement& x, const Presentation& p) {
    LaurentPoly r;
    for (const auto& [w, c] : x.terms()) r += c * counit_word(w, p);
    return r;
}

TensorElement apply_coproduct(const NcElement& x, const Presentation& p) {
    TensorElement r(2);
    for (const auto& [w, c] : x.terms()) r += c * coproduct_word(w, p);
    return r;
}

NcElement apply_antipode(const NcElement& x, const Presentation& p) {
    NcElement r;
    for (const auto& [w, c] : x.terms()) r += c * antipode_word(w, p);
    return r;
}

TensorElement coproduct_in_slot(const TensorElement& x, int slot, const Presentation& p) {
    TensorElement out(x.arity() + 1);
    for (const auto& [t, c] : x.terms()) {
        const TensorElement d = coproduct_word(t[static_cast<size_t>(slot)], p);
        for (const auto& [dt, dc] : d.terms()) {
            WordTuple nt;
            nt.reserve(t.size() + 1);
            nt.insert(nt.end(), t.begin(), t.begin() + slot);
            nt.insert(nt.end(), dt.begin(), dt.end());
            nt.insert(nt.end(), t.begin() + slot + 1, t.end());
            out.add(nt, c * dc);
        }
    }
    return out;
}

TensorElement counit_in_slot(const TensorElement& x, int slot, const Presentation& p) {
    TensorElement out(x.arity() - 1);
    for (const auto& [t, c] : x.terms()) {
        LaurentPoly e = counit_word(t[static_cast<size_t>(slot)], p);
        if (e.is_zero()) continue;
        WordTuple nt = t;
        nt.erase(nt.begin() + slot);
        out.add(nt, c * e);
    }
    return out;
}

TensorElement iterated_coproduct(const NcElement& x, int n, const Presentation& p) {
    if (n < 0) throw BadParameter("negative coproduct order");
    if (n == 0) return TensorElement::scalar(apply_counit(x, p));
    TensorElement cur = tensor_normal_form(TensorElement::from_element(x), p);
    for (int k = 2; k <= n; ++k) cur = coproduct_in_slot(cur, 0, p);
    return cur;
}

TensorElement augment_slots(const TensorElement& x, const Presentation& p) {
    TensorElement out(x.arity());
    for (const auto& [t, c] : x.terms()) {
        // Expand prod_s (w_s - eps(w_s) 1).
        std::vector<std::pair<WordTuple, LaurentPoly>> partial{{WordTuple(), c}};
        for (const Word& w : t) {
            LaurentPoly e = counit_word(w, p);
            std::vector<std::pair<WordTuple, LaurentPoly>> next;
            for (auto& [pt, pc] : partial) {
                if (!e.is_zero() && !w.empty()) {
                    WordTuple nt = pt;
                    nt.push_back(Word());
                    next.emplace_back(std::move(nt), -(pc * e));
                }
                if (!w.empty()) {
                    WordTuple nt = pt;
                    nt.push_back(w);
                    next.emplace_back(std::move(nt), pc);
                }
            }
            partial = std::move(next);
        }
        for (const auto& [pt, pc] : partial) out.add(pt, pc);
    }
    return out;
}

TensorElement delta_n(const NcElement& x, int n, const Presentation& p) {
    TensorElement d = iterated_coproduct(x, n, p);
    if (n == 0) return d;
    return augment_slots(d, p);
}

TensorElement delta_via_subsets(const NcElement& x, int n, const Presentation& p) {
    if (n < 0) throw BadParameter("negative delta order");
    TensorElement out(n);
    std::vector<TensorElement> powers;
    for (int k = 0; k <= n; ++k) powers.push_back(iterated_coproduct(x, k, p));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        LaurentPoly sign((n - size) % 2 ? -1 : 1);
        for (const auto& [t, c] : powers[static_cast<size_t>(size)].terms()) {
            // j_Psi: place the |Psi| slots at the positions in mask, 1 elsewhere.
            WordTuple nt(static_cast<size_t>(n));
            size_t k = 0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) nt[static_cast<size_t>(i)] = t[k++];
            out.add(nt, sign * c);
        }
    }
    return out;
}

NcElement multiply_slots(const TensorElement& x, const Presentation& p) {
    NcElement raw;
    for (const auto& [t, c] : x.terms()) {
        Word w;
        for (const Word& s : t) w += s;
        raw.add(w, c);
    }
    return normal_form(raw, p);
}

TensorElement apply_coproduct_op(const NcElement& x, const Presentation& p) {
    return permute_slots(apply_coproduct(x, p), {1, 0});
}

NcElement map_element(const NcElement& x, const std::vector<NcElement>& images, const Presentation& target) {
    NcElement out;
    std::map<Word, NcElement> memo;
    for (const auto& [w, c] : x.terms()) {
        NcElement acc = NcElement::one();
        Word prefix;
        for (char ch : w) {
            prefix += ch;
            auto it = memo.find(prefix);
            if (it != memo.end()) {
                acc = it->second;
                continue;
            }
            acc = multiply(acc, images[static_cast<unsigned char>(ch)], target);
            memo.emplace(prefix, acc);
        }
        out += c * acc;
    }
    return out;
}

TensorElement map_tensor(const TensorElement& x, const std::vector<NcElement>& images, const Presentation& target) {
    TensorElement out(x.arity());
    for (const auto& [t, c] : x.terms()) {
        std::vector<NcElement> slots;
        for (const Word& w : t) slots.push_back(map_element(NcElement::monomial(w), images, target));
        out += c * tensor_of(slots);
    }
    return out;
}

std::vector<NcElement> defining_relations(const Presentation& p) {
    std::vector<NcElement> rels = p.relations;
    for (const auto& [g, gi] : p.inverse_pairs) {
        rels.push_back(NcElement::monomial(p.letter(g) + p.letter(gi)) - NcElement::one());
        rels.push_back(NcElement::monomial(p.letter(gi) + p.letter(g)) - NcElement::one());
    }
    return rels;
}

Report check_hopf(const Presentation& p, size_t sample_budget) {
    Report rep;
    rep.title = "check_hopf " + p.name;
    if (p.hopf.coproduct.size() != static_cast<size_t>(p.size()) || p.hopf.counit.size() != static_cast<size_t>(p.size()) ||
        p.hopf.antipode.size() != static_cast<size_t>(p.size())) {
        rep.add("hopf data complete", false, "structure maps missing for some generator");
        return rep;
    }
    size_t i = 0;
    for (const NcElement& r : defining_relations(p)) {
        ++i;
        std::string tag = "relation " + std::to_string(i) + " [" + p.render(r) + "]";
        rep.add("coproduct respects " + tag, tensor_is_zero(apply_coproduct(r, p), p));
        rep.add("counit respects " + tag, apply_counit(r, p).is_zero());
        rep.add("antipode respects " + tag, is_zero(apply_antipode(r, p), p));
    }
    for (int g = 0; g < p.size(); ++g) {
        const std::string& gn = p.generators[static_cast<size_t>(g)].name;
        NcElement x = NcElement::monomial(p.letter(g));
        TensorElement d = tensor_normal_form(p.hopf.coproduct[static_cast<size_t>(g)], p);
        TensorElement left = coproduct_in_slot(d, 0, p), right = coproduct_in_slot(d, 1, p);
        rep.add("coassociativity " + gn, tensor_is_zero(left - right, p));
        TensorElement xt = TensorElement::from_element(x);
        rep.add("left counit " + gn, tensor_is_zero(counit_in_slot(d, 0, p) - xt, p));
        rep.add("right counit " + gn, tensor_is_zero(counit_in_slot(d, 1, p) - xt, p));
        NcElement eps = NcElement::scalar(p.hopf.counit[static_cast<size_t>(g)]);
        NcElement sl, sr;
        for (const auto& [t, c] : d.terms()) {
            sl += c * multiply(apply_antipode(NcElement::monomial(t[0]), p), NcElement::monomial(t[1]), p);
            sr += c * multiply(NcElement::monomial(t[0]), apply_antipode(NcElement::monomial(t[1]), p), p);
        }
        rep.add("antipode convolution m(S@id)D " + gn, is_zero(sl - eps, p));
        rep.add("antipode convolution m(id@S)D " + gn, is_zero(sr - eps, p));
    }
    std::mt19937 rng(2024);
    size_t bad = 0;
    for (size_t s = 0; s < sample_budget && p.size() > 0; ++s) {
        Word a, b;
        for (int k = 0; k < 2; ++k) a += p.letter(static_cast<int>(rng() % static_cast<unsigned>(p.size())));
        for (int k = 0; k < 2; ++k) b += p.letter(static_cast<int>(rng() % static_cast<unsigned>(p.size())));
        NcElement ab = multiply(NcElement::monomial(a), NcElement::monomial(b), p);
        TensorElement lhs = apply_coproduct(ab, p);
        TensorElement rhs = tensor_multiply(apply_coproduct(NcElement::monomial(a), p),
                                            apply_coproduct(NcElement::monomial(b), p), p);
        if (!tensor_is_zero(lhs - rhs, p)) ++bad;
    }
    if (sample_budget) rep.add("coproduct multiplicative on samples", bad == 0, std::to_string(bad) + " failures");
    return rep;
}

}  // namespace qdual
