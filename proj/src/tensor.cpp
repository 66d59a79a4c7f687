/**
 * @file tensor.cpp
 * @brief Tensor-power operations over a presentation.
 */
#include "qdual/tensor.hpp"

#include "qdual/errors.hpp"

namespace qdual {

TensorElement tensor_normal_form(const TensorElement& x, const Presentation& p) {
    TensorElement out(x.arity());
    for (const auto& [t, c] : x.terms()) {
        // Expand the product of normalized slots.
        std::vector<std::pair<WordTuple, LaurentPoly>> partial{{WordTuple(), c}};
        for (const Word& w : t) {
            NcElement n = normal_form(NcElement::monomial(w), p);
            std::vector<std::pair<WordTuple, LaurentPoly>> next;
            next.reserve(partial.size() * n.terms().size());
            for (const auto& [pt, pc] : partial)
                for (const auto& [v, a] : n.terms()) {
                    WordTuple nt = pt;
                    nt.push_back(v);
                    next.emplace_back(std::move(nt), pc * a);
                }
            partial = std::move(next);
        }
        for (const auto& [pt, pc] : partial) out.add(pt, pc);
    }
    return out;
}

TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y, const Presentation& p) {
    if (x.arity() != y.arity())
        throw ArityMismatch("tensor product of arities " + std::to_string(x.arity()) + " and " +
                            std::to_string(y.arity()));
    TensorElement raw(x.arity());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            WordTuple t(a.size());
            for (size_t i = 0; i < a.size(); ++i) t[i] = a[i] + b[i];
            raw.add(t, ca * cb);
        }
    return tensor_normal_form(raw, p);
}

bool tensor_is_zero(const TensorElement& x, const Presentation& p) {
    TensorElement n = tensor_normal_form(x, p);
    if (n.is_zero() || !p.has_fraction_rules()) return n.is_zero();
    const size_t arity = static_cast<size_t>(n.arity());
    // Common scale per slot.
    std::vector<std::vector<int>> common(arity, std::vector<int>(p.atoms.size(), 0));
    for (const auto& [t, c] : n.terms())
        for (size_t s = 0; s < arity; ++s) {
            const ReducedWord& r = reduce_word(t[s], p);
            for (size_t i = 0; i < r.scale.exps.size(); ++i)
                common[s][i] = std::max(common[s][i], r.scale.exps[i]);
        }
    TensorElement total(n.arity());
    for (const auto& [t, c] : n.terms()) {
        std::vector<std::pair<WordTuple, LaurentPoly>> partial{{WordTuple(), c}};
        for (size_t s = 0; s < arity; ++s) {
            const ReducedWord& r = reduce_word(t[s], p);
            Scale f;
            f.exps.assign(p.atoms.size(), 0);
            for (size_t i = 0; i < p.atoms.size(); ++i)
                f.exps[i] = common[s][i] - (i < r.scale.exps.size() ? r.scale.exps[i] : 0);
            f.unit = r.scale.unit.unit_inverse();
            LaurentPoly factor = scale_value(f, p);
            std::vector<std::pair<WordTuple, LaurentPoly>> next;
            for (const auto& [pt, pc] : partial)
                for (const auto& [v, a] : r.value.terms()) {
                    WordTuple nt = pt;
                    nt.push_back(v);
                    next.emplace_back(std::move(nt), pc * a * factor);
                }
            partial = std::move(next);
        }
        for (const auto& [pt, pc] : partial) total.add(pt, pc);
    }
    return total.is_zero();
}

TensorElement tensor_concat(const TensorElement& x, const TensorElement& y) {
    TensorElement out(x.arity() + y.arity());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            WordTuple t = a;
            t.insert(t.end(), b.begin(), b.end());
            out.add(t, ca * cb);
        }
    return out;
}

NcElement shift_q1(const NcElement& x, int k) {
    NcElement out;
    for (const auto& [w, c] : x.terms()) out.add(w, lp_shift_q1(c, k));
    return out;
}

TensorElement shift_q1(const TensorElement& x, int k) {
    TensorElement out(x.arity());
    for (const auto& [t, c] : x.terms()) out.add(t, lp_shift_q1(c, k));
    return out;
}

NcElement eval1(const NcElement& x) {
    NcElement out;
    for (const auto& [w, c] : x.terms()) out.add(w, LaurentPoly(lp_eval1(c)));
    return out;
}

TensorElement eval1(const TensorElement& x) {
    TensorElement out(x.arity());
    for (const auto& [t, c] : x.terms()) out.add(t, LaurentPoly(lp_eval1(c)));
    return out;
}

}  // namespace qdual
