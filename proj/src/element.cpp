/**
 * @file element.cpp
 * @brief Raw containers for words, elements and tensors.
 */
#include "qdual/element.hpp"

#include "qdual/errors.hpp"

#include <algorithm>

namespace qdual {

NcElement NcElement::scalar(const LaurentPoly& c) { return monomial(Word(), c); }

NcElement NcElement::monomial(const Word& w, const LaurentPoly& c) {
    NcElement x;
    x.add(w, c);
    return x;
}

LaurentPoly NcElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void NcElement::add(const Word& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcElement& NcElement::operator+=(const NcElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NcElement& NcElement::operator-=(const NcElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NcElement& NcElement::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, a] : terms_) a *= c;
    return *this;
}

NcElement NcElement::operator-() const {
    NcElement r = *this;
    for (auto& [w, a] : r.terms_) a = -a;
    return r;
}

Valuation NcElement::coeff_valuation() const {
    Valuation v = kInfinity;
    for (const auto& [w, c] : terms_) v = std::min(v, lp_q1_valuation(c));
    return v;
}

NcElement concat(const NcElement& x, const NcElement& y) {
    NcElement r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) r.add(a + b, ca * cb);
    return r;
}

TensorElement TensorElement::scalar(const LaurentPoly& c) {
    TensorElement t(0);
    t.add({}, c);
    return t;
}

TensorElement TensorElement::unit(int arity) {
    TensorElement t(arity);
    t.add(WordTuple(static_cast<size_t>(arity)), LaurentPoly(1));
    return t;
}

void TensorElement::add(const WordTuple& t, const LaurentPoly& c) {
    if (static_cast<int>(t.size()) != arity_) throw ArityMismatch("tensor term of wrong arity");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly TensorElement::coefficient(const WordTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (o.arity_ != arity_) throw ArityMismatch("adding tensors of arity " + std::to_string(arity_) + " and " +
                                                std::to_string(o.arity_));
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    if (o.arity_ != arity_) throw ArityMismatch("subtracting tensors of arity " + std::to_string(arity_) + " and " +
                                                std::to_string(o.arity_));
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, a] : terms_) a *= c;
    return *this;
}

TensorElement TensorElement::operator-() const {
    TensorElement r = *this;
    for (auto& [t, a] : r.terms_) a = -a;
    return r;
}

LaurentPoly TensorElement::scalar_value() const {
    if (arity_ != 0) throw ArityMismatch("scalar_value on a tensor of positive arity");
    return coefficient({});
}

NcElement TensorElement::as_element() const {
    if (arity_ != 1) throw ArityMismatch("as_element on a tensor of arity " + std::to_string(arity_));
    NcElement x;
    for (const auto& [t, c] : terms_) x.add(t[0], c);
    return x;
}

TensorElement TensorElement::from_element(const NcElement& x) {
    TensorElement t(1);
    for (const auto& [w, c] : x.terms()) t.add({w}, c);
    return t;
}

TensorElement tensor_of(const std::vector<NcElement>& xs) {
    TensorElement acc = TensorElement::scalar(LaurentPoly(1));
    for (const NcElement& x : xs) {
        TensorElement next(acc.arity() + 1);
        for (const auto& [t, c] : acc.terms())
            for (const auto& [w, a] : x.terms()) {
                WordTuple u = t;
                u.push_back(w);
                next.add(u, c * a);
            }
        acc = std::move(next);
    }
    return acc;
}

Valuation tensor_coeff_valuation(const TensorElement& x) {
    Valuation v = kInfinity;
    for (const auto& [t, c] : x.terms()) v = std::min(v, lp_q1_valuation(c));
    return v;
}

TensorElement permute_slots(const TensorElement& x, const std::vector<int>& perm) {
    TensorElement r(x.arity());
    for (const auto& [t, c] : x.terms()) {
        WordTuple u(t.size());
        for (size_t i = 0; i < perm.size(); ++i) u[i] = t[static_cast<size_t>(perm[i])];
        r.add(u, c);
    }
    return r;
}

}  // namespace qdual
