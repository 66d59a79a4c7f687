/**
 * @file element.hpp
 * @brief Words, noncommutative elements and tensor elements over Q[q, q^-1].
 *
 * These are raw containers: they add and scale exactly but know nothing about
 * relations. Normalization against a presentation lives in algebra.hpp.
 */
#pragma once

#include "qdual/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace qdual {

/** @brief A word; each char is the pbw_index of a generator. */
using Word = std::string;

/** @brief Storage order for words: length first, then lexicographic on pbw indices. */
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/** @brief Finite sum of coefficient x word. */
class NcElement {
public:
    using TermMap = std::map<Word, LaurentPoly, WordLess>;

    NcElement() = default;
    /** @brief c times the empty word. */
    static NcElement scalar(const LaurentPoly& c);
    static NcElement monomial(const Word& w, const LaurentPoly& c = LaurentPoly(1));
    static NcElement one() { return scalar(LaurentPoly(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coefficient(const Word& w) const;
    void add(const Word& w, const LaurentPoly& c);

    NcElement& operator+=(const NcElement& o);
    NcElement& operator-=(const NcElement& o);
    NcElement& operator*=(const LaurentPoly& c);
    NcElement operator-() const;
    friend NcElement operator+(NcElement a, const NcElement& b) { return a += b; }
    friend NcElement operator-(NcElement a, const NcElement& b) { return a -= b; }
    friend NcElement operator*(const LaurentPoly& c, NcElement a) { return a *= c; }
    friend bool operator==(const NcElement& a, const NcElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NcElement& a, const NcElement& b) { return !(a == b); }

    /** @brief Minimum coefficient valuation (kInfinity for zero). */
    Valuation coeff_valuation() const;

private:
    TermMap terms_;
};

/** @brief Unnormalized product: concatenation of words. */
NcElement concat(const NcElement& x, const NcElement& y);

using WordTuple = std::vector<Word>;

struct WordTupleLess {
    bool operator()(const WordTuple& a, const WordTuple& b) const {
        WordLess less;
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (less(a[i], b[i])) return true;
            if (less(b[i], a[i])) return false;
        }
        return a.size() < b.size();
    }
};

/** @brief Element of the arity-fold tensor power; arity 0 is a bare scalar. */
class TensorElement {
public:
    using TermMap = std::map<WordTuple, LaurentPoly, WordTupleLess>;

    explicit TensorElement(int arity = 0) : arity_(arity) {}
    static TensorElement scalar(const LaurentPoly& c);
    static TensorElement unit(int arity);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const WordTuple& t, const LaurentPoly& c);
    LaurentPoly coefficient(const WordTuple& t) const;

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const LaurentPoly& c);
    TensorElement operator-() const;
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const LaurentPoly& c, TensorElement a) { return a *= c; }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    /** @brief The arity-0 value (a scalar); requires arity 0. */
    LaurentPoly scalar_value() const;
    /** @brief Views an arity-1 tensor as an element. */
    NcElement as_element() const;
    static TensorElement from_element(const NcElement& x);

private:
    int arity_;
    TermMap terms_;
};

/** @brief Multilinear expansion of x1 (x) ... (x) xn (no normalization needed for normal inputs). */
TensorElement tensor_of(const std::vector<NcElement>& xs);

/** @brief Min over terms of the coefficient valuation; kInfinity for zero. */
Valuation tensor_coeff_valuation(const TensorElement& x);

/** @brief Applies a slot permutation: result slot i holds input slot perm[i]. */
TensorElement permute_slots(const TensorElement& x, const std::vector<int>& perm);

}  // namespace qdual
