/**
 * @file laurent.cpp
 * @brief Laurent polynomial arithmetic.
 */
#include "qdual/laurent.hpp"

#include "qdual/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qdual {

std::string valuation_string(Valuation v) { return v == kInfinity ? "inf" : std::to_string(v); }

std::string rational_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int k) {
    LaurentPoly p;
    if (c != 0) {
        p.lo_ = k;
        p.c_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::h_power(int k) {
    LaurentPoly base = q_power(1) - LaurentPoly(1);
    return base.pow(static_cast<unsigned>(k));
}

void LaurentPoly::trim() {
    size_t hi = c_.size();
    while (hi > 0 && c_[hi - 1] == 0) --hi;
    c_.resize(hi);
    size_t lo = 0;
    while (lo < c_.size() && c_[lo] == 0) ++lo;
    if (lo > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lo));
        lo_ += static_cast<int>(lo);
    }
    if (c_.empty()) lo_ = 0;
}

bool LaurentPoly::is_constant() const { return c_.empty() || (c_.size() == 1 && lo_ == 0); }

bool LaurentPoly::is_unit() const { return c_.size() == 1; }

Rational LaurentPoly::coefficient(int k) const {
    if (c_.empty() || k < lo_ || k > max_exponent()) return 0;
    return c_[static_cast<size_t>(k - lo_)];
}

size_t LaurentPoly::term_count() const {
    size_t n = 0;
    for (const Rational& c : c_)
        if (c != 0) ++n;
    return n;
}

void LaurentPoly::add_term(int k, const Rational& c) {
    if (c == 0) return;
    if (c_.empty()) {
        lo_ = k;
        c_.push_back(c);
        return;
    }
    if (k < lo_) {
        c_.insert(c_.begin(), static_cast<size_t>(lo_ - k), Rational(0));
        lo_ = k;
    } else if (k > max_exponent()) {
        c_.resize(static_cast<size_t>(k - lo_ + 1));
    }
    c_[static_cast<size_t>(k - lo_)] += c;
    trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    int lo = std::min(lo_, o.lo_), hi = std::max(max_exponent(), o.max_exponent());
    if (lo < lo_) {
        c_.insert(c_.begin(), static_cast<size_t>(lo_ - lo), Rational(0));
        lo_ = lo;
    }
    c_.resize(static_cast<size_t>(hi - lo_ + 1));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<size_t>(o.lo_ - lo_) + i] += o.c_[i];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (Rational& c : r.c_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.c_.empty()) r.lo_ += k;
    return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw NotDivisible("not a unit of Q[q,q^-1]: " + to_string());
    return monomial(Rational(1) / c_[0], -lo_);
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        int k = lo_ + static_cast<int>(i);
        Rational a = abs(c);
        bool neg = c < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << rational_string(a);
            continue;
        }
        if (a != 1) os << rational_string(a) << "*";
        os << "q";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

LaurentPoly lp_canonical(const std::vector<std::pair<int, Rational>>& raw) {
    LaurentPoly p;
    for (const auto& [k, c] : raw) p.add_term(k, c);
    return p;
}

namespace {

// Dense coefficients of q^{-lo} * a, lowest degree first.
std::vector<Rational> dense(const LaurentPoly& a) {
    return a.dense();
}

// Divides the dense polynomial by (q - 1) in place; returns false if the remainder is nonzero.
bool divide_by_h(std::vector<Rational>& v) {
    // Synthetic division from the top: b_{n-1} = a_n, b_{i-1} = a_i + b_i.
    size_t n = v.size();
    if (n < 2) return false;
    std::vector<Rational> b(n - 1);
    Rational carry = 0;
    for (size_t i = n - 1; i >= 1; --i) {
        carry += v[i];
        b[i - 1] = carry;
    }
    if (carry + v[0] != 0) return false;
    v = std::move(b);
    return true;
}

}  // namespace

std::pair<Valuation, LaurentPoly> lp_split_q1(const LaurentPoly& a) {
    if (a.is_zero()) return {kInfinity, LaurentPoly()};
    int lo = a.min_exponent();
    std::vector<Rational> v = dense(a);
    Valuation val = 0;
    while (true) {
        std::vector<Rational> w = v;
        if (!divide_by_h(w)) break;
        v = std::move(w);
        ++val;
    }
    LaurentPoly u;
    for (size_t i = 0; i < v.size(); ++i) u.add_term(lo + static_cast<int>(i), v[i]);
    return {val, u};
}

Valuation lp_q1_valuation(const LaurentPoly& a) {
    if (a.is_zero()) return kInfinity;
    // Cheap exit: a(1) != 0 means valuation zero.
    if (lp_eval1(a) != 0) return 0;
    return lp_split_q1(a).first;
}

LaurentPoly lp_shift_q1(const LaurentPoly& a, int k) {
    if (k >= 0 || a.is_zero()) return a * LaurentPoly::h_power(k >= 0 ? k : 0);
    int lo = a.min_exponent();
    std::vector<Rational> v = dense(a);
    for (int i = 0; i < -k; ++i)
        if (!divide_by_h(v)) throw NotDivisible("(q-1)^" + std::to_string(-k) + " does not divide " + a.to_string());
    LaurentPoly u;
    for (size_t i = 0; i < v.size(); ++i) u.add_term(lo + static_cast<int>(i), v[i]);
    return u;
}

Rational lp_eval1(const LaurentPoly& a) {
    Rational s = 0;
    for (const Rational& c : a.dense()) s += c;
    return s;
}

}  // namespace qdual
