/**
 * @file laurent.hpp
 * @brief Exact arithmetic in Q[q, q^-1] with (q-1)-adic valuation and evaluation at q = 1.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qdual {

using Rational = mpq_class;

/** @brief Valuations are naturals or +infinity (represented by kInfinity). */
using Valuation = long;
inline constexpr Valuation kInfinity = std::numeric_limits<long>::max();

/** @brief Renders a valuation, using "inf" for +infinity. */
std::string valuation_string(Valuation v);

/**
 * @brief A Laurent polynomial with rational coefficients.
 *
 * Stored densely from the lowest exponent; the outer coefficients are never
 * zero, so structural equality is mathematical equality.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor): scalars embed implicitly
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

    /** @brief c * q^k. */
    static LaurentPoly monomial(const Rational& c, int k);
    /** @brief q^k. */
    static LaurentPoly q_power(int k) { return monomial(1, k); }
    /** @brief (q-1)^k for k >= 0. */
    static LaurentPoly h_power(int k);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    /** @brief True iff the element is c*q^k with c != 0, i.e. a unit of Q[q,q^-1]. */
    bool is_unit() const;
    int min_exponent() const { return lo_; }
    int max_exponent() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    /** @brief Coefficient of q^k (zero outside the support). */
    Rational coefficient(int k) const;
    /** @brief Dense coefficients from min_exponent() upward (zeros inside the range allowed). */
    const std::vector<Rational>& dense() const { return c_; }
    /** @brief Number of nonzero coefficients. */
    size_t term_count() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /** @brief Multiplies by q^k. */
    LaurentPoly shifted(int k) const;
    /** @brief Inverse of a unit c*q^k. */
    LaurentPoly unit_inverse() const;
    LaurentPoly pow(unsigned e) const;

    /** @brief Rendering with ascending exponents, e.g. "-1/2*q^-2 + q". */
    std::string to_string() const;

    /** @brief Adds c*q^k in place (used by canonicalization). */
    void add_term(int k, const Rational& c);

private:
    void trim();
    int lo_ = 0;
    std::vector<Rational> c_;
};

/** @brief Canonical form of a raw (exponent, coefficient) list. */
LaurentPoly lp_canonical(const std::vector<std::pair<int, Rational>>& raw);

/** @brief Largest k with (q-1)^k dividing a; kInfinity for a = 0. */
Valuation lp_q1_valuation(const LaurentPoly& a);

/** @brief a * (q-1)^k; throws NotDivisible when k < 0 and the valuation is too small. */
LaurentPoly lp_shift_q1(const LaurentPoly& a, int k);

/** @brief Substitutes q = 1. */
Rational lp_eval1(const LaurentPoly& a);

/** @brief Writes a nonzero a as (q-1)^v * u with u(1) != 0; returns (v, u). */
std::pair<Valuation, LaurentPoly> lp_split_q1(const LaurentPoly& a);

/** @brief Renders a rational as INT or INT/INT. */
std::string rational_string(const Rational& r);

}  // namespace qdual
