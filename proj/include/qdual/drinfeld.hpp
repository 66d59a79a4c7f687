/**
 * @file drinfeld.hpp
 * @brief Global Drinfeld functors: lattice-aware (q-1)-adic valuation, the
 *        Ũ membership criterion, tilde presentations and double-tilde checks.
 */
#pragma once

#include "qdual/algebra.hpp"
#include "qdual/catalog.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qdual {

/** @brief Exponent slack of lattice windows (QDUAL_WINDOW_SLACK, default 2). */
int window_slack();

/**
 * @brief Largest k with x in (q-1)^k times the lattice (tensor power), localized at q = 1.
 *
 * FREE lattices use coefficient valuation; SPANNING lattices solve a module
 * membership problem on a finite window of lattice monomials.  Throws
 * WindowExceeded when the window grows beyond the configured bound.
 */
Valuation lattice_valuation(const NcElement& x, const Presentation& p);
Valuation lattice_valuation(const TensorElement& x, const Presentation& p);

/**
 * @brief (x / (q-1)^k) at q = 1, written with rational coefficients on lattice
 *        monomials; requires lattice_valuation(x) >= k (else NotDivisible).
 */
TensorElement lattice_quotient_at_one(const TensorElement& x, int k, const Presentation& p);
NcElement lattice_quotient_at_one(const NcElement& x, int k, const Presentation& p);

/** @brief True iff x vanishes in the specialization at q = 1 (lattice valuation >= 1). */
bool zero_at_one(const TensorElement& x, const Presentation& p);
bool zero_at_one(const NcElement& x, const Presentation& p);

/** @brief (n, lattice valuation of delta_n(x)) for 1 <= n <= n_max. */
std::vector<std::pair<int, Valuation>> valuation_profile(const NcElement& x, const Presentation& p, int n_max);

enum class Verdict { MemberUpToBound, NotMember, Inconclusive };

struct MembershipVerdict {
    std::string element;
    int max_n = 0;
    std::vector<std::pair<int, Valuation>> profile;
    Verdict verdict = Verdict::Inconclusive;
    int witness = 0;   ///< NOT-MEMBER: an n with valuation < n
    std::string note;  ///< how the verdict was reached
};

std::string verdict_name(Verdict v);

/** @brief Bounded test of delta_n(x) in (q-1)^n Λ^{(x)n} with the stabilization rule. */
MembershipVerdict tilde_member(const NcElement& x, const Presentation& p, int n_max, const std::string& description = "");

/**
 * @brief Tilde algebra of a catalog entry (Ũ for QUEA entries, F̃ for QFA
 *        entries), parsed or derived, and verified by substitution into the hat
 *        algebra.  Cached; throws VerificationFailed.
 */
const Presentation& tilde_of(const CatalogEntry& e);

/** @brief tilde_of for a QUEA entry; throws VerificationFailed for QFA entries. */
const Presentation& tilde_presentation(const CatalogEntry& e);
/** @brief tilde_of for a QFA entry; throws VerificationFailed for QUEA entries. */
const Presentation& tilde_F_presentation(const CatalogEntry& e);

/** @brief Substitution report: every relation and Hopf datum of `tilde` checked in the hat algebra. */
Report verify_tilde_images(const CatalogEntry& e, const Presentation& tilde);

/** @brief Image in the hat algebra of a tilde-algebra element, times (q-1)^clear; clear >= 0 is returned. */
NcElement tilde_to_hat(const CatalogEntry& e, const Presentation& tilde, const NcElement& x, int* clear);

/**
 * @brief Double-tilde check: the tilde of the tilde regenerates the hat algebra,
 *        generator by generator, plus the bounded membership tests it relies on.
 */
Report double_tilde_check(const CatalogEntry& e, int n_max);

/** @brief Text of the mechanically derived F̃ presentation of a QFA entry without declared text. */
std::string derive_tilde_F_text(const CatalogEntry& e);

}  // namespace qdual
