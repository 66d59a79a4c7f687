/**
 * @file algebra.hpp
 * @brief Presented algebras over Q[q, q^-1]: generators, oriented relations,
 *        Hopf data, and rewriting to PBW normal form.
 *
 * Relations are oriented by the weighted term order (total generator weight,
 * then lexicographic on pbw indices).  A relation whose leading coefficient is
 * a unit becomes an ordinary rewrite rule; one whose leading coefficient is
 * not a unit becomes a fraction rule, used only for the k(q)-level zero test
 * and lattice computations.  A relation with a leading word of length >= 3
 * that is central is applied by letter multiset rather than by substring.
 */
#pragma once

#include "qdual/element.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qdual {

struct Generator {
    std::string name;
    int pbw_index = 0;
    int inverse = -1;  ///< index of the declared inverse generator, or -1
    int weight = 1;    ///< weight in the term order
};

enum class Classification { QUEA, QFA, Classical };
enum class LatticeKind { Free, Spanning };

/** @brief Integral lattice: the Q[q,q^-1]-span of the normal words. */
struct LatticeSpec {
    LatticeKind kind = LatticeKind::Free;
    std::string pattern;            ///< monomial family, e.g. "F^a H^b Gamma^c E^d"
    std::map<int, int> grading;     ///< generator index -> integer weight
};

struct HopfData {
    std::vector<TensorElement> coproduct;  ///< arity 2, per generator
    std::vector<LaurentPoly> counit;
    std::vector<NcElement> antipode;
};

/**
 * @brief An oriented relation: scale * lhs = rhs.
 *
 * For central rules `relation` holds the full relation R (R = 0) whose leading
 * word is lhs; the rule rewrites any word containing the letters of lhs.
 */
struct RewriteRule {
    Word lhs;
    NcElement rhs;
    LaurentPoly scale{1};
    bool central = false;
    NcElement relation;
    int atom = -1;  ///< for fraction rules: index of the non-unit part of scale
    bool fraction() const { return !scale.is_unit(); }
};

/** @brief Product of a unit and powers of the presentation's fraction atoms. */
struct Scale {
    std::vector<int> exps;
    LaurentPoly unit{1};
};

/** @brief scale * word = value, with value expressed in k(q)-basis words. */
struct ReducedWord {
    Scale scale;
    NcElement value;
};

struct PresentationCache;

class Presentation {
public:
    std::string name;
    Classification classification = Classification::QUEA;
    std::vector<Generator> generators;
    std::vector<NcElement> relations;               ///< declared relations (each = 0), raw
    std::vector<std::pair<int, int>> inverse_pairs;
    HopfData hopf;
    LatticeSpec lattice;
    /// Classical targets only: declared Poisson bracket {g_i, g_j} and cobracket tables.
    std::map<std::pair<int, int>, NcElement> bracket;
    std::map<int, TensorElement> cobracket;

    // Derived by build().
    std::vector<RewriteRule> rules;
    std::vector<LaurentPoly> atoms;

    Presentation();

    /** @brief Orients relations into rules and resets all caches.  Call after any edit. */
    void build();

    int generator_index(const std::string& name) const;  ///< -1 if absent
    int size() const { return static_cast<int>(generators.size()); }
    Word letter(int g) const { return Word(1, static_cast<char>(g)); }
    NcElement gen(const std::string& name) const;
    bool has_fraction_rules() const { return has_fraction_; }

    /** @brief Weighted term order. */
    bool term_less(const Word& a, const Word& b) const;
    int word_weight(const Word& w) const;

    std::string render_word(const Word& w) const;
    std::string render(const NcElement& x) const;
    std::string render(const TensorElement& x) const;

    // Internal matching interface used by the rewriting engine.
    struct Match {
        int rule = -1;
        size_t pos = 0;
        explicit operator bool() const { return rule >= 0; }
    };
    Match find_ordinary(const Word& w, bool use_central = true) const;
    Match find_fraction(const Word& w) const;
    /** @brief Splits c = unit * atom with atom registered; throws if unknown. */
    std::pair<int, LaurentPoly> decompose_scale(const LaurentPoly& c) const;
    int register_atom(const LaurentPoly& c, LaurentPoly* unit);

    PresentationCache& cache() const { return *cache_; }

private:
    std::map<Word, int> contiguous_ordinary_;
    std::map<Word, int> contiguous_fraction_;
    std::vector<size_t> ordinary_lengths_;
    std::vector<size_t> fraction_lengths_;
    std::vector<int> central_ordinary_;
    std::vector<int> central_fraction_;
    bool has_fraction_ = false;
    std::shared_ptr<PresentationCache> cache_;
};

/** @brief Rewrite-step budget (QDUAL_MAX_REWRITE_STEPS, default 5,000,000). */
long rewrite_budget();

/** @brief True iff no ordinary rule applies to w. */
bool is_normal(const Word& w, const Presentation& p);

/** @brief Rewriting fixed point under the ordinary rules; throws NonTerminating. */
NcElement normal_form(const NcElement& x, const Presentation& p);

/** @brief normal_form of the concatenation product. */
NcElement multiply(const NcElement& x, const NcElement& y, const Presentation& p);

/** @brief x^e for e >= 0. */
NcElement power(const NcElement& x, unsigned e, const Presentation& p);

/** @brief Pseudo-reduction of a normal word into k(q)-basis words (fraction rules). */
const ReducedWord& reduce_word(const Word& w, const Presentation& p);

/** @brief Scalar value of a Scale. */
LaurentPoly scale_value(const Scale& s, const Presentation& p);

/** @brief Zero test in the algebra over k(q). */
bool is_zero(const NcElement& x, const Presentation& p);
inline bool equal_in(const NcElement& x, const NcElement& y, const Presentation& p) { return is_zero(x - y, p); }

/** @brief One entry of a verification report. */
struct CheckEntry {
    std::string name;
    bool passed = true;
    std::string detail;
};

/** @brief Ordered list of pass/fail entries. */
struct Report {
    std::string title;
    std::vector<CheckEntry> entries;
    bool ok() const;
    void add(const std::string& name, bool passed, const std::string& detail = "");
    void append(const Report& other, const std::string& prefix = "");
    size_t failures() const;
};

/**
 * @brief Local confluence spot check: resolves every overlap of two contiguous
 *        rules both ways, then spot-checks associativity on up to sample_budget
 *        random generator triples (which also exercises central and fraction rules).
 */
Report overlap_check(const Presentation& p, size_t sample_budget);

/** @brief Structural sanity: every out-of-order pair and inverse pair is covered by a rule. */
Report validate_presentation(const Presentation& p);

}  // namespace qdual
