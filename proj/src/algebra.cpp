/**
 * @file algebra.cpp
 * @brief Presentation building, rewriting engine, pseudo-reduction and overlap checks.
 */
#include "qdual/algebra.hpp"

#include "cache.hpp"
#include "qdual/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_map>

namespace qdual {

namespace {

constexpr size_t kMaxCacheEntries = 400000;

std::vector<int> letter_counts(const Word& w, int n) {
    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (char ch : w) ++counts[static_cast<unsigned char>(ch)];
    return counts;
}

bool contains_multiset(const std::vector<int>& have, const Word& need) {
    std::vector<int> c = have;
    for (char ch : need)
        if (--c[static_cast<unsigned char>(ch)] < 0) return false;
    return true;
}

Word remove_letters(Word w, const Word& letters) {
    for (char ch : letters) w.erase(w.find(ch), 1);
    return w;
}

// Rewrites `start` to a fixed point of the ordinary rules.
NcElement run_rewrite(const NcElement& start, const Presentation& p, bool use_central, long& steps, long budget);

// normal_form(W' * R) restricted to contiguous rules, used to apply a central rule to u.
NcElement central_product(const Word& u, const RewriteRule& r, const Presentation& p, long& steps, long budget) {
    Word rest = remove_letters(u, r.lhs);
    NcElement prod = concat(NcElement::monomial(rest), r.relation);
    return run_rewrite(prod, p, false, steps, budget);
}

// Expresses u via the central rule r: returns (mu, E) with mu * u = E in the algebra.
std::pair<LaurentPoly, NcElement> apply_central(const Word& u, const RewriteRule& r, const Presentation& p,
                                                long& steps, long budget) {
    NcElement t = central_product(u, r, p, steps, budget);
    LaurentPoly mu = t.coefficient(u);
    if (mu.is_zero()) throw NonTerminating("central rule does not reach its leading word in " + p.render_word(u));
    for (const auto& [w, c] : t.terms())
        if (w != u && p.term_less(u, w))
            throw NonTerminating("central rule produces a larger word than " + p.render_word(u));
    NcElement e = NcElement::monomial(u, mu) - t;
    return {mu, e};
}

NcElement run_rewrite(const NcElement& start, const Presentation& p, bool use_central, long& steps, long budget) {
    NcElement::TermMap work = start.terms();
    NcElement result;
    PresentationCache& cache = p.cache();
    while (!work.empty()) {
        auto last = std::prev(work.end());
        Word u = last->first;
        LaurentPoly c = last->second;
        work.erase(last);
        if (use_central) {
            std::lock_guard<std::recursive_mutex> lock(cache.mutex);
            auto hit = cache.normal.find(u);
            if (hit != cache.normal.end()) {
                for (const auto& [v, a] : hit->second.terms()) result.add(v, c * a);
                continue;
            }
        }
        Presentation::Match m = p.find_ordinary(u, use_central);
        if (!m) {
            result.add(u, c);
            continue;
        }
        if (++steps > budget)
            throw NonTerminating("rewrite budget of " + std::to_string(budget) + " steps exceeded in " + p.name);
        const RewriteRule& r = p.rules[static_cast<size_t>(m.rule)];
        NcElement expansion;
        if (r.central) {
            auto [mu, e] = apply_central(u, r, p, steps, budget);
            expansion = mu.unit_inverse() * e;
        } else {
            Word prefix = u.substr(0, m.pos), suffix = u.substr(m.pos + r.lhs.size());
            for (const auto& [v, a] : r.rhs.terms()) expansion.add(prefix + v + suffix, a);
        }
        for (const auto& [v, a] : expansion.terms()) {
            LaurentPoly add = c * a;
            auto [it, inserted] = work.try_emplace(v, add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return result;
}

NcElement normal_word(const Word& w, const Presentation& p, long& steps, long budget) {
    if (is_normal(w, p)) return NcElement::monomial(w);
    PresentationCache& cache = p.cache();
    {
        std::lock_guard<std::recursive_mutex> lock(cache.mutex);
        auto hit = cache.normal.find(w);
        if (hit != cache.normal.end()) return hit->second;
    }
    NcElement r = run_rewrite(NcElement::monomial(w), p, true, steps, budget);
    std::lock_guard<std::recursive_mutex> lock(cache.mutex);
    if (cache.normal.size() > kMaxCacheEntries) cache.normal.clear();
    cache.normal.emplace(w, r);
    return r;
}

}  // namespace

long rewrite_budget() {
    if (const char* env = std::getenv("QDUAL_MAX_REWRITE_STEPS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 5000000;
}

Presentation::Presentation() : cache_(std::make_shared<PresentationCache>()) {}

int Presentation::generator_index(const std::string& n) const {
    for (const Generator& g : generators)
        if (g.name == n) return g.pbw_index;
    return -1;
}

NcElement Presentation::gen(const std::string& n) const {
    int g = generator_index(n);
    if (g < 0) throw UnknownGenerator("unknown generator '" + n + "' in " + name);
    return NcElement::monomial(letter(g));
}

int Presentation::word_weight(const Word& w) const {
    int s = 0;
    for (char ch : w) s += generators[static_cast<unsigned char>(ch)].weight;
    return s;
}

bool Presentation::term_less(const Word& a, const Word& b) const {
    int wa = word_weight(a), wb = word_weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
}

std::string Presentation::render_word(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += "*";
        out += generators[static_cast<unsigned char>(w[i])].name;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

std::string render_coefficient_prefix(const LaurentPoly& c, bool first, bool& negate_done) {
    // Returns the separator plus coefficient, leaving "*" insertion to the caller.
    std::string out;
    negate_done = false;
    if (c.is_unit()) {
        int k = c.min_exponent();
        Rational a = c.coefficient(k);
        bool neg = a < 0;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        negate_done = true;
        LaurentPoly mag = LaurentPoly::monomial(abs(a), k);
        if (mag == LaurentPoly(1)) return out;
        out += mag.to_string();
        return out + "*";
    }
    out += first ? "" : " + ";
    return out + "(" + c.to_string() + ")*";
}

}  // namespace

std::string Presentation::render(const NcElement& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        bool dummy = false;
        std::string pre = render_coefficient_prefix(c, first, dummy);
        if (w.empty()) {
            if (!pre.empty() && pre.back() == '*') {
                pre.pop_back();
                out += pre;
            } else {
                out += pre + "1";
            }
        } else {
            out += pre + render_word(w);
        }
        first = false;
    }
    return out;
}

std::string Presentation::render(const TensorElement& x) const {
    if (x.is_zero()) return "0";
    if (x.arity() == 0) return x.scalar_value().to_string();
    std::string out;
    bool first = true;
    for (const auto& [t, c] : x.terms()) {
        bool dummy = false;
        std::string pre = render_coefficient_prefix(c, first, dummy);
        std::string body;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) body += " @ ";
            body += render_word(t[i]);
        }
        out += pre + body;
        first = false;
    }
    return out;
}

Presentation::Match Presentation::find_ordinary(const Word& w, bool use_central) const {
    for (size_t pos = 0; pos < w.size(); ++pos)
        for (size_t len : ordinary_lengths_) {
            if (pos + len > w.size()) break;
            auto it = contiguous_ordinary_.find(w.substr(pos, len));
            if (it != contiguous_ordinary_.end()) return {it->second, pos};
        }
    if (use_central && !central_ordinary_.empty() && w.size() >= 3) {
        std::vector<int> counts = letter_counts(w, size());
        for (int r : central_ordinary_)
            if (contains_multiset(counts, rules[static_cast<size_t>(r)].lhs)) return {r, 0};
    }
    return {};
}

Presentation::Match Presentation::find_fraction(const Word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos)
        for (size_t len : fraction_lengths_) {
            if (pos + len > w.size()) break;
            auto it = contiguous_fraction_.find(w.substr(pos, len));
            if (it != contiguous_fraction_.end()) return {it->second, pos};
        }
    if (!central_fraction_.empty()) {
        std::vector<int> counts = letter_counts(w, size());
        for (int r : central_fraction_)
            if (contains_multiset(counts, rules[static_cast<size_t>(r)].lhs)) return {r, 0};
    }
    return {};
}

namespace {

// c = unit * atom with atom having constant term 1 and no negative powers.
LaurentPoly atom_of(const LaurentPoly& c, LaurentPoly* unit) {
    int lo = c.min_exponent();
    Rational lead = c.coefficient(lo);
    *unit = LaurentPoly::monomial(lead, lo);
    return (LaurentPoly::monomial(Rational(1) / lead, -lo)) * c;
}

}  // namespace

int Presentation::register_atom(const LaurentPoly& c, LaurentPoly* unit) {
    LaurentPoly a = atom_of(c, unit);
    for (size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == a) return static_cast<int>(i);
    atoms.push_back(a);
    return static_cast<int>(atoms.size()) - 1;
}

std::pair<int, LaurentPoly> Presentation::decompose_scale(const LaurentPoly& c) const {
    LaurentPoly unit;
    LaurentPoly a = atom_of(c, &unit);
    for (size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == a) return {static_cast<int>(i), unit};
    throw MathError("unregistered fraction scale " + c.to_string() + " in " + name);
}

void Presentation::build() {
    rules.clear();
    atoms.clear();
    auto reindex = [this]() {
        contiguous_ordinary_.clear();
        contiguous_fraction_.clear();
        central_ordinary_.clear();
        central_fraction_.clear();
        std::vector<size_t> ol, fl;
        for (size_t i = 0; i < rules.size(); ++i) {
            const RewriteRule& r = rules[i];
            int idx = static_cast<int>(i);
            if (r.central) {
                (r.fraction() ? central_fraction_ : central_ordinary_).push_back(idx);
            } else if (r.fraction()) {
                contiguous_fraction_.emplace(r.lhs, idx);
                fl.push_back(r.lhs.size());
            } else {
                contiguous_ordinary_.emplace(r.lhs, idx);
                ol.push_back(r.lhs.size());
            }
        }
        for (auto* v : {&ol, &fl}) {
            std::sort(v->begin(), v->end());
            v->erase(std::unique(v->begin(), v->end()), v->end());
        }
        ordinary_lengths_ = ol;
        fraction_lengths_ = fl;
        has_fraction_ = !contiguous_fraction_.empty() || !central_fraction_.empty();
        cache_ = std::make_shared<PresentationCache>();
    };
    for (size_t i = 0; i < generators.size(); ++i) generators[i].pbw_index = static_cast<int>(i);
    for (const auto& [g, gi] : inverse_pairs) {
        generators[static_cast<size_t>(g)].inverse = gi;
        generators[static_cast<size_t>(gi)].inverse = g;
        for (Word lhs : {letter(g) + letter(gi), letter(gi) + letter(g)}) {
            RewriteRule r;
            r.lhs = lhs;
            r.rhs = NcElement::one();
            rules.push_back(r);
        }
    }
    reindex();
    for (const NcElement& rel : relations) {
        NcElement n = normal_form(rel, *this);
        if (n.is_zero()) continue;
        Word lead = n.terms().begin()->first;
        for (const auto& [w, c] : n.terms())
            if (term_less(lead, w)) lead = w;
        LaurentPoly c = n.coefficient(lead);
        // A non-unit relation already implied over k(q) adds nothing to the zero test.
        if (!c.is_unit() && has_fraction_ && is_zero(n, *this)) continue;
        RewriteRule r;
        r.lhs = lead;
        bool central = false;
        if (lead.size() >= 3) {
            central = true;
            for (int g = 0; g < size() && central; ++g) {
                NcElement x = NcElement::monomial(letter(g));
                central = normal_form(concat(x, n) - concat(n, x), *this).is_zero();
            }
        }
        if (central) {
            r.central = true;
            r.relation = n;
            r.scale = c;
            r.rhs = NcElement::monomial(lead, c) - n;
        } else {
            r.rhs = NcElement::monomial(lead, c) - n;
            r.scale = c;
            if (c.is_unit()) {
                r.rhs = c.unit_inverse() * r.rhs;
                r.scale = LaurentPoly(1);
            }
        }
        if (r.fraction()) {
            LaurentPoly unit;
            r.atom = register_atom(c, &unit);
        }
        rules.push_back(r);
        reindex();
    }
}

bool is_normal(const Word& w, const Presentation& p) { return !p.find_ordinary(w); }

NcElement normal_form(const NcElement& x, const Presentation& p) {
    long steps = 0;
    long budget = rewrite_budget();
    NcElement result;
    for (const auto& [w, c] : x.terms()) {
        NcElement n = normal_word(w, p, steps, budget);
        for (const auto& [v, a] : n.terms()) result.add(v, c * a);
    }
    return result;
}

NcElement multiply(const NcElement& x, const NcElement& y, const Presentation& p) {
    return normal_form(concat(x, y), p);
}

NcElement power(const NcElement& x, unsigned e, const Presentation& p) {
    NcElement r = NcElement::one();
    for (unsigned i = 0; i < e; ++i) r = multiply(r, x, p);
    return r;
}

LaurentPoly scale_value(const Scale& s, const Presentation& p) {
    LaurentPoly v = s.unit;
    PresentationCache& cache = p.cache();
    std::lock_guard<std::recursive_mutex> lock(cache.mutex);
    if (cache.atom_powers.size() < p.atoms.size()) cache.atom_powers.resize(p.atoms.size());
    for (size_t i = 0; i < s.exps.size(); ++i) {
        if (!s.exps[i]) continue;
        auto& pw = cache.atom_powers[i];
        if (pw.empty()) pw.push_back(LaurentPoly(1));
        while (pw.size() <= static_cast<size_t>(s.exps[i])) pw.push_back(pw.back() * p.atoms[i]);
        v *= pw[static_cast<size_t>(s.exps[i])];
    }
    return v;
}

namespace {

// Pseudo-reduces a list of normal words to a common scale: returns (common, factor per word).
struct Common {
    Scale common;
    std::vector<LaurentPoly> factors;  // common / scale(word)
};

Common common_scale(const std::vector<const ReducedWord*>& rs, const Presentation& p) {
    Common out;
    out.common.exps.assign(p.atoms.size(), 0);
    for (const ReducedWord* r : rs)
        for (size_t i = 0; i < r->scale.exps.size(); ++i)
            out.common.exps[i] = std::max(out.common.exps[i], r->scale.exps[i]);
    for (const ReducedWord* r : rs) {
        Scale f;
        f.exps.assign(p.atoms.size(), 0);
        for (size_t i = 0; i < p.atoms.size(); ++i)
            f.exps[i] = out.common.exps[i] - (i < r->scale.exps.size() ? r->scale.exps[i] : 0);
        f.unit = r->scale.unit.unit_inverse();
        out.factors.push_back(scale_value(f, p));
    }
    return out;
}

ReducedWord reduce_uncached(const Word& w, const Presentation& p, int depth) {
    Presentation::Match m = p.find_fraction(w);
    ReducedWord out;
    out.scale.exps.assign(p.atoms.size(), 0);
    if (!m) {
        out.value = NcElement::monomial(w);
        return out;
    }
    if (depth > 10000) throw NonTerminating("fraction reduction too deep in " + p.name);
    const RewriteRule& r = p.rules[static_cast<size_t>(m.rule)];
    LaurentPoly c;
    NcElement e;
    if (r.central) {
        long steps = 0;
        auto [mu, ex] = apply_central(w, r, p, steps, rewrite_budget());
        c = mu;
        e = normal_form(ex, p);
    } else {
        Word prefix = w.substr(0, m.pos), suffix = w.substr(m.pos + r.lhs.size());
        for (const auto& [v, a] : r.rhs.terms()) e.add(prefix + v + suffix, a);
        e = normal_form(e, p);
        c = r.scale;
    }
    // c * w = e; reduce the words of e to a common scale S, then scale(w) = c * S.
    std::vector<const ReducedWord*> parts;
    std::vector<ReducedWord> owned;
    owned.reserve(e.terms().size());
    for (const auto& [v, a] : e.terms()) {
        if (v == w) throw NonTerminating("fraction rule reproduces its own word in " + p.name);
        owned.push_back(reduce_word(v, p));
    }
    for (const ReducedWord& rw : owned) parts.push_back(&rw);
    Common cm = common_scale(parts, p);
    size_t i = 0;
    NcElement value;
    for (const auto& [v, a] : e.terms()) {
        value += (a * cm.factors[i]) * owned[i].value;
        ++i;
    }
    auto [atom, unit] = p.decompose_scale(c);
    out.scale = cm.common;
    out.scale.exps[static_cast<size_t>(atom)] += 1;
    out.scale.unit = unit;
    out.value = value;
    return out;
}

}  // namespace

const ReducedWord& reduce_word(const Word& w, const Presentation& p) {
    PresentationCache& cache = p.cache();
    {
        std::lock_guard<std::recursive_mutex> lock(cache.mutex);
        auto hit = cache.reduced.find(w);
        if (hit != cache.reduced.end()) return hit->second;
    }
    ReducedWord r = reduce_uncached(w, p, 0);
    std::lock_guard<std::recursive_mutex> lock(cache.mutex);
    return cache.reduced.emplace(w, std::move(r)).first->second;
}

bool is_zero(const NcElement& x, const Presentation& p) {
    NcElement n = normal_form(x, p);
    if (n.is_zero() || !p.has_fraction_rules()) return n.is_zero();
    std::vector<const ReducedWord*> parts;
    for (const auto& [w, c] : n.terms()) parts.push_back(&reduce_word(w, p));
    Common cm = common_scale(parts, p);
    NcElement total;
    size_t i = 0;
    for (const auto& [w, c] : n.terms()) {
        total += (c * cm.factors[i]) * parts[i]->value;
        ++i;
    }
    return total.is_zero();
}

bool Report::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
}

void Report::add(const std::string& n, bool passed, const std::string& detail) { entries.push_back({n, passed, detail}); }

void Report::append(const Report& other, const std::string& prefix) {
    for (const CheckEntry& e : other.entries) entries.push_back({prefix + e.name, e.passed, e.detail});
}

size_t Report::failures() const {
    return static_cast<size_t>(std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return !e.passed; }));
}

Report overlap_check(const Presentation& p, size_t sample_budget) {
    Report rep;
    rep.title = "overlap_check " + p.name;
    std::vector<size_t> contiguous;
    for (size_t i = 0; i < p.rules.size(); ++i)
        if (!p.rules[i].central && !p.rules[i].fraction()) contiguous.push_back(i);
    auto rewrite_at = [&](const Word& w, size_t pos, const RewriteRule& r) {
        NcElement e;
        Word prefix = w.substr(0, pos), suffix = w.substr(pos + r.lhs.size());
        for (const auto& [v, a] : r.rhs.terms()) e.add(prefix + v + suffix, a);
        return e;
    };
    size_t resolved = 0, failed = 0;
    for (size_t i : contiguous)
        for (size_t j : contiguous) {
            const RewriteRule& r1 = p.rules[i];
            const RewriteRule& r2 = p.rules[j];
            // Proper overlaps: a suffix of lhs1 equals a prefix of lhs2.
            for (size_t o = 1; o < r1.lhs.size() && o < r2.lhs.size(); ++o) {
                if (r1.lhs.substr(r1.lhs.size() - o) != r2.lhs.substr(0, o)) continue;
                Word w = r1.lhs + r2.lhs.substr(o);
                NcElement a = rewrite_at(w, 0, r1);
                NcElement b = rewrite_at(w, r1.lhs.size() - o, r2);
                bool ok = is_zero(a - b, p);
                (ok ? resolved : failed)++;
                if (!ok) rep.add("overlap " + p.render_word(w), false, "resolutions differ: " + p.render(normal_form(a - b, p)));
            }
            // Inclusions: lhs2 strictly inside lhs1.
            if (i != j && r2.lhs.size() < r1.lhs.size()) {
                for (size_t pos = r1.lhs.find(r2.lhs); pos != Word::npos; pos = r1.lhs.find(r2.lhs, pos + 1)) {
                    NcElement a = rewrite_at(r1.lhs, 0, r1);
                    NcElement b = rewrite_at(r1.lhs, pos, r2);
                    bool ok = is_zero(a - b, p);
                    (ok ? resolved : failed)++;
                    if (!ok) rep.add("inclusion " + p.render_word(r1.lhs), false, "resolutions differ");
                }
            }
        }
    rep.add("contiguous overlaps", failed == 0,
            std::to_string(resolved) + " resolved, " + std::to_string(failed) + " failed");
    // Associativity spot checks on generator words (covers central and fraction rules).
    std::mt19937 rng(12345);
    std::vector<int> usable;
    for (int g = 0; g < p.size(); ++g) usable.push_back(g);
    auto random_word = [&](size_t len) {
        Word w;
        for (size_t k = 0; k < len; ++k) w += p.letter(usable[rng() % usable.size()]);
        return w;
    };
    size_t bad = 0, done = 0;
    for (size_t s = 0; s < sample_budget && !usable.empty(); ++s) {
        NcElement x = NcElement::monomial(random_word(1 + rng() % 2));
        NcElement y = NcElement::monomial(random_word(1 + rng() % 2));
        NcElement z = NcElement::monomial(random_word(1 + rng() % 2));
        NcElement left = multiply(multiply(x, y, p), z, p);
        NcElement right = multiply(x, multiply(y, z, p), p);
        ++done;
        if (!is_zero(left - right, p)) {
            ++bad;
            if (bad <= 3)
                rep.add("associativity sample", false,
                        p.render(x) + " | " + p.render(y) + " | " + p.render(z));
        }
    }
    rep.add("associativity samples", bad == 0, std::to_string(done) + " sampled, " + std::to_string(bad) + " failed");
    return rep;
}

Report validate_presentation(const Presentation& p) {
    Report rep;
    rep.title = "validate " + p.name;
    std::vector<bool> eliminated(static_cast<size_t>(p.size()), false);
    for (const RewriteRule& r : p.rules)
        if (!r.central && !r.fraction() && r.lhs.size() == 1) eliminated[static_cast<unsigned char>(r.lhs[0])] = true;
    size_t missing = 0;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < a; ++b) {
            if (eliminated[static_cast<size_t>(a)] || eliminated[static_cast<size_t>(b)]) continue;
            Word w = p.letter(a) + p.letter(b);
            if (is_normal(w, p)) {
                ++missing;
                rep.add("inversion " + p.render_word(w), false, "no rule orders this pair");
            }
        }
    for (const auto& [g, gi] : p.inverse_pairs) {
        bool ok = is_zero(NcElement::monomial(p.letter(g) + p.letter(gi)) - NcElement::one(), p);
        rep.add("inverse pair " + p.generators[static_cast<size_t>(g)].name, ok);
    }
    rep.add("inversions covered", missing == 0, std::to_string(missing) + " uncovered");
    return rep;
}

}  // namespace qdual
