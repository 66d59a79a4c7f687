/**
 * @file lattice.cpp
 * @brief Lattice valuation localized at q = 1: truncated power series in h = q-1
 *        and echelon forms of finite lattice windows.
 */
#include "qdual/drinfeld.hpp"

#include "qdual/errors.hpp"
#include "qdual/tensor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <functional>

namespace qdual {

namespace {

constexpr size_t kMaxWindowWords = 5000;
constexpr int kInitialPrecision = 12;
constexpr int kMaxPrecision = 384;

// ---------------------------------------------------------------- truncated series in h

/** Σ c[i] h^(lo+i) + O(h^prec); c is empty or c[0] != 0 (then lo = prec when empty). */
struct Series {
    int lo = 0;
    int prec = 0;
    std::vector<Rational> c;

    bool known() const { return !c.empty(); }
    void normalize() {
        size_t k = 0;
        while (k < c.size() && c[k] == 0) ++k;
        c.erase(c.begin(), c.begin() + static_cast<long>(k));
        lo += static_cast<int>(k);
        if (c.empty()) lo = prec;
        if (static_cast<int>(c.size()) > prec - lo) c.resize(static_cast<size_t>(std::max(0, prec - lo)));
        if (c.empty()) lo = prec;
    }
    Rational coefficient(int k) const {
        if (k < lo || k - lo >= static_cast<int>(c.size())) return 0;
        return c[static_cast<size_t>(k - lo)];
    }
};

Series make_series(int lo, int prec, std::vector<Rational> c) {
    Series s;
    s.lo = lo;
    s.prec = prec;
    s.c = std::move(c);
    s.normalize();
    return s;
}

// Generalized binomial coefficient C(k, j) for integer k and j >= 0.
Rational binom(int k, int j) {
    Rational r = 1;
    for (int i = 0; i < j; ++i) {
        r *= Rational(k - i);
        r /= Rational(i + 1);
    }
    return r;
}

// Expansion of a Laurent polynomial around q = 1 (q = 1 + h).
Series from_laurent(const LaurentPoly& a, int prec) {
    std::vector<Rational> c(static_cast<size_t>(prec), Rational(0));
    if (!a.is_zero()) {
        int k = a.min_exponent();
        for (const Rational& ak : a.dense()) {
            if (ak != 0)
                for (int j = 0; j < prec; ++j) {
                    if (k >= 0 && j > k) break;
                    c[static_cast<size_t>(j)] += ak * binom(k, j);
                }
            ++k;
        }
    }
    return make_series(0, prec, std::move(c));
}

Series mul(const Series& a, const Series& b) {
    int prec = std::min(a.lo + b.prec, b.lo + a.prec);
    int lo = a.lo + b.lo;
    if (prec <= lo || !a.known() || !b.known()) return make_series(std::min(lo, prec), prec, {});
    std::vector<Rational> c(static_cast<size_t>(prec - lo), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size() && i + j < c.size(); ++j)
            if (b.c[j] != 0) c[i + j] += a.c[i] * b.c[j];
    }
    return make_series(lo, prec, std::move(c));
}

Series add(const Series& a, const Series& b, const Rational& scale_b = 1) {
    int prec = std::min(a.prec, b.prec);
    int lo = std::min({a.lo, b.lo, prec});
    std::vector<Rational> c(static_cast<size_t>(prec - lo), Rational(0));
    for (int k = lo; k < prec; ++k) c[static_cast<size_t>(k - lo)] = a.coefficient(k) + scale_b * b.coefficient(k);
    return make_series(lo, prec, std::move(c));
}

// a / p for p with known valuation.
Series divide(const Series& a, const Series& p) {
    int vp = p.lo;
    int rel = p.prec - vp;  // relative precision of the unit part
    std::vector<Rational> inv(static_cast<size_t>(rel), Rational(0));
    inv[0] = 1 / p.c[0];
    for (int k = 1; k < rel; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k && j < static_cast<int>(p.c.size()); ++j) s += p.c[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -s * inv[0];
    }
    Series u = make_series(0, rel, std::move(inv));
    Series as = a;
    as.lo -= vp;
    as.prec -= vp;
    return mul(as, u);
}

Series negate(Series a) {
    for (Rational& r : a.c) r = -r;
    return a;
}

// ---------------------------------------------------------------- windows

struct Coord {
    int gen = -1;  ///< generator (positive direction)
    int inv = -1;  ///< inverse partner (negative direction), -1 if none
};

std::vector<Coord> coordinates(const Presentation& p) {
    std::vector<Coord> out;
    for (int g = 0; g < p.size(); ++g) {
        int gi = p.generators[static_cast<size_t>(g)].inverse;
        if (gi >= 0 && gi < g) continue;
        out.push_back({g, gi});
    }
    return out;
}

// Signed exponent vector of a word; nullopt when not a lattice monomial (unsorted or mixing a pair).
std::vector<int> exponents(const Word& w, const Presentation& p, const std::vector<Coord>& coords, bool* monomial) {
    std::vector<int> e(coords.size(), 0);
    std::vector<int> slot(static_cast<size_t>(p.size()), -1), sign(static_cast<size_t>(p.size()), 1);
    for (size_t i = 0; i < coords.size(); ++i) {
        slot[static_cast<size_t>(coords[i].gen)] = static_cast<int>(i);
        if (coords[i].inv >= 0) {
            slot[static_cast<size_t>(coords[i].inv)] = static_cast<int>(i);
            sign[static_cast<size_t>(coords[i].inv)] = -1;
        }
    }
    bool sorted = true;
    std::vector<int> seen_sign(coords.size(), 0);
    for (size_t i = 0; i < w.size(); ++i) {
        int g = static_cast<unsigned char>(w[i]);
        if (i > 0 && static_cast<unsigned char>(w[i - 1]) > g) sorted = false;
        size_t s = static_cast<size_t>(slot[static_cast<size_t>(g)]);
        int sg = sign[static_cast<size_t>(g)];
        if (seen_sign[s] != 0 && seen_sign[s] != sg) sorted = false;
        seen_sign[s] = sg;
        e[s] += sg;
    }
    if (monomial) *monomial = sorted;
    return e;
}

Word monomial_word(const std::vector<int>& e, const std::vector<Coord>& coords) {
    std::vector<std::pair<int, int>> letters;  // (generator, count)
    for (size_t i = 0; i < coords.size(); ++i) {
        if (e[i] > 0) letters.emplace_back(coords[i].gen, e[i]);
        if (e[i] < 0) letters.emplace_back(coords[i].inv, -e[i]);
    }
    std::sort(letters.begin(), letters.end());
    Word w;
    for (auto [g, k] : letters) w += Word(static_cast<size_t>(k), static_cast<char>(g));
    return w;
}

int grade_of(const std::vector<int>& e, const std::vector<Coord>& coords, const Presentation& p) {
    int d = 0;
    for (size_t i = 0; i < coords.size(); ++i) {
        auto it = p.lattice.grading.find(coords[i].gen);
        if (it != p.lattice.grading.end()) d += it->second * e[i];
    }
    return d;
}

/** k(q)-coordinates of a normal element on the reduced basis words, as series. */
using Vec = std::map<Word, Series>;

void add_to(Vec& v, const Word& w, const Series& s) {
    auto it = v.find(w);
    if (it == v.end()) v.emplace(w, s);
    else it->second = add(it->second, s);
}

Vec coordinates_of(const NcElement& normal, const Presentation& p, int prec) {
    Vec v;
    for (const auto& [w, c] : normal.terms()) {
        const ReducedWord& r = reduce_word(w, p);
        Series inv_scale = divide(from_laurent(1, prec), from_laurent(scale_value(r.scale, p), prec));
        Series cs = mul(from_laurent(c, prec), inv_scale);
        for (const auto& [b, a] : r.value.terms()) add_to(v, b, mul(cs, from_laurent(a, prec)));
    }
    return v;
}

/** Memoized coordinates of a single word (normalized first). */
const Vec& word_coordinates(const Word& w, const Presentation& p, int prec) {
    static std::mutex mutex;
    static std::map<std::tuple<const void*, int, Word>, Vec> memo;
    auto key = std::make_tuple(static_cast<const void*>(&p.cache()), prec, w);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Vec v = coordinates_of(normal_form(NcElement::monomial(w), p), p, prec);
    std::lock_guard<std::mutex> lock(mutex);
    if (memo.size() > 200000) memo.clear();
    return memo.emplace(key, std::move(v)).first->second;
}

/**
 * R-basis (R = Q[q,q^-1] localized at q = 1) of the window lattice restricted to
 * the column component of the support, with solve() for elements of its span.
 */
struct LocalBasis {
    struct Row {
        Vec vec;                       ///< coordinates
        std::map<size_t, Rational> combo;  ///< at q = 1, as combination of window monomials
    };
    std::vector<Word> window;  ///< lattice monomials
    std::vector<Row> basis;
    std::vector<Word> pivot_col;
    int prec = 0;

    /** Coordinates t_j with v = Σ t_j basis_j; throws if v is outside the span to the precision. */
    std::vector<Series> solve(Vec v) const {
        std::vector<Series> t;
        for (size_t j = 0; j < basis.size(); ++j) {
            auto it = v.find(pivot_col[j]);
            Series x = it == v.end() ? make_series(prec, prec, {}) : it->second;
            Series tj = divide(x, basis[j].vec.at(pivot_col[j]));
            if (tj.known())
                for (const auto& [w, s] : basis[j].vec) add_to(v, w, negate(mul(tj, s)));
            t.push_back(tj);
        }
        for (const auto& [w, s] : v)
            if (s.known()) throw WindowExceeded("element is outside the span of its lattice window");
        return t;
    }
};

/** Monomial window around a support: exponent box, admissible grades and total-degree cap. */
struct WindowSpec {
    std::vector<int> lo, hi;
    std::set<int> grades;
    int degree_cap = 0;
};

WindowSpec window_spec(const std::vector<Word>& support, const Presentation& p) {
    const std::vector<Coord> coords = coordinates(p);
    const int slack = window_slack();
    WindowSpec ws;
    ws.lo.assign(coords.size(), 0);
    ws.hi.assign(coords.size(), 0);
    int max_degree = 0;
    bool first = true;
    for (const Word& w : support) {
        std::vector<int> e = exponents(w, p, coords, nullptr);
        ws.grades.insert(grade_of(e, coords, p));
        int deg = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            ws.lo[i] = first ? e[i] : std::min(ws.lo[i], e[i]);
            ws.hi[i] = first ? e[i] : std::max(ws.hi[i], e[i]);
            deg += std::abs(e[i]);
        }
        max_degree = std::max(max_degree, deg);
        first = false;
    }
    for (size_t i = 0; i < coords.size(); ++i) {
        ws.lo[i] -= slack;
        ws.hi[i] += slack;
        if (coords[i].inv < 0) ws.lo[i] = std::max(ws.lo[i], 0);
    }
    ws.degree_cap = max_degree + slack;
    return ws;
}

/** Echelon basis of the window, restricted to the column component connected to the support. */
std::unique_ptr<LocalBasis> build_basis(const std::vector<Word>& support, const Presentation& p, int prec) {
    const WindowSpec ws = window_spec(support, p);
    const std::vector<Coord> coords = coordinates(p);
    const std::vector<int>& lo = ws.lo;
    const std::vector<int>& hi = ws.hi;
    const std::set<int>& grades = ws.grades;
    const int degree_cap = ws.degree_cap;
    auto lb = std::make_unique<LocalBasis>();
    lb->prec = prec;
    // Enumerate the window monomials.
    std::vector<int> e(coords.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int deg) {
        if (i == coords.size()) {
            if (grades.count(grade_of(e, coords, p))) {
                lb->window.push_back(monomial_word(e, coords));
                if (lb->window.size() > kMaxWindowWords)
                    throw WindowExceeded("lattice window exceeds " + std::to_string(kMaxWindowWords) + " monomials");
            }
            return;
        }
        for (int k = lo[i]; k <= hi[i]; ++k) {
            if (deg + std::abs(k) > degree_cap) continue;
            e[i] = k;
            rec(i + 1, deg + std::abs(k));
        }
        e[i] = 0;
    };
    rec(0, 0);
    // Coordinates of every window monomial.
    std::vector<Vec> vecs;
    vecs.reserve(lb->window.size());
    for (const Word& w : lb->window) vecs.push_back(word_coordinates(w, p, prec));
    // Column component reachable from the support.
    std::set<Word> cols;
    for (const Word& w : support)
        for (const auto& [b, s] : word_coordinates(w, p, prec)) cols.insert(b);
    std::vector<bool> used(vecs.size(), false);
    for (bool grew = true; grew;) {
        grew = false;
        for (size_t r = 0; r < vecs.size(); ++r) {
            if (used[r]) continue;
            bool touches = false;
            for (const auto& [b, s] : vecs[r])
                if (cols.count(b)) touches = true;
            if (!touches) continue;
            used[r] = true;
            grew = true;
            for (const auto& [b, s] : vecs[r]) cols.insert(b);
        }
    }
    std::vector<LocalBasis::Row> rows;
    for (size_t r = 0; r < vecs.size(); ++r) {
        if (!used[r]) continue;
        LocalBasis::Row row;
        for (auto& [b, s] : vecs[r])
            if (s.known()) row.vec.emplace(b, s);
        row.combo.emplace(r, Rational(1));
        rows.push_back(std::move(row));
    }
    // Echelon form with pivots of least valuation.
    std::vector<bool> done(rows.size(), false);
    for (;;) {
        long best = -1;
        Word best_col;
        int best_val = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (done[r]) continue;
            for (const auto& [b, s] : rows[r].vec)
                if (s.known() && (best < 0 || s.lo < best_val)) {
                    best = static_cast<long>(r);
                    best_col = b;
                    best_val = s.lo;
                }
        }
        if (best < 0) break;
        const size_t pr = static_cast<size_t>(best);
        done[pr] = true;
        const LocalBasis::Row& piv = rows[pr];
        const Series& pv = piv.vec.at(best_col);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (done[r]) continue;
            auto it = rows[r].vec.find(best_col);
            if (it == rows[r].vec.end()) continue;
            Series f = divide(it->second, pv);
            for (const auto& [b, s] : piv.vec) add_to(rows[r].vec, b, negate(mul(f, s)));
            // Pivots have least valuation, so f is integral and combinations only matter mod (q-1).
            const Rational f0 = f.coefficient(0);
            if (f0 != 0) {
                for (const auto& [m, c] : piv.combo) {
                    Rational& slot = rows[r].combo[m];
                    slot -= f0 * c;
                    if (slot == 0) rows[r].combo.erase(m);
                }
            }
            for (auto jt = rows[r].vec.begin(); jt != rows[r].vec.end();)
                jt = jt->second.known() ? std::next(jt) : rows[r].vec.erase(jt);
            if (rows[r].vec.empty()) done[r] = true;  // a syzygy; never a pivot
        }
        lb->basis.push_back(piv);
        lb->pivot_col.push_back(best_col);
    }
    return lb;
}

// Cache of slot bases keyed by presentation identity, precision and support.
struct BasisCache {
    std::mutex mutex;
    std::map<std::tuple<const void*, int, std::vector<Word>>, std::shared_ptr<LocalBasis>> map;
};

BasisCache& basis_cache() {
    static BasisCache c;
    return c;
}

std::shared_ptr<LocalBasis> slot_basis(const std::vector<Word>& support, const Presentation& p, int prec) {
    auto key = std::make_tuple(static_cast<const void*>(&p.cache()), prec, support);
    {
        std::lock_guard<std::mutex> lock(basis_cache().mutex);
        auto it = basis_cache().map.find(key);
        if (it != basis_cache().map.end()) return it->second;
    }
    std::shared_ptr<LocalBasis> b = build_basis(support, p, prec);
    std::lock_guard<std::mutex> lock(basis_cache().mutex);
    if (basis_cache().map.size() > 20000) basis_cache().map.clear();
    basis_cache().map.emplace(key, b);
    return b;
}

bool uses_naive_valuation(const TensorElement& n, const Presentation& p) {
    if (p.lattice.kind == LatticeKind::Free) return true;
    if (p.has_fraction_rules()) return false;
    const std::vector<Coord> coords = coordinates(p);
    for (const auto& [t, c] : n.terms())
        for (const Word& w : t) {
            bool mono = false;
            exponents(w, p, coords, &mono);
            if (!mono) return false;
        }
    return true;
}

/** Coordinates of a normalized tensor in the product of slot R-bases. */
struct Decomposition {
    std::vector<std::shared_ptr<LocalBasis>> slots;
    std::map<std::vector<size_t>, Series> coeffs;
    Valuation dropped = kInfinity;  ///< lower bound of omitted contributions
};

Decomposition decompose(const TensorElement& n, const Presentation& p, int prec) {
    const size_t arity = static_cast<size_t>(n.arity());
    Decomposition d;
    std::vector<std::map<Word, std::vector<Series>>> solved(arity);
    for (size_t s = 0; s < arity; ++s) {
        std::set<Word> sup;
        for (const auto& [t, c] : n.terms()) sup.insert(t[s]);
        std::vector<Word> support(sup.begin(), sup.end());
        d.slots.push_back(slot_basis(support, p, prec));
        for (const Word& w : support) solved[s][w] = d.slots[s]->solve(word_coordinates(w, p, prec));
    }
    for (const auto& [t, c] : n.terms()) {
        std::vector<std::pair<std::vector<size_t>, Series>> partial{{{}, from_laurent(c, prec)}};
        for (size_t s = 0; s < arity; ++s) {
            std::vector<std::pair<std::vector<size_t>, Series>> next;
            const std::vector<Series>& ts = solved[s][t[s]];
            for (const auto& [idx, val] : partial)
                for (size_t j = 0; j < ts.size(); ++j) {
                    if (!ts[j].known()) {
                        // Zero to the working precision: only its bound is kept.
                        d.dropped = std::min<Valuation>(d.dropped, val.lo + ts[j].prec);
                        continue;
                    }
                    std::vector<size_t> ni = idx;
                    ni.push_back(j);
                    next.emplace_back(std::move(ni), mul(val, ts[j]));
                }
            partial = std::move(next);
        }
        for (auto& [idx, val] : partial) {
            auto it = d.coeffs.find(idx);
            if (it == d.coeffs.end()) d.coeffs.emplace(idx, val);
            else it->second = add(it->second, val);
        }
    }
    return d;
}

// Least valuation among the coordinates, or nullopt when truncation leaves it undetermined.
std::optional<Valuation> min_valuation(const Decomposition& d) {
    Valuation known = kInfinity, bound = d.dropped;
    for (const auto& [idx, s] : d.coeffs) {
        if (s.known()) known = std::min<Valuation>(known, s.lo);
        else bound = std::min<Valuation>(bound, s.prec);
    }
    if (known == kInfinity || known > bound) return std::nullopt;
    return known;
}

// Runs f(prec) with increasing precision until it yields a definite answer.
template <typename F>
auto with_precision(F f) {
    for (int prec = kInitialPrecision;; prec *= 2) {
        if (auto r = f(prec)) return *r;
        if (prec * 2 > kMaxPrecision) throw MathError("lattice valuation exceeds the working precision");
    }
}

}  // namespace

int window_slack() {
    if (const char* s = std::getenv("QDUAL_WINDOW_SLACK")) {
        try {
            int v = std::stoi(s);
            if (v >= 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 2;
}

Valuation lattice_valuation(const TensorElement& x, const Presentation& p) {
    TensorElement n = tensor_normal_form(x, p);
    if (n.is_zero()) return kInfinity;
    if (uses_naive_valuation(n, p)) return tensor_coeff_valuation(n);
    if (tensor_is_zero(n, p)) return kInfinity;
    return with_precision([&](int prec) -> std::optional<Valuation> {
        return min_valuation(decompose(n, p, prec));
    });
}

Valuation lattice_valuation(const NcElement& x, const Presentation& p) {
    return lattice_valuation(TensorElement::from_element(x), p);
}

TensorElement lattice_quotient_at_one(const TensorElement& x, int k, const Presentation& p) {
    TensorElement n = tensor_normal_form(x, p);
    if (n.is_zero()) return TensorElement(x.arity());
    if (uses_naive_valuation(n, p)) {
        if (tensor_coeff_valuation(n) < k) throw NotDivisible("lattice valuation is below " + std::to_string(k));
        return eval1(shift_q1(n, -k));
    }
    if (tensor_is_zero(n, p)) return TensorElement(x.arity());
    return with_precision([&](int prec) -> std::optional<TensorElement> {
        Decomposition d = decompose(n, p, prec);
        std::optional<Valuation> v = min_valuation(d);
        if (!v) return std::nullopt;
        if (*v < k) throw NotDivisible("lattice valuation is below " + std::to_string(k));
        if (d.dropped <= k) return std::nullopt;
        for (const auto& [idx, s] : d.coeffs)
            if (s.prec <= k) return std::nullopt;
        TensorElement out(x.arity());
        for (const auto& [idx, s] : d.coeffs) {
            Rational a = s.coefficient(k);
            if (a == 0) continue;
            // Basis vector of each slot at q = 1, as monomials.
            std::vector<std::pair<WordTuple, Rational>> partial{{WordTuple(), a}};
            for (size_t slot = 0; slot < idx.size(); ++slot) {
                const LocalBasis& lb = *d.slots[slot];
                std::vector<std::pair<WordTuple, Rational>> next;
                for (const auto& [m, c0] : lb.basis[idx[slot]].combo) {
                    for (const auto& [t, r] : partial) {
                        WordTuple nt = t;
                        nt.push_back(lb.window[m]);
                        next.emplace_back(std::move(nt), r * c0);
                    }
                }
                partial = std::move(next);
            }
            for (const auto& [t, r] : partial) out.add(t, LaurentPoly(r));
        }
        return out;
    });
}

NcElement lattice_quotient_at_one(const NcElement& x, int k, const Presentation& p) {
    return lattice_quotient_at_one(TensorElement::from_element(x), k, p).as_element();
}

bool zero_at_one(const TensorElement& x, const Presentation& p) { return lattice_valuation(x, p) >= 1; }
bool zero_at_one(const NcElement& x, const Presentation& p) { return lattice_valuation(x, p) >= 1; }

}  // namespace qdual
