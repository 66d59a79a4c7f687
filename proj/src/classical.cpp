/**
 * @file classical.cpp
 * @brief Semiclassical limits at q = 1 and generator-level specialization checks.
 */
#include "qdual/classical.hpp"

#include "qdual/drinfeld.hpp"
#include "qdual/errors.hpp"
#include "qdual/hopf.hpp"
#include "qdual/parse.hpp"
#include "qdual/tensor.hpp"

#include <sstream>

namespace qdual {

namespace {

NcElement commutator(const NcElement& x, const NcElement& y, const Presentation& p) {
    return multiply(x, y, p) - multiply(y, x, p);
}

TensorElement flip(const TensorElement& x) { return permute_slots(x, {1, 0}); }

NcElement table_bracket(int a, int b, const Presentation& t) {
    if (a == b) return {};
    auto it = t.bracket.find({a, b});
    if (it != t.bracket.end()) return it->second;
    it = t.bracket.find({b, a});
    if (it != t.bracket.end()) return -it->second;
    return {};
}

TensorElement table_cobracket(int g, const Presentation& t) {
    auto it = t.cobracket.find(g);
    return it == t.cobracket.end() ? TensorElement(2) : it->second;
}

/** @brief Normal form of the q = 1 value of a target element. */
NcElement at_one(const NcElement& x, const Presentation& t) { return normal_form(eval1(x), t); }
TensorElement at_one(const TensorElement& x, const Presentation& t) {
    TensorElement out(x.arity());
    for (const auto& [w, c] : x.terms()) out.add(w, LaurentPoly(lp_eval1(c)));
    return tensor_normal_form(out, t);
}

template <class T>
bool at_least(const T& x, long k, const Presentation& p) {
    const Valuation v = lattice_valuation(x, p);
    return v == kInfinity || v >= k;
}

std::string name_of(const Presentation& p, int g) { return p.generators[g].name; }

}  // namespace

LimitMarker limit_marker(const Presentation& p) {
    switch (p.classification) {
        case Classification::QFA: return LimitMarker::Poisson;
        case Classification::QUEA: return LimitMarker::CoPoisson;
        case Classification::Classical: return p.bracket.empty() ? LimitMarker::CoPoisson : LimitMarker::Poisson;
    }
    return LimitMarker::Poisson;
}

NcElement poisson_bracket(const NcElement& x, const NcElement& y, const Presentation& p) {
    return lattice_quotient_at_one(commutator(x, y, p), 1, p);
}

TensorElement co_poisson_cobracket(const NcElement& x, const Presentation& p) {
    return lattice_quotient_at_one(apply_coproduct(x, p) - apply_coproduct_op(x, p), 1, p);
}

PoissonPresentation specialize(const Presentation& p, std::optional<LimitMarker> marker) {
    PoissonPresentation lim;
    lim.name = p.name;
    lim.marker = marker.value_or(limit_marker(p));
    for (const auto& g : p.generators) lim.generators.push_back(g.name);
    for (const auto& r : p.relations) lim.relations.push_back(eval1(r));
    for (int i = 0; i < p.size(); ++i) {
        const NcElement gi = NcElement::monomial(p.letter(i));
        if (lim.marker == LimitMarker::Poisson) {
            for (int j = i + 1; j < p.size(); ++j) {
                const NcElement gj = NcElement::monomial(p.letter(j));
                const NcElement c = commutator(gi, gj, p);
                if (!zero_at_one(c, p))
                    throw NotCommutativeAtLimit(p.name + ": [" + name_of(p, i) + ", " + name_of(p, j) + "] does not vanish at q = 1");
                NcElement b = lattice_quotient_at_one(c, 1, p);
                if (!b.is_zero()) lim.bracket[{i, j}] = std::move(b);
            }
        } else {
            const TensorElement d = apply_coproduct(gi, p) - apply_coproduct_op(gi, p);
            if (!zero_at_one(d, p))
                throw NotCocommutativeAtLimit(p.name + ": Delta - Delta^op of " + name_of(p, i) + " does not vanish at q = 1");
            TensorElement c = lattice_quotient_at_one(d, 1, p);
            if (!c.is_zero()) lim.cobracket[i] = std::move(c);
        }
    }
    return lim;
}

NcElement classical_bracket(const NcElement& x, const NcElement& y, const Presentation& t) {
    NcElement out;
    for (const auto& [u, a] : x.terms()) {
        for (const auto& [v, b] : y.terms()) {
            for (size_t i = 0; i < u.size(); ++i) {
                for (size_t j = 0; j < v.size(); ++j) {
                    const NcElement br = table_bracket(static_cast<unsigned char>(u[i]), static_cast<unsigned char>(v[j]), t);
                    if (br.is_zero()) continue;
                    const Word rest = u.substr(0, i) + u.substr(i + 1) + v.substr(0, j) + v.substr(j + 1);
                    out += (a * b) * multiply(NcElement::monomial(rest), br, t);
                }
            }
        }
    }
    return normal_form(out, t);
}

TensorElement classical_cobracket(const NcElement& x, const Presentation& t) {
    TensorElement out(2);
    for (const auto& [w, c] : x.terms()) {
        for (size_t i = 0; i < w.size(); ++i) {
            const TensorElement d = table_cobracket(static_cast<unsigned char>(w[i]), t);
            if (d.is_zero()) continue;
            const TensorElement left = apply_coproduct(NcElement::monomial(w.substr(0, i)), t);
            const TensorElement right = apply_coproduct(NcElement::monomial(w.substr(i + 1)), t);
            out += c * tensor_multiply(tensor_multiply(left, d, t), right, t);
        }
    }
    return tensor_normal_form(out, t);
}

Report check_generator_map(const Presentation& src, const GeneratorMap& m) {
    Report rep;
    rep.title = "check_generator_map " + src.name + " -> " + m.target;
    const Presentation& t = catalog_classical(m.target);
    std::vector<NcElement> images(src.size());
    std::vector<bool> seen(src.size(), false);
    for (const auto& [g, expr] : m.images) {
        const int gi = src.generator_index(g);
        if (gi < 0) throw UnknownGenerator("generator map: unknown source generator " + g);
        images[gi] = parse_element(expr, t);
        seen[gi] = true;
    }
    for (int g = 0; g < src.size(); ++g)
        rep.add("image of " + name_of(src, g), seen[g], seen[g] ? t.render(images[g]) : "missing");
    if (!rep.ok()) return rep;

    if (m.even_subalgebra) {
        for (int g = 0; g < src.size(); ++g) {
            bool even = true;
            for (const auto& [w, c] : images[g].terms()) even = even && w.size() % 2 == 0;
            rep.add("even image " + name_of(src, g), even);
        }
    }

    int k = 0;
    for (const auto& r : defining_relations(src)) {
        const NcElement v = at_one(map_element(r, images, t), t);
        rep.add("relation " + std::to_string(++k), v.is_zero(), v.is_zero() ? "" : "residue " + t.render(v));
    }

    for (int g = 0; g < src.size(); ++g) {
        const std::string gn = name_of(src, g);
        const TensorElement dl = at_one(map_tensor(src.hopf.coproduct[g], images, t), t);
        const TensorElement dr = at_one(apply_coproduct(images[g], t), t);
        rep.add("coproduct " + gn, dl == dr, dl == dr ? "" : t.render(dl) + " vs " + t.render(dr));
        const Rational el = lp_eval1(src.hopf.counit[g]);
        const Rational er = lp_eval1(apply_counit(images[g], t));
        rep.add("counit " + gn, el == er);
        const NcElement sl = at_one(map_element(src.hopf.antipode[g], images, t), t);
        const NcElement sr = at_one(apply_antipode(images[g], t), t);
        rep.add("antipode " + gn, sl == sr, sl == sr ? "" : t.render(sl) + " vs " + t.render(sr));
    }

    if (limit_marker(src) == LimitMarker::Poisson) {
        for (int i = 0; i < src.size(); ++i) {
            for (int j = i + 1; j < src.size(); ++j) {
                const NcElement b = poisson_bracket(NcElement::monomial(src.letter(i)), NcElement::monomial(src.letter(j)), src);
                const NcElement l = at_one(map_element(b, images, t), t);
                const NcElement r = classical_bracket(images[i], images[j], t);
                rep.add("bracket {" + name_of(src, i) + ", " + name_of(src, j) + "}", l == r,
                        t.render(l) + (l == r ? "" : " vs " + t.render(r)));
            }
        }
    } else {
        for (int g = 0; g < src.size(); ++g) {
            const TensorElement c = co_poisson_cobracket(NcElement::monomial(src.letter(g)), src);
            const TensorElement l = at_one(map_tensor(c, images, t), t);
            const TensorElement r = classical_cobracket(images[g], t);
            rep.add("cobracket " + name_of(src, g), l == r, t.render(l) + (l == r ? "" : " vs " + t.render(r)));
        }
    }
    return rep;
}

Report poisson_properties(const Presentation& p) {
    Report rep;
    rep.title = "poisson properties " + p.name;
    const int n = p.size();
    std::vector<NcElement> g(n);
    for (int i = 0; i < n; ++i) g[i] = NcElement::monomial(p.letter(i));
    std::map<std::pair<int, int>, NcElement> br;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) br[{i, j}] = poisson_bracket(g[i], g[j], p);

    bool anti = true;
    std::string anti_detail;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (!zero_at_one(br[{i, j}] + br[{j, i}], p)) {
                anti = false;
                anti_detail = name_of(p, i) + ", " + name_of(p, j);
            }
        }
    }
    rep.add("antisymmetry (" + std::to_string(n * (n + 1) / 2) + " pairs)", anti, anti_detail);

    bool jac = true, leib = true;
    std::string jac_detail, leib_detail;
    size_t triples = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                ++triples;
                const std::string tag = name_of(p, i) + ", " + name_of(p, j) + ", " + name_of(p, k);
                const NcElement jx = poisson_bracket(g[i], br[{j, k}], p) + poisson_bracket(g[j], br[{k, i}], p) +
                                     poisson_bracket(g[k], br[{i, j}], p);
                if (!zero_at_one(jx, p)) {
                    jac = false;
                    jac_detail = tag;
                }
                // (q-1) * ({x, yz} - {x, y} z - y {x, z}) must lie in (q-1)^2 Λ.
                const NcElement lhs = commutator(g[i], multiply(g[j], g[k], p), p);
                const NcElement rhs = multiply(br[{i, j}], g[k], p) + multiply(g[j], br[{i, k}], p);
                if (!at_least(lhs - LaurentPoly::h_power(1) * rhs, 2, p)) {
                    leib = false;
                    leib_detail = tag;
                }
            }
        }
    }
    rep.add("Jacobi (" + std::to_string(triples) + " triples)", jac, jac_detail);
    rep.add("Leibniz (" + std::to_string(triples) + " triples)", leib, leib_detail);
    return rep;
}

Report copoisson_properties(const Presentation& p) {
    Report rep;
    rep.title = "co-Poisson properties " + p.name;
    const int n = p.size();
    std::vector<NcElement> g(n);
    std::vector<TensorElement> cb(n), cop(n);
    for (int i = 0; i < n; ++i) {
        g[i] = NcElement::monomial(p.letter(i));
        cb[i] = co_poisson_cobracket(g[i], p);
        cop[i] = apply_coproduct(g[i], p);
    }
    for (int i = 0; i < n; ++i)
        rep.add("antisymmetry " + name_of(p, i), zero_at_one(cb[i] + flip(cb[i]), p));
    bool leib = true;
    std::string detail;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const NcElement xy = multiply(g[i], g[j], p);
            const TensorElement lhs = apply_coproduct(xy, p) - apply_coproduct_op(xy, p);
            const TensorElement rhs = tensor_multiply(cb[i], cop[j], p) + tensor_multiply(cop[i], cb[j], p);
            if (!at_least(lhs - LaurentPoly::h_power(1) * rhs, 2, p)) {
                leib = false;
                detail = name_of(p, i) + ", " + name_of(p, j);
            }
        }
    }
    rep.add("co-Leibniz (" + std::to_string(n * n) + " pairs)", leib, detail);
    return rep;
}

std::string render_limit_table(const Presentation& p, const PoissonPresentation& lim) {
    std::ostringstream os;
    os << lim.name << " at q = 1: " << (lim.marker == LimitMarker::Poisson ? "POISSON" : "CO-POISSON") << "\n";
    if (lim.marker == LimitMarker::Poisson) {
        for (int i = 0; i < p.size(); ++i) {
            for (int j = i + 1; j < p.size(); ++j) {
                auto it = lim.bracket.find({i, j});
                os << "  {" << lim.generators[i] << ", " << lim.generators[j]
                   << "} = " << (it == lim.bracket.end() ? "0" : p.render(it->second)) << "\n";
            }
        }
    } else {
        for (int i = 0; i < p.size(); ++i) {
            auto it = lim.cobracket.find(i);
            os << "  delta(" << lim.generators[i] << ") = " << (it == lim.cobracket.end() ? "0" : p.render(it->second))
               << "\n";
        }
    }
    return os.str();
}

}  // namespace qdual
