/**
 * @file test_representation.cpp
 * @brief Independent oracle: the spin-1/2 and spin-1 representations of Uq_sl2_hat
 *        must agree on a word and on its normal form, coproduct and antipode.
 */
#include <doctest.h>

#include "qdual/catalog.hpp"
#include "qdual/hopf.hpp"
#include "qdual/parse.hpp"

#include <map>
#include <random>

using namespace qdual;

namespace {

struct Mat {
    int n = 0;
    std::vector<LaurentPoly> a;
    explicit Mat(int d = 0) : n(d), a(static_cast<size_t>(d * d)) {}
    LaurentPoly& at(int i, int j) { return a[static_cast<size_t>(i * n + j)]; }
    const LaurentPoly& at(int i, int j) const { return a[static_cast<size_t>(i * n + j)]; }
    static Mat identity(int d) {
        Mat m(d);
        for (int i = 0; i < d; ++i) m.at(i, i) = 1;
        return m;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat r(x.n);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (int j = 0; j < x.n; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }
    friend Mat operator+(Mat x, const Mat& y) {
        for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
        return x;
    }
    friend Mat operator*(const LaurentPoly& c, Mat x) {
        for (auto& v : x.a) v *= c;
        return x;
    }
    friend bool operator==(const Mat& x, const Mat& y) { return x.a == y.a; }
};

Mat kron(const Mat& x, const Mat& y) {
    Mat r(x.n * y.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            for (int k = 0; k < y.n; ++k)
                for (int l = 0; l < y.n; ++l) r.at(i * y.n + k, j * y.n + l) = x.at(i, j) * y.at(k, l);
    return r;
}

using Rep = std::map<std::string, Mat>;

LaurentPoly qp(int k) { return LaurentPoly::q_power(k); }

Rep spin_half() {
    Rep r;
    Mat k(2), ki(2), h(2), g(2), e(2), f(2);
    k.at(0, 0) = qp(1), k.at(1, 1) = qp(-1);
    ki.at(0, 0) = qp(-1), ki.at(1, 1) = qp(1);
    h.at(0, 0) = 1, h.at(1, 1) = -qp(-1);
    g.at(0, 0) = 1, g.at(1, 1) = -1;
    e.at(0, 1) = 1;
    f.at(1, 0) = 1;
    r["K"] = k, r["Kinv"] = ki, r["H"] = h, r["Gamma"] = g, r["E"] = e, r["F"] = f;
    return r;
}

Rep spin_one() {
    Rep r;
    Mat k(3), ki(3), h(3), g(3), e(3), f(3);
    const LaurentPoly two = qp(1) + qp(-1);
    k.at(0, 0) = qp(2), k.at(1, 1) = 1, k.at(2, 2) = qp(-2);
    ki.at(0, 0) = qp(-2), ki.at(1, 1) = 1, ki.at(2, 2) = qp(2);
    h.at(0, 0) = qp(1) + 1, h.at(2, 2) = -qp(-1) - qp(-2);
    g.at(0, 0) = two, g.at(2, 2) = -two;
    e.at(0, 1) = 1, e.at(1, 2) = 1;
    f.at(1, 0) = two, f.at(2, 1) = two;
    r["K"] = k, r["Kinv"] = ki, r["H"] = h, r["Gamma"] = g, r["E"] = e, r["F"] = f;
    return r;
}

Mat eval(const NcElement& x, const Presentation& p, const Rep& rep) {
    const int d = rep.begin()->second.n;
    Mat out(d);
    for (const auto& [w, c] : x.terms()) {
        Mat m = Mat::identity(d);
        for (char ch : w) m = m * rep.at(p.generators[static_cast<unsigned char>(ch)].name);
        out = out + c * m;
    }
    return out;
}

Mat eval2(const TensorElement& x, const Presentation& p, const Rep& rep) {
    const int d = rep.begin()->second.n;
    Mat out(d * d);
    for (const auto& [t, c] : x.terms())
        out = out + c * kron(eval(NcElement::monomial(t[0]), p, rep), eval(NcElement::monomial(t[1]), p, rep));
    return out;
}

Word random_word(std::mt19937& rng, int n_gens, int len) {
    std::uniform_int_distribution<int> pick(0, n_gens - 1);
    Word w;
    for (int i = 0; i < len; ++i) w += static_cast<char>(pick(rng));
    return w;
}

}  // namespace

TEST_SUITE("representation") {
    TEST_CASE("declared relations hold in the representations") {
        const Presentation& p = catalog_get("Uq_sl2_hat").hat;
        for (const Rep& rep : {spin_half(), spin_one()}) {
            const int d = rep.begin()->second.n;
            for (const NcElement& r : defining_relations(p)) CHECK(eval(r, p, rep) == Mat(d));
        }
    }

    TEST_CASE("normal forms, coproducts and antipodes agree with the representations") {
        const Presentation& p = catalog_get("Uq_sl2_hat").hat;
        std::mt19937 rng(20261019);
        for (const Rep& rep : {spin_half(), spin_one()}) {
            for (int trial = 0; trial < 40; ++trial) {
                const Word w = random_word(rng, p.size(), 2 + trial % 4);
                const NcElement x = NcElement::monomial(w);
                CHECK(eval(normal_form(x, p), p, rep) == eval(x, p, rep));
                // Delta is multiplicative: compare with the product of generator coproducts.
                const int d = rep.begin()->second.n;
                Mat prod = Mat::identity(d * d), sprod = Mat::identity(d);
                for (char ch : w) {
                    prod = prod * eval2(p.hopf.coproduct[static_cast<unsigned char>(ch)], p, rep);
                    sprod = eval(p.hopf.antipode[static_cast<unsigned char>(ch)], p, rep) * sprod;
                }
                CHECK(eval2(apply_coproduct(x, p), p, rep) == prod);
                CHECK(eval(apply_antipode(x, p), p, rep) == sprod);
            }
        }
    }
}
