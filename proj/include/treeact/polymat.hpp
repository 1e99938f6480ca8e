#pragma once

#include <map>

#include "treeact/mat2.hpp"

namespace treeact {

/// Laurent polynomial in y with polynomial (not rational) coefficients.
/// Cleared-denominator workhorse for fast exact word evaluation: a matrix is
/// held as (1/den)·N with N over YPoly, so multiplying along a word never
/// runs gcds.
using YPoly = std::map<int, Poly>;

inline YPoly ypoly_add(const YPoly& a, const YPoly& b) {
    YPoly r = a;
    for (const auto& [e, p] : b) {
        auto it = r.find(e);
        if (it == r.end()) {
            r.emplace(e, p);
        } else {
            Poly s = it->second + p;
            if (s.is_zero())
                r.erase(it);
            else
                it->second = std::move(s);
        }
    }
    return r;
}

inline YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
    YPoly r;
    for (const auto& [ea, pa] : a)
        for (const auto& [eb, pb] : b) {
            Poly prod = pa * pb;
            auto it = r.find(ea + eb);
            if (it == r.end()) {
                r.emplace(ea + eb, std::move(prod));
            } else {
                Poly s = it->second + prod;
                if (s.is_zero())
                    r.erase(it);
                else
                    it->second = std::move(s);
            }
        }
    return r;
}

inline YPoly ypoly_scale(const YPoly& a, const Poly& s) {
    YPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, p] : a) r.emplace(e, p * s);
    return r;
}

struct PolyMat {
    YPoly m11, m12, m21, m22;
    Poly den;

    friend PolyMat operator*(const PolyMat& a, const PolyMat& b) {
        return {ypoly_add(ypoly_mul(a.m11, b.m11), ypoly_mul(a.m12, b.m21)),
                ypoly_add(ypoly_mul(a.m11, b.m12), ypoly_mul(a.m12, b.m22)),
                ypoly_add(ypoly_mul(a.m21, b.m11), ypoly_mul(a.m22, b.m21)),
                ypoly_add(ypoly_mul(a.m21, b.m12), ypoly_mul(a.m22, b.m22)),
                a.den * b.den};
    }

    /// Whether (1/den)·N is the identity matrix.
    bool is_identity() const {
        if (!m12.empty() || !m21.empty()) return false;
        YPoly d{{0, den}};
        return m11 == d && m22 == d;
    }

    /// The (2,2) entry as an exact fraction coefficient at y^e.
    RatFunc coeff22(int e) const {
        auto it = m22.find(e);
        if (it == m22.end()) return RatFunc::zero(den.field());
        return RatFunc(it->second, den);
    }
};

/// Build from a matrix over F_p(x,y) whose entry denominators are single
/// y-terms (true for all generator images and their inverses).
inline PolyMat polymat_from(const Mat2<BiRat>& m) {
    PrimeField f = m.field();
    // Each entry becomes a YLaurent of RatFuncs.
    auto as_laurent = [&](const BiRat& e) -> YLaurent {
        if (e.den().terms().size() != 1)
            throw Error("entry denominator is not a y-monomial");
        auto [de, dc] = *e.den().terms().begin();
        return e.num().scaled(dc.inv()).shifted_y(-de);
    };
    YLaurent l11 = as_laurent(m.m11), l12 = as_laurent(m.m12), l21 = as_laurent(m.m21),
             l22 = as_laurent(m.m22);
    // Common polynomial denominator = lcm of every coefficient denominator.
    Poly den = Poly::one(f);
    for (const YLaurent* l : {&l11, &l12, &l21, &l22})
        for (const auto& [e, c] : l->terms()) {
            Poly g = poly_gcd(den, c.den());
            den = den * (c.den() / g);
        }
    auto clear = [&](const YLaurent& l) {
        YPoly r;
        for (const auto& [e, c] : l.terms()) r.emplace(e, c.num() * (den / c.den()));
        return r;
    };
    return {clear(l11), clear(l12), clear(l21), clear(l22), den};
}

}  // namespace treeact
