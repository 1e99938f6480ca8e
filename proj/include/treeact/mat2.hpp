#pragma once

#include "treeact/birat.hpp"

namespace treeact {

/// 2x2 matrix over an exact field type (RatFunc or BiRat).
template <class F>
struct Mat2 {
    F m11, m12, m21, m22;

    static Mat2 identity(PrimeField f) {
        return {F::one(f), F::zero(f), F::zero(f), F::one(f)};
    }
    static Mat2 diag(F a, F b) {
        PrimeField f = a.field();
        return {std::move(a), F::zero(f), F::zero(f), std::move(b)};
    }

    const PrimeField& field() const { return m11.field(); }

    F det() const { return m11 * m22 - m12 * m21; }
    F trace() const { return m11 + m22; }
    bool is_sl2() const { return det() == F::one(m11.field()); }
    bool is_identity() const {
        PrimeField f = m11.field();
        return m11 == F::one(f) && m22 == F::one(f) && m12 == F::zero(f) && m21 == F::zero(f);
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }

    Mat2 inv() const {
        F d = det();
        if (d.is_zero()) throw SingularMatrix();
        F di = d.inv();
        return {m22 * di, -m12 * di, -m21 * di, m11 * di};
    }

    Mat2 scaled(const F& s) const { return {m11 * s, m12 * s, m21 * s, m22 * s}; }

    bool operator==(const Mat2& o) const {
        return m11 == o.m11 && m12 == o.m12 && m21 == o.m21 && m22 == o.m22;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
};

/// ABA⁻¹B⁻¹.
template <class F>
Mat2<F> commutator(const Mat2<F>& a, const Mat2<F>& b) {
    return a * b * a.inv() * b.inv();
}

/// Entry-wise lift of a matrix over F_p(x) into F_p(x,y).
inline Mat2<BiRat> lift(const Mat2<RatFunc>& m) {
    return {BiRat(m.m11), BiRat(m.m12), BiRat(m.m21), BiRat(m.m22)};
}

}  // namespace treeact
