#pragma once

#include "treeact/mat2.hpp"
#include "treeact/valuation.hpp"

namespace treeact {

/// Parameters (c, h, d, δ) for the two-generator matrix family. All four must
/// be nonzero, and so must the derived quantities X = 1−dδh+d²h² and
/// Y = δ²−dδh+h².
struct FamilyParams {
    RatFunc c, h, d, delta;

    FamilyParams(RatFunc c_, RatFunc h_, RatFunc d_, RatFunc delta_)
        : c(std::move(c_)), h(std::move(h_)), d(std::move(d_)), delta(std::move(delta_)) {
        if (c.is_zero() || h.is_zero() || d.is_zero() || delta.is_zero())
            throw ZeroParameter();
        if (X().is_zero() || Y().is_zero()) throw DegenerateXY();
    }

    const PrimeField& field() const { return c.field(); }
    RatFunc X() const {
        RatFunc one = RatFunc::one(field());
        return one - d * delta * h + d * d * h * h;
    }
    RatFunc Y() const { return delta * delta - d * delta * h + h * h; }
};

struct FamilyPair {
    Mat2<RatFunc> A, B;
    RatFunc X, Y;
};

/// The two-generator family: A, B in SL2 with
///   tr(A) = d(X+Y)/X, tr(B) = δ(X+Y)/Y, tr(AB) = (dδ(1+h²)−h)(X+Y)/(XY)
/// and commutator(A,B) = diag(Y/X, X/Y).
inline FamilyPair matfrm_pair(const FamilyParams& p) {
    PrimeField f = p.field();
    RatFunc one = RatFunc::one(f);
    RatFunc X = p.X(), Y = p.Y();
    const RatFunc &c = p.c, &h = p.h, &d = p.d, &dl = p.delta;
    Mat2<RatFunc> A{d * Y / X, (d * dl * h * (one - d * d) + d * d * dl * dl - one) / (c * X),
                    c, d};
    Mat2<RatFunc> B{dl * X / Y,
                    (d * dl * (one - dl * dl) + h * (d * d * dl * dl - one)) / (c * Y),
                    c * h, dl};
    return {std::move(A), std::move(B), std::move(X), std::move(Y)};
}

/// Conjugate by T = diag(1, y): D = TAT⁻¹, C = TBT⁻¹. The commutator relation
/// ABA⁻¹B⁻¹ = DCD⁻¹C⁻¹ then holds because the commutator is diagonal.
inline std::pair<Mat2<BiRat>, Mat2<BiRat>> shalen_extend(const Mat2<RatFunc>& A,
                                                         const Mat2<RatFunc>& B) {
    PrimeField f = A.field();
    BiRat y = BiRat::y(f), yi = BiRat::y(f, -1);
    auto conj = [&](const Mat2<RatFunc>& M) {
        return Mat2<BiRat>{BiRat(M.m11), BiRat(M.m12) * yi, BiRat(M.m21) * y, BiRat(M.m22)};
    };
    return {conj(A), conj(B)};
}

enum class MotionKind { Elliptic, Loxodromic };

struct Classification {
    MotionKind kind;
    long long length;  // 0 for elliptic; −2·val(trace) otherwise
};

namespace detail {
inline Classification classify_from_trace_val(ValInt t) {
    if (t.is_inf() || t.value() >= 0) return {MotionKind::Elliptic, 0};
    return {MotionKind::Loxodromic, -2 * t.value()};
}
}  // namespace detail

/// Translation-length classification by trace valuation: negative valuation
/// means loxodromic with length −2·val(tr); otherwise (including trace 0,
/// valuation +∞) elliptic.
inline Classification classify(const Mat2<RatFunc>& M, const Place& place) {
    if (!M.is_sl2()) throw NotUnimodular();
    return detail::classify_from_trace_val(val(M.trace(), place));
}

inline Classification classify(const Mat2<BiRat>& M, const GaussPlace& gp) {
    if (!M.is_sl2()) throw NotUnimodular();
    return detail::classify_from_trace_val(gauss_val(M.trace(), gp));
}

/// Known-good parameters over F_p: for odd p the quadruple (1, x, 1/x², x+1);
/// for p = 2 the quadruple (1, x²+x+1, x³/((x²+x+1)(x⁵+1)), x²).
inline FamilyParams builtin_family(std::uint64_t p) {
    PrimeField f(p);
    RatFunc one = RatFunc::one(f), x = RatFunc::x(f);
    if (p != 2) return FamilyParams(one, x, one / (x * x), x + one);
    RatFunc h = x * x + x + one;
    RatFunc x5p1 = x * x * x * x * x + one;
    RatFunc d = x * x * x / (h * x5p1);
    return FamilyParams(one, h, d, x * x);
}

}  // namespace treeact
