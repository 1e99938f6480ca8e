#pragma once

#include <optional>

#include "treeact/surfacerep.hpp"

namespace treeact {

struct NotNegative : Error {
    explicit NotNegative(const std::string& msg = "a trace valuation is not negative")
        : Error(msg) {}
};

struct NotEqual : Error {
    explicit NotEqual(const std::string& msg = "trace valuations are negative but unequal")
        : Error(msg) {}
};

/// Discreteness/freeness certificate for a matrix pair: the valuations of
/// tr(A), tr(B), tr(AB) are all equal and negative, which puts the pair in the
/// trace-valuation criterion's free-and-discrete case. Unequal negative
/// valuations are outside the implemented criterion and are rejected, never
/// certified.
struct FreeCert {
    Place place;
    long long s;  // the common (negative) trace valuation
    long long length_A, length_B, length_AB;
};

inline FreeCert free_discrete_certificate(const Mat2<RatFunc>& A, const Mat2<RatFunc>& B,
                                          const Place& place) {
    if (!A.is_sl2() || !B.is_sl2()) throw NotUnimodular();
    ValInt ta = val(A.trace(), place);
    ValInt tb = val(B.trace(), place);
    ValInt tab = val((A * B).trace(), place);
    for (ValInt t : {ta, tb, tab})
        if (t.is_inf() || t.value() >= 0) throw NotNegative();
    if (ta != tb || tb != tab) throw NotEqual();
    long long s = ta.value();
    return {place, s, -2 * s, -2 * s, -2 * s};
}

/// End-to-end certificate for the builtin surface representation at a prime:
/// the free pair certificate, the diagonal commutator witness, and the
/// non-scalar witness X² ≠ Y² (which rules out the commutator being central,
/// so the conjugation trick produces a faithful amalgam representation).
struct SurfaceCert {
    FreeCert free_cert;
    RatFunc commutator_tl, commutator_br;  // Y/X and X/Y
    bool commutator_diagonal;
    bool non_scalar;       // X² ≠ Y²
    bool relation_holds;   // ABA⁻¹B⁻¹ = DCD⁻¹C⁻¹ over F_p(x,y)
    SurfaceRep rep;
};

inline SurfaceCert surface_rep_certificate(std::uint64_t p) {
    SurfaceRep rep = builtin_surface_rep(p);
    PrimeField f = rep.field;
    Place inf = Place::at_infinity(f);
    FreeCert fc = free_discrete_certificate(rep.A, rep.B, inf);

    Mat2<RatFunc> comm = commutator(rep.A, rep.B);
    RatFunc yx = rep.Y / rep.X, xy = rep.X / rep.Y;
    bool diag = comm.m12.is_zero() && comm.m21.is_zero() && comm.m11 == yx && comm.m22 == xy;
    bool nonscalar = rep.X * rep.X != rep.Y * rep.Y;
    Mat2<BiRat> lhs = commutator(rep.img[static_cast<std::size_t>(Gen::a)],
                                 rep.img[static_cast<std::size_t>(Gen::b)]);
    Mat2<BiRat> rhs = commutator(rep.img[static_cast<std::size_t>(Gen::d)],
                                 rep.img[static_cast<std::size_t>(Gen::c)]);
    bool rel = lhs == rhs;
    if (!diag) throw Error("commutator is not the expected diagonal");
    if (!nonscalar) throw DegenerateXY("X^2 = Y^2: commutator is scalar");
    if (!rel) throw Error("surface relation fails");
    return {fc, yx, xy, diag, nonscalar, rel, std::move(rep)};
}

/// Exact-equality report for the closed-form identities of the matrix family:
/// determinants, the displayed AB and BA, the diagonal commutator, and the
/// three trace formulas, each checked against independent matrix arithmetic.
struct IdentityReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_ok() const {
        for (const auto& [n, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

inline IdentityReport verify_matfrm_identities(const FamilyParams& p) {
    PrimeField f = p.field();
    RatFunc one = RatFunc::one(f);
    FamilyPair fp = matfrm_pair(p);
    const RatFunc &c = p.c, &h = p.h, &d = p.d, &dl = p.delta;
    const RatFunc &X = fp.X, &Y = fp.Y;
    RatFunc t = d * dl * (one + h * h) - h;  // dδ(1+h²)−h

    IdentityReport r;
    auto check = [&](const std::string& name, bool ok) { r.checks.emplace_back(name, ok); };
    check("det(A)=1", fp.A.det() == one);
    check("det(B)=1", fp.B.det() == one);

    Mat2<RatFunc> AB = fp.A * fp.B;
    check("AB.11", AB.m11 == t / X);
    check("AB.12", AB.m12 == (d * h * (dl * dl - one) + dl * (d * d - one)) / (c * X));
    check("AB.21", AB.m21 == c * (dl + d * h * h * h) / Y);
    check("AB.22", AB.m22 == t / Y);

    Mat2<RatFunc> BA = fp.B * fp.A;
    check("BA.11", BA.m11 == t / Y);
    check("BA.12", BA.m12 == (d * h * (dl * dl - one) + dl * (d * d - one)) / (c * Y));
    check("BA.21", BA.m21 == c * (dl + d * h * h * h) / X);
    check("BA.22", BA.m22 == t / X);

    check("tr(A)", fp.A.trace() == d * (X + Y) / X);
    check("tr(B)", fp.B.trace() == dl * (X + Y) / Y);
    check("tr(AB)", AB.trace() == t * (X + Y) / (X * Y));

    Mat2<RatFunc> comm = commutator(fp.A, fp.B);
    check("[A,B] diagonal",
          comm.m12.is_zero() && comm.m21.is_zero() && comm.m11 == Y / X && comm.m22 == X / Y);
    return r;
}

/// Search for the substitution y ↦ y·xⁿ that makes every listed word act
/// loxodromically: the smallest n ≤ n_max for which every word's trace has
/// negative Gauss valuation at weight w = −n, attained by a unique y-term
/// (so the value survives for any actual transcendental y of that valuation).
struct LoxodromifyResult {
    bool found;
    long long n;
    std::vector<long long> trace_valuations;  // per word, at the found n
};

inline LoxodromifyResult loxodromify(const std::vector<Word>& words, const SurfaceRep& rep,
                                     const Place& place, long long n_max = 64) {
    std::vector<BiRat> traces;
    for (const Word& w : words) {
        if (amalgam_normal_form(w).kind == AmalgamNF::Kind::Identity) throw TrivialWord();
        traces.push_back(evaluate(w, rep).trace());
    }
    // A candidate n is accepted only when, for every trace, the weighted
    // minimum is attained uniquely at the top y-degree of both numerator and
    // denominator, with the numerator's top degree at least the denominator's.
    // Then every larger n keeps the minima at the top degrees (lower-degree
    // gaps only grow) and the valuation is non-increasing in n, so success is
    // monotone, matching the "n large enough" dominance argument.
    auto top_min = [&](const YLaurent& f, const GaussPlace& gp) {
        ValInt best = ValInt::inf();
        long long arg = 0;
        bool unique = true;
        for (const auto& [l, c] : f.terms()) {
            ValInt t = ValInt::of(val(c, gp.base).value() + l * gp.w);
            if (t < best) {
                best = t;
                arg = l;
                unique = true;
            } else if (t == best) {
                unique = false;
            }
        }
        return std::pair<ValInt, bool>{best, unique && arg == f.max_exp()};
    };
    for (long long n = 0; n <= n_max; ++n) {
        GaussPlace gp{place, -n};
        std::vector<long long> vals;
        bool ok = true;
        for (const BiRat& t : traces) {
            if (t.is_zero()) {
                ok = false;
                break;
            }
            auto [vn, nu] = top_min(t.num(), gp);
            auto [vd, du] = top_min(t.den(), gp);
            long long v = vn.value() - vd.value();
            if (v >= 0 || !nu || !du || t.num().max_exp() < t.den().max_exp()) {
                ok = false;
                break;
            }
            vals.push_back(v);
        }
        if (ok) return {true, n, std::move(vals)};
    }
    return {false, -1, {}};
}

}  // namespace treeact
