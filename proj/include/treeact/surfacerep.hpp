#pragma once

#include "treeact/amalgam.hpp"
#include "treeact/family.hpp"
#include "treeact/polymat.hpp"

namespace treeact {

/// A representation of the surface group ⟨a,b,c,d | [a,b][c,d]⟩ in
/// SL(2, F_p(x,y)): a ↦ A, b ↦ B (y-free), c ↦ C = TBT⁻¹, d ↦ D = TAT⁻¹ for
/// T = diag(1, y), so the commutator relation holds exactly.
struct SurfaceRep {
    PrimeField field;
    std::array<Mat2<BiRat>, 4> img;      // indexed by Gen
    std::array<Mat2<BiRat>, 4> img_inv;  // adjugates (all images are SL2)
    Mat2<RatFunc> A, B;                  // the underlying y-free pair
    RatFunc X, Y;
    std::string provenance;
};

inline SurfaceRep make_surface_rep(const FamilyParams& params, std::string provenance = "custom") {
    FamilyPair pair = matfrm_pair(params);
    auto [D, C] = shalen_extend(pair.A, pair.B);
    Mat2<BiRat> a = lift(pair.A), b = lift(pair.B);
    return SurfaceRep{params.field(),
                      {a, b, C, D},
                      {a.inv(), b.inv(), C.inv(), D.inv()},
                      pair.A,
                      pair.B,
                      pair.X,
                      pair.Y,
                      std::move(provenance)};
}

inline SurfaceRep builtin_surface_rep(std::uint64_t p) {
    return make_surface_rep(builtin_family(p), "builtin");
}

inline const Mat2<BiRat>& image_of(const SurfaceRep& rep, Letter l) {
    auto i = static_cast<std::size_t>(l.g);
    return l.sign > 0 ? rep.img[i] : rep.img_inv[i];
}

inline Mat2<BiRat> evaluate(const Word& w, const SurfaceRep& rep) {
    Mat2<BiRat> m = Mat2<BiRat>::identity(rep.field);
    for (const Letter& l : w) m = m * image_of(rep, l);
    return m;
}

/// Same product in cleared-denominator form; much faster on long words.
struct RepPolyMats {
    std::array<PolyMat, 4> img, img_inv;
};

inline RepPolyMats polymats_of(const SurfaceRep& rep) {
    return RepPolyMats{{polymat_from(rep.img[0]), polymat_from(rep.img[1]),
                        polymat_from(rep.img[2]), polymat_from(rep.img[3])},
                       {polymat_from(rep.img_inv[0]), polymat_from(rep.img_inv[1]),
                        polymat_from(rep.img_inv[2]), polymat_from(rep.img_inv[3])}};
}

inline PolyMat evaluate_polymat(const Word& w, const SurfaceRep& rep, const RepPolyMats& pm) {
    PolyMat m{{{0, Poly::one(rep.field)}},
              {},
              {},
              {{0, Poly::one(rep.field)}},
              Poly::one(rep.field)};
    for (const Letter& l : w) {
        auto i = static_cast<std::size_t>(l.g);
        m = m * (l.sign > 0 ? pm.img[i] : pm.img_inv[i]);
    }
    return m;
}

/// Leading-term data of an alternating element: after cyclic conjugation into
/// the γδ…γδ shape, the (2,2) entry of its matrix is a Laurent polynomial in y
/// of top degree exactly l (the number of γδ pairs) whose leading coefficient
/// α is the product over pairs of (bottom-left of the stripped γ-matrix) times
/// (top-right of the δ-matrix). "Stripped" means the γ syllable evaluated with
/// c ↦ B, d ↦ A, i.e. its matrix with the T-conjugation removed.
struct LeadingData {
    long long l;
    RatFunc alpha;           // the corner-product prediction
    RatFunc actual_leading;  // coefficient of y^l actually found in entry (2,2)
    long long actual_degree;
    Word conjugated;  // the rotated word whose matrix was inspected
    Word conjugator;
};

inline LeadingData leading_data(const AmalgamNF& nf, const SurfaceRep& rep) {
    GammaDeltaForm gd = to_gamma_delta(nf);
    PrimeField f = rep.field;

    // Corner product, walking γδ pairs.
    Mat2<RatFunc> Ainv = rep.A.inv(), Binv = rep.B.inv();
    auto eval_yfree = [&](const Word& w, bool strip) {
        Mat2<RatFunc> m = Mat2<RatFunc>::identity(f);
        for (const Letter& l : w) {
            // strip: c ↦ B, d ↦ A; plain factor-1: a ↦ A, b ↦ B.
            bool first = strip ? (l.g == Gen::d) : (l.g == Gen::a);
            const Mat2<RatFunc>& base =
                first ? (l.sign > 0 ? rep.A : Ainv) : (l.sign > 0 ? rep.B : Binv);
            m = m * base;
        }
        return m;
    };
    RatFunc alpha = RatFunc::one(f);
    long long l = static_cast<long long>(gd.syllables.size()) / 2;
    for (std::size_t i = 0; i + 1 < gd.syllables.size(); i += 2) {
        Mat2<RatFunc> gamma = eval_yfree(gd.syllables[i].word, true);
        Mat2<RatFunc> delta = eval_yfree(gd.syllables[i + 1].word, false);
        alpha = alpha * gamma.m21 * delta.m12;
    }

    Word rotated;
    for (const Syllable& s : gd.syllables)
        rotated.insert(rotated.end(), s.word.begin(), s.word.end());
    RepPolyMats pm = polymats_of(rep);
    PolyMat m = evaluate_polymat(rotated, rep, pm);

    long long deg = m.m22.empty() ? -(1LL << 40) : m.m22.rbegin()->first;
    RatFunc lead = m.m22.empty() ? RatFunc::zero(f) : m.coeff22(static_cast<int>(deg));
    return {l, alpha, lead, deg, std::move(rotated), std::move(gd.conjugator)};
}

}  // namespace treeact
