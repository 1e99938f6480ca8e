#pragma once

#include <deque>
#include <set>
#include <sstream>

#include "treeact/family.hpp"

namespace treeact {

/// Vertex of the Bruhat–Tits tree at a place of F_p(x): the homothety class of
/// the lattice spanned by the columns of an invertible basis matrix.
struct LatticeVertex {
    Mat2<RatFunc> basis;
    Place place;

    LatticeVertex(Mat2<RatFunc> b, Place pl) : basis(std::move(b)), place(std::move(pl)) {
        if (basis.det().is_zero()) throw SingularMatrix("lattice basis is singular");
    }

    static LatticeVertex base(const Place& pl) {
        return LatticeVertex(Mat2<RatFunc>::identity(pl.field()), pl);
    }
};

/// The uniformizer as an element of F_p(x): π itself, or 1/x at infinity.
inline RatFunc uniformizer(const Place& pl) {
    if (pl.is_infinity()) return RatFunc::one(pl.field()) / RatFunc::x(pl.field());
    return RatFunc(pl.pi());
}

/// Lattice-class distance: with P = v⁻¹u, e₁ the minimal entry valuation and
/// e₂ = val(det P) − e₁ the elementary divisor exponents, the distance is
/// e₂ − e₁.
inline long long bt_distance(const LatticeVertex& u, const LatticeVertex& v) {
    if (u.place != v.place) throw PlaceMismatch();
    Mat2<RatFunc> P = v.basis.inv() * u.basis;
    ValInt e1 = ValInt::inf();
    for (const RatFunc* e : {&P.m11, &P.m12, &P.m21, &P.m22}) e1 = min(e1, val(*e, u.place));
    long long d = val(P.det(), u.place).value() - 2 * e1.value();
    if (d < 0) throw Error("negative lattice distance: non-lattice input");
    return d;
}

inline LatticeVertex bt_act(const Mat2<RatFunc>& g, const LatticeVertex& v) {
    return LatticeVertex(g * v.basis, v.place);
}

inline long long bt_displacement(const Mat2<RatFunc>& g, const LatticeVertex& v) {
    return bt_distance(v, bt_act(g, v));
}

/// The p+1 neighbors of a vertex at a degree-1 place: basis·[[π,u],[0,1]] for
/// each residue lift u, plus basis·[[1,0],[0,π]].
inline std::vector<LatticeVertex> bt_neighbors(const LatticeVertex& v) {
    if (v.place.residue_degree() != 1)
        throw UnsupportedPlace("neighbor enumeration needs a degree-1 place");
    PrimeField f = v.place.field();
    RatFunc pi = uniformizer(v.place);
    std::vector<LatticeVertex> out;
    for (std::uint64_t u = 0; u < f.modulus(); ++u) {
        Mat2<RatFunc> e{pi, RatFunc::constant(f, static_cast<long long>(u)), RatFunc::zero(f),
                        RatFunc::one(f)};
        out.emplace_back(v.basis * e, v.place);
    }
    Mat2<RatFunc> e{RatFunc::one(f), RatFunc::zero(f), RatFunc::zero(f), pi};
    out.emplace_back(v.basis * e, v.place);
    return out;
}

/// Canonical key of a vertex: reduce the basis to the form [[π^c, β],[0,1]]
/// modulo GL2 of the valuation ring and homothety; the class is determined by
/// c and the expansion of β truncated below exponent c.
inline std::string bt_canonical_key(const LatticeVertex& v) {
    const Place& pl = v.place;
    RatFunc m11 = v.basis.m11, m12 = v.basis.m12, m21 = v.basis.m21, m22 = v.basis.m22;
    if (val(m21, pl) < val(m22, pl)) {
        std::swap(m11, m12);
        std::swap(m21, m22);
    }
    if (!m21.is_zero()) {
        RatFunc t = m21 / m22;
        m11 = m11 - t * m12;
    }
    long long c = val(m11, pl).value() - val(m22, pl).value();
    RatFunc beta = m12 / m22;
    std::ostringstream key;
    key << c << "|";
    if (!beta.is_zero()) {
        LaurentSeries s = laurent_expand(beta, pl, c);
        for (const auto& [e, r] : s.terms) key << e << ":" << r << ",";
    }
    return key.str();
}

inline bool bt_same_vertex(const LatticeVertex& u, const LatticeVertex& v) {
    return bt_distance(u, v) == 0;
}

/// Fixed vertex of an elliptic element by steepest descent from the base:
/// displacement decreases by 2 along the geodesic toward the fixed set, so
/// moving to the first displacement-decreasing neighbor terminates.
inline LatticeVertex bt_find_fixed_vertex(const Mat2<RatFunc>& g, const Place& place) {
    if (classify(g, place).kind != MotionKind::Elliptic) throw NotElliptic();
    LatticeVertex v = LatticeVertex::base(place);
    for (;;) {
        long long d = bt_displacement(g, v);
        if (d == 0) return v;
        bool moved = false;
        for (const LatticeVertex& n : bt_neighbors(v)) {
            if (bt_displacement(g, n) < d) {
                v = n;
                moved = true;
                break;
            }
        }
        if (!moved) throw Error("descent stalled; element does not fix a vertex");
    }
}

/// Minimum displacement over the ball of the given radius around the base.
inline long long bt_min_displacement(const Mat2<RatFunc>& g, const Place& place,
                                     long long radius) {
    LatticeVertex base = LatticeVertex::base(place);
    std::set<std::string> seen{bt_canonical_key(base)};
    std::deque<std::pair<LatticeVertex, long long>> queue{{base, 0}};
    long long best = bt_displacement(g, base);
    while (!queue.empty()) {
        auto [v, depth] = queue.front();
        queue.pop_front();
        if (depth == radius) continue;
        for (const LatticeVertex& n : bt_neighbors(v)) {
            if (!seen.insert(bt_canonical_key(n)).second) continue;
            best = std::min(best, bt_displacement(g, n));
            queue.emplace_back(n, depth + 1);
        }
    }
    return best;
}

/// Display form used by the CLI: the canonically reduced basis.
inline std::string bt_format_vertex(const LatticeVertex& v) {
    return "[[pi^" + bt_canonical_key(v) + "]]";
}

}  // namespace treeact
