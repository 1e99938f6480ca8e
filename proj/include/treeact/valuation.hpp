#pragma once

#include <map>
#include <optional>

#include "treeact/birat.hpp"

namespace treeact {

/// Integer-or-+∞ value of a discrete valuation; +∞ exactly for the element 0.
struct ValInt {
    bool infinite = false;
    long long v = 0;

    static ValInt inf() { return {true, 0}; }
    static ValInt of(long long x) { return {false, x}; }

    bool is_inf() const { return infinite; }
    long long value() const {
        if (infinite) throw Error("valuation is infinite");
        return v;
    }

    friend ValInt operator+(ValInt a, ValInt b) {
        if (a.infinite || b.infinite) return inf();
        return of(a.v + b.v);
    }
    friend bool operator==(ValInt a, ValInt b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    friend bool operator!=(ValInt a, ValInt b) { return !(a == b); }
    friend bool operator<(ValInt a, ValInt b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.v < b.v;
    }
    friend bool operator<=(ValInt a, ValInt b) { return a < b || a == b; }
    friend ValInt min(ValInt a, ValInt b) { return a < b ? a : b; }
};

/// A place of F_p(x): the degree valuation at infinity, or the order of
/// vanishing at a monic irreducible polynomial.
class Place {
public:
    static Place at_infinity(PrimeField f) { return Place(f); }
    static Place at_irreducible(Poly pi) {
        if (!pi.is_monic() || !is_irreducible(pi))
            throw Error("place polynomial must be monic irreducible");
        return Place(std::move(pi));
    }

    bool is_infinity() const { return !pi_.has_value(); }
    const Poly& pi() const {
        if (is_infinity()) throw Error("place at infinity has no polynomial");
        return *pi_;
    }
    int residue_degree() const { return is_infinity() ? 1 : pi_->degree(); }
    const PrimeField& field() const { return field_; }

    bool operator==(const Place& o) const {
        if (field_ != o.field_ || is_infinity() != o.is_infinity()) return false;
        return is_infinity() || *pi_ == *o.pi_;
    }
    bool operator!=(const Place& o) const { return !(*this == o); }

private:
    explicit Place(PrimeField f) : field_(f) {}
    explicit Place(Poly pi) : field_(pi.field()), pi_(std::move(pi)) {}

    PrimeField field_;
    std::optional<Poly> pi_;
};

/// Extension of a base place to F_p(x,y) by assigning y the weight w.
struct GaussPlace {
    Place base;
    long long w;
};

inline ValInt val(const Poly& f, const Place& place) {
    if (f.is_zero()) return ValInt::inf();
    if (place.is_infinity()) return ValInt::of(-f.degree());
    return ValInt::of(f.multiplicity(place.pi()));
}

inline ValInt val(const RatFunc& f, const Place& place) {
    if (f.is_zero()) return ValInt::inf();
    return ValInt::of(val(f.num(), place).value() - val(f.den(), place).value());
}

namespace detail {
/// min over the Laurent terms of val(c_l) + l·w, plus whether that minimum is
/// attained by a single term. Infinite for the zero Laurent polynomial.
inline std::pair<ValInt, bool> gauss_val_terms(const YLaurent& f, const GaussPlace& gp) {
    ValInt best = ValInt::inf();
    bool unique = true;
    for (const auto& [l, c] : f.terms()) {
        ValInt t = ValInt::of(val(c, gp.base).value() + l * gp.w);
        if (t < best) {
            best = t;
            unique = true;
        } else if (t == best) {
            unique = false;
        }
    }
    return {best, unique};
}
}  // namespace detail

inline ValInt gauss_val(const BiRat& f, const GaussPlace& gp) {
    if (f.is_zero()) return ValInt::inf();
    ValInt n = detail::gauss_val_terms(f.num(), gp).first;
    ValInt d = detail::gauss_val_terms(f.den(), gp).first;
    return ValInt::of(n.value() - d.value());
}

/// gauss_val plus a flag: true iff the minimum is attained by a unique y-term
/// in both numerator and denominator, so the value is exact for any actual
/// transcendental y of valuation w.
inline std::pair<ValInt, bool> gauss_val_strict(const BiRat& f, const GaussPlace& gp) {
    if (f.is_zero()) return {ValInt::inf(), true};
    auto [n, nu] = detail::gauss_val_terms(f.num(), gp);
    auto [d, du] = detail::gauss_val_terms(f.den(), gp);
    return {ValInt::of(n.value() - d.value()), nu && du};
}

/// Truncated Laurent expansion of a rational function at a degree-1 place;
/// exponents are powers of the uniformizer (π, or 1/x at infinity).
struct LaurentSeries {
    Place place;
    std::map<long long, std::uint64_t> terms;  // exponent -> nonzero residue
    long long precision;
};

/// Expansion at a degree-1 place: all stored exponents < precision, and the
/// series agrees with f modulo π^precision.
inline LaurentSeries laurent_expand(const RatFunc& f, const Place& place, long long precision) {
    if (place.residue_degree() != 1)
        throw UnsupportedPlace("Laurent expansion needs a degree-1 place");
    PrimeField F = f.field();
    LaurentSeries out{place, {}, precision};
    if (f.is_zero()) return out;

    // Rewrite f in the uniformizer u: f = u^e · n/d with n, d having nonzero
    // constant terms.
    Poly n(F), d(F);
    long long e;
    if (place.is_infinity()) {
        // x = 1/u: p(1/u) = u^{-deg p} · reversed(p).
        n = f.num().reversed();
        d = f.den().reversed();
        e = f.den().degree() - f.num().degree();
    } else {
        std::uint64_t r = F.neg(place.pi().coeff(0));  // pi = x - r
        n = f.num().shifted(r);
        d = f.den().shifted(r);
        long long a = 0, b = 0;
        while (n.coeff(static_cast<std::size_t>(a)) == 0) ++a;
        while (d.coeff(static_cast<std::size_t>(b)) == 0) ++b;
        e = a - b;
        std::vector<std::uint64_t> nc(n.coeffs().begin() + a, n.coeffs().end());
        std::vector<std::uint64_t> dc(d.coeffs().begin() + b, d.coeffs().end());
        n = Poly(F, std::move(nc));
        d = Poly(F, std::move(dc));
    }

    // Power-series division n/d, constant term of d nonzero.
    std::uint64_t d0i = F.inv(d.coeff(0));
    long long k_max = precision - e;  // need coefficients of u^k for k < k_max
    std::vector<std::uint64_t> c;
    for (long long k = 0; k < k_max; ++k) {
        std::uint64_t acc = n.coeff(static_cast<std::size_t>(k));
        for (long long j = 0; j < k; ++j)
            acc = F.sub(acc, F.mul(c[static_cast<std::size_t>(j)],
                                   d.coeff(static_cast<std::size_t>(k - j))));
        c.push_back(F.mul(acc, d0i));
    }
    for (long long k = 0; k < k_max; ++k)
        if (c[static_cast<std::size_t>(k)] != 0) out.terms[e + k] = c[static_cast<std::size_t>(k)];
    return out;
}

}  // namespace treeact
