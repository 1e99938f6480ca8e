#pragma once

#include "treeact/poly.hpp"

namespace treeact {

/// Element of F_p(x) in canonical form: coprime numerator/denominator with the
/// denominator monic. Zero is 0/1, so canonical forms are unique.
class RatFunc {
public:
    explicit RatFunc(PrimeField f) : num_(Poly::zero(f)), den_(Poly::one(f)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.field() != den_.field()) throw ModulusMismatch();
        normalize();
    }
    /* implicit */ RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one(num_.field())) {
        normalize();
    }

    static RatFunc zero(PrimeField f) { return RatFunc(f); }
    static RatFunc one(PrimeField f) { return RatFunc(Poly::one(f)); }
    static RatFunc constant(PrimeField f, long long v) { return RatFunc(Poly::constant(f, v)); }
    static RatFunc x(PrimeField f) { return RatFunc(Poly::x(f)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const PrimeField& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero in F_p(x)");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in F_p(x)");
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator in F_p(x)");
        if (num_.is_zero()) {
            den_ = Poly::one(num_.field());
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        std::uint64_t lead = den_.leading();
        if (lead != 1) {
            std::uint64_t li = num_.field().inv(lead);
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    }

    Poly num_, den_;
};

}  // namespace treeact
