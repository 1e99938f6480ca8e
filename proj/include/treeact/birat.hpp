#pragma once

#include <map>

#include "treeact/ratfunc.hpp"

namespace treeact {

/// Laurent polynomial in y with F_p(x) coefficients: sparse map from y-exponent
/// to a nonzero coefficient. The empty map is 0.
class YLaurent {
public:
    explicit YLaurent(PrimeField f) : field_(f) {}
    YLaurent(PrimeField f, std::map<int, RatFunc> terms) : field_(f), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    /* implicit */ YLaurent(RatFunc c) : field_(c.field()) {
        if (!c.is_zero()) terms_.emplace(0, std::move(c));
    }

    static YLaurent zero(PrimeField f) { return YLaurent(f); }
    static YLaurent one(PrimeField f) { return YLaurent(RatFunc::one(f)); }
    static YLaurent y(PrimeField f, int e = 1) {
        return YLaurent(f, {{e, RatFunc::one(f)}});
    }
    static YLaurent term(RatFunc c, int e) {
        YLaurent r(c.field());
        if (!c.is_zero()) r.terms_.emplace(e, std::move(c));
        return r;
    }

    const PrimeField& field() const { return field_; }
    const std::map<int, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_yfree() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    int min_exp() const { return terms_.begin()->first; }   // requires nonzero
    int max_exp() const { return terms_.rbegin()->first; }  // requires nonzero
    RatFunc coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? RatFunc::zero(field_) : it->second;
    }

    friend YLaurent operator+(const YLaurent& a, const YLaurent& b) {
        a.check(b);
        YLaurent r = a;
        for (const auto& [e, c] : b.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }
    friend YLaurent operator-(const YLaurent& a, const YLaurent& b) { return a + (-b); }
    YLaurent operator-() const {
        YLaurent r(field_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend YLaurent operator*(const YLaurent& a, const YLaurent& b) {
        a.check(b);
        YLaurent r(a.field_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                int e = ea + eb;
                RatFunc prod = ca * cb;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    if (!prod.is_zero()) r.terms_.emplace(e, std::move(prod));
                } else {
                    it->second = it->second + prod;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }
    YLaurent scaled(const RatFunc& s) const {
        YLaurent r(field_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }
    /// Multiply by y^k.
    YLaurent shifted_y(int k) const {
        YLaurent r(field_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }
    /// y ↦ y·x^n: the y^l coefficient picks up x^{nl}.
    YLaurent substitute_y(int n) const {
        YLaurent r(field_);
        RatFunc x = RatFunc::x(field_);
        for (const auto& [e, c] : terms_) {
            RatFunc xp = RatFunc::one(field_);
            int k = e * n;
            RatFunc base = k >= 0 ? x : x.inv();
            for (int i = 0; i < (k >= 0 ? k : -k); ++i) xp = xp * base;
            r.terms_.emplace(e, c * xp);
        }
        return r;
    }

    bool operator==(const YLaurent& o) const { return field_ == o.field_ && terms_ == o.terms_; }
    bool operator!=(const YLaurent& o) const { return !(*this == o); }

private:
    void check(const YLaurent& o) const {
        if (field_ != o.field_) throw ModulusMismatch();
    }

    PrimeField field_;
    std::map<int, RatFunc> terms_;
};

/// Element of F_p(x,y): a fraction of y-Laurent polynomials, normalized so the
/// denominator's minimal y-exponent is 0 and its minimal-exponent coefficient
/// is 1. Equality is decided by cross-multiplication.
class BiRat {
public:
    explicit BiRat(PrimeField f) : num_(YLaurent::zero(f)), den_(YLaurent::one(f)) {}
    BiRat(YLaurent num, YLaurent den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.field() != den_.field()) throw ModulusMismatch();
        normalize();
    }
    /* implicit */ BiRat(YLaurent n) : num_(std::move(n)), den_(YLaurent::one(num_.field())) {}
    /* implicit */ BiRat(RatFunc c) : num_(YLaurent(std::move(c))), den_(YLaurent::one(num_.field())) {}

    static BiRat zero(PrimeField f) { return BiRat(f); }
    static BiRat one(PrimeField f) { return BiRat(YLaurent::one(f)); }
    static BiRat y(PrimeField f, int e = 1) { return BiRat(YLaurent::y(f, e)); }

    const YLaurent& num() const { return num_; }
    const YLaurent& den() const { return den_; }
    const PrimeField& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_yfree() const { return num_.is_yfree() && den_.is_yfree(); }

    /// For y-free elements, the underlying F_p(x) value.
    RatFunc as_ratfunc() const {
        if (!is_yfree()) throw Error("element is not y-free");
        RatFunc n = num_.is_zero() ? RatFunc::zero(field()) : num_.coeff(0);
        return n / den_.coeff(0);
    }

    friend BiRat operator+(const BiRat& a, const BiRat& b) {
        return BiRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BiRat operator-(const BiRat& a, const BiRat& b) {
        return BiRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    BiRat operator-() const { return BiRat(-num_, den_); }
    friend BiRat operator*(const BiRat& a, const BiRat& b) {
        return BiRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BiRat operator/(const BiRat& a, const BiRat& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero in F_p(x,y)");
        return BiRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    BiRat inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in F_p(x,y)");
        return BiRat(den_, num_);
    }

    BiRat substitute_y(int n) const { return BiRat(num_.substitute_y(n), den_.substitute_y(n)); }

    /// Cross-multiplication equality.
    bool operator==(const BiRat& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const BiRat& o) const { return !(*this == o); }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator in F_p(x,y)");
        int m = den_.min_exp();
        if (m != 0) {
            den_ = den_.shifted_y(-m);
            num_ = num_.shifted_y(-m);
        }
        RatFunc lead = den_.coeff(0);
        if (!lead.is_one()) {
            RatFunc li = lead.inv();
            den_ = den_.scaled(li);
            num_ = num_.scaled(li);
        }
    }

    YLaurent num_, den_;
};

}  // namespace treeact
