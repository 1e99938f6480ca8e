#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "treeact/fp.hpp"

namespace treeact {

/// Dense univariate polynomial over F_p, indexed by degree in x.
/// The zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
public:
    explicit Poly(PrimeField f) : field_(f) {}
    Poly(PrimeField f, std::vector<std::uint64_t> coeffs) : field_(f), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(PrimeField f) { return Poly(f); }
    static Poly constant(PrimeField f, long long v) {
        std::uint64_t r = f.reduce(v);
        return r == 0 ? Poly(f) : Poly(f, {r});
    }
    static Poly one(PrimeField f) { return constant(f, 1); }
    /// c * x^e
    static Poly monomial(PrimeField f, long long c, std::size_t e) {
        std::uint64_t r = f.reduce(c);
        if (r == 0) return Poly(f);
        std::vector<std::uint64_t> v(e + 1, 0);
        v[e] = r;
        return Poly(f, std::move(v));
    }
    static Poly x(PrimeField f) { return monomial(f, 1, 1); }

    const PrimeField& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b);
        std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a.coeff(i), b.coeff(i));
        return Poly(a.field_, std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check(b);
        std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.sub(a.coeff(i), b.coeff(i));
        return Poly(a.field_, std::move(v));
    }
    Poly operator-() const {
        std::vector<std::uint64_t> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.neg(c_[i]);
        return Poly(field_, std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        const std::uint64_t p = a.field_.modulus();
        std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
        // Accumulate before reducing; products fit easily since p < 2^8 in practice,
        // but flush defensively against overflow for larger p.
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] = (v[i + j] + a.c_[i] * b.c_[j]) % p;
        }
        return Poly(a.field_, std::move(v));
    }
    Poly scaled(std::uint64_t s) const {
        std::vector<std::uint64_t> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
        return Poly(field_, std::move(v));
    }

    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        a.check(b);
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        Poly q(a.field_), r = a;
        const std::uint64_t lead_inv = a.field_.inv(b.leading());
        std::vector<std::uint64_t> qc;
        if (r.degree() >= b.degree()) qc.assign(r.degree() - b.degree() + 1, 0);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            std::uint64_t f = a.field_.mul(r.leading(), lead_inv);
            qc[shift] = f;
            std::vector<std::uint64_t> rc = r.c_;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rc[i + shift] = a.field_.sub(rc[i + shift], a.field_.mul(f, b.c_[i]));
            r = Poly(a.field_, std::move(rc));
        }
        return {Poly(a.field_, std::move(qc)), r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly make_monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading()));
    }

    std::uint64_t eval(std::uint64_t v) const {
        std::uint64_t r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, v), *it);
        return r;
    }

    /// Coefficients reversed: x^deg * p(1/x). Used for expansions at infinity.
    Poly reversed() const {
        std::vector<std::uint64_t> v(c_.rbegin(), c_.rend());
        return Poly(field_, std::move(v));
    }

    /// p(x + r), by Horner on the shifted variable.
    Poly shifted(std::uint64_t r) const {
        Poly res(field_);
        Poly lin(field_, {r, 1});  // x + r
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            res = res * lin + constant(field_, static_cast<long long>(*it));
        return res;
    }

    /// Multiplicity of the monic factor pi in *this (0 for the zero polynomial caller's concern).
    int multiplicity(const Poly& pi) const {
        int m = 0;
        Poly r = *this;
        while (!r.is_zero()) {
            auto [q, rem] = divmod(r, pi);
            if (!rem.is_zero()) break;
            r = q;
            ++m;
        }
        return m;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const Poly& o) const {
        if (field_ != o.field_) throw ModulusMismatch();
    }

    PrimeField field_;
    std::vector<std::uint64_t> c_;
};

/// Monic gcd; gcd(0, 0) = 0 and gcd(f, 0) is the monic scalar multiple of f.
inline Poly poly_gcd(Poly a, Poly b) {
    if (a.field() != b.field()) throw ModulusMismatch();
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.make_monic();
}

/// Irreducibility over F_p by trial division by all monic polynomials of
/// degree up to deg/2. Degrees stay tiny here, so this is plenty.
inline bool is_irreducible(const Poly& f) {
    int d = f.degree();
    if (d < 1) return false;
    const std::uint64_t p = f.field().modulus();
    for (int dd = 1; 2 * dd <= d; ++dd) {
        // enumerate monic candidates of degree dd
        std::vector<std::uint64_t> c(dd + 1, 0);
        c[dd] = 1;
        while (true) {
            Poly cand(f.field(), c);
            if ((f % cand).is_zero()) return false;
            // increment base-p counter over the lower coefficients
            int i = 0;
            for (; i < dd; ++i) {
                if (++c[i] < p) break;
                c[i] = 0;
            }
            if (i == dd) break;
        }
    }
    return true;
}

}  // namespace treeact
