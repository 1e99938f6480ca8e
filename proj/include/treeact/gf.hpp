#pragma once

#include "treeact/birat.hpp"
#include "treeact/mat2.hpp"

namespace treeact {

/// The field F_{p^k} for small p (≤ 5 here) and p^k around 10⁵–10⁶, used to
/// screen matrices by specializing (x, y) to random field points: a nonzero
/// specialization certifies a nonzero exact value. Elements are packed as one
/// base-p digit per nibble of a uint64, so addition is branch-free SWAR and
/// multiplication is shift-and-add modulo a fixed irreducible polynomial.
class SmallGF {
public:
    SmallGF(std::uint64_t p, int k) : p_(p), k_(k), field_(p) {
        if (p > 5 || k < 1 || 4 * k > 64) throw Error("unsupported field size");
        mask_ = k == 16 ? ~0ULL : ((1ULL << (4 * k)) - 1);
        ones_ = 0x1111111111111111ULL & mask_;
        high_ = ones_ << 3;
        // Deterministic search for a monic irreducible modulus y^k + f_low.
        for (std::uint64_t c = 0;; ++c) {
            std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(k) + 1, 0);
            std::uint64_t t = c;
            for (int i = 0; i < k; ++i) {
                coeffs[static_cast<std::size_t>(i)] = t % p;
                t /= p;
            }
            if (t != 0) throw Error("no irreducible modulus found");
            coeffs[static_cast<std::size_t>(k)] = 1;
            Poly f(field_, coeffs);
            if (is_irreducible(f)) {
                std::uint64_t low = 0;
                for (int i = k - 1; i >= 0; --i)
                    low = (low << 4) | coeffs[static_cast<std::size_t>(i)];
                neg_flow_ = neg(low);
                break;
            }
        }
    }

    std::uint64_t order() const {
        std::uint64_t q = 1;
        for (int i = 0; i < k_; ++i) q *= p_;
        return q;
    }
    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1; }
    std::uint64_t from_residue(std::uint64_t r) const { return r % p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return reduce_digits(a + b); }
    std::uint64_t neg(std::uint64_t a) const { return reduce_digits(p_ * ones_ - a); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t res = 0, aa = a;
        for (int i = 0; i < k_; ++i) {
            std::uint64_t d = (b >> (4 * i)) & 15;
            for (std::uint64_t j = 0; j < d; ++j) res = add(res, aa);
            aa = mul_y(aa);
        }
        return res;
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in F_q");
        return pow(a, order() - 2);
    }

    /// Horner evaluation of an F_p[x] polynomial at a field point.
    std::uint64_t eval(const Poly& f, std::uint64_t x) const {
        std::uint64_t r = 0;
        for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
            r = add(mul(r, x), from_residue(*it));
        return r;
    }

    /// Evaluate an F_p(x) element; zero denominator reported via the flag.
    bool eval(const RatFunc& f, std::uint64_t x, std::uint64_t& out) const {
        std::uint64_t d = eval(f.den(), x);
        if (d == 0) return false;
        out = mul(eval(f.num(), x), inv(d));
        return true;
    }

private:
    std::uint64_t reduce_digits(std::uint64_t t) const {
        // Subtract p from every nibble that reached p (sums stay < 16).
        std::uint64_t m = ((t + (8 - p_) * ones_) & high_) >> 3;
        return t - p_ * m;
    }
    std::uint64_t mul_y(std::uint64_t a) const {
        std::uint64_t overflow = (a >> (4 * (k_ - 1))) & 15;
        std::uint64_t t = (a << 4) & mask_;
        for (std::uint64_t j = 0; j < overflow; ++j) t = add(t, neg_flow_);
        return t;
    }

    std::uint64_t p_;
    int k_;
    PrimeField field_;
    std::uint64_t mask_, ones_, high_, neg_flow_ = 0;
};

struct GFMat {
    std::uint64_t m11, m12, m21, m22;

    bool is_identity(const SmallGF& F) const {
        return m11 == F.one() && m22 == F.one() && m12 == 0 && m21 == 0;
    }
};

inline GFMat gf_mul(const SmallGF& F, const GFMat& a, const GFMat& b) {
    return {F.add(F.mul(a.m11, b.m11), F.mul(a.m12, b.m21)),
            F.add(F.mul(a.m11, b.m12), F.mul(a.m12, b.m22)),
            F.add(F.mul(a.m21, b.m11), F.mul(a.m22, b.m21)),
            F.add(F.mul(a.m21, b.m12), F.mul(a.m22, b.m22))};
}

/// Specialize a matrix over F_p(x,y) at x = xi, y = eta. Fails (returns false)
/// when a denominator vanishes; callers then pick another point.
inline bool gf_specialize(const SmallGF& F, const Mat2<BiRat>& m, std::uint64_t xi,
                          std::uint64_t eta, GFMat& out) {
    std::uint64_t eta_inv = eta == 0 ? 0 : F.inv(eta);
    auto eval_birat = [&](const BiRat& e, std::uint64_t& res) {
        auto eval_laurent = [&](const YLaurent& l, std::uint64_t& r) {
            r = 0;
            for (const auto& [exp, c] : l.terms()) {
                std::uint64_t cv;
                if (!F.eval(c, xi, cv)) return false;
                std::uint64_t yp = F.one();
                std::uint64_t base = exp >= 0 ? eta : eta_inv;
                if (exp < 0 && eta == 0) return false;
                for (int i = 0; i < (exp >= 0 ? exp : -exp); ++i) yp = F.mul(yp, base);
                r = F.add(r, F.mul(cv, yp));
            }
            return true;
        };
        std::uint64_t n, d;
        if (!eval_laurent(e.num(), n) || !eval_laurent(e.den(), d) || d == 0) return false;
        res = F.mul(n, F.inv(d));
        return true;
    };
    return eval_birat(m.m11, out.m11) && eval_birat(m.m12, out.m12) &&
           eval_birat(m.m21, out.m21) && eval_birat(m.m22, out.m22);
}

}  // namespace treeact
