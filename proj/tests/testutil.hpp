#pragma once

#include <random>

#include "treeact/treeact.hpp"

namespace treeact::testutil {

inline std::uint64_t rnd(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline Poly random_poly(std::mt19937_64& rng, PrimeField f, int max_deg) {
    int deg = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(max_deg + 2))) - 1;
    if (deg < 0) return Poly::zero(f);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = rnd(rng, f.modulus());
    c.back() = 1 + rnd(rng, f.modulus() - 1);
    return Poly(f, std::move(c));
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, PrimeField f, int max_deg) {
    for (;;) {
        Poly p = random_poly(rng, f, max_deg);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, PrimeField f, int max_deg = 3) {
    return RatFunc(random_poly(rng, f, max_deg), random_nonzero_poly(rng, f, max_deg));
}

inline RatFunc random_nonzero_ratfunc(std::mt19937_64& rng, PrimeField f, int max_deg = 3) {
    for (;;) {
        RatFunc r = random_ratfunc(rng, f, max_deg);
        if (!r.is_zero()) return r;
    }
}

inline YLaurent random_ylaurent(std::mt19937_64& rng, PrimeField f, int max_terms = 3,
                                int max_deg = 2) {
    YLaurent out(f);
    std::uint64_t n = rnd(rng, static_cast<std::uint64_t>(max_terms + 1));
    for (std::uint64_t i = 0; i < n; ++i) {
        int e = static_cast<int>(rnd(rng, 7)) - 3;
        out = out + YLaurent::term(random_ratfunc(rng, f, max_deg), e);
    }
    return out;
}

inline YLaurent random_nonzero_ylaurent(std::mt19937_64& rng, PrimeField f) {
    for (;;) {
        YLaurent l = random_ylaurent(rng, f);
        if (!l.is_zero()) return l;
    }
}

inline BiRat random_birat(std::mt19937_64& rng, PrimeField f) {
    return BiRat(random_ylaurent(rng, f), random_nonzero_ylaurent(rng, f));
}

inline BiRat random_nonzero_birat(std::mt19937_64& rng, PrimeField f) {
    for (;;) {
        BiRat b = random_birat(rng, f);
        if (!b.is_zero()) return b;
    }
}

inline Word random_reduced_word(std::mt19937_64& rng, std::size_t len) {
    Word w;
    while (w.size() < len) {
        Letter l{static_cast<Gen>(rnd(rng, 4)), rnd(rng, 2) ? 1 : -1};
        if (!w.empty() && w.back().g == l.g && w.back().sign == -l.sign) continue;
        w.push_back(l);
    }
    return w;
}

inline FamilyParams random_family(std::mt19937_64& rng, PrimeField f) {
    for (;;) {
        try {
            return FamilyParams(random_nonzero_ratfunc(rng, f, 2), random_nonzero_ratfunc(rng, f, 2),
                                random_nonzero_ratfunc(rng, f, 2),
                                random_nonzero_ratfunc(rng, f, 2));
        } catch (const Error&) {
            // degenerate draw (X or Y vanished); try again
        }
    }
}

inline LampElem random_lamp_elem(std::mt19937_64& rng, const FiniteGroup& F, long long span = 4,
                                 long long shift_span = 4) {
    LampElem g;
    std::uint64_t n = rnd(rng, 4);
    for (std::uint64_t i = 0; i < n; ++i) {
        long long j = static_cast<long long>(rnd(rng, 2 * span + 1)) - span;
        int v = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(F.order())));
        if (v != 0) g.f[j] = v;
    }
    g.shift = static_cast<long long>(rnd(rng, 2 * shift_span + 1)) - shift_span;
    return g;
}

inline Lamp2Elem random_lamp2_elem(std::mt19937_64& rng, const FiniteGroup& F, long long span = 3,
                                   long long shift_span = 3) {
    Lamp2Elem g;
    std::uint64_t n = rnd(rng, 4);
    for (std::uint64_t i = 0; i < n; ++i) {
        Cell c{static_cast<long long>(rnd(rng, 2 * span + 1)) - span,
               static_cast<long long>(rnd(rng, 2 * span + 1)) - span};
        int v = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(F.order())));
        if (v != 0) g.f[c] = v;
    }
    g.ms = static_cast<long long>(rnd(rng, 2 * shift_span + 1)) - shift_span;
    g.mt = static_cast<long long>(rnd(rng, 2 * shift_span + 1)) - shift_span;
    return g;
}

inline HoughtonElem random_houghton_elem(std::mt19937_64& rng, long long span = 5,
                                         long long shift_span = 3) {
    std::set<long long> pts;
    std::uint64_t n = rnd(rng, 5);
    for (std::uint64_t i = 0; i < n; ++i)
        pts.insert(static_cast<long long>(rnd(rng, 2 * span + 1)) - span);
    std::vector<long long> dom(pts.begin(), pts.end());
    std::vector<long long> img = dom;
    for (std::size_t i = img.size(); i > 1; --i)
        std::swap(img[i - 1], img[rnd(rng, i)]);
    HoughtonElem g;
    for (std::size_t i = 0; i < dom.size(); ++i)
        if (dom[i] != img[i]) g.sigma[dom[i]] = img[i];
    g.shift = static_cast<long long>(rnd(rng, 2 * shift_span + 1)) - shift_span;
    return g;
}

inline Mat2<RatFunc> random_sl2(std::mt19937_64& rng, PrimeField f) {
    // random product of elementary matrices, so det = 1 by construction
    Mat2<RatFunc> m = Mat2<RatFunc>::identity(f);
    int steps = 1 + static_cast<int>(rnd(rng, 3));
    for (int i = 0; i < steps; ++i) {
        RatFunc t = random_ratfunc(rng, f, 2);
        Mat2<RatFunc> e =
            rnd(rng, 2) ? Mat2<RatFunc>{RatFunc::one(f), t, RatFunc::zero(f), RatFunc::one(f)}
                        : Mat2<RatFunc>{RatFunc::one(f), RatFunc::zero(f), t, RatFunc::one(f)};
        m = m * e;
    }
    return m;
}

}  // namespace treeact::testutil
