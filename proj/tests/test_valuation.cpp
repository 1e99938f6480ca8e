#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace treeact;
using namespace treeact::testutil;

namespace {

RatFunc rf_pow(const RatFunc& b, long long e) {
    RatFunc r = RatFunc::one(b.field());
    RatFunc m = e >= 0 ? b : b.inv();
    for (long long i = 0; i < (e >= 0 ? e : -e); ++i) r = r * m;
    return r;
}

}  // namespace

TEST_CASE("val examples at infinity") {
    PrimeField f5(5);
    Place inf = Place::at_infinity(f5);
    CHECK(val(parse_ratfunc(f5, "x^3+1"), inf) == ValInt::of(-3));
    CHECK(val(RatFunc::zero(f5), inf) == ValInt::inf());

    // The X and Y of the odd-p builtin parameters.
    FamilyPair pair = matfrm_pair(builtin_family(5));
    CHECK(pair.X == parse_ratfunc(f5, "(1-x)/x^2"));
    CHECK(val(pair.X, inf) == ValInt::of(1));
    CHECK(pair.Y == parse_ratfunc(f5, "(2*x^3+2*x^2-1)/x"));
    CHECK(val(pair.Y, inf) == ValInt::of(-2));
}

TEST_CASE("val at irreducible places") {
    PrimeField f5(5);
    Place at_x = Place::at_irreducible(Poly::x(f5));
    CHECK(val(parse_ratfunc(f5, "x^2*(x+1)"), at_x) == ValInt::of(2));
    CHECK(val(parse_ratfunc(f5, "(x+1)/x^3"), at_x) == ValInt::of(-3));
    CHECK_THROWS_AS(Place::at_irreducible(parse_ratfunc(f5, "x^2-1").num()), Error);
    CHECK_THROWS_AS(Place::at_irreducible(parse_ratfunc(f5, "2*x+1").num()), Error);  // not monic
}

TEST_CASE("gauss_val examples") {
    PrimeField f5(5);
    GaussPlace gp{Place::at_infinity(f5), 7};
    CHECK(gauss_val(parse_birat(f5, "y"), gp) == ValInt::of(7));

    // two-term minimum: val(x y^2 + x^3 y) = min(-1 + 2w, -3 + w)
    BiRat v = parse_birat(f5, "x*y^2 + x^3*y");
    for (long long w : {-4LL, -2LL, 0LL, 3LL}) {
        GaussPlace g{Place::at_infinity(f5), w};
        CHECK(gauss_val(v, g) == ValInt::of(std::min(-1 + 2 * w, -3 + w)));
    }

    // tr([A,B]) = Y/X + X/Y is y-free, so the weight is irrelevant; its value
    // is v(X^2+Y^2) - v(XY) = -4 - (-1) = -3.  Oracle: direct expansion.
    FamilyPair pair = matfrm_pair(builtin_family(5));
    RatFunc tr = pair.Y / pair.X + pair.X / pair.Y;
    RatFunc oracle = (pair.X * pair.X + pair.Y * pair.Y) / (pair.X * pair.Y);
    CHECK(tr == oracle);
    for (long long w : {-5LL, 0LL, 5LL}) {
        GaussPlace g{Place::at_infinity(f5), w};
        CHECK(gauss_val(BiRat(tr), g) == ValInt::of(-3));
    }
    CHECK(val(pair.X * pair.X + pair.Y * pair.Y, Place::at_infinity(f5)) == ValInt::of(-4));
}

TEST_CASE("gauss_val_strict") {
    PrimeField f5(5);
    Place inf = Place::at_infinity(f5);
    // y + x*y collapses to (1+x)y: a single term, minimum trivially unique.
    auto [v1, u1] = gauss_val_strict(parse_birat(f5, "y + x*y"), {inf, 0});
    CHECK(v1 == ValInt::of(-1));
    CHECK(u1);
    // y + x at w = -1: both terms valuate to -1, a tie.
    auto [v2, u2] = gauss_val_strict(parse_birat(f5, "y + x"), {inf, -1});
    CHECK(v2 == ValInt::of(-1));
    CHECK(!u2);
    // trace of the image of the alternating word "ac": for sufficiently
    // negative weight the top y-term dominates uniquely.
    SurfaceRep rep = builtin_surface_rep(5);
    BiRat tr = evaluate(parse_word("ac"), rep).trace();
    bool found = false;
    for (long long w = -5; w >= -64 && !found; --w) {
        auto [v, u] = gauss_val_strict(tr, {inf, w});
        if (u && !v.is_inf() && v.value() < 0) found = true;
    }
    CHECK(found);
}

TEST_CASE("laurent_expand examples") {
    PrimeField f5(5);
    Place at_x = Place::at_irreducible(Poly::x(f5));
    // geometric series
    LaurentSeries s = laurent_expand(parse_ratfunc(f5, "1/(1-x)"), at_x, 4);
    CHECK(s.terms == std::map<long long, std::uint64_t>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    // plain monomial
    CHECK(laurent_expand(parse_ratfunc(f5, "x^2"), at_x, 5).terms ==
          std::map<long long, std::uint64_t>{{2, 1}});
    // partial fractions: 1/(x(x-1)) = -1/x - 1 - x - x^2 - ...
    LaurentSeries t = laurent_expand(parse_ratfunc(f5, "1/(x*(x-1))"), at_x, 3);
    CHECK(t.terms == std::map<long long, std::uint64_t>{{-1, 4}, {0, 4}, {1, 4}, {2, 4}});
    // degree-2 place is rejected
    Poly quad = parse_ratfunc(PrimeField(3), "x^2+1").num();
    CHECK(is_irreducible(quad));
    CHECK_THROWS_AS(
        laurent_expand(RatFunc::one(PrimeField(3)), Place::at_irreducible(quad), 3),
        UnsupportedPlace);
}

TEST_CASE("laurent_expand recombines to the function") {
    std::mt19937_64 rng(4711);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        PrimeField f(p);
        std::vector<Place> places{Place::at_infinity(f), Place::at_irreducible(Poly::x(f))};
        if (p > 2) places.push_back(Place::at_irreducible(Poly(f, {1, 1})));  // x + 1
        for (const Place& pl : places) {
            RatFunc u = uniformizer(pl);
            for (int i = 0; i < 30; ++i) {
                RatFunc r = random_nonzero_ratfunc(rng, f, 3);
                long long prec = 5;
                LaurentSeries s = laurent_expand(r, pl, prec);
                RatFunc sum = RatFunc::zero(f);
                for (const auto& [e, c] : s.terms) {
                    CHECK(e < prec);
                    CHECK(c != 0);
                    sum = sum + rf_pow(u, e) * RatFunc::constant(f, static_cast<long long>(c));
                }
                RatFunc diff = r - sum;
                if (!diff.is_zero()) CHECK(ValInt::of(prec) <= val(diff, pl));
            }
        }
    }
}

TEST_CASE("valuation laws on random samples") {
    std::mt19937_64 rng(31337);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        PrimeField f(p);
        std::vector<Place> places{Place::at_infinity(f), Place::at_irreducible(Poly::x(f))};
        for (const Place& pl : places) {
            for (int i = 0; i < 500; ++i) {
                RatFunc a = random_ratfunc(rng, f), b = random_ratfunc(rng, f);
                ValInt va = val(a, pl), vb = val(b, pl);
                CHECK(val(a * b, pl) == va + vb);
                ValInt vs = val(a + b, pl);
                CHECK(min(va, vb) <= vs);
                if (va != vb) CHECK(vs == min(va, vb));
                CHECK((va == ValInt::inf()) == a.is_zero());
            }
            // same laws for the Gauss valuation
            GaussPlace gp{pl, -2};
            for (int i = 0; i < 500; ++i) {
                BiRat a = random_birat(rng, f), b = random_birat(rng, f);
                ValInt va = gauss_val(a, gp), vb = gauss_val(b, gp);
                CHECK(gauss_val(a * b, gp) == va + vb);
                ValInt vs = gauss_val(a + b, gp);
                CHECK(min(va, vb) <= vs);
                if (va != vb) CHECK(vs == min(va, vb));
                CHECK((va == ValInt::inf()) == a.is_zero());
            }
        }
    }
}

TEST_CASE("gauss_val restricts to val on y-free elements") {
    std::mt19937_64 rng(8);
    PrimeField f(5);
    Place inf = Place::at_infinity(f);
    for (int i = 0; i < 100; ++i) {
        RatFunc r = random_ratfunc(rng, f);
        for (long long w : {-3LL, 0LL, 4LL})
            CHECK(gauss_val(BiRat(r), {inf, w}) == val(r, inf));
    }
}

TEST_CASE("substitute_y shifts the Gauss weight at infinity") {
    std::mt19937_64 rng(99);
    PrimeField f(3);
    Place inf = Place::at_infinity(f);
    for (int i = 0; i < 200; ++i) {
        BiRat a = random_birat(rng, f);
        int n = static_cast<int>(rnd(rng, 7)) - 3;
        long long w = static_cast<long long>(rnd(rng, 9)) - 4;
        CHECK(gauss_val(a.substitute_y(n), {inf, w}) == gauss_val(a, {inf, w - n}));
    }
}
