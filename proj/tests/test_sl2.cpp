#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace treeact;
using namespace treeact::testutil;

TEST_CASE("matrix basics") {
    PrimeField f5(5);
    Mat2<RatFunc> id = Mat2<RatFunc>::identity(f5);
    CHECK(id.trace() == RatFunc::constant(f5, 2));
    CHECK(commutator(id, id) == id);
    FamilyPair pair = matfrm_pair(builtin_family(5));
    CHECK(commutator(pair.A, pair.A) == id);
    CHECK(pair.A * pair.A.inv() == id);
    Mat2<RatFunc> sing{RatFunc::one(f5), RatFunc::one(f5), RatFunc::one(f5), RatFunc::one(f5)};
    CHECK_THROWS_AS(sing.inv(), SingularMatrix);
}

TEST_CASE("family pair over odd p") {
    PrimeField f5(5);
    FamilyPair pair = matfrm_pair(builtin_family(5));
    CHECK(pair.A.is_sl2());
    CHECK(pair.B.is_sl2());
    CHECK(pair.A.m11 == parse_ratfunc(f5, "(1-2*x^2-2*x^3)/(x*(x-1))"));
    CHECK(pair.A.m21 == RatFunc::one(f5));
    CHECK(pair.A.m22 == parse_ratfunc(f5, "1/x^2"));
    // displayed commutator
    Mat2<RatFunc> comm = commutator(pair.A, pair.B);
    CHECK(comm == Mat2<RatFunc>::diag(pair.Y / pair.X, pair.X / pair.Y));
    // trace valuations are all -1 at infinity
    Place inf = Place::at_infinity(f5);
    CHECK(val(pair.A.trace(), inf) == ValInt::of(-1));
    CHECK(val(pair.B.trace(), inf) == ValInt::of(-1));
    CHECK(val((pair.A * pair.B).trace(), inf) == ValInt::of(-1));
}

TEST_CASE("builtin p=2 parameter valuations") {
    PrimeField f2(2);
    FamilyParams prm = builtin_family(2);
    Place inf = Place::at_infinity(f2);
    CHECK(prm.c == RatFunc::one(f2));
    CHECK(prm.h == parse_ratfunc(f2, "x^2+x+1"));
    CHECK(prm.delta == parse_ratfunc(f2, "x^2"));
    CHECK(prm.d == parse_ratfunc(f2, "x^3/((x^2+x+1)*(x^5+1))"));
    CHECK(val(prm.d, inf) == ValInt::of(4));
    CHECK(val(prm.delta, inf) == ValInt::of(-2));
    CHECK(val(prm.h, inf) == ValInt::of(-2));
    CHECK(val(prm.d * prm.delta * prm.h + RatFunc::one(f2), inf) == ValInt::of(5));
    FamilyPair pair = matfrm_pair(prm);
    CHECK(val(pair.X, inf) == ValInt::of(4));
    CHECK(val(pair.Y, inf) == ValInt::of(-2));
    CHECK(val(pair.A.trace(), inf) == ValInt::of(-2));
    CHECK(val(pair.B.trace(), inf) == ValInt::of(-2));
    CHECK(val((pair.A * pair.B).trace(), inf) == ValInt::of(-2));
}

TEST_CASE("degenerate parameters are rejected") {
    PrimeField f5(5);
    RatFunc one = RatFunc::one(f5), x = RatFunc::x(f5);
    CHECK_THROWS_AS(FamilyParams(RatFunc::zero(f5), x, x, x), ZeroParameter);
    // d = delta = h = 1 gives X = 1 - 1 + 1 = 1 but Y = 1 - 1 + 1 = 1: fine.
    CHECK_NOTHROW(FamilyParams(one, one, one, one));
    // h = d = 1, delta = 2 gives X = 1 - 2 + 1 = 0 over any field.
    CHECK_THROWS_AS(FamilyParams(one, one, one, one + one), DegenerateXY);
}

TEST_CASE("shalen_extend") {
    PrimeField f5(5);
    FamilyPair pair = matfrm_pair(builtin_family(5));
    auto [D, C] = shalen_extend(pair.A, pair.B);
    BiRat y = BiRat::y(f5);
    CHECK(D.m21 == BiRat(pair.A.m21) * y);
    CHECK(D.m12 * y == BiRat(pair.A.m12));
    CHECK(C.m21 == BiRat(pair.B.m21) * y);
    // determinant and trace preserved
    CHECK(D.is_sl2());
    CHECK(C.is_sl2());
    CHECK(D.trace() == BiRat(pair.A.trace()));
    CHECK(C.trace() == BiRat(pair.B.trace()));
    // commutator(D, C) equals commutator(A, B), which is diagonal
    Mat2<BiRat> lhs = commutator(lift(pair.A), lift(pair.B));
    Mat2<BiRat> rhs = commutator(D, C);
    CHECK(lhs == rhs);
    // oracle: conjugating by T = diag(1, y) by hand gives the same thing
    Mat2<BiRat> T = Mat2<BiRat>::diag(BiRat::one(f5), y);
    CHECK(D == T * lift(pair.A) * T.inv());
    CHECK(C == T * lift(pair.B) * T.inv());
}

TEST_CASE("classify") {
    PrimeField f5(5);
    Place inf = Place::at_infinity(f5);
    Place at_x = Place::at_irreducible(Poly::x(f5));
    Mat2<RatFunc> id = Mat2<RatFunc>::identity(f5);
    CHECK(classify(id, inf).kind == MotionKind::Elliptic);
    CHECK(classify(id, at_x).length == 0);
    // trace 0 (valuation infinity) is elliptic, including over F_2
    PrimeField f2(2);
    Mat2<RatFunc> id2 = Mat2<RatFunc>::identity(f2);
    CHECK(classify(id2, Place::at_infinity(f2)).kind == MotionKind::Elliptic);

    RatFunc x = RatFunc::x(f5);
    Mat2<RatFunc> diag = Mat2<RatFunc>::diag(x, x.inv());
    Classification c = classify(diag, at_x);
    CHECK(c.kind == MotionKind::Loxodromic);
    CHECK(c.length == 2);

    FamilyPair pair = matfrm_pair(builtin_family(5));
    Classification ca = classify(pair.A, inf);
    CHECK(ca.kind == MotionKind::Loxodromic);
    CHECK(ca.length == 2);

    Mat2<RatFunc> notsl{x, RatFunc::zero(f5), RatFunc::zero(f5), x};
    CHECK_THROWS_AS(classify(notsl, inf), NotUnimodular);
}

TEST_CASE("closed-form identities for random parameters") {
    std::mt19937_64 rng(2718);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL}) {
        PrimeField f(p);
        for (int i = 0; i < 100; ++i) {
            FamilyParams prm = random_family(rng, f);
            IdentityReport rep = verify_matfrm_identities(prm);
            for (const auto& [name, ok] : rep.checks) {
                INFO("p=", p, " identity ", name);
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("classification is conjugation invariant and length is multiplicative") {
    std::mt19937_64 rng(17);
    PrimeField f(5);
    Place inf = Place::at_infinity(f);
    FamilyPair pair = matfrm_pair(builtin_family(5));
    std::vector<Mat2<RatFunc>> samples{pair.A, pair.B, pair.A * pair.B,
                                       Mat2<RatFunc>::identity(f)};
    for (int i = 0; i < 20; ++i) samples.push_back(random_sl2(rng, f));
    for (const Mat2<RatFunc>& m : samples) {
        Classification base = classify(m, inf);
        for (int i = 0; i < 5; ++i) {
            Mat2<RatFunc> g = random_sl2(rng, f);
            Classification conj = classify(g * m * g.inv(), inf);
            CHECK(conj.kind == base.kind);
            CHECK(conj.length == base.length);
        }
        if (base.kind == MotionKind::Loxodromic) {
            ValInt v1 = val(m.trace(), inf);
            Mat2<RatFunc> pw = m;
            for (long long n = 2; n <= 3; ++n) {
                pw = pw * m;
                CHECK(val(pw.trace(), inf) == ValInt::of(n * v1.value()));
            }
        }
    }
}
