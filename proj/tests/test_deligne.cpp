#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bpcat/deligne.hpp"

using namespace bpcat;

TEST_CASE("lifting criterion examples") {
    // (p=2, c=1/2, V_{1/2}): alpha+p-1+c = 2 in 2Z -> lifts
    DObject d1{rat(1, 2), {CatLabel::V, rat(1, 2), 0, 0}};
    auto r1 = lifts(d1, 2);
    CHECK(r1.lifts);
    CHECK(lifts_parity(d1, 2));
    // (p=2, c=1, V_{1/2}): 5/2 not in 2Z -> does not lift
    DObject d2{Rat(1), {CatLabel::V, rat(1, 2), 0, 0}};
    auto r2 = lifts(d2, 2);
    CHECK_FALSE(r2.lifts);
    CHECK_FALSE(lifts_parity(d2, 2));
    CHECK(r2.scalar == RootExp(rat(5, 2)));
    // unit lifts for every p
    for (int p : {2, 3, 4, 5}) {
        DObject u{Rat(0), {CatLabel::S, Rat(0), 0, 0}};
        CHECK(lifts(u, p).lifts);
    }
}

TEST_CASE("monodromy lift test equals the parity formula on a grid") {
    for (int p : {2, 3}) {
        long checked = 0;
        for (long cn = -4; cn <= 4; ++cn)
            for (long cd : {1L, 2L, 3L}) {
                Rat c = rat(cn, cd);
                for (long an = 0; an <= 4; ++an)
                    for (long ad : {1L, 2L}) {
                        DObject d{c, {CatLabel::V, rat(an, ad), 0, 0}};
                        CHECK(lifts(d, p).lifts == lifts_parity(d, p));
                        ++checked;
                    }
                for (int i = 0; i <= p - 2; ++i)
                    for (long ell : {0L, 1L}) {
                        DObject ds{c, {CatLabel::S, Rat(0), i, ell}};
                        DObject dp{c, {CatLabel::P, Rat(0), i, ell}};
                        CHECK(lifts(ds, p).lifts == lifts_parity(ds, p));
                        CHECK(lifts(dp, p).lifts == lifts_parity(dp, p));
                        checked += 2;
                    }
            }
        CHECK(checked > 200);
    }
}

TEST_CASE("induction and canonical labels") {
    int p = 3;
    // unit
    DObject u{Rat(0), {CatLabel::S, Rat(0), 0, 0}};
    ExtLabel lu = induce(u, p);
    CHECK(lu.kind == ExtLabel::ES);
    CHECK(lu.str() == "ES(c=0,i=0,l=0)");
    // canonicalize(ES(-p, 0, 1)) = ES(0,0,0)
    ExtLabel shifted{ExtLabel::ES, Rat(-p), Rat(0), 0, 1};
    CHECK(canonicalize(shifted, p) == lu);
    // EV window (0, p]
    ExtLabel ev{ExtLabel::EV, rat(1, 2), rat(1, 2) + p, 0, 0};
    ExtLabel can = canonicalize(ev, p);
    CHECK(can.alpha == rat(1, 2));
    CHECK(can.c == rat(1, 2) + p);
    CHECK(canonicalize(can, p) == can);  // idempotent
    // non-lifting object refuses to induce
    DObject bad{Rat(1), {CatLabel::S, Rat(0), 0, 0}};
    CHECK_THROWS_AS(induce(bad, p), lift_error);
}

TEST_CASE("induction is shift invariant") {
    for (int p : {2, 3}) {
        for (long k : {-2L, 1L, 3L}) {
            // choose c so the object lifts: alpha+p-1+c even
            DObject d{Rat(0), {CatLabel::V, rat(1, 2), 0, 0}};
            d.c = -(d.wm.alpha + (p - 1));
            ExtLabel base = induce(d, p);
            DObject shifted{d.c - Rat(k) * p, {CatLabel::V, d.wm.alpha + Rat(k) * p, 0, 0}};
            CHECK(induce(shifted, p) == base);
        }
    }
}

TEST_CASE("nu_ell and atypical (s,s') coordinates") {
    // (p=2, c=1/2, alpha=1/2) -> (nu, ell) = (1/2, 1/2)
    ExtLabel ev{ExtLabel::EV, rat(1, 2), rat(1, 2), 0, 0};
    auto [nu, ell] = nu_ell(ev, 2);
    CHECK(nu == rat(1, 2));
    CHECK(ell == rat(1, 2));
    // c = -alpha gives ell = 0
    ExtLabel ev2{ExtLabel::EV, rat(-1, 2), rat(1, 2), 0, 0};
    CHECK(nu_ell(ev2, 2).second == 0);
    // ell + (p-1)/2 is an integer for all lifting labels
    for (int p : {2, 3, 5})
        for (long an = 1; an <= 4; ++an)
            for (long ad : {1L, 2L, 4L}) {
                Rat alpha = rat(an, ad);
                Rat c = -(alpha + (p - 1));
                ExtLabel L{ExtLabel::EV, c, alpha, 0, 0};
                auto [n2, l2] = nu_ell(L, p);
                CHECK(is_integer(l2 + rat(p - 1, 2)));
            }
    // unit corresponds to sigma^0(W_1), i.e. (s, s') = (1, 0)
    ExtLabel es{ExtLabel::ES, Rat(0), Rat(0), 0, 0};
    auto [s, sp] = atypical_ss(es, 3);
    CHECK(s == 1);
    CHECK(sp == 0);
    // shift both coordinates: canonical labels agree after canonicalize
    ExtLabel es2{ExtLabel::ES, Rat(-1), Rat(0), 1, 0};
    auto [s2, sp2] = atypical_ss(es2, 3);
    CHECK(s2 == 2);
    CHECK(sp2 == 1);
    CHECK((s2 + sp2 + 1) % 2 == 0);  // Lambda_p parity
}

TEST_CASE("algebra object data") {
    for (int p : {2, 3, 4, 5}) {
        Report rep = algebra_object_check(p);
        CHECK(rep.ok);
        if (p % 2 == 0) CHECK(!rep.notes.empty());  // super grading recorded
    }
}
