#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bpcat/hom.hpp"
#include "bpcat/ribbon.hpp"

using namespace bpcat;

TEST_CASE("simple modules satisfy the relations") {
    for (int p : {2, 3, 4, 5})
        for (int n = 0; n <= p - 1; ++n)
            for (long ell : {-1L, 0L, 2L}) {
                WeightModule m = make_simple(n, ell, p);
                CHECK(m.dim == n + 1);
                CHECK_NOTHROW(m.check());
                CHECK(m.highest_weight() == Rat(n) + Rat(ell) * p);
            }
    // unit: E = F = 0, weight 0
    WeightModule u = make_unit(3);
    CHECK(u.dim == 1);
    CHECK(u.E.is_zero());
    CHECK(u.weights[0] == 0);
    // S_1 at p=3: E s_1 = [1][1] s_0 = s_0
    WeightModule s1 = make_simple(1, 0, 3);
    CHECK(s1.weights == std::vector<Rat>{Rat(1), Rat(-1)});
    CHECK(s1.E.at(0, 1) == CycScalar::one());
}

TEST_CASE("typical modules") {
    for (int p : {2, 3, 5}) {
        // alpha in pZ is typical with highest weight 2p-1
        WeightModule v = make_typical(Rat(p), p);
        CHECK_NOTHROW(v.check());
        CHECK(v.highest_weight() == Rat(2 * p - 1));
        CHECK(is_typical_alpha(Rat(p), p));
        // atypical alpha = pm + k has E v_k = 0 exactly
        for (int k = 1; k <= p - 1; ++k) {
            WeightModule a = make_typical(Rat(p + k), p);
            CHECK_FALSE(is_typical_alpha(Rat(p + k), p));
            for (int r = 0; r < a.dim; ++r) CHECK(a.E.at(r, k).is_zero());
        }
    }
    // V_{1/2} at p=2: weights {3/2, -1/2}, E v_1 = [1/2] v_0
    WeightModule v = make_typical(rat(1, 2), 2);
    CHECK(v.weights == std::vector<Rat>{rat(3, 2), rat(-1, 2)});
    CHECK(v.E.at(0, 1) == qint(rat(1, 2), 2));
}

TEST_CASE("tensor products") {
    for (int p : {2, 3}) {
        WeightModule m = tensor(make_simple(1, 0, p), make_typical(rat(1, 2), p));
        CHECK_NOTHROW(m.check());
        CHECK(m.dim == 2 * p);
    }
    // unit acts as identity up to isomorphism
    WeightModule s = make_simple(1, 0, 3);
    CHECK(is_isomorphic(tensor(make_unit(3), s), s).has_value());
    CHECK(is_isomorphic(tensor(s, make_unit(3)), s).has_value());
    // weights add: S_1 (x) S_1 at p=3 has weight multiset {2,0,0,-2}
    WeightModule t = tensor(s, s);
    CHECK(weight_multiset(t) == std::vector<Rat>{Rat(-2), Rat(0), Rat(0), Rat(2)});
    CHECK_NOTHROW(t.check());
    // character of a tensor is the convolution of characters
    WeightModule va = make_typical(rat(1, 3), 3), vb = make_typical(rat(1, 4), 3);
    std::vector<Rat> conv;
    for (const Rat& a : va.weights)
        for (const Rat& b : vb.weights) conv.push_back(a + b);
    std::sort(conv.begin(), conv.end());
    CHECK(weight_multiset(tensor(va, vb)) == conv);
}

TEST_CASE("duals") {
    for (int p : {2, 3}) {
        WeightModule u = make_unit(p);
        CHECK(is_isomorphic(dual(u), u).has_value());
        for (const WeightModule& m :
             {make_typical(rat(1, 2), p), make_simple(p - 2, 1, p), make_projective(0, 0, p)}) {
            WeightModule d = dual(m);
            CHECK_NOTHROW(d.check());
            std::vector<Rat> neg;
            for (const Rat& w : m.weights) neg.push_back(-w);
            std::sort(neg.begin(), neg.end());
            CHECK(weight_multiset(d) == neg);
            CHECK(is_isomorphic(dual(d), m).has_value());
        }
    }
}

TEST_CASE("hom spaces") {
    int p = 3;
    CHECK(hom_dim(make_unit(p), make_unit(p)) == 1);  // Schur
    CHECK(hom_dim(make_simple(1, 0, p), make_simple(1, 0, p)) == 1);
    CHECK(hom_dim(make_simple(1, 0, p), make_simple(1, 1, p)) == 0);
    // dim hom(M, N) = dim hom(dual N, dual M)
    WeightModule a = make_typical(Rat(1), p), b = make_projective(1, 1, p);
    CHECK(hom_dim(a, b) == hom_dim(dual(b), dual(a)));
    // End(P_i) is two-dimensional
    for (int pp : {2, 3, 4})
        for (int i = 0; i <= pp - 2; ++i) {
            WeightModule P = make_projective(i, 0, pp);
            CHECK(hom_dim(P, P) == 2);
        }
}

TEST_CASE("projective covers") {
    for (int p : {2, 3, 4, 5})
        for (int i = 0; i <= p - 2; ++i)
            for (long ell : {0L, 1L}) {
                WeightModule P = make_projective(i, ell, p);
                CHECK(P.dim == 2 * p);
                CHECK_NOTHROW(P.check());
                CHECK(P.highest_weight() == Rat((ell + 1) * p - i - 2));
                CHECK(qdim(P).is_zero());
            }
}

TEST_CASE("short exact sequence data") {
    // 0 -> S_{p-1-k} (x) C_{lp} -> V_{k+lp} -> S_{k-1} (x) C_{(l+1)p} -> 0
    for (int p : {2, 3, 5})
        for (int k = 1; k <= p - 1; ++k)
            for (long ell : {-1L, 0L, 1L}) {
                WeightModule V = make_typical(Rat(k + ell * p), p);
                CHECK(hom_dim(make_simple(p - 1 - k, ell, p), V) == 1);
                CHECK(hom_dim(V, make_simple(k - 1, ell + 1, p)) == 1);
            }
}

TEST_CASE("submodule and quotient") {
    int p = 3;
    // atypical V_{pm+k}: v_k generates a submodule of dim p-k
    for (int k = 1; k <= p - 1; ++k) {
        WeightModule V = make_typical(Rat(3 + k), p);
        CVec gen(V.dim, CycScalar::zero());
        gen[k] = CycScalar::one();
        auto [sub, incl] = submodule_generated(V, {gen});
        CHECK(sub.dim == p - k);
        CHECK_NOTHROW(sub.check());
        CHECK(intertwines(sub, V, incl));
        auto [quo, proj] = quotient(V, incl);
        CHECK(quo.dim == k);
        CHECK_NOTHROW(quo.check());
        CHECK(intertwines(V, quo, proj));
        // quotient is S_{k-1} (x) C^H_{(l+1)p} with l = 1 here
        CHECK(is_isomorphic(quo, make_simple(k - 1, 2, p)).has_value());
        // whole module generates itself
        std::vector<CVec> all;
        for (int j = 0; j < V.dim; ++j) {
            CVec e(V.dim, CycScalar::zero());
            e[j] = CycScalar::one();
            all.push_back(e);
        }
        CHECK(submodule_generated(V, all).first.dim == V.dim);
    }
}

TEST_CASE("isomorphism testing") {
    int p = 3;
    WeightModule s = make_simple(p - 1, 0, p), v0 = make_typical(Rat(0), p);
    CHECK(is_isomorphic(s, s).has_value());
    CHECK(is_isomorphic(s, v0).has_value());  // S_{p-1} ~ V_0
    // non-split extension: V_{k+lp} is not the direct sum of its factors
    WeightModule V = make_typical(Rat(1), p);
    WeightModule split = module_direct_sum({make_simple(p - 2, 0, p), make_simple(0, 1, p)});
    CHECK_FALSE(is_isomorphic(V, split).has_value());
}
