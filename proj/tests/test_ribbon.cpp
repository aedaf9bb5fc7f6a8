#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bpcat/float_ribbon.hpp"
#include "bpcat/hom.hpp"
#include "bpcat/ribbon.hpp"

using namespace bpcat;

namespace {

// scalar matrix test
bool is_scalar(const CMat& m, CycScalar* out = nullptr) {
    CycScalar s = m.at(0, 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i == j ? !(m.at(i, j) == s) : !m.at(i, j).is_zero()) return false;
    if (out) *out = s;
    return true;
}

std::vector<WeightModule> catalogue(int p) {
    return {make_unit(p), make_simple(1, 0, p), make_simple(p - 2, 1, p),
            make_typical(rat(1, 2), p), make_typical(Rat(p), p), make_projective(0, 0, p)};
}

}  // namespace

TEST_CASE("r-matrix and braiding basics") {
    for (int p : {2, 3}) {
        WeightModule u = make_unit(p), v = make_typical(rat(1, 2), p);
        // unit factor: R is the identity
        CHECK(r_matrix(u, v) == CMat::identity(v.dim));
        CHECK(r_matrix(v, u) == CMat::identity(v.dim));
        // r_matrix(C^H_p, V_alpha) is diagonal with entries q^{p w / 2}
        WeightModule cp = make_one_dim(1, p);
        CMat r = r_matrix(cp, v);
        for (int j = 0; j < v.dim; ++j)
            for (int i = 0; i < v.dim; ++i) {
                if (i == j)
                    CHECK(r.at(i, j) == qpow(Rat(p) * v.weights[j] / 2, p));
                else
                    CHECK(r.at(i, j).is_zero());
            }
    }
    // braiding is an exact module map for catalogue pairs
    for (int p : {2, 3, 4, 5}) {
        auto mods = catalogue(p);
        for (const auto& m : mods)
            for (const auto& n : mods)
                CHECK(intertwines(tensor(m, n), tensor(n, m), braiding(m, n)));
    }
}

TEST_CASE("monodromy scalars with the simple-current line") {
    for (int p : {2, 3, 4, 5}) {
        WeightModule cp = make_one_dim(1, p);
        for (Rat alpha : {rat(1, 2), rat(3, 4), Rat(p), Rat(1)}) {
            WeightModule v = make_typical(alpha, p);
            CycScalar s;
            CHECK(is_scalar(monodromy(cp, v), &s));
            CHECK(s == qpow(Rat(p) * (alpha + p - 1), p));
        }
        for (int i = 0; i <= p - 2; ++i)
            for (long ell : {0L, 1L}) {
                WeightModule m = make_simple(i, ell, p);
                CycScalar s;
                CHECK(is_scalar(monodromy(cp, m), &s));
                CHECK(s == qpow(Rat(p) * (i + ell * p), p));
            }
        WeightModule u = make_unit(p);
        CHECK(monodromy(u, make_typical(rat(1, 3), p)) == CMat::identity(p));
    }
}

TEST_CASE("twist") {
    for (int p : {2, 3, 4, 5}) {
        CHECK(twist(make_unit(p)) == CMat::identity(1));
        for (Rat alpha : {rat(1, 2), rat(-3, 4), Rat(p)}) {
            WeightModule v = make_typical(alpha, p);
            CycScalar s;
            CHECK(is_scalar(twist(v), &s));
            Rat lam = alpha + p - 1;
            CHECK(s == qpow(lam * lam / 2 - (p - 1) * lam, p));
        }
    }
    // balancing: theta_{M(x)N} = c_{N,M} c_{M,N} (theta_M (x) theta_N)
    for (int p : {2, 3}) {
        auto mods = catalogue(p);
        for (size_t a = 0; a < mods.size(); ++a)
            for (size_t b = a; b < mods.size(); ++b) {
                const WeightModule &m = mods[a], &n = mods[b];
                CMat lhs = twist(tensor(m, n));
                CMat rhs = monodromy(m, n) * twist(m).kron(twist(n));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("quantum traces and dimensions") {
    for (int p : {2, 3, 4, 5}) {
        CHECK(qdim(make_unit(p)) == CycScalar::one());
        for (Rat alpha : {rat(1, 2), rat(2, 3), Rat(p), Rat(1)})
            CHECK(qdim(make_typical(alpha, p)).is_zero());
        // qdim(S_j (x) C_{pl}) = (-1)^{(1-p)l + j} [j+1]
        for (int j = 0; j <= p - 2; ++j)
            for (long ell : {0L, 1L, 2L}) {
                CycScalar expect = CycScalar::from_rat(
                                       Rat(((1 - p) * ell + j) % 2 == 0 ? 1 : -1)) *
                                   qint(Rat(j + 1), p);
                CHECK(qdim(make_simple(j, ell, p)) == expect);
            }
    }
}

TEST_CASE("open Hopf links act by the character evaluation") {
    // on simple W: Phi_{V,W} = Psi_{lambda+1-p}(chi(V)) Id, Psi_g(z^s) = q^{gs}
    for (int p : {2, 3, 5}) {
        std::vector<WeightModule> vs = {make_typical(rat(1, 2), p), make_simple(1, 0, p),
                                        make_unit(p)};
        std::vector<WeightModule> ws = {make_typical(rat(1, 3), p), make_simple(p - 2, 1, p)};
        for (const auto& v : vs)
            for (const auto& w : ws) {
                CMat oh = open_hopf(v, w);
                Rat lam = w.highest_weight();
                CycScalar expect = CycScalar::zero();
                for (const Rat& wt : v.weights) expect += qpow((lam + 1 - p) * wt, p);
                CycScalar s;
                CHECK(is_scalar(oh, &s));
                CHECK(s == expect);
            }
    }
}

TEST_CASE("closed Hopf links match the paper's formulas") {
    for (int p : {2, 3, 4, 5}) {
        WeightModule unit = make_unit(p);
        CycScalar sign = CycScalar::from_rat(Rat(p % 2 == 1 ? 1 : -1));  // (-1)^{p-1}
        for (Rat a1 : {rat(1, 2), rat(2, 3)})
            for (Rat a2 : {rat(1, 4), rat(5, 3)}) {
                WeightModule v1 = make_typical(a1, p), v2 = make_typical(a2, p);
                CHECK(hopf_link(v1, v2) == sign * CycScalar::from_rat(Rat(p)) * qpow(a1 * a2, p));
                CHECK(hopf_link(unit, v2) ==
                      sign * CycScalar::from_rat(Rat(p)) * qbrace(a2, p) / qbrace(Rat(p) * a2, p));
                CHECK(hopf_link(unit, v2) == qdim(v2) + hopf_link(unit, v2) - qdim(v2));
            }
        // hopf_link(unit, W) = qdim(W)
        WeightModule w = make_simple(p - 2, 0, p);
        CHECK(hopf_link(unit, w) == qdim(w));
    }
}

TEST_CASE("atypical Hopf links match Eq. (atypicaluqhopf)") {
    for (int p : {2, 3, 4, 5})
        for (int i = 0; i <= p - 2; ++i)
            for (int j = 0; j <= p - 2; ++j)
                for (long k : {0L, 1L})
                    for (long ell : {0L, 1L}) {
                        WeightModule a = make_simple(i, k, p), b = make_simple(j, ell, p);
                        long ex = (i + 1) * (ell + 1) + (j + 1) * (k + 1) +
                                  (long)p * (k * ell + k + ell);
                        CycScalar expect =
                            CycScalar::from_rat(Rat(ex % 2 == 0 ? 1 : -1)) *
                            qint(Rat((i + 1) * (j + 1)), p);
                        CHECK(hopf_link(a, b) == expect);
                    }
}

TEST_CASE("hopf multiplicativity on the Grothendieck level") {
    // normalized column ratios are multiplicative: S_{S_1 (x) S_1, W}/qdim-anchored
    // checked against the fusion S_1 (x) S_1 = S_0 + S_2 at p >= 3 (ratio form)
    int p = 5;
    WeightModule w = make_typical(rat(1, 2), p), unit = make_unit(p);
    CycScalar unit_col = hopf_link(unit, w);
    auto ratio = [&](const WeightModule& m) { return hopf_link(m, w) / unit_col; };
    CHECK(ratio(make_simple(1, 0, p)) * ratio(make_simple(1, 0, p)) ==
          ratio(make_simple(0, 0, p)) + ratio(make_simple(2, 0, p)));
}

TEST_CASE("float backend agrees with the exact ribbon data") {
    for (int p : {2, 3, 5}) {
        for (Rat a1 : {rat(1, 2), Rat(1)})
            for (Rat a2 : {rat(1, 4), rat(2, 3)}) {
                WeightModule v1 = make_typical(a1, p), v2 = make_typical(a2, p);
                auto ex = hopf_link(v1, v2).approx();
                auto fl = fb::hopf_link_f(fb::to_float(v1), fb::to_float(v2));
                CHECK(std::abs(ex - fl) < 1e-10);
                CHECK(std::abs(qdim(v1).approx() - fb::qdim_f(fb::to_float(v1))) < 1e-10);
            }
        WeightModule v = make_typical(rat(1, 2), p);
        CycScalar s;
        is_scalar(twist(v), &s);
        CHECK(std::abs(s.approx() - fb::twist_scalar_f(fb::to_float(v))) < 1e-10);
    }
}
