#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bpcat/json_io.hpp"
#include "bpcat/qscalar.hpp"

using namespace bpcat;

namespace {
bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-10) {
    return std::abs(a - b) <= tol;
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
    // Phi_1 = x-1, Phi_2 = x+1, Phi_4 = x^2+1, Phi_6 = x^2-x+1, Phi_12 = x^4-x^2+1
    CHECK(cyclotomic_poly(2) == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(cyclotomic_poly(4) == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    CHECK(cyclotomic_poly(6) == std::vector<Rat>{Rat(1), Rat(-1), Rat(1)});
    CHECK(cyclotomic_poly(12) == std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)});
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(40) == 16);
}

TEST_CASE("embed_rootexp basics") {
    CHECK(CycScalar::from_rootexp(Rat(0), 2) == CycScalar::one());
    CHECK(CycScalar::from_rootexp(Rat(1), 2) == CycScalar::from_rat(Rat(-1)));
    // e^{pi i/3} = zeta_6; cube is -1
    CycScalar z = CycScalar::from_rootexp(rat(1, 3), 6);
    CHECK(z == CycScalar::root_of_unity(6, 1));
    CHECK(z.pow(3) == CycScalar::from_rat(Rat(-1)));
    CHECK_THROWS_AS(CycScalar::from_rootexp(rat(1, 3), 2), conductor_error);
}

TEST_CASE("rootexp multiplicativity against embedding") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
    for (int iter = 0; iter < 60; ++iter) {
        Rat a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng));
        RootExp ra(a), rb(b), rab = ra * rb;
        CycScalar ea = CycScalar::from_rootexp(ra);
        CycScalar eb = CycScalar::from_rootexp(rb);
        CHECK(ea * eb == CycScalar::from_rootexp(rab));
    }
}

TEST_CASE("field arithmetic and inverse") {
    // (1 + zeta_8) (1 + zeta_8)^{-1} = 1, at a conductor with nontrivial Phi
    CycScalar z = CycScalar::one(8) + CycScalar::root_of_unity(8, 1);
    CHECK(z * z.inverse() == CycScalar::one(8));
    // conjugation is an involution and matches the float conjugate
    CycScalar w = CycScalar::root_of_unity(12, 5) + CycScalar::from_rat(rat(2, 3), 12);
    CHECK(w.conj().conj() == w);
    CHECK(close(w.conj().approx(), std::conj(w.approx())));
    // promotion keeps the value
    CHECK(close(w.promoted(24).approx(), w.approx()));
    CHECK(w.promoted(24) == w);
}

TEST_CASE("qbrace and qint examples") {
    for (int p : {2, 3, 4, 5}) {
        CHECK(qbrace(Rat(p), p).is_zero());       // {p} = 0
        CHECK(qint(Rat(1), p) == CycScalar::one());
        CHECK(qint(Rat(p), p).is_zero());
    }
    // {1} at p=2 is q - q^{-1} = 2 zeta_4
    CHECK(qbrace(Rat(1), 2) == CycScalar::from_rat(Rat(2)) * CycScalar::root_of_unity(4, 1));
    // [2] at p=3 is 2 cos(pi/3) = 1
    CHECK(qint(Rat(2), 3) == CycScalar::one());
    CHECK(close(qint(Rat(2), 3).approx(), {1.0, 0.0}));
}

TEST_CASE("qbrace symmetries") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-8, 8), den(1, 4);
    for (int p : {2, 3, 5}) {
        for (int iter = 0; iter < 25; ++iter) {
            Rat x = rat(num(rng), den(rng));
            CHECK(qbrace(-x, p) == -qbrace(x, p));
            // conjugation maps q -> q^{-1}, so conj{x} = -{x}
            CHECK(qbrace(x, p).conj() == -qbrace(x, p));
        }
    }
}

TEST_CASE("float backend cross-check") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(-10, 10), den(1, 4);
    for (int p : {2, 3, 4, 5}) {
        for (int iter = 0; iter < 20; ++iter) {
            Rat x = rat(num(rng), den(rng)), y = rat(num(rng), den(rng));
            CycScalar a = qbrace(x, p), b = qint(y == 0 ? Rat(1) : y, p);
            CHECK(close((a * b).approx(), a.approx() * b.approx()));
            CHECK(close((a + b).approx(), a.approx() + b.approx()));
            double pi = 3.14159265358979323846;
            CHECK(close(qpow(x, p).approx(),
                        std::exp(std::complex<double>(0, pi * x.get_d() / p))));
        }
    }
}

TEST_CASE("json round trip") {
    CycScalar w = CycScalar::root_of_unity(12, 5) + CycScalar::from_rat(rat(-7, 3), 12);
    json j = to_json(w);
    CHECK(j["conductor"] == 12);
    CHECK(cyc_from_json(j) == w);
}
