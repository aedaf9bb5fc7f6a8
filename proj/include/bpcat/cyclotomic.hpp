#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bpcat/rational.hpp"

namespace bpcat {

struct conductor_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unit complex number e^{pi i r} with r rational, stored reduced mod 2.
/// Multiplication adds exponents, so phase bookkeeping stays exact.
struct RootExp {
    Rat r;  // in [0, 2)

    RootExp() : r(0) {}
    explicit RootExp(const Rat& x) : r(rat_mod(x, 2)) {}

    RootExp operator*(const RootExp& o) const { return RootExp(r + o.r); }
    RootExp inverse() const { return RootExp(-r); }
    RootExp conj() const { return RootExp(-r); }
    RootExp pow(long k) const { return RootExp(r * k); }
    bool is_one() const { return r == 0; }
    bool operator==(const RootExp& o) const { return r == o.r; }

    std::complex<double> approx() const {
        double t = 3.14159265358979323846 * r.get_d();
        return {std::cos(t), std::sin(t)};
    }
};

/// Element of Q(zeta_N), zeta_N = e^{2 pi i / N}, N even.  Coefficients are
/// kept fully reduced in the power basis 1, x, ..., x^{phi(N)-1} of
/// Q[x]/Phi_N(x), so equality of values is equality of coefficient vectors
/// once both operands sit at a common conductor.
class CycScalar {
  public:
    CycScalar() : n_(2), c_(1, Rat(0)) {}

    static CycScalar zero(int N = 2);
    static CycScalar one(int N = 2);
    static CycScalar from_rat(const Rat& r, int N = 2);
    /// zeta_N^k
    static CycScalar root_of_unity(int N, long k);
    /// e^{pi i r}; requires r*N/2 integral, else conductor_error.
    static CycScalar from_rootexp(const Rat& r, int N);
    static CycScalar from_rootexp(const RootExp& e);

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The rational value if the element lies in Q.
    std::optional<Rat> as_rational() const;

    CycScalar promoted(int N) const;  // embed into Q(zeta_N); N multiple of conductor

    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator-() const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar operator/(const CycScalar& o) const;
    CycScalar inverse() const;
    CycScalar conj() const;  // complex conjugation, zeta -> zeta^{-1}
    CycScalar pow(long k) const;

    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    std::complex<double> approx() const;
    std::string str() const;

  private:
    CycScalar(int N, std::vector<Rat> c) : n_(N), c_(std::move(c)) {}

    int n_;               // conductor, even
    std::vector<Rat> c_;  // phi(N) coefficients, reduced mod Phi_N

    friend class CycField;
};

inline CycScalar operator*(const Rat& a, const CycScalar& z) {
    return CycScalar::from_rat(a) * z;
}

int euler_phi(int n);
/// Coefficients of the cyclotomic polynomial Phi_n (computed by dividing
/// x^n - 1 by the Phi_d of proper divisors, no factorization involved).
const std::vector<Rat>& cyclotomic_poly(int n);

}  // namespace bpcat
