#pragma once

#include <map>
#include <optional>

#include "bpcat/cyclotomic.hpp"

namespace bpcat {

/// Truncated bivariate series: rational coefficients on q^{a} x^{b} with a
/// rational of bounded denominator and b integral.  `cutoff` is the largest
/// retained q-exponent; multiplication truncates consistently.  When the
/// 1/(1-x) convention is in play, `xcap` bounds |b| and is recorded here.
struct PSeries {
    Rat cutoff;
    long dq = 1;  // q-exponent denominators divide this
    std::optional<long> xcap;
    std::map<std::pair<Rat, long>, Rat> t;

    bool empty() const { return t.empty(); }
    void set(const Rat& qe, long xe, const Rat& c);
    void add_term(const Rat& qe, long xe, const Rat& c);
};

PSeries ps_one(const Rat& D, long dq);
PSeries ps_add(const PSeries& A, const PSeries& B);
PSeries ps_sub(const PSeries& A, const PSeries& B);
PSeries ps_scale(const PSeries& A, const Rat& c);
PSeries ps_mul(const PSeries& A, const PSeries& B);
/// A * c x^b q^a
PSeries ps_shift(const PSeries& A, const Rat& c, long b, const Rat& a);
/// A * (1 + c x^b q^a)
PSeries ps_mul_factor(const PSeries& A, const Rat& c, long b, const Rat& a);
/// A / (1 - x^b q^a), expanded q-adically when a > 0, rewritten when a < 0,
/// and via the sum-over-positive-x-powers convention when a = 0 (requires
/// xcap on A).
PSeries ps_div_factor(const PSeries& A, long b, const Rat& a);

/// Monomial prefactor that cannot live in the series itself: a phase
/// e^{pi i r}, a rational q-shift and a rational (possibly fractional)
/// x-shift.
struct Ledger {
    RootExp phase;
    Rat qshift = Rat(0);
    Rat xshift = Rat(0);
};

struct LSeries {
    Ledger led;
    PSeries s;
};

LSeries ls_mul(const LSeries& A, const LSeries& B);

/// Product accumulator for eta/theta assemblies.  Factors (1 - x^b q^a) are
/// normalized so a > 0, or a = 0 with b > 0; extracted monomials go to the
/// ledger.  Exponents may be negative (division).
class SeriesBuilder {
  public:
    SeriesBuilder(const Rat& D, long dq) : D_(D), dq_(dq) {}

    void mul_monomial(const RootExp& ph, const Rat& q, const Rat& x, const Rat& coeff = Rat(1));
    void mul_factor(long b, Rat a, long e);  // (1 - x^b q^a)^e
    void mul_eta(int m, long e);             // eta(m tau)^e
    /// eta-free part of theta_11(m tau, u = x^b q^a) including the -i,
    /// q^{m/12}, u^{-1/2} prefactors and eta(m)
    void mul_theta11(int m, long b, const Rat& a, long e);
    /// theta_01(m tau, u = x^b q^a)
    void mul_theta01(int m, long b, const Rat& a, long e);

    LSeries build(std::optional<long> xcap = std::nullopt) const;

  private:
    Rat D_;
    long dq_;
    Ledger led_;
    Rat coeff_ = Rat(1);
    bool zero_ = false;
    std::map<std::pair<long, Rat>, long> factors_;  // (b, a) -> exponent
};

LSeries eta_factor(int m, const Rat& D, long dq);
LSeries theta11(int m, long b, const Rat& a, const Rat& D, long dq);
LSeries theta01(int m, long b, const Rat& a, const Rat& D, long dq);

/// sl_{p-1} positive-root data entering the reduction character: the root
/// alpha_{i,j} evaluates on K to b*v (b = 1 iff j = n-1) and on H to
/// j - i + 1 (j < n-1) or n/2 - i (j = n-1).
struct RootDatum {
    int n;
    struct Root {
        int i, j;
        long b;  // alpha(K) = b v
        Rat h;   // alpha(H)
    };
    std::vector<Root> positive;
    std::vector<Root> delta0;   // alpha(H) = 0 (n even)
    std::vector<Root> delta12;  // alpha(H) = 1/2 (n odd), stored with signs applied
};

RootDatum root_datum(int p);

/// ch[B_p] as the explicit eta/quotient product.
LSeries char_bp_product(int p, const Rat& D);
/// The quantum-Hamiltonian-reduction character assembled from the root
/// system and theta functions (independent route from char_bp_product).
LSeries char_kw(int p, const Rat& D);
/// ch[sigma^{s'}(W_s)]
LSeries char_sigma_w(long s, long sp, int p, const Rat& D, long xcap = 48);

struct EquivResult {
    bool ok = false;
    bool both_zero = false;
    Rat coeff = Rat(1);  // rational part of gamma
    RootExp phase;       // unit part of gamma
    Rat a = Rat(0), b = Rat(0);
    std::string witness;
};

/// Test X = gamma q^a x^b Y up to the common safe cutoff.
EquivResult equiv_check(const LSeries& A, const LSeries& B);

std::string series_dump(const LSeries& A);

}  // namespace bpcat
