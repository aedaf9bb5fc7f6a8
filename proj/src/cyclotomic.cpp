#include "bpcat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bpcat {

namespace {

// Per-conductor data: Phi_N, reduction rows for x^phi..x^{2phi-2}, and the
// power table zeta^k for k in [0, N).
struct FieldData {
    int n = 0;
    int phi = 0;
    std::vector<Rat> poly;                       // Phi_n, monic, degree phi
    std::vector<std::vector<Rat>> redrow;        // x^{phi+j} mod Phi_n, j = 0..phi-2
    std::vector<std::vector<Rat>> power;         // zeta^k reduced, k = 0..n-1
};

std::map<int, FieldData> g_fields;
std::map<int, std::vector<Rat>> g_cyclo;
std::mutex g_mutex;

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact division of polynomials (remainder must vanish).
std::vector<Rat> poly_div(std::vector<Rat> num, const std::vector<Rat>& den) {
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<Rat> q(dn - dd + 1, Rat(0));
    for (int k = dn - dd; k >= 0; --k) {
        Rat c = num[k + dd] / den[dd];
        q[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const Rat& c : num)
        if (c != 0) throw std::logic_error("poly_div: nonzero remainder");
    return q;
}

const std::vector<Rat>& cyclo_nolock(int n) {
    auto it = g_cyclo.find(n);
    if (it != g_cyclo.end()) return it->second;
    // x^n - 1 divided by Phi_d over proper divisors d of n
    std::vector<Rat> num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div(std::move(num), cyclo_nolock(d));
    }
    return g_cyclo.emplace(n, std::move(num)).first->second;
}

const FieldData& field(int n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_fields.find(n);
    if (it != g_fields.end()) return it->second;
    if (n < 2 || n % 2 != 0) throw conductor_error("conductor must be even and >= 2");
    FieldData fd;
    fd.n = n;
    fd.poly = cyclo_nolock(n);
    fd.phi = (int)fd.poly.size() - 1;
    // x^{phi+j} mod Phi for j up to what products (degree 2 phi - 2) and the
    // power table (degree n - 1) require
    int nrows = std::max(fd.phi - 1, n - fd.phi);
    fd.redrow.resize(std::max(0, nrows));
    std::vector<Rat> cur(fd.phi, Rat(0));
    for (int i = 0; i < fd.phi; ++i) cur[i] = -fd.poly[i];
    if (nrows > 0) fd.redrow[0] = cur;
    for (int j = 1; j < nrows; ++j) {
        std::vector<Rat> nxt(fd.phi, Rat(0));
        Rat top = cur[fd.phi - 1];
        for (int i = fd.phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        if (top != 0)
            for (int i = 0; i < fd.phi; ++i) nxt[i] += top * -fd.poly[i];
        fd.redrow[j] = nxt;
        cur = std::move(nxt);
    }
    // power table zeta^k
    fd.power.resize(n);
    for (int k = 0; k < n; ++k) {
        std::vector<Rat> v(fd.phi, Rat(0));
        if (k < fd.phi) {
            v[k] = 1;
        } else {
            v = fd.redrow[k - fd.phi];
        }
        fd.power[k] = std::move(v);
    }
    return g_fields.emplace(n, std::move(fd)).first->second;
}

// Reduce a polynomial of degree < 2*phi-1 mod Phi_n using the row table.
std::vector<Rat> reduce_poly(const FieldData& fd, std::vector<Rat> a) {
    std::vector<Rat> out(fd.phi, Rat(0));
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) continue;
        if ((int)k < fd.phi) {
            out[k] += a[k];
        } else {
            const auto& row = fd.redrow[k - fd.phi];
            for (int i = 0; i < fd.phi; ++i)
                if (row[i] != 0) out[i] += a[k] * row[i];
        }
    }
    return out;
}

int nonzero_count(const std::vector<Rat>& v, int* last = nullptr) {
    int cnt = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            ++cnt;
            if (last) *last = (int)i;
        }
    return cnt;
}

}  // namespace

int euler_phi(int n) { return (int)cyclotomic_poly(n).size() - 1; }

const std::vector<Rat>& cyclotomic_poly(int n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    return cyclo_nolock(n);
}

CycScalar CycScalar::zero(int N) {
    const FieldData& fd = field(N);
    return CycScalar(N, std::vector<Rat>(fd.phi, Rat(0)));
}

CycScalar CycScalar::one(int N) { return from_rat(Rat(1), N); }

CycScalar CycScalar::from_rat(const Rat& r, int N) {
    const FieldData& fd = field(N);
    std::vector<Rat> c(fd.phi, Rat(0));
    c[0] = r;
    return CycScalar(N, std::move(c));
}

CycScalar CycScalar::root_of_unity(int N, long k) {
    const FieldData& fd = field(N);
    long kk = ((k % N) + N) % N;
    return CycScalar(N, fd.power[kk]);
}

CycScalar CycScalar::from_rootexp(const Rat& r, int N) {
    Rat k = r * N / 2;
    if (!is_integer(k))
        throw conductor_error("e^{pi i " + rat_str(r) + "} does not lie in Q(zeta_" +
                              std::to_string(N) + ")");
    return root_of_unity(N, to_long(k));
}

CycScalar CycScalar::from_rootexp(const RootExp& e) {
    long d = den_long(e.r);
    int N = (int)(2 * d);
    return from_rootexp(e.r, N);
}

bool CycScalar::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<Rat> CycScalar::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

CycScalar CycScalar::promoted(int N) const {
    if (N == n_) return *this;
    if (N % n_ != 0) throw conductor_error("promotion target is not a multiple");
    const FieldData& fd = field(N);
    int step = N / n_;
    std::vector<Rat> out(fd.phi, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const auto& pw = fd.power[(k * step) % N];
        for (int i = 0; i < fd.phi; ++i)
            if (pw[i] != 0) out[i] += c_[k] * pw[i];
    }
    return CycScalar(N, std::move(out));
}

namespace {
int common_conductor(int a, int b) { return (int)std::lcm(a, b); }
}  // namespace

CycScalar CycScalar::operator+(const CycScalar& o) const {
    int N = common_conductor(n_, o.n_);
    CycScalar a = promoted(N), b = o.promoted(N);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
    int N = common_conductor(n_, o.n_);
    CycScalar a = promoted(N), b = o.promoted(N);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

CycScalar CycScalar::operator-() const {
    CycScalar a = *this;
    for (Rat& x : a.c_) x = -x;
    return a;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    int N = common_conductor(n_, o.n_);
    CycScalar a = promoted(N), b = o.promoted(N);
    const FieldData& fd = field(N);
    int la = -1, lb = -1;
    int na = nonzero_count(a.c_, &la), nb = nonzero_count(b.c_, &lb);
    if (na == 0 || nb == 0) return zero(N);
    // monomial fast path
    if (na == 1) {
        std::vector<Rat> out(fd.phi, Rat(0));
        for (int j = 0; j < fd.phi; ++j) {
            if (b.c_[j] == 0) continue;
            int k = la + j;
            if (k < fd.phi) {
                out[k] += a.c_[la] * b.c_[j];
            } else {
                const auto& row = fd.redrow[k - fd.phi];
                for (int i = 0; i < fd.phi; ++i)
                    if (row[i] != 0) out[i] += a.c_[la] * b.c_[j] * row[i];
            }
        }
        return CycScalar(N, std::move(out));
    }
    if (nb == 1) return b * a;
    std::vector<Rat> conv(2 * fd.phi - 1, Rat(0));
    for (int i = 0; i < fd.phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < fd.phi; ++j)
            if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
    }
    return CycScalar(N, reduce_poly(fd, std::move(conv)));
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw std::domain_error("CycScalar: division by zero");
    if (is_rational()) return from_rat(Rat(1) / c_[0], n_);
    // extended Euclid in Q[x]: s*a + t*Phi = gcd (= nonzero constant)
    const FieldData& fd = field(n_);
    std::vector<Rat> r0 = fd.poly, r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of a
    while (true) {
        // r0 = q*r1 + r2
        int d0 = (int)r0.size() - 1, d1 = (int)r1.size() - 1;
        if (d1 < 0) throw std::logic_error("inverse: gcd chain degenerated");
        if (d1 == 0) break;
        std::vector<Rat> q(std::max(0, d0 - d1 + 1), Rat(0));
        std::vector<Rat> rem = r0;
        for (int k = d0 - d1; k >= 0; --k) {
            Rat c = rem[k + d1] / r1[d1];
            q[k] = c;
            if (c == 0) continue;
            for (int j = 0; j <= d1; ++j) rem[k + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s2 = s0 - q*s1
        std::vector<Rat> qs = poly_mul(q, s1);
        std::vector<Rat> s2(std::max(s0.size(), qs.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        while (!s2.empty() && s2.back() == 0) s2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant: inverse = s1 / r1[0]
    std::vector<Rat> inv(fd.phi, Rat(0));
    for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / r1[0];
    return CycScalar(n_, reduce_poly(fd, std::move(inv)));
}

CycScalar CycScalar::operator/(const CycScalar& o) const {
    int N = common_conductor(n_, o.n_);
    return promoted(N) * o.promoted(N).inverse();
}

CycScalar CycScalar::conj() const {
    const FieldData& fd = field(n_);
    std::vector<Rat> out(fd.phi, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const auto& pw = fd.power[(n_ - (int)k) % n_];
        for (int i = 0; i < fd.phi; ++i)
            if (pw[i] != 0) out[i] += c_[k] * pw[i];
    }
    return CycScalar(n_, std::move(out));
}

CycScalar CycScalar::pow(long k) const {
    if (k == 0) return one(n_);
    CycScalar base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? -(unsigned long)k : (unsigned long)k;
    CycScalar acc = one(n_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool CycScalar::operator==(const CycScalar& o) const {
    int N = common_conductor(n_, o.n_);
    CycScalar a = promoted(N), b = o.promoted(N);
    return a.c_ == b.c_;
}

std::complex<double> CycScalar::approx() const {
    std::complex<double> z(0.0, 0.0);
    double step = 2.0 * 3.14159265358979323846 / n_;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        z += c_[k].get_d() * std::complex<double>(std::cos(step * k), std::sin(step * k));
    }
    return z;
}

std::string CycScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[k]);
        if (k > 0) os << "*z" << n_ << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace bpcat
