#include "bpcat/qseries.hpp"

#include <climits>
#include <numeric>
#include <sstream>

namespace bpcat {

void PSeries::set(const Rat& qe, long xe, const Rat& c) {
    if (c == 0)
        t.erase({qe, xe});
    else
        t[{qe, xe}] = c;
}

void PSeries::add_term(const Rat& qe, long xe, const Rat& c) {
    if (qe > cutoff || c == 0) return;
    if (xcap && std::abs(xe) > *xcap) return;
    auto it = t.find({qe, xe});
    if (it == t.end()) {
        t.emplace(std::make_pair(qe, xe), c);
    } else {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

PSeries ps_one(const Rat& D, long dq) {
    PSeries s;
    s.cutoff = D;
    s.dq = dq;
    s.t[{Rat(0), 0}] = Rat(1);
    return s;
}

namespace {
PSeries merge_shell(const PSeries& A, const PSeries& B) {
    PSeries out;
    out.cutoff = std::min(A.cutoff, B.cutoff);
    out.dq = std::lcm(A.dq, B.dq);
    if (A.xcap || B.xcap)
        out.xcap = std::min(A.xcap.value_or(LONG_MAX), B.xcap.value_or(LONG_MAX));
    return out;
}
}  // namespace

PSeries ps_add(const PSeries& A, const PSeries& B) {
    PSeries out = merge_shell(A, B);
    for (const auto& [k, c] : A.t) out.add_term(k.first, k.second, c);
    for (const auto& [k, c] : B.t) out.add_term(k.first, k.second, c);
    return out;
}

PSeries ps_sub(const PSeries& A, const PSeries& B) {
    PSeries out = merge_shell(A, B);
    for (const auto& [k, c] : A.t) out.add_term(k.first, k.second, c);
    for (const auto& [k, c] : B.t) out.add_term(k.first, k.second, -c);
    return out;
}

PSeries ps_scale(const PSeries& A, const Rat& c) {
    PSeries out = A;
    out.t.clear();
    if (c == 0) return out;
    for (const auto& [k, v] : A.t) out.t[k] = v * c;
    return out;
}

PSeries ps_mul(const PSeries& A, const PSeries& B) {
    PSeries out = merge_shell(A, B);
    for (const auto& [ka, ca] : A.t)
        for (const auto& [kb, cb] : B.t)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

PSeries ps_shift(const PSeries& A, const Rat& c, long b, const Rat& a) {
    PSeries out = A;
    out.t.clear();
    for (const auto& [k, v] : A.t) out.add_term(k.first + a, k.second + b, v * c);
    return out;
}

PSeries ps_mul_factor(const PSeries& A, const Rat& c, long b, const Rat& a) {
    return ps_add(A, ps_shift(A, c, b, a));
}

PSeries ps_div_factor(const PSeries& A, long b, const Rat& a) {
    if (a < 0) {
        // 1/(1 - x^b q^a) = -x^{-b} q^{-a} / (1 - x^{-b} q^{-a})
        return ps_div_factor(ps_shift(A, Rat(-1), -b, -a), -b, -a);
    }
    if (a == 0 && b == 0) throw std::domain_error("ps_div_factor: zero denominator");
    if (a == 0) {
        if (b < 0) return ps_div_factor(ps_shift(A, Rat(-1), -b, a), -b, a);
        // the 1/(1-x^b) convention: expand in positive x-powers up to xcap
        if (!A.xcap)
            throw std::domain_error("ps_div_factor: 1/(1-x) convention needs an x bound");
        PSeries out = A, cur = A;
        for (long r = 1; r <= 2 * *A.xcap; ++r) {
            cur = ps_shift(cur, Rat(1), b, Rat(0));
            if (cur.empty()) break;
            out = ps_add(out, cur);
        }
        return out;
    }
    PSeries out = A, cur = A;
    while (true) {
        cur = ps_shift(cur, Rat(1), b, a);
        if (cur.empty()) break;
        out = ps_add(out, cur);
    }
    return out;
}

LSeries ls_mul(const LSeries& A, const LSeries& B) {
    LSeries out;
    out.led.phase = A.led.phase * B.led.phase;
    out.led.qshift = A.led.qshift + B.led.qshift;
    out.led.xshift = A.led.xshift + B.led.xshift;
    out.s = ps_mul(A.s, B.s);
    return out;
}

void SeriesBuilder::mul_monomial(const RootExp& ph, const Rat& q, const Rat& x, const Rat& coeff) {
    led_.phase = led_.phase * ph;
    led_.qshift += q;
    led_.xshift += x;
    coeff_ *= coeff;
}

void SeriesBuilder::mul_factor(long b, Rat a, long e) {
    if (e == 0) return;
    if (a < 0) {
        // (1 - x^b q^a) = -x^b q^a (1 - x^{-b} q^{-a})
        mul_monomial(RootExp(Rat(e)), a * e, Rat(b) * e);
        b = -b;
        a = -a;
    }
    if (a == 0) {
        if (b == 0) {
            zero_ = true;  // the (1-1) factor; only legal with e > 0
            if (e < 0) throw std::domain_error("SeriesBuilder: 1/(1-1)");
            return;
        }
        if (b < 0) {
            mul_monomial(RootExp(Rat(e)), Rat(0), Rat(b) * e);
            b = -b;
        }
    }
    if (a > D_) return;  // invisible below the cutoff
    factors_[{b, a}] += e;
    if (factors_[{b, a}] == 0) factors_.erase({b, a});
}

void SeriesBuilder::mul_eta(int m, long e) {
    mul_monomial(RootExp(), rat(m, 24) * e, Rat(0));
    for (long k = 1; Rat(m) * k <= D_; ++k) mul_factor(0, Rat(m) * k, e);
}

void SeriesBuilder::mul_theta11(int m, long b, const Rat& a, long e) {
    // -i q^{m/12} u^{-1/2} eta(m tau) prod_k (1 - u^{-1} q^{mk})(1 - u q^{m(k-1)})
    mul_monomial(RootExp(rat(-1, 2) * e), (rat(m, 12) - a / 2) * e, rat(-b, 2) * e);
    mul_eta(m, e);
    Rat abs_a = a < 0 ? Rat(-a) : a;
    for (long k = 1; !(Rat(m) * (k - 1) > D_ + abs_a); ++k) {
        Rat e1 = Rat(m) * k - a;        // u^{-1} q^{mk}
        Rat e2 = Rat(m) * (k - 1) + a;  // u q^{m(k-1)}
        if (!(e1 > D_)) mul_factor(-b, e1, e);
        if (!(e2 > D_)) mul_factor(b, e2, e);
    }
}

void SeriesBuilder::mul_theta01(int m, long b, const Rat& a, long e) {
    // prod_k (1 - u^{-1} q^{m(k-1/2)})(1 - q^{mk})(1 - u q^{m(k-1/2)})
    Rat abs_a = a < 0 ? Rat(-a) : a;
    for (long k = 1; !(Rat(m) * (2 * k - 1) / 2 > D_ + abs_a); ++k) {
        Rat eh = Rat(m) * (2 * k - 1) / 2;
        if (!(eh - a > D_)) mul_factor(-b, eh - a, e);
        if (!(eh + a > D_)) mul_factor(b, eh + a, e);
        if (!(Rat(m) * k > D_)) mul_factor(0, Rat(m) * k, e);
    }
}

LSeries SeriesBuilder::build(std::optional<long> xcap) const {
    LSeries out;
    out.led = led_;
    out.s.cutoff = D_;
    out.s.dq = dq_;
    out.s.xcap = xcap;
    if (zero_) return out;
    out.s.t[{Rat(0), 0}] = coeff_;
    for (const auto& [key, e] : factors_) {
        auto [b, a] = key;
        if (e > 0) {
            for (long r = 0; r < e; ++r) out.s = ps_mul_factor(out.s, Rat(-1), b, a);
        } else {
            for (long r = 0; r < -e; ++r) out.s = ps_div_factor(out.s, b, a);
        }
    }
    return out;
}

LSeries eta_factor(int m, const Rat& D, long dq) {
    SeriesBuilder sb(D, dq);
    sb.mul_eta(m, 1);
    return sb.build();
}

LSeries theta11(int m, long b, const Rat& a, const Rat& D, long dq) {
    SeriesBuilder sb(D, dq);
    sb.mul_theta11(m, b, a, 1);
    return sb.build();
}

LSeries theta01(int m, long b, const Rat& a, const Rat& D, long dq) {
    SeriesBuilder sb(D, dq);
    sb.mul_theta01(m, b, a, 1);
    return sb.build();
}

RootDatum root_datum(int p) {
    if (p < 3) throw std::invalid_argument("root_datum: need p >= 3");
    RootDatum rd;
    rd.n = p - 1;
    int n = rd.n;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) {
            RootDatum::Root r;
            r.i = i;
            r.j = j;
            r.b = (j == n - 1) ? 1 : 0;
            r.h = (j < n - 1) ? Rat(j - i + 1) : rat(n, 2) - i;
            rd.positive.push_back(r);
        }
    if (n % 2 == 0) {
        for (const auto& r : rd.positive)
            if (r.i == n / 2 && r.j == n - 1) rd.delta0.push_back(r);
    } else {
        // {alpha_{(n-1)/2, n-1}, -alpha_{(n+1)/2, n-1}}: both evaluate to
        // (K, H) = (v, 1/2) resp. (-v, 1/2); their theta01 product is the
        // square of theta01(tau, v)
        RootDatum::Root r1{(n - 1) / 2, n - 1, 1, rat(1, 2)};
        RootDatum::Root r2{(n + 1) / 2, n - 1, -1, rat(1, 2)};
        rd.delta12.push_back(r1);
        rd.delta12.push_back(r2);
    }
    return rd;
}

LSeries char_bp_product(int p, const Rat& D) {
    long dq = std::lcm(24L, 4L * p);
    SeriesBuilder sb(D, dq);
    sb.mul_eta(p, 2);
    sb.mul_eta(1, -2);
    for (long k = 0;; ++k) {
        Rat f1 = Rat(p) * k + 1, f2 = Rat(p) * (k + 1) - 1;
        Rat h = Rat(p) * (2 * k + 1) / 2;  // p(k+1/2)
        bool any = false;
        if (!(f1 > D)) {
            sb.mul_factor(0, f1, 1);
            any = true;
        }
        if (!(f2 > D)) {
            sb.mul_factor(0, f2, 1);
            any = true;
        }
        for (long b : {1L, -1L})
            for (int sg : {1, -1}) {
                Rat e = h + rat(sg, 2);
                if (!(e > D)) {
                    sb.mul_factor(b, e, -1);
                    any = true;
                }
            }
        if (!any && Rat(p) * k > D + p) break;
    }
    return sb.build();
}

LSeries char_kw(int p, const Rat& D) {
    RootDatum rd = root_datum(p);
    long dq = std::lcm(24L, 4L * p);
    SeriesBuilder sb(D, dq);
    // (-i)^{p(p+1)/2} q^{(p^2-1)(p-2)/24}
    sb.mul_monomial(RootExp(Rat(-(long)p * (p + 1), 4)), Rat((long)(p * p - 1) * (p - 2), 24),
                    Rat(0));
    // eta(p tau)^{-p^2/2 + 5p/2 - 3} eta(tau)^{-(p-3)}
    sb.mul_eta(p, -((long)p - 2) * (p - 3) / 2);
    sb.mul_eta(1, -((long)p - 3));
    for (const auto& r : rd.positive) sb.mul_theta11(p, r.b, -r.h, 1);
    for (const auto& r : rd.delta0) sb.mul_theta11(1, r.b, -Rat(0), -1);
    if (!rd.delta12.empty()) {
        // (prod theta01)^{1/2} collapses to a single theta01(tau, v)
        sb.mul_theta01(1, 1, Rat(0), -1);
    }
    return sb.build();
}

LSeries char_sigma_w(long s, long sp, int p, const Rat& D, long xcap) {
    long dq = std::lcm(24L, 4L * p);
    PSeries acc;
    acc.cutoff = D;
    acc.dq = dq;
    acc.xcap = xcap;
    for (int term = 0; term < 2; ++term) {
        int sgn = term == 0 ? -1 : 1;  // -s/2p then +s/2p
        Rat fsign = term == 0 ? Rat(1) : Rat(-1);
        for (long n = -(long)(D.get_d() / p + std::abs(s) + 3);
             n <= (long)(D.get_d() / p + std::abs(s) + 3); ++n) {
            Rat center = Rat(n) + rat(1, 2) + Rat(sgn) * rat(s, 2 * (long)p);
            Rat En = Rat(p) * center * center;
            if (En > D) continue;
            Rat en = Rat(p) * center + rat(sp, 2);
            PSeries term_s;
            term_s.cutoff = D;
            term_s.dq = dq;
            term_s.xcap = xcap;
            term_s.add_term(En, 0, fsign);
            acc = ps_add(acc, ps_div_factor(term_s, 1, en));
        }
    }
    // prefactor q^{s'^2/4p - s'^2/2} x^{s'/p - 2 s'} / eta^2
    LSeries out;
    out.led.qshift = rat(sp * sp, 4 * (long)p) - rat(sp * sp, 2);
    out.led.xshift = rat(sp, p) - Rat(2 * sp);
    out.led.qshift += rat(-2, 24);  // 1/eta(tau)^2
    out.s = acc;
    for (long k = 1; Rat(k) <= D; ++k) {
        out.s = ps_div_factor(out.s, 0, Rat(k));
        out.s = ps_div_factor(out.s, 0, Rat(k));
    }
    return out;
}

EquivResult equiv_check(const LSeries& A, const LSeries& B) {
    EquivResult res;
    if (A.s.empty() && B.s.empty()) {
        res.ok = true;
        res.both_zero = true;
        return res;
    }
    if (A.s.empty() || B.s.empty()) {
        res.witness = "one side is identically zero to cutoff";
        return res;
    }
    auto lead = [](const PSeries& s) { return s.t.begin(); };
    auto la = lead(A.s), lb = lead(B.s);
    res.coeff = la->second / lb->second;
    res.phase = A.led.phase * B.led.phase.inverse();
    res.a = (A.led.qshift + la->first.first) - (B.led.qshift + lb->first.first);
    res.b = (A.led.xshift + la->first.second) - (B.led.xshift + lb->first.second);
    // compare normalized series up to the common safe cutoff
    Rat safeA = A.s.cutoff - la->first.first;
    Rat safeB = B.s.cutoff - lb->first.first;
    Rat safe = std::min(safeA, safeB);
    std::optional<long> xwin;
    if (A.s.xcap || B.s.xcap)
        xwin = std::min(A.s.xcap.value_or(LONG_MAX), B.s.xcap.value_or(LONG_MAX)) -
               std::max(std::abs(la->first.second), std::abs(lb->first.second));
    std::map<std::pair<Rat, long>, Rat> na, nb;
    for (const auto& [k, c] : A.s.t) {
        Rat qe = k.first - la->first.first;
        long xe = k.second - la->first.second;
        if (qe > safe) continue;
        if (xwin && std::abs(xe) > *xwin) continue;
        na[{qe, xe}] = c / la->second;
    }
    for (const auto& [k, c] : B.s.t) {
        Rat qe = k.first - lb->first.first;
        long xe = k.second - lb->first.second;
        if (qe > safe) continue;
        if (xwin && std::abs(xe) > *xwin) continue;
        nb[{qe, xe}] = c / lb->second;
    }
    if (na == nb) {
        res.ok = true;
    } else {
        for (const auto& [k, c] : na) {
            auto it = nb.find(k);
            if (it == nb.end() || !(it->second == c)) {
                res.witness = "first mismatch at q^" + rat_str(k.first + la->first.first) + " x^" +
                              std::to_string(k.second + la->first.second);
                break;
            }
        }
        if (res.witness.empty()) res.witness = "extra terms on the second series";
    }
    return res;
}

std::string series_dump(const LSeries& A) {
    std::ostringstream os;
    os << "# phase e^{pi i " << rat_str(A.led.phase.r) << "}, qshift " << rat_str(A.led.qshift)
       << ", xshift " << rat_str(A.led.xshift) << ", cutoff " << rat_str(A.s.cutoff) << "\n";
    for (const auto& [k, c] : A.s.t)
        os << "q^{" << rat_str(k.first) << "} x^{" << k.second << "} : " << rat_str(c) << "\n";
    return os.str();
}

}  // namespace bpcat
