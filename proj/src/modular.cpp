#include "bpcat/modular.hpp"

#include <map>

namespace bpcat {

TypicalIndex typical_index(const ExtLabel& ev, int p) {
    auto [nu, ell] = nu_ell(ev, p);
    // nu is defined mod 2; wrap into (-1, 1]
    Rat w = rat_mod(nu, Rat(2));
    if (w > 1) w -= 2;
    return {w, ell};
}

CycScalar s_chi_typical(const TypicalIndex& a, const TypicalIndex& b, int p) {
    Rat e = Rat(4) * a.ell * b.ell / p - a.ell * b.nu - b.ell * a.nu;
    return CycScalar::from_rootexp(RootExp(e));
}

CycScalar s_chi_unit_typical(const Rat& nup, int p) {
    if (is_integer(nup * p / 2)) throw pole_error("s_chi_unit_typical: pole at nu' = " + rat_str(nup));
    // x = e^{pi i nu'/2}; (x - x^{-1})/(x^p - x^{-p}) = {p nu'/2}_1 / ... in
    // rootexp form directly:
    CycScalar num = CycScalar::from_rootexp(RootExp(nup / 2)) -
                    CycScalar::from_rootexp(RootExp(-nup / 2));
    CycScalar den = CycScalar::from_rootexp(RootExp(nup * p / 2)) -
                    CycScalar::from_rootexp(RootExp(-nup * p / 2));
    return num / den;
}

Report check_typical_comparison(int p, long den_bound, int min_pairs) {
    Report rep;
    rep.check = "typical-comparison-p" + std::to_string(p);
    // EV labels: alpha = num/den, c chosen so alpha + p - 1 + c in 2Z.
    std::vector<ExtLabel> rows, cols;
    for (long d = 1; d <= den_bound; ++d)
        for (long n = 1; n <= 2 * d + 1; ++n) {
            Rat alpha = rat(n, d);
            alpha.canonicalize();
            if (den_long(alpha) != d) continue;
            if (!is_typical_alpha(alpha, p)) continue;
            for (long t : {0L, 1L}) {
                Rat c = -(alpha + (p - 1)) + 2 * t;
                ExtLabel L{ExtLabel::EV, c, alpha, 0, 0};
                rows.push_back(L);
                if (!is_integer(alpha)) cols.push_back(L);  // columns avoid the pole set
            }
        }
    // include a pZ-typical row
    {
        Rat alpha = Rat(p);
        Rat c = -(alpha + (p - 1));
        rows.push_back(ExtLabel{ExtLabel::EV, c, alpha, 0, 0});
    }
    WeightModule unit = make_unit(p);
    int done = 0;
    for (const ExtLabel& A : rows) {
        for (const ExtLabel& B : cols) {
            if (done >= min_pairs) break;
            TypicalIndex ia = typical_index(A, p), ib = typical_index(B, p);
            CycScalar lhs =
                (s_chi_typical(ia, ib, p) / s_chi_unit_typical(ib.nu, p)).conj();
            WeightModule V1 = make_typical(A.alpha, p), V2 = make_typical(B.alpha, p);
            CycScalar fock = CycScalar::from_rootexp(FockLine{A.c}.hopf_with({B.c}, p));
            CycScalar rhs = fock * hopf_link(V1, V2) / hopf_link(unit, V2);
            rep.require(lhs == rhs, "mismatch at " + A.str() + " vs " + B.str());
            ++done;
        }
    }
    rep.notes.push_back("pairs checked: " + std::to_string(done));
    return rep;
}

CycScalar s_hopf_atypical_closed(const SS& a, const SS& b, int p) {
    return qpow(Rat(-a.sp * b.sp), p) * qint(Rat(a.s * b.s), p);
}

CycScalar s_hopf_atypical(const SS& a, const SS& b, int p) {
    // duality-closed basis representative and its sign
    GReduced ra = greduce(-a.sp, (int)a.s - 1, 0, p);
    GReduced rb = greduce(-b.sp, (int)b.s - 1, 0, p);
    WeightModule wa = make_simple((int)a.s - 1, 0, p), wb = make_simple((int)b.s - 1, 0, p);
    CycScalar fock = CycScalar::from_rootexp(FockLine{Rat(-a.sp)}.hopf_with({Rat(-b.sp)}, p));
    CycScalar val = CycScalar::from_rat(Rat(ra.sign * rb.sign)) * fock * hopf_link(wa, wb);
    CycScalar closed = s_hopf_atypical_closed(a, b, p);
    if (!(val == closed))
        throw std::logic_error("s_hopf_atypical: first-principles value differs from closed form at " +
                               a.str() + "," + b.str());
    return val;
}

CycScalar s_chi_atypical_normalized(const SS& a, const SS& b, int p) {
    return qpow(Rat(b.sp * a.sp), p) * qint(Rat(b.s * a.s), p) / qint(Rat(b.s), p);
}

Report check_atypical_comparison(int p) {
    Report rep;
    rep.check = "atypical-comparison-p" + std::to_string(p);
    std::vector<SS> idx = lambda_p(p);
    SS unit{1, 0};
    for (const SS& a : idx)
        for (const SS& b : idx) {
            CycScalar lhs = s_chi_atypical_normalized(a, b, p).conj();
            CycScalar rhs = s_hopf_atypical(a, b, p) / s_hopf_atypical(unit, b, p);
            rep.require(lhs == rhs, "mismatch at " + a.str() + "," + b.str());
        }
    return rep;
}

Report verlinde_check(int p) {
    Report rep;
    rep.check = "verlinde-p" + std::to_string(p);
    std::vector<SS> idx = lambda_p(p);
    int n = (int)idx.size();
    rep.require(n == p * (p - 1) / 2,
                "|Lambda_p| = " + std::to_string(n) + " != p(p-1)/2");
    CMat S(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) S.at(i, j) = s_hopf_atypical(idx[i], idx[j], p);
    auto Sinv = S.inverse();
    rep.require(bool(Sinv), "S-matrix not invertible");
    if (!Sinv) return rep;
    std::map<SS, int> at;
    for (int i = 0; i < n; ++i) at[idx[i]] = i;
    int iu = at[SS{1, 0}];
    CMat ratio(n, n);  // S[a][m] / S[unit][m]
    for (int m = 0; m < n; ++m) {
        CycScalar inv = S.at(iu, m).inverse();
        for (int a = 0; a < n; ++a) ratio.at(a, m) = S.at(a, m) * inv;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            GElem prod = product_basis(idx[a], idx[b], p, false);
            for (int k = 0; k < n; ++k) {
                CycScalar acc = CycScalar::zero();
                for (int m = 0; m < n; ++m)
                    acc += ratio.at(a, m) * S.at(b, m) * Sinv->at(m, k);
                auto r = acc.as_rational();
                bool ok = bool(r) && is_integer(*r) && *r >= 0;
                long expect = 0;
                auto it = prod.find(idx[k]);
                if (it != prod.end()) expect = it->second;
                ok = ok && to_long(*r) == expect;
                rep.require(ok, "N[" + idx[a].str() + "," + idx[b].str() + "->" + idx[k].str() +
                                    "] != gring (" + std::to_string(expect) + ")");
            }
        }
    return rep;
}

Report check_even_p(int p) {
    Report rep;
    rep.check = "even-p" + std::to_string(p);
    if (p % 2 != 0) {
        rep.fail("p must be even");
        return rep;
    }
    std::vector<SS> idx = lambda_even(p);
    int n = (int)idx.size();
    // first-principles matrix over Lambda u Lambda~, representatives with
    // k = l = 0 and charge c = -s'
    CMat S(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const SS& a = idx[i];
            const SS& b = idx[j];
            WeightModule wa = make_simple((int)a.s - 1, 0, p), wb = make_simple((int)b.s - 1, 0, p);
            CycScalar fock =
                CycScalar::from_rootexp(FockLine{Rat(-a.sp)}.hopf_with({Rat(-b.sp)}, p));
            S.at(i, j) = fock * hopf_link(wa, wb);
        }
    // four-quadrant sign table against Lambda-representative values
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const SS& a = idx[i];
            const SS& b = idx[j];
            long srep = a.sp >= 0 ? a.sp : a.sp + p;
            long nrep = b.sp >= 0 ? b.sp : b.sp + p;
            int sign;
            if (a.sp >= 0 && b.sp >= 0)
                sign = ((a.s + b.s) % 2 == 0) ? 1 : -1;  // (-1)^{s+n}
            else if (a.sp >= 0)
                sign = (b.s % 2 == 0) ? -1 : 1;          // (-1)^{n+1}
            else if (b.sp >= 0)
                sign = (a.s % 2 == 0) ? -1 : 1;          // (-1)^{s+1}
            else
                sign = 1;
            CycScalar expect = CycScalar::from_rat(Rat(sign)) * qpow(Rat(-nrep * srep), p) *
                               qint(Rat(a.s * b.s), p);
            rep.require(S.at(i, j) == expect,
                        "table mismatch at " + a.str() + "," + b.str());
        }
    auto Sinv = S.inverse();
    rep.require(bool(Sinv), "S-matrix not invertible");
    if (!Sinv) return rep;
    std::map<SS, int> at;
    for (int i = 0; i < n; ++i) at[idx[i]] = i;
    int iu = at[SS{1, 0}];
    CMat ratio(n, n);
    for (int m = 0; m < n; ++m) {
        CycScalar inv = S.at(iu, m).inverse();
        for (int a = 0; a < n; ++a) ratio.at(a, m) = S.at(a, m) * inv;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            GElem prod = product_basis(idx[a], idx[b], p, true);
            for (int k = 0; k < n; ++k) {
                CycScalar acc = CycScalar::zero();
                for (int m = 0; m < n; ++m)
                    acc += ratio.at(a, m) * S.at(b, m) * Sinv->at(m, k);
                auto r = acc.as_rational();
                bool ok = bool(r) && is_integer(*r) && *r >= 0;
                long expect = 0;
                auto it = prod.find(idx[k]);
                if (it != prod.end()) expect = it->second;
                ok = ok && to_long(*r) == expect;
                rep.require(ok, "even Verlinde N[" + idx[a].str() + "," + idx[b].str() + "->" +
                                    idx[k].str() + "] != ring (" + std::to_string(expect) + ")");
            }
        }
    return rep;
}

Report orthogonality_check(long range) {
    Report rep;
    rep.check = "orthogonality";
    // integer grid and half-integer grid: k = m - l is an integer in both
    for (int twice = 0; twice < 2; ++twice) {
        for (long m2 = -2 * range; m2 <= 2 * range; m2 += 2)
            for (long l2 = -2 * range; l2 <= 2 * range; l2 += 2) {
                Rat m = rat(m2 + twice, 2), l = rat(l2 + twice, 2);
                Rat k = m - l;  // integer
                // int_{-1}^{1} (1/2) e^{pi i nu k} d nu: antiderivative
                // (e^{pi i k} - e^{-pi i k})/(2 pi i k) for k != 0, else 1
                if (k == 0) {
                    rep.pass();
                    continue;
                }
                CycScalar num = CycScalar::from_rootexp(RootExp(k)) -
                                CycScalar::from_rootexp(RootExp(-k));
                rep.require(num.is_zero(), "nonzero integral at m-l=" + rat_str(k));
            }
    }
    return rep;
}

}  // namespace bpcat
