#include "bpcat/gring.hpp"

#include <set>

namespace bpcat {

std::vector<SS> lambda_p(int p) {
    std::vector<SS> out;
    for (long s = 1; s <= p - 1; ++s)
        for (long sp = 0; sp <= p - 1; ++sp)
            if ((s + sp + 1) % 2 == 0) out.push_back({s, sp});
    return out;
}

std::vector<SS> lambda_even(int p) {
    std::vector<SS> out;
    for (const SS& a : lambda_p(p)) {
        out.push_back(a);
        out.push_back({a.s, a.sp - p});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GBasisElem> gring_basis(int p) {
    std::vector<GBasisElem> out;
    if (p % 2 == 1) {
        for (long n = 0; n <= (p - 1) / 2; ++n)
            for (int m = 0; m <= (p - 3) / 2; ++m) out.push_back({2 * n, 2 * m, 0});
        for (long n = 0; n <= (p - 3) / 2; ++n)
            for (int m = 0; m <= (p - 3) / 2; ++m) out.push_back({2 * n + 1, 2 * m, 1});
    } else {
        for (long n = 0; n <= (p - 2) / 2; ++n)
            for (int m = 0; m <= (p - 2) / 2; ++m) out.push_back({2 * n, 2 * m, 0});
        for (long n = 0; n <= (p - 2) / 2; ++n)
            for (int m = 0; m <= (p - 4) / 2; ++m) out.push_back({2 * n + 1, 2 * m + 1, 0});
    }
    return out;
}

std::vector<GBasisElem> gring_basis_even0(int p) {
    if (p % 2 != 0) throw parity_error("gring_basis_even0: p must be even");
    std::vector<GBasisElem> out;
    for (long n = 0; n <= (p - 2) / 2; ++n)
        for (int m = 0; m <= (p - 2) / 2; ++m) {
            out.push_back({2 * n, 2 * m, 0});
            out.push_back({2 * n - p, p - 2 - 2 * m, 0});
        }
    for (long n = 0; n <= (p - 2) / 2; ++n)
        for (int m = 0; m <= (p - 4) / 2; ++m) {
            out.push_back({2 * n + 1, 2 * m + 1, 0});
            out.push_back({2 * n + 1 - p, p - 3 - 2 * m, 0});
        }
    return out;
}

namespace {
long mod2p(long x, int p) {
    long m = 2L * p;
    return ((x % m) + m) % m;
}
}  // namespace

GReduced greduce(long c, int i, long ell, int p) {
    if (i < 0 || i > p - 1) throw std::out_of_range("greduce: i out of range");
    if (((i + (long)p * ell + c) % 2 + 2) % 2 != 0)
        throw parity_error("greduce: class does not satisfy the lifting parity");
    if (i == p - 1) return {0, {0, 0}};  // S_{p-1}-type = typical = negligible
    long s0 = i + 1;
    long sp0 = mod2p(-c - (long)p * ell, p);
    long s = s0, sp = sp0;
    int sigma = 1;
    if (sp0 >= p) {  // (s, s') = -(p - s, s' - p)
        s = p - s0;
        sp = sp0 - p;
        sigma = -1;
    }
    // dressing making the minimal generating set land on +1:
    // odd p: B = (-1)^{s+1} [naive]; even p: B = -[naive] unless s' = 0
    int eps;
    if (p % 2 == 1)
        eps = sigma * (s % 2 == 1 ? 1 : -1);
    else
        eps = sigma * (sp == 0 ? 1 : -1);
    return {eps, {s, sp}};
}

GReduced greduce_even0(long c, int i, long ell, int p) {
    if (p % 2 != 0) throw parity_error("greduce_even0: p must be even");
    if (i < 0 || i > p - 1) throw std::out_of_range("greduce_even0: i out of range");
    if (((i + (long)p * ell + c) % 2 + 2) % 2 != 0)
        throw parity_error("greduce_even0: lifting parity");
    if (i == p - 1) return {0, {0, 0}};
    int sigma = 1;
    long l = ((ell % 2) + 2) % 2;  // [c,i,ell] = [c,i,ell+2]
    if (l == 1) {                  // [c, i, 1] = -[c, p-2-i, 0]
        i = p - 2 - i;
        sigma = -sigma;
        if (i == p - 1) return {0, {0, 0}};
    }
    long c2 = mod2p(c, p);
    long spr = mod2p(-c2 + p, p) - p;  // in [-p, p-1]
    return {sigma, {(long)i + 1, spr}};
}

GElem gelem(const SS& a) { return GElem{{a, 1}}; }

GElem product_basis(const SS& a, const SS& b, int p, bool even0) {
    // representatives (c, i, ell) = (-s', s-1, 0)
    long ia = a.s - 1, ib = b.s - 1;
    long ca = -a.sp, cb = -b.sp;
    long lmin = std::abs(ia - ib);
    long lmax = (ia + ib < p) ? ia + ib : 2L * p - 4 - ia - ib;
    int pref = 1;
    if (!even0) {
        // B = eps [naive], so the product of naives carries eps_a eps_b
        pref = greduce(ca, (int)ia, 0, p).sign * greduce(cb, (int)ib, 0, p).sign;
    }
    GElem out;
    for (long l = lmin; l <= lmax; l += 2) {
        GReduced r = even0 ? greduce_even0(ca + cb, (int)l, 0, p) : greduce(ca + cb, (int)l, 0, p);
        if (r.sign == 0) continue;
        out[r.ss] += pref * r.sign;
        if (out[r.ss] == 0) out.erase(r.ss);
    }
    return out;
}

GElem gmultiply(const GElem& a, const GElem& b, int p, bool even0) {
    GElem out;
    for (const auto& [sa, ka] : a)
        for (const auto& [sb, kb] : b)
            for (const auto& [sc, kc] : product_basis(sa, sb, p, even0)) {
                out[sc] += ka * kb * kc;
                if (out[sc] == 0) out.erase(sc);
            }
    return out;
}

std::map<std::pair<SS, SS>, GElem> structure_constants(int p, bool even0) {
    std::vector<SS> idx = even0 ? lambda_even(p) : lambda_p(p);
    std::map<std::pair<SS, SS>, GElem> out;
    for (const SS& a : idx)
        for (const SS& b : idx) out[{a, b}] = product_basis(a, b, p, even0);
    return out;
}

Report basis_bijection_check(int p, bool even0) {
    Report rep;
    rep.check = even0 ? "gring-basis-bijection-even0" : "gring-basis-bijection";
    std::vector<GBasisElem> basis = even0 ? gring_basis_even0(p) : gring_basis(p);
    std::vector<SS> idx = even0 ? lambda_even(p) : lambda_p(p);
    std::set<SS> seen;
    for (const GBasisElem& g : basis) {
        GReduced r = even0 ? greduce_even0(g.c, g.i, g.ell, p) : greduce(g.c, g.i, g.ell, p);
        rep.require(r.sign == 1, g.str() + " reduces with sign " + std::to_string(r.sign));
        rep.require(seen.insert(r.ss).second, g.str() + " collides at " + r.ss.str());
    }
    rep.require(seen.size() == idx.size(),
                "basis size " + std::to_string(seen.size()) + " != |Lambda| " +
                    std::to_string(idx.size()));
    return rep;
}

}  // namespace bpcat
