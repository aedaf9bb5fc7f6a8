#include "bpcat/ribbon.hpp"

namespace bpcat {

namespace {

// coefficients {1}^{2n}/{n}! q^{n(n-1)/2}
std::vector<CycScalar> r_coeffs(int p) {
    std::vector<CycScalar> c;
    for (int n = 0; n < p; ++n) {
        CycScalar num = qbrace(Rat(1), p).pow(2 * n) * qpow(rat(n * (n - 1), 2), p);
        c.push_back(num / qbrace_fact(n, p));
    }
    return c;
}

}  // namespace

CMat r_matrix(const WeightModule& M, const WeightModule& N) {
    if (M.p != N.p) throw std::invalid_argument("r_matrix: p mismatch");
    int p = M.p;
    std::vector<CycScalar> coef = r_coeffs(p);
    CMat sum(M.dim * N.dim, M.dim * N.dim);
    CMat en = CMat::identity(M.dim), fn = CMat::identity(N.dim);
    for (int n = 0; n < p; ++n) {
        if (n > 0) {
            en = M.E * en;
            fn = N.F * fn;
        }
        if (en.is_zero() || fn.is_zero()) break;
        sum = sum + en.kron(fn).scaled(coef[n]);
    }
    // q^{H (x) H / 2} in front
    CMat out(M.dim * N.dim, M.dim * N.dim);
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < N.dim; ++j) {
            int row = i * N.dim + j;
            CycScalar d = qpow(M.weights[i] * N.weights[j] / 2, p);
            for (int cidx = 0; cidx < M.dim * N.dim; ++cidx)
                if (!sum.at(row, cidx).is_zero()) out.at(row, cidx) = d * sum.at(row, cidx);
        }
    return out;
}

CMat braiding(const WeightModule& M, const WeightModule& N) {
    CMat r = r_matrix(M, N);
    CMat out(N.dim * M.dim, M.dim * N.dim);
    // flip: (i,j) of M(x)N goes to row (j,i) of N(x)M
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < N.dim; ++j)
            for (int cidx = 0; cidx < M.dim * N.dim; ++cidx) {
                const CycScalar& v = r.at(i * N.dim + j, cidx);
                if (!v.is_zero()) out.at(j * M.dim + i, cidx) = v;
            }
    return out;
}

CMat monodromy(const WeightModule& M, const WeightModule& N) {
    return braiding(N, M) * braiding(M, N);
}

CMat twist(const WeightModule& M) {
    int p = M.p;
    std::vector<CycScalar> coef = r_coeffs(p);
    // S(F)^n = (-K F)^n as an operator on M
    CMat kf = M.kdiag(Rat(1)) * M.F;
    CMat qh2(M.dim, M.dim);
    for (int i = 0; i < M.dim; ++i)
        qh2.at(i, i) = qpow(-M.weights[i] * M.weights[i] / 2, p);
    CMat acc(M.dim, M.dim);
    CMat sfn = CMat::identity(M.dim), en = CMat::identity(M.dim);
    for (int n = 0; n < p; ++n) {
        if (n > 0) {
            sfn = sfn * kf.scaled(CycScalar::from_rat(Rat(-1)));
            en = M.E * en;
        }
        if (sfn.is_zero() || en.is_zero()) break;
        acc = acc + (sfn * qh2 * en).scaled(coef[n]);
    }
    CMat theta_tilde = M.kdiag(Rat(p - 1)) * acc;
    auto inv = theta_tilde.inverse();
    if (!inv) throw std::runtime_error("twist: theta-tilde not invertible");
    return *inv;
}

CycScalar qtrace(const WeightModule& M, const CMat& f) {
    CycScalar t = CycScalar::zero();
    for (int i = 0; i < M.dim; ++i) {
        if (f.at(i, i).is_zero()) continue;
        t += qpow((1 - M.p) * M.weights[i], M.p) * f.at(i, i);
    }
    return t;
}

CycScalar qdim(const WeightModule& M) { return qtrace(M, CMat::identity(M.dim)); }

CMat open_hopf(const WeightModule& V, const WeightModule& W) {
    CMat m = monodromy(V, W);
    CMat out(W.dim, W.dim);
    for (int a = 0; a < W.dim; ++a)
        for (int b = 0; b < W.dim; ++b) {
            CycScalar s = CycScalar::zero();
            for (int i = 0; i < V.dim; ++i) {
                const CycScalar& x = m.at(i * W.dim + a, i * W.dim + b);
                if (x.is_zero()) continue;
                s += qpow(Rat(V.p - 1) * V.weights[i], V.p) * x;
            }
            out.at(a, b) = s;
        }
    return out;
}

CycScalar open_hopf_scalar(const WeightModule& V, const WeightModule& W) {
    CMat oh = open_hopf(V, W);
    CycScalar s = oh.at(0, 0);
    for (int i = 0; i < W.dim; ++i)
        for (int j = 0; j < W.dim; ++j) {
            const CycScalar& v = oh.at(i, j);
            if (i == j ? !(v == s) : !v.is_zero())
                throw std::logic_error("open_hopf_scalar: not a scalar on " + W.label);
        }
    return s;
}

CycScalar unit_hopf_column(const WeightModule& W) {
    CycScalar qd = qdim(W);
    if (!qd.is_zero()) return qd;
    // typical column: W must be a p-dimensional weight string
    int p = W.p;
    if (W.dim != p) throw std::domain_error("unit_hopf_column: qdim = 0 on a non-typical column");
    std::vector<Rat> ws = weight_multiset(W);
    for (int i = 0; i + 1 < p; ++i)
        if (ws[i + 1] - ws[i] != 2)
            throw std::domain_error("unit_hopf_column: qdim = 0 on a non-typical column");
    Rat alpha = ws[p - 1] - (p - 1);
    CycScalar den = qbrace(Rat(p) * alpha, p);
    if (den.is_zero()) throw std::domain_error("unit_hopf_column: pole at alpha in Z");
    return CycScalar::from_rat(Rat(p % 2 == 1 ? p : -p)) * qbrace(alpha, p) / den;
}

CycScalar hopf_link(const WeightModule& V, const WeightModule& W) {
    CycScalar qd = qdim(W);
    if (!qd.is_zero()) return qtrace(W, open_hopf(V, W));
    return open_hopf_scalar(V, W) * unit_hopf_column(W);
}

CycScalar r_weight_trace(const WeightModule& M, const WeightModule& N, const Rat& lambda) {
    CycScalar t = CycScalar::zero();
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < N.dim; ++j)
            if (M.weights[i] + N.weights[j] == lambda)
                t += qpow(M.weights[i] * N.weights[j] / 2, M.p);
    return t;
}

}  // namespace bpcat
