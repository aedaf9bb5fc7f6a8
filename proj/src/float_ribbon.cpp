#include "bpcat/float_ribbon.hpp"

namespace bpcat {
namespace fb {

namespace {

constexpr double kPi = 3.14159265358979323846;

Cx qpow_f(double x, int p) { return std::exp(Cx(0, kPi * x / p)); }

FMat zeros(int r, int c) { return FMat(r, FMat::value_type(c, Cx(0, 0))); }

FMat mul(const FMat& a, const FMat& b) {
    int r = (int)a.size(), k = (int)b.size(), c = (int)b[0].size();
    FMat out = zeros(r, c);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == Cx(0, 0)) continue;
            for (int j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

}  // namespace

FModule to_float(const WeightModule& M) {
    FModule f;
    f.p = M.p;
    f.dim = M.dim;
    for (const Rat& w : M.weights) f.weights.push_back(w.get_d());
    f.E = zeros(M.dim, M.dim);
    f.F = zeros(M.dim, M.dim);
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < M.dim; ++j) {
            f.E[i][j] = M.E.at(i, j).approx();
            f.F[i][j] = M.F.at(i, j).approx();
        }
    return f;
}

Cx qdim_f(const FModule& M) {
    Cx t(0, 0);
    for (int i = 0; i < M.dim; ++i) t += qpow_f((1 - M.p) * M.weights[i], M.p);
    return t;
}

namespace {

FMat r_matrix_f(const FModule& M, const FModule& N) {
    int p = M.p;
    Cx brace1 = qpow_f(1, p) - qpow_f(-1, p);
    FMat sum = zeros(M.dim * N.dim, M.dim * N.dim);
    FMat en = zeros(M.dim, M.dim), fn = zeros(N.dim, N.dim);
    for (int i = 0; i < M.dim; ++i) en[i][i] = 1;
    for (int i = 0; i < N.dim; ++i) fn[i][i] = 1;
    Cx fact(1, 0);
    for (int n = 0; n < p; ++n) {
        if (n > 0) {
            en = mul(M.E, en);
            fn = mul(N.F, fn);
            fact *= qpow_f(n, p) - qpow_f(-n, p);
        }
        Cx coef = std::pow(brace1, 2 * n) * qpow_f(n * (n - 1) / 2.0, p) / fact;
        for (int i = 0; i < M.dim; ++i)
            for (int k = 0; k < M.dim; ++k) {
                if (en[i][k] == Cx(0, 0)) continue;
                for (int j = 0; j < N.dim; ++j)
                    for (int l = 0; l < N.dim; ++l)
                        sum[i * N.dim + j][k * N.dim + l] += coef * en[i][k] * fn[j][l];
            }
    }
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < N.dim; ++j) {
            Cx d = qpow_f(M.weights[i] * N.weights[j] / 2.0, M.p);
            for (auto& x : sum[i * N.dim + j]) x *= d;
        }
    return sum;
}

FMat braiding_f(const FModule& M, const FModule& N) {
    FMat r = r_matrix_f(M, N);
    FMat out = zeros(N.dim * M.dim, M.dim * N.dim);
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < N.dim; ++j) out[j * M.dim + i] = r[i * N.dim + j];
    return out;
}

}  // namespace

Cx hopf_link_f(const FModule& V, const FModule& W) {
    FMat m = mul(braiding_f(W, V), braiding_f(V, W));
    int p = V.p;
    // open Hopf scalar: partial trace over V with pivot K^{p-1}
    Cx phi(0, 0);
    for (int i = 0; i < V.dim; ++i)
        phi += qpow_f((p - 1) * V.weights[i], p) * m[i * W.dim][i * W.dim];
    Cx qd = qdim_f(W);
    if (std::abs(qd) > 1e-9) {
        Cx t(0, 0);
        for (int a = 0; a < W.dim; ++a)
            for (int i = 0; i < V.dim; ++i)
                t += qpow_f((p - 1) * V.weights[i], p) * qpow_f((1 - p) * W.weights[a], p) *
                     m[i * W.dim + a][i * W.dim + a];
        return t;
    }
    // typical column: regularized unit value (-1)^{p-1} p {alpha}/{p alpha}
    double hw = W.weights[0];
    for (double w : W.weights) hw = std::max(hw, w);
    double alpha = hw - (p - 1);
    Cx num = qpow_f(alpha, p) - qpow_f(-alpha, p);
    Cx den = qpow_f(p * alpha, p) - qpow_f(-p * alpha, p);
    double sign = (p % 2 == 1) ? 1.0 : -1.0;
    return phi * sign * double(p) * num / den;
}

Cx twist_scalar_f(const FModule& M) {
    // scalar on a simple module: read off the highest-weight line
    int hi = 0;
    for (int i = 1; i < M.dim; ++i)
        if (M.weights[i] > M.weights[hi]) hi = i;
    double lam = M.weights[hi];
    return qpow_f(lam * lam / 2.0 - (M.p - 1) * lam, M.p);
}

}  // namespace fb
}  // namespace bpcat
