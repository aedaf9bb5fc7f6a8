#include "bpcat/hom.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace bpcat {

bool intertwines(const WeightModule& M, const WeightModule& N, const CMat& f) {
    for (int i = 0; i < N.dim; ++i)
        for (int j = 0; j < M.dim; ++j)
            if (!f.at(i, j).is_zero() && N.weights[i] != M.weights[j]) return false;
    return (f * M.E == N.E * f) && (f * M.F == N.F * f);
}

bool Intertwiner::check() const { return intertwines(src, dst, m); }

std::vector<CMat> hom_space(const WeightModule& M, const WeightModule& N) {
    // unknowns: entries f[i][j] with w_N[i] == w_M[j]
    std::vector<std::pair<int, int>> unk;
    std::map<std::pair<int, int>, int> pos;
    for (int i = 0; i < N.dim; ++i)
        for (int j = 0; j < M.dim; ++j)
            if (N.weights[i] == M.weights[j]) {
                pos[{i, j}] = (int)unk.size();
                unk.push_back({i, j});
            }
    if (unk.empty()) return {};
    // equations from f E_M = E_N f and f F_M = F_N f
    std::vector<std::vector<std::pair<int, CycScalar>>> eqs;
    auto add_equations = [&](const CMat& AM, const CMat& AN, const Rat& shift) {
        for (int r = 0; r < N.dim; ++r)
            for (int c = 0; c < M.dim; ++c) {
                if (N.weights[r] != M.weights[c] + shift) continue;
                std::vector<std::pair<int, CycScalar>> eq;
                for (int j = 0; j < M.dim; ++j) {
                    if (AM.at(j, c).is_zero()) continue;
                    auto it = pos.find({r, j});
                    if (it != pos.end()) eq.push_back({it->second, AM.at(j, c)});
                }
                for (int k = 0; k < N.dim; ++k) {
                    if (AN.at(r, k).is_zero()) continue;
                    auto it = pos.find({k, c});
                    if (it != pos.end()) eq.push_back({it->second, -AN.at(r, k)});
                }
                if (!eq.empty()) eqs.push_back(std::move(eq));
            }
    };
    add_equations(M.E, N.E, Rat(2));
    add_equations(M.F, N.F, Rat(-2));

    CMat sys((int)eqs.size(), (int)unk.size());
    for (size_t r = 0; r < eqs.size(); ++r)
        for (const auto& [c, v] : eqs[r]) sys.at((int)r, c) += v;
    std::vector<CVec> null = sys.rows() ? sys.nullspace() : std::vector<CVec>{};
    if (!sys.rows()) {
        // no constraints: every weight-compatible matrix is a hom
        null.clear();
        for (size_t u = 0; u < unk.size(); ++u) {
            CVec v(unk.size(), CycScalar::zero());
            v[u] = CycScalar::one();
            null.push_back(std::move(v));
        }
    }
    std::vector<CMat> basis;
    for (const CVec& v : null) {
        CMat f(N.dim, M.dim);
        for (size_t u = 0; u < unk.size(); ++u)
            if (!v[u].is_zero()) f.at(unk[u].first, unk[u].second) = v[u];
        basis.push_back(std::move(f));
    }
    return basis;
}

int hom_dim(const WeightModule& M, const WeightModule& N) {
    return (int)hom_space(M, N).size();
}

namespace {

// Reduced-echelon span tracker over the module's coordinate space.  Rows are
// weight-homogeneous whenever the inserted vectors are, since vectors of
// different weights have disjoint support.
struct Span {
    std::vector<CVec> rows;       // fully reduced, pivot = 1
    std::vector<int> pivots;      // sorted ascending

    // Reduce v against the rows; returns the residual.
    CVec reduce(CVec v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            const CycScalar& c = v[pivots[r]];
            if (c.is_zero()) continue;
            CycScalar f = c;
            for (size_t j = 0; j < v.size(); ++j)
                if (!rows[r][j].is_zero()) v[j] = v[j] - f * rows[r][j];
        }
        return v;
    }

    // Insert if independent; returns true when the span grew.
    bool insert(const CVec& v_in) {
        CVec v = reduce(v_in);
        int piv = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                piv = (int)j;
                break;
            }
        if (piv < 0) return false;
        CycScalar inv = v[piv].inverse();
        for (auto& x : v)
            if (!x.is_zero()) x = x * inv;
        // back-eliminate the new pivot from existing rows
        for (size_t r = 0; r < rows.size(); ++r) {
            const CycScalar& c = rows[r][piv];
            if (c.is_zero()) continue;
            CycScalar f = c;
            for (size_t j = 0; j < v.size(); ++j)
                if (!v[j].is_zero()) rows[r][j] = rows[r][j] - f * v[j];
        }
        auto it = std::upper_bound(pivots.begin(), pivots.end(), piv);
        size_t at = it - pivots.begin();
        pivots.insert(it, piv);
        rows.insert(rows.begin() + at, std::move(v));
        return true;
    }

    // Coordinates of a vector known to lie in the span.
    CVec coords(const CVec& v_in) const {
        CVec v = v_in;
        CVec out(rows.size(), CycScalar::zero());
        for (size_t r = 0; r < rows.size(); ++r) {
            const CycScalar& c = v[pivots[r]];
            if (c.is_zero()) continue;
            out[r] = c;
            for (size_t j = 0; j < v.size(); ++j)
                if (!rows[r][j].is_zero()) v[j] = v[j] - out[r] * rows[r][j];
        }
        for (const auto& x : v)
            if (!x.is_zero()) throw std::logic_error("Span::coords: vector not in span");
        return out;
    }
};

}  // namespace

std::pair<WeightModule, CMat> submodule_generated(const WeightModule& M,
                                                  const std::vector<CVec>& vectors) {
    Span span;
    std::vector<CVec> queue;
    for (const CVec& v : vectors) {
        // homogeneity check
        Rat w(0);
        bool seen = false;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                if (seen && M.weights[i] != w)
                    throw std::invalid_argument("submodule_generated: non-homogeneous generator");
                w = M.weights[i];
                seen = true;
            }
        if (span.insert(v)) queue.push_back(v);
    }
    while (!queue.empty()) {
        CVec v = std::move(queue.back());
        queue.pop_back();
        for (const CMat* op : {&M.E, &M.F}) {
            CVec w = op->apply(v);
            if (span.insert(w)) queue.push_back(std::move(w));
        }
    }
    WeightModule S;
    S.p = M.p;
    S.dim = (int)span.rows.size();
    CMat incl(M.dim, S.dim);
    for (int k = 0; k < S.dim; ++k) {
        const CVec& b = span.rows[k];
        for (int i = 0; i < M.dim; ++i) incl.at(i, k) = b[i];
        S.weights.push_back(M.weights[span.pivots[k]]);
    }
    S.E = CMat(S.dim, S.dim);
    S.F = CMat(S.dim, S.dim);
    for (int k = 0; k < S.dim; ++k) {
        CVec ec = span.coords(M.E.apply(span.rows[k]));
        CVec fc = span.coords(M.F.apply(span.rows[k]));
        for (int i = 0; i < S.dim; ++i) {
            S.E.at(i, k) = ec[i];
            S.F.at(i, k) = fc[i];
        }
    }
    S.label = "Sub(" + M.label + ")";
    return {S, incl};
}

std::pair<WeightModule, CMat> quotient(const WeightModule& M, const CMat& inclusion) {
    Span span;
    for (int k = 0; k < inclusion.cols(); ++k) {
        CVec v(M.dim);
        for (int i = 0; i < M.dim; ++i) v[i] = inclusion.at(i, k);
        span.insert(v);
    }
    std::vector<bool> is_piv(M.dim, false);
    for (int pv : span.pivots) is_piv[pv] = true;
    std::vector<int> reps;
    for (int i = 0; i < M.dim; ++i)
        if (!is_piv[i]) reps.push_back(i);
    WeightModule Q;
    Q.p = M.p;
    Q.dim = (int)reps.size();
    for (int r : reps) Q.weights.push_back(M.weights[r]);
    // projection: reduce e_i by the span rows, read off rep coordinates
    CMat proj(Q.dim, M.dim);
    for (int i = 0; i < M.dim; ++i) {
        CVec e(M.dim, CycScalar::zero());
        e[i] = CycScalar::one();
        CVec red = span.reduce(std::move(e));
        for (int k = 0; k < Q.dim; ++k) proj.at(k, i) = red[reps[k]];
    }
    // section sigma: Q basis k -> e_{reps[k]}
    CMat sigma(M.dim, Q.dim);
    for (int k = 0; k < Q.dim; ++k) sigma.at(reps[k], k) = CycScalar::one();
    Q.E = proj * M.E * sigma;
    Q.F = proj * M.F * sigma;
    Q.label = "Quot(" + M.label + ")";
    return {Q, proj};
}

std::optional<CMat> is_isomorphic(const WeightModule& M, const WeightModule& N) {
    if (M.dim != N.dim || M.p != N.p) return std::nullopt;
    if (weight_multiset(M) != weight_multiset(N)) return std::nullopt;
    std::vector<CMat> homs = hom_space(M, N);
    if (homs.empty()) return std::nullopt;
    auto invertible = [&](const CMat& f) { return f.rank() == M.dim; };
    for (const CMat& f : homs)
        if (invertible(f)) return f;
    if (homs.size() > 1) {
        // deterministic small-coefficient combinations
        static const long seq[] = {1, -1, 2, -2, 3, -3};
        size_t k = homs.size();
        std::vector<size_t> digit(k, 0);
        for (int iter = 0; iter < 2000; ++iter) {
            // odometer over {1,-1,2,-2,3,-3}^k
            CMat f = homs[0].scaled(CycScalar::from_rat(Rat(seq[digit[0]])));
            for (size_t j = 1; j < k; ++j)
                f = f + homs[j].scaled(CycScalar::from_rat(Rat(seq[digit[j]])));
            if (invertible(f)) return f;
            size_t j = 0;
            while (j < k && ++digit[j] == 6) digit[j++] = 0;
            if (j == k) break;
        }
        std::mt19937 rng(12345);
        std::uniform_int_distribution<long> dist(-9, 9);
        for (int iter = 0; iter < 200; ++iter) {
            CMat f(N.dim, M.dim);
            for (const CMat& h : homs) f = f + h.scaled(CycScalar::from_rat(Rat(dist(rng))));
            if (invertible(f)) return f;
        }
    }
    return std::nullopt;
}

}  // namespace bpcat
