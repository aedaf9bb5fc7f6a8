#include "bpcat/weight_module.hpp"

#include <algorithm>
#include <sstream>

#include "bpcat/hom.hpp"

namespace bpcat {

CMat WeightModule::kdiag(const Rat& m) const {
    CMat k(dim, dim);
    for (int i = 0; i < dim; ++i) k.at(i, i) = qpow(m * weights[i], p);
    return k;
}

Rat WeightModule::highest_weight() const {
    Rat h = weights.at(0);
    for (const Rat& w : weights) h = std::max(h, w);
    return h;
}

void WeightModule::check() const {
    auto fail = [&](const std::string& what) {
        throw std::logic_error("WeightModule '" + label + "': " + what);
    };
    if ((int)weights.size() != dim || E.rows() != dim || F.rows() != dim) fail("shape");
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (!E.at(i, j).is_zero() && weights[i] != weights[j] + 2) fail("E weight shift");
            if (!F.at(i, j).is_zero() && weights[i] != weights[j] - 2) fail("F weight shift");
        }
    // [E,F] = (K - K^{-1})/(q - q^{-1})
    CMat lhs = E * F - F * E;
    CMat rhs(dim, dim);
    CycScalar brace1 = qbrace(Rat(1), p);
    for (int i = 0; i < dim; ++i) rhs.at(i, i) = qbrace(weights[i], p) / brace1;
    if (!(lhs == rhs)) fail("[E,F] relation");
    // E^p = F^p = 0
    CMat ep = CMat::identity(dim), fp = CMat::identity(dim);
    for (int k = 0; k < p; ++k) {
        ep = ep * E;
        fp = fp * F;
    }
    if (!ep.is_zero() || !fp.is_zero()) fail("E^p/F^p nilpotency");
}

bool is_typical_alpha(const Rat& alpha, int p) {
    if (!is_integer(alpha)) return true;
    return to_long(alpha) % p == 0;
}

WeightModule make_unit(int p) { return make_simple(0, 0, p); }

WeightModule make_one_dim(long ell, int p) { return make_simple(0, ell, p); }

WeightModule make_simple(int n, long ell, int p) {
    if (n < 0 || n > p - 1) throw std::out_of_range("make_simple: need 0 <= n <= p-1");
    WeightModule m;
    m.p = p;
    m.dim = n + 1;
    m.E = CMat(m.dim, m.dim);
    m.F = CMat(m.dim, m.dim);
    // sign from tensoring with C^H_{lp}: E picks up q^{lp} = (-1)^l
    CycScalar sgn = CycScalar::from_rat(Rat(ell % 2 == 0 ? 1 : -1));
    for (int i = 0; i <= n; ++i) {
        m.weights.push_back(Rat(n) + Rat(ell) * p - 2 * i);
        if (i + 1 <= n) m.F.at(i + 1, i) = CycScalar::one();
        if (i >= 1) m.E.at(i - 1, i) = sgn * (qint(Rat(i), p) * qint(Rat(n + 1 - i), p));
    }
    std::ostringstream os;
    os << "S(" << n << "," << ell << ")";
    m.label = os.str();
    return m;
}

WeightModule make_typical(const Rat& alpha, int p) {
    WeightModule m;
    m.p = p;
    m.dim = p;
    m.E = CMat(p, p);
    m.F = CMat(p, p);
    for (int i = 0; i < p; ++i) {
        m.weights.push_back(alpha + (p - 1) - 2 * i);
        if (i + 1 < p) m.F.at(i + 1, i) = CycScalar::one();
        if (i >= 1) m.E.at(i - 1, i) = qint(Rat(i), p) * qint(Rat(i) - alpha, p);
    }
    m.label = "V(" + rat_str(alpha) + ")";
    return m;
}

WeightModule tensor(const WeightModule& M, const WeightModule& N) {
    if (M.p != N.p) throw std::invalid_argument("tensor: p mismatch");
    WeightModule t;
    t.p = M.p;
    t.dim = M.dim * N.dim;
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < N.dim; ++j) t.weights.push_back(M.weights[i] + N.weights[j]);
    CMat idm = CMat::identity(M.dim), idn = CMat::identity(N.dim);
    // Delta(E) = 1 (x) E + E (x) K,  Delta(F) = K^{-1} (x) F + F (x) 1
    t.E = M.E.kron(N.kdiag(Rat(1))) + idm.kron(N.E);
    t.F = M.kdiag(Rat(-1)).kron(N.F) + M.F.kron(idn);
    t.label = M.label + "(x)" + N.label;
    return t;
}

WeightModule dual(const WeightModule& M) {
    WeightModule d;
    d.p = M.p;
    d.dim = M.dim;
    for (const Rat& w : M.weights) d.weights.push_back(-w);
    d.E = CMat(d.dim, d.dim);
    d.F = CMat(d.dim, d.dim);
    // (a f)(v) = f(S(a) v): S(E) = -E K^{-1}, S(F) = -K F
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < M.dim; ++j) {
            if (!M.E.at(i, j).is_zero())
                d.E.at(j, i) = -(M.E.at(i, j) * qpow(-M.weights[j], M.p));
            if (!M.F.at(i, j).is_zero())
                d.F.at(j, i) = -(M.F.at(i, j) * qpow(M.weights[i], M.p));
        }
    d.label = "dual(" + M.label + ")";
    return d;
}

WeightModule shift_module(const WeightModule& M, long k) {
    WeightModule s = M;
    if (k == 0) return s;
    for (Rat& w : s.weights) w += Rat(k) * M.p;
    if (k % 2 != 0) s.E = s.E.scaled(CycScalar::from_rat(Rat(-1)));
    s.label = M.label + "(x)C(" + std::to_string(k) + "p)";
    return s;
}

WeightModule module_direct_sum(const std::vector<WeightModule>& parts) {
    WeightModule d;
    d.p = parts.empty() ? 2 : parts[0].p;
    std::vector<CMat> es, fs;
    std::string lbl;
    for (const auto& m : parts) {
        d.dim += m.dim;
        d.weights.insert(d.weights.end(), m.weights.begin(), m.weights.end());
        es.push_back(m.E);
        fs.push_back(m.F);
        if (!lbl.empty()) lbl += "+";
        lbl += m.label;
    }
    d.E = direct_sum(es);
    d.F = direct_sum(fs);
    d.label = lbl;
    return d;
}

std::vector<Rat> weight_multiset(const WeightModule& M) {
    std::vector<Rat> w = M.weights;
    std::sort(w.begin(), w.end());
    return w;
}

WeightModule make_projective(int i, long ell, int p) {
    if (i < 0 || i > p - 2) throw std::out_of_range("make_projective: need 0 <= i <= p-2");
    WeightModule amb = tensor(make_simple(p - 1, 0, p), make_simple(p - 1 - i, 0, p));
    // dominant vectors of weight i: kernel of (FE)^2 on the weight-i space
    std::vector<int> idx;
    for (int k = 0; k < amb.dim; ++k)
        if (amb.weights[k] == i) idx.push_back(k);
    CMat fe = amb.F * amb.E;
    CMat fe2 = fe * fe;
    CMat restr((int)idx.size(), (int)idx.size());
    // (FE)^2 preserves weight spaces, restrict to the weight-i block
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b) restr.at((int)a, (int)b) = fe2.at(idx[a], idx[b]);
    for (const CVec& ker : restr.nullspace()) {
        CVec v(amb.dim, CycScalar::zero());
        for (size_t a = 0; a < idx.size(); ++a) v[idx[a]] = ker[a];
        auto [sub, incl] = submodule_generated(amb, {v});
        if (sub.dim == 2 * p) {
            WeightModule res = shift_module(sub, ell - 1);
            std::ostringstream os;
            os << "P(" << i << "," << ell << ")";
            res.label = os.str();
            return res;
        }
    }
    throw std::runtime_error("make_projective: no dominant vector generates a 2p-dim submodule");
}

}  // namespace bpcat
