#include "bpcat/deligne.hpp"

#include <sstream>
#include <tuple>

namespace bpcat {

std::string CatLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case V: os << "V(" << rat_str(alpha) << ")"; break;
        case S: os << "S(" << i << "," << ell << ")"; break;
        case P: os << "P(" << i << "," << ell << ")"; break;
    }
    return os.str();
}

bool CatLabel::operator==(const CatLabel& o) const {
    return kind == o.kind && alpha == o.alpha && i == o.i && ell == o.ell;
}

bool CatLabel::operator<(const CatLabel& o) const {
    return std::tie(kind, i, ell, alpha) < std::tie(o.kind, o.i, o.ell, o.alpha);
}

WeightModule realize(const CatLabel& L, int p) {
    switch (L.kind) {
        case CatLabel::V: return make_typical(L.alpha, p);
        case CatLabel::S: return make_simple(L.i, L.ell, p);
        case CatLabel::P: return make_projective(L.i, L.ell + 1, p);
    }
    throw std::logic_error("realize: bad kind");
}

LiftResult lifts(const DObject& D, int p) {
    WeightModule X = realize(D.wm, p);
    WeightModule cp = make_one_dim(1, p);  // C^H_p
    CMat m = monodromy(cp, X);
    // the monodromy with a one-dimensional object must be an exact scalar
    CycScalar s = m.at(0, 0);
    for (int i = 0; i < X.dim; ++i)
        for (int j = 0; j < X.dim; ++j) {
            const CycScalar& v = m.at(i, j);
            if (i == j ? !(v == s) : !v.is_zero())
                throw std::logic_error("lifts: non-scalar monodromy");
        }
    // Fock part: monodromy of F_{lambda_p} with F_{gamma} is e^{2 pi i lambda gamma}
    // = e^{pi i c}.  The weight-module part is q^{p w} = e^{pi i w}.
    RootExp fock(D.c);
    RootExp wm_part(X.weights[0]);  // scalar, so any weight representative works
    CycScalar total = CycScalar::from_rootexp(fock) * s;
    RootExp combined = fock * wm_part;
    if (!(CycScalar::from_rootexp(combined) == total))
        throw std::logic_error("lifts: scalar mismatch between matrix and phase");
    return {combined.is_one(), combined};
}

bool lifts_parity(const DObject& D, int p) {
    Rat t;
    if (D.wm.kind == CatLabel::V)
        t = D.wm.alpha + (p - 1) + D.c;
    else
        t = Rat(D.wm.i) + Rat(D.wm.ell) * p + D.c;
    return is_integer(t / 2);
}

std::string ExtLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case EV: os << "EV(c=" << rat_str(c) << ",a=" << rat_str(alpha) << ")"; break;
        case QV: os << "QV(c=" << rat_str(c) << ",a=" << rat_str(alpha) << ")"; break;
        case ES: os << "ES(c=" << rat_str(c) << ",i=" << i << ",l=" << ell << ")"; break;
        case QP: os << "QP(c=" << rat_str(c) << ",i=" << i << ",l=" << ell << ")"; break;
    }
    return os.str();
}

bool ExtLabel::operator==(const ExtLabel& o) const {
    return kind == o.kind && c == o.c && alpha == o.alpha && i == o.i && ell == o.ell;
}

bool ExtLabel::operator<(const ExtLabel& o) const {
    return std::tie(kind, i, ell, c, alpha) < std::tie(o.kind, o.i, o.ell, o.c, o.alpha);
}

ExtLabel induce(const DObject& D, int p) {
    if (!lifts_parity(D, p))
        throw lift_error("induce: " + D.wm.str() + " with c=" + rat_str(D.c) +
                         " does not lift to Rep0(A_p)");
    ExtLabel L;
    L.c = D.c;
    switch (D.wm.kind) {
        case CatLabel::V:
            L.kind = is_typical_alpha(D.wm.alpha, p) ? ExtLabel::EV : ExtLabel::QV;
            L.alpha = D.wm.alpha;
            break;
        case CatLabel::S:
            L.kind = ExtLabel::ES;
            L.i = D.wm.i;
            L.ell = D.wm.ell;
            break;
        case CatLabel::P:
            L.kind = ExtLabel::QP;
            L.i = D.wm.i;
            L.ell = D.wm.ell;
            break;
    }
    return canonicalize(L, p);
}

namespace {
// ceil of a rational
mpz_class rat_ceil(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}
}  // namespace

ExtLabel canonicalize(const ExtLabel& L, int p) {
    ExtLabel out = L;
    if (L.kind == ExtLabel::EV || L.kind == ExtLabel::QV) {
        // alpha + kp in (0, p]  <=>  k = -ceil(alpha/p) + 1
        Rat k = Rat(rat_ceil(L.alpha / p)) - 1;
        out.alpha = L.alpha - k * p;
        out.c = L.c + k * p;
    } else {
        // (c, ell) ~ (c - kp, ell + k); set ell = 0
        out.c = L.c + Rat(L.ell) * p;
        out.ell = 0;
    }
    return out;
}

ExtLabel canonicalize_even(const ExtLabel& L, int p) {
    ExtLabel out = L;
    if (L.kind == ExtLabel::EV || L.kind == ExtLabel::QV) {
        // alpha + 2kp in (0, 2p]
        Rat k = Rat(rat_ceil(L.alpha / (2 * p))) - 1;
        out.alpha = L.alpha - k * (2 * p);
        out.c = L.c + k * (2 * p);
    } else {
        long k = (L.ell % 2 + 2) % 2;  // target ell in {0, 1}
        long shift = L.ell - k;
        out.c = L.c + Rat(shift) * p;
        out.ell = k;
    }
    return out;
}

DObject underlying(const ExtLabel& L) {
    DObject d;
    d.c = L.c;
    switch (L.kind) {
        case ExtLabel::EV:
        case ExtLabel::QV:
            d.wm = {CatLabel::V, L.alpha, 0, 0};
            break;
        case ExtLabel::ES:
            d.wm = {CatLabel::S, Rat(0), L.i, L.ell};
            break;
        case ExtLabel::QP:
            d.wm = {CatLabel::P, Rat(0), L.i, L.ell};
            break;
    }
    return d;
}

std::pair<Rat, Rat> nu_ell(const ExtLabel& L, int p) {
    if (L.kind != ExtLabel::EV && L.kind != ExtLabel::QV)
        throw std::invalid_argument("nu_ell: needs an EV label");
    return {Rat(2) * L.alpha / p, (L.c + L.alpha) / 2};
}

std::pair<long, long> atypical_ss(const ExtLabel& L, int p) {
    if (L.kind != ExtLabel::ES) throw std::invalid_argument("atypical_ss: needs an ES label");
    Rat sp = -L.c - Rat(L.ell) * p;
    return {L.i + 1, to_long(sp)};
}

Report algebra_object_check(int p, int K) {
    Report rep;
    rep.check = "algebra-object";
    for (long k = -K; k <= K; ++k)
        for (long m = -K; m <= K; ++m) {
            // braiding of F_{k lambda} (x) C^H_{kp} with F_{m lambda} (x) C^H_{mp}
            FockLine a{Rat(-k * p)}, b{Rat(-m * p)};  // c = 2 lambda (k lambda) = -kp
            RootExp fock = a.braid_with(b, p);
            CycScalar wm = braiding(make_one_dim(k, p), make_one_dim(m, p)).at(0, 0);
            CycScalar total = CycScalar::from_rootexp(fock) * wm;
            rep.require(total == CycScalar::one(),
                        "braiding scalar != 1 at k=" + std::to_string(k) +
                            ", m=" + std::to_string(m));
        }
    for (long k = 1; k <= K; ++k) {
        FockLine a{Rat(-k * p)};
        RootExp fock_tw = a.twist(p);
        // twist on C^H_{kp} from the ribbon formula (1x1 matrix)
        WeightModule c = make_one_dim(k, p);
        CycScalar tw = twist(c).at(0, 0);
        CycScalar total = CycScalar::from_rootexp(fock_tw) * tw;
        bool trivial = total == CycScalar::one();
        if (p % 2 == 1) {
            rep.require(trivial, "odd-p twist != 1 at k=" + std::to_string(k));
        } else {
            bool expected = (k % 2 == 0);
            rep.require(trivial == expected,
                        "even-p twist parity unexpected at k=" + std::to_string(k));
            if (!trivial)
                rep.notes.push_back("twist = -1 at k=" + std::to_string(k) +
                                    " (even p: super-algebra grading)");
        }
    }
    return rep;
}

}  // namespace bpcat
