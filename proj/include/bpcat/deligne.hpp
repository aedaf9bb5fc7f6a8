#pragma once

#include "bpcat/report.hpp"
#include "bpcat/ribbon.hpp"

namespace bpcat {

/// One-dimensional object of the Heisenberg factor, stored by the rational
/// charge c with gamma = c / (2 lambda_p), lambda_p^2 = -p/2.  All of its
/// category data is then a root of unity:
///   braiding(c1,c2) = e^{pi i gamma1 gamma2} = e^{-pi i c1 c2 / (2p)}
///   twist(c)        = e^{pi i gamma^2}       = e^{-pi i c^2 / (4p)}
///   hopf(c1,c2)     = e^{2 pi i gamma1 gamma2}
struct FockLine {
    Rat c;
    RootExp braid_with(const FockLine& o, int p) const {
        return RootExp(-c * o.c / (2 * p));
    }
    RootExp twist(int p) const { return RootExp(-c * c / (4 * p)); }
    RootExp hopf_with(const FockLine& o, int p) const { return RootExp(-c * o.c / p); }
};

/// Catalogue weight module underlying a Deligne factor.
struct CatLabel {
    enum Kind { V, S, P } kind;
    Rat alpha;  // V only
    int i = 0;  // S, P
    long ell = 0;

    std::string str() const;
    bool operator==(const CatLabel& o) const;
    bool operator<(const CatLabel& o) const;
};

/// The module a catalogue label denotes.  For P the label (i, ell) is the
/// member of the short-exact-sequence family
///   0 -> V_{p-1-i+ell p} -> P_i (x) C^H_{ell p} -> V_{1+i-p+ell p} -> 0,
/// i.e. highest weight (ell+2)p - i - 2.
WeightModule realize(const CatLabel& L, int p);

struct DObject {
    Rat c;  // Fock charge
    CatLabel wm;
};

struct LiftResult {
    bool lifts;
    RootExp scalar;  // monodromy scalar with the simple current
};

struct lift_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monodromy of F_{lambda_p} (x) C^H_p with D, computed from the R-matrix.
LiftResult lifts(const DObject& D, int p);
/// The parity criterion: alpha+p-1+c in 2Z (V), i+ell p+c in 2Z (S, P).
bool lifts_parity(const DObject& D, int p);

/// Label of an induced object of Rep^0(A_p).
struct ExtLabel {
    enum Kind { EV, ES, QV, QP } kind;
    Rat c;
    Rat alpha;  // EV, QV
    int i = 0;  // ES, QP
    long ell = 0;

    std::string str() const;
    bool operator==(const ExtLabel& o) const;
    bool operator<(const ExtLabel& o) const;
};

ExtLabel induce(const DObject& D, int p);
/// Shift to the fundamental representative: ES/QP with ell = 0, EV/QV with
/// alpha in (0, p].  Idempotent.
ExtLabel canonicalize(const ExtLabel& L, int p);
/// Even-p variant identifying labels only under even simple-current shifts:
/// ES/QP keep ell in {0,1}, EV/QV keep alpha in (0, 2p].
ExtLabel canonicalize_even(const ExtLabel& L, int p);

DObject underlying(const ExtLabel& L);

/// (nu, ell) = (2 alpha / p, (c + alpha)/2) for an EV label.
std::pair<Rat, Rat> nu_ell(const ExtLabel& L, int p);
/// (s, s') = (i + 1, -c - p ell) for an ES label.
std::pair<long, long> atypical_ss(const ExtLabel& L, int p);

/// Algebra-object sanity: the simple-current line braids trivially with
/// itself, and its twist is trivial for odd p (for even p the twist is
/// (-1)^k, recorded as a note).
Report algebra_object_check(int p, int K = 4);

}  // namespace bpcat
