#pragma once

#include "bpcat/deligne.hpp"
#include "bpcat/gring.hpp"

namespace bpcat {

struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Typical index (nu, ell), nu = 2 alpha / p kept in (-1, 1] (it is defined
/// mod 2 by the simple-current shift), ell = gamma lambda_p + alpha/2.
struct TypicalIndex {
    Rat nu, ell;
};

TypicalIndex typical_index(const ExtLabel& ev, int p);

/// Phase part of the character S-kernel on typicals,
/// e^{pi i (4 l l' / p - l nu' - l' nu)}; the tau-dependent prefactor is
/// dropped (it cancels in every normalized comparison).
CycScalar s_chi_typical(const TypicalIndex& a, const TypicalIndex& b, int p);

/// Unit row of the S-kernel, (x - x^{-1})/(x^p - x^{-p}) with x = e^{pi i nu'/2};
/// poles at nu' in (2/p) Z.
CycScalar s_chi_unit_typical(const Rat& nup, int p);

/// conj(S^chi ratio) vs normalized Hopf ratio on a grid of EV pairs built
/// from denominators <= den_bound; returns the report (exact equalities).
Report check_typical_comparison(int p, long den_bound = 4, int min_pairs = 50);

/// Hopf-link S-matrix on the duality-closed atypical basis:
/// closed form q^{-n's'} [ns]; computed from the ribbon data and asserted
/// against the closed form.
CycScalar s_hopf_atypical(const SS& a, const SS& b, int p);
CycScalar s_hopf_atypical_closed(const SS& a, const SS& b, int p);

/// Normalized character matrix q^{n's'} [ns]/[n] on Lambda_p.
CycScalar s_chi_atypical_normalized(const SS& a, const SS& b, int p);

/// conj(normalized S^chi) == normalized S^hopf over Lambda_p x Lambda_p.
Report check_atypical_comparison(int p);

/// Verlinde formula on Lambda_p (odd p): N from the exact S-matrix inverse
/// equals the Grothendieck structure constants, all entries >= 0.
Report verlinde_check(int p);

/// Even p: the S-matrix over Lambda u Lambda~ matches the four sign
/// quadrants, and Verlinde against the B_p^0bar ring.
Report check_even_p(int p);

/// Exact delta-collapse of the S-kernel integral:
/// int_{-1}^{1} (1/2) e^{pi i nu'(m-l)} d nu' = delta_{m,l} on integer and
/// half-integer grids.
Report orthogonality_check(long range = 6);

}  // namespace bpcat
