#pragma once

#include "bpcat/weight_module.hpp"

namespace bpcat {

/// Braided ribbon data for the weight-module category.
///
/// R acts on M (x) N as q^{H(x)H/2} sum_{n<p} {1}^{2n}/{n}! q^{n(n-1)/2} E^n (x) F^n,
/// the braiding is flip after R, the twist is the inverse of
/// K^{p-1} sum_n {1}^{2n}/{n}! q^{n(n-1)/2} S(F^n) q^{-H^2/2} E^n,
/// and quantum traces close diagrams with the pivot K^{1-p}.

CMat r_matrix(const WeightModule& M, const WeightModule& N);

/// c_{M,N}: M (x) N -> N (x) M (dim NM x dim MN)
CMat braiding(const WeightModule& M, const WeightModule& N);

/// c_{N,M} . c_{M,N}, an endomorphism of M (x) N
CMat monodromy(const WeightModule& M, const WeightModule& N);

CMat twist(const WeightModule& M);

/// tr(K^{1-p} f)
CycScalar qtrace(const WeightModule& M, const CMat& f);
CycScalar qdim(const WeightModule& M);

/// Partial quantum trace of the monodromy over the first factor, closed with
/// the right-duality pivot K^{p-1} of that factor.  On simple W this acts as
/// Psi_{lambda+1-p}(chi(V)) times the identity.
CMat open_hopf(const WeightModule& V, const WeightModule& W);

/// Scalar of open_hopf on a simple W (throws if the matrix is not scalar).
CycScalar open_hopf_scalar(const WeightModule& V, const WeightModule& W);

/// Unit column S_{1,W} of the Hopf S-matrix: the quantum dimension when it
/// is nonzero; on a typical column V_alpha (where qdim vanishes) the
/// renormalized value (-1)^{p-1} p {alpha}/{p alpha}.
CycScalar unit_hopf_column(const WeightModule& W);

/// Hopf link S_{V,W} = open_hopf scalar times the unit column.  On columns
/// of nonzero quantum dimension this is exactly qtrace_W(open_hopf(V,W)).
CycScalar hopf_link(const WeightModule& V, const WeightModule& W);

/// Trace of the R-matrix restricted to the weight-lambda subspace of
/// M (x) N (only the q^{H(x)H/2} term is diagonal).
CycScalar r_weight_trace(const WeightModule& M, const WeightModule& N, const Rat& lambda);

}  // namespace bpcat
