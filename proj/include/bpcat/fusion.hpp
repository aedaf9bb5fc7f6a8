#pragma once

#include "bpcat/deligne.hpp"
#include "bpcat/hom.hpp"

namespace bpcat {

struct decomposition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Certified decomposition of a module into catalogue indecomposables:
/// `cert` is an invertible intertwiner from M onto the direct sum of the
/// realized blocks, in `order`.
struct FusionDecomp {
    std::vector<CatLabel> order;                    // one entry per block
    std::vector<std::pair<CatLabel, int>> parts;    // aggregated multiplicities
    CMat cert;                                      // M -> dsum
    WeightModule dsum;
};

FusionDecomp decompose(const WeightModule& M, int p);

/// Tensor on Rep^0(A_p) labels: tensor the underlying Deligne objects,
/// decompose, induce every summand and canonicalize.
std::vector<std::pair<ExtLabel, int>> fuse_ext(const ExtLabel& A, const ExtLabel& B, int p);

/// Braiding data per summand of A (x) B.
struct SummandScalar {
    CatLabel label;
    int mult = 1;
    CycScalar scalar;         // highest-weight-normalized braiding scalar (incl. Fock)
    CycScalar block_scalar;   // scalar part of the certificate-conjugated block
    CycScalar monodromy_eig;  // canonical double-braiding eigenvalue (incl. Fock)
    bool nilpotent = false;
};

std::vector<SummandScalar> braiding_scalars(const ExtLabel& A, const ExtLabel& B, int p);

}  // namespace bpcat
