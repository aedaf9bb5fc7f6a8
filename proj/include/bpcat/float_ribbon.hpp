#pragma once

#include <complex>
#include <vector>

#include "bpcat/weight_module.hpp"

namespace bpcat {

/// Floating mirror of the ribbon computations on complex doubles.  The exact
/// backend is authoritative; this one exists for cross-checks.
namespace fb {

using Cx = std::complex<double>;
using FMat = std::vector<std::vector<Cx>>;

struct FModule {
    int p;
    int dim;
    std::vector<double> weights;
    FMat E, F;
};

FModule to_float(const WeightModule& M);
Cx qdim_f(const FModule& M);
Cx hopf_link_f(const FModule& V, const FModule& W);
Cx twist_scalar_f(const FModule& M);  // assumes the twist is scalar

}  // namespace fb

}  // namespace bpcat
