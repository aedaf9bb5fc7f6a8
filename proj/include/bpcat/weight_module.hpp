#pragma once

#include <string>

#include "bpcat/matrix.hpp"
#include "bpcat/qscalar.hpp"

namespace bpcat {

/// Finite-dimensional weight module: H acts by the stored weights, K = q^H,
/// and E, F are explicit matrices in the weight basis.
struct WeightModule {
    int p = 2;
    int dim = 0;
    std::vector<Rat> weights;  // H-eigenvalue of each basis vector
    CMat E, F;
    std::string label;

    /// diag(q^{m * w_i})
    CMat kdiag(const Rat& m) const;

    /// Verify the defining relations exactly (throws std::logic_error):
    /// E/F shift weights by +/-2, [E,F] = (K - K^{-1}) / (q - q^{-1}),
    /// E^p = F^p = 0.
    void check() const;

    Rat highest_weight() const;
};

bool is_typical_alpha(const Rat& alpha, int p);

WeightModule make_unit(int p);
/// S_n tensored with C^H_{lp}
WeightModule make_simple(int n, long ell, int p);
/// V_alpha (dim p, highest weight alpha + p - 1)
WeightModule make_typical(const Rat& alpha, int p);
/// One-dimensional C^H_{lp}
WeightModule make_one_dim(long ell, int p);
/// P_i tensored so its highest weight is (ell+1)p - i - 2, dim 2p.
/// Built as the submodule of S_{p-1} (x) S_{p-1-i} generated by the first
/// dominant weight-i vector ((FE)^2 v = 0) whose closure has dimension 2p.
WeightModule make_projective(int i, long ell, int p);

WeightModule tensor(const WeightModule& M, const WeightModule& N);
WeightModule dual(const WeightModule& M);
/// M (x) C^H_{kp}: weights shift by kp and E picks up the sign q^{kp}.
WeightModule shift_module(const WeightModule& M, long k);
WeightModule module_direct_sum(const std::vector<WeightModule>& parts);

/// Weight multiset as a sorted list (the character on the q^H level).
std::vector<Rat> weight_multiset(const WeightModule& M);

}  // namespace bpcat
