#pragma once

#include <optional>
#include <utility>

#include "bpcat/weight_module.hpp"

namespace bpcat {

/// Module map between weight modules, stored as a (dim dst) x (dim src)
/// matrix commuting exactly with the E, F, H actions.
struct Intertwiner {
    WeightModule src, dst;
    CMat m;
    bool check() const;
};

/// Basis of Hom(M, N) as matrices f with f E_M = E_N f, f F_M = F_N f and
/// weight compatibility.  Solved weight-block by weight-block.
std::vector<CMat> hom_space(const WeightModule& M, const WeightModule& N);

int hom_dim(const WeightModule& M, const WeightModule& N);

/// Closure of the given (weight-homogeneous) vectors under E and F.
/// Returns the submodule and the inclusion matrix (dim M x dim S).
std::pair<WeightModule, CMat> submodule_generated(const WeightModule& M,
                                                  const std::vector<CVec>& vectors);

/// Quotient of M by the image of the inclusion; returns (Q, projection).
std::pair<WeightModule, CMat> quotient(const WeightModule& M, const CMat& inclusion);

/// Invertible intertwiner M -> N if one exists.  Tries basis elements of
/// Hom(M,N), then integer combinations from a fixed sequence, then seeded
/// random rational combinations.
std::optional<CMat> is_isomorphic(const WeightModule& M, const WeightModule& N);

bool intertwines(const WeightModule& M, const WeightModule& N, const CMat& f);

}  // namespace bpcat
