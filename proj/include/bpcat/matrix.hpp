#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bpcat/cyclotomic.hpp"

namespace bpcat {

using CVec = std::vector<CycScalar>;

/// Dense matrix over a cyclotomic field.  Entries may sit at different
/// conductors; arithmetic promotes as needed.  Elimination is plain Gaussian
/// elimination with exact division (the coefficients form a field, so this
/// is exact), pivoting on the first nonzero entry for determinism.
class CMat {
  public:
    CMat() : r_(0), c_(0) {}
    CMat(int rows, int cols) : r_(rows), c_(cols), a_((size_t)rows * cols) {}

    static CMat identity(int n);
    static CMat zero(int rows, int cols) { return CMat(rows, cols); }

    int rows() const { return r_; }
    int cols() const { return c_; }

    CycScalar& at(int i, int j) { return a_[(size_t)i * c_ + j]; }
    const CycScalar& at(int i, int j) const { return a_[(size_t)i * c_ + j]; }

    CMat operator*(const CMat& o) const;
    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat scaled(const CycScalar& s) const;
    CMat transpose() const;
    CMat kron(const CMat& o) const;
    CVec apply(const CVec& v) const;

    bool is_zero() const;
    bool operator==(const CMat& o) const;

    CycScalar trace() const;

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref();
    int rank() const;
    /// Basis of the right nullspace (deterministic, from rref free columns).
    std::vector<CVec> nullspace() const;
    std::optional<CMat> inverse() const;
    CycScalar determinant() const;

    /// True iff m^k = 0 for some k <= bound.
    bool is_nilpotent(int bound) const;

    /// Solve A X = B column by column (A full column rank, solvable).
    static CMat solve_columns(const CMat& A, const CMat& B);

  private:
    int r_, c_;
    std::vector<CycScalar> a_;
};

CMat direct_sum(const std::vector<CMat>& blocks);

}  // namespace bpcat
