#include "bpcat/matrix.hpp"

namespace bpcat {

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycScalar::one();
    return m;
}

CMat CMat::operator*(const CMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("CMat::mul: shape mismatch");
    CMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const CycScalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const CycScalar& y = o.at(k, j);
                if (y.is_zero()) continue;
                out.at(i, j) += x * y;
            }
        }
    return out;
}

CMat CMat::operator+(const CMat& o) const {
    CMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

CMat CMat::operator-(const CMat& o) const {
    CMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

CMat CMat::scaled(const CycScalar& s) const {
    CMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i)
        if (!a_[i].is_zero()) out.a_[i] = a_[i] * s;
    return out;
}

CMat CMat::transpose() const {
    CMat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

CMat CMat::kron(const CMat& o) const {
    CMat out(r_ * o.r_, c_ * o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const CycScalar& x = at(i, j);
            if (x.is_zero()) continue;
            for (int k = 0; k < o.r_; ++k)
                for (int l = 0; l < o.c_; ++l) {
                    const CycScalar& y = o.at(k, l);
                    if (y.is_zero()) continue;
                    out.at(i * o.r_ + k, j * o.c_ + l) = x * y;
                }
        }
    return out;
}

CVec CMat::apply(const CVec& v) const {
    CVec out(r_, CycScalar::zero());
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += at(i, j) * v[j];
        }
    return out;
}

bool CMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool CMat::operator==(const CMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

CycScalar CMat::trace() const {
    CycScalar t = CycScalar::zero();
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
}

std::vector<int> CMat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int pr = -1;
        for (int i = row; i < r_; ++i)
            if (!at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < c_; ++j) std::swap(at(pr, j), at(row, j));
        CycScalar inv = at(row, col).inverse();
        for (int j = col; j < c_; ++j)
            if (!at(row, j).is_zero()) at(row, j) = at(row, j) * inv;
        for (int i = 0; i < r_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            CycScalar f = at(i, col);
            for (int j = col; j < c_; ++j)
                if (!at(row, j).is_zero()) at(i, j) = at(i, j) - f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int CMat::rank() const {
    CMat m = *this;
    return (int)m.rref().size();
}

std::vector<CVec> CMat::nullspace() const {
    CMat m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<CVec> basis;
    for (int free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        CVec v(c_, CycScalar::zero());
        v[free] = CycScalar::one();
        for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m.at((int)pi, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<CMat> CMat::inverse() const {
    if (r_ != c_) return std::nullopt;
    CMat aug(r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = CycScalar::one();
    }
    std::vector<int> piv = aug.rref();
    if ((int)piv.size() < r_ || piv.back() >= c_) return std::nullopt;
    for (int k = 0; k < r_; ++k)
        if (piv[k] != k) return std::nullopt;
    CMat out(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(i, j) = aug.at(i, c_ + j);
    return out;
}

CycScalar CMat::determinant() const {
    if (r_ != c_) throw std::invalid_argument("determinant: not square");
    CMat m = *this;
    CycScalar det = CycScalar::one();
    for (int col = 0; col < c_; ++col) {
        int pr = -1;
        for (int i = col; i < r_; ++i)
            if (!m.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) return CycScalar::zero();
        if (pr != col) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(pr, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        CycScalar inv = m.at(col, col).inverse();
        for (int i = col + 1; i < r_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            CycScalar f = m.at(i, col) * inv;
            for (int j = col; j < c_; ++j)
                if (!m.at(col, j).is_zero()) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return det;
}

bool CMat::is_nilpotent(int bound) const {
    CMat pw = *this;
    for (int k = 1; k <= bound; ++k) {
        if (pw.is_zero()) return true;
        if (k < bound) pw = pw * *this;
    }
    return pw.is_zero();
}

CMat CMat::solve_columns(const CMat& A, const CMat& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("solve_columns: shape");
    CMat aug(A.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols(); ++j) aug.at(i, A.cols() + j) = B.at(i, j);
    }
    std::vector<int> piv = aug.rref();
    if ((int)piv.size() != A.cols()) throw std::logic_error("solve_columns: rank deficient");
    for (int k = 0; k < A.cols(); ++k)
        if (piv[k] != k) throw std::logic_error("solve_columns: inconsistent system");
    for (int i = A.cols(); i < A.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j)
            if (!aug.at(i, A.cols() + j).is_zero())
                throw std::logic_error("solve_columns: no solution");
    CMat X(A.cols(), B.cols());
    for (int i = 0; i < A.cols(); ++i)
        for (int j = 0; j < B.cols(); ++j) X.at(i, j) = aug.at(i, A.cols() + j);
    return X;
}

CMat direct_sum(const std::vector<CMat>& blocks) {
    int r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    CMat out(r, c);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

}  // namespace bpcat
