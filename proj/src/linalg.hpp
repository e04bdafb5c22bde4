#pragma once

#include "numerics.hpp"

namespace freud {

// Dense square matrix, row major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(size_t n) : n_(n), a_(n * n, Real(0)) {}

    size_t size() const { return n_; }
    Real& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Real& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }

private:
    size_t n_ = 0;
    std::vector<Real> a_;
};

// Lower factor L with A = L L^T; throws NumericError on a nonpositive pivot.
Matrix cholesky(const Matrix& a);

// Solves L y = b for lower triangular L.
std::vector<Real> forward_substitute(const Matrix& l, const std::vector<Real>& b);

// Eigenvalues of a symmetric matrix (Householder reduction, implicit QL).
std::vector<Real> symmetric_eigenvalues(const Matrix& a);

// log|det A| via LU with partial pivoting; sign returned separately.
struct LogDet {
    Real log_abs;
    int sign = 1;
};
LogDet lu_log_det(Matrix a);

}  // namespace freud
