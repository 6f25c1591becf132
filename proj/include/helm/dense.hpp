#pragma once

#include <vector>

#include "helm/common.hpp"

namespace helm::linalg {

// Row-major complex dense matrix.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    cplx* row(std::size_t i) { return a_.data() + i * cols_; }
    const cplx* row(std::size_t i) const { return a_.data() + i * cols_; }
    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    std::vector<cplx> matvec(const std::vector<cplx>& x) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

// LU with partial pivoting. Throws std::runtime_error on an exactly singular
// pivot (relative to the largest entry seen).
class DenseLu {
  public:
    explicit DenseLu(DenseMatrix a);

    std::vector<cplx> solve(std::vector<cplx> b) const;
    void solve_inplace(cplx* b) const;
    // max |U_ij| / max |A_ij|
    double pivot_growth() const { return growth_; }
    std::size_t dim() const { return lu_.rows(); }

  private:
    DenseMatrix lu_;
    std::vector<int> piv_;
    double growth_ = 1.0;
};

std::vector<cplx> lu_solve(const DenseMatrix& a, const std::vector<cplx>& b);

// Eigenvalues (ascending) of a Hermitian matrix via cyclic Jacobi.
std::vector<double> hermitian_eigenvalues(DenseMatrix a);

// Largest / smallest singular value (2-norm and inverse-norm reciprocal).
double spectral_norm(const DenseMatrix& a);
double min_singular_value(const DenseMatrix& a);

}  // namespace helm::linalg
