#pragma once

#include <cstdint>
#include <vector>

#include "helm/common.hpp"
#include "helm/dense.hpp"

namespace helm::linalg {

class CsrMatrix;

// Triplet accumulator; duplicate entries are summed on finalize.
class CooBuilder {
  public:
    CooBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    void add(std::size_t i, std::size_t j, cplx v) {
        entries_.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j), v});
    }
    CsrMatrix finalize() const;

  private:
    struct Entry {
        std::int32_t i, j;
        cplx v;
    };
    std::size_t rows_, cols_;
    std::vector<Entry> entries_;
    friend class CsrMatrix;
};

// Row-compressed complex sparse matrix. Column indices strictly increase
// within each row; explicit zeros are dropped on finalize.
class CsrMatrix {
  public:
    CsrMatrix() = default;
    CsrMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_ptr,
              std::vector<std::int32_t> col, std::vector<cplx> val);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return val_.size(); }
    const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::int32_t>& col() const { return col_; }
    const std::vector<cplx>& val() const { return val_; }

    void matvec(const cplx* x, cplx* y) const;
    std::vector<cplx> matvec(const std::vector<cplx>& x) const;
    DenseMatrix to_dense() const;
    cplx at(std::size_t i, std::size_t j) const;
    double row_norm(std::size_t i) const;
    // max |i - j| over stored entries
    std::size_t bandwidth() const;
    bool identical(const CsrMatrix& o) const;
    // A^T == A exactly (pattern and values)
    bool is_structurally_symmetric() const;

    // B = P A P^T with perm[new] = old.
    CsrMatrix permute_symmetric(const std::vector<std::int32_t>& perm) const;

    // Lower band a(r, j) = A(j+r, j), r in [0, kl]; throws if entries fall
    // outside the band.
    std::vector<cplx> lower_band(std::size_t kl) const;
    // gbtrf-style band with kl fill rows, ldab = 2*kl + ku + 1.
    std::vector<cplx> full_band(std::size_t kl, std::size_t ku) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> col_;
    std::vector<cplx> val_;
};

// Reverse Cuthill-McKee ordering of the symmetrized pattern; perm[new] = old.
std::vector<std::int32_t> rcm_ordering(const CsrMatrix& a);

}  // namespace helm::linalg
