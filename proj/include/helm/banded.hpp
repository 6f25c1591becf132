#pragma once

#include <vector>

#include "helm/common.hpp"

namespace helm::linalg {

// Complex-symmetric banded LDL^T without pivoting (transpose-symmetric, not
// Hermitian). This is the default factorization for the PML Helmholtz
// systems, which are complex-symmetric in the multiplied formulation; a
// breakdown (small pivot) throws and callers fall back to the pivoted LU.
class BandedLdlt {
  public:
    // a(r, j) = A(j + r, j) for r in [0, kl]; column-major, stride kl+1.
    BandedLdlt(std::size_t n, std::size_t kl, std::vector<cplx> lower_band);

    void solve_inplace(cplx* b) const;
    std::vector<cplx> solve(std::vector<cplx> b) const;
    std::size_t dim() const { return n_; }
    std::size_t bandwidth() const { return kl_; }

  private:
    std::size_t n_, kl_;
    std::vector<cplx> a_;
};

// Banded LU with partial pivoting (LAPACK gbtrf-style storage with kl fill
// rows). Works for any banded system; roughly twice the memory and flops of
// the LDL^T path.
class BandedLu {
  public:
    // ab(kl + ku + i - j, j) = A(i, j); leading dimension 2*kl + ku + 1.
    BandedLu(std::size_t n, std::size_t kl, std::size_t ku, std::vector<cplx> ab);

    void solve_inplace(cplx* b) const;
    std::vector<cplx> solve(std::vector<cplx> b) const;
    std::size_t dim() const { return n_; }

  private:
    std::size_t n_, kl_, ku_, ldab_;
    std::vector<cplx> ab_;
    std::vector<int> piv_;
};

}  // namespace helm::linalg
