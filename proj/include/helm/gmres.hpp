#pragma once

#include <functional>
#include <vector>

#include "helm/common.hpp"
#include "helm/csr.hpp"
#include "helm/dense.hpp"

namespace helm::linalg {

struct IterStats {
    std::size_t iterations = 0;
    double relative_residual = 0.0;
    std::size_t restarts = 0;
    bool converged = false;
    // relative residual after each inner iteration
    std::vector<double> history;
};

using Operator = std::function<void(const cplx*, cplx*)>;

struct GmresOptions {
    std::size_t restart = 50;
    double tol = 1e-10;
    std::size_t max_iters = 1000;
};

// Restarted GMRES with modified Gram-Schmidt and one reorthogonalization
// pass. The preconditioner is applied on the right, so the reported residual
// is the true residual of A x = b. Arnoldi breakdown counts as convergence;
// a NaN in the basis aborts with an exception.
std::pair<std::vector<cplx>, IterStats> gmres(const Operator& apply, const std::vector<cplx>& b,
                                              const GmresOptions& opt = {},
                                              const Operator& precond = nullptr);

// Block-Jacobi preconditioner over contiguous index blocks, each block dense-
// factorized.
class BlockJacobi {
  public:
    BlockJacobi(const CsrMatrix& a, std::size_t block_size);
    void apply(const cplx* x, cplx* y) const;
    Operator as_operator() const;

  private:
    struct Block {
        std::size_t lo, hi;
        DenseLu lu;
    };
    std::vector<Block> blocks_;
    std::size_t n_ = 0;
};

}  // namespace helm::linalg
