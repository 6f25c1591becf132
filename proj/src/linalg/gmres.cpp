#include "helm/gmres.hpp"

#include <cmath>

#include "helm/kernels.hpp"

namespace helm::linalg {

namespace {

void check_finite(const std::vector<cplx>& v) {
    for (const cplx& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::runtime_error("gmres: NaN/Inf detected in Krylov basis");
}

}  // namespace

std::pair<std::vector<cplx>, IterStats> gmres(const Operator& apply, const std::vector<cplx>& b,
                                              const GmresOptions& opt, const Operator& precond) {
    const std::size_t n = b.size();
    IterStats stats;
    std::vector<cplx> x(n, cplx{});
    const double bnorm = kernels::znrm2(n, b.data());
    if (bnorm == 0.0) {
        stats.converged = true;
        return {x, stats};
    }
    const std::size_t m = std::max<std::size_t>(1, opt.restart);

    std::vector<std::vector<cplx>> v;   // Krylov basis
    std::vector<cplx> h((m + 1) * m);   // Hessenberg, column-major h[i + j*(m+1)]
    std::vector<cplx> cs(m), g(m + 1);
    std::vector<double> sn(m);
    std::vector<cplx> w(n), z(n), r(n);

    auto apply_op = [&](const std::vector<cplx>& in, std::vector<cplx>& out) {
        if (precond) {
            precond(in.data(), z.data());
            apply(z.data(), out.data());
        } else {
            apply(in.data(), out.data());
        }
    };

    double relres = 1.0;
    std::vector<cplx> best_x = x;
    double best_res = 1.0;

    while (stats.iterations < opt.max_iters) {
        // r = b - A x
        apply(x.data(), r.data());
        for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
        double beta = kernels::znrm2(n, r.data());
        relres = beta / bnorm;
        if (relres <= opt.tol) {
            stats.converged = true;
            best_x = x;
            best_res = relres;
            break;
        }
        v.assign(1, r);
        kernels::zscal(n, 1.0 / beta, v[0].data());
        std::fill(g.begin(), g.end(), cplx{});
        g[0] = beta;

        std::size_t j = 0;
        bool breakdown = false;
        for (; j < m && stats.iterations < opt.max_iters; ++j) {
            apply_op(v[j], w);
            check_finite(w);
            // MGS with one reorthogonalization pass
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t i = 0; i <= j; ++i) {
                    cplx hij = kernels::zdotc(n, v[i].data(), w.data());
                    if (pass == 0)
                        h[i + j * (m + 1)] = hij;
                    else
                        h[i + j * (m + 1)] += hij;
                    kernels::zaxpy(n, -hij, v[i].data(), w.data());
                }
            }
            double hlast = kernels::znrm2(n, w.data());
            h[j + 1 + j * (m + 1)] = hlast;
            // Apply accumulated Givens rotations to the new column.
            for (std::size_t i = 0; i < j; ++i) {
                cplx t1 = h[i + j * (m + 1)], t2 = h[i + 1 + j * (m + 1)];
                h[i + j * (m + 1)] = std::conj(cs[i]) * t1 + sn[i] * t2;
                h[i + 1 + j * (m + 1)] = -sn[i] * t1 + cs[i] * t2;
            }
            // New rotation eliminating h(j+1, j).
            cplx a = h[j + j * (m + 1)];
            double bb = hlast;
            double rr = std::sqrt(std::norm(a) + bb * bb);
            if (rr == 0.0) {
                cs[j] = 1.0;
                sn[j] = 0.0;
            } else {
                cs[j] = a / rr;
                sn[j] = bb / rr;
            }
            h[j + j * (m + 1)] = std::conj(cs[j]) * a + sn[j] * bb;
            h[j + 1 + j * (m + 1)] = 0.0;
            g[j + 1] = -sn[j] * g[j];
            g[j] = std::conj(cs[j]) * g[j];
            ++stats.iterations;
            relres = std::abs(g[j + 1]) / bnorm;
            stats.history.push_back(relres);
            if (hlast <= 1e-14 * bnorm) {
                breakdown = true;  // lucky breakdown: exact solution in span
                ++j;
                break;
            }
            if (relres <= opt.tol) {
                ++j;
                break;
            }
            v.push_back(w);
            kernels::zscal(n, 1.0 / hlast, v.back().data());
        }

        // Solve the j x j triangular system and update x.
        std::vector<cplx> y(j);
        for (std::size_t ii = j; ii-- > 0;) {
            cplx s = g[ii];
            for (std::size_t jj = ii + 1; jj < j; ++jj) s -= h[ii + jj * (m + 1)] * y[jj];
            y[ii] = s / h[ii + ii * (m + 1)];
        }
        if (precond) {
            std::vector<cplx> u(n, cplx{});
            for (std::size_t jj = 0; jj < j; ++jj)
                kernels::zaxpy(n, y[jj], v[jj].data(), u.data());
            precond(u.data(), z.data());
            for (std::size_t i = 0; i < n; ++i) x[i] += z[i];
        } else {
            for (std::size_t jj = 0; jj < j; ++jj) kernels::zaxpy(n, y[jj], v[jj].data(), x.data());
        }

        if (relres < best_res) {
            best_res = relres;
            best_x = x;
        }
        if (relres <= opt.tol || breakdown) {
            stats.converged = true;
            break;
        }
        ++stats.restarts;
    }

    stats.relative_residual = best_res;
    if (!stats.converged) {
        // return the best iterate seen
        x = best_x;
    }
    return {x, stats};
}

BlockJacobi::BlockJacobi(const CsrMatrix& a, std::size_t block_size) : n_(a.rows()) {
    if (block_size == 0) throw std::invalid_argument("BlockJacobi: zero block size");
    for (std::size_t lo = 0; lo < n_; lo += block_size) {
        std::size_t hi = std::min(n_, lo + block_size);
        DenseMatrix blk(hi - lo, hi - lo);
        for (std::size_t i = lo; i < hi; ++i)
            for (std::int64_t q = a.row_ptr()[i]; q < a.row_ptr()[i + 1]; ++q) {
                std::size_t j = a.col()[q];
                if (j >= lo && j < hi) blk(i - lo, j - lo) = a.val()[q];
            }
        for (std::size_t d = 0; d < hi - lo; ++d)
            if (blk(d, d) == cplx{}) blk(d, d) = 1.0;
        blocks_.push_back({lo, hi, DenseLu(std::move(blk))});
    }
}

void BlockJacobi::apply(const cplx* x, cplx* y) const {
    for (const Block& b : blocks_) {
        std::vector<cplx> t(x + b.lo, x + b.hi);
        b.lu.solve_inplace(t.data());
        std::copy(t.begin(), t.end(), y + b.lo);
    }
}

Operator BlockJacobi::as_operator() const {
    return [this](const cplx* x, cplx* y) { apply(x, y); };
}

}  // namespace helm::linalg
