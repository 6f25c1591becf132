#include "helm/dense.hpp"

#include <algorithm>
#include <cmath>

#include "helm/kernels.hpp"

namespace helm::linalg {

std::vector<cplx> DenseMatrix::matvec(const std::vector<cplx>& x) const {
    std::vector<cplx> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = kernels::zdotu(cols_, row(i), x.data());
    return y;
}

DenseLu::DenseLu(DenseMatrix a) : lu_(std::move(a)) {
    const std::size_t n = lu_.rows();
    if (n != lu_.cols()) throw std::invalid_argument("DenseLu: matrix must be square");
    piv_.resize(n);
    double amax = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) amax = std::max(amax, std::abs(lu_(i, j)));
    double umax = amax;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        double best = std::abs(lu_(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            double v = std::abs(lu_(r, c));
            if (v > best) {
                best = v;
                p = r;
            }
        }
        piv_[c] = static_cast<int>(p);
        if (best <= amax * 1e-300 || best == 0.0)
            throw std::runtime_error("DenseLu: singular pivot at column " + std::to_string(c));
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(c, j), lu_(p, j));
        const cplx inv = 1.0 / lu_(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            cplx l = lu_(r, c) * inv;
            lu_(r, c) = l;
            if (l != cplx{})
                kernels::zaxpy(n - c - 1, -l, lu_.row(c) + c + 1, lu_.row(r) + c + 1);
        }
        for (std::size_t j = c; j < n; ++j) umax = std::max(umax, std::abs(lu_(c, j)));
    }
    growth_ = amax > 0 ? umax / amax : 1.0;
}

void DenseLu::solve_inplace(cplx* b) const {
    const std::size_t n = lu_.rows();
    for (std::size_t i = 0; i < n; ++i) std::swap(b[i], b[piv_[i]]);
    for (std::size_t i = 1; i < n; ++i) b[i] -= kernels::zdotu(i, lu_.row(i), b);
    for (std::size_t ii = n; ii-- > 0;) {
        cplx s = b[ii] - kernels::zdotu(n - ii - 1, lu_.row(ii) + ii + 1, b + ii + 1);
        b[ii] = s / lu_(ii, ii);
    }
}

std::vector<cplx> DenseLu::solve(std::vector<cplx> b) const {
    if (b.size() != lu_.rows()) throw std::invalid_argument("DenseLu::solve: size mismatch");
    solve_inplace(b.data());
    return b;
}

std::vector<cplx> lu_solve(const DenseMatrix& a, const std::vector<cplx>& b) {
    return DenseLu(a).solve(b);
}

std::vector<double> hermitian_eigenvalues(DenseMatrix a) {
    const std::size_t n = a.rows();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale += std::norm(a(i, j));
    if (scale == 0.0) return std::vector<double>(n, 0.0);
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += std::norm(a(i, j));
        if (off < 1e-30 * scale) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cplx apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double app = a(p, p).real(), aqq = a(q, q).real();
                // Unitary 2x2 rotation diagonalizing [[app, apq],[conj(apq), aqq]].
                double tau = (aqq - app) / (2.0 * std::abs(apq));
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                cplx phase = apq / std::abs(apq);
                cplx s = c * t * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {

DenseMatrix gram(const DenseMatrix& a) {
    const std::size_t n = a.rows(), m = a.cols();
    DenseMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            cplx s{};
            for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
            g(i, j) = s;
        }
    return g;
}

}  // namespace

double spectral_norm(const DenseMatrix& a) {
    auto ev = hermitian_eigenvalues(gram(a));
    return ev.empty() ? 0.0 : std::sqrt(std::max(0.0, ev.back()));
}

double min_singular_value(const DenseMatrix& a) {
    auto ev = hermitian_eigenvalues(gram(a));
    return ev.empty() ? 0.0 : std::sqrt(std::max(0.0, ev.front()));
}

}  // namespace helm::linalg
