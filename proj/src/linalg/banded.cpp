#include "helm/banded.hpp"

#include <algorithm>
#include <cmath>

#include "helm/kernels.hpp"

namespace helm::linalg {

BandedLdlt::BandedLdlt(std::size_t n, std::size_t kl, std::vector<cplx> lower_band)
    : n_(n), kl_(kl), a_(std::move(lower_band)) {
    if (a_.size() != n * (kl + 1)) throw std::invalid_argument("BandedLdlt: bad band size");
    double amax = 0.0;
    for (const cplx& v : a_) amax = std::max(amax, std::abs(v));
    const std::size_t ld = kl_ + 1;
    for (std::size_t j = 0; j < n_; ++j) {
        cplx* colj = a_.data() + j * ld;
        const cplx d = colj[0];
        if (std::abs(d) < 1e-14 * amax || d == cplx{})
            throw std::runtime_error("BandedLdlt: breakdown at column " + std::to_string(j));
        const std::size_t reach = std::min(kl_, n_ - 1 - j);
        for (std::size_t c = 1; c <= reach; ++c) {
            const cplx w = colj[c] / d;
            if (w == cplx{}) continue;
            kernels::zaxpy(reach - c + 1, -w, colj + c, a_.data() + (j + c) * ld);
        }
        const cplx inv = 1.0 / d;
        for (std::size_t c = 1; c <= reach; ++c) colj[c] *= inv;
    }
}

void BandedLdlt::solve_inplace(cplx* b) const {
    const std::size_t ld = kl_ + 1;
    for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t reach = std::min(kl_, n_ - 1 - j);
        if (reach > 0 && b[j] != cplx{})
            kernels::zaxpy(reach, -b[j], a_.data() + j * ld + 1, b + j + 1);
    }
    for (std::size_t j = 0; j < n_; ++j) b[j] /= a_[j * ld];
    for (std::size_t jj = n_; jj-- > 0;) {
        const std::size_t reach = std::min(kl_, n_ - 1 - jj);
        if (reach > 0) b[jj] -= kernels::zdotu(reach, a_.data() + jj * ld + 1, b + jj + 1);
    }
}

std::vector<cplx> BandedLdlt::solve(std::vector<cplx> b) const {
    if (b.size() != n_) throw std::invalid_argument("BandedLdlt::solve: size mismatch");
    solve_inplace(b.data());
    return b;
}

BandedLu::BandedLu(std::size_t n, std::size_t kl, std::size_t ku, std::vector<cplx> ab)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1), ab_(std::move(ab)), piv_(n) {
    if (ab_.size() != n * ldab_) throw std::invalid_argument("BandedLu: bad band size");
    double amax = 0.0;
    for (const cplx& v : ab_) amax = std::max(amax, std::abs(v));
    auto at = [&](std::size_t i, std::size_t j) -> cplx& {
        return ab_[j * ldab_ + (kl_ + ku_ + i - j)];
    };
    for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t ilast = std::min(n_ - 1, j + kl_);
        std::size_t p = j;
        double best = std::abs(at(j, j));
        for (std::size_t i = j + 1; i <= ilast; ++i) {
            double v = std::abs(at(i, j));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        piv_[j] = static_cast<int>(p);
        if (best <= 1e-300 * std::max(amax, 1.0) || best == 0.0)
            throw std::runtime_error("BandedLu: singular pivot at column " + std::to_string(j));
        const std::size_t clast = std::min(n_ - 1, j + kl_ + ku_);
        if (p != j)
            for (std::size_t c = j; c <= clast; ++c) std::swap(at(j, c), at(p, c));
        const cplx inv = 1.0 / at(j, j);
        for (std::size_t i = j + 1; i <= ilast; ++i) at(i, j) *= inv;
        const std::size_t mlen = ilast - j;  // multipliers at column j, rows j+1..ilast
        if (mlen == 0) continue;
        const cplx* mcol = &at(j + 1, j);
        for (std::size_t c = j + 1; c <= clast; ++c) {
            const cplx u = at(j, c);
            if (u == cplx{}) continue;
            kernels::zaxpy(mlen, -u, mcol, &at(j + 1, c));
        }
    }
}

void BandedLu::solve_inplace(cplx* b) const {
    auto at = [&](std::size_t i, std::size_t j) -> const cplx& {
        return ab_[j * ldab_ + (kl_ + ku_ + i - j)];
    };
    for (std::size_t j = 0; j < n_; ++j) {
        std::swap(b[j], b[piv_[j]]);
        const std::size_t ilast = std::min(n_ - 1, j + kl_);
        if (ilast > j && b[j] != cplx{})
            kernels::zaxpy(ilast - j, -b[j], &at(j + 1, j), b + j + 1);
    }
    for (std::size_t jj = n_; jj-- > 0;) {
        const std::size_t clast = std::min(n_ - 1, jj + kl_ + ku_);
        cplx s = b[jj];
        for (std::size_t c = jj + 1; c <= clast && c < n_; ++c) s -= at(jj, c) * b[c];
        b[jj] = s / at(jj, jj);
    }
}

std::vector<cplx> BandedLu::solve(std::vector<cplx> b) const {
    if (b.size() != n_) throw std::invalid_argument("BandedLu::solve: size mismatch");
    solve_inplace(b.data());
    return b;
}

}  // namespace helm::linalg
