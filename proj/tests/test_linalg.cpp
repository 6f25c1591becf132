#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helm/banded.hpp"
#include "helm/csr.hpp"
#include "helm/dense.hpp"
#include "helm/gmres.hpp"
#include "helm/kernels.hpp"

using helm::cplx;
using namespace helm::linalg;

namespace {

DenseMatrix random_matrix(std::size_t n, std::uint32_t seed, double diag_boost = 0.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx{d(rng), d(rng)};
    for (std::size_t i = 0; i < n; ++i) a(i, i) += diag_boost;
    return a;
}

std::vector<cplx> random_vec(std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& z : v) z = {d(rng), d(rng)};
    return v;
}

double residual(const DenseMatrix& a, const std::vector<cplx>& x, const std::vector<cplx>& b) {
    auto ax = a.matvec(x);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        num += std::norm(ax[i] - b[i]);
        den += std::norm(b[i]);
    }
    return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("lu: identity and diagonal") {
    DenseMatrix eye(3, 3);
    for (int i = 0; i < 3; ++i) eye(i, i) = 1.0;
    auto b = random_vec(3, 1);
    auto x = lu_solve(eye, b);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(x[i] - b[i]) < 1e-15);

    DenseMatrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = cplx{0.0, 1.0};
    auto y = lu_solve(d, {cplx{2.0, 0.0}, cplx{0.0, 1.0}});
    CHECK(std::abs(y[0] - 1.0) < 1e-15);
    CHECK(std::abs(y[1] - 1.0) < 1e-15);
}

TEST_CASE("lu: random 50x50 residual") {
    auto a = random_matrix(50, 42, 4.0);  // well conditioned
    auto b = random_vec(50, 43);
    auto x = lu_solve(a, b);
    CHECK(residual(a, x, b) < 1e-10);
}

TEST_CASE("lu: exact singularity reported") {
    DenseMatrix s(2, 2);
    s(0, 0) = 1.0;
    s(0, 1) = 2.0;
    s(1, 0) = 2.0;
    s(1, 1) = 4.0;
    CHECK_THROWS_AS(DenseLu{s}, std::runtime_error);
}

TEST_CASE("banded lu matches dense lu") {
    const std::size_t n = 40, kl = 3, ku = 2;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    DenseMatrix a(n, n);
    CooBuilder coo(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j + kl || j > i + ku) continue;
            cplx v{d(rng), d(rng)};
            if (i == j) v += 3.0;
            a(i, j) = v;
            coo.add(i, j, v);
        }
    auto csr = coo.finalize();
    BandedLu blu(n, kl, ku, csr.full_band(kl, ku));
    auto b = random_vec(n, 8);
    auto xb = blu.solve(b);
    auto xd = lu_solve(a, b);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(xb[i] - xd[i]) < 1e-11);
}

TEST_CASE("banded ldlt solves complex-symmetric banded systems") {
    const std::size_t n = 60, kl = 4;
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    DenseMatrix a(n, n);
    CooBuilder coo(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j; i < std::min(n, j + kl + 1); ++i) {
            cplx v{d(rng), d(rng)};
            if (i == j) v += cplx{4.0, 1.0};
            a(i, j) = v;
            a(j, i) = v;
            coo.add(i, j, v);
            if (i != j) coo.add(j, i, v);
        }
    auto csr = coo.finalize();
    BandedLdlt f(n, kl, csr.lower_band(kl));
    auto b = random_vec(n, 18);
    auto x = f.solve(b);
    CHECK(residual(a, x, b) < 1e-11);
}

TEST_CASE("csr round-trips through dense within 1e-12") {
    auto a = random_matrix(30, 3, 2.0);
    CooBuilder coo(30, 30);
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t j = 0; j < 30; ++j)
            if (std::abs(a(i, j)) > 0.7 || i == j) coo.add(i, j, a(i, j));
            else a(i, j) = 0.0;
    auto csr = coo.finalize();
    auto b = random_vec(30, 4);
    auto x_sparse_dense = lu_solve(csr.to_dense(), b);
    auto x_dense = lu_solve(a, b);
    for (std::size_t i = 0; i < 30; ++i) CHECK(std::abs(x_sparse_dense[i] - x_dense[i]) < 1e-12);

    auto y1 = csr.matvec(b);
    auto y2 = a.matvec(b);
    for (std::size_t i = 0; i < 30; ++i) CHECK(std::abs(y1[i] - y2[i]) < 1e-12);
}

TEST_CASE("coo duplicates are summed and zeros dropped") {
    CooBuilder coo(2, 2);
    coo.add(0, 0, 1.0);
    coo.add(0, 0, 2.0);
    coo.add(1, 0, 1.0);
    coo.add(1, 0, -1.0);
    coo.add(1, 1, 1.0);
    auto m = coo.finalize();
    CHECK(m.nnz() == 2);
    CHECK(std::abs(m.at(0, 0) - 3.0) < 1e-15);
    CHECK(std::abs(m.at(1, 0)) == 0.0);
}

TEST_CASE("rcm reduces bandwidth on a shuffled grid graph") {
    // 2D grid graph with shuffled labels
    const std::size_t nx = 20, ny = 15, n = nx * ny;
    std::vector<std::int32_t> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::mt19937 rng(5);
    std::shuffle(label.begin(), label.end(), rng);
    CooBuilder coo(n, n);
    auto id = [&](std::size_t i, std::size_t j) { return label[j * nx + i]; };
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) {
            coo.add(id(i, j), id(i, j), 4.0);
            if (i + 1 < nx) {
                coo.add(id(i, j), id(i + 1, j), -1.0);
                coo.add(id(i + 1, j), id(i, j), -1.0);
            }
            if (j + 1 < ny) {
                coo.add(id(i, j), id(i, j + 1), -1.0);
                coo.add(id(i, j + 1), id(i, j), -1.0);
            }
        }
    auto a = coo.finalize();
    auto perm = rcm_ordering(a);
    auto p = a.permute_symmetric(perm);
    CHECK(p.bandwidth() < a.bandwidth() / 2);
    CHECK(p.bandwidth() <= 2 * std::min(nx, ny) + 2);

    // permuted solve agrees with the original
    auto b = random_vec(n, 6);
    std::vector<cplx> pb(n);
    for (std::size_t i = 0; i < n; ++i) pb[i] = b[perm[i]];
    BandedLdlt f(n, p.bandwidth(), p.lower_band(p.bandwidth()));
    auto px = f.solve(pb);
    auto x = lu_solve(a.to_dense(), b);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(px[i] - x[perm[i]]) < 1e-10);
}

TEST_CASE("gmres: identity converges in one iteration") {
    const std::size_t n = 10;
    auto b = random_vec(n, 9);
    auto [x, st] = gmres([](const cplx* in, cplx* out) { std::copy(in, in + 10, out); }, b);
    CHECK(st.converged);
    CHECK(st.iterations == 1);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(x[i] - b[i]) < 1e-10);
}

TEST_CASE("gmres: three distinct eigenvalues converge in <= 3 iterations") {
    const std::size_t n = 30;
    std::vector<cplx> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = cplx{1.0 + double(i % 3), 0.5};
    auto b = random_vec(n, 10);
    GmresOptions opt;
    opt.tol = 1e-12;
    auto [x, st] = gmres(
        [&](const cplx* in, cplx* out) {
            for (std::size_t i = 0; i < n; ++i) out[i] = diag[i] * in[i];
        },
        b, opt);
    CHECK(st.converged);
    CHECK(st.iterations <= 3);
    double res = 0;
    for (std::size_t i = 0; i < n; ++i) res += std::norm(diag[i] * x[i] - b[i]);
    CHECK(std::sqrt(res) < 1e-11 * helm::kernels::znrm2(n, b.data()));
}

TEST_CASE("gmres: exact-inverse preconditioner gives one iteration") {
    const std::size_t n = 25;
    auto a = random_matrix(n, 12, 5.0);
    DenseLu lu(a);
    auto b = random_vec(n, 13);
    auto [x, st] = gmres(
        [&](const cplx* in, cplx* out) {
            std::vector<cplx> t(in, in + n);
            auto y = a.matvec(t);
            std::copy(y.begin(), y.end(), out);
        },
        b, {},
        [&](const cplx* in, cplx* out) {
            std::vector<cplx> t(in, in + n);
            lu.solve_inplace(t.data());
            std::copy(t.begin(), t.end(), out);
        });
    CHECK(st.converged);
    CHECK(st.iterations == 1);
}

TEST_CASE("gmres: residual history is monotone within a cycle") {
    const std::size_t n = 64;
    auto a = random_matrix(n, 21, 3.0);
    auto b = random_vec(n, 22);
    GmresOptions opt;
    opt.restart = 64;
    opt.tol = 1e-12;
    auto [x, st] = gmres(
        [&](const cplx* in, cplx* out) {
            std::vector<cplx> t(in, in + n);
            auto y = a.matvec(t);
            std::copy(y.begin(), y.end(), out);
        },
        b, opt);
    CHECK(st.converged);
    for (std::size_t i = 1; i < st.history.size(); ++i)
        CHECK(st.history[i] <= st.history[i - 1] * (1.0 + 1e-12));
}

TEST_CASE("gmres: non-convergence is flagged with best iterate") {
    const std::size_t n = 40;
    auto a = random_matrix(n, 31, 0.0);  // indefinite-ish, hard for 3 iterations
    auto b = random_vec(n, 32);
    GmresOptions opt;
    opt.restart = 2;
    opt.max_iters = 3;
    opt.tol = 1e-14;
    auto [x, st] = gmres(
        [&](const cplx* in, cplx* out) {
            std::vector<cplx> t(in, in + n);
            auto y = a.matvec(t);
            std::copy(y.begin(), y.end(), out);
        },
        b, opt);
    CHECK_FALSE(st.converged);
    CHECK(st.relative_residual <= 1.0 + 1e-12);
}

TEST_CASE("block jacobi preconditioner accelerates a banded system") {
    const std::size_t n = 120;
    CooBuilder coo(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        coo.add(i, i, cplx{4.0, 0.4});
        if (i + 1 < n) {
            coo.add(i, i + 1, -1.0);
            coo.add(i + 1, i, -1.0);
        }
    }
    auto a = coo.finalize();
    auto b = random_vec(n, 66);
    BlockJacobi pc(a, 30);
    GmresOptions opt;
    opt.tol = 1e-10;
    auto [x, st] = gmres([&](const cplx* in, cplx* out) { a.matvec(in, out); }, b, opt,
                         pc.as_operator());
    CHECK(st.converged);
    std::vector<cplx> ax(n);
    a.matvec(x.data(), ax.data());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
        num += std::norm(ax[i] - b[i]);
        den += std::norm(b[i]);
    }
    CHECK(std::sqrt(num / den) < 1e-9);
}

TEST_CASE("hermitian eigenvalues and spectral norms") {
    DenseMatrix h(3, 3);
    h(0, 0) = 2.0;
    h(1, 1) = 3.0;
    h(2, 2) = 5.0;
    h(0, 1) = cplx{0.0, 1.0};
    h(1, 0) = cplx{0.0, -1.0};
    auto ev = hermitian_eigenvalues(h);
    // eigenvalues of [[2, i, 0], [-i, 3, 0], [0, 0, 5]]: 5 and (5 +- sqrt(5))/2
    CHECK(ev[0] == doctest::Approx((5.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-10));
    CHECK(ev[1] == doctest::Approx((5.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-10));
    CHECK(ev[2] == doctest::Approx(5.0).epsilon(1e-10));

    DenseMatrix u(2, 2);
    u(0, 0) = 3.0;
    u(1, 1) = cplx{0.0, 0.5};
    CHECK(spectral_norm(u) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(min_singular_value(u) == doctest::Approx(0.5).epsilon(1e-10));
}
