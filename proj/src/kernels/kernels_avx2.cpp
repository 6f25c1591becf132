#include <immintrin.h>

#include "helm/kernels.hpp"

// AVX2/FMA variants. One __m256d holds two interleaved complex doubles.
namespace helm::kernels::detail {

namespace avx2 {

// [ar,ai]*[br,bi] per 128-bit lane via fmaddsub (even lanes subtract).
static inline __m256d cmul(__m256d a, __m256d b) {
    __m256d a_re = _mm256_movedup_pd(a);
    __m256d a_im = _mm256_permute_pd(a, 0xF);
    __m256d b_sw = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

// conj(a)*b per lane via fmsubadd (even lanes add).
static inline __m256d cmul_conj(__m256d a, __m256d b) {
    __m256d a_re = _mm256_movedup_pd(a);
    __m256d a_im = _mm256_permute_pd(a, 0xF);
    __m256d b_sw = _mm256_permute_pd(b, 0x5);
    return _mm256_fmsubadd_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

static inline cplx hsum(__m256d acc) {
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

void zaxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    __m256d a_re = _mm256_set1_pd(a.real());
    __m256d a_im = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 4 <= 2 * n; i += 4) {
        __m256d xv = _mm256_loadu_pd(xp + i);
        __m256d yv = _mm256_loadu_pd(yp + i);
        __m256d x_sw = _mm256_permute_pd(xv, 0x5);
        __m256d prod = _mm256_fmaddsub_pd(a_re, xv, _mm256_mul_pd(a_im, x_sw));
        _mm256_storeu_pd(yp + i, _mm256_add_pd(yv, prod));
    }
    for (std::size_t k = i / 2; k < n; ++k) y[k] += a * x[k];
}

cplx zdotu(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= 2 * n; i += 8) {
        acc0 = _mm256_add_pd(acc0, cmul(_mm256_loadu_pd(xp + i), _mm256_loadu_pd(yp + i)));
        acc1 = _mm256_add_pd(acc1, cmul(_mm256_loadu_pd(xp + i + 4), _mm256_loadu_pd(yp + i + 4)));
    }
    for (; i + 4 <= 2 * n; i += 4)
        acc0 = _mm256_add_pd(acc0, cmul(_mm256_loadu_pd(xp + i), _mm256_loadu_pd(yp + i)));
    cplx s = hsum(_mm256_add_pd(acc0, acc1));
    for (std::size_t k = i / 2; k < n; ++k) s += x[k] * y[k];
    return s;
}

cplx zdotc(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= 2 * n; i += 8) {
        acc0 = _mm256_add_pd(acc0, cmul_conj(_mm256_loadu_pd(xp + i), _mm256_loadu_pd(yp + i)));
        acc1 = _mm256_add_pd(acc1,
                             cmul_conj(_mm256_loadu_pd(xp + i + 4), _mm256_loadu_pd(yp + i + 4)));
    }
    for (; i + 4 <= 2 * n; i += 4)
        acc0 = _mm256_add_pd(acc0, cmul_conj(_mm256_loadu_pd(xp + i), _mm256_loadu_pd(yp + i)));
    cplx s = hsum(_mm256_add_pd(acc0, acc1));
    for (std::size_t k = i / 2; k < n; ++k) s += std::conj(x[k]) * y[k];
    return s;
}

void zscal(std::size_t n, cplx a, cplx* x) {
    double* xp = reinterpret_cast<double*>(x);
    __m256d a_re = _mm256_set1_pd(a.real());
    __m256d a_im = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 4 <= 2 * n; i += 4) {
        __m256d xv = _mm256_loadu_pd(xp + i);
        __m256d x_sw = _mm256_permute_pd(xv, 0x5);
        _mm256_storeu_pd(xp + i, _mm256_fmaddsub_pd(a_re, xv, _mm256_mul_pd(a_im, x_sw)));
    }
    for (std::size_t k = i / 2; k < n; ++k) x[k] *= a;
}

void csr_matvec(std::size_t n_rows, const std::int64_t* row_ptr, const std::int32_t* col,
                const cplx* val, const cplx* x, cplx* y) {
    for (std::size_t r = 0; r < n_rows; ++r) {
        std::int64_t p = row_ptr[r];
        const std::int64_t end = row_ptr[r + 1];
        __m256d acc = _mm256_setzero_pd();
        for (; p + 2 <= end; p += 2) {
            __m256d vv = _mm256_loadu_pd(reinterpret_cast<const double*>(val + p));
            __m128d x0 = _mm_loadu_pd(reinterpret_cast<const double*>(x + col[p]));
            __m128d x1 = _mm_loadu_pd(reinterpret_cast<const double*>(x + col[p + 1]));
            acc = _mm256_add_pd(acc, cmul(vv, _mm256_set_m128d(x1, x0)));
        }
        cplx s = hsum(acc);
        for (; p < end; ++p) s += val[p] * x[col[p]];
        y[r] = s;
    }
}

}  // namespace avx2

const KernelTable& avx2_table() {
    static const KernelTable t{avx2::zaxpy, avx2::zdotu, avx2::zdotc, avx2::zscal,
                               avx2::csr_matvec};
    return t;
}

}  // namespace helm::kernels::detail
