#include "helm/kernels.hpp"

namespace helm::kernels::detail {

namespace scalar {

void zaxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cplx zdotu(std::size_t n, const cplx* x, const cplx* y) {
    cplx s0{}, s1{};
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        s0 += x[i] * y[i];
        s1 += x[i + 1] * y[i + 1];
    }
    if (i < n) s0 += x[i] * y[i];
    return s0 + s1;
}

cplx zdotc(std::size_t n, const cplx* x, const cplx* y) {
    cplx s0{}, s1{};
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        s0 += std::conj(x[i]) * y[i];
        s1 += std::conj(x[i + 1]) * y[i + 1];
    }
    if (i < n) s0 += std::conj(x[i]) * y[i];
    return s0 + s1;
}

void zscal(std::size_t n, cplx a, cplx* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void csr_matvec(std::size_t n_rows, const std::int64_t* row_ptr, const std::int32_t* col,
                const cplx* val, const cplx* x, cplx* y) {
    for (std::size_t r = 0; r < n_rows; ++r) {
        cplx s{};
        for (std::int64_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p) s += val[p] * x[col[p]];
        y[r] = s;
    }
}

}  // namespace scalar

const KernelTable& scalar_table() {
    static const KernelTable t{scalar::zaxpy, scalar::zdotu, scalar::zdotc, scalar::zscal,
                               scalar::csr_matvec};
    return t;
}

}  // namespace helm::kernels::detail
