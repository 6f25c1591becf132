#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "helm/common.hpp"

// Data-parallel complex array kernels behind the linear algebra.  Each kernel
// has a scalar reference implementation and may have SIMD variants; the
// active variant is picked at runtime (cpuid, overridable via select_isa or
// the HELM_KERNELS environment variable).  Variants are equivalence-tested
// against the scalar reference.
namespace helm::kernels {

// y += a * x
void zaxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
// sum_i x[i] * y[i]   (unconjugated; complex-symmetric pairings)
cplx zdotu(std::size_t n, const cplx* x, const cplx* y);
// sum_i conj(x[i]) * y[i]
cplx zdotc(std::size_t n, const cplx* x, const cplx* y);
// x *= a
void zscal(std::size_t n, cplx a, cplx* x);
// Euclidean norm
double znrm2(std::size_t n, const cplx* x);
// y = A x for CSR (row_ptr has n_rows+1 entries)
void csr_matvec(std::size_t n_rows, const std::int64_t* row_ptr, const std::int32_t* col,
                const cplx* val, const cplx* x, cplx* y);

// Name of the active variant ("scalar", "avx2").
std::string_view active_isa();
// Force a variant; returns false if it is unavailable on this machine.
bool select_isa(std::string_view name);

namespace detail {

struct KernelTable {
    void (*zaxpy)(std::size_t, cplx, const cplx*, cplx*);
    cplx (*zdotu)(std::size_t, const cplx*, const cplx*);
    cplx (*zdotc)(std::size_t, const cplx*, const cplx*);
    void (*zscal)(std::size_t, cplx, cplx*);
    void (*csr_matvec)(std::size_t, const std::int64_t*, const std::int32_t*, const cplx*,
                       const cplx*, cplx*);
};

const KernelTable& scalar_table();
#if defined(HELM_HAVE_AVX2_TU)
const KernelTable& avx2_table();
#endif

}  // namespace detail

}  // namespace helm::kernels
