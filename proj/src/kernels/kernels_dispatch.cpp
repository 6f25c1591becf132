#include <atomic>
#include <cstdlib>
#include <cstring>

#include "helm/kernels.hpp"

namespace helm::kernels {

namespace {

using detail::KernelTable;

bool avx2_available() {
#if defined(HELM_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct Active {
    const KernelTable* table;
    const char* name;
};

Active pick_default() {
    if (const char* env = std::getenv("HELM_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return {&detail::scalar_table(), "scalar"};
#if defined(HELM_HAVE_AVX2_TU)
        if (std::strcmp(env, "avx2") == 0 && avx2_available())
            return {&detail::avx2_table(), "avx2"};
#endif
    }
#if defined(HELM_HAVE_AVX2_TU)
    if (avx2_available()) return {&detail::avx2_table(), "avx2"};
#endif
    return {&detail::scalar_table(), "scalar"};
}

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<const char*> g_name{nullptr};

const KernelTable& table() {
    const KernelTable* t = g_table.load(std::memory_order_acquire);
    if (!t) {
        Active a = pick_default();
        g_table.store(a.table, std::memory_order_release);
        g_name.store(a.name, std::memory_order_release);
        t = a.table;
    }
    return *t;
}

}  // namespace

std::string_view active_isa() {
    table();
    return g_name.load(std::memory_order_acquire);
}

bool select_isa(std::string_view name) {
    if (name == "scalar") {
        g_table.store(&detail::scalar_table(), std::memory_order_release);
        g_name.store("scalar", std::memory_order_release);
        return true;
    }
#if defined(HELM_HAVE_AVX2_TU)
    if (name == "avx2" && avx2_available()) {
        g_table.store(&detail::avx2_table(), std::memory_order_release);
        g_name.store("avx2", std::memory_order_release);
        return true;
    }
#endif
    return false;
}

void zaxpy(std::size_t n, cplx a, const cplx* x, cplx* y) { table().zaxpy(n, a, x, y); }
cplx zdotu(std::size_t n, const cplx* x, const cplx* y) { return table().zdotu(n, x, y); }
cplx zdotc(std::size_t n, const cplx* x, const cplx* y) { return table().zdotc(n, x, y); }
void zscal(std::size_t n, cplx a, cplx* x) { table().zscal(n, a, x); }

double znrm2(std::size_t n, const cplx* x) {
    return std::sqrt(std::abs(table().zdotc(n, x, x).real()));
}

void csr_matvec(std::size_t n_rows, const std::int64_t* row_ptr, const std::int32_t* col,
                const cplx* val, const cplx* x, cplx* y) {
    table().csr_matvec(n_rows, row_ptr, col, val, x, y);
}

}  // namespace helm::kernels

namespace helm {

namespace {
std::atomic<unsigned> g_threads{0};
}

unsigned thread_budget() {
    unsigned t = g_threads.load();
    if (t == 0) {
        t = std::thread::hardware_concurrency();
        if (t == 0) t = 1;
    }
    return t;
}

void set_thread_budget(unsigned n) { g_threads.store(n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  unsigned nthreads) {
    unsigned nt = nthreads ? nthreads : thread_budget();
    if (nt <= 1 || n < 2) {
        body(0, n);
        return;
    }
    if (nt > n) nt = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::size_t chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace helm
