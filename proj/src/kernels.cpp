#include "fringestat/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#define FRINGESTAT_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define FRINGESTAT_HAVE_AVX2_BUILD 0
#endif

namespace fringestat::kernels {

namespace {

double dot_reversed_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[n - 1 - i];
    return acc;
}

double compensated_sum_scalar(const double* x, std::size_t n) {
    // Neumaier variant of Kahan summation: the correction also captures the
    // case where the incoming term is larger than the running sum.
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t = sum + x[i];
        if (std::fabs(sum) >= std::fabs(x[i]))
            comp += (sum - t) + x[i];
        else
            comp += (x[i] - t) + sum;
        sum = t;
    }
    return sum + comp;
}

#if FRINGESTAT_HAVE_AVX2_BUILD

__attribute__((target("avx2,fma")))
double dot_reversed_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    // b is walked backwards; a 4-lane load at b+n-4-i holds b[n-1-i..n-4-i]
    // in ascending memory order, so reversing the lanes lines it up with
    // a[i..i+3].
    for (; i + 8 <= n; i += 8) {
        __m256d va0 = _mm256_loadu_pd(a + i);
        __m256d vb0 = _mm256_loadu_pd(b + n - 4 - i);
        vb0 = _mm256_permute4x64_pd(vb0, _MM_SHUFFLE(0, 1, 2, 3));
        acc0 = _mm256_fmadd_pd(va0, vb0, acc0);
        __m256d va1 = _mm256_loadu_pd(a + i + 4);
        __m256d vb1 = _mm256_loadu_pd(b + n - 8 - i);
        vb1 = _mm256_permute4x64_pd(vb1, _MM_SHUFFLE(0, 1, 2, 3));
        acc1 = _mm256_fmadd_pd(va1, vb1, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + n - 4 - i);
        vb = _mm256_permute4x64_pd(vb, _MM_SHUFFLE(0, 1, 2, 3));
        acc0 = _mm256_fmadd_pd(va, vb, acc0);
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc0);
    double acc = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) acc += a[i] * b[n - 1 - i];
    return acc;
}

__attribute__((target("avx2")))
double compensated_sum_avx2(const double* x, std::size_t n) {
    // Four independent Neumaier lanes; lane sums and corrections are then
    // folded through the scalar routine so the final combine is itself
    // compensated.
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d sum = _mm256_setzero_pd();
    __m256d comp = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        __m256d t = _mm256_add_pd(sum, v);
        __m256d abs_sum = _mm256_andnot_pd(sign_mask, sum);
        __m256d abs_v = _mm256_andnot_pd(sign_mask, v);
        __m256d big_first = _mm256_add_pd(_mm256_sub_pd(sum, t), v);
        __m256d small_first = _mm256_add_pd(_mm256_sub_pd(v, t), sum);
        __m256d use_big = _mm256_cmp_pd(abs_sum, abs_v, _CMP_GE_OQ);
        comp = _mm256_add_pd(comp, _mm256_blendv_pd(small_first, big_first, use_big));
        sum = t;
    }
    alignas(32) double parts[8];
    _mm256_store_pd(parts, sum);
    _mm256_store_pd(parts + 4, comp);
    double acc = compensated_sum_scalar(parts, 8);
    if (i < n) {
        double tail = compensated_sum_scalar(x + i, n - i);
        double pair[2] = {acc, tail};
        acc = compensated_sum_scalar(pair, 2);
    }
    return acc;
}

bool cpu_has_avx2_fma() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#endif  // FRINGESTAT_HAVE_AVX2_BUILD

Impl pick_default_impl() {
#if FRINGESTAT_HAVE_AVX2_BUILD
    if (const char* env = std::getenv("FRINGESTAT_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Impl::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2_fma()) return Impl::avx2;
        // "auto" or anything unrecognized falls through to detection.
    }
    if (cpu_has_avx2_fma()) return Impl::avx2;
#else
    if (const char* env = std::getenv("FRINGESTAT_KERNELS")) (void)env;
#endif
    return Impl::scalar;
}

Impl g_impl = pick_default_impl();

}  // namespace

const char* impl_name(Impl impl) {
    switch (impl) {
        case Impl::scalar: return "scalar";
        case Impl::avx2: return "avx2";
    }
    return "?";
}

bool impl_supported(Impl impl) {
    switch (impl) {
        case Impl::scalar:
            return true;
        case Impl::avx2:
#if FRINGESTAT_HAVE_AVX2_BUILD
            return cpu_has_avx2_fma();
#else
            return false;
#endif
    }
    return false;
}

Impl active_impl() { return g_impl; }

bool set_impl(Impl impl) {
    if (!impl_supported(impl)) return false;
    g_impl = impl;
    return true;
}

double dot_reversed_with(Impl impl, const double* a, const double* b, std::size_t n) {
#if FRINGESTAT_HAVE_AVX2_BUILD
    if (impl == Impl::avx2) return dot_reversed_avx2(a, b, n);
#endif
    (void)impl;
    return dot_reversed_scalar(a, b, n);
}

double compensated_sum_with(Impl impl, const double* x, std::size_t n) {
#if FRINGESTAT_HAVE_AVX2_BUILD
    if (impl == Impl::avx2) return compensated_sum_avx2(x, n);
#endif
    (void)impl;
    return compensated_sum_scalar(x, n);
}

double dot_reversed(const double* a, const double* b, std::size_t n) {
    return dot_reversed_with(g_impl, a, b, n);
}

double compensated_sum(const double* x, std::size_t n) {
    return compensated_sum_with(g_impl, x, n);
}

}  // namespace fringestat::kernels
