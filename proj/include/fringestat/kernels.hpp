#pragma once

#include <cstddef>

// Data-parallel inner loops used by the numeric modules. Every kernel has a
// scalar reference implementation and, on x86-64, an AVX2+FMA variant. The
// active variant is picked once at first use from the CPU's capabilities and
// can be forced with the FRINGESTAT_KERNELS environment variable
// ("scalar" | "avx2" | "auto") or with set_impl(). Variants are
// equivalence-tested against each other in the unit suite.

namespace fringestat::kernels {

enum class Impl {
    scalar,
    avx2,
};

const char* impl_name(Impl impl);

// True if this machine can execute the given variant.
bool impl_supported(Impl impl);

// Currently dispatched variant.
Impl active_impl();

// Force a variant. Returns false (and changes nothing) if unsupported.
// Not safe to call concurrently with kernel invocations.
bool set_impl(Impl impl);

// sum_{i in [0,n)} a[i] * b[n-1-i]
double dot_reversed(const double* a, const double* b, std::size_t n);

// Neumaier-compensated sum_{i in [0,n)} x[i].
double compensated_sum(const double* x, std::size_t n);

// Direct entry points for a specific variant, used by the equivalence tests.
double dot_reversed_with(Impl impl, const double* a, const double* b, std::size_t n);
double compensated_sum_with(Impl impl, const double* x, std::size_t n);

}  // namespace fringestat::kernels
