#include "tracecode/bitkernels.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tracecode::bitk {

namespace {

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
    return c;
}

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t xor_popcount_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] ^= src[i];
        c += std::popcount(dst[i]);
    }
    return c;
}

std::uint64_t or_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] | b[i]);
    return c;
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

const Kernels kScalar = {
    "scalar",
    popcount_scalar,
    xor_into_scalar,
    xor_popcount_into_scalar,
    or_popcount_scalar,
    and_popcount_scalar,
};

const Kernels* select_active() {
    if (const char* forced = std::getenv("TRACECODE_KERNEL")) {
        const Kernels* k = by_name(forced);
        if (!k) throw std::runtime_error("TRACECODE_KERNEL=" + std::string(forced) + ": no such kernel in this build");
        if (!runnable(*k)) throw std::runtime_error("TRACECODE_KERNEL=" + std::string(forced) + ": not supported by this CPU");
        return k;
    }
    // last compiled runnable variant wins (vector variants register after scalar)
    const Kernels* best = &kScalar;
    for (const Kernels* k : compiled())
        if (runnable(*k)) best = k;
    return best;
}

} // namespace

#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels(); // bitkernels_avx2.cpp
bool avx2_runnable();
#endif
#if defined(__aarch64__)
const Kernels& neon_kernels(); // bitkernels_neon.cpp
#endif

const Kernels& scalar() { return kScalar; }

std::vector<const Kernels*> compiled() {
    std::vector<const Kernels*> out{&kScalar};
#if defined(__x86_64__) || defined(_M_X64)
    out.push_back(&avx2_kernels());
#endif
#if defined(__aarch64__)
    out.push_back(&neon_kernels());
#endif
    return out;
}

bool runnable(const Kernels& k) {
    if (&k == &kScalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
    if (&k == &avx2_kernels()) return avx2_runnable();
#endif
#if defined(__aarch64__)
    if (&k == &neon_kernels()) return true;
#endif
    return false;
}

const Kernels* by_name(std::string_view name) {
    for (const Kernels* k : compiled())
        if (name == k->name) return k;
    return nullptr;
}

const Kernels& active() {
    static const Kernels* chosen = select_active();
    return *chosen;
}

} // namespace tracecode::bitk
