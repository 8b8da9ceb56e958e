// NEON variants of the bit kernels (aarch64 only; NEON is baseline there,
// so no runtime feature probe is needed).

#if defined(__aarch64__)

#include "tracecode/bitkernels.hpp"

#include <arm_neon.h>
#include <bit>

namespace tracecode::bitk {

namespace {

inline std::uint64_t popcount_u64x2(uint64x2_t v) {
    uint8x16_t bytes = vreinterpretq_u8_u64(v);
    return vaddvq_u8(vcntq_u8(bytes));
}

std::uint64_t popcount_neon(const std::uint64_t* a, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) c += popcount_u64x2(vld1q_u64(a + i));
    for (; i < n; ++i) c += std::popcount(a[i]);
    return c;
}

void xor_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t xor_popcount_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t x = veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i));
        vst1q_u64(dst + i, x);
        c += popcount_u64x2(x);
    }
    for (; i < n; ++i) {
        dst[i] ^= src[i];
        c += std::popcount(dst[i]);
    }
    return c;
}

std::uint64_t or_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        c += popcount_u64x2(vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) c += std::popcount(a[i] | b[i]);
    return c;
}

std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        c += popcount_u64x2(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

const Kernels kNeon = {
    "neon",
    popcount_neon,
    xor_into_neon,
    xor_popcount_into_neon,
    or_popcount_neon,
    and_popcount_neon,
};

} // namespace

const Kernels& neon_kernels() { return kNeon; }

} // namespace tracecode::bitk

#endif // aarch64
