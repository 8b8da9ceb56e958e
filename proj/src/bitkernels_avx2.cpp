// AVX2 variants of the bit kernels. This translation unit is compiled with
// -mavx2 and only ever entered after a runtime CPUID check.

#if defined(__x86_64__) || defined(_M_X64)

#include "tracecode/bitkernels.hpp"

#include <bit>
#include <immintrin.h>

namespace tracecode::bitk {

namespace {

// Per-byte popcount via nibble lookup, then horizontal sums into 4 u64 lanes.
inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return (std::uint64_t)_mm_cvtsi128_si64(s) + (std::uint64_t)_mm_extract_epi64(s, 1);
}

std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount_epi64(v));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += std::popcount(a[i]);
    return c;
}

void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t xor_popcount_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_xor_si256(d, s);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), x);
        acc = _mm256_add_epi64(acc, popcount_epi64(x));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) {
        dst[i] ^= src[i];
        c += std::popcount(dst[i]);
    }
    return c;
}

std::uint64_t or_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_or_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                    _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        acc = _mm256_add_epi64(acc, popcount_epi64(x));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += std::popcount(a[i] | b[i]);
    return c;
}

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                     _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        acc = _mm256_add_epi64(acc, popcount_epi64(x));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

const Kernels kAvx2 = {
    "avx2",
    popcount_avx2,
    xor_into_avx2,
    xor_popcount_into_avx2,
    or_popcount_avx2,
    and_popcount_avx2,
};

} // namespace

const Kernels& avx2_kernels() { return kAvx2; }

bool avx2_runnable() { return __builtin_cpu_supports("avx2"); }

} // namespace tracecode::bitk

#endif // x86-64
