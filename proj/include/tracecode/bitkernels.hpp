#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Bit-vector inner loops. Everything in the library that touches long packed
// bit buffers (codeword weights, row XORs in Gaussian elimination, support
// unions, evaluation tables) funnels through one of these kernels. A scalar
// reference implementation always exists; wider variants (AVX2 on x86-64,
// NEON on aarch64) are compiled in where the target supports them and chosen
// at runtime. Scalar and vector variants must agree bit for bit; the test
// suite enforces equivalence on random buffers.
//
// All sizes are counts of 64-bit words. Source and destination buffers of
// xor/or/and entry points must not alias unless dst == src exactly.

namespace tracecode::bitk {

struct Kernels {
    const char* name;
    // popcount over a[0..n)
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
    // dst[i] ^= src[i]
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // dst[i] ^= src[i]; returns popcount of the updated dst
    std::uint64_t (*xor_popcount_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // popcount of a[i] | b[i] (no writes)
    std::uint64_t (*or_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    // popcount of a[i] & b[i] (no writes)
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

// Portable reference kernels.
const Kernels& scalar();

// Best kernel set usable on this machine. Resolved once; the environment
// variable TRACECODE_KERNEL ("scalar", "avx2", "neon") overrides selection,
// failing loudly if the requested variant cannot run here.
const Kernels& active();

// Every variant compiled into this binary, scalar first.
std::vector<const Kernels*> compiled();

// Whether the given variant can execute on the current CPU.
bool runnable(const Kernels& k);

// Look up a compiled variant by name; nullptr if absent.
const Kernels* by_name(std::string_view name);

} // namespace tracecode::bitk
