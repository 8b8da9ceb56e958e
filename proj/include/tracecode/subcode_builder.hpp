#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tracecode/f2linalg.hpp"
#include "tracecode/field.hpp"
#include "tracecode/linearized.hpp"
#include "tracecode/trace_code.hpp"

namespace tracecode {

/// The pair-product membership system for C_h: unknowns (b_1..b_M) in F_q^M,
/// one equation sum_i (a_i^(2^j) b_i + a_i b_i^(2^j)) = 0 per j in the parity
/// dependent range. S is its solution space, V the image of the projection
/// onto b_1.
struct PairSystem {
    const Field* field = nullptr;
    int h = 0;
    int w = 0; // 2h-1 for odd m, 2h for even m
    int M = 0; // (m - w) / 2
    std::vector<std::uint32_t> a;
    int j_lo = 0, j_hi = -1; // inclusive equation range; empty when j_lo > j_hi
    F2Subspace solutions;    // S, flattened tuples of F_q^M
    F2Subspace projection;   // V, inside F_q

    int equations() const { return j_hi - j_lo + 1; }
    int max_r() const { return static_cast<int>(projection.dim()) - M; }
};

/// Builds and solves the system for the given a-tuple. Requirements: a_1 = 1,
/// the a_i F_2-independent, |a| = M for the (m, h) at hand.
PairSystem build_system(std::vector<std::uint32_t> a, int h, const Field& field);

/// The linearized polynomial whose word equals the pair form of (a, b),
/// provided (a, b) satisfies the membership system: a_0 = sum a_i b_i and
/// a_j = sum (a_i^(2^j) b_i + a_i b_i^(2^j)) for 1 <= j <= h. The word-level
/// equality is rechecked; failure is a bug trap. (For even m the dropped
/// x^(2^(m/2)+1) term is trace-free, so only word equality holds, not a
/// polynomial identity.)
LinearizedPoly r_from_pairs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                            int h, const Field& field);

/// Whether the pair form of (a, b) is a word of C_h, decided by constructing
/// the candidate polynomial and comparing full evaluation vectors.
bool membership_check(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      int h, const Field& field);

/// Picks r solution tuples whose first coordinates extend span{a} to rank
/// M + r, scanning V's echelon basis in fixed order. Each returned tuple is
/// verified to have full rank 2M together with a.
std::vector<std::vector<std::uint32_t>> select_representatives(const PairSystem& sys, int r);

/// The r-dimensional minimum-weight subcode built from the selected
/// representatives. Every one of the 2^r - 1 nonzero words is checked to
/// have weight exactly d_1.
PolySubcode min_weight_subcode(const PairSystem& sys, int r);

/// Structural check for odd m: dim V = dim S - M(M-1)/2, and solutions
/// sharing the first coordinate differ by an a-span combination with a
/// symmetric coefficient matrix.
bool fiber_structure_check(const PairSystem& sys);

/// |S| of the two-equation system with a = (1, a2), a2 a cube root of unity,
/// h = (m-4)/2: 2 sqrt(q) when m = 0 mod 4, 4 sqrt(q) when m = 2 mod 4.
std::int64_t even_m_solution_count(std::uint32_t a2, const Field& field);

/// Fixed field of the d-th Frobenius power (d must divide m).
F2Subspace subfield(const Field& field, int d);

/// A root of x^2 + x + 1 (smallest mask); requires even m.
std::uint32_t f4_element(const Field& field);

/// Named a-tuples: "generic" (1, t, t^2, ...), "subfield-F8" (an independent
/// triple inside F_8, needs 3 | m and M = 3), "f4-element" ((1, a2) with a2
/// a cube root of unity, needs even m and M = 2).
std::vector<std::uint32_t> preset_tuple(const Field& field, std::string_view name, int M);

} // namespace tracecode
