#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tracecode/f2linalg.hpp"
#include "tracecode/field.hpp"
#include "tracecode/linearized.hpp"

namespace tracecode {

enum class FormKind { hyperbolic, elliptic, odd_rank };

const char* to_string(FormKind k);

struct FormClassification {
    int w;    // dim of the radical W
    int w0;   // dim of W_0 = {x in W : Q(x) = 0}; w or w-1
    int rank; // m-w when w0 == w, else m-w+1
    FormKind kind;
    std::int64_t zeros; // N(Q) = #{x : Q(x) = 0}
};

/// F_2-valued quadratic form on F_q, either Q(x) = Tr(x R(x)) for a
/// linearized R, or Q(x) = sum_i Tr(a_i x) Tr(b_i x) for pair lists.
/// Forms compare by full evaluation table: distinct sources can induce the
/// same function.
class QuadraticForm {
public:
    static QuadraticForm from_poly(LinearizedPoly r);
    static QuadraticForm from_pairs(const Field& field, std::vector<std::uint32_t> a,
                                    std::vector<std::uint32_t> b);

    const Field& field() const { return *field_; }
    bool has_poly_source() const { return poly_.has_value(); }
    const LinearizedPoly& poly() const;
    std::span<const std::uint32_t> pair_a() const { return a_; }
    std::span<const std::uint32_t> pair_b() const { return b_; }

    int eval(std::uint32_t x) const;
    /// B(x,y) = Q(x+y) + Q(x) + Q(y): symmetric, bilinear, alternating.
    int bilinear(std::uint32_t x, std::uint32_t y) const;

    /// Radical W of B, as a subspace of F_q = F_2^m.
    F2Subspace radical() const;
    /// W_0 (Q is linear on W, so this is a kernel inside W).
    F2Subspace radical_zero() const;

    /// Rank, type and zero count. The type comes from an Arf-style pass over
    /// a complement of the radical; for small fields the zero count is also
    /// recomputed by full enumeration and the two must agree.
    FormClassification classify() const;

    /// q-bit table with bit x = Q(x). Pair sources go through packed
    /// linear-functional tables, poly sources through pointwise evaluation.
    BitVec eval_table() const;

    bool same_form(const QuadraticForm& o) const;

private:
    QuadraticForm() = default;
    const Field* field_ = nullptr;
    std::optional<LinearizedPoly> poly_;
    std::vector<std::uint32_t> a_, b_;

    std::vector<std::uint32_t> bilinear_rows() const; // row i = mask of B(t^i, .)
};

/// Spec-facing constructor name for the pair form of two element lists.
QuadraticForm pair_form(const Field& field, std::vector<std::uint32_t> a,
                        std::vector<std::uint32_t> b);

/// N(Q) by plain enumeration of F_q; independent of classify(). Guarded to
/// m <= 20.
std::int64_t zero_count_exhaustive(const QuadraticForm& q);

} // namespace tracecode
