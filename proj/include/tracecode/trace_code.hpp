#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tracecode/f2linalg.hpp"
#include "tracecode/field.hpp"
#include "tracecode/linearized.hpp"

namespace tracecode {

/// One codeword of C_h: q-1 bits indexed by x in F_q^* in increasing-mask
/// order (bit x-1 = Tr(x R(x))), with its Hamming weight cached.
struct Codeword {
    BitVec bits;
    std::uint64_t weight = 0;
};

/// Direct pointwise evaluation of the word of R.
Codeword word_of(const LinearizedPoly& r);

struct SweepOptions {
    std::uint64_t max_words = std::uint64_t{1} << 28; // states visited, q^(h+1)
    int jobs = 1;
};

/// The code C_h over a fixed field: generator words for the monomial basis
/// t^j x^(2^i), the kernel of R -> c_R, and the honestly computed dimension
/// (the word map need not be injective).
class TraceCode {
public:
    TraceCode(const Field& field, int h, std::uint64_t max_bits = std::uint64_t{1} << 28);

    const Field& field() const { return *field_; }
    int h() const { return h_; }
    std::size_t length() const { return static_cast<std::size_t>(field_->q()) - 1; }
    std::size_t generator_count() const { return generators_.size(); }
    /// Generator index i*m + j carries R = t^j x^(2^i).
    const Codeword& generator(std::size_t idx) const { return generators_[idx]; }

    /// Word of the R with flattened coefficient bits `rbits` ((h+1)m bits).
    Codeword word_from_flat(const BitVec& rbits) const;

    /// R-coefficient vectors whose word vanishes.
    const F2Subspace& word_kernel() const { return word_kernel_; }
    /// dim C_h = (h+1)m - dim word_kernel.
    int dim() const { return dim_; }
    /// Independent basis words of the code (dim() rows).
    const std::vector<Codeword>& basis_words() const { return basis_words_; }

private:
    const Field* field_;
    int h_;
    std::vector<Codeword> generators_;
    std::vector<Codeword> basis_words_;
    F2Subspace word_kernel_;
    int dim_;
};

/// Closed-form minimum weight for the ranges where the construction applies
/// (odd m with 1 <= h <= (m-1)/2, even m with 1 <= h < m/2); nullopt outside.
std::optional<std::uint64_t> min_weight_formula(const Field& field, int h);

/// d_1(C_h) by sweeping every R in R_h (Gray order, one XOR + popcount per
/// step). Zero words are skipped. Where min_weight_formula applies, the
/// result is checked against it.
std::uint64_t min_weight_exhaustive(const Field& field, int h, const SweepOptions& opt = {});

/// F_2-span of linearized polynomials inside R_h. Subcodes are tracked at
/// the polynomial level: the induced word span may have strictly smaller
/// dimension (words can vanish for R != 0).
class PolySubcode {
public:
    PolySubcode(const Field& field, int h, std::vector<LinearizedPoly> r_basis);

    const Field& field() const { return *field_; }
    int h() const { return h_; }
    std::size_t r() const { return basis_.size(); }
    const std::vector<LinearizedPoly>& basis() const { return basis_; }
    const std::vector<Codeword>& basis_words() const { return basis_words_; }
    std::size_t word_image_dim() const;

    /// The span element with basis-coordinate mask idx.
    LinearizedPoly span_element(std::uint64_t idx) const;

    /// Visits the 2^r - 1 nonzero span members in Gray order as
    /// (coordinate mask, word bits, word weight).
    void for_each_nonzero_word(
        const std::function<void(std::uint64_t, const BitVec&, std::uint64_t)>& fn) const;

private:
    const Field* field_;
    int h_;
    std::vector<LinearizedPoly> basis_;
    std::vector<Codeword> basis_words_;
};

/// Support size of the word set of D. When the word image has full dimension
/// r, the averaged-weight identity sum(w(d)) / 2^(r-1) is recomputed and must
/// agree.
std::uint64_t subcode_weight(const PolySubcode& d);

/// Whether every nonzero word in the span has weight exactly d1. Degenerate
/// word images are rejected (the caller must not conflate these with
/// zero-word fibre constructions).
bool is_min_weight_subcode(const PolySubcode& d, std::uint64_t d1);

/// d_r from d_1 under an existence witness: (2^r - 1) d_1 / 2^(r-1).
/// The division must be exact.
std::uint64_t ghw_from_min_subcode(std::uint64_t d1, int r);

/// Exact d_r by enumerating r-dimensional word subspaces. Guarded by the
/// Gaussian-binomial candidate count; supports r <= 3 (pairs/triples walk a
/// precomputed table of all codeword supports).
std::uint64_t ghw_exhaustive(const Field& field, int h, int r,
                             std::uint64_t max_candidates = std::uint64_t{1} << 28);

/// Gaussian binomial [k r]_2, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int k, int r);

} // namespace tracecode
