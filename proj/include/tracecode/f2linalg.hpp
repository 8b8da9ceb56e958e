#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracecode/errors.hpp"

namespace tracecode {

/// Packed bit vector (64-bit words, LSB-first). The workhorse for F_2 rows,
/// codewords and evaluation tables; bulk operations go through the runtime
/// selected bit kernels.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits);
    static BitVec from_mask(std::uint64_t mask, std::size_t nbits);

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= bit;
        else words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    BitVec operator^(const BitVec& o) const;
    /// operator^= that also returns the updated popcount in one pass.
    std::uint64_t xor_weight(const BitVec& o);

    std::uint64_t popcount() const;
    bool is_zero() const;
    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    /// Index of the lowest set bit, or -1.
    long first_set() const;
    /// Lowest 64 bits as one word (handy when nbits <= 64).
    std::uint64_t low64() const { return words_.empty() ? 0 : words_[0]; }

    /// Read a slice [lo, lo+len) into a machine word (len <= 32).
    std::uint32_t extract32(std::size_t lo, std::size_t len) const;
    /// Write the low `len` bits of v at offset lo (len <= 32).
    void deposit32(std::size_t lo, std::size_t len, std::uint32_t v);

    /// Bytewise hex, LSB-first: byte k covers bits 8k..8k+7, two lowercase
    /// digits per byte in increasing k.
    std::string to_hex_bytes() const;
    static BitVec from_hex_bytes(std::string_view hex, std::size_t nbits);

private:
    std::vector<std::uint64_t> words_;
    std::size_t nbits_ = 0;
    void clear_tail();
};

/// Dense matrix over F_2 stored as rows of BitVec.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t nrows, std::size_t ncols);
    static F2Matrix from_rows(std::vector<BitVec> rows, std::size_t ncols);

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    BitVec& row(std::size_t i) { return rows_[i]; }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    /// M * v over F_2 (v has ncols bits; result has nrows bits).
    BitVec apply(const BitVec& v) const;

private:
    std::vector<BitVec> rows_;
    std::size_t ncols_ = 0;
};

/// Subspace of F_2^n given by a reduced-row-echelon basis (pivot columns
/// strictly increasing, each pivot the only 1 in its column among the basis).
class F2Subspace {
public:
    F2Subspace() = default;
    explicit F2Subspace(std::size_t ambient) : ambient_(ambient) {}
    static F2Subspace span_of(const std::vector<BitVec>& vecs, std::size_t ambient);
    static F2Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BitVec>& basis() const { return basis_; }

    /// Eliminates v against the basis; zero residual means membership.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

    /// Adds v if independent of the current basis, keeping the RREF shape.
    /// Returns whether the dimension grew.
    bool insert(BitVec v);

    /// The element whose basis-coordinate mask is `index` (for enumeration of
    /// small subspaces; index < 2^dim).
    BitVec element(std::uint64_t index) const;

private:
    std::vector<BitVec> basis_;
    std::size_t ambient_ = 0;
};

std::size_t rank(const F2Matrix& m);
/// Null space {v : M v = 0} as a subspace of F_2^ncols.
F2Subspace kernel(const F2Matrix& m);
/// Row space with RREF basis.
F2Subspace row_space(const F2Matrix& m);

struct AffineSolution {
    BitVec particular;
    F2Subspace homogeneous;
};
/// Solves M v = rhs; nullopt when inconsistent (distinct from a solvable
/// system with trivial kernel).
std::optional<AffineSolution> solve_affine(const F2Matrix& m, const BitVec& rhs);

/// Truth table of x -> parity(mask & x) over x in [0, 2^nvars), packed with
/// bit x = value at x. Built by block doubling, not per-point evaluation.
BitVec linear_functional_table(std::uint32_t mask, int nvars);

} // namespace tracecode
