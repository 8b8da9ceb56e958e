#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tracecode/f2linalg.hpp"
#include "tracecode/field.hpp"

namespace tracecode {

/// R(x) = sum of a_i x^(2^i) for i = 0..h, an additive map on F_q.
/// The declared bound h is part of the value: trailing zero coefficients are
/// kept so a polynomial remembers which R_h it was drawn from.
class LinearizedPoly {
public:
    LinearizedPoly(const Field& field, std::vector<std::uint32_t> coeffs);
    static LinearizedPoly zero(const Field& field, int h);
    static LinearizedPoly monomial(const Field& field, int i, std::uint32_t c);

    const Field& field() const { return *field_; }
    int bound() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const std::uint32_t> coeffs() const { return coeffs_; }
    std::uint32_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    bool is_zero() const;
    /// Largest i with a_i != 0, or -1 for the zero polynomial.
    int top_index() const;
    /// 2^top_index; nullopt for the zero polynomial.
    std::optional<std::uint64_t> effective_degree() const;

    std::uint32_t eval(std::uint32_t x) const;

    LinearizedPoly operator+(const LinearizedPoly& o) const;
    bool operator==(const LinearizedPoly& o) const;

    /// Flattened F_2 coordinates: bit i*m + j is bit j of a_i.
    BitVec to_bits() const;
    static LinearizedPoly from_bits(const Field& field, const BitVec& bits, int h);

    std::vector<std::string> coeffs_hex() const;

private:
    const Field* field_;
    std::vector<std::uint32_t> coeffs_;
};

/// Additive map on tuples over F_q: reads k elements, writes l elements.
using TupleMap = std::function<void(std::span<const std::uint32_t>, std::span<std::uint32_t>)>;

/// F_2 matrix of an additive map F_q^k -> F_q^l in polynomial-basis
/// coordinates (lm rows, km columns; component j of a tuple occupies bits
/// j*m..j*m+m-1). Built column-by-column from the km basis tuples; when
/// self_check is set the matrix action is compared against f on random
/// tuples, trapping callers that pass a non-additive map.
F2Matrix map_matrix(const Field& field, int k, int l, const TupleMap& f, bool self_check = true);

/// Solution space {v in F_q^k : f(v) = 0} as km-bit vectors.
F2Subspace solve_linearized_system(const Field& field, int k, int l, const TupleMap& f);

/// Helpers for the flattened tuple layout.
std::vector<std::uint32_t> unflatten_tuple(const Field& field, const BitVec& bits, int k);
BitVec flatten_tuple(const Field& field, std::span<const std::uint32_t> tuple);

} // namespace tracecode
