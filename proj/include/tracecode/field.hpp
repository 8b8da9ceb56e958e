#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "tracecode/errors.hpp"

namespace tracecode {

class Field;

/// One element of F_{2^m}, carried together with the field it lives in.
/// The bit mask holds coordinates in the polynomial basis 1, t, ..., t^{m-1}
/// (bit i = coefficient of t^i). Mixing elements of different fields throws.
struct FieldElement {
    std::uint32_t bits = 0;
    const Field* field = nullptr;

    FieldElement operator+(FieldElement o) const;
    FieldElement operator*(FieldElement o) const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement frobenius(int j) const;
    FieldElement inv_frobenius(int j) const;
    int trace() const;
    bool operator==(const FieldElement& o) const = default;
};

/// F_{2^m} for 2 <= m <= 24 over a fixed irreducible modulus. Immutable after
/// construction and shareable across threads; the raw-mask methods are the
/// hot-path API, FieldElement wraps them with field-identity checking.
class Field {
public:
    static constexpr int kMinDegree = 2;
    static constexpr int kMaxDegree = 24;

    /// Builds F_{2^m} with the given modulus bitmask (bit i = coefficient of
    /// t^i; bit m must be set). Throws InvalidArgument if the polynomial is
    /// reducible or has the wrong degree.
    Field(int m, std::uint32_t modulus);

    /// Builds F_{2^m} with the default modulus for m (the smallest-bitmask
    /// irreducible of degree m, re-validated here).
    explicit Field(int m);

    int m() const { return m_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint64_t q() const { return std::uint64_t{1} << m_; }
    std::uint32_t trace_mask() const { return trace_mask_; }

    bool operator==(const Field& o) const { return m_ == o.m_ && modulus_ == o.modulus_; }

    // arithmetic on raw masks
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sqr(std::uint32_t a) const { return mul(a, a); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const; // throws on 0
    /// x^(2^(j mod m)); frobenius(x, m) == x.
    std::uint32_t frobenius(std::uint32_t a, int j) const;
    /// The unique y with y^(2^j) == x, i.e. x^(2^(m - j mod m)).
    std::uint32_t inv_frobenius(std::uint32_t a, int j) const;
    /// Absolute trace to F_2: sum of x^(2^i) for i < m, as a bit.
    int trace(std::uint32_t a) const { return __builtin_parity(a & trace_mask_); }

    FieldElement el(std::uint32_t bits) const;
    FieldElement zero() const { return el(0); }
    FieldElement one() const { return el(1); }
    /// The class of t, i.e. mask 0b10.
    FieldElement gen() const { return el(2); }

    // modulus helpers
    static std::uint32_t default_modulus(int m);
    /// Next irreducible of degree m above the default one (two-model checks).
    static std::uint32_t alternate_modulus(int m);
    /// Exhaustive trial division by all lower-degree polynomials.
    static bool is_irreducible(std::uint64_t poly);

    // serialization
    std::string elem_hex(std::uint32_t a) const;              // "0x1b"
    std::uint32_t elem_from_hex(std::string_view hex) const;  // validates range
    std::string describe() const;                             // "F_{2^7} mod 0x83"

private:
    int m_;
    std::uint32_t modulus_;
    std::uint32_t trace_mask_;
};

std::uint64_t parse_hex_mask(std::string_view hex); // accepts optional "0x"
std::string to_hex_mask(std::uint64_t v);

} // namespace tracecode
