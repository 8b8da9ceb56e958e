#include "tracecode/field.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <sstream>

namespace tracecode {

namespace {

// Smallest irreducible bitmask per degree, re-validated on every Field
// construction so a table typo cannot survive startup.
constexpr std::array<std::uint32_t, 25> kDefaultModulus = {
    0, 0,
    0x7,       // m=2
    0xb,       // m=3
    0x13,      // m=4
    0x25,      // m=5
    0x43,      // m=6
    0x83,      // m=7
    0x11b,     // m=8
    0x203,     // m=9
    0x409,     // m=10
    0x805,     // m=11
    0x1009,    // m=12
    0x201b,    // m=13
    0x4021,    // m=14
    0x8003,    // m=15
    0x1002b,   // m=16
    0x20009,   // m=17
    0x40009,   // m=18
    0x80027,   // m=19
    0x100009,  // m=20
    0x200005,  // m=21
    0x400003,  // m=22
    0x800021,  // m=23
    0x100001b, // m=24
};

int poly_degree(std::uint64_t p) { return p ? std::bit_width(p) - 1 : -1; }

// remainder of f by g over F_2
std::uint64_t poly_mod(std::uint64_t f, std::uint64_t g) {
    int dg = poly_degree(g);
    while (poly_degree(f) >= dg) f ^= g << (poly_degree(f) - dg);
    return f;
}

} // namespace

bool Field::is_irreducible(std::uint64_t poly) {
    int d = poly_degree(poly);
    if (d < 1) return false;
    if (d == 1) return true;
    for (int e = 1; e <= d / 2; ++e)
        for (std::uint64_t g = std::uint64_t{1} << e; g < std::uint64_t{2} << e; ++g)
            if (poly_mod(poly, g) == 0) return false;
    return true;
}

std::uint32_t Field::default_modulus(int m) {
    if (m < kMinDegree || m > kMaxDegree)
        throw InvalidArgument("field degree m must be in [2, 24], got " + std::to_string(m));
    return kDefaultModulus[static_cast<std::size_t>(m)];
}

std::uint32_t Field::alternate_modulus(int m) {
    std::uint32_t start = default_modulus(m) + 1;
    std::uint32_t limit = std::uint32_t{2} << m;
    for (std::uint32_t p = start; p < limit; ++p)
        if (is_irreducible(p)) return p;
    throw InvalidArgument("degree " + std::to_string(m) + " has a single irreducible polynomial");
}

Field::Field(int m, std::uint32_t modulus) : m_(m), modulus_(modulus), trace_mask_(0) {
    if (m < kMinDegree || m > kMaxDegree)
        throw InvalidArgument("field degree m must be in [2, 24], got " + std::to_string(m));
    if (poly_degree(modulus) != m)
        throw InvalidArgument("modulus " + to_hex_mask(modulus) + " does not have degree " + std::to_string(m));
    if (!is_irreducible(modulus))
        throw InvalidArgument("modulus " + to_hex_mask(modulus) + " is reducible over F_2");
    for (int i = 0; i < m_; ++i) {
        // trace of the basis element t^i
        std::uint32_t x = (i < 31) ? (std::uint32_t{1} << i) : 0;
        std::uint32_t s = 0, p = x;
        for (int j = 0; j < m_; ++j) {
            s ^= p;
            p = mul(p, p);
        }
        // s is 0 or 1 here: the trace lands in the prime field
        if (s & ~1u) throw InternalCheckFailure("trace of basis element not in F_2");
        if (s) trace_mask_ |= std::uint32_t{1} << i;
    }
}

Field::Field(int m) : Field(m, default_modulus(m)) {}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    // carry-less multiply, then reduce; intermediate degree <= 2m-2 < 48
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int d = 2 * m_ - 2; d >= m_; --d)
        if ((acc >> d) & 1) acc ^= std::uint64_t{modulus_} << (d - m_);
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw InvalidArgument("inverse of zero");
    return pow(a, q() - 2);
}

std::uint32_t Field::frobenius(std::uint32_t a, int j) const {
    if (j < 0) throw InvalidArgument("frobenius power must be non-negative");
    for (int i = 0, n = j % m_; i < n; ++i) a = mul(a, a);
    return a;
}

std::uint32_t Field::inv_frobenius(std::uint32_t a, int j) const {
    if (j < 0) throw InvalidArgument("frobenius power must be non-negative");
    int n = j % m_;
    return n == 0 ? a : frobenius(a, m_ - n);
}

FieldElement Field::el(std::uint32_t bits) const {
    if (bits >= q()) throw InvalidArgument("element mask " + to_hex_mask(bits) + " out of range for m=" + std::to_string(m_));
    return FieldElement{bits, this};
}

std::string Field::elem_hex(std::uint32_t a) const { return to_hex_mask(a); }

std::uint32_t Field::elem_from_hex(std::string_view hex) const {
    std::uint64_t v = parse_hex_mask(hex);
    if (v >= q()) throw InvalidArgument("element " + std::string(hex) + " out of range for m=" + std::to_string(m_));
    return static_cast<std::uint32_t>(v);
}

std::string Field::describe() const {
    return "F_{2^" + std::to_string(m_) + "} mod " + to_hex_mask(modulus_);
}

namespace {
const Field& check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field || !b.field) throw FieldMismatch("element without a field");
    if (!(*a.field == *b.field)) throw FieldMismatch();
    return *a.field;
}
} // namespace

FieldElement FieldElement::operator+(FieldElement o) const {
    const Field& f = check_same(*this, o);
    return FieldElement{f.add(bits, o.bits), &f};
}

FieldElement FieldElement::operator*(FieldElement o) const {
    const Field& f = check_same(*this, o);
    return FieldElement{f.mul(bits, o.bits), &f};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    return FieldElement{field->pow(bits, e), field};
}

FieldElement FieldElement::frobenius(int j) const {
    return FieldElement{field->frobenius(bits, j), field};
}

FieldElement FieldElement::inv_frobenius(int j) const {
    return FieldElement{field->inv_frobenius(bits, j), field};
}

int FieldElement::trace() const { return field->trace(bits); }

std::uint64_t parse_hex_mask(std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    if (hex.empty() || hex.size() > 16) throw InvalidArgument("bad hex mask: '" + std::string(hex) + "'");
    std::uint64_t v = 0;
    for (char c : hex) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw InvalidArgument("bad hex digit in mask: '" + std::string(1, c) + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

std::string to_hex_mask(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

} // namespace tracecode
