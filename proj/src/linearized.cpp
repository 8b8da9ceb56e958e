#include "tracecode/linearized.hpp"

#include <random>

namespace tracecode {

LinearizedPoly::LinearizedPoly(const Field& field, std::vector<std::uint32_t> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidArgument("linearized polynomial needs at least a_0");
    for (std::uint32_t c : coeffs_)
        if (c >= field.q()) throw InvalidArgument("coefficient out of range for the field");
}

LinearizedPoly LinearizedPoly::zero(const Field& field, int h) {
    if (h < 0) throw InvalidArgument("negative degree bound");
    return LinearizedPoly(field, std::vector<std::uint32_t>(static_cast<std::size_t>(h) + 1, 0));
}

LinearizedPoly LinearizedPoly::monomial(const Field& field, int i, std::uint32_t c) {
    LinearizedPoly p = zero(field, i);
    p.coeffs_[static_cast<std::size_t>(i)] = c;
    return p;
}

bool LinearizedPoly::is_zero() const { return top_index() < 0; }

int LinearizedPoly::top_index() const {
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        if (coeffs_[static_cast<std::size_t>(i)]) return i;
    return -1;
}

std::optional<std::uint64_t> LinearizedPoly::effective_degree() const {
    int t = top_index();
    if (t < 0) return std::nullopt;
    return std::uint64_t{1} << t;
}

std::uint32_t LinearizedPoly::eval(std::uint32_t x) const {
    std::uint32_t acc = 0;
    std::uint32_t xx = x; // x^(2^i)
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i]) acc ^= field_->mul(coeffs_[i], xx);
        xx = field_->mul(xx, xx);
    }
    return acc;
}

LinearizedPoly LinearizedPoly::operator+(const LinearizedPoly& o) const {
    if (!(*field_ == *o.field_)) throw FieldMismatch();
    std::vector<std::uint32_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) ^ o.coeff(i);
    return LinearizedPoly(*field_, std::move(c));
}

bool LinearizedPoly::operator==(const LinearizedPoly& o) const {
    if (!(*field_ == *o.field_)) return false;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (coeff(i) != o.coeff(i)) return false;
    return true;
}

BitVec LinearizedPoly::to_bits() const {
    int m = field_->m();
    BitVec v(coeffs_.size() * static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v.deposit32(i * static_cast<std::size_t>(m), static_cast<std::size_t>(m), coeffs_[i]);
    return v;
}

LinearizedPoly LinearizedPoly::from_bits(const Field& field, const BitVec& bits, int h) {
    int m = field.m();
    std::size_t want = (static_cast<std::size_t>(h) + 1) * static_cast<std::size_t>(m);
    if (bits.size() != want) throw InvalidArgument("flattened polynomial has wrong bit length");
    std::vector<std::uint32_t> c(static_cast<std::size_t>(h) + 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = bits.extract32(i * static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    return LinearizedPoly(field, std::move(c));
}

std::vector<std::string> LinearizedPoly::coeffs_hex() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (std::uint32_t c : coeffs_) out.push_back(field_->elem_hex(c));
    return out;
}

std::vector<std::uint32_t> unflatten_tuple(const Field& field, const BitVec& bits, int k) {
    int m = field.m();
    if (bits.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(m))
        throw InvalidArgument("flattened tuple has wrong bit length");
    std::vector<std::uint32_t> t(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        t[static_cast<std::size_t>(j)] =
            bits.extract32(static_cast<std::size_t>(j) * static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    return t;
}

BitVec flatten_tuple(const Field& field, std::span<const std::uint32_t> tuple) {
    int m = field.m();
    BitVec v(tuple.size() * static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < tuple.size(); ++j)
        v.deposit32(j * static_cast<std::size_t>(m), static_cast<std::size_t>(m), tuple[j]);
    return v;
}

F2Matrix map_matrix(const Field& field, int k, int l, const TupleMap& f, bool self_check) {
    if (k < 0 || l < 0) throw InvalidArgument("map_matrix: negative arity");
    int m = field.m();
    std::size_t cols = static_cast<std::size_t>(k) * static_cast<std::size_t>(m);
    std::size_t rows = static_cast<std::size_t>(l) * static_cast<std::size_t>(m);
    F2Matrix mat(rows, cols);

    std::vector<std::uint32_t> in(static_cast<std::size_t>(k), 0);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(l), 0);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < m; ++i) {
            in[static_cast<std::size_t>(j)] = std::uint32_t{1} << i;
            f(in, out);
            std::size_t col = static_cast<std::size_t>(j) * static_cast<std::size_t>(m) + static_cast<std::size_t>(i);
            for (int jj = 0; jj < l; ++jj)
                for (int ii = 0; ii < m; ++ii)
                    if ((out[static_cast<std::size_t>(jj)] >> ii) & 1)
                        mat.set(static_cast<std::size_t>(jj) * static_cast<std::size_t>(m) + static_cast<std::size_t>(ii),
                                col, true);
            in[static_cast<std::size_t>(j)] = 0;
        }
    }

    if (self_check && k > 0) {
        std::mt19937_64 rng(0x5eedc0deULL);
        for (int trial = 0; trial < 100; ++trial) {
            BitVec v(cols);
            for (std::size_t b = 0; b < cols; ++b) v.set(b, (rng() >> 13) & 1);
            std::vector<std::uint32_t> tup = unflatten_tuple(field, v, k);
            f(tup, out);
            BitVec expect = flatten_tuple(field, std::span<const std::uint32_t>(out.data(), out.size()));
            if (!(mat.apply(v) == expect))
                throw InternalCheckFailure("map_matrix: map is not additive (matrix action disagrees)");
        }
    }
    return mat;
}

F2Subspace solve_linearized_system(const Field& field, int k, int l, const TupleMap& f) {
    return kernel(map_matrix(field, k, l, f));
}

} // namespace tracecode
