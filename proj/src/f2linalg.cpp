#include "tracecode/f2linalg.hpp"

#include <algorithm>
#include <bit>

#include "tracecode/bitkernels.hpp"

namespace tracecode {

BitVec::BitVec(std::size_t nbits) : words_((nbits + 63) / 64, 0), nbits_(nbits) {}

BitVec BitVec::from_mask(std::uint64_t mask, std::size_t nbits) {
    BitVec v(nbits);
    if (!v.words_.empty()) v.words_[0] = mask;
    v.clear_tail();
    return v;
}

void BitVec::clear_tail() {
    if (nbits_ % 64 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (nbits_ != o.nbits_) throw InvalidArgument("BitVec size mismatch in xor");
    bitk::active().xor_into(words_.data(), o.words_.data(), words_.size());
    return *this;
}

BitVec BitVec::operator^(const BitVec& o) const {
    BitVec r = *this;
    r ^= o;
    return r;
}

std::uint64_t BitVec::xor_weight(const BitVec& o) {
    if (nbits_ != o.nbits_) throw InvalidArgument("BitVec size mismatch in xor");
    return bitk::active().xor_popcount_into(words_.data(), o.words_.data(), words_.size());
}

std::uint64_t BitVec::popcount() const {
    return bitk::active().popcount(words_.data(), words_.size());
}

bool BitVec::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

long BitVec::first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<long>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return -1;
}

std::uint32_t BitVec::extract32(std::size_t lo, std::size_t len) const {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < len; ++i)
        if (get(lo + i)) v |= std::uint32_t{1} << i;
    return v;
}

void BitVec::deposit32(std::size_t lo, std::size_t len, std::uint32_t v) {
    for (std::size_t i = 0; i < len; ++i) set(lo + i, (v >> i) & 1);
}

std::string BitVec::to_hex_bytes() const {
    static const char* digits = "0123456789abcdef";
    std::size_t nbytes = (nbits_ + 7) / 8;
    std::string out(nbytes * 2, '0');
    for (std::size_t k = 0; k < nbytes; ++k) {
        unsigned byte = static_cast<unsigned>((words_[k / 8] >> ((k % 8) * 8)) & 0xff);
        out[2 * k] = digits[byte >> 4];
        out[2 * k + 1] = digits[byte & 0xf];
    }
    return out;
}

BitVec BitVec::from_hex_bytes(std::string_view hex, std::size_t nbits) {
    std::size_t nbytes = (nbits + 7) / 8;
    if (hex.size() != nbytes * 2)
        throw InvalidArgument("hex word has wrong length: expected " + std::to_string(nbytes * 2) +
                              " digits, got " + std::to_string(hex.size()));
    auto digit = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw InvalidArgument("bad hex digit");
    };
    BitVec v(nbits);
    for (std::size_t k = 0; k < nbytes; ++k) {
        std::uint64_t byte = digit(hex[2 * k]) << 4 | digit(hex[2 * k + 1]);
        v.words_[k / 8] |= byte << ((k % 8) * 8);
    }
    v.clear_tail();
    return v;
}

F2Matrix::F2Matrix(std::size_t nrows, std::size_t ncols)
    : rows_(nrows, BitVec(ncols)), ncols_(ncols) {}

F2Matrix F2Matrix::from_rows(std::vector<BitVec> rows, std::size_t ncols) {
    F2Matrix m;
    for (const BitVec& r : rows)
        if (r.size() != ncols) throw InvalidArgument("row width mismatch");
    m.rows_ = std::move(rows);
    m.ncols_ = ncols;
    return m;
}

BitVec F2Matrix::apply(const BitVec& v) const {
    if (v.size() != ncols_) throw InvalidArgument("matrix-vector size mismatch");
    BitVec out(nrows());
    for (std::size_t i = 0; i < nrows(); ++i)
        out.set(i, bitk::active().and_popcount(rows_[i].data(), v.data(), rows_[i].word_count()) & 1);
    return out;
}

namespace {

// In-place forward + backward elimination. Returns pivot columns in order.
std::vector<std::size_t> rref_rows(std::vector<BitVec>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size(), BitVec(ncols));
    return pivots;
}

} // namespace

F2Subspace F2Subspace::span_of(const std::vector<BitVec>& vecs, std::size_t ambient) {
    std::vector<BitVec> rows;
    rows.reserve(vecs.size());
    for (const BitVec& v : vecs) {
        if (v.size() != ambient) throw InvalidArgument("vector width mismatch in span");
        rows.push_back(v);
    }
    rref_rows(rows, ambient);
    F2Subspace s(ambient);
    s.basis_ = std::move(rows);
    return s;
}

F2Subspace F2Subspace::full(std::size_t ambient) {
    std::vector<BitVec> rows;
    rows.reserve(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        BitVec e(ambient);
        e.set(i, true);
        rows.push_back(std::move(e));
    }
    F2Subspace s(ambient);
    s.basis_ = std::move(rows);
    return s;
}

BitVec F2Subspace::reduce(BitVec v) const {
    if (v.size() != ambient_) throw InvalidArgument("vector width mismatch in reduce");
    for (const BitVec& b : basis_) {
        long p = b.first_set();
        if (p >= 0 && v.get(static_cast<std::size_t>(p))) v ^= b;
    }
    return v;
}

bool F2Subspace::insert(BitVec v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    long pv = v.first_set();
    // keep RREF: clear column pv in existing rows, insert sorted by pivot
    for (BitVec& b : basis_)
        if (b.get(static_cast<std::size_t>(pv))) b ^= v;
    auto pos = std::find_if(basis_.begin(), basis_.end(),
                            [&](const BitVec& b) { return b.first_set() > pv; });
    basis_.insert(pos, std::move(v));
    return true;
}

BitVec F2Subspace::element(std::uint64_t index) const {
    BitVec v(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if ((index >> i) & 1) v ^= basis_[i];
    return v;
}

std::size_t rank(const F2Matrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));
    return rref_rows(rows, m.ncols()).size();
}

F2Subspace row_space(const F2Matrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));
    return F2Subspace::span_of(rows, m.ncols());
}

F2Subspace kernel(const F2Matrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));
    std::vector<std::size_t> pivots = rref_rows(rows, m.ncols());

    std::vector<bool> is_pivot(m.ncols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t c = 0; c < m.ncols(); ++c) {
        if (is_pivot[c]) continue;
        BitVec v(m.ncols());
        v.set(c, true);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (rows[r].get(c)) v.set(pivots[r], true);
        basis.push_back(std::move(v));
    }
    return F2Subspace::span_of(basis, m.ncols());
}

std::optional<AffineSolution> solve_affine(const F2Matrix& m, const BitVec& rhs) {
    if (rhs.size() != m.nrows()) throw InvalidArgument("rhs size mismatch");
    // eliminate on [M | rhs]
    std::vector<BitVec> rows;
    rows.reserve(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        BitVec r(m.ncols() + 1);
        for (std::size_t w = 0; w < m.row(i).word_count(); ++w) r.data()[w] = m.row(i).data()[w];
        r.set(m.ncols(), rhs.get(i));
        rows.push_back(std::move(r));
    }
    std::vector<std::size_t> pivots = rref_rows(rows, m.ncols() + 1);
    if (!pivots.empty() && pivots.back() == m.ncols()) return std::nullopt; // 0 = 1 row

    BitVec particular(m.ncols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (rows[r].get(m.ncols())) particular.set(pivots[r], true);
    return AffineSolution{std::move(particular), kernel(m)};
}

BitVec linear_functional_table(std::uint32_t mask, int nvars) {
    if (nvars < 0 || nvars > 30) throw InvalidArgument("linear_functional_table: nvars out of range");
    std::size_t n = std::size_t{1} << nvars;
    BitVec t(n);
    // double the filled prefix once per variable; complement the new half
    // when that variable occurs in the functional
    std::size_t filled = 1;
    for (int i = 0; i < nvars; ++i) {
        bool comp = (mask >> i) & 1;
        if (filled < 64) {
            std::uint64_t lo = t.data()[0] & ((filled == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << filled) - 1));
            std::uint64_t hi = comp ? ~lo : lo;
            hi &= (filled == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << filled) - 1);
            t.data()[0] = lo | (hi << filled);
        } else {
            std::size_t wfill = filled / 64;
            for (std::size_t w = 0; w < wfill; ++w)
                t.data()[wfill + w] = comp ? ~t.data()[w] : t.data()[w];
        }
        filled <<= 1;
    }
    // bits beyond nbits stay zero by construction (filled == n)
    return t;
}

} // namespace tracecode
