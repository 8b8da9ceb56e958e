#include "tracecode/quadform.hpp"

#include <algorithm>
#include <bit>

namespace tracecode {

namespace {
// classification double-checks against enumeration up to this field size
constexpr int kDualPathDegree = 16;
} // namespace

const char* to_string(FormKind k) {
    switch (k) {
        case FormKind::hyperbolic: return "hyperbolic";
        case FormKind::elliptic: return "elliptic";
        case FormKind::odd_rank: return "odd-rank";
    }
    return "?";
}

QuadraticForm QuadraticForm::from_poly(LinearizedPoly r) {
    QuadraticForm q;
    q.field_ = &r.field();
    q.poly_ = std::move(r);
    return q;
}

QuadraticForm QuadraticForm::from_pairs(const Field& field, std::vector<std::uint32_t> a,
                                        std::vector<std::uint32_t> b) {
    if (a.size() != b.size()) throw InvalidArgument("pair form needs equally long a and b lists");
    for (std::uint32_t x : a)
        if (x >= field.q()) throw InvalidArgument("pair element out of range");
    for (std::uint32_t x : b)
        if (x >= field.q()) throw InvalidArgument("pair element out of range");
    QuadraticForm q;
    q.field_ = &field;
    q.a_ = std::move(a);
    q.b_ = std::move(b);
    return q;
}

QuadraticForm pair_form(const Field& field, std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
    return QuadraticForm::from_pairs(field, std::move(a), std::move(b));
}

const LinearizedPoly& QuadraticForm::poly() const {
    if (!poly_) throw InvalidArgument("form has no polynomial source");
    return *poly_;
}

int QuadraticForm::eval(std::uint32_t x) const {
    const Field& f = *field_;
    if (poly_) return f.trace(f.mul(x, poly_->eval(x)));
    int acc = 0;
    for (std::size_t i = 0; i < a_.size(); ++i)
        acc ^= f.trace(f.mul(a_[i], x)) & f.trace(f.mul(b_[i], x));
    return acc;
}

int QuadraticForm::bilinear(std::uint32_t x, std::uint32_t y) const {
    return eval(x ^ y) ^ eval(x) ^ eval(y);
}

std::vector<std::uint32_t> QuadraticForm::bilinear_rows() const {
    int m = field_->m();
    // cache Q on the basis once; B(t^i, t^j) = Q(t^i + t^j) + Q(t^i) + Q(t^j)
    std::vector<int> qh(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) qh[static_cast<std::size_t>(i)] = eval(std::uint32_t{1} << i);
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int bij = eval((std::uint32_t{1} << i) ^ (std::uint32_t{1} << j)) ^
                      qh[static_cast<std::size_t>(i)] ^ qh[static_cast<std::size_t>(j)];
            if (bij) {
                rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
            }
        }
    return rows;
}

F2Subspace QuadraticForm::radical() const {
    int m = field_->m();
    std::vector<std::uint32_t> rows = bilinear_rows();
    F2Matrix bmat(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        bmat.row(static_cast<std::size_t>(i)) = BitVec::from_mask(rows[static_cast<std::size_t>(i)],
                                                                  static_cast<std::size_t>(m));
    return kernel(bmat);
}

F2Subspace QuadraticForm::radical_zero() const {
    F2Subspace w = radical();
    int m = field_->m();
    // Q restricted to W is F_2-linear (B vanishes there); its kernel is W_0
    std::vector<int> vals;
    vals.reserve(w.dim());
    std::size_t pivot_one = w.dim();
    for (std::size_t i = 0; i < w.dim(); ++i) {
        vals.push_back(eval(w.basis()[i].extract32(0, static_cast<std::size_t>(m))));
        if (vals.back() && pivot_one == w.dim()) pivot_one = i;
    }
    if (pivot_one == w.dim()) return w; // Q vanishes on W
    std::vector<BitVec> gen;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        if (i == pivot_one) continue;
        BitVec v = w.basis()[i];
        if (vals[i]) v ^= w.basis()[pivot_one];
        gen.push_back(std::move(v));
    }
    return F2Subspace::span_of(gen, static_cast<std::size_t>(m));
}

BitVec QuadraticForm::eval_table() const {
    const Field& f = *field_;
    std::size_t q = f.q();
    if (!poly_) {
        // AND of the two linear-functional tables per pair, XORed together
        BitVec acc(q);
        for (std::size_t i = 0; i < a_.size(); ++i) {
            std::uint32_t ma = 0, mb = 0;
            for (int j = 0; j < f.m(); ++j) {
                if (f.trace(f.mul(a_[i], std::uint32_t{1} << j))) ma |= std::uint32_t{1} << j;
                if (f.trace(f.mul(b_[i], std::uint32_t{1} << j))) mb |= std::uint32_t{1} << j;
            }
            BitVec ta = linear_functional_table(ma, f.m());
            BitVec tb = linear_functional_table(mb, f.m());
            for (std::size_t w = 0; w < acc.word_count(); ++w)
                acc.data()[w] ^= ta.data()[w] & tb.data()[w];
        }
        return acc;
    }
    BitVec t(q);
    for (std::uint32_t x = 0; x < q; ++x)
        if (f.trace(f.mul(x, poly_->eval(x)))) t.set(x, true);
    return t;
}

bool QuadraticForm::same_form(const QuadraticForm& o) const {
    if (!(*field_ == *o.field_)) return false;
    return eval_table() == o.eval_table();
}

FormClassification QuadraticForm::classify() const {
    const Field& f = *field_;
    const int m = f.m();
    const std::int64_t q = static_cast<std::int64_t>(f.q());

    F2Subspace w_space = radical();
    F2Subspace w0_space = radical_zero();
    int w = static_cast<int>(w_space.dim());
    int w0 = static_cast<int>(w0_space.dim());

    FormClassification c{};
    c.w = w;
    c.w0 = w0;
    if ((m - w) % 2 != 0) throw InternalCheckFailure("radical has wrong parity");

    if (w0 != w) {
        c.rank = m - w + 1;
        c.kind = FormKind::odd_rank;
        c.zeros = q / 2;
    } else {
        c.rank = m - w;
        // complement of W: standard basis vectors away from the pivots
        std::vector<std::uint32_t> comp;
        {
            std::vector<bool> pivot(static_cast<std::size_t>(m), false);
            for (const BitVec& b : w_space.basis()) {
                long p = b.first_set();
                pivot[static_cast<std::size_t>(p)] = true;
            }
            for (int i = 0; i < m; ++i)
                if (!pivot[static_cast<std::size_t>(i)]) comp.push_back(std::uint32_t{1} << i);
        }
        // symplectic pairing on the complement; Arf = sum of Q(u)Q(v)
        std::vector<std::uint32_t> rows = bilinear_rows();
        auto bform = [&](std::uint32_t x, std::uint32_t y) {
            int acc = 0;
            while (x) {
                int i = std::countr_zero(x);
                x &= x - 1;
                acc ^= __builtin_parity(rows[static_cast<std::size_t>(i)] & y);
            }
            return acc;
        };
        int arf = 0;
        std::vector<std::uint32_t> rest = comp;
        while (!rest.empty()) {
            std::uint32_t u = rest.front();
            rest.erase(rest.begin());
            std::size_t vi = rest.size();
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (bform(u, rest[i])) {
                    vi = i;
                    break;
                }
            if (vi == rest.size())
                throw InternalCheckFailure("degenerate pairing on radical complement");
            std::uint32_t v = rest[vi];
            rest.erase(rest.begin() + static_cast<long>(vi));
            for (std::uint32_t& x : rest) {
                if (bform(x, v)) x ^= u;
                if (bform(x, u)) x ^= v;
            }
            arf ^= eval(u) & eval(v);
        }
        std::int64_t half = std::int64_t{1} << ((m + w) / 2); // sqrt(q * 2^w), exact
        c.kind = arf ? FormKind::elliptic : FormKind::hyperbolic;
        c.zeros = arf ? (q - half) / 2 : (q + half) / 2;
    }

    // radical bound for forms with a polynomial source of genuine degree
    if (poly_ && poly_->top_index() >= 1 && w > 2 * poly_->top_index())
        throw InternalCheckFailure("radical larger than twice the polynomial degree index");

    if (m <= kDualPathDegree) {
        std::int64_t counted = q - static_cast<std::int64_t>(eval_table().popcount());
        if (counted != c.zeros)
            throw InternalCheckFailure("classification disagrees with enumerated zero count");
    }
    return c;
}

std::int64_t zero_count_exhaustive(const QuadraticForm& q) {
    const Field& f = q.field();
    if (f.m() > 20)
        throw CostGuardExceeded("zero_count_exhaustive limited to m <= 20, got m=" + std::to_string(f.m()));
    std::int64_t zeros = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        if (q.eval(x) == 0) ++zeros;
    return zeros;
}

} // namespace tracecode
