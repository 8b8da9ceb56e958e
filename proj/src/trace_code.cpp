#include "tracecode/trace_code.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "tracecode/bitkernels.hpp"

namespace tracecode {

Codeword word_of(const LinearizedPoly& r) {
    const Field& f = r.field();
    std::size_t len = static_cast<std::size_t>(f.q()) - 1;
    Codeword w{BitVec(len), 0};
    for (std::uint32_t x = 1; x < f.q(); ++x)
        if (f.trace(f.mul(x, r.eval(x)))) w.bits.set(x - 1, true);
    w.weight = w.bits.popcount();
    return w;
}

TraceCode::TraceCode(const Field& field, int h, std::uint64_t max_bits) : field_(&field), h_(h) {
    if (h < 0) throw InvalidArgument("negative h");
    int m = field.m();
    std::uint64_t k = static_cast<std::uint64_t>(h + 1) * static_cast<std::uint64_t>(m);
    std::uint64_t bits = (field.q() - 1) * k;
    if (bits > max_bits)
        throw CostGuardExceeded("trace code materialization needs " + std::to_string(bits) +
                                " bits, guard is " + std::to_string(max_bits));

    generators_.reserve(k);
    for (int i = 0; i <= h; ++i)
        for (int j = 0; j < m; ++j)
            generators_.push_back(word_of(LinearizedPoly::monomial(field, i, std::uint32_t{1} << j)));

    // eliminate generator words with an identity tag to read off the kernel
    std::size_t len = length();
    std::vector<BitVec> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        BitVec row(len + k);
        for (std::size_t w = 0; w < generators_[i].bits.word_count(); ++w)
            row.data()[w] = generators_[i].bits.data()[w];
        // clear_tail not needed: word part had its tail clean already
        row.set(len + i, true);
        rows.push_back(std::move(row));
    }
    std::size_t rr = 0;
    for (std::size_t c = 0; c < len && rr < rows.size(); ++c) {
        std::size_t sel = rr;
        while (sel < rows.size() && !rows[sel].get(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rr], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rr && rows[i].get(c)) rows[i] ^= rows[rr];
        ++rr;
    }
    dim_ = static_cast<int>(rr);
    basis_words_.reserve(rr);
    for (std::size_t i = 0; i < rr; ++i) {
        Codeword cw{BitVec(len), 0};
        for (std::size_t w = 0; w < cw.bits.word_count(); ++w) cw.bits.data()[w] = rows[i].data()[w];
        // mask off tag bits that share the last word
        if (len % 64) cw.bits.data()[(len - 1) / 64] &= (std::uint64_t{1} << (len % 64)) - 1;
        cw.weight = cw.bits.popcount();
        basis_words_.push_back(std::move(cw));
    }
    std::vector<BitVec> ker;
    for (std::size_t i = rr; i < rows.size(); ++i) {
        BitVec tag(k);
        for (std::size_t b = 0; b < k; ++b) tag.set(b, rows[i].get(len + b));
        ker.push_back(std::move(tag));
    }
    word_kernel_ = F2Subspace::span_of(ker, k);
}

Codeword TraceCode::word_from_flat(const BitVec& rbits) const {
    if (rbits.size() != generators_.size()) throw InvalidArgument("flattened R has wrong bit length");
    Codeword w{BitVec(length()), 0};
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (rbits.get(i)) w.bits ^= generators_[i].bits;
    w.weight = w.bits.popcount();
    return w;
}

std::optional<std::uint64_t> min_weight_formula(const Field& field, int h) {
    int m = field.m();
    std::uint64_t q = field.q();
    if (m % 2 == 1 && h >= 1 && h <= (m - 1) / 2)
        return (q - (std::uint64_t{1} << ((m + 2 * h - 1) / 2))) / 2;
    if (m % 2 == 0 && h >= 1 && h < m / 2)
        return (q - (std::uint64_t{1} << ((m + 2 * h) / 2))) / 2;
    return std::nullopt;
}

namespace {

std::uint64_t gray(std::uint64_t n) { return n ^ (n >> 1); }

// One worker of the minimum-weight sweep over states [lo, hi).
std::uint64_t sweep_range(const TraceCode& code, std::uint64_t lo, std::uint64_t hi) {
    std::size_t nwords = (code.length() + 63) / 64;
    std::vector<std::uint64_t> cur(nwords, 0);
    std::uint64_t start = gray(lo - 1);
    for (std::size_t i = 0; i < code.generator_count(); ++i)
        if ((start >> i) & 1)
            bitk::active().xor_into(cur.data(), code.generator(i).bits.data(), nwords);

    const bitk::Kernels& k = bitk::active();
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t n = lo; n < hi; ++n) {
        int flip = std::countr_zero(n);
        std::uint64_t w = k.xor_popcount_into(cur.data(), code.generator(static_cast<std::size_t>(flip)).bits.data(), nwords);
        if (w && w < best) best = w;
    }
    return best;
}

} // namespace

std::uint64_t min_weight_exhaustive(const Field& field, int h, const SweepOptions& opt) {
    int m = field.m();
    std::uint64_t kbits = static_cast<std::uint64_t>(h + 1) * static_cast<std::uint64_t>(m);
    if (kbits >= 63 || (std::uint64_t{1} << kbits) > opt.max_words)
        throw CostGuardExceeded("minimum-weight sweep over q^(h+1) = 2^" + std::to_string(kbits) +
                                " words exceeds the guard of " + std::to_string(opt.max_words));
    TraceCode code(field, h);
    std::uint64_t total = std::uint64_t{1} << kbits;

    int jobs = std::clamp(opt.jobs, 1, 64);
    std::uint64_t best = UINT64_MAX;
    if (jobs == 1 || total < 1024) {
        best = sweep_range(code, 1, total);
    } else {
        std::vector<std::uint64_t> mins(static_cast<std::size_t>(jobs), UINT64_MAX);
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total - 1) / static_cast<std::uint64_t>(jobs) + 1;
        for (int t = 0; t < jobs; ++t) {
            std::uint64_t lo = 1 + chunk * static_cast<std::uint64_t>(t);
            std::uint64_t hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, t] { mins[static_cast<std::size_t>(t)] = sweep_range(code, lo, hi); });
        }
        for (std::thread& th : pool) th.join();
        for (std::uint64_t v : mins) best = std::min(best, v);
    }
    if (best == UINT64_MAX) throw InternalCheckFailure("code has no nonzero word");
    if (auto want = min_weight_formula(field, h); want && *want != best)
        throw InternalCheckFailure("swept minimum weight " + std::to_string(best) +
                                   " disagrees with the closed form " + std::to_string(*want));
    return best;
}

PolySubcode::PolySubcode(const Field& field, int h, std::vector<LinearizedPoly> r_basis)
    : field_(&field), h_(h) {
    if (h < 0) throw InvalidArgument("negative h");
    basis_.reserve(r_basis.size());
    std::vector<BitVec> flats;
    for (LinearizedPoly& p : r_basis) {
        if (!(p.field() == field)) throw FieldMismatch();
        if (p.top_index() > h) throw InvalidArgument("basis polynomial exceeds degree bound 2^h");
        // normalize every element to bound h
        std::vector<std::uint32_t> c(static_cast<std::size_t>(h) + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i);
        basis_.emplace_back(field, std::move(c));
        flats.push_back(basis_.back().to_bits());
    }
    if (!flats.empty() && F2Subspace::span_of(flats, flats.front().size()).dim() != basis_.size())
        throw InvalidArgument("subcode basis polynomials are F_2-dependent");
    basis_words_.reserve(basis_.size());
    for (const LinearizedPoly& p : basis_) basis_words_.push_back(word_of(p));
}

std::size_t PolySubcode::word_image_dim() const {
    if (basis_words_.empty()) return 0;
    std::vector<BitVec> rows;
    rows.reserve(basis_words_.size());
    for (const Codeword& w : basis_words_) rows.push_back(w.bits);
    return F2Subspace::span_of(rows, rows.front().size()).dim();
}

LinearizedPoly PolySubcode::span_element(std::uint64_t idx) const {
    LinearizedPoly acc = LinearizedPoly::zero(*field_, h_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if ((idx >> i) & 1) acc = acc + basis_[i];
    return acc;
}

void PolySubcode::for_each_nonzero_word(
    const std::function<void(std::uint64_t, const BitVec&, std::uint64_t)>& fn) const {
    if (basis_words_.empty()) return;
    BitVec cur(basis_words_.front().bits.size());
    std::uint64_t total = std::uint64_t{1} << basis_.size();
    for (std::uint64_t n = 1; n < total; ++n) {
        int flip = std::countr_zero(n);
        std::uint64_t w = cur.xor_weight(basis_words_[static_cast<std::size_t>(flip)].bits);
        fn(gray(n), cur, w);
    }
}

std::uint64_t subcode_weight(const PolySubcode& d) {
    const std::vector<Codeword>& ws = d.basis_words();
    if (ws.empty()) return 0; // the zero subcode has empty support
    BitVec support = ws.front().bits;
    for (std::size_t i = 1; i < ws.size(); ++i)
        for (std::size_t w = 0; w < support.word_count(); ++w)
            support.data()[w] |= ws[i].bits.data()[w];
    std::uint64_t sup = support.popcount();

    if (d.word_image_dim() == ws.size()) {
        std::uint64_t sum = 0;
        d.for_each_nonzero_word([&](std::uint64_t, const BitVec&, std::uint64_t w) { sum += w; });
        std::uint64_t averaged = sum >> (ws.size() - 1);
        if (averaged != sup)
            throw InternalCheckFailure("support count " + std::to_string(sup) +
                                       " disagrees with averaged weight " + std::to_string(averaged));
    }
    return sup;
}

bool is_min_weight_subcode(const PolySubcode& d, std::uint64_t d1) {
    if (d.word_image_dim() != d.basis().size())
        throw InvalidArgument("word image of the subcode is degenerate");
    bool all = true;
    d.for_each_nonzero_word([&](std::uint64_t, const BitVec&, std::uint64_t w) {
        if (w != d1) all = false;
    });
    return all;
}

std::uint64_t ghw_from_min_subcode(std::uint64_t d1, int r) {
    if (r < 1) throw InvalidArgument("subcode dimension must be positive");
    if (r >= 64) throw InvalidArgument("subcode dimension out of range");
    std::uint64_t num = ((std::uint64_t{1} << r) - 1) * d1;
    std::uint64_t den = std::uint64_t{1} << (r - 1);
    if (num % den)
        throw InvalidArgument("(2^r - 1) d_1 is not divisible by 2^(r-1)");
    return num / den;
}

std::uint64_t gaussian_binomial(int k, int r) {
    if (r < 0 || r > k) return 0;
    // multiply by (2^(k-i) - 1) and divide by (2^(i+1) - 1): after step i the
    // accumulator is the Gaussian binomial [k, i+1], so every division is exact
    using u128 = unsigned __int128;
    u128 acc = 1;
    for (int i = 0; i < r; ++i) {
        acc *= (u128{1} << (k - i)) - 1;
        acc /= (u128{1} << (i + 1)) - 1;
        if (acc > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t ghw_exhaustive(const Field& field, int h, int r, std::uint64_t max_candidates) {
    if (r < 1) throw InvalidArgument("r must be positive");
    TraceCode code(field, h);
    int k = code.dim();
    if (r > k) throw InvalidArgument("r exceeds the code dimension");
    std::uint64_t cand = gaussian_binomial(k, r);
    if (cand > max_candidates)
        throw CostGuardExceeded("subspace enumeration has " + std::to_string(cand) +
                                " candidates, guard is " + std::to_string(max_candidates));

    if (r == 1) {
        std::uint64_t best = UINT64_MAX;
        std::size_t nwords = (code.length() + 63) / 64;
        std::vector<std::uint64_t> cur(nwords, 0);
        const bitk::Kernels& kn = bitk::active();
        for (std::uint64_t n = 1; n < (std::uint64_t{1} << k); ++n) {
            int flip = std::countr_zero(n);
            std::uint64_t w = kn.xor_popcount_into(cur.data(), code.basis_words()[static_cast<std::size_t>(flip)].bits.data(), nwords);
            best = std::min(best, w);
        }
        return best;
    }

    if (r > 3)
        throw CostGuardExceeded("exhaustive d_r enumeration supports r <= 3");
    if (code.length() > 64)
        throw CostGuardExceeded("exhaustive d_r for r >= 2 needs code length <= 64");

    // support table for every codeword, filled in Gray order
    std::uint64_t n_words = std::uint64_t{1} << k;
    std::vector<std::uint64_t> tab(n_words, 0);
    std::uint64_t cur = 0;
    for (std::uint64_t n = 1; n < n_words; ++n) {
        cur ^= code.basis_words()[static_cast<std::size_t>(std::countr_zero(n))].bits.low64();
        tab[gray(n)] = cur;
    }

    // min over unordered tuples of distinct nonzero words; over F_2 any such
    // pair/triple with XOR-closed distinctness spans the right dimension, and
    // revisiting a subspace does not change the minimum
    std::uint64_t best = UINT64_MAX;
    if (r == 2) {
        for (std::uint64_t v1 = 1; v1 < n_words; ++v1)
            for (std::uint64_t v2 = v1 + 1; v2 < n_words; ++v2) {
                std::uint64_t sup = static_cast<std::uint64_t>(std::popcount(tab[v1] | tab[v2]));
                if (sup < best) best = sup;
            }
    } else {
        for (std::uint64_t v1 = 1; v1 < n_words; ++v1)
            for (std::uint64_t v2 = v1 + 1; v2 < n_words; ++v2) {
                std::uint64_t s12 = tab[v1] | tab[v2];
                if (static_cast<std::uint64_t>(std::popcount(s12)) >= best) continue;
                for (std::uint64_t v3 = v2 + 1; v3 < n_words; ++v3) {
                    if (v3 == (v1 ^ v2)) continue; // dependent triple
                    std::uint64_t sup = static_cast<std::uint64_t>(std::popcount(s12 | tab[v3]));
                    if (sup < best) best = sup;
                }
            }
    }
    return best;
}

} // namespace tracecode
