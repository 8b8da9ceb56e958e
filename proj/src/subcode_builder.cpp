#include "tracecode/subcode_builder.hpp"

#include <algorithm>

#include "tracecode/quadform.hpp"

namespace tracecode {

namespace {

std::vector<BitVec> masks_to_vecs(std::span<const std::uint32_t> xs, std::size_t m) {
    std::vector<BitVec> out;
    out.reserve(xs.size());
    for (std::uint32_t x : xs) out.push_back(BitVec::from_mask(x, m));
    return out;
}

std::size_t f2_rank_of(std::span<const std::uint32_t> xs, const Field& f) {
    return F2Subspace::span_of(masks_to_vecs(xs, static_cast<std::size_t>(f.m())),
                               static_cast<std::size_t>(f.m()))
        .dim();
}

// candidate polynomial for the pair word, no post-check
LinearizedPoly pair_word_candidate(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                   int h, const Field& f) {
    if (a.size() != b.size()) throw InvalidArgument("pair lists differ in length");
    std::vector<std::uint32_t> c(static_cast<std::size_t>(h) + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[0] ^= f.mul(a[i], b[i]);
    for (int j = 1; j <= h; ++j)
        for (std::size_t i = 0; i < a.size(); ++i)
            c[static_cast<std::size_t>(j)] ^=
                f.mul(f.frobenius(a[i], j), b[i]) ^ f.mul(a[i], f.frobenius(b[i], j));
    return LinearizedPoly(f, std::move(c));
}

// word of the pair form: eval table of Q(a, b) restricted to F_q^*
BitVec pair_word_bits(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      const Field& f) {
    BitVec table = pair_form(f, std::vector<std::uint32_t>(a.begin(), a.end()),
                             std::vector<std::uint32_t>(b.begin(), b.end()))
                       .eval_table();
    std::size_t len = static_cast<std::size_t>(f.q()) - 1;
    BitVec word(len);
    for (std::size_t x = 1; x <= len; ++x)
        if (table.get(x)) word.set(x - 1, true);
    return word;
}

} // namespace

PairSystem build_system(std::vector<std::uint32_t> a, int h, const Field& field) {
    const int m = field.m();
    PairSystem sys;
    sys.field = &field;
    sys.h = h;
    if (m % 2 == 1) {
        if (h < 1 || h > (m - 1) / 2)
            throw InvalidArgument("odd m needs 1 <= h <= (m-1)/2");
        sys.w = 2 * h - 1;
        sys.j_lo = h + 1;
        sys.j_hi = (m - 1) / 2;
    } else {
        if (h < 1 || h >= m / 2)
            throw InvalidArgument("even m needs 1 <= h < m/2");
        sys.w = 2 * h;
        sys.j_lo = h + 1;
        sys.j_hi = m / 2;
    }
    sys.M = (m - sys.w) / 2;
    if (static_cast<int>(a.size()) != sys.M)
        throw InvalidArgument("a-tuple has " + std::to_string(a.size()) + " entries, need M = " +
                              std::to_string(sys.M) + " for m=" + std::to_string(m) +
                              ", h=" + std::to_string(h));
    if (a.empty() || a[0] != 1) throw InvalidArgument("a_1 must be 1");
    for (std::uint32_t x : a)
        if (x >= field.q()) throw InvalidArgument("a-tuple element out of range");
    if (f2_rank_of(a, field) != a.size())
        throw InvalidArgument("a-tuple is F_2-dependent");
    sys.a = std::move(a);

    const int n_eq = sys.equations();
    const std::vector<std::uint32_t>& av = sys.a;
    if (n_eq <= 0) {
        sys.solutions = F2Subspace::full(static_cast<std::size_t>(sys.M) * static_cast<std::size_t>(m));
    } else {
        // frobenius powers of the a_i per equation, fixed up front
        std::vector<std::vector<std::uint32_t>> afr(static_cast<std::size_t>(n_eq));
        for (int e = 0; e < n_eq; ++e) {
            afr[static_cast<std::size_t>(e)].resize(av.size());
            for (std::size_t i = 0; i < av.size(); ++i)
                afr[static_cast<std::size_t>(e)][i] = field.frobenius(av[i], sys.j_lo + e);
        }
        TupleMap eqs = [&field, &av, &afr, &sys, n_eq](std::span<const std::uint32_t> b,
                                                       std::span<std::uint32_t> out) {
            for (int e = 0; e < n_eq; ++e) {
                std::uint32_t s = 0;
                for (std::size_t i = 0; i < av.size(); ++i)
                    s ^= field.mul(afr[static_cast<std::size_t>(e)][i], b[i]) ^
                         field.mul(av[i], field.frobenius(b[i], sys.j_lo + e));
                out[static_cast<std::size_t>(e)] = s;
            }
        };
        sys.solutions = solve_linearized_system(field, sys.M, n_eq, eqs);
    }

    // V: first-coordinate blocks of a basis of S
    std::vector<BitVec> firsts;
    firsts.reserve(sys.solutions.dim());
    for (const BitVec& s : sys.solutions.basis())
        firsts.push_back(BitVec::from_mask(s.extract32(0, static_cast<std::size_t>(m)),
                                           static_cast<std::size_t>(m)));
    sys.projection = F2Subspace::span_of(firsts, static_cast<std::size_t>(m));

    if (m % 2 == 1 && sys.solutions.dim() < static_cast<std::size_t>(m))
        throw InternalCheckFailure("odd-m system has fewer than q solutions");
    return sys;
}

LinearizedPoly r_from_pairs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                            int h, const Field& field) {
    LinearizedPoly r = pair_word_candidate(a, b, h, field);
    if (!(word_of(r).bits == pair_word_bits(a, b, field)))
        throw InternalCheckFailure("pair word does not match its reconstructed polynomial");
    return r;
}

bool membership_check(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      int h, const Field& field) {
    LinearizedPoly r = pair_word_candidate(a, b, h, field);
    return word_of(r).bits == pair_word_bits(a, b, field);
}

std::vector<std::vector<std::uint32_t>> select_representatives(const PairSystem& sys, int r) {
    const Field& f = *sys.field;
    const int m = f.m();
    if (r < 1 || r > sys.max_r())
        throw InvalidArgument("r = " + std::to_string(r) + " outside 1 <= r <= dim V - M = " +
                              std::to_string(sys.max_r()));

    F2Subspace acc = F2Subspace::span_of(masks_to_vecs(sys.a, static_cast<std::size_t>(m)),
                                         static_cast<std::size_t>(m));
    std::vector<std::uint32_t> chosen;
    for (const BitVec& v : sys.projection.basis()) {
        if (static_cast<int>(chosen.size()) == r) break;
        if (acc.insert(v)) chosen.push_back(v.extract32(0, static_cast<std::size_t>(m)));
    }
    if (static_cast<int>(chosen.size()) != r)
        throw InternalCheckFailure("projection basis could not extend the a-span");

    // solve for a full tuple above each chosen first coordinate
    F2Matrix proj(static_cast<std::size_t>(m), sys.solutions.dim());
    for (std::size_t j = 0; j < sys.solutions.dim(); ++j) {
        std::uint32_t first = sys.solutions.basis()[j].extract32(0, static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            if ((first >> i) & 1) proj.set(static_cast<std::size_t>(i), j, true);
    }
    std::vector<std::vector<std::uint32_t>> reps;
    reps.reserve(static_cast<std::size_t>(r));
    for (std::uint32_t b1 : chosen) {
        auto sol = solve_affine(proj, BitVec::from_mask(b1, static_cast<std::size_t>(m)));
        if (!sol) throw InternalCheckFailure("first coordinate not in the projection image");
        BitVec tuple(static_cast<std::size_t>(sys.M) * static_cast<std::size_t>(m));
        for (std::size_t j = 0; j < sys.solutions.dim(); ++j)
            if (sol->particular.get(j)) tuple ^= sys.solutions.basis()[j];
        std::vector<std::uint32_t> b = unflatten_tuple(f, tuple, sys.M);

        std::vector<std::uint32_t> all(sys.a.begin(), sys.a.end());
        all.insert(all.end(), b.begin(), b.end());
        if (f2_rank_of(all, f) != 2 * static_cast<std::size_t>(sys.M))
            throw InternalCheckFailure("selected solution does not reach full rank 2M");
        reps.push_back(std::move(b));
    }
    return reps;
}

PolySubcode min_weight_subcode(const PairSystem& sys, int r) {
    const Field& f = *sys.field;
    std::vector<std::vector<std::uint32_t>> reps = select_representatives(sys, r);
    std::vector<LinearizedPoly> basis;
    basis.reserve(reps.size());
    for (const std::vector<std::uint32_t>& b : reps)
        basis.push_back(r_from_pairs(sys.a, b, sys.h, f));
    PolySubcode d(f, sys.h, std::move(basis));

    auto d1 = min_weight_formula(f, sys.h);
    if (!d1) throw InternalCheckFailure("no minimum-weight formula in the construction range");
    if (d.word_image_dim() != d.basis().size())
        throw InternalCheckFailure("constructed subcode has a degenerate word image");
    if (!is_min_weight_subcode(d, *d1))
        throw InternalCheckFailure("constructed subcode contains a word of non-minimal weight");
    return d;
}

bool fiber_structure_check(const PairSystem& sys) {
    const Field& f = *sys.field;
    const int m = f.m();
    if (m % 2 == 0) throw InvalidArgument("fiber structure check applies to odd m");

    long expected = static_cast<long>(sys.solutions.dim()) -
                    static_cast<long>(sys.M) * (sys.M - 1) / 2;
    if (static_cast<long>(sys.projection.dim()) != expected) return false;
    if (sys.M == 1) return true;

    // solutions with first coordinate zero, i.e. pairs sharing b_1
    F2Matrix proj(static_cast<std::size_t>(m), sys.solutions.dim());
    for (std::size_t j = 0; j < sys.solutions.dim(); ++j) {
        std::uint32_t first = sys.solutions.basis()[j].extract32(0, static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            if ((first >> i) & 1) proj.set(static_cast<std::size_t>(i), j, true);
    }
    F2Subspace lam = kernel(proj);

    // columns a_2..a_M for coordinate extraction
    F2Matrix amat(static_cast<std::size_t>(m), static_cast<std::size_t>(sys.M - 1));
    for (int j = 1; j < sys.M; ++j)
        for (int i = 0; i < m; ++i)
            if ((sys.a[static_cast<std::size_t>(j)] >> i) & 1)
                amat.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1), true);

    for (std::size_t kk = 0; kk < lam.dim(); ++kk) {
        BitVec tuple(static_cast<std::size_t>(sys.M) * static_cast<std::size_t>(m));
        for (std::size_t j = 0; j < sys.solutions.dim(); ++j)
            if (lam.basis()[kk].get(j)) tuple ^= sys.solutions.basis()[j];
        std::vector<std::uint32_t> b = unflatten_tuple(f, tuple, sys.M);
        if (b[0] != 0) throw InternalCheckFailure("projection kernel has nonzero first coordinate");

        // alpha[i][j]: tail_i = sum_j alpha[i][j] a_(j+2); must be symmetric
        std::vector<std::uint32_t> alpha(static_cast<std::size_t>(sys.M - 1), 0);
        for (int i = 1; i < sys.M; ++i) {
            auto sol = solve_affine(amat, BitVec::from_mask(b[static_cast<std::size_t>(i)],
                                                            static_cast<std::size_t>(m)));
            if (!sol) return false; // tail leaves the a-span
            alpha[static_cast<std::size_t>(i - 1)] =
                sol->particular.extract32(0, static_cast<std::size_t>(sys.M - 1));
        }
        for (int i = 0; i < sys.M - 1; ++i)
            for (int j = i + 1; j < sys.M - 1; ++j)
                if (((alpha[static_cast<std::size_t>(i)] >> j) & 1) !=
                    ((alpha[static_cast<std::size_t>(j)] >> i) & 1))
                    return false;
    }
    return true;
}

std::int64_t even_m_solution_count(std::uint32_t a2, const Field& field) {
    const int m = field.m();
    if (m % 2 != 0 || m < 6) throw InvalidArgument("needs even m >= 6");
    if (field.add(field.mul(a2, a2), field.add(a2, 1)) != 0)
        throw InvalidArgument("a2 must satisfy a2^2 + a2 + 1 = 0");
    PairSystem sys = build_system({1, a2}, (m - 4) / 2, field);
    std::int64_t count = std::int64_t{1} << sys.solutions.dim();
    std::int64_t want = std::int64_t{1} << (m / 2 + (m % 4 == 0 ? 1 : 2));
    if (count != want)
        throw InternalCheckFailure("solution count " + std::to_string(count) +
                                   " does not match the expected " + std::to_string(want));
    return count;
}

F2Subspace subfield(const Field& field, int d) {
    if (d <= 0 || field.m() % d != 0) throw InvalidArgument("subfield degree must divide m");
    TupleMap fix = [&field, d](std::span<const std::uint32_t> in, std::span<std::uint32_t> out) {
        out[0] = field.frobenius(in[0], d) ^ in[0];
    };
    return solve_linearized_system(field, 1, 1, fix);
}

std::uint32_t f4_element(const Field& field) {
    if (field.m() % 2 != 0) throw InvalidArgument("x^2 + x + 1 has no root for odd m");
    TupleMap artin = [&field](std::span<const std::uint32_t> in, std::span<std::uint32_t> out) {
        out[0] = field.mul(in[0], in[0]) ^ in[0];
    };
    F2Matrix mat = map_matrix(field, 1, 1, artin);
    auto sol = solve_affine(mat, BitVec::from_mask(1, static_cast<std::size_t>(field.m())));
    if (!sol) throw InternalCheckFailure("x^2 + x = 1 unsolvable in a field with even m");
    std::uint32_t best = UINT32_MAX;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << sol->homogeneous.dim()); ++i) {
        BitVec v = sol->homogeneous.element(i);
        v ^= sol->particular;
        best = std::min(best, v.extract32(0, static_cast<std::size_t>(field.m())));
    }
    return best;
}

std::vector<std::uint32_t> preset_tuple(const Field& field, std::string_view name, int M) {
    if (M < 1 || M > field.m()) throw InvalidArgument("preset tuple size out of range");
    if (name == "generic") {
        std::vector<std::uint32_t> a;
        for (int j = 0; j < M; ++j) a.push_back(std::uint32_t{1} << j);
        return a;
    }
    if (name == "subfield-F8") {
        if (field.m() % 3 != 0) throw InvalidArgument("subfield-F8 needs 3 | m");
        if (M != 3) throw InvalidArgument("subfield-F8 is a 3-element tuple");
        F2Subspace f8 = subfield(field, 3);
        std::vector<BitVec> one{BitVec::from_mask(1, static_cast<std::size_t>(field.m()))};
        F2Subspace acc = F2Subspace::span_of(one, static_cast<std::size_t>(field.m()));
        std::vector<std::uint32_t> a{1};
        for (const BitVec& v : f8.basis()) {
            if (a.size() == 3) break;
            if (acc.insert(v)) a.push_back(v.extract32(0, static_cast<std::size_t>(field.m())));
        }
        if (a.size() != 3) throw InternalCheckFailure("F_8 has no independent triple");
        return a;
    }
    if (name == "f4-element") {
        if (M != 2) throw InvalidArgument("f4-element is a 2-element tuple");
        return {1, f4_element(field)};
    }
    throw InvalidArgument("unknown preset '" + std::string(name) + "'");
}

} // namespace tracecode
