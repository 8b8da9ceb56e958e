#include "tracecode/scenarios.hpp"

#include <algorithm>

#include "tracecode/subcode_builder.hpp"

namespace tracecode {

namespace {

ComboScenario assemble(std::string name, const Field& field, int h_top,
                       std::vector<LinearizedPoly> basis) {
    ComboScenario sc;
    sc.name = std::move(name);
    sc.h_top = h_top;
    PolySubcode d(field, h_top, std::move(basis));
    std::uint64_t total = std::uint64_t{1} << d.basis().size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        LinearizedPoly member = d.span_element(mask);
        sc.part_coeffs.push_back(member.coeffs_hex());
        sc.part_weights.push_back(word_of(member).weight);
        sc.parts.push_back(curve_of(member));
    }
    sc.product = fibre_product(d);
    return sc;
}

std::vector<std::uint32_t> sorted_elements(const F2Subspace& s, const Field& field) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << s.dim()); ++i)
        out.push_back(s.element(i).extract32(0, static_cast<std::size_t>(field.m())));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ComboScenario combo_pair_split(const Field& field) {
    if (field.m() != 7) throw InvalidArgument("pair-split combination is worked out for m = 7");
    PairSystem sys = build_system(preset_tuple(field, "generic", 2), 2, field);
    std::vector<std::uint32_t> b = select_representatives(sys, 1).front();
    const int h_top = 3; // both pair words live in C_(m-1)/2
    LinearizedPoly r1 = r_from_pairs(std::vector<std::uint32_t>{sys.a[0]},
                                     std::vector<std::uint32_t>{b[0]}, h_top, field);
    LinearizedPoly r2 = r_from_pairs(std::vector<std::uint32_t>{sys.a[1]},
                                     std::vector<std::uint32_t>{b[1]}, h_top, field);
    return assemble("pair-split", field, h_top, {r1, r2});
}

ComboScenario combo_triple_split(const Field& field) {
    if (field.m() != 7) throw InvalidArgument("triple-split combination is worked out for m = 7");
    PairSystem sys = build_system(preset_tuple(field, "generic", 3), 1, field);
    const int h_top = 3;

    // first solution with full rank whose two-pair half keeps degree 2^3
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << sys.solutions.dim()); ++idx) {
        std::vector<std::uint32_t> b = unflatten_tuple(field, sys.solutions.element(idx), sys.M);
        std::vector<std::uint32_t> all(sys.a.begin(), sys.a.end());
        all.insert(all.end(), b.begin(), b.end());
        if (F2Subspace::span_of(
                [&] {
                    std::vector<BitVec> v;
                    for (std::uint32_t x : all) v.push_back(BitVec::from_mask(x, static_cast<std::size_t>(field.m())));
                    return v;
                }(),
                static_cast<std::size_t>(field.m()))
                .dim() != 2 * static_cast<std::size_t>(sys.M))
            continue;
        LinearizedPoly single = r_from_pairs(std::vector<std::uint32_t>{sys.a[0]},
                                             std::vector<std::uint32_t>{b[0]}, h_top, field);
        LinearizedPoly twopair = r_from_pairs(std::vector<std::uint32_t>{sys.a[1], sys.a[2]},
                                              std::vector<std::uint32_t>{b[1], b[2]}, h_top, field);
        if (twopair.top_index() != h_top) continue;
        return assemble("triple-split", field, h_top, {single, twopair});
    }
    throw InternalCheckFailure("no full-rank solution with a non-degenerate split");
}

ComboScenario combo_mixed_even(const Field& field) {
    if (field.m() != 6) throw InvalidArgument("mixed combination is worked out for m = 6");
    std::uint32_t rho = f4_element(field);
    std::vector<std::uint32_t> f8 = sorted_elements(subfield(field, 3), field);

    for (std::uint32_t b : f8) {
        if (b == 0 || b == 1) continue;
        std::vector<std::uint32_t> four{1, rho, field.mul(b, rho), b};
        std::vector<BitVec> v;
        for (std::uint32_t x : four) v.push_back(BitVec::from_mask(x, static_cast<std::size_t>(field.m())));
        if (F2Subspace::span_of(v, static_cast<std::size_t>(field.m())).dim() != 4) continue;

        LinearizedPoly c1 = r_from_pairs(std::vector<std::uint32_t>{1},
                                         std::vector<std::uint32_t>{b}, 2, field);
        LinearizedPoly c2 = r_from_pairs(std::vector<std::uint32_t>{1, rho},
                                         std::vector<std::uint32_t>{field.mul(b, rho), b}, 1, field);
        return assemble("mixed-even", field, 2, {c1, c2});
    }
    throw InternalCheckFailure("no b in F_8 with an independent quadruple");
}

ComboScenario combo_vanishing_word(const Field& field) {
    if (field.m() != 6) throw InvalidArgument("vanishing-word combination is worked out for m = 6");
    std::vector<std::uint32_t> f8 = sorted_elements(subfield(field, 3), field);
    std::uint32_t b = 0;
    for (std::uint32_t x : f8)
        if (x > 1) {
            b = x;
            break;
        }
    if (!b) throw InternalCheckFailure("F_8 basis missing");

    LinearizedPoly vanishing = LinearizedPoly::monomial(field, 3, b); // b x^8
    if (word_of(vanishing).weight != 0)
        throw InternalCheckFailure("word of b x^8 should vanish for b in F_8");
    LinearizedPoly c1 = r_from_pairs(std::vector<std::uint32_t>{1},
                                     std::vector<std::uint32_t>{b}, 2, field);
    return assemble("vanishing-word", field, 3, {vanishing, vanishing + c1});
}

} // namespace tracecode
