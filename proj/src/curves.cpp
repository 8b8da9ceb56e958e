#include "tracecode/curves.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "tracecode/quadform.hpp"

namespace tracecode {

std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) throw InvalidArgument("isqrt of a negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while ((r + 1) * (r + 1) <= v) ++r;
    while (r * r > v) --r;
    return r;
}

std::int64_t serre_bound(std::int64_t genus, const Field& field) {
    if (genus < 0) throw InvalidArgument("negative genus");
    auto q = static_cast<std::int64_t>(field.q());
    return q + 1 + genus * isqrt64(4 * q);
}

CurveSummary make_curve_summary(std::int64_t genus, std::int64_t n_points, const Field& field) {
    auto q = static_cast<std::int64_t>(field.q());
    CurveSummary s;
    s.genus = genus;
    s.n_points = n_points;
    s.trace_frobenius = q + 1 - n_points;
    s.serre_bound = serre_bound(genus, field);
    s.attains_serre = n_points == s.serre_bound;
    if (field.m() % 2 == 0) {
        std::int64_t hw = q + 1 + 2 * genus * (std::int64_t{1} << (field.m() / 2));
        s.attains_hasse_weil = n_points == hw;
    }
    if (n_points > s.serre_bound)
        throw InternalCheckFailure("point count " + std::to_string(n_points) +
                                   " exceeds the Serre bound " + std::to_string(s.serre_bound));
    return s;
}

CurveSummary curve_of(const LinearizedPoly& r) {
    int top = r.top_index();
    if (top < 0) throw InvalidArgument("the zero polynomial has no curve");
    std::int64_t genus = top == 0 ? 0 : std::int64_t{1} << (top - 1);
    std::int64_t zeros = QuadraticForm::from_poly(r).classify().zeros;
    return make_curve_summary(genus, 2 * zeros + 1, r.field());
}

std::int64_t affine_point_count_oracle(const LinearizedPoly& r) {
    const Field& f = r.field();
    if (f.m() > 16) throw CostGuardExceeded("affine point enumeration limited to q <= 2^16");
    std::uint32_t q = static_cast<std::uint32_t>(f.q());
    // how often each value is hit by y^2 + y
    std::vector<std::uint32_t> hits(q, 0);
    for (std::uint32_t y = 0; y < q; ++y) ++hits[f.mul(y, y) ^ y];
    std::int64_t count = 0;
    for (std::uint32_t x = 0; x < q; ++x) count += hits[f.mul(x, r.eval(x))];
    return count;
}

CurveSummary fibre_product(const PolySubcode& d) {
    const Field& f = d.field();
    if (d.basis().empty()) throw InvalidArgument("fibre product needs a non-empty basis");
    auto q = static_cast<std::int64_t>(f.q());
    std::size_t r = d.basis().size();

    std::int64_t genus = 0;
    std::int64_t trace_sum = 0;
    std::uint64_t total = std::uint64_t{1} << r;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        LinearizedPoly member = d.span_element(mask);
        int top = member.top_index();
        if (top < 1) {
            std::string coeffs;
            for (const std::string& cx : member.coeffs_hex()) coeffs += cx + " ";
            throw InvalidArgument("span member [" + coeffs + "] has effective degree < 2");
        }
        genus += std::int64_t{1} << (top - 1);
        auto weight = static_cast<std::int64_t>(word_of(member).weight);
        trace_sum += 2 * weight - q; // t = q - 2 N(Q) and w = q - N
    }
    std::int64_t n = q + 1 - trace_sum;

    auto support = static_cast<std::int64_t>(subcode_weight(d));
    std::int64_t n_support = (q - support) * static_cast<std::int64_t>(total) + 1;
    if (n != n_support)
        throw InternalCheckFailure("trace-sum point count " + std::to_string(n) +
                                   " disagrees with the support formula " + std::to_string(n_support));
    return make_curve_summary(genus, n, f);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::odd1:
        case Family::even1: return "I";
        case Family::odd2:
        case Family::even2: return "II";
        case Family::odd3: return "III";
    }
    return "?";
}

Family family_for(const Field& field, int h) {
    int m = field.m();
    if (m % 2 == 1) {
        if (h >= 1 && h == (m - 1) / 2) return Family::odd1;
        if (h >= 1 && h == (m - 3) / 2) return Family::odd2;
        if (h >= 1 && h == (m - 5) / 2) return Family::odd3;
    } else {
        if (h >= 1 && h == (m - 2) / 2) return Family::even1;
        if (h >= 1 && h == (m - 4) / 2) return Family::even2;
    }
    throw InvalidArgument("no tabulated case for m=" + std::to_string(m) + ", h=" + std::to_string(h));
}

int family_h(Family f, const Field& field) {
    int m = field.m();
    switch (f) {
        case Family::odd1: return (m - 1) / 2;
        case Family::odd2: return (m - 3) / 2;
        case Family::odd3: return (m - 5) / 2;
        case Family::even1: return (m - 2) / 2;
        case Family::even2: return (m - 4) / 2;
    }
    throw InvalidArgument("bad family");
}

int family_default_max_r(Family f, const Field& field) {
    int m = field.m();
    switch (f) {
        case Family::odd1: return m - 1;
        case Family::odd2: return m - 3;
        // an F_8 a-tuple enlarges the solution space when it exists
        case Family::odd3: return m % 3 == 0 ? m - 3 : m - 6;
        case Family::even1: return (m - 2) / 2;
        case Family::even2: return m % 4 == 0 ? m / 2 - 2 : m / 2 - 1;
    }
    throw InvalidArgument("bad family");
}

CurveSummary table_row(Family f, int r, const Field& field, std::optional<int> max_r) {
    int m = field.m();
    int h = family_h(f, field);
    if (h < 1) throw InvalidArgument("family not defined at m=" + std::to_string(m));
    int limit = max_r.value_or(family_default_max_r(f, field));
    if (r < 1 || r > limit)
        throw InvalidArgument("r = " + std::to_string(r) + " outside the family range 1 <= r <= " +
                              std::to_string(limit));
    auto q = static_cast<std::int64_t>(field.q());
    int w = m % 2 == 1 ? 2 * h - 1 : 2 * h;
    std::int64_t word_trace = std::int64_t{1} << ((m + w) / 2); // |t| per minimum-weight word
    std::int64_t genus_word = std::int64_t{1} << (h - 1);
    std::int64_t factor = (std::int64_t{1} << r) - 1;
    return make_curve_summary(factor * genus_word, q + 1 + factor * word_trace, field);
}

} // namespace tracecode
