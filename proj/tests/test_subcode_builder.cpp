#include <doctest.h>

#include <random>
#include <unordered_set>

#include "tracecode/quadform.hpp"
#include "tracecode/subcode_builder.hpp"

using namespace tracecode;

namespace {

std::size_t rank_of(const Field& f, const std::vector<std::uint32_t>& xs) {
    std::vector<BitVec> v;
    for (std::uint32_t x : xs) v.push_back(BitVec::from_mask(x, static_cast<std::size_t>(f.m())));
    return F2Subspace::span_of(v, static_cast<std::size_t>(f.m())).dim();
}

} // namespace

TEST_CASE("system shapes per parity") {
    // odd m, top case: empty system, S is everything
    Field f128(7);
    PairSystem top = build_system({1}, 3, f128);
    CHECK(top.M == 1);
    CHECK(top.equations() == 0);
    CHECK(top.solutions.dim() == 7);
    CHECK(top.projection.dim() == 7);
    CHECK(top.max_r() == 6);

    // odd m, one equation
    PairSystem mid = build_system({1, 2}, 2, f128);
    CHECK(mid.M == 2);
    CHECK(mid.equations() == 1);
    CHECK(mid.j_lo == 3);
    CHECK(mid.solutions.dim() == 7);
    CHECK(mid.projection.dim() == 6);
    CHECK(mid.max_r() == 4);

    // even m, single self-paired equation b^(2^(m/2)) = b
    Field f64(6);
    PairSystem even = build_system({1}, 2, f64);
    CHECK(even.M == 1);
    CHECK(even.equations() == 1);
    CHECK(even.j_lo == 3);
    CHECK(even.j_hi == 3);
    CHECK(even.solutions.dim() == 3);
    CHECK(even.max_r() == 2);
}

TEST_CASE("system input validation") {
    Field f(7);
    CHECK_THROWS_AS(build_system({1, 2, 4}, 2, f), InvalidArgument); // M must be 2
    CHECK_THROWS_AS(build_system({2, 1}, 2, f), InvalidArgument);    // a_1 must be 1
    CHECK_THROWS_AS(build_system({1, 1}, 2, f), InvalidArgument);    // dependent
    CHECK_THROWS_AS(build_system({1, 2}, 4, f), InvalidArgument);    // h out of range
    CHECK_NOTHROW(build_system({1, 3}, 2, f));                       // {1, 1+t} has rank 2
}

TEST_CASE("membership: candidate polynomial vs brute-force word set (m=7, h=1)") {
    Field f(7);
    // all words of C_1
    std::unordered_set<std::string> words;
    for (std::uint32_t a0 = 0; a0 < 128; ++a0)
        for (std::uint32_t a1 = 0; a1 < 128; ++a1)
            words.insert(word_of(LinearizedPoly(f, {a0, a1})).bits.to_hex_bytes());

    std::vector<std::uint32_t> a{1, 2, 4};
    PairSystem sys = build_system(a, 1, f);
    std::mt19937_64 rng(71);
    int members = 0, outsiders = 0;
    for (int t = 0; t < 400; ++t) {
        std::vector<std::uint32_t> b;
        bool from_s = t % 2 == 0;
        if (from_s) {
            std::uint64_t idx = rng() & ((std::uint64_t{1} << sys.solutions.dim()) - 1);
            b = unflatten_tuple(f, sys.solutions.element(idx), sys.M);
        } else {
            for (int i = 0; i < sys.M; ++i) b.push_back(static_cast<std::uint32_t>(rng() & 127));
        }
        bool member = membership_check(a, b, 1, f);
        // oracle: is the pair word among all brute-forced codewords?
        BitVec q = pair_form(f, a, b).eval_table();
        BitVec word(127);
        for (std::size_t x = 1; x < 128; ++x)
            if (q.get(x)) word.set(x - 1, true);
        bool oracle = words.count(word.to_hex_bytes()) > 0;
        CHECK(member == oracle);
        bool in_s = sys.solutions.contains(flatten_tuple(f, b));
        CHECK(member == in_s);
        (member ? members : outsiders)++;
    }
    CHECK(members > 50);
    CHECK(outsiders > 50);
}

TEST_CASE("membership for the empty system is unconditional") {
    Field f(5);
    std::mt19937_64 rng(72);
    for (int t = 0; t < 100; ++t)
        CHECK(membership_check(std::vector<std::uint32_t>{1},
                               std::vector<std::uint32_t>{static_cast<std::uint32_t>(rng() & 31)}, 2, f));
}

TEST_CASE("reconstructed polynomial from pairs: worked m=6 coefficients") {
    Field f(6);
    std::uint32_t rho = f4_element(f);
    CHECK(f.add(f.mul(rho, rho), f.add(rho, 1)) == 0);

    std::uint32_t b = 0;
    for (std::uint32_t x = 2; x < f.q(); ++x)
        if (f.frobenius(x, 3) == x && rank_of(f, {1, rho, f.mul(x, rho), x}) == 4) {
            b = x;
            break;
        }
    REQUIRE(b != 0);

    LinearizedPoly c1 = r_from_pairs(std::vector<std::uint32_t>{1}, std::vector<std::uint32_t>{b}, 2, f);
    CHECK(c1.coeff(0) == b);
    CHECK(c1.coeff(1) == f.add(f.mul(b, b), b));
    CHECK(c1.coeff(2) == f.add(f.frobenius(b, 2), b));

    // the two-pair word collapses onto the single cubic coefficient
    LinearizedPoly c2 = r_from_pairs(std::vector<std::uint32_t>{1, rho},
                                     std::vector<std::uint32_t>{f.mul(b, rho), b}, 1, f);
    CHECK(c2.coeff(0) == 0);
    CHECK(c2.coeff(1) == f.add(f.mul(b, b), b));

    // b = 0 gives the zero polynomial
    CHECK(r_from_pairs(std::vector<std::uint32_t>{1}, std::vector<std::uint32_t>{0}, 2, f).is_zero());
}

TEST_CASE("representative selection: bounds and ranks") {
    Field f128(7);
    PairSystem sys = build_system({1, 2}, 2, f128);
    CHECK(sys.max_r() == 4);
    CHECK_THROWS_AS(select_representatives(sys, 5), InvalidArgument);
    CHECK_THROWS_AS(select_representatives(sys, 0), InvalidArgument);
    for (int r = 1; r <= 4; ++r) {
        auto reps = select_representatives(sys, r);
        REQUIRE(reps.size() == static_cast<std::size_t>(r));
        std::vector<std::uint32_t> heads(sys.a);
        for (const auto& b : reps) {
            std::vector<std::uint32_t> all(sys.a);
            all.insert(all.end(), b.begin(), b.end());
            CHECK(rank_of(f128, all) == 2 * static_cast<std::size_t>(sys.M));
            heads.push_back(b[0]);
        }
        CHECK(rank_of(f128, heads) == static_cast<std::size_t>(sys.M + r));
    }

    Field f512(9);
    PairSystem deep = build_system(preset_tuple(f512, "subfield-F8", 3), 2, f512);
    CHECK(deep.max_r() == 6);

    Field f32(5);
    CHECK(build_system({1}, 2, f32).max_r() == 4);
}

TEST_CASE("constructed subcodes consist of minimum-weight words") {
    Field f128(7);
    PairSystem sys = build_system({1, 2}, 2, f128);
    for (int r = 1; r <= 4; ++r) {
        PolySubcode d = min_weight_subcode(sys, r);
        CHECK(d.basis().size() == static_cast<std::size_t>(r));
        CHECK(is_min_weight_subcode(d, 48));
    }
    Field f64(6);
    PairSystem even = build_system({1}, 2, f64);
    PolySubcode d2 = min_weight_subcode(even, 2);
    CHECK(is_min_weight_subcode(d2, 16));
    d2.for_each_nonzero_word([](std::uint64_t, const BitVec&, std::uint64_t w) { CHECK(w == 16); });
}

TEST_CASE("solution-space structure for odd m") {
    Field f128(7);
    PairSystem sys = build_system({1, 2}, 2, f128);
    CHECK(fiber_structure_check(sys)); // dim V = 7 - 1 = 6

    Field f512(9);
    PairSystem deep = build_system(preset_tuple(f512, "subfield-F8", 3), 2, f512);
    CHECK(fiber_structure_check(deep)); // dim V = 12 - 3 = 9

    PairSystem top = build_system({1}, 3, f128);
    CHECK(fiber_structure_check(top)); // M = 1: nothing to quotient

    Field f64(6);
    CHECK_THROWS_AS(fiber_structure_check(build_system({1}, 2, f64)), InvalidArgument);
}

TEST_CASE("full-rank propagation over every solution (m=7, h=2)") {
    Field f(7);
    PairSystem sys = build_system({1, 2}, 2, f);
    REQUIRE(sys.solutions.dim() == 7);
    int promoted = 0;
    for (std::uint64_t idx = 0; idx < 128; ++idx) {
        std::vector<std::uint32_t> b = unflatten_tuple(f, sys.solutions.element(idx), sys.M);
        if (rank_of(f, {1, 2, b[0]}) != 3) continue;
        CHECK(rank_of(f, {1, 2, b[0], b[1]}) == 4);
        ++promoted;
    }
    CHECK(promoted > 0);
}

TEST_CASE("two-equation solution counts for even m") {
    CHECK(even_m_solution_count(f4_element(Field(8)), Field(8)) == 32);   // 2 sqrt(q)
    CHECK(even_m_solution_count(f4_element(Field(6)), Field(6)) == 32);   // 4 sqrt(q)
    CHECK(even_m_solution_count(f4_element(Field(10)), Field(10)) == 128); // 4 sqrt(q)
    CHECK(even_m_solution_count(f4_element(Field(12)), Field(12)) == 128); // 2 sqrt(q)
    CHECK_THROWS_AS(even_m_solution_count(1, Field(8)), InvalidArgument);
    CHECK_THROWS_AS(even_m_solution_count(0, Field(8)), InvalidArgument);
}

TEST_CASE("solution count of the subfield system is independent of the triple") {
    // every independent triple inside F_8 gives the enlarged solution space
    Field f(9);
    std::vector<std::uint32_t> f8;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        if (f.frobenius(x, 3) == x) f8.push_back(x);
    REQUIRE(f8.size() == 8);
    int tried = 0;
    for (std::uint32_t a2 : f8)
        for (std::uint32_t a3 : f8) {
            if (rank_of(f, {1, a2, a3}) != 3) continue;
            PairSystem sys = build_system({1, a2, a3}, 2, f);
            CHECK(sys.solutions.dim() == 12);
            CHECK(sys.projection.dim() == 9);
            ++tried;
        }
    CHECK(tried == 24); // 6 choices for a2, then 4 for a3
}

TEST_CASE("presets") {
    Field f512(9);
    std::vector<std::uint32_t> t = preset_tuple(f512, "subfield-F8", 3);
    CHECK(t[0] == 1);
    CHECK(rank_of(f512, t) == 3);
    for (std::uint32_t x : t) CHECK(f512.frobenius(x, 3) == x); // inside F_8

    Field f64(6);
    std::vector<std::uint32_t> p = preset_tuple(f64, "f4-element", 2);
    CHECK(p[0] == 1);
    CHECK(f64.add(f64.mul(p[1], p[1]), f64.add(p[1], 1)) == 0);

    CHECK(preset_tuple(f64, "generic", 3) == std::vector<std::uint32_t>{1, 2, 4});
    CHECK_THROWS_AS(preset_tuple(f64, "no-such", 2), InvalidArgument);
    CHECK_THROWS_AS(preset_tuple(Field(7), "subfield-F8", 3), InvalidArgument); // 3 does not divide 7
    CHECK_THROWS_AS(preset_tuple(Field(7), "f4-element", 2), InvalidArgument);  // odd m
    CHECK_THROWS_AS(preset_tuple(f512, "subfield-F8", 2), InvalidArgument);     // M mismatch
}

TEST_CASE("subfield helper") {
    Field f(12);
    CHECK(subfield(f, 1).dim() == 1);
    CHECK(subfield(f, 2).dim() == 2);
    CHECK(subfield(f, 3).dim() == 3);
    CHECK(subfield(f, 6).dim() == 6);
    CHECK(subfield(f, 12).dim() == 12);
    CHECK_THROWS_AS(subfield(f, 5), InvalidArgument);
}
