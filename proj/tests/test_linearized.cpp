#include <doctest.h>

#include <random>

#include "tracecode/linearized.hpp"
#include "tracecode/subcode_builder.hpp"

using namespace tracecode;

namespace {

LinearizedPoly random_poly(std::mt19937_64& rng, const Field& f, int h) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(h) + 1);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() & (f.q() - 1));
    return LinearizedPoly(f, std::move(c));
}

} // namespace

TEST_CASE("evaluation basics") {
    Field f(3);
    LinearizedPoly ident(f, {1}); // R = x
    for (std::uint32_t x = 0; x < 8; ++x) CHECK(ident.eval(x) == x);

    LinearizedPoly tx2(f, {0, 0b010}); // R = t x^2
    CHECK(tx2.eval(0b010) == 0b011);   // t * t^2 = t + 1
    CHECK(tx2.eval(0) == 0);

    CHECK(LinearizedPoly::zero(f, 2).is_zero());
    CHECK(LinearizedPoly::zero(f, 2).top_index() == -1);
    CHECK(!LinearizedPoly::zero(f, 2).effective_degree().has_value());
    CHECK(tx2.top_index() == 1);
    CHECK(*tx2.effective_degree() == 2);
    CHECK(LinearizedPoly::monomial(f, 2, 5).coeff(2) == 5);
}

TEST_CASE("evaluation is additive") {
    for (int m : {3, 4, 5, 6}) {
        Field f(m);
        std::mt19937_64 rng(41);
        for (int t = 0; t < 5; ++t) {
            LinearizedPoly r = random_poly(rng, f, 2);
            for (std::uint32_t x = 0; x < f.q(); ++x)
                for (std::uint32_t y = 0; y < f.q(); ++y)
                    CHECK(r.eval(x ^ y) == (r.eval(x) ^ r.eval(y)));
        }
    }
    Field f8(8);
    std::mt19937_64 rng(42);
    for (int t = 0; t < 2000; ++t) {
        LinearizedPoly r = random_poly(rng, f8, 3);
        auto x = static_cast<std::uint32_t>(rng() & 255);
        auto y = static_cast<std::uint32_t>(rng() & 255);
        CHECK(r.eval(x ^ y) == (r.eval(x) ^ r.eval(y)));
    }
}

TEST_CASE("sum and flattening") {
    Field f(5);
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
        LinearizedPoly a = random_poly(rng, f, 2);
        LinearizedPoly b = random_poly(rng, f, 2);
        LinearizedPoly s = a + b;
        auto x = static_cast<std::uint32_t>(rng() & 31);
        CHECK(s.eval(x) == (a.eval(x) ^ b.eval(x)));
        CHECK(LinearizedPoly::from_bits(f, a.to_bits(), 2) == a);
    }
    CHECK_THROWS_AS(LinearizedPoly(f, {0, 0, 40}), InvalidArgument); // coefficient out of range
}

TEST_CASE("map_matrix: identity, frobenius, subfield membership") {
    Field f8(3);
    TupleMap ident = [](std::span<const std::uint32_t> in, std::span<std::uint32_t> out) {
        out[0] = in[0];
    };
    F2Matrix id = map_matrix(f8, 1, 1, ident);
    CHECK(rank(id) == 3);
    CHECK(kernel(id).dim() == 0);

    TupleMap sq = [&f8](std::span<const std::uint32_t> in, std::span<std::uint32_t> out) {
        out[0] = f8.mul(in[0], in[0]);
    };
    CHECK(rank(map_matrix(f8, 1, 1, sq)) == 3); // Frobenius is bijective

    Field f64(6);
    TupleMap half = [&f64](std::span<const std::uint32_t> in, std::span<std::uint32_t> out) {
        out[0] = f64.frobenius(in[0], 3) ^ in[0];
    };
    CHECK(kernel(map_matrix(f64, 1, 1, half)).dim() == 3); // fixed field F_8

    // the self-check rejects non-additive maps
    TupleMap affine = [](std::span<const std::uint32_t> in, std::span<std::uint32_t> out) {
        out[0] = in[0] ^ 1;
    };
    CHECK_THROWS_AS(map_matrix(f8, 1, 1, affine), InternalCheckFailure);
}

TEST_CASE("matrix action agrees with the map on random tuples") {
    Field f(5);
    std::mt19937_64 rng(44);
    TupleMap mix = [&f](std::span<const std::uint32_t> in, std::span<std::uint32_t> out) {
        out[0] = f.mul(in[0], 3) ^ f.frobenius(in[1], 2);
        out[1] = in[0] ^ in[1];
        out[2] = f.mul(in[1], 7);
    };
    F2Matrix mat = map_matrix(f, 2, 3, mix);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::uint32_t> in{static_cast<std::uint32_t>(rng() & 31),
                                      static_cast<std::uint32_t>(rng() & 31)};
        std::vector<std::uint32_t> out(3);
        mix(in, out);
        CHECK(mat.apply(flatten_tuple(f, in)) == flatten_tuple(f, out));
    }
}

TEST_CASE("empty equation list solves to the full space") {
    Field f(4);
    TupleMap none = [](std::span<const std::uint32_t>, std::span<std::uint32_t>) {};
    CHECK(solve_linearized_system(f, 3, 0, none).dim() == 12);
}

TEST_CASE("membership system solution dimensions from the worked cases") {
    // m=7, h=2, one equation, two unknowns: q solutions
    Field f128(7);
    CHECK(build_system({1, 2}, 2, f128).solutions.dim() == 7);
    // m=9, h=2, a-tuple inside F_8: 8q solutions
    Field f512(9);
    PairSystem sys = build_system(preset_tuple(f512, "subfield-F8", 3), 2, f512);
    CHECK(sys.solutions.dim() == 12);
}

TEST_CASE("substitution oracle for the subfield system (m = 9)") {
    // Solve the two-equation system by the elimination the construction uses
    // symbolically: the first equation says z = b1 + a2 b2 + a3 b3 lies in
    // F_8; substituting b1 = mu + a2 b2 + a3 b3 into the second equation and
    // enumerating (b2, b3) counts the solutions per mu without any F_2
    // matrix algebra.
    Field f(9);
    std::vector<std::uint32_t> a = preset_tuple(f, "subfield-F8", 3);
    PairSystem sys = build_system(a, 2, f);
    REQUIRE(sys.j_lo == 3);
    REQUIRE(sys.j_hi == 4);

    // collect F_8 inside F_512
    std::vector<std::uint32_t> f8;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        if (f.frobenius(x, 3) == x) f8.push_back(x);
    REQUIRE(f8.size() == 8);

    std::vector<std::uint32_t> frob3(f.q()), frob4(f.q());
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        frob3[x] = f.frobenius(x, 3);
        frob4[x] = f.frobenius(x, 4);
    }
    auto eq = [&](int j, std::uint32_t b1, std::uint32_t b2, std::uint32_t b3) {
        const auto& fr = j == 3 ? frob3 : frob4;
        std::uint32_t s = fr[b1] ^ b1;
        s ^= f.mul(a[1], fr[b2]) ^ f.mul(fr[a[1]], b2);
        s ^= f.mul(a[2], fr[b3]) ^ f.mul(fr[a[2]], b3);
        return s;
    };

    std::uint64_t total = 0, eq3_violations = 0;
    for (std::uint32_t mu : f8) {
        std::uint64_t per_mu = 0;
        for (std::uint32_t b2 = 0; b2 < f.q(); ++b2)
            for (std::uint32_t b3 = 0; b3 < f.q(); ++b3) {
                std::uint32_t b1 = mu ^ f.mul(a[1], b2) ^ f.mul(a[2], b3);
                if (eq(3, b1, b2, b3) != 0) {
                    ++eq3_violations; // the substitution should force this to zero
                    continue;
                }
                if (eq(4, b1, b2, b3) == 0) {
                    ++per_mu;
                    // spot-check membership in the kernel-computed S
                    if ((per_mu & 63) == 1) {
                        std::vector<std::uint32_t> tup{b1, b2, b3};
                        CHECK(sys.solutions.contains(flatten_tuple(f, tup)));
                    }
                }
            }
        CHECK(per_mu == f.q()); // q solutions for every mu in F_8
        total += per_mu;
    }
    CHECK(eq3_violations == 0);
    CHECK(total == std::uint64_t{8} * f.q()); // 8q = 2^12
    CHECK((std::uint64_t{1} << sys.solutions.dim()) == total);
}
