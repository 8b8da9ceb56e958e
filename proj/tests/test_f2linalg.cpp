#include <doctest.h>

#include <random>

#include "tracecode/f2linalg.hpp"

using namespace tracecode;

namespace {

BitVec random_vec(std::mt19937_64& rng, std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

F2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng() & 1);
    return m;
}

} // namespace

TEST_CASE("BitVec basics") {
    BitVec v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.popcount() == 3);
    CHECK(v.first_set() == 0);
    v.flip(0);
    CHECK(v.first_set() == 64);
    CHECK(!v.is_zero());
    BitVec w(130);
    w.set(64, true);
    v ^= w;
    CHECK(v.popcount() == 1);
    CHECK(v.get(129));
    CHECK_THROWS_AS(v ^= BitVec(7), InvalidArgument);

    BitVec a = BitVec::from_mask(0b1001, 4);
    CHECK(a.extract32(0, 4) == 0b1001);
    a.deposit32(1, 2, 0b01); // bits 1..2 become 1, 0
    CHECK(a.extract32(0, 4) == 0b1011);
}

TEST_CASE("BitVec hex bytes round trip") {
    // 7 bits, LSB-first: alternating word of length 7 -> single byte 0x55
    BitVec v(7);
    for (std::size_t i = 0; i < 7; i += 2) v.set(i, true);
    CHECK(v.to_hex_bytes() == "55");
    CHECK(BitVec::from_hex_bytes("55", 7) == v);

    std::mt19937_64 rng(31);
    for (std::size_t n : {1, 8, 9, 63, 64, 65, 127, 300}) {
        BitVec x = random_vec(rng, n);
        CHECK(BitVec::from_hex_bytes(x.to_hex_bytes(), n) == x);
    }
    CHECK_THROWS_AS(BitVec::from_hex_bytes("5", 7), InvalidArgument);
}

TEST_CASE("kernel dimensions: identity and zero") {
    F2Matrix id(6, 6);
    for (std::size_t i = 0; i < 6; ++i) id.set(i, i, true);
    CHECK(kernel(id).dim() == 0);
    CHECK(rank(id) == 6);

    F2Matrix zero(5, 5);
    CHECK(kernel(zero).dim() == 5);
    CHECK(rank(zero) == 0);
}

TEST_CASE("rank + nullity = ncols, kernel annihilates") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 12;
        F2Matrix m = random_matrix(rng, rows, cols);
        F2Subspace ker = kernel(m);
        CHECK(rank(m) + ker.dim() == cols);
        for (const BitVec& v : ker.basis()) CHECK(m.apply(v).is_zero());
        // every kernel element, not only the basis
        if (ker.dim() <= 6)
            for (std::uint64_t i = 0; i < (std::uint64_t{1} << ker.dim()); ++i)
                CHECK(m.apply(ker.element(i)).is_zero());
    }
}

TEST_CASE("row reduction is idempotent") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        F2Matrix m = random_matrix(rng, 2 + rng() % 7, 2 + rng() % 9);
        F2Subspace rs = row_space(m);
        F2Subspace again = F2Subspace::span_of(rs.basis(), m.ncols());
        CHECK(again.basis() == rs.basis());
        CHECK(again.dim() == rank(m));
    }
}

TEST_CASE("solve_affine: consistent and inconsistent systems") {
    std::mt19937_64 rng(34);
    int solvable = 0, unsolvable = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        F2Matrix m = random_matrix(rng, rows, cols);
        BitVec rhs = random_vec(rng, rows);
        auto sol = solve_affine(m, rhs);
        if (sol) {
            ++solvable;
            CHECK(m.apply(sol->particular) == rhs);
            for (const BitVec& v : sol->homogeneous.basis()) {
                BitVec shifted = sol->particular ^ v;
                CHECK(m.apply(shifted) == rhs);
            }
            CHECK(sol->homogeneous.dim() == cols - rank(m));
        } else {
            ++unsolvable;
        }
    }
    CHECK(solvable > 0);
    CHECK(unsolvable > 0); // the "no solution" signal is reachable

    // a solvable system with trivial kernel is not "no solution"
    F2Matrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.set(i, i, true);
    auto sol = solve_affine(id, BitVec::from_mask(0b101, 3));
    REQUIRE(sol.has_value());
    CHECK(sol->homogeneous.dim() == 0);
    CHECK(sol->particular.extract32(0, 3) == 0b101);
}

TEST_CASE("subspace membership and insertion") {
    std::mt19937_64 rng(35);
    std::vector<BitVec> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(random_vec(rng, 10));
    F2Subspace s = F2Subspace::span_of(gens, 10);
    for (const BitVec& g : gens) CHECK(s.contains(g));
    CHECK(s.contains(gens[0] ^ gens[1]));

    F2Subspace grow(10);
    std::size_t d = 0;
    for (const BitVec& g : gens)
        if (grow.insert(g)) ++d;
    CHECK(d == s.dim());
    CHECK(grow.basis() == s.basis()); // same RREF regardless of build path

    CHECK(F2Subspace::full(10).dim() == 10);
}

TEST_CASE("linear functional tables match pointwise parity") {
    std::mt19937_64 rng(36);
    for (int nvars = 0; nvars <= 12; ++nvars) {
        for (int trial = 0; trial < 6; ++trial) {
            auto mask = static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << nvars) - 1));
            BitVec t = linear_functional_table(mask, nvars);
            REQUIRE(t.size() == (std::size_t{1} << nvars));
            for (std::uint32_t x = 0; x < (std::uint32_t{1} << nvars); ++x)
                CHECK(t.get(x) == (__builtin_parity(mask & x) != 0));
        }
    }
}
