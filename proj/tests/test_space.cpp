#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "ffsalem/space.hpp"

using namespace ffsalem;

TEST_CASE("space creation validates p, d and budget") {
    const SpaceParams s = SpaceParams::create(5, 2);
    CHECK(s.n == 25);
    CHECK_THROWS_AS(SpaceParams::create(4, 2), input_error);
    CHECK_THROWS_AS(SpaceParams::create(1, 2), input_error);
    CHECK_THROWS_AS(SpaceParams::create(9, 1), input_error);
    CHECK_THROWS_AS(SpaceParams::create(5, 0), input_error);
    // 2^27 points exceeds the default 2^26 budget
    CHECK_THROWS_AS(SpaceParams::create(2, 27), resource_error);
    CHECK(SpaceParams::create(2, 26).n == (std::uint64_t{1} << 26));
}

TEST_CASE("index_of examples") {
    const SpaceParams s52 = SpaceParams::create(5, 2);
    CHECK(index_of(s52, std::vector<std::uint32_t>{0, 0}) == 0);
    CHECK(index_of(s52, std::vector<std::uint32_t>{3, 2}) == 13);
    const SpaceParams s33 = SpaceParams::create(3, 3);
    CHECK(index_of(s33, std::vector<std::uint32_t>{2, 2, 2}) == 26);

    CHECK_THROWS_AS(index_of(s52, std::vector<std::uint32_t>{5, 0}), input_error);
    CHECK_THROWS_AS(index_of(s52, std::vector<std::uint32_t>{1}), input_error);
}

TEST_CASE("coords_of examples") {
    const SpaceParams s52 = SpaceParams::create(5, 2);
    CHECK(coords_of(s52, 0) == std::vector<std::uint32_t>{0, 0});
    CHECK(coords_of(s52, 13) == std::vector<std::uint32_t>{3, 2});
    const SpaceParams s24 = SpaceParams::create(2, 4);
    CHECK(coords_of(s24, 11) == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK_THROWS_AS(coords_of(s52, 25), input_error);
}

TEST_CASE("index_of and coords_of are inverse on every small space") {
    for (const auto& [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 13}, {3, 8}, {5, 5}, {7, 4}, {13, 3}, {97, 2}}) {
        const SpaceParams s = SpaceParams::create(p, d);
        REQUIRE(s.n <= 10'000);
        for (std::uint64_t i = 0; i < s.n; ++i)
            CHECK(index_of(s, coords_of(s, i)) == i);
    }
}

TEST_CASE("dot examples") {
    const SpaceParams s52 = SpaceParams::create(5, 2);
    CHECK(dot(s52, std::vector<std::uint32_t>{1, 2}, std::vector<std::uint32_t>{3, 4}) == 1);
    CHECK(dot(s52, std::vector<std::uint32_t>{4, 3}, std::vector<std::uint32_t>{0, 0}) == 0);
    const SpaceParams s31 = SpaceParams::create(3, 1);
    CHECK(dot(s31, std::vector<std::uint32_t>{2}, std::vector<std::uint32_t>{2}) == 1);
}

TEST_CASE("dot is symmetric and bilinear mod p on exhaustive small spaces") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::uint32_t d : {1u, 2u}) {
            const SpaceParams s = SpaceParams::create(p, d);
            for (std::uint64_t a = 0; a < s.n; ++a) {
                for (std::uint64_t b = 0; b < s.n; ++b) {
                    CHECK(dot_indices(s, a, b) == dot_indices(s, b, a));
                    for (std::uint64_t c = 0; c < s.n; ++c) {
                        // (a + b) . c == a.c + b.c mod p
                        const auto ca = coords_of(s, a);
                        const auto cb = coords_of(s, b);
                        std::vector<std::uint32_t> sum(s.d);
                        for (std::uint32_t i = 0; i < s.d; ++i) sum[i] = (ca[i] + cb[i]) % p;
                        CHECK(dot_indices(s, index_of(s, sum), c) ==
                              (dot_indices(s, a, c) + dot_indices(s, b, c)) % p);
                    }
                }
            }
        }
    }
}

TEST_CASE("dot matches dot_indices") {
    const SpaceParams s = SpaceParams::create(7, 2);
    for (std::uint64_t a = 0; a < s.n; ++a)
        for (std::uint64_t b = 0; b < s.n; ++b)
            CHECK(dot(s, coords_of(s, a), coords_of(s, b)) == dot_indices(s, a, b));
}
