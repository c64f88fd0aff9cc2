#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "cutgen/bitcodec.hpp"
#include "cutgen/lambda_map.hpp"

using cutgen::BitString;
using cutgen::Code;

TEST_CASE("edge indexing enumerates pairs row by row") {
    const cutgen::EdgeIndexing idx(4);
    CHECK(idx.edge_count() == 6);
    CHECK(idx.edge(0) == std::pair{1, 2});
    CHECK(idx.edge(1) == std::pair{1, 3});
    CHECK(idx.edge(2) == std::pair{1, 4});
    CHECK(idx.edge(3) == std::pair{2, 3});
    CHECK(idx.edge(4) == std::pair{2, 4});
    CHECK(idx.edge(5) == std::pair{3, 4});
    for (std::size_t pos = 0; pos < idx.edge_count(); ++pos) {
        const auto [i, j] = idx.edge(pos);
        CHECK(idx.position(i, j) == pos);
    }
    CHECK_THROWS_AS(cutgen::EdgeIndexing(1), std::invalid_argument);
    CHECK_THROWS_AS(idx.position(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(idx.position(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(idx.position(3, 5), std::invalid_argument);
}

TEST_CASE("cut vectors of small bipartitions") {
    CHECK(cutgen::cut_vector({1}, 3) == BitString::from_string("110"));
    CHECK(cutgen::cut_vector({3}, 3) == BitString::from_string("011"));
    CHECK(cutgen::cut_vector({}, 3) == BitString::from_string("000"));
    CHECK(cutgen::cut_vector({1, 2, 3}, 3) == BitString::from_string("000"));
    CHECK(cutgen::cut_vector({1, 3}, 4) == BitString::from_string("101101"));
    CHECK_THROWS_AS(cutgen::cut_vector({0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(cutgen::cut_vector({4}, 3), std::invalid_argument);
}

TEST_CASE("cut vector is invariant under complementing the subset") {
    for (int n = 2; n <= 6; ++n) {
        for (Code mask = 0; mask < cutgen::pow2(static_cast<std::size_t>(n)); ++mask) {
            std::vector<int> subset;
            std::vector<int> rest;
            for (int i = 1; i <= n; ++i) {
                (boost::multiprecision::bit_test(mask, static_cast<unsigned>(i - 1)) ? subset : rest)
                    .push_back(i);
            }
            REQUIRE(cutgen::cut_vector(subset, n) == cutgen::cut_vector(rest, n));
        }
    }
}

TEST_CASE("agreement map at vector level") {
    CHECK(cutgen::lambda_vec(BitString::from_string("11")) == BitString::from_string("1"));
    CHECK(cutgen::lambda_vec(BitString::from_string("10")) == BitString::from_string("0"));
    CHECK(cutgen::lambda_vec(BitString::from_string("11010")) ==
          BitString::from_string("1010010010"));
    CHECK_THROWS_AS(cutgen::lambda_vec(BitString::from_string("1")), std::invalid_argument);
}

TEST_CASE("agreement map by prefix recursion") {
    CHECK(cutgen::lambda_str(BitString::from_string("0100")) == BitString::from_string("011001"));
    CHECK(cutgen::lambda_str(BitString::from_string("1100")) == BitString::from_string("100001"));
    CHECK(cutgen::lambda_str(BitString::from_string("11")) == BitString::from_string("1"));
}

TEST_CASE("vector, recursive and integer routes agree on every input") {
    for (int n = 2; n <= 12; ++n) {
        const std::size_t m = cutgen::choose2(static_cast<std::size_t>(n));
        for (Code k = 0; k < cutgen::pow2(static_cast<std::size_t>(n)); ++k) {
            const BitString x = cutgen::decode(k, static_cast<std::size_t>(n));
            const BitString viaPairs = cutgen::lambda_vec(x);
            REQUIRE(viaPairs.width() == m);
            REQUIRE(cutgen::lambda_str(x) == viaPairs);
            REQUIRE(cutgen::lambda_int(k, n) == cutgen::encode(viaPairs));
        }
    }
}

TEST_CASE("integer-level agreement map on known points") {
    CHECK(cutgen::lambda_int(9, 4) == 12);
    CHECK(cutgen::lambda_int(15, 4) == 63);
    CHECK(cutgen::lambda_int(5, 3) == 2);
    CHECK_THROWS_AS(cutgen::lambda_int(16, 4), std::invalid_argument);
    CHECK_THROWS_AS(cutgen::lambda_int(-1, 4), std::invalid_argument);
}

TEST_CASE("complementing the input leaves the agreement map unchanged") {
    for (int n = 2; n <= 10; ++n) {
        for (Code k = 0; k < cutgen::pow2(static_cast<std::size_t>(n)); ++k) {
            const BitString x = cutgen::decode(k, static_cast<std::size_t>(n));
            CHECK(cutgen::lambda_vec(cutgen::complement(x)) == cutgen::lambda_vec(x));
        }
    }
}

TEST_CASE("complement of the agreement map is the cut vector of the support") {
    for (int n = 2; n <= 8; ++n) {
        for (Code k = 0; k < cutgen::pow2(static_cast<std::size_t>(n)); ++k) {
            const BitString x = cutgen::decode(k, static_cast<std::size_t>(n));
            REQUIRE(cutgen::complement(cutgen::lambda_vec(x)) ==
                    cutgen::cut_vector(cutgen::support(x), n));
        }
    }
}

TEST_CASE("support lists the 1-positions using 1-based indices") {
    CHECK(cutgen::support(BitString::from_string("1010")) == std::vector<int>{1, 3});
    CHECK(cutgen::support(BitString::from_string("0001")) == std::vector<int>{4});
    CHECK(cutgen::support(BitString::from_string("000")).empty());
}

TEST_CASE("brute-force vertex enumeration for small n") {
    const auto v2 = cutgen::oracle_vertices(2);
    REQUIRE(v2.size() == 2);
    CHECK(v2[0].code == 0);
    CHECK(v2[1].code == 1);

    const auto v3 = cutgen::oracle_vertices(3);
    REQUIRE(v3.size() == 4);
    const std::vector<int> expected3 = {1, 2, 4, 7};
    for (std::size_t i = 0; i < v3.size(); ++i) {
        CHECK(v3[i].n == 3);
        CHECK(v3[i].k == i + 1);
        CHECK(v3[i].code == expected3[i]);
        REQUIRE(v3[i].coords.has_value());
        CHECK(cutgen::encode(*v3[i].coords) == v3[i].code);
    }

    const auto v4 = cutgen::oracle_vertices(4);
    REQUIRE(v4.size() == 8);
    const std::vector<int> expected4 = {7, 12, 18, 25, 33, 42, 52, 63};
    for (std::size_t i = 0; i < v4.size(); ++i) CHECK(v4[i].code == expected4[i]);
    CHECK(v4[0].coords == BitString::from_string("000111"));
    CHECK(v4[7].coords == BitString::from_string("111111"));
}

TEST_CASE("brute-force enumeration is strictly increasing with known endpoints") {
    for (int n = 2; n <= 10; ++n) {
        const auto rows = cutgen::oracle_vertices(n);
        REQUIRE(rows.size() == static_cast<std::size_t>(1) << (n - 1));
        const std::size_t e = cutgen::choose2(static_cast<std::size_t>(n - 1));
        CHECK(rows.front().code == cutgen::pow2(e) - 1);
        CHECK(rows.back().code == cutgen::pow2(cutgen::choose2(static_cast<std::size_t>(n))) - 1);
        for (std::size_t i = 1; i < rows.size(); ++i) REQUIRE(rows[i - 1].code < rows[i].code);
    }
}

TEST_CASE("brute-force enumeration rejects out-of-range n") {
    CHECK_THROWS_AS(cutgen::oracle_vertices(1), std::invalid_argument);
    CHECK_THROWS_AS(cutgen::oracle_vertices(21), std::invalid_argument);
    CHECK_THROWS_AS(cutgen::oracle_vertices(6, 5), std::invalid_argument);
}
