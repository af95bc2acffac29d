#include "nchilb/census.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nchilb;

TEST_CASE("general linear group orders") {
    CHECK(glOrder(1, 2) == 1);
    CHECK(glOrder(2, 2) == 6);
    CHECK(glOrder(2, 3) == 48);
    CHECK(glOrder(0, 5) == 1);
}

TEST_CASE("brute-force point counts match the cell prediction") {
    struct Config {
        std::uint32_t m, n, d;
        std::uint64_t p;
    };
    for (const Config& c : {Config{2, 1, 1, 2}, Config{2, 1, 1, 3}, Config{2, 1, 2, 2},
                            Config{2, 1, 2, 3}, Config{3, 1, 1, 2}, Config{1, 2, 2, 2},
                            Config{2, 2, 1, 2}, Config{1, 2, 1, 2}}) {
        const CensusReport rep = bruteForceCount(c.m, c.n, c.d, c.p);
        CHECK(rep.pointCount == predictedPointCount(c.m, c.n, c.d, BigInt(c.p)));
        CHECK(rep.stableTupleCount == rep.pointCount * rep.glOrderValue);
    }
}

TEST_CASE("pinned counts") {
    CHECK(bruteForceCount(2, 1, 1, 2).pointCount == 4);
    CHECK(bruteForceCount(2, 1, 1, 2).stableTupleCount == 4);
    CHECK(bruteForceCount(2, 1, 2, 2).pointCount == 96);
    CHECK(bruteForceCount(2, 1, 2, 3).pointCount == 972);
    CHECK(predictedPointCount(2, 1, 1, 2) == 4);
    CHECK(predictedPointCount(2, 1, 2, 2) == 96);
    CHECK(predictedPointCount(2, 1, 2, 3) == 972);
}

TEST_CASE("cell census splits the count by forest") {
    SECTION("two-node binary trees over F_2") {
        const CensusReport rep = cellCensus(2, 1, 2, 2);
        REQUIRE(rep.perCell.size() == 2);
        CHECK(rep.perCell.at("e,1") == 64); // 2^6
        CHECK(rep.perCell.at("e,2") == 32); // 2^5
        CHECK(rep.pointCount == 96);
    }
    SECTION("single node over F_2") {
        const CensusReport rep = cellCensus(2, 1, 1, 2);
        REQUIRE(rep.perCell.size() == 1);
        CHECK(rep.perCell.at("e") == 4); // 2^m
    }
    SECTION("degree zero") {
        const CensusReport rep = cellCensus(3, 2, 0, 5);
        REQUIRE(rep.perCell.size() == 1);
        CHECK(rep.perCell.at("-;-") == 1);
        CHECK(rep.pointCount == 1);
    }
    SECTION("every cell carries p^{d(F)} points") {
        const CensusReport rep = cellCensus(2, 1, 2, 3);
        forEachForest(2, 1, 2, [&](const Forest& f) {
            CHECK(rep.perCell.at(formatForest(f)) ==
                  pow(BigInt(3), static_cast<unsigned>(dStat(f))));
        });
    }
}

TEST_CASE("search-space cap refuses oversized runs") {
    CHECK_THROWS_AS(bruteForceCount(2, 1, 3, 7), CapExceeded);
    CHECK_THROWS_AS(cellCensus(2, 1, 3, 7), CapExceeded);
}
