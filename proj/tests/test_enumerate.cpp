#include "nchilb/enumerate.hpp"
#include "nchilb/forest_text.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace nchilb;

TEST_CASE("binary trees with four nodes, in order") {
    const std::vector<std::string> expected = {
        "e,1,1.1,1.1.1", "e,1,1.1,1.1.2", "e,1,1.1,1.2", "e,1,1.1,2",     "e,1,1.2,1.2.1",
        "e,1,1.2,1.2.2", "e,1,1.2,2",     "e,1,2,2.1",   "e,1,2,2.2",     "e,2,2.1,2.1.1",
        "e,2,2.1,2.1.2", "e,2,2.1,2.2",   "e,2,2.2,2.2.1", "e,2,2.2,2.2.2"};
    const auto forests = enumerateForests(2, 1, 4);
    REQUIRE(forests.size() == 14);
    for (std::size_t i = 0; i < forests.size(); ++i)
        CHECK(formatForest(forests[i]) == expected[i]);
}

TEST_CASE("ternary trees with two nodes") {
    const auto forests = enumerateForests(3, 1, 2);
    REQUIRE(forests.size() == 3);
    CHECK(formatForest(forests[0]) == "e,1");
    CHECK(formatForest(forests[1]) == "e,2");
    CHECK(formatForest(forests[2]) == "e,3");
}

TEST_CASE("degree zero gives exactly the empty forest") {
    const auto f1 = enumerateForests(2, 1, 0);
    REQUIRE(f1.size() == 1);
    CHECK(formatForest(f1[0]) == "-");
    const auto f3 = enumerateForests(4, 3, 0);
    REQUIRE(f3.size() == 1);
    CHECK(formatForest(f3[0]) == "-;-;-");
}

TEST_CASE("enumeration counts match the closed formula") {
    for (std::uint32_t m = 1; m <= 4; ++m)
        for (std::uint32_t n = 1; n <= 3; ++n)
            for (std::uint64_t d = 0; d <= 5; ++d) {
                std::uint64_t count = 0;
                forEachForest(m, n, d, [&](const Forest&) { ++count; });
                CHECK(BigInt(count) == forestCount(m, n, d));
            }
    CHECK(forestCount(2, 1, 4) == 14);
    CHECK(forestCount(3, 1, 3) == 12);
    CHECK(forestCount(3, 3, 6) == 7752);
}

TEST_CASE("enumeration is strictly increasing and duplicate-free") {
    for (std::uint32_t m : {2u, 3u})
        for (std::uint32_t n : {1u, 2u}) {
            Forest prev;
            std::size_t index = 0;
            forEachForest(m, n, 5, [&](const Forest& f) {
                if (index > 0)
                    CHECK(compareForests(prev, f) == std::strong_ordering::less);
                prev = f;
                ++index;
            });
        }
}

TEST_CASE("early exit stops the walk") {
    std::size_t seen = 0;
    forEachForestUntil(2, 1, 5, [&](const Forest&) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("partitions cover the enumeration exactly once") {
    const std::uint32_t m = 2, n = 2;
    const std::uint64_t d = 5;
    std::vector<std::string> whole;
    forEachForest(m, n, d, [&](const Forest& f) { whole.push_back(formatForest(f)); });

    std::multiset<std::string> fromParts;
    for (const ForestPartition& part : listForestPartitions(m, n, d)) {
        std::string prev;
        forEachForest(
            m, n, d,
            [&](const Forest& f) {
                const std::string text = formatForest(f);
                if (!prev.empty()) {
                    const Forest a = parseForest(prev, m);
                    CHECK(compareForests(a, f) == std::strong_ordering::less);
                }
                prev = text;
                fromParts.insert(text);
            },
            &part);
    }
    CHECK(fromParts.size() == whole.size());
    CHECK(std::multiset<std::string>(whole.begin(), whole.end()) == fromParts);
}

TEST_CASE("enumeration cap refuses oversized requests") {
    CHECK_THROWS_AS(enumerateForests(2, 1, 30, 1000), CapExceeded);
    CHECK_THROWS_AS(enumeratePaths(2, 1, 30, 1000), CapExceeded);
}

TEST_CASE("lattice paths") {
    SECTION("two steps") {
        const auto paths = enumeratePaths(2, 1, 2);
        REQUIRE(paths.size() == 2);
        CHECK(paths[0].heights == std::vector<std::uint64_t>{0, 0});
        CHECK(paths[1].heights == std::vector<std::uint64_t>{0, 1});
        CHECK(coarea(paths[0], 2, 1) == 1);
        CHECK(coarea(paths[1], 2, 1) == 0);
    }
    SECTION("three steps carry the coarea polynomial 1+2q+q^2+q^3") {
        const auto paths = enumeratePaths(2, 1, 3);
        REQUIRE(paths.size() == 5);
        std::vector<int> hist(4, 0);
        for (const auto& p : paths) ++hist[coarea(p, 2, 1)];
        CHECK(hist == std::vector<int>{1, 2, 1, 1});
    }
    SECTION("empty path") {
        const auto paths = enumeratePaths(3, 2, 0);
        REQUIRE(paths.size() == 1);
        CHECK(paths[0].heights.empty());
        CHECK(coarea(paths[0], 3, 2) == 0);
    }
    SECTION("paths are equinumerous with forests and share the d' multiset") {
        for (std::uint32_t m : {2u, 3u})
            for (std::uint32_t n : {1u, 2u})
                for (std::uint64_t d = 0; d <= 6; ++d) {
                    std::vector<std::uint64_t> co, dp;
                    forEachLatticePath(m, n, d,
                                       [&](const LatticePath& p) { co.push_back(coarea(p, m, n)); });
                    forEachForest(m, n, d, [&](const Forest& f) { dp.push_back(dPrime(f)); });
                    std::sort(co.begin(), co.end());
                    std::sort(dp.begin(), dp.end());
                    CHECK(co == dp);
                }
    }
}
