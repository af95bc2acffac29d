#include "nchilb/asymptotics.hpp"
#include "nchilb/enumerate.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace nchilb;

TEST_CASE("growth base") {
    CHECK(growthBase(2) == BigRational(4));
    CHECK(growthBase(3) == BigRational(27, 4));
    CHECK_THROWS_AS(growthBase(1), std::invalid_argument);
}

TEST_CASE("stirling estimate agrees with the Catalan asymptotics") {
    // for m = 2, n = 1 the estimate is 4^d / (sqrt(pi) d^{3/2})
    const double direct = std::pow(4.0, 20) / (std::sqrt(M_PI) * std::pow(20.0, 1.5));
    CHECK(asymptoticChi(2, 1, 20) == Catch::Approx(direct).epsilon(1e-12));
    CHECK_THROWS_AS(asymptoticChi(1, 1, 10), std::invalid_argument);
}

TEST_CASE("euler-to-estimate ratio converges monotonically into [0.99, 1.01]") {
    for (std::uint32_t m : {2u, 3u}) {
        double prev = 0.0;
        for (std::uint64_t d : {50ull, 100ull, 200ull, 500ull}) {
            const double r = eulerAsymptoticRatio(m, 1, d);
            CHECK(r > prev);
            prev = r;
        }
        CHECK(prev >= 0.99);
        CHECK(prev <= 1.01);
    }
    // pinned value for the Catalan case
    CHECK(eulerAsymptoticRatio(2, 1, 500) == Catch::Approx(0.997755).margin(1e-5));
}

TEST_CASE("airy moment recursion") {
    const AiryMoments a = airyMoments(4);
    CHECK(a.omegas[0] == BigRational(-1));
    CHECK(a.omegas[1] == BigRational(1, 2));
    CHECK(a.omegas[2] == BigRational(5, 4));
    CHECK(a.omegas[3] == BigRational(45, 4));

    // E(X) = sqrt(pi)
    CHECK(a.moments[1].rationalPart == BigRational(1));
    CHECK(a.moments[1].timesSqrtPi);
    CHECK(a.moments[1].value == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-12));

    // E(X^2) = 10/3
    CHECK(a.moments[2].rationalPart == BigRational(10, 3));
    CHECK_FALSE(a.moments[2].timesSqrtPi);

    // E(X^3) = (15/4) sqrt(pi)
    CHECK(a.moments[3].rationalPart == BigRational(15, 4));
    CHECK(a.moments[3].timesSqrtPi);

    CHECK_THROWS_AS(airyMoments(0), std::invalid_argument);
}

TEST_CASE("limit-law trace on small degrees") {
    const LimitLawTrace t = limitLawCheck(2, {2, 3, 4}, 2);
    REQUIRE(t.entries.size() == 3);
    CHECK(t.entries[0].exact[1] == BigRational(1, 2));
    CHECK(t.entries[1].exact[1] == BigRational(7, 5));
    CHECK(t.entries[2].exact[1] == BigRational(37, 14));
    for (const auto& e : t.entries) {
        CHECK(e.exact[0] == BigRational(1));
        CHECK(e.normalized[0] == 1.0);
        const double cd = std::sqrt(8.0 / 2.0) * std::pow(double(e.d), -1.5);
        CHECK(e.normalized[1] == Catch::Approx(toDouble(e.exact[1]) * cd).epsilon(1e-12));
    }
    CHECK_THROWS_AS(limitLawCheck(1, {2, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(limitLawCheck(2, {3, 2}, 2), std::invalid_argument);
}

TEST_CASE("moments agree with direct enumeration") {
    const MomentTable table = momentSums(2, 6, 2);
    for (int d = 0; d <= 6; ++d) {
        BigInt m0 = 0, m1 = 0, m2 = 0;
        forEachForest(2, 1, static_cast<std::uint64_t>(d), [&](const Forest& f) {
            const std::uint64_t dp = dPrime(f);
            m0 += 1;
            m1 += dp;
            m2 += BigInt(dp) * dp;
        });
        CHECK(table.at(d, 0) == m0);
        CHECK(table.at(d, 1) == m1);
        CHECK(table.at(d, 2) == m2);
    }
}

TEST_CASE("big-value double conversion stays finite and accurate") {
    const BigInt catalan500 = eulerClosedForm(2, 1, 500);
    const double logv = std::log(toDouble(BigRational(catalan500) / rationalPow(BigRational(4), 400)));
    // log(C_500 / 4^400) = log(C_500) - 400 log 4; compare against Stirling
    const double expect = 500 * std::log(4.0) - std::log(std::sqrt(M_PI)) -
                          1.5 * std::log(500.0) - 400 * std::log(4.0);
    CHECK(logv == Catch::Approx(expect).margin(0.01));
}
