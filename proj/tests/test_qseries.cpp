#include "nchilb/betti.hpp"
#include "nchilb/enumerate.hpp"
#include "nchilb/zeta.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace nchilb;

namespace {

QPolynomial poly(std::initializer_list<int> cs) {
    std::vector<BigInt> v;
    for (int c : cs) v.emplace_back(c);
    return QPolynomial(std::move(v));
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    const QPolynomial a = poly({1, 2});     // 1 + 2q
    const QPolynomial b = poly({0, 1, 1});  // q + q^2
    CHECK(a * b == poly({0, 1, 3, 2}));
    CHECK(a.shifted(2) == poly({0, 0, 1, 2}));
    CHECK((a - a).isZero());
    CHECK(a.evaluate(3) == 7);
    CHECK(b.derivativeAt1(1) == 3);
    CHECK(poly({5}).degree() == 0);
    CHECK(QPolynomial{}.degree() == -1);
    CHECK(qPochhammerRange(1, 2) == poly({1, -1, -1, 1}));
}

TEST_CASE("jets track polynomial derivatives through products") {
    std::mt19937_64 rng(7);
    const int order = 3;
    auto randomPoly = [&]() {
        std::vector<BigInt> c(1 + rng() % 5);
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % 11) - 5;
        return QPolynomial(std::move(c));
    };
    auto jetOf = [&](const QPolynomial& p) {
        std::vector<BigInt> v;
        for (int j = 0; j <= order; ++j) v.push_back(p.derivativeAt1(j));
        return QJet(std::move(v));
    };
    for (int trial = 0; trial < 200; ++trial) {
        const QPolynomial p = randomPoly(), q = randomPoly();
        CHECK(jetOf(p) * jetOf(q) == jetOf(p * q));
        const std::uint64_t e = rng() % 20;
        CHECK(jetOf(p) * QJet::qPower(order, static_cast<std::int64_t>(e)) ==
              jetOf(p.shifted(e)));
    }
}

TEST_CASE("modified zeta function of binary trees") {
    const TSeries s = zetaBar(2, 1, 4);
    CHECK(s.at(0) == poly({1}));
    CHECK(s.at(1) == poly({1}));
    CHECK(s.at(2) == poly({1, 1}));
    CHECK(s.at(3) == poly({1, 2, 1, 1}));
    CHECK(s.at(4) == poly({1, 3, 3, 3, 2, 1, 1}));
}

TEST_CASE("m=1 gives the geometric product") {
    const TSeries s = zetaBar(1, 2, 6);
    // 1/((1-t)(1-qt)): coefficient of t^d is 1 + q + ... + q^d
    for (int d = 0; d <= 6; ++d) {
        std::vector<BigInt> ones(static_cast<std::size_t>(d) + 1, 1);
        CHECK(s.at(d) == QPolynomial(std::move(ones)));
    }
}

TEST_CASE("constant coefficient is always one") {
    for (std::uint32_t m : {1u, 2u, 3u, 4u})
        for (std::uint32_t n : {1u, 2u, 3u})
            CHECK(zetaBar(m, n, 0).at(0) == poly({1}));
}

TEST_CASE("zeta coefficients match the forest statistics") {
    for (std::uint32_t m : {2u, 3u})
        for (std::uint32_t n : {1u, 2u}) {
            const TSeries s = zetaBar(m, n, 6);
            for (int d = 0; d <= 6; ++d) {
                std::vector<BigInt> hist(dPrimeMax(m, n, static_cast<std::uint64_t>(d)) + 1, 0);
                forEachForest(m, n, static_cast<std::uint64_t>(d),
                              [&](const Forest& f) { ++hist[dPrime(f)]; });
                CHECK(s.at(d) == QPolynomial(std::move(hist)));
            }
        }
}

TEST_CASE("unmodified zeta carries the dimension statistic") {
    const TSeries s = zetaUnmodified(2, 1, 2);
    CHECK(s.at(0) == poly({1}));
    CHECK(s.at(1) == QPolynomial::monomial(1, 2));                       // q^2
    CHECK(s.at(2) == QPolynomial::monomial(1, 5) + QPolynomial::monomial(1, 6)); // q^5 + q^6
}

TEST_CASE("gamma series coefficients") {
    const GammaSeries g = gammaSeries(2, 3);
    CHECK(g.num[0] == poly({1}));
    CHECK(g.den[0] == poly({1}));
    CHECK(g.num[1] == poly({-1}));
    CHECK(g.den[1] == poly({1, -1}));
    CHECK(g.num[2] == QPolynomial::monomial(1, 2)); // q^{2*1} = q^2
    CHECK(g.den[2] == qPochhammerRange(1, 2));
}

TEST_CASE("gamma identity holds with the corrected exponent") {
    CHECK(verifyGammaIdentity(1, 1, 8).allPassed());
    CHECK(verifyGammaIdentity(2, 1, 8).allPassed());
    CHECK(verifyGammaIdentity(3, 2, 8).allPassed());
}

TEST_CASE("continued fraction expansion") {
    SECTION("depth one is the geometric series") {
        const auto cf = continuedFractionConvergent(1);
        REQUIRE(cf.num.size() == 1);
        CHECK(cf.num[0] == poly({1}));
        REQUIRE(cf.den.size() == 2);
        CHECK(cf.den[0] == poly({1}));
        CHECK(cf.den[1] == poly({-1}));
    }
    CHECK(continuedFractionCheck(1).allPassed());
    CHECK(continuedFractionCheck(3).allPassed());
    CHECK(continuedFractionCheck(10).allPassed());
}

TEST_CASE("euler numbers") {
    const auto catalan = eulerNumbers(2, 1, 6);
    CHECK(catalan == std::vector<BigInt>{1, 1, 2, 5, 14, 42, 132});
    const auto fuss = eulerNumbers(3, 1, 4);
    CHECK(fuss == std::vector<BigInt>{1, 1, 3, 12, 55});
    CHECK(eulerNumbers(3, 3, 6)[6] == 7752);
    for (int d = 0; d <= 6; ++d)
        CHECK(catalan[static_cast<std::size_t>(d)] ==
              forestCount(2, 1, static_cast<std::uint64_t>(d)));
}

TEST_CASE("moment sums") {
    const MomentTable t = momentSums(2, 6, 2);
    CHECK(t.at(2, 1) == 1);
    CHECK(t.at(3, 1) == 7);
    CHECK(t.at(4, 1) == 37);
    CHECK(t.at(0, 1) == 0);
    CHECK(t.at(0, 2) == 0);
    for (int d = 0; d <= 6; ++d)
        CHECK(t.at(d, 0) == forestCount(2, 1, static_cast<std::uint64_t>(d)));
    CHECK_THROWS_AS(momentSums(1, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(momentSums(2, 4, 5), std::invalid_argument);
}

TEST_CASE("intersection polynomial equals the shifted zeta coefficient") {
    for (std::uint32_t m : {1u, 2u, 3u})
        for (std::uint32_t n : {1u, 2u}) {
            const TSeries s = zetaUnmodified(m, n, 6);
            for (std::uint64_t d = 0; d <= 6; ++d)
                CHECK(bettiNumbers(m, n, d).intersectionPoly == s.at(static_cast<int>(d)));
        }
}

TEST_CASE("ambient dimension and degree-zero tables") {
    CHECK(ambientDimension(2, 1, 2) == 6);
    CHECK(ambientDimension(3, 3, 6) == 90);
    CHECK(ambientDimension(4, 2, 0) == 0);

    CHECK(eulerClosedForm(2, 1, 0) == 1);
    CHECK(eulerClosedForm(4, 3, 0) == 1);

    const BettiTable t0 = bettiNumbers(3, 2, 0);
    REQUIRE(t0.betti.size() == 1);
    CHECK(t0.betti[0] == 1);
    CHECK(t0.intersectionPoly == QPolynomial(1));
}

TEST_CASE("special value partial sums") {
    CHECK(specialValuePartialSum(2, 1, 0) == BigRational(1));
    CHECK(specialValuePartialSum(2, 1, 2) == BigRational(11, 8));
    const BigRational s10 = specialValuePartialSum(2, 1, 10);
    const BigRational s50 = specialValuePartialSum(2, 1, 50);
    CHECK(s10 < s50);
    CHECK(s50 < 2);
    CHECK_THROWS_AS(specialValuePartialSum(1, 1, 5), std::invalid_argument);
}
