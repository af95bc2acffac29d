#include "nchilb/cells.hpp"
#include "nchilb/forest_text.hpp"
#include "nchilb/serialize.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace nchilb;

namespace {

Word w(std::initializer_list<Letter> ls) { return Word{std::vector<Letter>(ls)}; }

template <class Fld>
LambdaAssignment<Fld> zeroLambda(const Forest& f, const Fld& field) {
    LambdaAssignment<Fld> lam;
    for (const DPair& p : dPairs(f)) lam.values.emplace(p, field.zero());
    return lam;
}

} // namespace

TEST_CASE("pinned box pattern of the six-node ternary example") {
    const Forest ex = parseForest("e,1,1.3,2;-;e,3", 3);
    const PatternMatrices pm = patternMatrices(ex);
    CHECK(pm.freeCount() == 61);
    CHECK(pm.freeCount() == dStat(ex));

    using P = PatternEntry;
    const std::vector<std::vector<P>> expectedF = {
        {P::One, P::Free, P::Zero}, {P::Zero, P::Free, P::Zero}, {P::Zero, P::Free, P::Zero},
        {P::Zero, P::Free, P::Zero}, {P::Zero, P::Zero, P::One}, {P::Zero, P::Zero, P::Zero}};
    CHECK(pm.f == expectedF);

    auto row = [](const char* s) {
        std::vector<P> r;
        for (; *s; ++s) r.push_back(*s == '0' ? P::Zero : (*s == '1' ? P::One : P::Free));
        return r;
    };
    const std::vector<std::vector<P>> phi1 = {row("0*****"), row("1*****"), row("00****"),
                                              row("000***"), row("0000**"), row("00000*")};
    const std::vector<std::vector<P>> phi2 = {row("0*****"), row("0*****"), row("00****"),
                                              row("100***"), row("0000**"), row("00000*")};
    const std::vector<std::vector<P>> phi3 = {row("*0**0*"), row("*0**0*"), row("*1**0*"),
                                              row("*00*0*"), row("00000*"), row("00001*")};
    CHECK(pm.phi[0] == phi1);
    CHECK(pm.phi[1] == phi2);
    CHECK(pm.phi[2] == phi3);
}

TEST_CASE("free parameter counts equal the dimension statistic") {
    for (std::uint32_t m : {2u, 3u})
        for (std::uint32_t n : {1u, 2u})
            for (std::uint64_t d = 0; d <= 4; ++d)
                forEachForest(m, n, d, [&](const Forest& f) {
                    CHECK(patternMatrices(f).freeCount() == dStat(f));
                });
}

TEST_CASE("zero lambda still yields a stable cell member") {
    const PrimeField field(101);
    for (const char* text : {"e,1", "e,2", "e,1,2", "e;-"}) {
        const std::uint32_t m = 2;
        const Forest f = parseForest(text, m);
        const auto p = normalFormFromCell(f, zeroLambda(f, field), field);
        CHECK(isStable(p));
        CHECK(inCell(p, f));
        CHECK(compareForests(classifyCell(p), f) == std::strong_ordering::equal);
    }
}

TEST_CASE("round trips over F_101 and over the rationals") {
    std::mt19937_64 rng(424242);
    auto sweep = [&](auto field) {
        for (std::uint32_t m : {2u, 3u})
            for (std::uint32_t n : {1u, 2u})
                for (std::uint64_t d = 0; d <= 3; ++d)
                    forEachForest(m, n, d, [&](const Forest& f) {
                        for (int t = 0; t < 3; ++t) {
                            const auto lam = randomLambda(f, field, rng);
                            const auto p = normalFormFromCell(f, lam, field);
                            REQUIRE(isStable(p));
                            CHECK(inCell(p, f));
                            CHECK(compareForests(classifyCell(p), f) ==
                                  std::strong_ordering::equal);
                            CHECK(compareForests(classifyCellGreedy(p), f) ==
                                  std::strong_ordering::equal);
                            const auto rec = lambdaCoordinates(p, f);
                            CHECK(rec.values == lam.values);
                        }
                    });
    };
    sweep(PrimeField(101));
    sweep(RationalField{});
}

TEST_CASE("degenerate points") {
    const PrimeField field(5);
    SECTION("zero f is out of every nonempty chart and unstable") {
        CellPoint<PrimeField> p{2, 1, 2, field, Matrix<PrimeField>(2, 1, 0),
                                {Matrix<PrimeField>(2, 2, 0), Matrix<PrimeField>(2, 2, 0)}};
        p.phi[0].at(0, 1) = 1; // arbitrary
        CHECK_FALSE(isStable(p));
        CHECK_THROWS_AS(classifyCell(p), UnstablePoint);
        CHECK_THROWS_AS(classifyCellGreedy(p), UnstablePoint);
        const Forest f = parseForest("e,1", 2);
        CHECK_THROWS_AS(lambdaCoordinates(p, f), NotInChart);
    }
    SECTION("d = 1 points classify to the first generating column") {
        CellPoint<PrimeField> p{1, 2, 1, field, Matrix<PrimeField>(1, 2, 0),
                                {Matrix<PrimeField>(1, 1, 0)}};
        p.f.at(0, 0) = 2;
        p.f.at(0, 1) = 3;
        CHECK(formatForest(classifyCell(p)) == "e;-");
        p.f.at(0, 0) = 0;
        CHECK(formatForest(classifyCell(p)) == "-;e");
    }
    SECTION("d = 1 stability") {
        CellPoint<PrimeField> p{2, 1, 1, field, Matrix<PrimeField>(1, 1, 0),
                                {Matrix<PrimeField>(1, 1, 0), Matrix<PrimeField>(1, 1, 0)}};
        CHECK_FALSE(isStable(p));
        p.f.at(0, 0) = 1;
        CHECK(isStable(p));
    }
}

TEST_CASE("single-node coordinates are the entries of phi_i f") {
    const PrimeField field(7);
    CellPoint<PrimeField> p{2, 1, 1, field, Matrix<PrimeField>(1, 1, 1),
                            {Matrix<PrimeField>(1, 1, 3), Matrix<PrimeField>(1, 1, 5)}};
    const Forest f = parseForest("e", 2);
    const auto lam = lambdaCoordinates(p, f);
    REQUIRE(lam.values.size() == 2);
    CHECK(lam.values.at({NodeRef{1, Word{}}, NodeRef{1, w({1})}}) == 3);
    CHECK(lam.values.at({NodeRef{1, Word{}}, NodeRef{1, w({2})}}) == 5);
}

TEST_CASE("random normal form of the six-node example is stable in its cell") {
    const PrimeField field(101);
    const Forest ex = parseForest("e,1,1.3,2;-;e,3", 3);
    std::mt19937_64 rng(2024);
    const auto lam = randomLambda(ex, field, rng);
    const auto p = normalFormFromCell(ex, lam, field);
    CHECK(isStable(p));
    CHECK(inCell(p, ex));
    CHECK(compareForests(classifyCell(p), ex) == std::strong_ordering::equal);
    CHECK(compareForests(classifyCellGreedy(p), ex) == std::strong_ordering::equal);
    const auto rec = lambdaCoordinates(p, ex);
    CHECK(rec.values == lam.values);
}

TEST_CASE("lambda domain is validated") {
    const PrimeField field(101);
    const Forest f = parseForest("e,1", 2);
    LambdaAssignment<PrimeField> lam; // empty, but D(F) has 6 pairs
    CHECK_THROWS_AS(normalFormFromCell(f, lam, field), std::invalid_argument);
    CHECK_THROWS_AS(submoduleGenerators(f, lam), std::invalid_argument);
}

TEST_CASE("submodule generators") {
    const PrimeField field(101);
    SECTION("empty forest: the whole module") {
        const Forest f = parseForest("-", 1);
        const auto gens = submoduleGenerators(f, zeroLambda(f, field));
        REQUIRE(gens.size() == 1);
        CHECK(gens[0].lead == NodeRef{1, w({})});
        CHECK(gens[0].tail.empty());
    }
    SECTION("single node, two letters") {
        const Forest f = parseForest("e", 2);
        std::mt19937_64 rng(5);
        const auto lam = randomLambda(f, field, rng);
        const auto gens = submoduleGenerators(f, lam);
        REQUIRE(gens.size() == 2);
        CHECK(gens[0].lead == NodeRef{1, w({1})});
        CHECK(gens[1].lead == NodeRef{1, w({2})});
        for (const auto& g : gens) {
            REQUIRE(g.tail.size() == 1);
            CHECK(g.tail.begin()->first == NodeRef{1, w({})});
        }
    }
    SECTION("six-node example: leads are the critical pairs, none in the forest") {
        const Forest f = parseForest("e,1,1.3,2;-;e,3", 3);
        std::mt19937_64 rng(5);
        const auto lam = randomLambda(f, field, rng);
        const auto gens = submoduleGenerators(f, lam);
        const auto crit = criticalSet(f);
        REQUIRE(gens.size() == 15);
        REQUIRE(gens.size() == crit.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            CHECK(gens[i].lead == crit[i]);
            CHECK_FALSE(f.contains(gens[i].lead));
            for (const auto& [node, value] : gens[i].tail) CHECK(node < gens[i].lead);
        }
    }
}

TEST_CASE("series JSON carries decimal-string coefficients") {
    const Json j = toJson(zetaBar(2, 1, 2));
    CHECK(j.at("m") == 2);
    CHECK(j.at("n") == 1);
    CHECK(j.at("dmax") == 2);
    REQUIRE(j.at("coeffs").size() == 3);
    CHECK(j.at("coeffs")[2] == Json::array({"1", "1"}));
}

TEST_CASE("cell point JSON round trip") {
    std::mt19937_64 rng(99);
    const Forest f = parseForest("e,1", 2);
    SECTION("prime field") {
        const PrimeField field(101);
        const auto p = normalFormFromCell(f, randomLambda(f, field, rng), field);
        const Json j = toJson(p);
        const AnyCellPoint back = cellPointFromJson(j);
        REQUIRE(std::holds_alternative<CellPoint<PrimeField>>(back));
        CHECK(toJson(std::get<CellPoint<PrimeField>>(back)) == j);
    }
    SECTION("rationals") {
        const RationalField field;
        const auto p = normalFormFromCell(f, randomLambda(f, field, rng), field);
        const Json j = toJson(p);
        const AnyCellPoint back = cellPointFromJson(j);
        REQUIRE(std::holds_alternative<CellPoint<RationalField>>(back));
        CHECK(toJson(std::get<CellPoint<RationalField>>(back)) == j);
    }
}
