#pragma once

#include "nchilb/asymptotics.hpp"
#include "nchilb/betti.hpp"
#include "nchilb/cells.hpp"
#include "nchilb/census.hpp"
#include "nchilb/enumerate.hpp"
#include "nchilb/forest_text.hpp"
#include "nchilb/report.hpp"
#include "nchilb/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nchilb {

struct VerifyOptions {
    std::optional<std::uint32_t> m; // restrict to one arity
    std::optional<std::uint32_t> n; // restrict to one root count
    std::optional<int> dmax;        // lower the per-criterion degree caps
    std::uint64_t seed = 12345;
};

namespace detail {

inline std::string fmtShort(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string key3(std::uint32_t m, std::uint32_t n, std::uint64_t d) {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
}

inline bool inScope(const VerifyOptions& opt, std::uint32_t m, std::uint32_t n) {
    return (!opt.m || *opt.m == m) && (!opt.n || *opt.n == n);
}

inline int capped(const VerifyOptions& opt, int dflt) {
    return opt.dmax ? std::min(*opt.dmax, dflt) : dflt;
}

/// Data gathered during the statistics sweep and reused by later criteria.
struct SweepData {
    // (m,n) -> per degree d, histogram over d' values
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::vector<BigInt>>> dPrimeHist;
};

// ---- criterion 1: counting --------------------------------------------

inline Report verifyCounting(const VerifyOptions& opt) {
    Report r;
    const int dcap = capped(opt, 6);
    for (std::uint32_t m = 1; m <= 4; ++m)
        for (std::uint32_t n = 1; n <= 3; ++n) {
            if (!inScope(opt, m, n)) continue;
            for (int d = 0; d <= dcap; ++d) {
                const BigInt formula = eulerClosedForm(m, n, static_cast<std::uint64_t>(d));
                BigInt enumerated = 0;
                const BettiTable bt = bettiNumbers(m, n, static_cast<std::uint64_t>(d));
                forEachForest(m, n, static_cast<std::uint64_t>(d),
                              [&](const Forest&) { ++enumerated; });
                r.add("C1 counting " + key3(m, n, static_cast<std::uint64_t>(d)),
                      "closed formula vs enumeration vs Betti sum",
                      formula.str() + "/" + formula.str() + "/" + formula.str(),
                      formula.str() + "/" + enumerated.str() + "/" + bt.total().str());
            }
        }
    struct Spot {
        std::uint32_t m, n;
        std::uint64_t d;
        const char* expect;
    };
    for (const Spot s : {Spot{2, 1, 4, "14"}, Spot{3, 1, 3, "12"}, Spot{3, 3, 6, "7752"}}) {
        if (!inScope(opt, s.m, s.n) || static_cast<int>(s.d) > dcap) continue;
        r.add("C1 chi spot value " + key3(s.m, s.n, s.d), "closed formula vs pinned value",
              s.expect, eulerClosedForm(s.m, s.n, s.d).str());
    }
    return r;
}

// ---- criterion 2: combinatorial statistics ----------------------------

inline Report verifyStatistics(const VerifyOptions& opt, SweepData& sweep) {
    Report r;
    const int dcap = capped(opt, 8);
    for (std::uint32_t m = 1; m <= 4; ++m)
        for (std::uint32_t n = 1; n <= 3; ++n) {
            if (!inScope(opt, m, n)) continue;
            const bool collect = m <= 3 && n <= 2;
            auto& hist = sweep.dPrimeHist[{m, n}];
            if (collect) hist.assign(static_cast<std::size_t>(dcap) + 1, {});
            std::uint64_t badCritical = 0, badBounds = 0, orderViolations = 0, total = 0;
            std::uint64_t maxAttained = 0;
            bool firstIsMax = true;
            for (int d = 0; d <= dcap; ++d) {
                const std::uint64_t dd = static_cast<std::uint64_t>(d);
                const std::uint64_t dpMax = dPrimeMax(m, n, dd);
                if (collect)
                    hist[static_cast<std::size_t>(d)].assign(dpMax + 1, 0);
                std::uint64_t attained = 0, index = 0;
                Forest prev;
                forEachForest(m, n, dd, [&](const Forest& f) {
                    ++total;
                    if (criticalSet(f).size() != criticalCount(f)) ++badCritical;
                    const std::uint64_t dp = dPrime(f);
                    if (dp > dpMax) ++badBounds;
                    if (dp == dpMax) {
                        ++attained;
                        if (index != 0) firstIsMax = false;
                    }
                    if (collect) ++hist[static_cast<std::size_t>(d)][dp];
                    if (index > 0 && !(compareForests(prev, f) == std::strong_ordering::less))
                        ++orderViolations;
                    prev = f;
                    ++index;
                });
                maxAttained += attained == 1 ? 0 : 1;
            }
            std::ostringstream actual;
            actual << "critical-identity failures=" << badCritical
                   << " d'-bound failures=" << badBounds << " order violations=" << orderViolations
                   << " degrees with non-unique max=" << maxAttained
                   << " max attained first=" << (firstIsMax ? "yes" : "no") << " forests=" << total;
            std::ostringstream expect;
            expect << "critical-identity failures=0 d'-bound failures=0 order violations=0"
                   << " degrees with non-unique max=0 max attained first=yes forests=" << total;
            r.add("C2 statistics sweep m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " d<=" + std::to_string(dcap),
                  "definition-level statistics vs closed-form identities", expect.str(),
                  actual.str());
        }

    // grafting identities over all tuples of total size <= 8
    for (std::uint32_t m = 2; m <= 4; ++m) {
        if (opt.m && *opt.m != m) continue;
        const int totalCap = capped(opt, 8);
        std::uint64_t tuples = 0, dFailures = 0, dPrimeFailures = 0, roundTripFailures = 0;
        struct TreeStats {
            Tree t;
            std::uint64_t d = 0, dp = 0, size = 0;
        };
        std::vector<std::vector<TreeStats>> treesBySize(static_cast<std::size_t>(totalCap) + 1);
        for (int s = 0; s <= totalCap; ++s)
            forEachForest(m, 1, static_cast<std::uint64_t>(s), [&](const Forest& f) {
                treesBySize[static_cast<std::size_t>(s)].push_back(
                    {f.tree(1), dStat(f), dPrime(f), f.size()});
            });
        std::vector<const TreeStats*> tuple(m);
        auto rec = [&](auto&& self, std::uint32_t slot, int budget) -> void {
            if (slot == m) {
                ++tuples;
                std::vector<Tree> children;
                children.reserve(m);
                std::uint64_t dSum = 0, dpSum = 0, sizeSum = 0, crossTerm = 0, linTerm = 0,
                              dpLin = 0;
                for (std::uint32_t i = 0; i < m; ++i) {
                    children.push_back(tuple[i]->t);
                    dSum += tuple[i]->d;
                    dpSum += tuple[i]->dp;
                    const std::uint64_t sz = tuple[i]->size;
                    crossTerm += sizeSum * sz; // accumulates sum_{i<j} |S_i||S_j|
                    sizeSum += sz;
                    linTerm += (2 * m - (i + 1) - 1) * sz;
                    dpLin += (m - (i + 1)) * sz;
                }
                const Tree g = graft(m, children);
                const Forest gf = Forest::trusted(m, {g});
                if (dStat(gf) != dSum + (m - 1) * crossTerm + linTerm + m) ++dFailures;
                if (dPrime(gf) != dpSum + dpLin) ++dPrimeFailures;
                if (ungraft(m, g) != children) ++roundTripFailures;
                return;
            }
            for (int s = 0; s <= budget; ++s)
                for (const TreeStats& t : treesBySize[static_cast<std::size_t>(s)]) {
                    tuple[slot] = &t;
                    self(self, slot + 1, budget - s);
                }
        };
        rec(rec, 0, totalCap);
        r.add("C2 grafting identities m=" + std::to_string(m) + " total<=" +
                  std::to_string(totalCap),
              "grafting formulas vs direct statistics",
              "0 failures over " + std::to_string(tuples) + " tuples",
              std::to_string(dFailures + dPrimeFailures + roundTripFailures) + " failures over " +
                  std::to_string(tuples) + " tuples");
    }

    // pinned example: three ternary components, six nodes
    if (inScope(opt, 3, 3)) {
        const Forest ex = parseForest("e,1,1.3,2;-;e,3", 3);
        const std::vector<NodeRef> crit = criticalSet(ex);
        static const char* kExpected[] = {"1:1.1", "1:1.2", "1:1.3.1", "1:1.3.2", "1:1.3.3",
                                          "1:2.1", "1:2.2", "1:2.3", "1:3",     "2:e",
                                          "3:1",   "3:2",   "3:3.1",  "3:3.2",  "3:3.3"};
        std::string got, want;
        for (std::size_t i = 0; i < crit.size(); ++i)
            got += (i ? " " : "") + std::to_string(crit[i].component) + ":" +
                   formatWord(crit[i].word);
        for (std::size_t i = 0; i < 15; ++i) want += (i ? " " : "") + std::string(kExpected[i]);
        r.add("C2 pinned critical set (m=3,n=3,d=6)", "criticalSet vs pinned list", want, got);
        r.add("C2 pinned d statistic", "dStat vs pinned value", "61",
              std::to_string(dStat(ex)));
        r.add("C2 pinned d' statistic", "dPrime vs pinned value", "13",
              std::to_string(dPrime(ex)));
    }
    return r;
}

// ---- criterion 3: generating functions --------------------------------

inline QPolynomial histToPoly(const std::vector<BigInt>& hist) {
    return QPolynomial(std::vector<BigInt>(hist.begin(), hist.end()));
}

inline Report verifyGeneratingFunctions(const VerifyOptions& opt, const SweepData& sweep) {
    Report r;
    const int dcap8 = capped(opt, 8);
    for (std::uint32_t m = 1; m <= 3; ++m)
        for (std::uint32_t n = 1; n <= 2; ++n) {
            if (!inScope(opt, m, n)) continue;
            const auto it = sweep.dPrimeHist.find({m, n});
            if (it == sweep.dPrimeHist.end()) continue;
            const TSeries zb = zetaBar(m, n, dcap8);
            int firstFail = -1;
            for (int d = 0; d <= dcap8 && firstFail < 0; ++d)
                if (zb.at(d) != histToPoly(it->second[static_cast<std::size_t>(d)])) firstFail = d;
            r.add("C3 zetaBar vs forest polynomial m=" + std::to_string(m) +
                      " n=" + std::to_string(n) + " d<=" + std::to_string(dcap8),
                  "functional-equation recursion vs enumeration",
                  "coefficientwise equal",
                  firstFail < 0 ? "coefficientwise equal"
                                : "first mismatch at t^" + std::to_string(firstFail));

            // lattice-path multiset equality
            int pathFail = -1;
            for (int d = 0; d <= dcap8 && pathFail < 0; ++d) {
                std::vector<BigInt> co(dPrimeMax(m, n, static_cast<std::uint64_t>(d)) + 1, 0);
                forEachLatticePath(m, n, static_cast<std::uint64_t>(d),
                                   [&](const LatticePath& p) { ++co[coarea(p, m, n)]; });
                if (co != it->second[static_cast<std::size_t>(d)]) pathFail = d;
            }
            r.add("C3 lattice-path multiset m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " d<=" + std::to_string(dcap8),
                  "coarea multiset vs d' multiset", "equal for every degree",
                  pathFail < 0 ? "equal for every degree"
                               : "first mismatch at d=" + std::to_string(pathFail));
        }

    const int dcap12 = capped(opt, 12);
    for (std::uint32_t m = 1; m <= 3; ++m)
        for (std::uint32_t n = 1; n <= 2; ++n) {
            if (!inScope(opt, m, n)) continue;
            // product formula: the n-root series against an explicitly
            // assembled product of shifted one-root series
            const TSeries zb = zetaBar(m, n, dcap12);
            const TSeries one = zetaBar(m, 1, dcap12);
            std::vector<QPolynomial> prod(one.coeff);
            for (std::uint32_t i = 1; i < n; ++i) {
                std::vector<QPolynomial> next(static_cast<std::size_t>(dcap12) + 1);
                for (int d = 0; d <= dcap12; ++d)
                    for (int a = 0; a <= d; ++a)
                        next[static_cast<std::size_t>(d)] +=
                            prod[static_cast<std::size_t>(a)] *
                            one.at(d - a).shifted(static_cast<std::uint64_t>(i) *
                                                  static_cast<std::uint64_t>(d - a));
                prod = std::move(next);
            }
            int prodFail = -1;
            for (int d = 0; d <= dcap12 && prodFail < 0; ++d)
                if (zb.at(d) != prod[static_cast<std::size_t>(d)]) prodFail = d;
            r.add("C3 product formula m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " dmax=" + std::to_string(dcap12),
                  "solver output vs explicit n-fold product", "coefficientwise equal",
                  prodFail < 0 ? "coefficientwise equal"
                               : "first mismatch at t^" + std::to_string(prodFail));

            // gamma identity with the corrected exponent
            r.append(verifyGammaIdentity(m, n, dcap12));

            // euler specialization: q = 1 column vs integer recursion vs formula
            const std::vector<BigInt> eu = eulerNumbers(m, n, dcap12);
            int euFail = -1;
            for (int d = 0; d <= dcap12 && euFail < 0; ++d) {
                const BigInt viaPoly = zb.at(d).sumCoeffs();
                const BigInt viaFormula = eulerClosedForm(m, n, static_cast<std::uint64_t>(d));
                if (viaPoly != eu[static_cast<std::size_t>(d)] || viaPoly != viaFormula)
                    euFail = d;
            }
            r.add("C3 euler specialization m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " dmax=" + std::to_string(dcap12),
                  "q=1 specialization vs integer recursion vs closed formula", "all equal",
                  euFail < 0 ? "all equal" : "first mismatch at d=" + std::to_string(euFail));

            // nonnegativity and the unique top cell
            int coefFail = -1;
            for (int d = 0; d <= dcap12 && coefFail < 0; ++d) {
                const QPolynomial& c = zb.at(d);
                for (const BigInt& x : c.coeffs())
                    if (x < 0) coefFail = d;
                if (c.degree() != static_cast<std::int64_t>(
                                      dPrimeMax(m, n, static_cast<std::uint64_t>(d))) ||
                    c.coeff(static_cast<std::size_t>(c.degree())) != 1)
                    coefFail = d;
            }
            r.add("C3 coefficient shape m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " dmax=" + std::to_string(dcap12),
                  "nonnegative coefficients, degree (m-1)d(d-1)/2+(n-1)d, leading coefficient 1",
                  "holds", coefFail < 0 ? "holds" : "fails at d=" + std::to_string(coefFail));
        }

    // m = 1 closed product formula: zetaBar * prod (1 - q^i t) = 1
    if (!opt.m || *opt.m == 1) {
        for (std::uint32_t n = 1; n <= 3; ++n) {
            if (opt.n && *opt.n != n) continue;
            const TSeries zb = zetaBar(1, n, dcap12);
            // multiply by each (1 - q^i t) in turn
            std::vector<QPolynomial> acc(zb.coeff);
            for (std::uint32_t i = 0; i < n; ++i) {
                std::vector<QPolynomial> next(acc.size());
                for (std::size_t d = 0; d < acc.size(); ++d) {
                    next[d] = acc[d];
                    if (d > 0) next[d] -= acc[d - 1].shifted(i);
                }
                acc = std::move(next);
            }
            int fail = -1;
            for (std::size_t d = 0; d < acc.size(); ++d) {
                const bool ok = d == 0 ? acc[d] == QPolynomial(1) : acc[d].isZero();
                if (!ok && fail < 0) fail = static_cast<int>(d);
            }
            r.add("C3 m=1 product form n=" + std::to_string(n) + " dmax=" +
                      std::to_string(dcap12),
                  "zetaBar(1,n) times prod(1-q^i t) vs 1", "equals 1",
                  fail < 0 ? "equals 1" : "residual at t^" + std::to_string(fail));
        }
    }

    if (inScope(opt, 2, 1)) r.append(continuedFractionCheck(capped(opt, 10)));
    return r;
}

// ---- criterion 4: finite-field point counts ----------------------------

inline Report verifyPointCounting(const VerifyOptions& opt) {
    Report r;
    struct Config {
        std::uint32_t m, n, d;
        std::uint64_t p;
    };
    static const Config kConfigs[] = {{2, 1, 1, 2}, {2, 1, 1, 3}, {2, 1, 2, 2}, {2, 1, 2, 3},
                                      {3, 1, 1, 2}, {3, 1, 2, 2}, {1, 2, 2, 2}, {2, 2, 1, 2}};
    for (const Config& c : kConfigs) {
        if (!inScope(opt, c.m, c.n)) continue;
        const CensusReport census = bruteForceCount(c.m, c.n, c.d, c.p);
        const BigInt predicted = predictedPointCount(c.m, c.n, c.d, BigInt(c.p));
        r.add("C4 point count " + key3(c.m, c.n, c.d) + " p=" + std::to_string(c.p),
              "exhaustive stable-orbit count vs cell-dimension prediction", predicted.str(),
              census.pointCount.str());
        r.add("C4 free action " + key3(c.m, c.n, c.d) + " p=" + std::to_string(c.p),
              "stable tuple count vs |GL| divisibility",
              BigInt(census.pointCount * census.glOrderValue).str(),
              census.stableTupleCount.str());
    }
    struct CensusConfig {
        std::uint32_t m, n, d;
        std::uint64_t p;
    };
    for (const CensusConfig& c : {CensusConfig{2, 1, 2, 2}, CensusConfig{2, 1, 2, 3}}) {
        if (!inScope(opt, c.m, c.n)) continue;
        const CensusReport census = cellCensus(c.m, c.n, c.d, c.p);
        std::string expect, got;
        forEachForest(c.m, c.n, c.d, [&](const Forest& f) {
            const std::string key = formatForest(f);
            expect += key + "=" + BigInt(pow(BigInt(c.p), static_cast<unsigned>(dStat(f)))).str() + " ";
            const auto it = census.perCell.find(key);
            got += key + "=" + (it == census.perCell.end() ? "0" : it->second.str()) + " ";
        });
        r.add("C4 cell census " + key3(c.m, c.n, c.d) + " p=" + std::to_string(c.p),
              "orbit census per cell vs p^{d(F)}", expect, got);
    }
    return r;
}

// ---- criterion 5: cell geometry ----------------------------------------

template <class Fld>
void roundTripSweep(const Fld& field, std::uint32_t m, std::uint32_t n, int dcap, int trials,
                    std::uint64_t seed, std::uint64_t& failures, std::uint64_t& runs) {
    for (int d = 0; d <= dcap; ++d)
        forEachForest(m, n, static_cast<std::uint64_t>(d), [&](const Forest& f) {
            std::mt19937_64 rng(seed ^ (dStat(f) * 1000003ull + d));
            for (int t = 0; t < trials; ++t) {
                ++runs;
                const LambdaAssignment<Fld> lam = randomLambda(f, field, rng);
                const CellPoint<Fld> p = normalFormFromCell(f, lam, field);
                bool ok = isStable(p) && inCell(p, f);
                if (ok) {
                    const Forest back = classifyCell(p);
                    ok = compareForests(back, f) == std::strong_ordering::equal;
                }
                if (ok) {
                    const Forest greedy = classifyCellGreedy(p);
                    ok = compareForests(greedy, f) == std::strong_ordering::equal;
                }
                if (ok) {
                    const LambdaAssignment<Fld> rec = lambdaCoordinates(p, f);
                    ok = rec.values == lam.values;
                }
                if (!ok) ++failures;
            }
        });
}

inline Report verifyCellGeometry(const VerifyOptions& opt) {
    Report r;
    const int dcap = capped(opt, 4);
    for (std::uint32_t m = 1; m <= 3; ++m)
        for (std::uint32_t n = 1; n <= 2; ++n) {
            if (!inScope(opt, m, n)) continue;
            std::uint64_t failures = 0, runs = 0;
            roundTripSweep(PrimeField(101), m, n, dcap, 20, opt.seed, failures, runs);
            r.add("C5 round trip F_101 m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " d<=" + std::to_string(dcap),
                  "normal form -> classify (scan and greedy) -> coordinates",
                  "0 failures over " + std::to_string(runs) + " runs",
                  std::to_string(failures) + " failures over " + std::to_string(runs) + " runs");
            failures = runs = 0;
            roundTripSweep(RationalField{}, m, n, dcap, 20, opt.seed, failures, runs);
            r.add("C5 round trip Q m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " d<=" + std::to_string(dcap),
                  "normal form -> classify (scan and greedy) -> coordinates",
                  "0 failures over " + std::to_string(runs) + " runs",
                  std::to_string(failures) + " failures over " + std::to_string(runs) + " runs");

            std::uint64_t patternFailures = 0, forests = 0;
            for (int d = 0; d <= dcap; ++d)
                forEachForest(m, n, static_cast<std::uint64_t>(d), [&](const Forest& f) {
                    ++forests;
                    if (patternMatrices(f).freeCount() != dStat(f)) ++patternFailures;
                });
            r.add("C5 free parameters m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " d<=" + std::to_string(dcap),
                  "normal-form free entries vs d(F)",
                  "0 failures over " + std::to_string(forests) + " forests",
                  std::to_string(patternFailures) + " failures over " + std::to_string(forests) +
                      " forests");
        }

    if (inScope(opt, 3, 3)) {
        // pinned box pattern of the six-node example
        const Forest ex = parseForest("e,1,1.3,2;-;e,3", 3);
        const PatternMatrices pm = patternMatrices(ex);
        auto render = [](const std::vector<std::vector<PatternEntry>>& mat) {
            std::string s;
            for (const auto& row : mat) {
                for (PatternEntry e : row)
                    s += e == PatternEntry::Zero ? '0' : (e == PatternEntry::One ? '1' : '*');
                s += '|';
            }
            return s;
        };
        const std::string expected =
            std::string("1*0|0*0|0*0|0*0|001|000|") +
            "0*****|1*****|00****|000***|0000**|00000*|" +
            "0*****|0*****|00****|100***|0000**|00000*|" +
            "*0**0*|*0**0*|*1**0*|*00*0*|00000*|00001*|";
        std::string got = render(pm.f);
        for (const auto& phi : pm.phi) got += render(phi);
        r.add("C5 pinned box pattern (m=3,n=3,d=6)", "normal-form pattern vs pinned matrices",
              expected, got);
        r.add("C5 pinned box count", "free entries vs d(F)", "61",
              std::to_string(pm.freeCount()));
    }
    return r;
}

// ---- criterion 6: Betti tables -----------------------------------------

inline Report verifyBettiTables(const VerifyOptions& opt) {
    Report r;
    if (inScope(opt, 2, 1)) {
        const BettiTable t2 = bettiNumbers(2, 1, 2);
        r.add("C6 betti (2,1,2)", "cell dimensions vs pinned table", "b0=1 b1=0 b2=1",
              "b0=" + t2.betti[0].str() + " b1=" + t2.betti[1].str() + " b2=" + t2.betti[2].str());
        const BettiTable t3 = bettiNumbers(2, 1, 3);
        std::string poincare;
        for (std::size_t k = 0; k < t3.betti.size(); ++k) {
            if (t3.betti[k] == 0) continue;
            if (!poincare.empty()) poincare += "+";
            if (t3.betti[k] != 1 || k == 0) poincare += t3.betti[k].str();
            if (k > 0) poincare += "t^" + std::to_string(k);
        }
        r.add("C6 poincare (2,1,3)", "cell dimensions vs pinned polynomial",
              "1+t^2+2t^4+t^6", poincare);
    }
    const int dcap = capped(opt, 6);
    for (std::uint32_t m = 1; m <= 4; ++m)
        for (std::uint32_t n = 1; n <= 3; ++n) {
            if (!inScope(opt, m, n)) continue;
            std::uint64_t bad = 0;
            for (int d = 0; d <= dcap; ++d) {
                const BettiTable t = bettiNumbers(m, n, static_cast<std::uint64_t>(d));
                if (t.betti[0] != 1) ++bad;
                for (std::size_t k = 1; k < t.betti.size(); k += 2)
                    if (t.betti[k] != 0) ++bad;
            }
            r.add("C6 b0 and odd vanishing m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " d<=" + std::to_string(dcap),
                  "Betti tables vs b_0 = 1 and b_odd = 0", "0 failures",
                  std::to_string(bad) + " failures");
        }
    return r;
}

// ---- criterion 7: asymptotics ------------------------------------------

inline Report verifyAsymptotics(const VerifyOptions& opt) {
    Report r;
    for (std::uint32_t m : {2u, 3u}) {
        if (!inScope(opt, m, 1)) continue;
        double prev = 0.0;
        bool monotone = true;
        double at500 = 0.0;
        for (std::uint64_t d : {50ull, 100ull, 200ull, 500ull}) {
            const double ratio = eulerAsymptoticRatio(m, 1, d);
            if (ratio <= prev) monotone = false;
            prev = ratio;
            if (d == 500) at500 = ratio;
        }
        const bool inBand = at500 >= 0.99 && at500 <= 1.01;
        r.addOutcome("C7 stirling ratio m=" + std::to_string(m) + " n=1",
                     "closed formula vs Stirling estimate",
                     "ratio at d=500 in [0.99,1.01], monotone over {50,100,200,500}",
                     "ratio at d=500 = " + fmtShort(at500) +
                         std::string(monotone ? ", monotone" : ", not monotone"),
                     inBand && monotone);
    }
    if (inScope(opt, 2, 1)) {
        const BigRational s = specialValuePartialSum(2, 1, 2000);
        const double v = toDouble(s);
        const bool ok = std::fabs(v - 2.0) / 2.0 <= 0.02;
        r.addOutcome("C7 special value partial sum m=2 n=1 D=2000",
                     "partial sums vs singular value 2", "within 2% of 2",
                     "partial sum = " + fmtShort(v), ok);
    }
    return r;
}

// ---- criterion 8: Airy limit law ---------------------------------------

inline Report verifyAiry(const VerifyOptions& opt) {
    Report r;
    const AiryMoments airy = airyMoments(2);
    r.add("C8 omega values", "moment recursion vs pinned values", "-1 1/2 5/4",
          fmtRational(airy.omegas[0]) + " " + fmtRational(airy.omegas[1]) + " " +
              fmtRational(airy.omegas[2]));
    r.add("C8 first Airy moment", "recursion vs sqrt(pi)", "1*sqrt(pi)",
          fmtRational(airy.moments[1].rationalPart) +
              (airy.moments[1].timesSqrtPi ? "*sqrt(pi)" : ""));
    r.add("C8 second Airy moment", "recursion vs 10/3", "10/3",
          fmtRational(airy.moments[2].rationalPart) +
              (airy.moments[2].timesSqrtPi ? "*sqrt(pi)" : ""));

    if (inScope(opt, 2, 1)) {
        const std::vector<std::uint64_t> dlist{50, 100, 200, 500, 1000};
        const LimitLawTrace trace = limitLawCheck(2, dlist, 2);
        bool monotone = true;
        double prev = 0.0;
        for (const auto& e : trace.entries) {
            if (e.normalized[1] <= prev) monotone = false;
            prev = e.normalized[1];
        }
        const auto& last = trace.entries.back();
        const double sqrtPi = std::sqrt(M_PI);
        const bool firstOk = std::fabs(last.normalized[1] - sqrtPi) / sqrtPi <= 0.10;
        const bool secondOk = std::fabs(last.normalized[2] - 10.0 / 3.0) / (10.0 / 3.0) <= 0.15;
        r.addOutcome("C8 normalized first moment m=2",
                     "jet recursion vs Airy expectation",
                     "strictly increasing over {50,100,200,500,1000}, within 10% at d=1000",
                     "value at d=1000 = " + fmtShort(last.normalized[1]) +
                         std::string(monotone ? ", increasing" : ", not increasing"),
                     monotone && firstOk);
        r.addOutcome("C8 normalized second moment m=2", "jet recursion vs Airy second moment",
                     "within 15% of 10/3 at d=1000",
                     "value at d=1000 = " + fmtShort(last.normalized[2]), secondOk);
    }

    // moment oracle equality against direct enumeration
    for (std::uint32_t m : {2u, 3u}) {
        if (!inScope(opt, m, 1)) continue;
        const int dcap = capped(opt, 8);
        const MomentTable table = momentSums(m, dcap, 2);
        std::uint64_t failures = 0;
        for (int d = 0; d <= dcap; ++d) {
            BigInt m0 = 0, m1 = 0, m2 = 0;
            forEachForest(m, 1, static_cast<std::uint64_t>(d), [&](const Forest& f) {
                const std::uint64_t dp = dPrime(f);
                m0 += 1;
                m1 += dp;
                m2 += BigInt(dp) * dp;
            });
            if (m0 != table.at(d, 0) || m1 != table.at(d, 1) || m2 != table.at(d, 2)) ++failures;
        }
        r.add("C8 moment oracle m=" + std::to_string(m) + " d<=" + std::to_string(dcap),
              "jet recursion vs direct enumeration", "0 failures",
              std::to_string(failures) + " failures");
    }
    return r;
}

} // namespace detail

/// The full cross-validation suite. Options narrow the parameter grids;
/// the default runs every acceptance check.
inline Report runVerification(const VerifyOptions& opt = {}) {
    Report report;
    detail::SweepData sweep;
    report.append(detail::verifyCounting(opt));
    report.append(detail::verifyStatistics(opt, sweep));
    report.append(detail::verifyGeneratingFunctions(opt, sweep));
    report.append(detail::verifyPointCounting(opt));
    report.append(detail::verifyCellGeometry(opt));
    report.append(detail::verifyBettiTables(opt));
    report.append(detail::verifyAsymptotics(opt));
    report.append(detail::verifyAiry(opt));
    return report;
}

} // namespace nchilb
