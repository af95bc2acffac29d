// Acceptance suite: runs every cross-validation criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exit code 0 only
// when all criteria hold.

#include "nchilb/serialize.hpp"
#include "nchilb/verify.hpp"

#include <chrono>
#include <iostream>
#include <string>

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const nchilb::Report& report) {
    const bool pass = report.allPassed();
    if (!pass) ++failures;
    std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << " — " << title
              << " (" << report.checks.size() - report.failedCount() << "/"
              << report.checks.size() << " checks)\n";
    if (!pass) {
        for (const nchilb::Check& c : report.checks)
            if (!c.pass)
                std::cout << "    FAILED " << c.name << "\n      expected: " << c.expected
                          << "\n      actual:   " << c.actual << "\n";
    }
    std::cout.flush();
}

} // namespace

int main() {
    using namespace nchilb;
    const auto t0 = std::chrono::steady_clock::now();
    const VerifyOptions opt;
    detail::SweepData sweep;

    criterion(1, "counting: closed formula = enumeration = Betti sum (m<=4, n<=3, d<=6)",
              detail::verifyCounting(opt));
    criterion(2, "statistics identities: critical counts, grafting, pinned six-node example",
              detail::verifyStatistics(opt, sweep));
    criterion(3,
              "generating functions: recursion vs forests, products, gamma, continued "
              "fraction, lattice paths",
              detail::verifyGeneratingFunctions(opt, sweep));
    criterion(4, "point counting: brute force = prediction, census = p^{d(F)}",
              detail::verifyPointCounting(opt));
    criterion(5, "cell geometry: normal form round trips, free parameters, pinned box pattern",
              detail::verifyCellGeometry(opt));
    criterion(6, "Betti tables: pinned tables, b_0 = 1, odd Betti numbers vanish",
              detail::verifyBettiTables(opt));
    criterion(7, "asymptotics: Stirling ratio band and special-value partial sum",
              detail::verifyAsymptotics(opt));
    criterion(8, "Airy limit law: exact moments, normalized convergence, moment oracle",
              detail::verifyAiry(opt));

    // determinism: a scoped verify re-run must render byte-identically
    {
        VerifyOptions scoped;
        scoped.m = 2;
        scoped.n = 1;
        scoped.dmax = 4;
        const std::string first = toJson(runVerification(scoped)).dump(2);
        const std::string second = toJson(runVerification(scoped)).dump(2);
        Report r;
        r.addOutcome("C9 determinism", "repeated verify runs, rendered bytes",
                     "byte-identical", first == second ? "byte-identical" : "runs differ",
                     first == second);
        criterion(9, "determinism: repeated verify runs are byte-identical", r);
    }

    const auto t1 = std::chrono::steady_clock::now();
    std::cout << "acceptance suite finished in "
              << std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count() << "s, "
              << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
