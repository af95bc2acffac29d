#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nchilb {

/// One cross-check outcome: what was compared, by which pair of methods,
/// and whether the two agreed.
struct Check {
    std::string name;
    std::string methodPair;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, std::string methodPair, std::string expected, std::string actual) {
        const bool pass = expected == actual;
        checks.push_back(
            {std::move(name), std::move(methodPair), std::move(expected), std::move(actual), pass});
    }

    void addOutcome(std::string name, std::string methodPair, std::string expected,
                    std::string actual, bool pass) {
        checks.push_back(
            {std::move(name), std::move(methodPair), std::move(expected), std::move(actual), pass});
    }

    void append(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    std::size_t failedCount() const {
        std::size_t n = 0;
        for (const Check& c : checks)
            if (!c.pass) ++n;
        return n;
    }

    bool allPassed() const { return failedCount() == 0; }

    const Check* firstFailure() const {
        for (const Check& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

} // namespace nchilb
