#pragma once

#include <stdexcept>
#include <string>

namespace nchilb {

/// Malformed forest text or an input violating the forest grammar.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation was refused because its predicted cost exceeds a cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// The point does not lie in the requested chart (defining determinant vanishes).
class NotInChart : public std::runtime_error {
public:
    explicit NotInChart(const std::string& what) : std::runtime_error(what) {}
};

/// The tuple is unstable: the image of f does not generate the whole space.
class UnstablePoint : public std::runtime_error {
public:
    explicit UnstablePoint(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nchilb
