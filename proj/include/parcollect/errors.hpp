#pragma once

#include <stdexcept>
#include <string>

namespace parcollect {

/// Bad input: malformed spec, out-of-range index, invalid state, bad config.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource bound would be exceeded (state-count limit,
/// dense-matrix limit, tail-sum term cap).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric structure violated at runtime. Cannot occur for chains built from
/// a valid CollectionSpec; kept as a hard check.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Cross-method comparison failed (CLI `check`).
class CrossCheckError : public std::runtime_error {
public:
    explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace parcollect
