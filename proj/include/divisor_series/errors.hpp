#pragma once

#include <stdexcept>
#include <string>

namespace divisor_series {

// Malformed or contract-violating input (bad JSON, degenerate curve where a
// nondegenerate one is required, inconsistent graph, ...).  CLI exit code 2.
class invalid_input_error : public std::runtime_error {
public:
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but outside the supported scope: a Puiseux lifting
// needs an irrational root, or a branch truncation is too small for the
// requested certification level.  CLI exit code 3.
class scope_error : public std::runtime_error {
public:
    explicit scope_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace divisor_series
