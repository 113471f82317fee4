#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vsym {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct VariableMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("reduction step budget exceeded") {}
};

struct NotUnimodular : std::runtime_error {
    NotUnimodular() : std::runtime_error("row is not unimodular (1 is not in the ideal)") {}
};

struct BadCertificate : std::runtime_error {
    BadCertificate() : std::runtime_error("supplied certificate does not satisfy sum(a_i*b_i) = 1") {}
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vsym
