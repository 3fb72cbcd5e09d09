#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rankfilt {

// Bad input: wrong parameter ranges, malformed data, violated preconditions.
// The CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
    std::string code;
    std::string detail;
    ValidationError(std::string code_, const std::string& message, std::string detail_ = "")
        : std::runtime_error(message), code(std::move(code_)), detail(std::move(detail_)) {}
};

// Input is well-formed but the requested computation exceeds a resource cap.
// The CLI maps this to exit code 2 so harnesses can tell "too big" from "wrong".
struct BudgetError : std::runtime_error {
    std::string code;
    std::string detail;
    BudgetError(std::string code_, const std::string& message, std::string detail_ = "")
        : std::runtime_error(message), code(std::move(code_)), detail(std::move(detail_)) {}
};

}  // namespace rankfilt
