#pragma once

#include <stdexcept>
#include <string>

namespace qfci {

// Error taxonomy mirrored by the CLI exit codes: input problems (parse,
// validation) exit 2, register/dimension limits exit 3, solver failures 4.

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qfci
