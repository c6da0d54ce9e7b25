#pragma once

#include <stdexcept>
#include <string>

namespace qnr {

// Bad tool configuration or malformed input (unknown keys, missing fields,
// empty sweep lists). Distinct from std::domain_error, which flags values
// outside the mathematical domain of an operation. The CLI maps config
// errors to exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

} // namespace qnr
