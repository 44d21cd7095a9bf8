#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

// Parameter outside the family's domain (h, r, theta constraints).
// The CLI maps this to exit code 2.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Formula applied outside its combinatorial regime or numeric range.
// The CLI maps this to exit code 3.
struct regime_error : std::runtime_error {
    explicit regime_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ortho
