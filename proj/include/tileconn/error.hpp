#pragma once

#include <stdexcept>
#include <string>

namespace tileconn {

/// Raised for invalid inputs: non-expanding polynomials, malformed digit
/// sets, out-of-budget render requests and I/O failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tileconn
