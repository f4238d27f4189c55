#pragma once

#include <stdexcept>
#include <string>

namespace bek {

// Base class for everything this library throws.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: malformed files, out-of-range indices, mismatched rings,
// violated preconditions. CLI maps this to exit code 2.
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

// A configured resource bound was exceeded (basis size, degree,
// enumeration width). Never a wrong answer. CLI exit code 3.
struct bound_error : error {
    explicit bound_error(const std::string& what) : error(what) {}
};

// An internal invariant failed; indicates a bug. CLI exit code 4.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw input_error(what);
}

}  // namespace bek
