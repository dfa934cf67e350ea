#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Inversion of an exact zero. Distinct type so callers can tell an algebraic
// zero divisor apart from a malformed input.
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Group closure walked past its element cap without stabilizing.
struct ClosureOverflow : std::runtime_error {
    explicit ClosureOverflow(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. Anything raising this means the
// computation must not be trusted, so it is never caught inside the library.
struct CheckFailed : std::logic_error {
    explicit CheckFailed(const std::string& what) : std::logic_error(what) {}
};

inline void check(bool ok, const std::string& what) {
    if (!ok) throw CheckFailed(what);
}

}  // namespace artin
