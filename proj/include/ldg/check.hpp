#pragma once

#include <stdexcept>
#include <string>

namespace ldg {

/// Raised on violated preconditions and invalid configuration.
struct CheckError : std::runtime_error {
    explicit CheckError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] void fail(const char* where, const std::string& what);

} // namespace ldg

// Precondition guard; throws CheckError with the enclosing function name.
#define LDG_CHECK(cond, what)                       \
    do {                                            \
        if (!(cond)) ::ldg::fail(__func__, (what)); \
    } while (0)
