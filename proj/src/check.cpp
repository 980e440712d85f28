#include "ldg/check.hpp"

namespace ldg {

void fail(const char* where, const std::string& what) {
    throw CheckError(std::string(where) + ": " + what);
}

} // namespace ldg
