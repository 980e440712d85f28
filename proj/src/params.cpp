#include "ldg/params.hpp"

#include <cmath>
#include <cstdio>

#include "ldg/check.hpp"

namespace ldg {

int sign_of(double x) {
    if (x > 0.0) return 1;
    if (x < 0.0) return -1;
    return 0;
}

AbcdParams make_params(double a, double b, double c, double d, double lambda) {
    LDG_CHECK(b >= 0.0, "parameter b must be nonnegative");
    LDG_CHECK(d >= 0.0, "parameter d must be nonnegative");
    LDG_CHECK(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d),
              "parameters must be finite");
    AbcdParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    p.sign_a = sign_of(a);
    p.sign_c = sign_of(c);
    p.lambda = lambda;
    return p;
}

std::optional<std::string> sum_rule_warning(const AbcdParams& p) {
    const double sum = p.a + p.b + p.c + p.d;
    if (std::abs(sum - 1.0 / 3.0) <= 1e-12) return std::nullopt;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "a+b+c+d = %.12g deviates from 1/3; proceeding anyway",
                  sum);
    return std::string(buf);
}

} // namespace ldg
