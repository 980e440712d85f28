#include "ldg/quadrature.hpp"

#include <cmath>

#include "ldg/check.hpp"

namespace ldg {

namespace {

/// Legendre P_n and P_n' at x via the three-term recurrence.
void legendre_pair(int n, double x, double& p, double& dp) {
    double p0 = 1.0;
    double p1 = x;
    if (n == 0) {
        p = p0;
        dp = 0.0;
        return;
    }
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

} // namespace

QuadratureRule gauss_legendre_rule(int n) {
    LDG_CHECK(n >= 1 && n <= 20, "rule size out of range");
    QuadratureRule rule;
    rule.n_points = n;
    rule.ref_points.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    // Newton iteration from the Chebyshev-like seed; roots are mirrored so
    // the rule is exactly symmetric.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p = 0.0;
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pair(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre_pair(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // cos seeds start near +1, so i counts down from the right end.
        rule.ref_points[n - 1 - i] = x;
        rule.ref_points[i] = -x;
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (n % 2 == 1) rule.ref_points[n / 2] = 0.0;
    return rule;
}

} // namespace ldg
