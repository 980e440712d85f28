/// @file quadrature.hpp
/// @brief Gauss-Legendre quadrature rules on the reference cell [-1, 1].

#pragma once

#include <vector>

namespace ldg {

/// Nodes and weights on [-1, 1]. Weights sum to 2; nodes are symmetric
/// about 0 and strictly increasing.
struct QuadratureRule {
    int n_points = 0;
    std::vector<double> ref_points;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n points (1 <= n <= 20), exact for
/// polynomials of degree 2n - 1.
QuadratureRule gauss_legendre_rule(int n);

} // namespace ldg
