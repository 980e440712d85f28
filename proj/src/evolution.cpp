#include "ldg/evolution.hpp"

#include <cstdio>
#include <random>

#include "ldg/check.hpp"

namespace ldg {

namespace {

void assert_solvable(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                     const Eigen::MatrixXd& mat, const LdgContext& ctx, double coeff) {
    std::mt19937 gen(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd v(mat.rows());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = dist(gen);
    const Eigen::VectorXd x = lu.solve(v);
    const double rel = (mat * x - v).norm() / v.norm();
    if (!(rel <= 1e-10)) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "implicit operator singular (coeff=%.6g, a=%.6g, b=%.6g, c=%.6g, "
                      "d=%.6g, cells=%d, degree=%d, residual=%.3e)",
                      coeff, ctx.params.a, ctx.params.b, ctx.params.c, ctx.params.d,
                      ctx.mesh->n_cells, ctx.degree, rel);
        fail("build_evolution_solver", buf);
    }
}

} // namespace

EvolutionOperator build_evolution_solver(const LdgContext& ctx) {
    EvolutionOperator op;
    op.mesh = ctx.mesh;
    op.degree = ctx.degree;
    op.b = ctx.params.b;
    op.d = ctx.params.d;

    const int dim = ctx.mesh->n_cells * (ctx.degree + 1);
    op.theta_mat.resize(dim, dim);
    DGField probe = make_zero_field(ctx.mesh, ctx.degree);
    for (int i = 0; i < dim; ++i) {
        probe.coeffs.assign(probe.coeffs.size(), 0.0);
        probe.coeffs[i] = 1.0;
        const DGField col =
            weak_deriv(ctx, weak_deriv(ctx, probe, FluxSpec::plus()), FluxSpec::minus());
        for (int r = 0; r < dim; ++r) op.theta_mat(r, i) = col.coeffs[r];
    }

    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(dim, dim);
    if (op.b != 0.0) {
        const Eigen::MatrixXd a_eta = identity - op.b * op.theta_mat;
        op.lu_eta.emplace(a_eta);
        assert_solvable(*op.lu_eta, a_eta, ctx, op.b);
    }
    if (op.d != 0.0) {
        const Eigen::MatrixXd a_u = identity - op.d * op.theta_mat;
        op.lu_u.emplace(a_u);
        assert_solvable(*op.lu_u, a_u, ctx, op.d);
    }
    return op;
}

namespace {

DGField solve_with(const std::optional<Eigen::PartialPivLU<Eigen::MatrixXd>>& lu,
                   const DGField& rhs) {
    if (!lu.has_value()) return rhs;
    DGField out = rhs;
    Eigen::Map<const Eigen::VectorXd> r(rhs.coeffs.data(),
                                        static_cast<Eigen::Index>(rhs.coeffs.size()));
    Eigen::Map<Eigen::VectorXd> x(out.coeffs.data(),
                                  static_cast<Eigen::Index>(out.coeffs.size()));
    x = lu->solve(r);
    return out;
}

DGField apply_forward(const EvolutionOperator& op, double coeff, const DGField& x) {
    LDG_CHECK(x.mesh == op.mesh && x.degree == op.degree, "field does not match operator");
    DGField out = x;
    Eigen::Map<const Eigen::VectorXd> xin(x.coeffs.data(),
                                          static_cast<Eigen::Index>(x.coeffs.size()));
    Eigen::Map<Eigen::VectorXd> res(out.coeffs.data(),
                                    static_cast<Eigen::Index>(out.coeffs.size()));
    res = xin - coeff * (op.theta_mat * xin);
    return out;
}

} // namespace

std::pair<DGField, DGField> recover_time_derivatives(const EvolutionOperator& op,
                                                     const DGField& r_eta,
                                                     const DGField& r_u) {
    LDG_CHECK(r_eta.mesh == op.mesh && r_eta.degree == op.degree,
              "field does not match operator");
    LDG_CHECK(conformable(r_eta, r_u), "fields not conformable");
    return {solve_with(op.lu_eta, r_eta), solve_with(op.lu_u, r_u)};
}

DGField apply_forward_eta(const EvolutionOperator& op, const DGField& x) {
    return apply_forward(op, op.b, x);
}

DGField apply_forward_u(const EvolutionOperator& op, const DGField& x) {
    return apply_forward(op, op.d, x);
}

} // namespace ldg
