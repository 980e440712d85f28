#include "ldg/field.hpp"

#include <cmath>

#include "ldg/check.hpp"
#include "ldg/kernels.hpp"

namespace ldg {

namespace {

/// Error-norm rule: degree + 3 points, one more than operator assembly.
QuadratureRule error_rule_for(const DGField& f) {
    return gauss_legendre_rule(f.degree + 3);
}

std::vector<double> trace_vector_right(int n_modes) {
    std::vector<double> t(n_modes);
    for (int m = 0; m < n_modes; ++m) t[m] = basis_value(m, 1.0);
    return t;
}

std::vector<double> trace_vector_left(int n_modes) {
    std::vector<double> t(n_modes);
    for (int m = 0; m < n_modes; ++m) t[m] = basis_value(m, -1.0);
    return t;
}

} // namespace

bool DGField::all_finite() const {
    for (const double c : coeffs)
        if (!std::isfinite(c)) return false;
    return true;
}

DGField make_zero_field(MeshPtr mesh, int degree) {
    LDG_CHECK(mesh != nullptr, "null mesh");
    LDG_CHECK(degree >= 0, "degree must be nonnegative");
    DGField f;
    f.mesh = std::move(mesh);
    f.degree = degree;
    f.coeffs.assign(static_cast<std::size_t>(f.mesh->n_cells) * (degree + 1), 0.0);
    return f;
}

bool conformable(const DGField& f, const DGField& g) {
    return f.mesh == g.mesh && f.degree == g.degree;
}

InterfaceTraces interface_traces(const DGField& f) {
    const int n = f.mesh->n_cells;
    const auto tr = trace_vector_right(f.n_modes());
    const auto tl = trace_vector_left(f.n_modes());
    InterfaceTraces traces;
    traces.minus.resize(n);
    traces.plus.resize(n);
    kern::interface_traces(n, f.n_modes(), f.coeffs.data(), tr.data(), tl.data(),
                           traces.minus.data(), traces.plus.data());
    return traces;
}

double eval_point(const DGField& f, int cell, double xi) {
    double acc = 0.0;
    for (int m = 0; m < f.n_modes(); ++m) acc += f.coeff(cell, m) * basis_value(m, xi);
    return acc;
}

std::vector<double> eval_at_table(const DGField& f, const BasisTable& table) {
    LDG_CHECK(table.n_modes == f.n_modes(), "basis table does not match field degree");
    std::vector<double> values(static_cast<std::size_t>(f.mesh->n_cells) * table.n_points);
    kern::eval_values(f.mesh->n_cells, f.n_modes(), table.n_points, f.coeffs.data(),
                      table.phi.data(), values.data());
    return values;
}

void axpby_inplace(double a, DGField& y, double b, const DGField& x) {
    LDG_CHECK(conformable(y, x), "fields not conformable");
    for (std::size_t i = 0; i < y.coeffs.size(); ++i)
        y.coeffs[i] = a * y.coeffs[i] + b * x.coeffs[i];
}

DGField axpby(double a, const DGField& x, double b, const DGField& y) {
    LDG_CHECK(conformable(x, y), "fields not conformable");
    DGField out = x;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = a * x.coeffs[i] + b * y.coeffs[i];
    return out;
}

double l2_norm(const DGField& f) {
    double acc = 0.0;
    for (int j = 0; j < f.mesh->n_cells; ++j) {
        double cell = 0.0;
        for (int m = 0; m < f.n_modes(); ++m) cell += f.coeff(j, m) * f.coeff(j, m);
        acc += 0.5 * f.mesh->cell_widths[j] * cell;
    }
    return std::sqrt(acc);
}

double integral(const DGField& f) {
    const auto rule = error_rule_for(f);
    double acc = 0.0;
    for (int j = 0; j < f.mesh->n_cells; ++j) {
        double cell = 0.0;
        for (int q = 0; q < rule.n_points; ++q)
            cell += rule.weights[q] * eval_point(f, j, rule.ref_points[q]);
        acc += 0.5 * f.mesh->cell_widths[j] * cell;
    }
    return acc;
}

double broken_deriv_l2(const DGField& f) {
    const auto rule = error_rule_for(f);
    double acc = 0.0;
    for (int j = 0; j < f.mesh->n_cells; ++j) {
        const double scale = 2.0 / f.mesh->cell_widths[j];
        double cell = 0.0;
        for (int q = 0; q < rule.n_points; ++q) {
            double dval = 0.0;
            for (int m = 0; m < f.n_modes(); ++m)
                dval += f.coeff(j, m) * basis_deriv(m, rule.ref_points[q]);
            dval *= scale;
            cell += rule.weights[q] * dval * dval;
        }
        acc += 0.5 * f.mesh->cell_widths[j] * cell;
    }
    return std::sqrt(acc);
}

double jump_seminorm(const DGField& f) {
    const auto traces = interface_traces(f);
    double acc = 0.0;
    for (int j = 0; j < f.mesh->n_cells; ++j) {
        const double jmp = traces.jump(j);
        acc += jmp * jmp;
    }
    return std::sqrt(acc);
}

double l2_error(const DGField& f, const std::function<double(double)>& exact) {
    const auto rule = error_rule_for(f);
    const auto table = build_basis_table(f.degree, rule);
    auto values = eval_at_table(f, table);
    const int nq = rule.n_points;
    for (int j = 0; j < f.mesh->n_cells; ++j)
        for (int q = 0; q < nq; ++q)
            values[static_cast<std::size_t>(j) * nq + q] -=
                exact(f.mesh->to_physical(j, rule.ref_points[q]));
    std::vector<double> cell_sums(f.mesh->n_cells);
    kern::cell_sq_sums(f.mesh->n_cells, nq, rule.weights.data(), values.data(),
                       cell_sums.data());
    double acc = 0.0;
    for (int j = 0; j < f.mesh->n_cells; ++j)
        acc += 0.5 * f.mesh->cell_widths[j] * cell_sums[j];
    return std::sqrt(acc);
}

namespace {

/// Sample points for max-norm estimates: error-rule interior points plus
/// both cell endpoints.
std::vector<double> linf_sample_points(int degree) {
    const auto rule = gauss_legendre_rule(degree + 3);
    std::vector<double> pts;
    pts.reserve(rule.n_points + 2);
    pts.push_back(-1.0);
    pts.insert(pts.end(), rule.ref_points.begin(), rule.ref_points.end());
    pts.push_back(1.0);
    return pts;
}

} // namespace

double linf_error(const DGField& f, const std::function<double(double)>& exact) {
    const auto pts = linf_sample_points(f.degree);
    double acc = 0.0;
    for (int j = 0; j < f.mesh->n_cells; ++j) {
        for (const double xi : pts) {
            const double err = eval_point(f, j, xi) - exact(f.mesh->to_physical(j, xi));
            acc = std::max(acc, std::abs(err));
        }
    }
    return acc;
}

double linf_norm(const DGField& f) {
    const auto pts = linf_sample_points(f.degree);
    double acc = 0.0;
    for (int j = 0; j < f.mesh->n_cells; ++j)
        for (const double xi : pts)
            acc = std::max(acc, std::abs(eval_point(f, j, xi)));
    return acc;
}

} // namespace ldg
