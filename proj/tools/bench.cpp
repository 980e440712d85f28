/// @file bench.cpp
/// @brief Timing comparison of the parallel kernels against the serial
/// reference on solver-shaped workloads, with a bitwise agreement check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#include "ldg/basis.hpp"
#include "ldg/kernels.hpp"
#include "ldg/quadrature.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_of(int repeats, const std::function<void()>& body) {
    const auto start = Clock::now();
    for (int r = 0; r < repeats; ++r) body();
    return std::chrono::duration<double>(Clock::now() - start).count() /
           static_cast<double>(repeats);
}

std::vector<double> random_vector(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-18s serial %10.3e s   parallel %10.3e s   speedup %5.2fx   %s\n",
                name, serial, parallel, serial / parallel,
                identical ? "bit-identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const int n_cells = argc > 1 ? std::atoi(argv[1]) : 4096;
    const int degree = argc > 2 ? std::atoi(argv[2]) : 2;
    const int repeats = argc > 3 ? std::atoi(argv[3]) : 50;
    const int n_modes = degree + 1;

    const auto rule = ldg::gauss_legendre_rule(2 * (degree + 1));
    const auto table = ldg::build_basis_table(degree, rule);
    const int n_points = rule.n_points;

    std::mt19937 rng(2024);
    const auto coeffs = random_vector(static_cast<std::size_t>(n_cells) * n_modes, rng);
    const auto values = random_vector(static_cast<std::size_t>(n_cells) * n_points, rng);
    const auto eta = random_vector(static_cast<std::size_t>(n_cells) * n_points, rng);
    const auto fhat = random_vector(n_cells, rng);
    std::vector<double> widths(n_cells, 0.01);

    std::printf("cells %d, degree %d, quad points %d, repeats %d\n", n_cells, degree,
                n_points, repeats);

    std::vector<double> out_a(static_cast<std::size_t>(n_cells) * n_points);
    std::vector<double> out_b(out_a.size());
    double ts = time_of(repeats, [&] {
        ldg::refkern::eval_values(n_cells, n_modes, n_points, coeffs.data(),
                                  table.phi.data(), out_a.data());
    });
    double tp = time_of(repeats, [&] {
        ldg::kern::eval_values(n_cells, n_modes, n_points, coeffs.data(),
                               table.phi.data(), out_b.data());
    });
    report("eval_values", ts, tp,
           std::memcmp(out_a.data(), out_b.data(), out_a.size() * sizeof(double)) == 0);

    std::vector<double> mod_a(static_cast<std::size_t>(n_cells) * n_modes);
    std::vector<double> mod_b(mod_a.size());
    ts = time_of(repeats, [&] {
        ldg::refkern::weak_deriv_cells(n_cells, n_modes, n_points, widths.data(),
                                       rule.weights.data(), table.dphi.data(),
                                       table.trace_right.data(), table.trace_left.data(),
                                       values.data(), fhat.data(), mod_a.data());
    });
    tp = time_of(repeats, [&] {
        ldg::kern::weak_deriv_cells(n_cells, n_modes, n_points, widths.data(),
                                    rule.weights.data(), table.dphi.data(),
                                    table.trace_right.data(), table.trace_left.data(),
                                    values.data(), fhat.data(), mod_b.data());
    });
    report("weak_deriv_cells", ts, tp,
           std::memcmp(mod_a.data(), mod_b.data(), mod_a.size() * sizeof(double)) == 0);

    ts = time_of(repeats, [&] {
        ldg::refkern::residual_cells(n_cells, n_modes, n_points, widths.data(),
                                     rule.weights.data(), table.phi.data(),
                                     table.dphi.data(), table.trace_right.data(),
                                     table.trace_left.data(), values.data(), fhat.data(),
                                     eta.data(), mod_a.data());
    });
    tp = time_of(repeats, [&] {
        ldg::kern::residual_cells(n_cells, n_modes, n_points, widths.data(),
                                  rule.weights.data(), table.phi.data(),
                                  table.dphi.data(), table.trace_right.data(),
                                  table.trace_left.data(), values.data(), fhat.data(),
                                  eta.data(), mod_b.data());
    });
    report("residual_cells", ts, tp,
           std::memcmp(mod_a.data(), mod_b.data(), mod_a.size() * sizeof(double)) == 0);

    const std::size_t n_samples = values.size();
    double ws = 0.0, wp = 0.0;
    ts = time_of(repeats, [&] { ws = ldg::refkern::max_wave_speed(n_samples, eta.data(),
                                                                  values.data()); });
    tp = time_of(repeats,
                 [&] { wp = ldg::kern::max_wave_speed(n_samples, eta.data(), values.data()); });
    report("max_wave_speed", ts, tp, ws == wp);

    return 0;
}
