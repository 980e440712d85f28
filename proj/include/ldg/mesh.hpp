#pragma once

#include <memory>
#include <vector>

namespace ldg {

/// @brief Periodic partition of [x_left, x_right] into cells.
///
/// Interface j+1/2 is node_coords[j+1]; the periodic wrap identifies
/// node n_cells with node 0. Immutable after construction.
struct Mesh1D {
    double x_left = 0.0;
    double x_right = 0.0;
    int n_cells = 0;
    std::vector<double> node_coords; // n_cells + 1 entries, strictly increasing
    std::vector<double> cell_widths; // h_j = node_coords[j+1] - node_coords[j]
    double h_max = 0.0;
    double h_min = 0.0;

    double center(int j) const { return 0.5 * (node_coords[j] + node_coords[j + 1]); }

    // reference coordinate xi in [-1,1] mapped into cell j
    double to_physical(int j, double xi) const {
        return center(j) + 0.5 * cell_widths[j] * xi;
    }
};

using MeshPtr = std::shared_ptr<const Mesh1D>;

MeshPtr build_uniform_mesh(double x_left, double x_right, int n_cells);

/// Nonuniform mesh for tests; the CLI only ever builds uniform meshes.
MeshPtr build_mesh_from_widths(double x_left, const std::vector<double>& widths);

} // namespace ldg
