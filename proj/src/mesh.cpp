#include "ldg/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "ldg/check.hpp"

namespace ldg {

namespace {

void finalize(Mesh1D& m) {
    m.cell_widths.resize(m.n_cells);
    for (int j = 0; j < m.n_cells; ++j) {
        m.cell_widths[j] = m.node_coords[j + 1] - m.node_coords[j];
        LDG_CHECK(m.cell_widths[j] > 0.0, "cell widths must be positive");
    }
    m.h_max = *std::max_element(m.cell_widths.begin(), m.cell_widths.end());
    m.h_min = *std::min_element(m.cell_widths.begin(), m.cell_widths.end());
}

} // namespace

MeshPtr build_uniform_mesh(double x_left, double x_right, int n_cells) {
    LDG_CHECK(x_right > x_left, "empty interval");
    LDG_CHECK(n_cells >= 2, "need at least 2 cells");
    auto m = std::make_shared<Mesh1D>();
    m->x_left = x_left;
    m->x_right = x_right;
    m->n_cells = n_cells;
    m->node_coords.resize(n_cells + 1);
    const double span = x_right - x_left;
    for (int j = 0; j <= n_cells; ++j)
        m->node_coords[j] = x_left + span * (static_cast<double>(j) / n_cells);
    m->node_coords[n_cells] = x_right;
    finalize(*m);
    return m;
}

MeshPtr build_mesh_from_widths(double x_left, const std::vector<double>& widths) {
    LDG_CHECK(widths.size() >= 2, "need at least 2 cells");
    auto m = std::make_shared<Mesh1D>();
    m->x_left = x_left;
    m->n_cells = static_cast<int>(widths.size());
    m->node_coords.resize(widths.size() + 1);
    m->node_coords[0] = x_left;
    for (std::size_t j = 0; j < widths.size(); ++j) {
        LDG_CHECK(widths[j] > 0.0, "cell widths must be positive");
        m->node_coords[j + 1] = m->node_coords[j] + widths[j];
    }
    m->x_right = m->node_coords.back();
    finalize(*m);
    return m;
}

} // namespace ldg
