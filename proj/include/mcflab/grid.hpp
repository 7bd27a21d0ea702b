#pragma once

#include <cstddef>

namespace mcflab {

// Uniform node-centered grid on the half-plane [0, r_max] x [z_min, z_max].
// nr and nz count cells; nodes run 0..nr and 0..nz, with r = 0 a grid line
// (the rotation axis).
struct AxiGrid {
    double r_max = 0.0;
    double z_min = 0.0;
    double z_max = 0.0;
    double h = 0.0;
    int nr = 0;
    int nz = 0;

    int nodes_r() const { return nr + 1; }
    int nodes_z() const { return nz + 1; }
    std::size_t node_count() const { return std::size_t(nodes_r()) * nodes_z(); }
    std::size_t idx(int i, int j) const { return std::size_t(j) * nodes_r() + i; }
    double r(int i) const { return i * h; }
    double z(int j) const { return z_min + j * h; }
};

// h must divide both extents to within a small rounding slack.
AxiGrid build_grid(double r_max, double z_min, double z_max, double h);

} // namespace mcflab
