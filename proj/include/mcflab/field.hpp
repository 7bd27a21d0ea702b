#pragma once

#include <string>
#include <vector>

#include "mcflab/grid.hpp"

namespace mcflab {

// Level set function u(r,z) sampled at grid nodes. u < 0 inside the solid
// region, u > 0 outside; the surface is the zero set.
struct ScalarField {
    AxiGrid grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const AxiGrid& g) : grid(g), v(g.node_count(), 0.0) {}

    double& at(int i, int j) { return v[grid.idx(i, j)]; }
    double at(int i, int j) const { return v[grid.idx(i, j)]; }

    // Bilinear interpolation; clamps queries to the grid box.
    double interp(double r, double z) const;

    bool all_finite() const;
    double min_value() const;
    // Central-difference gradient magnitude with even reflection at r=0 and
    // one-sided clamping at the outer boundaries.
    double gradient_norm(int i, int j) const;

    // Resampled copy keeping every stride-th node in each direction.
    ScalarField downsample(int stride) const;
};

void write_field_csv(const ScalarField& f, const std::string& path);
void write_field_binary(const ScalarField& f, const std::string& path);
ScalarField read_field_binary(const std::string& path);

} // namespace mcflab
