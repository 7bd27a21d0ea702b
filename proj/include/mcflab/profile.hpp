#pragma once

#include <string>
#include <vector>

#include "mcflab/geometry.hpp"

namespace mcflab {

// Arclength sample of a generating curve: position (r,z) and tangent angle
// theta with (r', z') = (cos theta, sin theta).
struct ProfilePoint {
    double sigma = 0.0;
    double r = 0.0;
    double z = 0.0;
    double theta = 0.0;
};

enum class ShotEnd {
    None,     // still running / not produced by shooting
    ZReturn,  // came back to the z = 0 section
    AxisHit,  // r reached the axis guard
    Budget,   // arclength budget exhausted
};

// Generating curve of a surface of revolution. Closed curves are loops in the
// open half-plane (torus type); open curves run from axis to axis (sphere
// type) or are raw shooting output.
struct ProfileCurve {
    std::vector<ProfilePoint> pts;
    bool closed = false;
    ShotEnd end = ShotEnd::None;

    double length() const { return pts.empty() ? 0.0 : pts.back().sigma - pts.front().sigma; }
    Polyline polyline() const;

    // Unit normal at sample i pointing away from the enclosed region. The
    // side is decided once per curve from the traversal orientation (signed
    // area for loops, axis closure for arcs).
    Vec2 outward_normal(std::size_t i) const;

    // Uniform-in-arclength resample with roughly the requested spacing.
    ProfileCurve resample(double spacing) const;
};

ProfileCurve circle_profile(double center_r, double center_z, double radius, double spacing = 1e-3);
// Full meridian of a sphere centered on the axis: an arc from pole to pole.
ProfileCurve sphere_profile(double center_z, double radius, double spacing = 1e-3);

void write_profile_csv(const ProfileCurve& p, const std::string& path);
ProfileCurve read_profile_csv(const std::string& path);

} // namespace mcflab
