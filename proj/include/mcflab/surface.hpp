#pragma once

#include <variant>

#include "mcflab/field.hpp"
#include "mcflab/profile.hpp"

namespace mcflab {

// Analytic and profile-based initial surfaces. All are surfaces of
// revolution about the z axis.

struct SphereSpec {
    double center_z = 0.0;
    double radius = 1.0;
};

// Capped cylinder realized as a capsule: the tube of given radius around the
// axis segment |z - center_z| <= half_length. The signed distance is then
// exact (distance to the core segment minus the radius).
struct CapsuleSpec {
    double radius = 1.0;
    double half_length = 1.0;
    double center_z = 0.0;
};

struct TorusSpec {
    double core_radius = 2.0;
    double tube_radius = 0.5;
};

// Normal offset of a profile curve, optionally modulated along the curve:
// delta_i = offset + mode_amplitude * cos(2*pi*mode_k*sigma_i/L).
struct OffsetOfProfileSpec {
    ProfileCurve base;
    double offset = 0.0;
    int mode_k = 0;
    double mode_amplitude = 0.0;
};

using SurfaceSpec = std::variant<SphereSpec, CapsuleSpec, TorusSpec, OffsetOfProfileSpec>;

// Offset curve points (base pushed along its outward normal); validates
// embeddedness: the curve must stay in the open half-plane and must not
// self-intersect.
Polyline offset_curve(const OffsetOfProfileSpec& spec);

// Bounding box of the surface's generating curve, used for fit checks.
struct BoundingBox {
    double r_lo = 0.0, r_hi = 0.0, z_lo = 0.0, z_hi = 0.0;
};
BoundingBox surface_bbox(const SurfaceSpec& spec);

// Signed distance at a single half-plane point (exact for analytic variants,
// polyline distance with parity sign for profile offsets).
double signed_distance(const SurfaceSpec& spec, double r, double z);

// Fills a field with the signed distance. The surface must fit inside the
// grid with margin >= 5h.
ScalarField init_signed_distance(const SurfaceSpec& spec, const AxiGrid& grid);

// One-parameter family M^s interpolating between an inward and an outward
// offset of a base profile. The default is linear interpolation of the
// offset; the two-mode form mixes a mean offset -cos(s*pi)*delta1 with a
// sin(s*pi)-weighted cosine mode along the curve and requires
// delta0 == -delta1.
struct FamilySpec {
    ProfileCurve base;
    double delta0 = -0.05;
    double delta1 = 0.05;
    int samples = 9;
    bool two_mode = false;
    int mode_k = 2;
    double mode_amplitude = 0.0;
};

SurfaceSpec family_surface(const FamilySpec& family, double s);

} // namespace mcflab
