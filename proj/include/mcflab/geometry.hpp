#pragma once

#include <cmath>
#include <vector>

namespace mcflab {

// Point in the (r,z) half-plane of revolution.
struct Vec2 {
    double r = 0.0;
    double z = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.r + b.r, a.z + b.z}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.r - b.r, a.z - b.z}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.r, s * a.z}; }
inline double dot(Vec2 a, Vec2 b) { return a.r * b.r + a.z * b.z; }
inline double norm(Vec2 a) { return std::hypot(a.r, a.z); }
inline double dist(Vec2 a, Vec2 b) { return std::hypot(a.r - b.r, a.z - b.z); }

// A polyline in the half-plane. Closed polylines do not repeat the first vertex.
struct Polyline {
    std::vector<Vec2> pts;
    bool closed = false;

    double length() const;
};

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);
double point_polyline_distance(Vec2 p, const Polyline& poly);

// Signed area by the shoelace formula; positive for counterclockwise loops
// in (r,z) with r to the right and z up. Open polylines return 0.
double signed_area(const Polyline& poly);

// Minimum distance between two polyline sets (vertex/segment resolution).
double min_distance(const std::vector<Polyline>& a, const std::vector<Polyline>& b);

// Symmetric Hausdorff distance between two polyline sets, measured from the
// vertices of each against the segments of the other.
double hausdorff_distance(const std::vector<Polyline>& a, const std::vector<Polyline>& b);

// True if any two non-adjacent segments of the polyline cross.
bool self_intersects(const Polyline& poly);

} // namespace mcflab
