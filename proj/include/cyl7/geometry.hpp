#pragma once

#include <array>
#include <vector>

namespace cyl7 {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
};

// A line in 3-space as base point + direction; the direction must be nonzero.
struct Line3 {
    Vec3 point;
    Vec3 direction;

    Line3(Vec3 p, Vec3 d); // throws DegenerateDirection on a zero direction
};

// Exactly seven axis lines; axes[0] and axes[1] are the fixed orthogonal pair,
// axes[2..6] carry the z=0 / t+u+v=1 normalization.
struct Arrangement {
    std::array<Line3, 7> axes;
};

// The 20 unknowns in block order (x_i, y_i, t_i, u_i), i = 3..7.
struct SolutionVector {
    std::array<double, 20> entries{};
};

// Distance of two skew lines via the triple-product formula.
// Throws ParallelLines when ||w_a x w_b|| <= 1e-12 * ||w_a|| * ||w_b||.
double line_distance(const Line3& a, const Line3& b);

// |(P_aP_b).(w_a x w_b)|^2 - 4 ||w_a x w_b||^2; zero iff skew lines at distance 2.
// Defined for parallel lines too (both terms vanish).
double touching_residual(const Line3& a, const Line3& b);

// Closest points on two non-parallel lines (used for contact-point export).
std::pair<Vec3, Vec3> closest_points(const Line3& a, const Line3& b);

Arrangement decode_solution(const SolutionVector& v);

// Acute angles between all 21 unordered axis pairs, ascending.
std::array<double, 21> pairwise_angles(const Arrangement& arr);

// Angle-multiset comparison; a necessary condition for congruence.
bool congruence_equivalent(const Arrangement& a, const Arrangement& b, double tol);

// Tolerance for the two-arrangement angle-disjointness diagnostic, recorded in
// CLI output.
inline constexpr double kAngleMatchTolerance = 1e-6;

} // namespace cyl7
