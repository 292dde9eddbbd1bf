#include "cyl7/geometry.hpp"

#include "cyl7/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cyl7 {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Line3::Line3(Vec3 p, Vec3 d) : point(p), direction(d) {
    if (!(direction.norm() > 0.0))
        throw DegenerateDirection("line direction must be nonzero");
}

double line_distance(const Line3& a, const Line3& b) {
    Vec3 cr = a.direction.cross(b.direction);
    double cn = cr.norm();
    if (cn <= 1e-12 * a.direction.norm() * b.direction.norm())
        throw ParallelLines("line_distance: directions are parallel within tolerance");
    return std::abs((b.point - a.point).dot(cr)) / cn;
}

double touching_residual(const Line3& a, const Line3& b) {
    Vec3 cr = a.direction.cross(b.direction);
    double triple = (b.point - a.point).dot(cr);
    return triple * triple - 4.0 * cr.dot(cr);
}

std::pair<Vec3, Vec3> closest_points(const Line3& a, const Line3& b) {
    // minimize ||(Pa + s wa) - (Pb + t wb)|| via the 2x2 normal equations
    Vec3 r = a.point - b.point;
    double A = a.direction.dot(a.direction);
    double B = a.direction.dot(b.direction);
    double C = b.direction.dot(b.direction);
    double D = a.direction.dot(r);
    double E = b.direction.dot(r);
    double denom = A * C - B * B;
    if (!(std::abs(denom) > 1e-24 * A * C))
        throw ParallelLines("closest_points: directions are parallel within tolerance");
    double s = (B * E - C * D) / denom;
    double t = (A * E - B * D) / denom;
    return {a.point + a.direction * s, b.point + b.direction * t};
}

Arrangement decode_solution(const SolutionVector& v) {
    auto block = [&](int b) {
        double x = v.entries[4 * b + 0], y = v.entries[4 * b + 1];
        double t = v.entries[4 * b + 2], u = v.entries[4 * b + 3];
        return Line3({x, y, 0.0}, {t, u, 1.0 - t - u});
    };
    return Arrangement{{Line3({0, 0, -1}, {1, 0, 0}), Line3({0, 0, 1}, {0, 1, 0}), block(0),
                        block(1), block(2), block(3), block(4)}};
}

std::array<double, 21> pairwise_angles(const Arrangement& arr) {
    std::array<double, 21> out{};
    std::size_t k = 0;
    for (std::size_t a = 0; a < 7; ++a) {
        for (std::size_t b = a + 1; b < 7; ++b) {
            const Vec3& wa = arr.axes[a].direction;
            const Vec3& wb = arr.axes[b].direction;
            double c = std::abs(wa.dot(wb)) / (wa.norm() * wb.norm());
            out[k++] = std::acos(std::clamp(c, -1.0, 1.0));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool congruence_equivalent(const Arrangement& a, const Arrangement& b, double tol) {
    auto aa = pairwise_angles(a);
    auto bb = pairwise_angles(b);
    for (std::size_t k = 0; k < aa.size(); ++k)
        if (std::abs(aa[k] - bb[k]) > tol) return false;
    return true;
}

} // namespace cyl7
