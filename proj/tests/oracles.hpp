#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include "cyl7/geometry.hpp"
#include "cyl7/polynomial.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

// uniform double in [0,1), implementation-independent
struct TestRng {
    std::mt19937_64 gen;
    explicit TestRng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }
};

// Distance of two lines by minimizing ||(Pa + s wa) - (Pb + t wb)||^2 through
// the 2x2 normal equations: an algebraic route independent of the
// triple-product formula.
inline double line_distance_by_minimization(const cyl7::Line3& a, const cyl7::Line3& b) {
    using cyl7::Vec3;
    Vec3 r = a.point - b.point;
    double A = a.direction.dot(a.direction);
    double B = a.direction.dot(b.direction);
    double C = b.direction.dot(b.direction);
    double D = a.direction.dot(r);
    double E = b.direction.dot(r);
    double denom = A * C - B * B;
    double s = (B * E - C * D) / denom;
    double t = (A * E - B * D) / denom;
    Vec3 diff = (a.point + a.direction * s) - (b.point + b.direction * t);
    return diff.norm();
}

// Exact real roots of {x^2 + y - 1, x + y^2 - 1}: eliminating x gives
// y (y - 1) (y^2 + y - 1) = 0.
inline std::vector<std::array<double, 2>> toy_system_roots() {
    double r5 = std::sqrt(5.0);
    double phi_small = (r5 - 1.0) / 2.0;  // positive root of y^2 + y - 1
    double phi_large = -(r5 + 1.0) / 2.0; // negative root
    return {{1.0, 0.0}, {0.0, 1.0}, {phi_small, phi_small}, {phi_large, phi_large}};
}

// central finite differences of a polynomial
inline double finite_difference(const cyl7::SparsePolynomial& p, std::vector<double> x,
                                std::size_t var, double h = 1e-6) {
    x[var] += h;
    double fp = p.evaluate<double>(std::span<const double>(x.data(), x.size()));
    x[var] -= 2 * h;
    double fm = p.evaluate<double>(std::span<const double>(x.data(), x.size()));
    return (fp - fm) / (2 * h);
}

// random sparse polynomial with small integer coefficients
inline cyl7::SparsePolynomial random_polynomial(TestRng& rng, const std::vector<std::string>& vars,
                                                int max_terms = 6, unsigned max_exp = 3) {
    cyl7::SparsePolynomial p(vars);
    int terms = 1 + rng.integer(0, max_terms - 1);
    for (int t = 0; t < terms; ++t) {
        std::vector<unsigned> e(vars.size());
        for (auto& ek : e) ek = static_cast<unsigned>(rng.integer(0, static_cast<int>(max_exp)));
        long c = rng.integer(-9, 9);
        if (c == 0) c = 1;
        p.add_term(cyl7::Monomial(std::move(e)), cyl7::Rational(c));
    }
    return p;
}

} // namespace oracles
