#pragma once

#include "cyl7/polynomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace cyl7 {

// Variable ring of the generic two-line distance polynomial:
// (x,y,z,t,u,v) coordinates of line i followed by line j.
const std::vector<std::string>& generic_distance_variables();

// The 20 unknowns (x_i, y_i, t_i, u_i) for i = 3..7, block order.
const std::vector<std::string>& littlewood_variables();

// Squared-triple-product minus 4 * squared-cross-norm of two parametric lines:
// zero exactly when two skew unit-radius cylinders around the lines touch.
// Degree 6, 84 terms, 12 variables.
SparsePolynomial build_generic_distance_polynomial();

// The 20x20 touching system for seven mutually touching cylinders with the
// first two axes fixed orthogonally: five (line1, line j) equations, five
// (line2, line j) equations, ten (line i, line j) equations, built by
// substitution into the generic distance polynomial.
PolynomialSystem build_littlewood_system();

// Product of total degrees: cheap upper bound on the number of homotopy paths.
double bezout_bound(const PolynomialSystem& sys);

// ---- embedded reference solutions (12 decimal digits as printed) ----

enum class Fixture { first, second };

const std::array<std::string, 20>& fixture_strings(Fixture which);
std::vector<Rational> fixture_rationals(Fixture which);
std::vector<double> fixture_doubles(Fixture which);

// Fixture values truncated toward zero at `digits` decimals.
std::vector<Rational> fixture_truncated(Fixture which, int digits);

// Published certification reference values, printed next to our computed
// numbers by the verify/certify commands.
struct PublishedReference {
    double alpha, beta, gamma;        // alphaCertified outputs per solution
    double condition_bound;           // 4.8e4, both solutions
    double residual_50_digit;         // 5e-14, at 50-digit refinement
    double krawczyk_radius;           // 1e-8
    double imaginary_threshold;       // 1e-8
    int min_certifiable_digits;       // 12 for the first solution, 11 for the second
};
const PublishedReference& published_reference(Fixture which);

// Exact certification threshold (13 - 3*sqrt(17))/4 as a decimal approximation;
// exact comparisons happen in certify_alpha, never against this double.
inline constexpr double kAlphaThresholdApprox = 0.157671;

} // namespace cyl7
