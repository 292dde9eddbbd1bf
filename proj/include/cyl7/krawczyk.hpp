#pragma once

#include "cyl7/interval.hpp"
#include "cyl7/polynomial.hpp"

#include <vector>

namespace cyl7 {

struct KrawczykReport {
    std::vector<Interval> K;   // the Krawczyk set, componentwise
    std::vector<Interval> box; // [x - r, x + r]
    bool contained = false;    // K strictly interior to the box
    // max over components of the distance of K's endpoints from the center,
    // relative to r; contained iff < 1 (checked with exact comparisons).
    double contraction_factor = 0.0;
};

// K(F,[x]_r) = x - Y F(x) + (I - Y DF([x]_r)) ([x]_r - x), with Y a fixed
// floating inverse of DF(x); F(x) and the boxed Jacobian are evaluated in
// outward-rounded interval arithmetic, so containment is rigorous regardless
// of the quality of Y. Strict-interior comparisons carry no tolerance.
KrawczykReport krawczyk_operator(const PolynomialSystem& sys, const std::vector<double>& x,
                                 double r);

// true iff the Krawczyk set is strictly interior: existence and uniqueness of
// a zero of the system in [x]_r.
bool krawczyk_verify(const PolynomialSystem& sys, const std::vector<double>& x, double r);

} // namespace cyl7
