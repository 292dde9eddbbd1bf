#pragma once

#include "cyl7/polynomial.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace cyl7 {

// Closed interval with outward rounding: every arithmetic result is widened by
// one ulp per rounded endpoint, so it always contains the exact real result.
// (Round-to-nearest leaves each raw endpoint within half an ulp of the exact
// one; a one-ulp nudge therefore encloses it.) Division is not provided; the
// Krawczyk operator does not need it.
struct Interval {
    double lo = 0.0, hi = 0.0;

    Interval() = default;
    Interval(double l, double h) : lo(l), hi(h) {}
    static Interval point(double v) { return {v, v}; }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    // exact rational containment, for the soundness suite
    bool contains(const Rational& v) const { return Rational(lo) <= v && v <= Rational(hi); }
};

namespace rounding {
inline double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
inline double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
} // namespace rounding

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval square(const Interval& a);                // range-aware: [-1,2]^2 = [0,4]
Interval pow(const Interval& a, unsigned e);       // even stages via square()
Interval interval_from_rational(const Rational& q); // tight when q is a double

// Infinity-norm ball [x - r, x + r] componentwise.
struct IntervalBox {
    std::vector<double> center;
    double radius = 0.0;

    IntervalBox(std::vector<double> c, double r) : center(std::move(c)), radius(r) {}
    std::size_t size() const { return center.size(); }
    std::vector<Interval> components() const;
};

// Rigorous enclosure of each polynomial's range over the box.
std::vector<Interval> interval_eval(const PolynomialSystem& sys, const IntervalBox& box);
Interval interval_eval(const SparsePolynomial& p, const std::vector<Interval>& point);

template <>
struct ScalarTraits<Interval> {
    static Interval from_rational(const Rational& q) { return interval_from_rational(q); }
};

// Interval evaluation goes through the range-aware power path rather than the
// generic repeated-multiplication template.
template <>
Interval SparsePolynomial::evaluate<Interval>(std::span<const Interval> point) const;

} // namespace cyl7
