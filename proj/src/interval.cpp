#include "cyl7/interval.hpp"

#include "cyl7/errors.hpp"

#include <algorithm>

namespace cyl7 {

using rounding::down;
using rounding::up;

Interval operator+(const Interval& a, const Interval& b) {
    return {down(a.lo + b.lo), up(a.hi + b.hi)};
}

Interval operator-(const Interval& a, const Interval& b) {
    return {down(a.lo - b.hi), up(a.hi - b.lo)};
}

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {down(std::min({p1, p2, p3, p4})), up(std::max({p1, p2, p3, p4}))};
}

Interval square(const Interval& a) {
    if (a.contains_zero()) {
        double m = std::max(a.lo * a.lo, a.hi * a.hi);
        return {0.0, up(m)};
    }
    double p1 = a.lo * a.lo, p2 = a.hi * a.hi;
    return {down(std::min(p1, p2)), up(std::max(p1, p2))};
}

Interval pow(const Interval& a, unsigned e) {
    if (e == 0) return Interval::point(1.0);
    if (e == 1) return a;
    if (e % 2 == 0) return pow(square(a), e / 2);
    return a * pow(square(a), (e - 1) / 2);
}

Interval interval_from_rational(const Rational& q) {
    double d = q.get_d();
    if (Rational(d) == q) return Interval::point(d);
    return {down(d), up(d)};
}

std::vector<Interval> IntervalBox::components() const {
    std::vector<Interval> out;
    out.reserve(center.size());
    for (double c : center) out.push_back({down(c - radius), up(c + radius)});
    return out;
}

Interval interval_eval(const SparsePolynomial& p, const std::vector<Interval>& point) {
    if (point.size() != p.var_count())
        throw DimensionMismatch("interval_eval: point dimension mismatch");
    // power tables keep even powers range-aware
    unsigned maxe = 0;
    for (const auto& [m, c] : p.terms())
        for (unsigned e : m.exps) maxe = std::max(maxe, e);
    std::vector<std::vector<Interval>> powers(point.size());
    for (std::size_t k = 0; k < point.size(); ++k) {
        powers[k].resize(maxe + 1);
        for (unsigned e = 0; e <= maxe; ++e) powers[k][e] = pow(point[k], e);
    }
    Interval acc = Interval::point(0.0);
    for (const auto& [m, c] : p.terms()) {
        Interval term = interval_from_rational(c);
        for (std::size_t k = 0; k < m.exps.size(); ++k)
            if (m.exps[k] > 0) term = term * powers[k][m.exps[k]];
        acc = acc + term;
    }
    return acc;
}

template <>
Interval SparsePolynomial::evaluate<Interval>(std::span<const Interval> point) const {
    return interval_eval(*this, std::vector<Interval>(point.begin(), point.end()));
}

std::vector<Interval> interval_eval(const PolynomialSystem& sys, const IntervalBox& box) {
    if (box.size() != sys.var_count())
        throw DimensionMismatch("interval_eval: box dimension mismatch");
    std::vector<Interval> comps = box.components();
    std::vector<Interval> out;
    out.reserve(sys.size());
    for (const auto& p : sys.polys) out.push_back(interval_eval(p, comps));
    return out;
}

} // namespace cyl7
