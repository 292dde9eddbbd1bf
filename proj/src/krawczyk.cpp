#include "cyl7/krawczyk.hpp"

#include "cyl7/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace cyl7 {

KrawczykReport krawczyk_operator(const PolynomialSystem& sys, const std::vector<double>& x,
                                 double r) {
    const std::size_t n = sys.var_count();
    if (x.size() != n) throw DimensionMismatch("krawczyk_operator: point dimension mismatch");
    if (!(r > 0)) throw std::invalid_argument("krawczyk_operator: radius must be positive");

    JacobianMatrix Jsys = sys.jacobian();
    std::span<const double> pt(x.data(), x.size());

    Eigen::MatrixXd Jc(n, n);
    for (std::size_t rr = 0; rr < n; ++rr)
        for (std::size_t cc = 0; cc < n; ++cc) Jc(rr, cc) = Jsys.at(rr, cc).evaluate<double>(pt);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(Jc);
    if (!lu.isInvertible())
        throw SingularJacobian("krawczyk_operator: DF(x) is numerically singular");
    Eigen::MatrixXd Y = lu.inverse();
    if (!Y.allFinite())
        throw SingularJacobian("krawczyk_operator: DF(x)^{-1} overflowed");

    KrawczykReport rep;
    IntervalBox box(x, r);
    rep.box = box.components();
    std::vector<Interval> boxiv = rep.box;

    // F(x) as degenerate-interval evaluation: rigorous enclosure of the residual
    std::vector<Interval> xiv(n);
    for (std::size_t i = 0; i < n; ++i) xiv[i] = Interval::point(x[i]);
    std::vector<Interval> Fx(n);
    for (std::size_t i = 0; i < n; ++i) Fx[i] = interval_eval(sys.polys[i], xiv);

    // DF over the box, as an interval matrix
    std::vector<std::vector<Interval>> Jbox(n, std::vector<Interval>(n));
    for (std::size_t rr = 0; rr < n; ++rr)
        for (std::size_t cc = 0; cc < n; ++cc)
            Jbox[rr][cc] = interval_eval(Jsys.at(rr, cc), boxiv);

    rep.K.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Interval s = Interval::point(x[i]);
        for (std::size_t j = 0; j < n; ++j) s = s - Interval::point(Y(i, j)) * Fx[j];
        for (std::size_t j = 0; j < n; ++j) {
            Interval acc = Interval::point(0.0);
            for (std::size_t k = 0; k < n; ++k)
                acc = acc + Interval::point(Y(i, k)) * Jbox[k][j];
            Interval eij = Interval::point(i == j ? 1.0 : 0.0) - acc;
            s = s + eij * (boxiv[j] - Interval::point(x[j]));
        }
        rep.K[i] = s;
    }

    rep.contained = true;
    double factor = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(rep.K[i].lo > rep.box[i].lo && rep.K[i].hi < rep.box[i].hi)) rep.contained = false;
        factor = std::max(factor, std::max(rep.K[i].hi - x[i], x[i] - rep.K[i].lo) / r);
    }
    rep.contraction_factor = factor;
    return rep;
}

bool krawczyk_verify(const PolynomialSystem& sys, const std::vector<double>& x, double r) {
    return krawczyk_operator(sys, x, r).contained;
}

} // namespace cyl7
