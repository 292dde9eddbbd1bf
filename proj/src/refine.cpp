#include "cyl7/refine.hpp"

#include "cyl7/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace cyl7 {

namespace {

Eigen::VectorXd eval_vec(const PolynomialSystem& sys, const std::vector<double>& x) {
    auto v = sys.evaluate<double>(std::span<const double>(x.data(), x.size()));
    return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::MatrixXd eval_jac(const JacobianMatrix& J, const std::vector<double>& x) {
    Eigen::MatrixXd M(J.rows, J.cols);
    std::span<const double> pt(x.data(), x.size());
    for (std::size_t r = 0; r < J.rows; ++r)
        for (std::size_t c = 0; c < J.cols; ++c) M(r, c) = J.at(r, c).evaluate<double>(pt);
    return M;
}

} // namespace

std::pair<std::vector<double>, RefineReport> newton_refine(const PolynomialSystem& sys,
                                                           const std::vector<double>& x0,
                                                           const RefineOptions& opts) {
    if (x0.size() != sys.var_count())
        throw DimensionMismatch("newton_refine: start point dimension mismatch");
    JacobianMatrix Jsys = sys.jacobian();

    std::vector<double> x = x0;
    RefineReport rep;
    Eigen::VectorXd F = eval_vec(sys, x);
    double start_residual = F.lpNorm<Eigen::Infinity>();

    for (int it = 0; it < opts.max_iter; ++it) {
        double rn = F.lpNorm<Eigen::Infinity>();
        rep.final_residual_inf_norm = rn;
        if (rn <= opts.tol) {
            rep.converged = true;
            return {x, rep};
        }
        if (start_residual > 0 && rn > opts.divergence_factor * start_residual)
            throw NewtonDivergence("newton_refine: residual grew by more than the divergence guard");

        Eigen::MatrixXd J = eval_jac(Jsys, x);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(J);
        if (qr.rank() < J.cols())
            throw SingularJacobian("newton_refine: Jacobian is rank-deficient");
        Eigen::VectorXd dx = qr.solve(F);

        // full Newton step first; halve while it fails to decrease ||F||_2
        double r0 = F.norm();
        double lambda = 1.0;
        std::vector<double> xn(x.size());
        Eigen::VectorXd Fn;
        while (true) {
            for (std::size_t i = 0; i < x.size(); ++i) xn[i] = x[i] - lambda * dx[i];
            Fn = eval_vec(sys, xn);
            if (Fn.norm() < (1.0 - 0.25 * lambda) * r0 || lambda < 1e-10) break;
            lambda *= 0.5;
        }
        x = xn;
        F = Fn;
        rep.step_norms.push_back(lambda * dx.norm());
        rep.iterations = it + 1;
    }
    rep.final_residual_inf_norm = F.lpNorm<Eigen::Infinity>();
    rep.converged = rep.final_residual_inf_norm <= opts.tol;
    return {x, rep};
}

double condition_number(const PolynomialSystem& sys, const std::vector<double>& x) {
    JacobianMatrix Jsys = sys.jacobian();
    Eigen::MatrixXd J = eval_jac(Jsys, x);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
    double smin = svd.singularValues().minCoeff();
    if (!(smin > 0))
        throw SingularJacobian("condition_number: Jacobian is singular");
    return svd.singularValues().maxCoeff() / smin;
}

namespace {

// in-place LU solve with partial pivoting over BigFloat
std::vector<BigFloat> lu_solve_mp(std::vector<std::vector<BigFloat>> A, std::vector<BigFloat> b) {
    const std::size_t n = A.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        BigFloat best = A[k][k].abs();
        for (std::size_t r = k + 1; r < n; ++r) {
            BigFloat cand = A[r][k].abs();
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (best.is_zero()) throw SingularJacobian("extended-precision solve: singular matrix");
        std::swap(A[k], A[piv]);
        std::swap(b[k], b[piv]);
        for (std::size_t r = k + 1; r < n; ++r) {
            BigFloat f = A[r][k] / A[k][k];
            if (f.is_zero()) continue;
            for (std::size_t c = k; c < n; ++c) A[r][c] -= f * A[k][c];
            b[r] -= f * b[k];
        }
    }
    std::vector<BigFloat> x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        BigFloat s = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c) s -= A[ri][c] * x[c];
        x[ri] = s / A[ri][ri];
    }
    return x;
}

} // namespace

MpRefineResult newton_refine_mp(const PolynomialSystem& sys, const std::vector<Rational>& x0,
                                int precision_digits, int max_iter) {
    const mpfr_prec_t prec = BigFloat::bits_for_digits(precision_digits);
    BigFloat::ScopedPrecision guard(prec);
    const std::size_t n = sys.var_count();
    if (x0.size() != n) throw DimensionMismatch("newton_refine_mp: start point dimension mismatch");

    JacobianMatrix Jsys = sys.jacobian();
    std::vector<BigFloat> x;
    x.reserve(n);
    for (const auto& q : x0) x.emplace_back(q, prec);

    BigFloat tol(1.0, prec);
    {
        BigFloat ten(10.0, prec);
        for (int i = 0; i < precision_digits + 2; ++i) tol = tol / ten;
    }

    MpRefineResult out;
    BigFloat resid(0.0, prec);
    for (int it = 0; it < max_iter; ++it) {
        std::span<const BigFloat> pt(x.data(), x.size());
        std::vector<BigFloat> F = sys.evaluate<BigFloat>(pt);
        resid = BigFloat(0.0, prec);
        for (const auto& f : F) {
            BigFloat a = f.abs();
            if (a > resid) resid = a;
        }
        out.iterations = it;
        if (resid < tol) {
            out.converged = true;
            break;
        }
        std::vector<std::vector<BigFloat>> J(n, std::vector<BigFloat>(n, BigFloat(0.0, prec)));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) J[r][c] = Jsys.at(r, c).evaluate<BigFloat>(pt);
        std::vector<BigFloat> dx = lu_solve_mp(std::move(J), std::move(F));
        for (std::size_t i = 0; i < n; ++i) x[i] -= dx[i];
    }
    out.final_residual = resid.to_decimal(3);
    out.decimals.reserve(n);
    for (const auto& v : x) out.decimals.push_back(v.to_decimal(precision_digits));
    out.x = std::move(x);
    return out;
}

} // namespace cyl7
