#include "cyl7/alpha.hpp"

#include "cyl7/errors.hpp"

#include <algorithm>

namespace cyl7 {

bool below_alpha_threshold(const Rational& a) {
    // a <= (13 - 3*sqrt(17))/4  <=>  4a <= 13  and  (13 - 4a)^2 >= 9*17
    Rational fourA = 4 * a;
    if (fourA > 13) return false;
    Rational lhs = (Rational(13) - fourA);
    return lhs * lhs >= 153;
}

Rational bombieri_weyl_norm_squared(const SparsePolynomial& p, unsigned d) {
    mpz_class dfact = 1;
    for (unsigned k = 2; k <= d; ++k) dfact *= k;
    Rational total(0);
    for (const auto& [m, c] : p.terms()) {
        unsigned deg = m.degree();
        mpz_class num = 1;
        for (unsigned e : m.exps)
            for (unsigned k = 2; k <= e; ++k) num *= k;
        for (unsigned k = 2; k <= d - deg; ++k) num *= k;
        Rational w(num, dfact);
        w.canonicalize();
        total += c * c * w;
    }
    return total;
}

std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> A) {
    const std::size_t n = A.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        Rational best = abs(A[k][k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            Rational cand = abs(A[r][k]);
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (best == 0) throw SingularJacobian("rational_inverse: singular matrix");
        std::swap(A[k], A[piv]);
        std::swap(inv[k], inv[piv]);
        Rational d = A[k][k];
        for (std::size_t c = 0; c < n; ++c) {
            A[k][c] /= d;
            inv[k][c] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || A[r][k] == 0) continue;
            Rational f = A[r][k];
            for (std::size_t c = 0; c < n; ++c) {
                A[r][c] -= f * A[k][c];
                inv[r][c] -= f * inv[k][c];
            }
        }
    }
    return inv;
}

AlphaReport alpha_beta_gamma(const PolynomialSystem& sys, const std::vector<Rational>& x) {
    const std::size_t n = sys.var_count();
    if (x.size() != n) throw DimensionMismatch("alpha_beta_gamma: point dimension mismatch");

    AlphaReport rep;
    std::span<const Rational> pt(x.data(), x.size());

    std::vector<Rational> F = sys.evaluate<Rational>(pt);
    JacobianMatrix Jsys = sys.jacobian();
    std::vector<std::vector<Rational>> J(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) J[r][c] = Jsys.at(r, c).evaluate<Rational>(pt);

    std::vector<std::vector<Rational>> M;
    try {
        M = rational_inverse(std::move(J));
    } catch (const SingularJacobian&) {
        rep.singular_jacobian = true;
        return rep;
    }

    // beta^2 = ||M F||^2 exactly
    Rational beta2(0);
    for (std::size_t r = 0; r < n; ++r) {
        Rational y(0);
        for (std::size_t c = 0; c < n; ++c) y += M[r][c] * F[c];
        beta2 += y * y;
    }
    rep.beta_squared = beta2;
    rep.beta = sqrt_upper(beta2);

    // N = ||(1,x)||^2
    Rational N(1);
    for (const auto& xi : x) N += xi * xi;
    rep.point_norm_squared = N;

    std::vector<unsigned> degs(sys.size());
    unsigned D = 0;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        degs[i] = sys.polys[i].total_degree();
        D = std::max(D, degs[i]);
    }
    rep.max_degree = D;

    Rational sysnorm2(0);
    for (std::size_t i = 0; i < sys.size(); ++i)
        sysnorm2 += bombieri_weyl_norm_squared(sys.polys[i], degs[i]);
    rep.system_norm_squared = sysnorm2;

    // ||M Delta||_F^2 = sum_c d_c N^{d_c-1} sum_r M_rc^2, exactly rational
    // (column c of M corresponds to equation c)
    Rational frob2(0);
    for (std::size_t c = 0; c < n; ++c) {
        Rational colsq(0);
        for (std::size_t r = 0; r < n; ++r) colsq += M[r][c] * M[r][c];
        frob2 += Rational(static_cast<long>(degs[c])) * pow_rational(N, degs[c] - 1) * colsq;
    }

    // mu = max(1, ||F|| * ||M Delta||_F); gamma <= mu D^{3/2} / (2 ||(1,x)||)
    Rational mu2 = sysnorm2 * frob2;
    Rational mu = mu2 <= 1 ? Rational(1) : sqrt_upper(mu2);
    Rational d32 = sqrt_upper(Rational(static_cast<long>(D) * D * D));
    rep.gamma = mu * d32 / (2 * sqrt_lower(N));
    rep.alpha = rep.beta * rep.gamma;
    rep.certified_approximate = below_alpha_threshold(rep.alpha);
    rep.certified_real = rep.certified_approximate;
    return rep;
}

bool certify_real(const PolynomialSystem& /*sys*/, const AlphaReport& report,
                  const std::vector<Rational>& /*x*/) {
    return report.certified_approximate;
}

} // namespace cyl7
