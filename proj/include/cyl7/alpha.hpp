#pragma once

#include "cyl7/polynomial.hpp"

#include <vector>

namespace cyl7 {

// Certification report. alpha = beta * gamma holds exactly by construction;
// all three are rational upper bounds on the true quantities.
struct AlphaReport {
    Rational alpha, beta, gamma;
    bool certified_approximate = false;
    bool certified_real = false;
    bool singular_jacobian = false;

    // diagnostics (exact)
    Rational beta_squared;      // ||DF(x)^{-1} F(x)||_2^2
    Rational point_norm_squared; // 1 + sum x_i^2
    Rational system_norm_squared; // Bombieri-Weyl norm^2 of the system
    unsigned max_degree = 0;
};

// Upper bounds on Smale's alpha, beta, gamma at a rational point, computed in
// exact rational arithmetic with directed integer-sqrt bounds.
//
//   beta  = ||DF(x)^{-1} F(x)||_2
//   gamma <= mu * D^{3/2} / (2 ||(1,x)||)       (Shub-Smale estimate)
//   mu    = max(1, ||F|| * ||DF(x)^{-1} Delta||_F)
//   Delta = diag(sqrt(d_i) * ||(1,x)||^{d_i - 1})
//
// where ||F|| is the Bombieri-Weyl norm of the system and the Frobenius norm
// bounds the operator norm. The point x is an approximate solution when
// alpha <= (13 - 3*sqrt(17))/4, decided via the equivalent integer comparison
// (13 - 4*alpha)^2 >= 153 with 4*alpha <= 13.
//
// A singular DF(x) yields a non-certified report with singular_jacobian set.
AlphaReport alpha_beta_gamma(const PolynomialSystem& sys, const std::vector<Rational>& x);

// Realness for a real (rational) point of a real system: the conjugate of x is
// x itself, so the 2-beta separation test against the conjugate degenerates and
// realness follows from certified_approximate.
bool certify_real(const PolynomialSystem& sys, const AlphaReport& report,
                  const std::vector<Rational>& x);

// Exact threshold test: a <= (13 - 3*sqrt(17))/4.
bool below_alpha_threshold(const Rational& a);

// Bombieri-Weyl norm^2 of one polynomial, homogenized at degree d:
// sum over terms of c^2 * a_1!...a_n! (d - |a|)! / d!.
Rational bombieri_weyl_norm_squared(const SparsePolynomial& p, unsigned d);

// Exact rational dense linear algebra used by the certificates.
std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> A);

} // namespace cyl7
