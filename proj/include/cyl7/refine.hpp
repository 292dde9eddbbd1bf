#pragma once

#include "cyl7/bigfloat.hpp"
#include "cyl7/polynomial.hpp"

#include <vector>

namespace cyl7 {

struct RefineReport {
    int iterations = 0;
    double final_residual_inf_norm = 0.0;
    std::vector<double> step_norms;
    bool converged = false;
};

struct RefineOptions {
    double tol = 1e-12;         // residual infinity-norm target
    int max_iter = 100;
    double divergence_factor = 1e4; // abort when the residual grows this much over the start
};

// Damped Newton iteration: the full step x - DF(x)^{-1} F(x) is tried first and
// backtracked (Armijo on ||F||_2) only when it does not decrease the residual,
// so convergence near a root is the plain quadratic iteration. Linear solves
// use column-pivoted QR. Throws SingularJacobian, NewtonDivergence.
std::pair<std::vector<double>, RefineReport> newton_refine(const PolynomialSystem& sys,
                                                           const std::vector<double>& x0,
                                                           const RefineOptions& opts = {});

// Spectral-norm condition number of DF(x) via singular values.
double condition_number(const PolynomialSystem& sys, const std::vector<double>& x);

struct MpRefineResult {
    std::vector<BigFloat> x;
    std::vector<std::string> decimals; // precision_digits decimal digits
    int iterations = 0;
    std::string final_residual; // decimal string
    bool converged = false;
};

// Extended-precision Newton refinement at `precision_digits` decimal digits
// (LU with partial pivoting over MPFR). Residual target defaults to
// 10^-(precision_digits + 2).
MpRefineResult newton_refine_mp(const PolynomialSystem& sys, const std::vector<Rational>& x0,
                                int precision_digits, int max_iter = 60);

} // namespace cyl7
