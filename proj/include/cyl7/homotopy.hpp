#pragma once

#include "cyl7/polynomial.hpp"
#include "cyl7/smith.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace cyl7 {

using Complex = std::complex<double>;

struct LiftedSupport {
    std::vector<Monomial> support;
    std::vector<double> lifting; // one value per support point, in [0,1)
};

// Support sets of a system (term key sets, map order).
std::vector<std::vector<Monomial>> system_supports(const PolynomialSystem& sys);

// Deterministic given the seed; values uniform in [0,1) from a seeded
// generator with an implementation-independent bit mapping.
std::vector<LiftedSupport> random_lifting(const std::vector<std::vector<Monomial>>& supports,
                                          std::uint64_t seed);

struct MixedCell {
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // indices into each support
    std::vector<double> inner_normal;                       // alpha with lifted form (alpha, 1)
    long long det_abs = 0; // |det| of the exponent-difference matrix = paths from this cell
};

inline constexpr double kCellFeasibilityTol = 1e-9;

// Depth-first search over pair choices with LP feasibility pruning at each
// level; at a full selection the inner normal comes from the n x n equality
// system and the strict inequalities are re-checked by direct substitution.
// Throws DegenerateLifting when a tie at the feasibility tolerance prevents a
// strict decision.
std::vector<MixedCell> enumerate_mixed_cells(const std::vector<LiftedSupport>& lifted);

// All solutions of { c_j1 x^{a_j1} + c_j2 x^{a_j2} = 0 } via unimodular
// diagonalization of the exponent-difference lattice; exactly |det| solutions,
// all nonsingular. Throws SingularCell when the difference matrix is singular.
std::vector<std::vector<Complex>> binomial_start_solutions(
    const std::vector<std::pair<Monomial, Monomial>>& pairs,
    const std::vector<std::pair<Complex, Complex>>& coefficients);

// One equation of the cell homotopy: coefficients morph from the random start
// system to the target as s runs over (0,1], and each term carries the factor
// s^gamma with gamma = <(a,w), (alpha,1)> - beta_j >= 0 (zero exactly on the
// cell pair). In t = log s coordinates this is the exponential homotopy
// tracked from t = -infinity to 0.
struct HomotopyTerm {
    std::vector<unsigned> exps;
    Complex target;
    Complex random;
    double gamma;
};

struct HomotopyFunction {
    std::size_t n = 0;
    std::vector<std::vector<HomotopyTerm>> eqs;

    static HomotopyFunction for_cell(const PolynomialSystem& sys,
                                     const std::vector<LiftedSupport>& lifted,
                                     const MixedCell& cell,
                                     const std::vector<std::vector<Complex>>& random_coeffs);

    // Plain coefficient homotopy (all gamma = 0): H(x,s) = (1-s) Q(x) + s P(x).
    static HomotopyFunction coefficient_homotopy(const PolynomialSystem& target,
                                                 const PolynomialSystem& start);

    void eval(const std::vector<Complex>& y, double s, std::vector<Complex>& H) const;
    void jacobian(const std::vector<Complex>& y, double s,
                  std::vector<std::vector<Complex>>& J) const;
    void ds(const std::vector<Complex>& y, double s, std::vector<Complex>& out) const;

    // coefficients of the two pair terms at time s, per equation (gamma == 0 terms)
    std::vector<std::pair<Complex, Complex>> pair_coefficients(const MixedCell& cell,
                                                               double s) const;
};

enum class PathStatus { tracking, converged, diverged, failed };

struct HomotopyPath {
    std::vector<Complex> start;
    std::vector<Complex> current;
    double s = 0.0; // in (0,1]; the untransformed time is t = log(s) in (-inf, 0]
    PathStatus status = PathStatus::tracking;
    int steps = 0;
    double final_residual = 0.0; // ||P(current)||_inf when converged
    std::string note;

    double t() const;
};

struct TrackerOptions {
    double s0 = 1e-6;          // reparameterized start time
    double start_tol = 1e-8;   // required ||H(start, s0)||_inf after start correction
    double end_tol = 1e-10;    // required ||P(end)||_inf at s = 1
    double blowup_bound = 1e8; // declare divergence beyond this magnitude
    double min_step = 1e-14;   // StepSizeUnderflow: fail below this (path-jumping risk)
    int max_steps = 50000;
    int corrector_iters = 3;
};

// RK4 predictor on the Davidenko ODE dH/ds = 0, Newton corrector with a
// trust test (a step is rejected when the corrector moves the point by more
// than half the predictor displacement), adaptive step halving/growth.
HomotopyPath track_path(const HomotopyFunction& H, const std::vector<Complex>& start,
                        const TrackerOptions& opts);

struct SolveOptions {
    TrackerOptions tracker;
    long long max_paths = 1000000; // safety cap; 0 = enumerate and report only
    unsigned threads = 1;
};

struct SolveResult {
    std::vector<LiftedSupport> lifted;
    std::vector<MixedCell> cells;
    long long path_count = 0; // sum over cells of |det| (the BKK number)
    bool tracked = false;
    std::vector<HomotopyPath> paths;
};

// Full polyhedral pipeline: lifting -> mixed cells -> binomial starts ->
// tracking. Deterministic given the seed. Throws PathCapExceeded when the
// path count overruns opts.max_paths (> 0).
SolveResult solve_system(const PolynomialSystem& sys, std::uint64_t seed,
                         const SolveOptions& opts = {});

// Real parts of the endpoints whose componentwise imaginary magnitudes are
// all below theta.
std::vector<std::vector<double>> filter_real(const std::vector<HomotopyPath>& paths,
                                             double theta);

} // namespace cyl7
