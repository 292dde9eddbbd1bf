#pragma once

#include <vector>

namespace cyl7 {

struct LpResult {
    bool feasible = false;
    double objective = 0.0;
    std::vector<double> x;
};

// Dense two-phase simplex with Bland's rule for the small feasibility LPs of
// mixed-cell enumeration: maximize c.x subject to A x = b, x >= 0.
LpResult simplex_maximize(std::vector<std::vector<double>> A, std::vector<double> b,
                          const std::vector<double>& c);

// Feasibility with margin for a system of linear equalities E a = f and strict
// inequalities G a >= h over free variables a: maximizes the uniform slack
// eps (capped at 1) and reports the optimum. Feasible in the strict sense when
// the returned objective exceeds the caller's tolerance.
LpResult strict_feasibility(const std::vector<std::vector<double>>& E,
                            const std::vector<double>& f,
                            const std::vector<std::vector<double>>& G,
                            const std::vector<double>& h, std::size_t dim);

} // namespace cyl7
