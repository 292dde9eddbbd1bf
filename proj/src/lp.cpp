#include "cyl7/lp.hpp"

#include <cmath>
#include <limits>

namespace cyl7 {

namespace {

constexpr double kPivotTol = 1e-11;

struct Tableau {
    std::size_t m, n; // constraints, columns (without rhs)
    std::vector<std::vector<double>> T; // (m+1) x (n+1); last row = reduced costs, last col = rhs
    std::vector<std::size_t> basis;
    std::vector<bool> blocked; // columns barred from entering (retired artificials)

    Tableau(std::size_t m_, std::size_t n_) : m(m_), n(n_), T(m + 1, std::vector<double>(n + 1, 0.0)), basis(m), blocked(n, false) {}

    void pivot(std::size_t r, std::size_t c) {
        double p = T[r][c];
        for (auto& v : T[r]) v /= p;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == r || T[i][c] == 0.0) continue;
            double f = T[i][c];
            for (std::size_t j = 0; j <= n; ++j) T[i][j] -= f * T[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule; returns false on unboundedness.
    bool optimize() {
        while (true) {
            std::size_t enter = n;
            for (std::size_t j = 0; j < n; ++j)
                if (!blocked[j] && T[m][j] > kPivotTol) {
                    enter = j;
                    break;
                }
            if (enter == n) return true;
            std::size_t leave = m;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][enter] <= kPivotTol) continue;
                double ratio = T[i][n] / T[i][enter];
                if (ratio < best - 1e-15 ||
                    (std::abs(ratio - best) <= 1e-15 && (leave == m || basis[i] < basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    }

    // subtract basic rows so basic columns have zero reduced cost
    void price_out() {
        for (std::size_t i = 0; i < m; ++i) {
            double f = T[m][basis[i]];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n; ++j) T[m][j] -= f * T[i][j];
        }
    }
};

} // namespace

LpResult simplex_maximize(std::vector<std::vector<double>> A, std::vector<double> b,
                          const std::vector<double>& c) {
    const std::size_t m = A.size();
    const std::size_t n0 = c.size();
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }

    // phase 1: artificial basis, maximize -sum(artificials)
    Tableau t(m, n0 + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n0; ++j) t.T[i][j] = A[i][j];
        t.T[i][n0 + i] = 1.0;
        t.T[i][t.n] = b[i];
        t.basis[i] = n0 + i;
    }
    for (std::size_t i = 0; i < m; ++i) t.T[m][n0 + i] = -1.0;
    t.price_out();
    t.optimize();
    // objective-row rhs holds the negated objective; phase-1 optimum must be ~0
    if (t.T[m][t.n] > 1e-8) return {};

    // retire artificial columns; pivot lingering artificial basics out when possible
    for (std::size_t j = n0; j < t.n; ++j) t.blocked[j] = true;
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n0) continue;
        std::size_t piv = n0;
        for (std::size_t j = 0; j < n0; ++j)
            if (std::abs(t.T[i][j]) > kPivotTol) {
                piv = j;
                break;
            }
        if (piv < n0) t.pivot(i, piv);
        // otherwise the row is redundant; the artificial stays basic at level 0
    }

    // phase 2
    for (std::size_t j = 0; j <= t.n; ++j) t.T[m][j] = 0.0;
    for (std::size_t j = 0; j < n0; ++j) t.T[m][j] = c[j];
    t.price_out();
    if (!t.optimize()) return {true, std::numeric_limits<double>::infinity(), {}};

    LpResult out;
    out.feasible = true;
    out.objective = -t.T[m][t.n]; // price_out negated the objective row constant
    out.x.assign(n0, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < n0) out.x[t.basis[i]] = t.T[i][t.n];
    return out;
}

LpResult strict_feasibility(const std::vector<std::vector<double>>& E,
                            const std::vector<double>& f,
                            const std::vector<std::vector<double>>& G,
                            const std::vector<double>& h, std::size_t dim) {
    // columns: p(dim), q(dim), e1, e2, one slack per inequality, cap slack
    const std::size_t ne = E.size(), ng = G.size();
    const std::size_t cols = 2 * dim + 2 + ng + 1;
    std::vector<std::vector<double>> A(ne + ng + 1, std::vector<double>(cols, 0.0));
    std::vector<double> b(ne + ng + 1, 0.0);
    const std::size_t e1 = 2 * dim, e2 = 2 * dim + 1, slack0 = 2 * dim + 2;

    for (std::size_t i = 0; i < ne; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            A[i][j] = E[i][j];
            A[i][dim + j] = -E[i][j];
        }
        b[i] = f[i];
    }
    for (std::size_t i = 0; i < ng; ++i) {
        std::size_t r = ne + i;
        for (std::size_t j = 0; j < dim; ++j) {
            A[r][j] = G[i][j];
            A[r][dim + j] = -G[i][j];
        }
        A[r][e1] = -1.0;
        A[r][e2] = 1.0;
        A[r][slack0 + i] = -1.0;
        b[r] = h[i];
    }
    // eps <= 1
    std::size_t cap = ne + ng;
    A[cap][e1] = 1.0;
    A[cap][e2] = -1.0;
    A[cap][slack0 + ng] = 1.0;
    b[cap] = 1.0;

    std::vector<double> c(cols, 0.0);
    c[e1] = 1.0;
    c[e2] = -1.0;

    LpResult r = simplex_maximize(std::move(A), std::move(b), c);
    if (r.feasible && !r.x.empty()) {
        std::vector<double> alpha(dim);
        for (std::size_t j = 0; j < dim; ++j) alpha[j] = r.x[j] - r.x[dim + j];
        r.x = std::move(alpha);
    }
    return r;
}

} // namespace cyl7
