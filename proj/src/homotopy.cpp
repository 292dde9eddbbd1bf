#include "cyl7/homotopy.hpp"

#include "cyl7/errors.hpp"
#include "cyl7/lp.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace cyl7 {

namespace {

// implementation-independent uniform double in [0,1)
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    Complex unit_circle() {
        double ang = 2.0 * std::numbers::pi * uniform();
        return {std::cos(ang), std::sin(ang)};
    }
};

double lifted_value(const LiftedSupport& ls, std::size_t idx, const std::vector<double>& alpha) {
    double v = ls.lifting[idx];
    for (std::size_t k = 0; k < alpha.size(); ++k)
        v += alpha[k] * static_cast<double>(ls.support[idx].exps[k]);
    return v;
}

} // namespace

std::vector<std::vector<Monomial>> system_supports(const PolynomialSystem& sys) {
    std::vector<std::vector<Monomial>> out;
    out.reserve(sys.size());
    for (const auto& p : sys.polys) {
        std::vector<Monomial> s;
        s.reserve(p.term_count());
        for (const auto& [m, c] : p.terms()) s.push_back(m);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<LiftedSupport> random_lifting(const std::vector<std::vector<Monomial>>& supports,
                                          std::uint64_t seed) {
    if (supports.empty()) throw DimensionMismatch("random_lifting: no supports");
    Rng rng(seed);
    std::vector<LiftedSupport> out;
    out.reserve(supports.size());
    for (const auto& s : supports) {
        LiftedSupport ls;
        ls.support = s;
        ls.lifting.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) ls.lifting.push_back(rng.uniform());
        out.push_back(std::move(ls));
    }
    return out;
}

namespace {

struct CellSearch {
    const std::vector<LiftedSupport>& lifted;
    std::size_t n; // ambient dimension == number of supports
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    std::vector<MixedCell> found;

    explicit CellSearch(const std::vector<LiftedSupport>& ls)
        : lifted(ls), n(ls.empty() ? 0 : ls[0].support[0].exps.size()) {}

    // equality/inequality data for the supports chosen so far
    void partial_lp(std::vector<std::vector<double>>& E, std::vector<double>& f,
                    std::vector<std::vector<double>>& G, std::vector<double>& h) const {
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            const auto& ls = lifted[j];
            auto [p, q] = chosen[j];
            std::vector<double> row(n);
            for (std::size_t k = 0; k < n; ++k)
                row[k] = static_cast<double>(ls.support[p].exps[k]) -
                         static_cast<double>(ls.support[q].exps[k]);
            E.push_back(std::move(row));
            f.push_back(ls.lifting[q] - ls.lifting[p]);
            for (std::size_t a = 0; a < ls.support.size(); ++a) {
                if (a == p || a == q) continue;
                std::vector<double> grow(n);
                for (std::size_t k = 0; k < n; ++k)
                    grow[k] = static_cast<double>(ls.support[a].exps[k]) -
                              static_cast<double>(ls.support[p].exps[k]);
                G.push_back(std::move(grow));
                h.push_back(ls.lifting[p] - ls.lifting[a]);
            }
        }
    }

    bool prune() const {
        std::vector<std::vector<double>> E, G;
        std::vector<double> f, h;
        partial_lp(E, f, G, h);
        LpResult r = strict_feasibility(E, f, G, h, n);
        return !(r.feasible && r.objective > kCellFeasibilityTol);
    }

    void leaf() {
        Eigen::MatrixXd M(n, n);
        Eigen::VectorXd rhs(n);
        IntMatrix V(n, std::vector<long long>(n));
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ls = lifted[j];
            auto [p, q] = chosen[j];
            for (std::size_t k = 0; k < n; ++k) {
                long long d = static_cast<long long>(ls.support[p].exps[k]) -
                              static_cast<long long>(ls.support[q].exps[k]);
                V[j][k] = d;
                M(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                    static_cast<double>(d);
            }
            rhs(static_cast<Eigen::Index>(j)) = ls.lifting[q] - ls.lifting[p];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
        if (!lu.isInvertible()) {
            if (!prune())
                throw DegenerateLifting(
                    "mixed cells: dependent pair equalities admit a normal family");
            return;
        }
        Eigen::VectorXd alpha = lu.solve(rhs);

        // re-check the defining inequalities by direct substitution
        std::vector<double> av(alpha.data(), alpha.data() + n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ls = lifted[j];
            double beta = lifted_value(ls, chosen[j].first, av);
            for (std::size_t a = 0; a < ls.support.size(); ++a) {
                if (a == chosen[j].first || a == chosen[j].second) continue;
                double slack = lifted_value(ls, a, av) - beta;
                if (slack <= -kCellFeasibilityTol) return; // not a cell
                if (slack <= kCellFeasibilityTol)
                    throw DegenerateLifting("mixed cells: lifted tie at the feasibility tolerance");
            }
        }
        MixedCell cell;
        cell.pairs = chosen;
        cell.inner_normal = std::move(av);
        cell.det_abs = std::llabs(integer_determinant(V));
        if (cell.det_abs == 0) return;
        found.push_back(std::move(cell));
    }

    void dfs(std::size_t level) {
        const auto& sup = lifted[level].support;
        for (std::size_t p = 0; p + 1 < sup.size(); ++p) {
            for (std::size_t q = p + 1; q < sup.size(); ++q) {
                chosen.push_back({p, q});
                if (chosen.size() == lifted.size()) {
                    leaf();
                } else if (!prune()) {
                    dfs(level + 1);
                }
                chosen.pop_back();
            }
        }
    }
};

} // namespace

std::vector<MixedCell> enumerate_mixed_cells(const std::vector<LiftedSupport>& lifted) {
    if (lifted.empty()) return {};
    const std::size_t n = lifted[0].support.at(0).exps.size();
    if (lifted.size() != n)
        throw DimensionMismatch("enumerate_mixed_cells: need one support per dimension");
    CellSearch search(lifted);
    search.dfs(0);
    return search.found;
}

std::vector<std::vector<Complex>> binomial_start_solutions(
    const std::vector<std::pair<Monomial, Monomial>>& pairs,
    const std::vector<std::pair<Complex, Complex>>& coefficients) {
    const std::size_t n = pairs.size();
    IntMatrix V(n, std::vector<long long>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            V[j][k] = static_cast<long long>(pairs[j].first.exps[k]) -
                      static_cast<long long>(pairs[j].second.exps[k]);

    IntegerDiagonalization D = diagonalize_integer_matrix(V);
    std::vector<long long> diag(n);
    long long count = 1;
    for (std::size_t k = 0; k < n; ++k) {
        diag[k] = D.S[k][k];
        if (diag[k] == 0)
            throw SingularCell("binomial system: exponent-difference matrix is singular");
        count *= std::llabs(diag[k]);
    }

    // x^{a1 - a2} = -c2/c1 per equation; log and transform through the lattice
    std::vector<Complex> logb(n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex b = -coefficients[j].second / coefficients[j].first;
        logb[j] = {std::log(std::abs(b)), std::arg(b)};
    }
    std::vector<Complex> w(n, Complex(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w[i] += static_cast<double>(D.U[i][j]) * logb[j];

    std::vector<std::vector<Complex>> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<long long> m(n, 0);
    const double twopi = 2.0 * std::numbers::pi;
    while (true) {
        std::vector<Complex> z(n);
        for (std::size_t k = 0; k < n; ++k)
            z[k] = (w[k] + Complex(0, twopi * static_cast<double>(m[k]))) /
                   static_cast<double>(diag[k]);
        std::vector<Complex> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            Complex lx(0);
            for (std::size_t k = 0; k < n; ++k) lx += static_cast<double>(D.W[i][k]) * z[k];
            x[i] = std::exp(lx);
        }
        out.push_back(std::move(x));
        // odometer over residues modulo |diag|
        std::size_t k = 0;
        while (k < n && ++m[k] >= std::llabs(diag[k])) m[k++] = 0;
        if (k == n) break;
    }
    return out;
}

HomotopyFunction HomotopyFunction::for_cell(const PolynomialSystem& sys,
                                            const std::vector<LiftedSupport>& lifted,
                                            const MixedCell& cell,
                                            const std::vector<std::vector<Complex>>& random_coeffs) {
    HomotopyFunction H;
    H.n = sys.var_count();
    H.eqs.resize(sys.size());
    for (std::size_t j = 0; j < sys.size(); ++j) {
        const auto& ls = lifted[j];
        double beta = lifted_value(ls, cell.pairs[j].first, cell.inner_normal);
        std::size_t idx = 0;
        for (const auto& [mono, c] : sys.polys[j].terms()) {
            HomotopyTerm term;
            term.exps = mono.exps;
            term.target = Complex(c.get_d(), 0.0);
            term.random = random_coeffs[j][idx];
            double g = lifted_value(ls, idx, cell.inner_normal) - beta;
            term.gamma = (idx == cell.pairs[j].first || idx == cell.pairs[j].second)
                             ? 0.0
                             : std::max(0.0, g);
            H.eqs[j].push_back(std::move(term));
            ++idx;
        }
    }
    return H;
}

HomotopyFunction HomotopyFunction::coefficient_homotopy(const PolynomialSystem& target,
                                                        const PolynomialSystem& start) {
    if (target.size() != start.size() || target.var_count() != start.var_count())
        throw DimensionMismatch("coefficient_homotopy: shape mismatch");
    HomotopyFunction H;
    H.n = target.var_count();
    H.eqs.resize(target.size());
    for (std::size_t j = 0; j < target.size(); ++j) {
        // union of supports, target coefficient and start coefficient per monomial
        std::map<Monomial, std::pair<Rational, Rational>, GradedLexGreater> merged;
        for (const auto& [m, c] : target.polys[j].terms()) merged[m].first = c;
        for (const auto& [m, c] : start.polys[j].terms()) merged[m].second = c;
        for (const auto& [m, cc] : merged) {
            HomotopyTerm term;
            term.exps = m.exps;
            term.target = Complex(cc.first.get_d(), 0.0);
            term.random = Complex(cc.second.get_d(), 0.0);
            term.gamma = 0.0;
            H.eqs[j].push_back(std::move(term));
        }
    }
    return H;
}

namespace {

std::vector<std::vector<Complex>> power_table(const HomotopyFunction& H,
                                              const std::vector<Complex>& y) {
    std::vector<unsigned> maxe(H.n, 0);
    for (const auto& eq : H.eqs)
        for (const auto& t : eq)
            for (std::size_t k = 0; k < H.n; ++k) maxe[k] = std::max(maxe[k], t.exps[k]);
    std::vector<std::vector<Complex>> pw(H.n);
    for (std::size_t k = 0; k < H.n; ++k) {
        pw[k].resize(maxe[k] + 1);
        pw[k][0] = Complex(1.0);
        for (unsigned e = 1; e <= maxe[k]; ++e) pw[k][e] = pw[k][e - 1] * y[k];
    }
    return pw;
}

Complex blend(const HomotopyTerm& t, double s) {
    return (1.0 - s) * t.random + s * t.target;
}

} // namespace

void HomotopyFunction::eval(const std::vector<Complex>& y, double s,
                            std::vector<Complex>& out) const {
    auto pw = power_table(*this, y);
    out.assign(eqs.size(), Complex(0));
    for (std::size_t j = 0; j < eqs.size(); ++j) {
        for (const auto& t : eqs[j]) {
            Complex mono(1.0);
            for (std::size_t k = 0; k < n; ++k)
                if (t.exps[k]) mono *= pw[k][t.exps[k]];
            double sg = t.gamma == 0.0 ? 1.0 : std::pow(s, t.gamma);
            out[j] += blend(t, s) * mono * sg;
        }
    }
}

void HomotopyFunction::jacobian(const std::vector<Complex>& y, double s,
                                std::vector<std::vector<Complex>>& J) const {
    auto pw = power_table(*this, y);
    J.assign(eqs.size(), std::vector<Complex>(n, Complex(0)));
    for (std::size_t j = 0; j < eqs.size(); ++j) {
        for (const auto& t : eqs[j]) {
            double sg = t.gamma == 0.0 ? 1.0 : std::pow(s, t.gamma);
            Complex coef = blend(t, s) * sg;
            for (std::size_t k = 0; k < n; ++k) {
                if (t.exps[k] == 0) continue;
                Complex mono(static_cast<double>(t.exps[k]));
                for (std::size_t k2 = 0; k2 < n; ++k2) {
                    unsigned e = t.exps[k2] - (k2 == k ? 1u : 0u);
                    if (e) mono *= pw[k2][e];
                }
                J[j][k] += coef * mono;
            }
        }
    }
}

void HomotopyFunction::ds(const std::vector<Complex>& y, double s,
                          std::vector<Complex>& out) const {
    auto pw = power_table(*this, y);
    out.assign(eqs.size(), Complex(0));
    for (std::size_t j = 0; j < eqs.size(); ++j) {
        for (const auto& t : eqs[j]) {
            Complex mono(1.0);
            for (std::size_t k = 0; k < n; ++k)
                if (t.exps[k]) mono *= pw[k][t.exps[k]];
            double sg = t.gamma == 0.0 ? 1.0 : std::pow(s, t.gamma);
            out[j] += (t.target - t.random) * mono * sg;
            if (t.gamma > 0.0)
                out[j] += blend(t, s) * mono * t.gamma * std::pow(s, t.gamma - 1.0);
        }
    }
}

std::vector<std::pair<Complex, Complex>> HomotopyFunction::pair_coefficients(
    const MixedCell& cell, double s) const {
    std::vector<std::pair<Complex, Complex>> out;
    out.reserve(eqs.size());
    for (std::size_t j = 0; j < eqs.size(); ++j) {
        const auto& [p, q] = cell.pairs[j];
        out.push_back({blend(eqs[j][p], s), blend(eqs[j][q], s)});
    }
    return out;
}

double HomotopyPath::t() const { return std::log(s); }

namespace {

double inf_norm(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
}

using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using CVec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

bool solve_linear(const std::vector<std::vector<Complex>>& J, const std::vector<Complex>& rhs,
                  std::vector<Complex>& out) {
    const auto n = static_cast<Eigen::Index>(rhs.size());
    CMat M(n, n);
    CVec b(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        b(r) = rhs[static_cast<std::size_t>(r)];
        for (Eigen::Index c = 0; c < n; ++c)
            M(r, c) = J[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    CVec x = M.partialPivLu().solve(b);
    if (!x.allFinite()) return false;
    out.assign(x.data(), x.data() + n);
    return true;
}

// Newton on H(., s); returns total correction norm, or a negative value on a
// linear-solve failure. Stops once ||H||_inf <= tol.
double newton_correct(const HomotopyFunction& H, std::vector<Complex>& y, double s, double tol,
                      int iters, bool& ok) {
    std::vector<Complex> Hv, dy;
    std::vector<std::vector<Complex>> J;
    double total = 0.0;
    ok = false;
    for (int it = 0; it < iters; ++it) {
        H.eval(y, s, Hv);
        if (inf_norm(Hv) <= tol) {
            ok = true;
            return total;
        }
        H.jacobian(y, s, J);
        if (!solve_linear(J, Hv, dy)) return -1.0;
        double step = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] -= dy[i];
            step += std::norm(dy[i]);
        }
        total += std::sqrt(step);
    }
    H.eval(y, s, Hv);
    ok = inf_norm(Hv) <= tol;
    return total;
}

} // namespace

HomotopyPath track_path(const HomotopyFunction& H, const std::vector<Complex>& start,
                        const TrackerOptions& opts) {
    HomotopyPath path;
    path.start = start;
    path.current = start;

    auto scale = [&](const std::vector<Complex>& y) {
        double m = 1.0;
        for (const auto& c : y) m = std::max(m, std::abs(c));
        return m;
    };

    double s = std::min(opts.s0, 1.0);
    // settle the start point on the path at s0
    {
        bool ok = false;
        newton_correct(H, path.current, s, opts.start_tol * scale(path.current), 10, ok);
        if (!ok) {
            path.status = PathStatus::failed;
            path.note = "start correction failed";
            path.s = s;
            return path;
        }
    }

    std::vector<Complex> Hs, k1, k2, k3, k4;
    std::vector<std::vector<Complex>> J;
    double h = s;

    auto velocity = [&](const std::vector<Complex>& y, double sv, std::vector<Complex>& out) {
        H.jacobian(y, sv, J);
        H.ds(y, sv, Hs);
        if (!solve_linear(J, Hs, out)) return false;
        for (auto& c : out) c = -c;
        return true;
    };

    while (s < 1.0) {
        if (path.steps++ > opts.max_steps) {
            path.status = PathStatus::failed;
            path.note = "step budget exhausted";
            path.s = s;
            return path;
        }
        h = std::min({h, 1.0 - s, 0.1 * std::max(s, 0.01)});

        bool pred_ok = velocity(path.current, s, k1);
        std::vector<Complex> ytmp(path.current.size());
        if (pred_ok) {
            for (std::size_t i = 0; i < ytmp.size(); ++i) ytmp[i] = path.current[i] + 0.5 * h * k1[i];
            pred_ok = velocity(ytmp, s + 0.5 * h, k2);
        }
        if (pred_ok) {
            for (std::size_t i = 0; i < ytmp.size(); ++i) ytmp[i] = path.current[i] + 0.5 * h * k2[i];
            pred_ok = velocity(ytmp, s + 0.5 * h, k3);
        }
        if (pred_ok) {
            for (std::size_t i = 0; i < ytmp.size(); ++i) ytmp[i] = path.current[i] + h * k3[i];
            pred_ok = velocity(ytmp, s + h, k4);
        }

        bool accepted = false;
        if (pred_ok) {
            std::vector<Complex> yp(path.current.size());
            double pred_disp = 0.0;
            for (std::size_t i = 0; i < yp.size(); ++i) {
                Complex d = h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
                yp[i] = path.current[i] + d;
                pred_disp += std::norm(d);
            }
            pred_disp = std::sqrt(pred_disp);
            std::vector<Complex> yn = yp;
            bool ok = false;
            double corr = newton_correct(H, yn, s + h, 1e-10 * scale(yp), opts.corrector_iters, ok);
            // reject when the corrector had to move the point more than half
            // the predictor displacement: path-jumping guard
            if (ok && corr >= 0.0 && corr <= 0.5 * pred_disp + 1e-12) {
                path.current = std::move(yn);
                s += h;
                h *= 1.25;
                accepted = true;
            }
        }
        if (!accepted) {
            h *= 0.5;
            if (h < opts.min_step) {
                path.status = PathStatus::failed;
                path.note = "step size underflow";
                path.s = s;
                return path;
            }
        }
        if (scale(path.current) > opts.blowup_bound) {
            path.status = PathStatus::diverged;
            path.note = "solution at infinity";
            path.s = s;
            return path;
        }
    }

    // polish on the target system H(., 1)
    bool ok = false;
    newton_correct(H, path.current, 1.0, opts.end_tol, 20, ok);
    std::vector<Complex> Pv;
    H.eval(path.current, 1.0, Pv);
    path.final_residual = inf_norm(Pv);
    path.s = 1.0;
    path.status = ok ? PathStatus::converged : PathStatus::failed;
    if (!ok) path.note = "endpoint polish did not reach end_tol";
    return path;
}

SolveResult solve_system(const PolynomialSystem& sys, std::uint64_t seed,
                         const SolveOptions& opts) {
    if (sys.size() != sys.var_count())
        throw DimensionMismatch("solve_system: system must be square");

    SolveResult result;
    auto supports = system_supports(sys);
    result.lifted = random_lifting(supports, seed);
    result.cells = enumerate_mixed_cells(result.lifted);
    result.path_count = 0;
    for (const auto& c : result.cells) result.path_count += c.det_abs;

    if (opts.max_paths == 0) return result; // report-only mode
    if (result.path_count > opts.max_paths)
        throw PathCapExceeded("path count " + std::to_string(result.path_count) +
                              " exceeds the cap " + std::to_string(opts.max_paths));

    // one generic start system shared by every cell
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::vector<Complex>> cbar(sys.size());
    for (std::size_t j = 0; j < sys.size(); ++j) {
        cbar[j].reserve(supports[j].size());
        for (std::size_t a = 0; a < supports[j].size(); ++a) cbar[j].push_back(rng.unit_circle());
    }

    struct Task {
        const HomotopyFunction* H;
        std::vector<Complex> start;
    };
    std::vector<HomotopyFunction> funcs;
    funcs.reserve(result.cells.size());
    std::vector<Task> tasks;
    for (const auto& cell : result.cells) {
        funcs.push_back(HomotopyFunction::for_cell(sys, result.lifted, cell, cbar));
        const HomotopyFunction& H = funcs.back();
        std::vector<std::pair<Monomial, Monomial>> pairs;
        pairs.reserve(cell.pairs.size());
        for (std::size_t j = 0; j < cell.pairs.size(); ++j)
            pairs.push_back({result.lifted[j].support[cell.pairs[j].first],
                             result.lifted[j].support[cell.pairs[j].second]});
        auto coeffs = H.pair_coefficients(cell, opts.tracker.s0);
        for (auto& s0pt : binomial_start_solutions(pairs, coeffs))
            tasks.push_back({&H, std::move(s0pt)});
    }

    result.paths.resize(tasks.size());
    unsigned nthreads = std::max(1u, std::min<unsigned>(opts.threads, tasks.size()));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            result.paths[i] = track_path(*tasks[i].H, tasks[i].start, opts.tracker);
    } else {
        // independent paths, slot-indexed merge: deterministic for any schedule
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) break;
                    result.paths[i] = track_path(*tasks[i].H, tasks[i].start, opts.tracker);
                }
            });
        for (auto& th : pool) th.join();
    }
    result.tracked = true;
    return result;
}

std::vector<std::vector<double>> filter_real(const std::vector<HomotopyPath>& paths,
                                             double theta) {
    std::vector<std::vector<double>> out;
    for (const auto& p : paths) {
        if (p.status != PathStatus::converged) continue;
        bool real = true;
        for (const auto& c : p.current)
            if (!(std::abs(c.imag()) < theta)) {
                real = false;
                break;
            }
        if (!real) continue;
        std::vector<double> re;
        re.reserve(p.current.size());
        for (const auto& c : p.current) re.push_back(c.real());
        out.push_back(std::move(re));
    }
    return out;
}

} // namespace cyl7
