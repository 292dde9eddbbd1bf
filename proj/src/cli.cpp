#include "cyl7/cli.hpp"

#include "cyl7/alpha.hpp"
#include "cyl7/errors.hpp"
#include "cyl7/geometry.hpp"
#include "cyl7/homotopy.hpp"
#include "cyl7/krawczyk.hpp"
#include "cyl7/littlewood.hpp"
#include "cyl7/refine.hpp"
#include "cyl7/serialization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

namespace cyl7 {

namespace {

using nlohmann::json;

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// Every run that writes outputs drops a manifest alongside them; identical
// inputs and flags reproduce it byte for byte except the timestamps.
struct RunManifest {
    std::string command;
    json inputs = json::array();
    json options = json::object();
    json outputs = json::array();
    std::string started = iso_timestamp();

    void emit() const {
        if (outputs.empty()) return;
        json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["options"] = options;
        j["outputs"] = outputs;
        j["timestamps"] = {{"started", started}, {"finished", iso_timestamp()}};
        write_file(outputs.front().get<std::string>() + ".manifest.json", j.dump(2) + "\n");
    }
};

struct SolutionSource {
    std::string fixture; // "first" / "second" / empty
    std::string input;   // file path, when fixture is empty

    void add_options(CLI::App* cmd) {
        cmd->add_option("--fixture", fixture, "built-in solution: first or second")
            ->check(CLI::IsMember({"first", "second"}));
        cmd->add_option("--input", input, "solution JSON file");
    }

    std::string describe() const { return fixture.empty() ? input : "fixture:" + fixture; }
    bool is_fixture() const { return !fixture.empty(); }
    Fixture fixture_id() const { return fixture == "first" ? Fixture::first : Fixture::second; }

    SolutionFile load() const {
        if (!fixture.empty()) {
            SolutionFile sol;
            sol.variables = littlewood_variables();
            const auto& strs = fixture_strings(fixture_id());
            sol.values.assign(strs.begin(), strs.end());
            sol.precision_digits = 12;
            return sol;
        }
        if (input.empty()) throw ParseError("need --fixture or --input");
        return parse_solution_json(read_file(input));
    }

    std::vector<Rational> load_rationals() const {
        auto sol = load();
        if (sol.values.size() != 20)
            throw ParseError("expected a 20-entry solution, got " +
                             std::to_string(sol.values.size()) + " entries");
        return sol.rationals();
    }
};

SolutionVector to_solution_vector(const std::vector<double>& v) {
    SolutionVector sv;
    std::copy(v.begin(), v.end(), sv.entries.begin());
    return sv;
}

std::string double_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

PolynomialSystem toy_system() {
    PolynomialSystem sys;
    sys.vars = {"x", "y"};
    SparsePolynomial p1(sys.vars), p2(sys.vars);
    p1.add_term(Monomial({2, 0}), Rational(1));
    p1.add_term(Monomial({0, 1}), Rational(1));
    p1.add_term(Monomial({0, 0}), Rational(-1));
    p2.add_term(Monomial({1, 0}), Rational(1));
    p2.add_term(Monomial({0, 2}), Rational(1));
    p2.add_term(Monomial({0, 0}), Rational(-1));
    sys.polys = {p1, p2};
    return sys;
}

PolynomialSystem load_system(const std::string& path, std::string format) {
    std::string text = read_file(path);
    if (format.empty())
        format = path.size() > 5 && path.substr(path.size() - 5) == ".json" ? "json" : "text";
    return format == "json" ? parse_system_json(text) : parse_system_text(text);
}

// ---- generate ----

int cmd_generate(const std::string& format, const std::string& output, bool generic) {
    RunManifest mf;
    mf.command = "generate";
    mf.options = {{"format", format}, {"generic", generic}};

    PolynomialSystem sys;
    if (generic) {
        sys.vars = generic_distance_variables();
        sys.polys = {build_generic_distance_polynomial()};
    } else {
        sys = build_littlewood_system();
    }
    std::string text = format == "json" ? write_system_json(sys) : write_system_text(sys);
    if (output.empty()) {
        std::cout << text;
    } else {
        write_file(output, text);
        mf.outputs.push_back(output);
        std::size_t terms = 0;
        for (const auto& p : sys.polys) terms += p.term_count();
        std::cout << "wrote " << sys.size() << " polynomial(s) in " << sys.var_count()
                  << " variables (" << terms << " terms) to " << output << "\n";
    }
    mf.emit();
    return 0;
}

// ---- verify ----

struct CheckRow {
    std::string name;
    bool pass = false;
    std::string detail;
    json data;
};

int cmd_verify(const SolutionSource& src, std::vector<std::string> checks, double radius,
               const std::string& output) {
    RunManifest mf;
    mf.command = "verify";
    mf.inputs.push_back(src.describe());
    mf.options = {{"checks", checks}, {"radius", radius}};

    const bool all = checks.empty() || (checks.size() == 1 && checks[0] == "all");
    auto selected = [&](const std::string& name) {
        if (all) return true;
        return std::find(checks.begin(), checks.end(), name) != checks.end();
    };

    PolynomialSystem sys = build_littlewood_system();
    std::vector<Rational> xq = src.load_rationals();
    std::vector<double> xd;
    xd.reserve(20);
    for (const auto& q : xq) xd.push_back(q.get_d());
    const PublishedReference& ref =
        published_reference(src.is_fixture() ? src.fixture_id() : Fixture::first);

    std::vector<CheckRow> rows;
    auto run_check = [&](const std::string& name, auto&& body) {
        if (!selected(name)) return;
        CheckRow row;
        row.name = name;
        try {
            body(row);
        } catch (const std::exception& e) {
            row.pass = false;
            row.detail = std::string("error: ") + e.what();
        }
        rows.push_back(std::move(row));
    };

    run_check("residual", [&](CheckRow& row) {
        auto F = sys.evaluate<Rational>(std::span<const Rational>(xq.data(), xq.size()));
        Rational mx(0);
        for (const auto& v : F) {
            Rational a = abs(v);
            if (a > mx) mx = a;
        }
        double resid = mx.get_d();
        row.pass = resid <= 1e-8;
        row.detail = "exact residual inf-norm " + double_decimal(resid) +
                     " (threshold 1e-8 at printed digits; published 50-digit residual < " +
                     double_decimal(ref.residual_50_digit) + ")";
        row.data = {{"residual", resid}, {"threshold", 1e-8}};
    });

    run_check("distance", [&](CheckRow& row) {
        auto [xr, rep] = newton_refine(sys, xd, {1e-12, 60, 1e4});
        auto arr = decode_solution(to_solution_vector(xr));
        double worst = 0.0;
        for (std::size_t a = 0; a < 7; ++a)
            for (std::size_t b = a + 1; b < 7; ++b)
                worst = std::max(worst, std::abs(line_distance(arr.axes[a], arr.axes[b]) - 2.0));
        row.pass = rep.converged && worst <= 1e-9;
        row.detail = "max |distance - 2| = " + double_decimal(worst) + " over 21 axis pairs";
        row.data = {{"max_distance_error", worst}, {"refined_residual", rep.final_residual_inf_norm}};
    });

    run_check("alpha", [&](CheckRow& row) {
        AlphaReport rep = alpha_beta_gamma(sys, xq);
        row.pass = rep.certified_approximate && certify_real(sys, rep, xq);
        row.detail = "alpha=" + double_decimal(rep.alpha.get_d()) +
                     " beta=" + double_decimal(rep.beta.get_d()) +
                     " gamma=" + double_decimal(rep.gamma.get_d()) + " | published alpha=" +
                     double_decimal(ref.alpha) + " beta=" + double_decimal(ref.beta) +
                     " gamma=" + double_decimal(ref.gamma);
        row.data = {{"alpha", rep.alpha.get_d()},
                    {"beta", rep.beta.get_d()},
                    {"gamma", rep.gamma.get_d()},
                    {"published", {{"alpha", ref.alpha}, {"beta", ref.beta}, {"gamma", ref.gamma}}}};
    });

    run_check("krawczyk", [&](CheckRow& row) {
        auto [xr, rep] = newton_refine(sys, xd, {1e-12, 60, 1e4});
        auto kr = krawczyk_operator(sys, xr, radius);
        row.pass = rep.converged && kr.contained;
        row.detail = "contained=" + std::string(kr.contained ? "true" : "false") +
                     " contraction=" + double_decimal(kr.contraction_factor) + " at radius " +
                     double_decimal(radius) + " (published radius " +
                     double_decimal(ref.krawczyk_radius) + ", box centered on our refined point)";
        row.data = {{"radius", radius}, {"contained", kr.contained},
                    {"contraction_factor", kr.contraction_factor}};
    });

    run_check("angles", [&](CheckRow& row) {
        auto arr = decode_solution(to_solution_vector(xd));
        auto angs = pairwise_angles(arr);
        bool has_right = false;
        for (double a : angs) has_right |= std::abs(a - std::numbers::pi / 2) <= 1e-9;
        row.pass = has_right;
        row.detail = "21 pairwise angles, right angle present=" +
                     std::string(has_right ? "true" : "false");
        row.data = {{"angles", angs}, {"angle_match_tolerance", kAngleMatchTolerance}};
    });

    bool all_pass = true;
    std::printf("%-10s %-6s %s\n", "check", "result", "detail");
    for (const auto& row : rows) {
        all_pass &= row.pass;
        std::printf("%-10s %-6s %s\n", row.name.c_str(), row.pass ? "PASS" : "FAIL",
                    row.detail.c_str());
    }

    if (!output.empty()) {
        json j;
        j["source"] = src.describe();
        j["all_pass"] = all_pass;
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back({{"check", row.name}, {"pass", row.pass}, {"detail", row.detail},
                           {"data", row.data}});
        j["checks"] = arr;
        write_file(output, j.dump(2) + "\n");
        mf.outputs.push_back(output);
    }
    mf.emit();
    return all_pass ? 0 : 1;
}

// ---- solve ----

int cmd_solve(const std::string& input, const std::string& format, bool toy, std::uint64_t seed,
              double end_tol, long long max_paths, bool huge_override, unsigned threads,
              const std::string& output) {
    RunManifest mf;
    mf.command = "solve";
    mf.inputs.push_back(toy ? "toy" : input);
    mf.options = {{"seed", seed},       {"end_tol", end_tol},         {"max_paths", max_paths},
                  {"threads", threads}, {"override", huge_override}};

    PolynomialSystem sys = toy ? toy_system() : load_system(input, format);

    double estimate = bezout_bound(sys);
    if (max_paths > 0 && estimate > static_cast<double>(max_paths) && !huge_override) {
        std::printf("refusing: degree-product path estimate %.0f exceeds --max-paths %lld\n",
                    estimate, max_paths);
        std::printf("rerun with --i-know-this-is-huge to override, or --max-paths 0 for a "
                    "cell/path report on a smaller system\n");
        return 1;
    }

    SolveOptions opts;
    opts.tracker.end_tol = end_tol;
    opts.max_paths = max_paths;
    opts.threads = threads;
    SolveResult res;
    try {
        res = solve_system(sys, seed, opts);
    } catch (const PathCapExceeded& e) {
        std::printf("refusing: %s\n", e.what());
        return 1;
    }

    int conv = 0, div = 0, fail = 0;
    for (const auto& p : res.paths) {
        if (p.status == PathStatus::converged) ++conv;
        else if (p.status == PathStatus::diverged) ++div;
        else ++fail;
    }
    std::printf("cells=%zu paths=%lld tracked=%s converged=%d diverged=%d failed=%d\n",
                res.cells.size(), res.path_count, res.tracked ? "yes" : "no", conv, div, fail);

    json j;
    j["seed"] = seed;
    j["end_tol"] = end_tol;
    j["cells"] = res.cells.size();
    j["path_count"] = res.path_count;
    j["tracked"] = res.tracked;
    json eps = json::array();
    for (const auto& p : res.paths) {
        json rec;
        switch (p.status) {
            case PathStatus::converged: rec["status"] = "converged"; break;
            case PathStatus::diverged: rec["status"] = "diverged"; break;
            case PathStatus::failed: rec["status"] = "failed"; break;
            case PathStatus::tracking: rec["status"] = "tracking"; break;
        }
        rec["s"] = p.s;
        rec["t"] = p.s > 0 ? p.t() : -std::numeric_limits<double>::infinity();
        rec["residual"] = p.final_residual;
        if (!p.note.empty()) rec["note"] = p.note;
        json coords = json::array();
        for (const auto& c : p.current) coords.push_back({c.real(), c.imag()});
        rec["coords"] = coords;
        eps.push_back(rec);
    }
    j["endpoints"] = eps;
    if (!output.empty()) {
        write_file(output, j.dump(2) + "\n");
        mf.outputs.push_back(output);
    }
    mf.emit();
    return 0;
}

// ---- refine ----

int cmd_refine(const SolutionSource& src, double tol, int max_iter, int precision_digits,
               const std::string& output) {
    RunManifest mf;
    mf.command = "refine";
    mf.inputs.push_back(src.describe());
    mf.options = {{"tol", tol}, {"max_iter", max_iter}, {"precision_digits", precision_digits}};

    PolynomialSystem sys = build_littlewood_system();
    std::vector<Rational> xq = src.load_rationals();

    SolutionFile out;
    out.variables = littlewood_variables();
    bool converged = false;
    if (precision_digits > 0) {
        auto res = newton_refine_mp(sys, xq, precision_digits, max_iter);
        out.values = res.decimals;
        out.precision_digits = precision_digits;
        converged = res.converged;
        std::printf("extended precision: %d digits, %d iterations, residual %s, converged=%s\n",
                    precision_digits, res.iterations, res.final_residual.c_str(),
                    converged ? "true" : "false");
    } else {
        std::vector<double> xd;
        for (const auto& q : xq) xd.push_back(q.get_d());
        auto [xr, rep] = newton_refine(sys, xd, {tol, max_iter, 1e4});
        out.precision_digits = 17;
        for (double v : xr) out.values.push_back(double_decimal(v));
        converged = rep.converged;
        std::printf("double precision: %d iterations, residual %.3e, converged=%s\n",
                    rep.iterations, rep.final_residual_inf_norm, converged ? "true" : "false");
    }
    if (!output.empty()) {
        write_file(output, write_solution_json(out));
        mf.outputs.push_back(output);
    }
    mf.emit();
    return converged ? 0 : 1;
}

// ---- certify-alpha ----

json alpha_report_json(const AlphaReport& rep) {
    json j;
    j["alpha"] = {{"rational", rep.alpha.get_str()}, {"decimal", rep.alpha.get_d()}};
    j["beta"] = {{"rational", rep.beta.get_str()}, {"decimal", rep.beta.get_d()}};
    j["gamma"] = {{"rational", rep.gamma.get_str()}, {"decimal", rep.gamma.get_d()}};
    j["threshold_check"] = rep.certified_approximate;
    j["real"] = rep.certified_real;
    j["isolated"] = rep.certified_approximate;
    j["singular_jacobian"] = rep.singular_jacobian;
    j["gamma_bound"] = "Shub-Smale: mu * D^{3/2} / (2 ||(1,x)||), Frobenius-bounded, "
                       "Bombieri-Weyl system norm";
    return j;
}

int cmd_certify_alpha(const SolutionSource& src, int digits, bool paper_fixtures,
                      const std::string& output) {
    RunManifest mf;
    mf.command = "certify-alpha";
    mf.options = {{"digits", digits}, {"paper_fixtures", paper_fixtures}};

    PolynomialSystem sys = build_littlewood_system();

    if (paper_fixtures) {
        bool all_ok = true;
        json results = json::array();
        std::printf("%-8s %-10s %12s %12s %12s %10s\n", "fixture", "", "alpha", "beta", "gamma",
                    "certified");
        for (auto which : {Fixture::first, Fixture::second}) {
            const char* nm = which == Fixture::first ? "first" : "second";
            const auto& ref = published_reference(which);
            // the published run certified each solution at its minimal digit
            // count (12 / 11); certify the same truncations for comparability
            auto rep = alpha_beta_gamma(sys, fixture_truncated(which, ref.min_certifiable_digits));
            std::printf("%-8s %-10s %12.4e %12.4e %12.4e %10s\n", nm, "computed",
                        rep.alpha.get_d(), rep.beta.get_d(), rep.gamma.get_d(),
                        rep.certified_approximate ? "yes" : "no");
            std::printf("%-8s %-10s %12.4e %12.4e %12.4e %10s\n", nm, "published", ref.alpha,
                        ref.beta, ref.gamma, "yes");
            all_ok &= rep.certified_approximate;
            json r = alpha_report_json(rep);
            r["fixture"] = nm;
            r["published"] = {{"alpha", ref.alpha}, {"beta", ref.beta}, {"gamma", ref.gamma},
                              {"min_certifiable_digits", ref.min_certifiable_digits}};
            results.push_back(r);
        }
        if (!output.empty()) {
            write_file(output, json{{"fixtures", results}}.dump(2) + "\n");
            mf.outputs.push_back(output);
        }
        mf.emit();
        return all_ok ? 0 : 1;
    }

    mf.inputs.push_back(src.describe());
    std::vector<Rational> xq;
    if (digits > 0 && src.is_fixture())
        xq = fixture_truncated(src.fixture_id(), digits);
    else
        xq = src.load_rationals();
    AlphaReport rep = alpha_beta_gamma(sys, xq);
    std::printf("alpha=%.6e beta=%.6e gamma=%.6e certified=%s real=%s\n", rep.alpha.get_d(),
                rep.beta.get_d(), rep.gamma.get_d(), rep.certified_approximate ? "yes" : "no",
                rep.certified_real ? "yes" : "no");
    if (!output.empty()) {
        write_file(output, alpha_report_json(rep).dump(2) + "\n");
        mf.outputs.push_back(output);
    }
    mf.emit();
    return rep.certified_approximate ? 0 : 1;
}

// ---- certify-krawczyk ----

int cmd_certify_krawczyk(const SolutionSource& src, double radius, const std::string& output) {
    RunManifest mf;
    mf.command = "certify-krawczyk";
    mf.inputs.push_back(src.describe());
    mf.options = {{"radius", radius}};

    PolynomialSystem sys = build_littlewood_system();
    std::vector<double> xd;
    for (const auto& q : src.load_rationals()) xd.push_back(q.get_d());
    auto [xr, rrep] = newton_refine(sys, xd, {1e-12, 60, 1e4});
    auto kr = krawczyk_operator(sys, xr, radius);
    std::printf("radius=%.3e contained=%s contraction=%.4e\n", radius,
                kr.contained ? "true" : "false", kr.contraction_factor);

    json j;
    j["radius"] = radius;
    j["contained"] = kr.contained;
    j["contraction_factor"] = kr.contraction_factor;
    j["center"] = "double-precision refined point";
    json comps = json::array();
    for (std::size_t i = 0; i < kr.K.size(); ++i)
        comps.push_back({kr.K[i].lo, kr.K[i].hi, kr.box[i].lo, kr.box[i].hi});
    j["per_component"] = comps;
    if (!output.empty()) {
        write_file(output, j.dump(2) + "\n");
        mf.outputs.push_back(output);
    }
    mf.emit();
    return kr.contained ? 0 : 1;
}

// ---- angles ----

int cmd_angles(const SolutionSource& src, const SolutionSource& other, bool compare,
               const std::string& output) {
    RunManifest mf;
    mf.command = "angles";
    mf.inputs.push_back(src.describe());
    mf.options = {{"compare", compare}};

    auto arr = decode_solution(to_solution_vector(src.load().doubles()));
    auto angs = pairwise_angles(arr);
    json j;
    j["angles"] = angs;
    std::printf("21 pairwise angles (ascending):\n");
    for (double a : angs) std::printf("  %.9f\n", a);

    if (compare) {
        mf.inputs.push_back(other.describe());
        auto arr2 = decode_solution(to_solution_vector(other.load().doubles()));
        auto angs2 = pairwise_angles(arr2);
        std::vector<double> common;
        for (double a : angs) {
            for (double b : angs2)
                if (std::abs(a - b) <= kAngleMatchTolerance) {
                    common.push_back(a);
                    break;
                }
        }
        bool congruent = congruence_equivalent(arr, arr2, kAngleMatchTolerance);
        std::printf("angle matches within %.1e: %zu; congruent (angle multiset)=%s\n",
                    kAngleMatchTolerance, common.size(), congruent ? "true" : "false");
        j["compare"] = {{"other", other.describe()},
                        {"tolerance", kAngleMatchTolerance},
                        {"common_angles", common},
                        {"congruent", congruent}};
    }
    if (!output.empty()) {
        write_file(output, j.dump(2) + "\n");
        mf.outputs.push_back(output);
    }
    mf.emit();
    return 0;
}

// ---- export-geometry ----

int cmd_export_geometry(const SolutionSource& src, const std::string& output) {
    RunManifest mf;
    mf.command = "export-geometry";
    mf.inputs.push_back(src.describe());

    auto arr = decode_solution(to_solution_vector(src.load().doubles()));
    json j;
    j["radius"] = 1.0;
    json axes = json::array();
    for (const auto& ln : arr.axes)
        axes.push_back({{"point", {ln.point.x, ln.point.y, ln.point.z}},
                        {"direction", {ln.direction.x, ln.direction.y, ln.direction.z}}});
    j["axes"] = axes;
    json contacts = json::array();
    for (std::size_t a = 0; a < 7; ++a) {
        for (std::size_t b = a + 1; b < 7; ++b) {
            auto [pa, pb] = closest_points(arr.axes[a], arr.axes[b]);
            Vec3 mid = (pa + pb) * 0.5;
            contacts.push_back({{"i", a + 1}, {"j", b + 1}, {"point", {mid.x, mid.y, mid.z}}});
        }
    }
    j["contacts"] = contacts;
    std::string text = j.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        write_file(output, text);
        mf.outputs.push_back(output);
        std::printf("wrote 7 axes and %zu contact points to %s\n", contacts.size(),
                    output.c_str());
    }
    mf.emit();
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"seven mutually touching unit cylinders: system generation, solving, "
                 "refinement, and certified verification"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit the touching system (or the generic pair polynomial)");
    std::string gen_format = "text", gen_output;
    bool gen_generic = false;
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"text", "json"}));
    gen->add_option("--output", gen_output);
    gen->add_flag("--generic", gen_generic, "emit the 84-term generic distance polynomial instead");

    // verify
    auto* ver = app.add_subcommand("verify", "run residual/distance/alpha/krawczyk/angles checks");
    SolutionSource ver_src;
    ver_src.add_options(ver);
    std::vector<std::string> ver_checks{"all"};
    double ver_radius = 1e-8;
    std::string ver_output;
    ver->add_option("--checks", ver_checks)->delimiter(',');
    ver->add_option("--radius", ver_radius);
    ver->add_option("--output", ver_output);

    // solve
    auto* sol = app.add_subcommand("solve", "polyhedral homotopy continuation solve");
    std::string sol_input, sol_format, sol_output;
    bool sol_toy = false, sol_huge = false;
    std::uint64_t sol_seed = 1;
    double sol_end_tol = 1e-10;
    long long sol_max_paths = 1000000;
    unsigned sol_threads = 1;
    sol->add_option("--input", sol_input, "system file (text or json)");
    sol->add_option("--format", sol_format)->check(CLI::IsMember({"text", "json"}));
    sol->add_flag("--toy", sol_toy, "solve the built-in toy system {x^2+y-1, x+y^2-1}");
    sol->add_option("--seed", sol_seed);
    sol->add_option("--end-tol", sol_end_tol);
    sol->add_option("--max-paths", sol_max_paths, "path cap; 0 = enumerate and report only");
    sol->add_flag("--i-know-this-is-huge", sol_huge);
    sol->add_option("--threads", sol_threads);
    sol->add_option("--output", sol_output);

    // refine
    auto* ref = app.add_subcommand("refine", "Newton refinement (double or extended precision)");
    SolutionSource ref_src;
    ref_src.add_options(ref);
    double ref_tol = 1e-12;
    int ref_max_iter = 100, ref_digits = 0;
    std::string ref_output;
    ref->add_option("--tol", ref_tol);
    ref->add_option("--max-iter", ref_max_iter);
    ref->add_option("--precision-digits", ref_digits, "> 0 switches to extended precision");
    ref->add_option("--output", ref_output);

    // certify-alpha
    auto* ca = app.add_subcommand("certify-alpha", "exact-rational alpha-theory certification");
    SolutionSource ca_src;
    ca_src.add_options(ca);
    int ca_digits = 0;
    bool ca_paper = false;
    std::string ca_output;
    ca->add_option("--digits", ca_digits, "truncate a fixture to this many decimals first");
    ca->add_flag("--paper-fixtures", ca_paper,
                 "certify both built-in solutions and compare against the published values");
    ca->add_option("--output", ca_output);

    // certify-krawczyk
    auto* ck = app.add_subcommand("certify-krawczyk", "interval Krawczyk existence/uniqueness");
    SolutionSource ck_src;
    ck_src.add_options(ck);
    double ck_radius = 1e-8;
    std::string ck_output;
    ck->add_option("--radius", ck_radius);
    ck->add_option("--output", ck_output);

    // angles
    auto* ang = app.add_subcommand("angles", "pairwise axis angles; optionally compare two solutions");
    SolutionSource ang_src, ang_other;
    ang_src.add_options(ang);
    std::string ang_output;
    std::string other_fixture, other_input;
    ang->add_option("--compare-fixture", other_fixture)->check(CLI::IsMember({"first", "second"}));
    ang->add_option("--compare-input", other_input);
    ang->add_option("--output", ang_output);

    // export-geometry
    auto* exg = app.add_subcommand("export-geometry", "axes, radius and the 21 contact points as JSON");
    SolutionSource exg_src;
    exg_src.add_options(exg);
    std::string exg_output;
    exg->add_option("--output", exg_output);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_format, gen_output, gen_generic);
        if (ver->parsed()) return cmd_verify(ver_src, ver_checks, ver_radius, ver_output);
        if (sol->parsed())
            return cmd_solve(sol_input, sol_format, sol_toy, sol_seed, sol_end_tol, sol_max_paths,
                             sol_huge, sol_threads, sol_output);
        if (ref->parsed()) return cmd_refine(ref_src, ref_tol, ref_max_iter, ref_digits, ref_output);
        if (ca->parsed()) return cmd_certify_alpha(ca_src, ca_digits, ca_paper, ca_output);
        if (ck->parsed()) return cmd_certify_krawczyk(ck_src, ck_radius, ck_output);
        if (ang->parsed()) {
            ang_other.fixture = other_fixture;
            ang_other.input = other_input;
            bool compare = !other_fixture.empty() || !other_input.empty();
            return cmd_angles(ang_src, ang_other, compare, ang_output);
        }
        if (exg->parsed()) return cmd_export_geometry(exg_src, exg_output);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
    return 2;
}

} // namespace cyl7
