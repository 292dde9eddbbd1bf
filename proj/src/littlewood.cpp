#include "cyl7/littlewood.hpp"

#include <map>

namespace cyl7 {

const std::vector<std::string>& generic_distance_variables() {
    static const std::vector<std::string> vars = {"xi", "yi", "zi", "ti", "ui", "vi",
                                                  "xj", "yj", "zj", "tj", "uj", "vj"};
    return vars;
}

const std::vector<std::string>& littlewood_variables() {
    static const std::vector<std::string> vars = [] {
        std::vector<std::string> v;
        for (int i = 3; i <= 7; ++i)
            for (const char* nm : {"x", "y", "t", "u"}) v.push_back(nm + std::to_string(i));
        return v;
    }();
    return vars;
}

SparsePolynomial build_generic_distance_polynomial() {
    const auto& V = generic_distance_variables();
    auto var = [&](const char* n) { return SparsePolynomial::variable(V, n); };
    SparsePolynomial xi = var("xi"), yi = var("yi"), zi = var("zi");
    SparsePolynomial ti = var("ti"), ui = var("ui"), vi = var("vi");
    SparsePolynomial xj = var("xj"), yj = var("yj"), zj = var("zj");
    SparsePolynomial tj = var("tj"), uj = var("uj"), vj = var("vj");

    // cross product of the direction vectors
    SparsePolynomial cx = ui * vj - vi * uj;
    SparsePolynomial cy = vi * tj - ti * vj;
    SparsePolynomial cz = ti * uj - ui * tj;
    // triple product (P_j - P_i) . (w_i x w_j)
    SparsePolynomial triple = (xj - xi) * cx + (yj - yi) * cy + (zj - zi) * cz;

    return triple * triple - Rational(4) * (cx * cx + cy * cy + cz * cz);
}

namespace {

// Substitute one fixed line (or the z_i = 0, v_i = 1-t_i-u_i normalization)
// into the generic polynomial and transplant the result into the 20-var ring.
SparsePolynomial pair_fixed_line(const SparsePolynomial& generic, bool line_one, int j) {
    const Rational zi = line_one ? Rational(-1) : Rational(1);
    const Rational ti = line_one ? Rational(1) : Rational(0);
    const Rational ui = line_one ? Rational(0) : Rational(1);

    // remaining ring after constants: {xj, yj, tj, uj, vj}
    SparsePolynomial step1 = substitute(
        generic, std::map<std::string, Rational>{{"xi", Rational(0)},
                                                 {"yi", Rational(0)},
                                                 {"zi", zi},
                                                 {"ti", ti},
                                                 {"ui", ui},
                                                 {"vi", Rational(0)},
                                                 {"zj", Rational(0)}});
    const std::vector<std::string> ring = {"xj", "yj", "tj", "uj"};
    SparsePolynomial one = SparsePolynomial::constant(ring, Rational(1));
    SparsePolynomial vj_expr = one - SparsePolynomial::variable(ring, "tj") -
                               SparsePolynomial::variable(ring, "uj");
    SparsePolynomial step2 = substitute(step1, std::map<std::string, SparsePolynomial>{{"vj", vj_expr}});

    std::map<std::string, std::string> rename = {{"xj", "x" + std::to_string(j)},
                                                 {"yj", "y" + std::to_string(j)},
                                                 {"tj", "t" + std::to_string(j)},
                                                 {"uj", "u" + std::to_string(j)}};
    return embed(step2, littlewood_variables(), rename);
}

SparsePolynomial pair_free_lines(const SparsePolynomial& generic, int i, int j) {
    SparsePolynomial step1 = substitute(
        generic, std::map<std::string, Rational>{{"zi", Rational(0)}, {"zj", Rational(0)}});
    const std::vector<std::string> ring = {"xi", "yi", "ti", "ui", "xj", "yj", "tj", "uj"};
    SparsePolynomial one = SparsePolynomial::constant(ring, Rational(1));
    SparsePolynomial vi_expr = one - SparsePolynomial::variable(ring, "ti") -
                               SparsePolynomial::variable(ring, "ui");
    SparsePolynomial vj_expr = one - SparsePolynomial::variable(ring, "tj") -
                               SparsePolynomial::variable(ring, "uj");
    SparsePolynomial step2 = substitute(
        step1, std::map<std::string, SparsePolynomial>{{"vi", vi_expr}, {"vj", vj_expr}});

    std::map<std::string, std::string> rename;
    for (const char* nm : {"x", "y", "t", "u"}) {
        rename[std::string(nm) + "i"] = nm + std::to_string(i);
        rename[std::string(nm) + "j"] = nm + std::to_string(j);
    }
    return embed(step2, littlewood_variables(), rename);
}

} // namespace

PolynomialSystem build_littlewood_system() {
    SparsePolynomial generic = build_generic_distance_polynomial();
    PolynomialSystem sys;
    sys.vars = littlewood_variables();
    for (int j = 3; j <= 7; ++j) sys.polys.push_back(pair_fixed_line(generic, true, j));
    for (int j = 3; j <= 7; ++j) sys.polys.push_back(pair_fixed_line(generic, false, j));
    for (int i = 3; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) sys.polys.push_back(pair_free_lines(generic, i, j));
    return sys;
}

double bezout_bound(const PolynomialSystem& sys) {
    double b = 1.0;
    for (const auto& p : sys.polys) b *= static_cast<double>(p.total_degree());
    return b;
}

namespace {

const std::array<std::string, 20> kFirst = {
    "11.675771704477", "-4.124414157636", "0.704116159640",  "0.235129952793",
    "3.802878122730",  "-2.910611127075", "0.895623427074",  "-0.149726023342",
    "8.311818491659",  "-1.732276613733", "2.515897624878",  "-0.566129665502",
    "-6.487945444917", "-8.537495065091", "0.785632006191",  "0.338461562103",
    "-3.168475045360", "-2.459640638529", "0.192767499267",  "0.536724141124"};

const std::array<std::string, 20> kSecond = {
    "2.075088491891",  "-2.036516392124", "-0.030209763440", "0.599691085438",
    "-2.688893665930", "4.070505903499",  "0.184499043058",  "0.426965115851",
    "-4.033142850644", "-2.655943449984", "0.251380280590",  "0.516678258430",
    "6.311134419772",  "-5.229892181735", "-0.474742889365", "1.230302197822",
    "3.914613907006",  "-7.881492743224", "1.698198197367",  "-1.164062857743"};

} // namespace

const std::array<std::string, 20>& fixture_strings(Fixture which) {
    return which == Fixture::first ? kFirst : kSecond;
}

std::vector<Rational> fixture_rationals(Fixture which) {
    std::vector<Rational> out;
    out.reserve(20);
    for (const auto& s : fixture_strings(which)) out.push_back(rational_from_decimal(s));
    return out;
}

std::vector<double> fixture_doubles(Fixture which) {
    std::vector<double> out;
    out.reserve(20);
    for (const auto& s : fixture_strings(which)) out.push_back(rational_from_decimal(s).get_d());
    return out;
}

std::vector<Rational> fixture_truncated(Fixture which, int digits) {
    std::vector<Rational> out;
    out.reserve(20);
    for (const auto& s : fixture_strings(which))
        out.push_back(rational_from_decimal(truncate_decimal(s, digits)));
    return out;
}

const PublishedReference& published_reference(Fixture which) {
    static const PublishedReference first{4.4333e-2, 3.1668e-12, 1.3999e10, 4.8e4, 5e-14, 1e-8, 1e-8, 12};
    static const PublishedReference second{6.578e-2, 2.2387e-11, 2.9392e9, 4.8e4, 5e-14, 1e-8, 1e-8, 11};
    return which == Fixture::first ? first : second;
}

} // namespace cyl7
