#include "cyl7/serialization.hpp"

#include "cyl7/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cyl7 {

namespace {

std::string term_to_string(const std::vector<std::string>& vars, const Monomial& m,
                           const Rational& c) {
    std::ostringstream os;
    os << c.get_str();
    for (std::size_t k = 0; k < m.exps.size(); ++k) {
        if (m.exps[k] == 0) continue;
        os << "*" << vars[k];
        if (m.exps[k] > 1) os << "^" << m.exps[k];
    }
    return os.str();
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

} // namespace

std::string write_system_text(const PolynomialSystem& sys) {
    std::ostringstream os;
    os << "vars";
    for (const auto& v : sys.vars) os << " " << v;
    os << "\n";
    for (const auto& p : sys.polys) {
        if (p.is_zero()) {
            os << "0\n";
            continue;
        }
        bool leading = true;
        for (const auto& [m, c] : p.terms()) {
            if (!leading) os << " + ";
            os << term_to_string(sys.vars, m, c);
            leading = false;
        }
        os << "\n";
    }
    return os.str();
}

PolynomialSystem parse_system_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    PolynomialSystem sys;
    bool have_vars = false;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (!have_vars) {
            auto fields = split(line, " ");
            if (fields.empty() || fields[0] != "vars")
                throw ParseError("system text: expected a 'vars' header line");
            sys.vars.assign(fields.begin() + 1, fields.end());
            have_vars = true;
            continue;
        }
        SparsePolynomial p(sys.vars);
        if (line != "0") {
            for (auto& termstr : split(line, " + ")) {
                termstr = strip(termstr);
                auto factors = split(termstr, "*");
                Rational c = rational_from_decimal(strip(factors[0]));
                std::vector<unsigned> e(sys.vars.size(), 0u);
                for (std::size_t k = 1; k < factors.size(); ++k) {
                    auto f = strip(factors[k]);
                    std::size_t caret = f.find('^');
                    std::string name = caret == std::string::npos ? f : f.substr(0, caret);
                    unsigned ex = caret == std::string::npos
                                      ? 1u
                                      : static_cast<unsigned>(std::stoul(f.substr(caret + 1)));
                    e[p.var_index(name)] += ex;
                }
                p.add_term(Monomial(std::move(e)), c);
            }
        }
        sys.polys.push_back(std::move(p));
    }
    if (!have_vars) throw ParseError("system text: missing 'vars' header");
    return sys;
}

std::string write_system_json(const PolynomialSystem& sys) {
    nlohmann::json j;
    j["variables"] = sys.vars;
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& p : sys.polys) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : p.terms()) {
            terms.push_back({{"coefficient", c.get_str()}, {"exponents", m.exps}});
        }
        polys.push_back(terms);
    }
    j["polynomials"] = polys;
    return j.dump(2) + "\n";
}

PolynomialSystem parse_system_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PolynomialSystem sys;
    sys.vars = j.at("variables").get<std::vector<std::string>>();
    for (const auto& terms : j.at("polynomials")) {
        SparsePolynomial p(sys.vars);
        for (const auto& t : terms) {
            Rational c = rational_from_decimal(t.at("coefficient").get<std::string>());
            auto e = t.at("exponents").get<std::vector<unsigned>>();
            p.add_term(Monomial(std::move(e)), c);
        }
        sys.polys.push_back(std::move(p));
    }
    return sys;
}

std::vector<Rational> SolutionFile::rationals() const {
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const auto& s : values) out.push_back(rational_from_decimal(s));
    return out;
}

std::vector<double> SolutionFile::doubles() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& s : values) out.push_back(rational_from_decimal(s).get_d());
    return out;
}

std::string write_solution_json(const SolutionFile& sol) {
    nlohmann::json j;
    j["variables"] = sol.variables;
    j["values"] = sol.values;
    j["precision_digits"] = sol.precision_digits;
    return j.dump(2) + "\n";
}

SolutionFile parse_solution_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SolutionFile sol;
    sol.variables = j.at("variables").get<std::vector<std::string>>();
    sol.values = j.at("values").get<std::vector<std::string>>();
    sol.precision_digits = j.value("precision_digits", 0);
    return sol;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

} // namespace cyl7
