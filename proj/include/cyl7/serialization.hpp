#pragma once

#include "cyl7/polynomial.hpp"

#include <string>
#include <vector>

namespace cyl7 {

// Text format: a `vars` header line, then one polynomial per line with terms
// joined by " + ", each term `coef` or `coef*v1^e1*v2^e2...` with exact
// rational coefficients in graded-lex order. Round-trips losslessly.
std::string write_system_text(const PolynomialSystem& sys);
PolynomialSystem parse_system_text(const std::string& text);

std::string write_system_json(const PolynomialSystem& sys);
PolynomialSystem parse_system_json(const std::string& text);

// Solution files: {"variables": [...], "values": ["decimal", ...],
// "precision_digits": N}. Decimal strings preserve arbitrary precision.
struct SolutionFile {
    std::vector<std::string> variables;
    std::vector<std::string> values;
    int precision_digits = 0;

    std::vector<Rational> rationals() const;
    std::vector<double> doubles() const;
};

std::string write_solution_json(const SolutionFile& sol);
SolutionFile parse_solution_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cyl7
