#pragma once

#include "cyl7/errors.hpp"
#include "cyl7/rational.hpp"

#include <complex>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace cyl7 {

// Exponent vector; length always equals the ambient variable count.
struct Monomial {
    std::vector<unsigned> exps;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> e) : exps(std::move(e)) {}

    unsigned degree() const { return std::accumulate(exps.begin(), exps.end(), 0u); }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Graded lexicographic, leading term first: higher total degree sorts first,
// ties broken by lexicographically larger exponent vector. Map iteration is
// the canonical printing order.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

// Conversion from exact rational coefficients into an evaluation scalar.
// Specialized for Interval and BigFloat in their own headers.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static double from_rational(const Rational& q) { return q.get_d(); }
};

template <>
struct ScalarTraits<Rational> {
    static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static std::complex<double> from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
};

class SparsePolynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static SparsePolynomial constant(std::vector<std::string> vars, const Rational& c);
    static SparsePolynomial variable(const std::vector<std::string>& vars, const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t var_count() const { return vars_.size(); }
    std::size_t var_index(const std::string& name) const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    // 0 when the monomial is absent.
    Rational coefficient(const Monomial& m) const;
    Rational coefficient(std::initializer_list<unsigned> exps) const;

    // Accumulates; zero results are dropped so no stored coefficient is zero.
    void add_term(const Monomial& m, const Rational& c);

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial& operator*=(const Rational& c);
    SparsePolynomial operator-() const;
    SparsePolynomial pow(unsigned e) const;
    SparsePolynomial derivative(std::size_t var) const;

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
    friend SparsePolynomial operator*(const Rational& c, SparsePolynomial a) { return a *= c; }

    bool operator==(const SparsePolynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    template <class T>
    T evaluate(std::span<const T> point) const;

  private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void check_same_ring(const SparsePolynomial& o) const;
};

// Substitution: every key must be a variable of p; every bound value must live in
// the shared target ring `result ring` (the ring of the first binding value), and
// the unbound variables of p must exist there by name. Constants bind via the
// Rational overload helper below.
SparsePolynomial substitute(const SparsePolynomial& p,
                            const std::map<std::string, SparsePolynomial>& bindings);

// Convenience: bind variables to rational constants; the result ring is the
// remaining variables of p in their original order.
SparsePolynomial substitute(const SparsePolynomial& p,
                            const std::map<std::string, Rational>& const_bindings);

// Reinterpret p over a different variable list, optionally renaming variables.
SparsePolynomial embed(const SparsePolynomial& p, const std::vector<std::string>& new_vars,
                       const std::map<std::string, std::string>& rename = {});

struct JacobianMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<SparsePolynomial> entries; // row-major

    const SparsePolynomial& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

struct PolynomialSystem {
    std::vector<std::string> vars;
    std::vector<SparsePolynomial> polys;

    std::size_t size() const { return polys.size(); }
    std::size_t var_count() const { return vars.size(); }

    template <class T>
    std::vector<T> evaluate(std::span<const T> point) const;

    JacobianMatrix jacobian() const;
};

// ---- templated evaluation ----

namespace detail {

// Neumaier compensated accumulation; specialized for double so floating-mode
// residuals near 1e-9 at term magnitudes ~1e4 stay trustworthy.
template <class T>
struct Accumulator {
    T sum{};
    void add(const T& v) { sum += v; }
    T value() const { return sum; }
};

template <>
struct Accumulator<double> {
    double sum = 0.0, comp = 0.0;
    void add(const double& v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

template <>
struct Accumulator<std::complex<double>> {
    Accumulator<double> re, im;
    void add(const std::complex<double>& v) {
        re.add(v.real());
        im.add(v.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

template <class T>
unsigned max_exponent_per_var(const typename SparsePolynomial::TermMap& terms) {
    unsigned m = 0;
    for (const auto& [mono, c] : terms)
        for (unsigned e : mono.exps) m = std::max(m, e);
    return m;
}

} // namespace detail

template <class T>
T SparsePolynomial::evaluate(std::span<const T> point) const {
    if (point.size() != vars_.size())
        throw DimensionMismatch("evaluate: point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " + std::to_string(vars_.size()) +
                                " variables");
    detail::Accumulator<T> acc;
    for (const auto& [mono, c] : terms_) {
        T term = ScalarTraits<T>::from_rational(c);
        for (std::size_t k = 0; k < mono.exps.size(); ++k)
            for (unsigned e = 0; e < mono.exps[k]; ++e) term = term * point[k];
        acc.add(term);
    }
    return acc.value();
}

template <class T>
std::vector<T> PolynomialSystem::evaluate(std::span<const T> point) const {
    if (point.size() != vars.size())
        throw DimensionMismatch("system evaluate: dimension mismatch");
    std::vector<T> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.evaluate(point));
    return out;
}

} // namespace cyl7
