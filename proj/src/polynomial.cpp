#include "cyl7/polynomial.hpp"

#include <algorithm>

namespace cyl7 {

SparsePolynomial SparsePolynomial::constant(std::vector<std::string> vars, const Rational& c) {
    SparsePolynomial p(std::move(vars));
    p.add_term(Monomial(std::vector<unsigned>(p.vars_.size(), 0u)), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(const std::vector<std::string>& vars, const std::string& name) {
    SparsePolynomial p(vars);
    std::vector<unsigned> e(vars.size(), 0u);
    e[p.var_index(name)] = 1;
    p.add_term(Monomial(std::move(e)), Rational(1));
    return p;
}

std::size_t SparsePolynomial::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw UnknownVariable("unknown variable: " + name);
    return static_cast<std::size_t>(it - vars_.begin());
}

unsigned SparsePolynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational SparsePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePolynomial::coefficient(std::initializer_list<unsigned> exps) const {
    return coefficient(Monomial(std::vector<unsigned>(exps)));
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.exps.size() != vars_.size())
        throw DimensionMismatch("term exponent length does not match variable count");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePolynomial::check_same_ring(const SparsePolynomial& o) const {
    if (vars_ != o.vars_) throw DimensionMismatch("polynomials over different variable lists");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
    return out;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.check_same_ring(b);
    SparsePolynomial out(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<unsigned> e(ma.exps.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ma.exps[k] + mb.exps[k];
            out.add_term(Monomial(std::move(e)), ca * cb);
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::pow(unsigned e) const {
    SparsePolynomial out = constant(vars_, Rational(1));
    SparsePolynomial base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        if (e >>= 1u) base = base * base;
    }
    return out;
}

SparsePolynomial SparsePolynomial::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw UnknownVariable("derivative: variable index out of range");
    SparsePolynomial out(vars_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] == 0) continue;
        std::vector<unsigned> e = m.exps;
        Rational nc = c * Rational(static_cast<long>(e[var]));
        e[var] -= 1;
        out.add_term(Monomial(std::move(e)), nc);
    }
    return out;
}

SparsePolynomial substitute(const SparsePolynomial& p,
                            const std::map<std::string, SparsePolynomial>& bindings) {
    if (bindings.empty()) return p;
    const std::vector<std::string>& target = bindings.begin()->second.variables();
    for (const auto& [name, val] : bindings) {
        p.var_index(name); // throws UnknownVariable when the key is foreign
        if (val.variables() != target)
            throw DimensionMismatch("substitute: binding values over different variable lists");
    }
    // per source variable: either a bound expression or the identity in the target ring
    std::vector<SparsePolynomial> images;
    images.reserve(p.var_count());
    for (const auto& name : p.variables()) {
        auto it = bindings.find(name);
        if (it != bindings.end())
            images.push_back(it->second);
        else
            images.push_back(SparsePolynomial::variable(target, name));
    }
    SparsePolynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        SparsePolynomial term = SparsePolynomial::constant(target, c);
        for (std::size_t k = 0; k < m.exps.size(); ++k)
            if (m.exps[k] > 0) term = term * images[k].pow(m.exps[k]);
        out += term;
    }
    return out;
}

SparsePolynomial substitute(const SparsePolynomial& p,
                            const std::map<std::string, Rational>& const_bindings) {
    std::vector<std::string> remaining;
    for (const auto& v : p.variables())
        if (!const_bindings.count(v)) remaining.push_back(v);
    std::map<std::string, SparsePolynomial> bindings;
    for (const auto& [name, q] : const_bindings)
        bindings.emplace(name, SparsePolynomial::constant(remaining, q));
    if (bindings.empty()) return p;
    return substitute(p, bindings);
}

SparsePolynomial embed(const SparsePolynomial& p, const std::vector<std::string>& new_vars,
                       const std::map<std::string, std::string>& rename) {
    std::vector<std::size_t> where(p.var_count());
    SparsePolynomial probe(new_vars);
    for (std::size_t k = 0; k < p.var_count(); ++k) {
        std::string name = p.variables()[k];
        auto it = rename.find(name);
        if (it != rename.end()) name = it->second;
        where[k] = probe.var_index(name);
    }
    SparsePolynomial out(new_vars);
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e(new_vars.size(), 0u);
        for (std::size_t k = 0; k < m.exps.size(); ++k) e[where[k]] += m.exps[k];
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

JacobianMatrix PolynomialSystem::jacobian() const {
    JacobianMatrix J;
    J.rows = polys.size();
    J.cols = vars.size();
    J.entries.reserve(J.rows * J.cols);
    for (const auto& p : polys)
        for (std::size_t c = 0; c < J.cols; ++c) J.entries.push_back(p.derivative(c));
    return J;
}

} // namespace cyl7
