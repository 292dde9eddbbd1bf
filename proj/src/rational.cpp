#include "cyl7/rational.hpp"

#include "cyl7/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace cyl7 {

Rational rational_from_decimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    if (s.find('/') != std::string::npos) {
        Rational q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
        q.canonicalize();
        return q;
    }
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = (s[pos] == '-');
        ++pos;
    }
    std::string intpart, fracpart;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) intpart += s[pos++];
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) fracpart += s[pos++];
    }
    // exponent suffix: eN scales by 10^N
    long expo = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        expo = std::strtol(s.c_str() + pos + 1, nullptr, 10);
        pos = s.size();
    }
    if (pos != s.size() || (intpart.empty() && fracpart.empty()))
        throw ParseError("bad decimal literal: " + s);

    mpz_class num(intpart.empty() ? std::string("0") : intpart);
    mpz_class den(1);
    for (char c : fracpart) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    mpz_class ten(10);
    for (long i = 0; i < expo; ++i) num *= ten;
    for (long i = 0; i > expo; --i) den *= ten;
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string decimal_from_rational(const Rational& q, int digits) {
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled = num * scale / den; // floor == toward zero for nonnegative
    mpz_class ip = scaled / scale;
    mpz_class fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

std::string truncate_decimal(const std::string& s, int digits) {
    return decimal_from_rational(rational_from_decimal(s), digits);
}

namespace {

// sqrt(num/den) = sqrt(num*den) / den; scale by 10^guard for tightness.
Rational sqrt_bound(const Rational& q, unsigned guard_digits, bool upper) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    if (q == 0) return Rational(0);
    mpz_class k(1);
    for (unsigned i = 0; i < guard_digits; ++i) k *= 10;
    mpz_class m = q.get_num() * q.get_den() * k * k;
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    if (upper && rem != 0) root += 1;
    Rational out(root, q.get_den() * k);
    out.canonicalize();
    return out;
}

} // namespace

Rational sqrt_upper(const Rational& q, unsigned guard_digits) { return sqrt_bound(q, guard_digits, true); }
Rational sqrt_lower(const Rational& q, unsigned guard_digits) { return sqrt_bound(q, guard_digits, false); }

Rational pow_rational(const Rational& base, unsigned exp) {
    Rational out(1);
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) out *= b;
        b *= b;
        e >>= 1u;
    }
    return out;
}

double to_double(const Rational& q) { return q.get_d(); }

} // namespace cyl7
