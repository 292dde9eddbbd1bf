#pragma once

#include "cyl7/polynomial.hpp"
#include "cyl7/rational.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace cyl7 {

// Minimal RAII wrapper over mpfr_t. Precision is per-value; arithmetic results
// take the larger operand precision. Rounding is to-nearest: this type backs
// extended-precision refinement, not the rigorous interval layer.
class BigFloat {
  public:
    BigFloat() {
        mpfr_init2(v_, default_precision());
        mpfr_set_zero(v_, 1);
    }
    explicit BigFloat(double d, mpfr_prec_t prec = default_precision()) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    explicit BigFloat(const Rational& q, mpfr_prec_t prec = default_precision()) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    explicit BigFloat(const std::string& s, mpfr_prec_t prec = default_precision()) {
        mpfr_init2(v_, prec);
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static mpfr_prec_t bits_for_digits(int decimal_digits) {
        return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873623) + 32;
    }

    // Scoped default precision for construction inside templated code
    // (polynomial evaluation creates scalars without a precision argument).
    static mpfr_prec_t& default_precision() {
        thread_local mpfr_prec_t prec = 128;
        return prec;
    }
    struct ScopedPrecision {
        mpfr_prec_t saved;
        explicit ScopedPrecision(mpfr_prec_t p) : saved(default_precision()) { default_precision() = p; }
        ~ScopedPrecision() { default_precision() = saved; }
    };

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(0.0, std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(0.0, std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(0.0, std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(0.0, std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(0.0, prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }

    BigFloat abs() const {
        BigFloat r(0.0, prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    std::string to_decimal(int digits) const;

  private:
    mpfr_t v_;
};

template <>
struct ScalarTraits<BigFloat> {
    static BigFloat from_rational(const Rational& q) { return BigFloat(q); }
};

} // namespace cyl7
