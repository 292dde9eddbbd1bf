#include "cyl7/bigfloat.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace cyl7 {

std::string BigFloat::to_decimal(int digits) const {
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(mant.begin());
    if (mant.empty()) mant = "0";

    std::string out;
    if (mpfr_zero_p(v_)) {
        out = "0";
    } else if (e <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
    } else if (static_cast<std::size_t>(e) >= mant.size()) {
        out = mant + std::string(static_cast<std::size_t>(e) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
    }
    // drop trailing fractional zeros but keep at least one digit
    if (out.find('.') != std::string::npos) {
        std::size_t last = out.find_last_not_of('0');
        if (out[last] == '.') last -= 1;
        out.erase(last + 1);
    }
    return neg ? "-" + out : out;
}

} // namespace cyl7
