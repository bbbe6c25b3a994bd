#ifndef TSGEOM_SIGN_HPP
#define TSGEOM_SIGN_HPP

#include <cmath>

#include "tsgeom/errors.hpp"

namespace tsgeom {

/// Three-valued sign under the total order Neg < Zero < Pos.
enum class Sign : int {
    Neg = -1,
    Zero = 0,
    Pos = 1,
};

constexpr int sign_value(Sign s) { return static_cast<int>(s); }

constexpr bool sign_le(Sign a, Sign b) { return sign_value(a) <= sign_value(b); }

/// Order reversal: Neg <-> Pos, Zero fixed.
constexpr Sign flip(Sign s) { return static_cast<Sign>(-sign_value(s)); }

constexpr char sign_char(Sign s) {
    return s == Sign::Neg ? '-' : (s == Sign::Pos ? '+' : '0');
}

/// Sign of x with a dead band of half width tau: Zero iff |x| <= tau.
inline Sign sign_of(double x, double tau = 0.0) {
    if (!std::isfinite(x)) throw InvalidInput("sign_of: non-finite value");
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw InvalidInput("sign_of: tau must be finite and >= 0");
    if (x > tau) return Sign::Pos;
    if (x < -tau) return Sign::Neg;
    return Sign::Zero;
}

} // namespace tsgeom

#endif // TSGEOM_SIGN_HPP
