#ifndef ERRSUMLAB_TEST_UTIL_HPP
#define ERRSUMLAB_TEST_UTIL_HPP

#include <string>

#include "errsumlab/enclosure.hpp"

namespace errsum::test {

// "12.345" or "-0.5" or "7" -> exact rational
inline Rational decimal(const std::string& s) {
    bool neg = !s.empty() && s[0] == '-';
    std::string body = neg ? s.substr(1) : s;
    auto dot = body.find('.');
    std::string digits = body;
    unsigned long frac = 0;
    if (dot != std::string::npos) {
        frac = body.size() - dot - 1;
        digits = body.substr(0, dot) + body.substr(dot + 1);
    }
    Rational r(Integer(digits, 10), pow10z(frac));
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

// True when the enclosure is consistent with a value whose decimal expansion
// starts with `truncated` (i.e. lies in [truncated, truncated + 10^-k)).
inline bool encloses_decimal(const Enclosure& e, const std::string& truncated) {
    auto dot = truncated.find('.');
    unsigned long k = dot == std::string::npos ? 0 : truncated.size() - dot - 1;
    Rational d = decimal(truncated);
    Rational ulp = pow10_inv(static_cast<long>(k));
    // truncation is toward zero
    Enclosure band = d >= 0 ? Enclosure(d, d + ulp) : Enclosure(d - ulp, d);
    return e.intersects(band);
}

}  // namespace errsum::test

#endif
