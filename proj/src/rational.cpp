#include "errsumlab/rational.hpp"

#include <sstream>

namespace errsum {

Integer pow10z(unsigned long k) {
    Integer z;
    mpz_ui_pow_ui(z.get_mpz_t(), 10, k);
    return z;
}

Rational pow10_inv(long d) {
    if (d < 0) return Rational(pow10z(static_cast<unsigned long>(-d)));
    return Rational(1, pow10z(static_cast<unsigned long>(d)));
}

Rational Precision::target_width() const { return pow10_inv(digits); }

Integer floor_q(const Rational& x) {
    Integer z;
    mpz_fdiv_q(z.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return z;
}

Integer ceil_q(const Rational& x) {
    Integer z;
    mpz_cdiv_q(z.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return z;
}

Rational abs_q(const Rational& x) { return x < 0 ? Rational(-x) : x; }

std::string decimal_truncated(const Rational& x, long frac_digits) {
    if (frac_digits < 0) frac_digits = 0;
    bool neg = x < 0;
    Rational y = abs_q(x);
    Integer scale = pow10z(static_cast<unsigned long>(frac_digits));
    Integer scaled = floor_q(Rational(y * scale));
    Integer ip, fp;
    mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
    std::ostringstream out;
    if (neg && (ip != 0 || fp != 0)) out << '-';
    out << ip.get_str();
    if (frac_digits > 0) {
        std::string f = fp.get_str();
        out << '.' << std::string(static_cast<size_t>(frac_digits) - f.size(), '0') << f;
    }
    return out.str();
}

long width_digits(const Rational& w, long cap) {
    if (w <= 0) return cap;
    // largest k with num * 10^k <= den
    Integer num = w.get_num(), den = w.get_den();
    if (num > den) return 0;
    // coarse estimate from decimal lengths, then adjust
    long k = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) - 1;
    if (k < 0) k = 0;
    if (k > cap) k = cap;
    Integer scaled = num * pow10z(static_cast<unsigned long>(k));
    while (k < cap && scaled * 10 <= den) {
        scaled *= 10;
        ++k;
    }
    while (k > 0 && scaled > den) {
        scaled /= 10;
        --k;
    }
    return k;
}

}  // namespace errsum
