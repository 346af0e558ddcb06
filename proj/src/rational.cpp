#include "octachain/rational.hpp"

#include <stdexcept>

namespace octachain {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

BigInt to_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw std::domain_error("expected an integer value, got " + rational_to_string(q));
    }
    return q.get_num();
}

std::string rational_to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;

    // round-half-up: floor(q*scale + 1/2)
    BigInt num = q.get_num() * scale * 2 + q.get_den();
    BigInt den = q.get_den() * 2;
    BigInt scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    bool negative = scaled < 0;
    BigInt mag = negative ? BigInt(-scaled) : scaled;
    BigInt whole = mag / scale;
    BigInt frac = mag % scale;

    std::string out = whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        f.insert(f.begin(), digits - f.size(), '0');
        out += "." + f;
    }
    if (negative && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
    return out;
}

}  // namespace octachain
