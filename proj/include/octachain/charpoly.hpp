#pragma once

// Exact characteristic polynomials. Eigenvalues are never materialized as
// numbers anywhere in this library; every spectral quantity is read off
// these coefficients.
//
// Coefficient convention: char_poly(M) stores det(xI - M) as ascending
// coefficients c_0..c_N with c_N = 1. The sum of all order-j principal
// minors of M is E_j = (-1)^j * c_{N-j}; in particular c_{N-1} = -trace(M)
// and c_0 = (-1)^N det(M). When a singular matrix's polynomial is written
// x(x^{N-1} + a_1 x^{N-2} + ... + a_{N-1}), those descending-indexed a_k
// are related to this form by a_k = c_{N-k}, so (-1)^k a_k = E_k.

#include <vector>

#include "octachain/rational.hpp"

namespace octachain {

class CharPoly {
public:
    // Ascending coefficients; must be monic (back() == 1).
    explicit CharPoly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational evaluate(const Rational& x) const;

    // Sum of all order-j principal minors, E_j = (-1)^j c_{N-j}.
    Rational principal_minor_total(int order) const;

    friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    std::vector<Rational> c_;
};

}  // namespace octachain
