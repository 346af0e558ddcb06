#include "octachain/charpoly.hpp"

#include <stdexcept>

namespace octachain {

CharPoly::CharPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("CharPoly: empty coefficient list");
    if (c_.back() != 1) throw std::invalid_argument("CharPoly: polynomial must be monic");
}

const Rational& CharPoly::coeff(int k) const {
    if (k < 0 || k > degree()) throw std::out_of_range("CharPoly: coefficient index out of range");
    return c_[k];
}

Rational CharPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
    return acc;
}

Rational CharPoly::principal_minor_total(int order) const {
    if (order < 0 || order > degree()) {
        throw std::out_of_range("CharPoly: minor order out of range");
    }
    Rational value = c_[degree() - order];
    return (order % 2 == 0) ? value : Rational(-value);
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return CharPoly(std::move(prod));
}

}  // namespace octachain
