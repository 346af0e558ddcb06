#include "octachain/decomposition.hpp"

#include <stdexcept>

namespace octachain {

MirrorDecomposition decompose(const ChainGraph& g) {
    const int half = g.positions();
    const RationalMatrix full = laplacian(g);

    MirrorDecomposition d;
    d.v1v1 = full.block(0, half);
    d.v1v2 = RationalMatrix(half, half);
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) d.v1v2.at(i, j) = full.at(i, half + j);

    // The two copies are interchangeable, so the diagonal blocks must agree
    // and the off-diagonal block must be symmetric.
    const RationalMatrix v2v2 = full.block(half, half);
    if (!(d.v1v1 == v2v2)) throw std::logic_error("decompose: V1/V2 diagonal blocks differ");
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j)
            if (full.at(half + i, j) != d.v1v2.at(j, i) || d.v1v2.at(i, j) != d.v1v2.at(j, i)) {
                throw std::logic_error("decompose: cross block is not symmetric");
            }

    d.sum = d.v1v1 + d.v1v2;
    d.diff = d.v1v1 - d.v1v2;

    d.norm_sum = RationalMatrix(half, half);
    d.norm_diff = RationalMatrix(half, half);
    for (int i = 0; i < half; ++i) {
        const long deg = g.degree(i);
        for (int j = 0; j < half; ++j) {
            d.norm_sum.at(i, j) = d.sum.at(i, j) / deg;
            d.norm_diff.at(i, j) = d.diff.at(i, j) / deg;
        }
    }
    return d;
}

bool factorization_holds(const ChainGraph& g, const MirrorDecomposition& d) {
    const CharPoly lap = char_poly(laplacian(g));
    if (!(lap == char_poly(d.sum) * char_poly(d.diff))) return false;
    const CharPoly norm = char_poly(normalized_similar(g));
    return norm == char_poly(d.norm_sum) * char_poly(d.norm_diff);
}

bool verify_factorization(const ChainGraph& g) {
    return factorization_holds(g, decompose(g));
}

Rational reciprocal_nonzero_eigensum(const CharPoly& p) {
    if (p.degree() < 1 || p.coeff(0) != 0) {
        throw std::invalid_argument("reciprocal_nonzero_eigensum: expected a singular matrix "
                                    "(zero constant coefficient)");
    }
    if (p.coeff(1) == 0) {
        throw std::invalid_argument("reciprocal_nonzero_eigensum: zero eigenvalue multiplicity "
                                    "exceeds one (x coefficient vanishes)");
    }
    if (p.degree() == 1) return 0;  // no nonzero eigenvalues
    return -p.coeff(2) / p.coeff(1);
}

Rational reciprocal_eigensum_diagonal(const RationalMatrix& m) {
    if (!m.is_diagonal()) {
        throw std::invalid_argument("reciprocal_eigensum_diagonal: matrix is not diagonal");
    }
    Rational total = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (m.at(i, i) == 0) {
            throw std::invalid_argument("reciprocal_eigensum_diagonal: zero diagonal entry at " +
                                        std::to_string(i));
        }
        total += 1 / m.at(i, i);
    }
    return total;
}

Rational nonzero_eigenvalue_product(const CharPoly& p) {
    int k = 0;
    while (k <= p.degree() && p.coeff(k) == 0) ++k;
    if (k > p.degree()) throw std::invalid_argument("nonzero_eigenvalue_product: zero polynomial");
    if (k == p.degree()) return 1;  // all eigenvalues are zero; empty product
    const Rational& low = p.coeff(k);
    return ((p.degree() - k) % 2 == 0) ? low : Rational(-low);
}

}  // namespace octachain
