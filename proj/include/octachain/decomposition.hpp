#pragma once

// Block diagonalization of the chain Laplacians under the mirror involution.
// With V1 ordered first, L = [[B, C], [C, B]]; the orthogonal change of
// basis pairing mirror-even and mirror-odd vectors turns L into
// diag(B + C, B - C). The transform itself is never formed: the sum and
// difference blocks are assembled directly, which keeps everything rational.

#include "octachain/chain_graph.hpp"
#include "octachain/charpoly.hpp"
#include "octachain/matrix.hpp"
#include "octachain/rational.hpp"

namespace octachain {

struct MirrorDecomposition {
    RationalMatrix v1v1;  // Laplacian restricted to V1 x V1
    RationalMatrix v1v2;  // Laplacian restricted to V1 x V2
    RationalMatrix sum;   // v1v1 + v1v2 (carries the zero eigenvalue)
    RationalMatrix diff;  // v1v1 - v1v2 (diagonal, positive)
    // Degree-scaled counterparts: norm_sum = D1^{-1} * sum shares its
    // characteristic polynomial with the normalized-Laplacian sum block
    // (mirrored vertices have equal degrees, so the diagonal similarity
    // argument applies blockwise); norm_diff is diagonal.
    RationalMatrix norm_sum;
    RationalMatrix norm_diff;
};

// Splits the Laplacian. Throws std::logic_error if the two copies' blocks
// fail the mirror symmetry they must have by construction.
MirrorDecomposition decompose(const ChainGraph& g);

// Exact coefficient-list check that the characteristic polynomial of the
// full matrix factors through the blocks, for both the Laplacian and its
// degree-normalized similar form. No tolerance exists anywhere here.
bool factorization_holds(const ChainGraph& g, const MirrorDecomposition& d);
bool verify_factorization(const ChainGraph& g);

// For det(xI - M) with exactly one zero eigenvalue (constant coefficient
// zero, x coefficient nonzero): the sum of reciprocals of the nonzero
// eigenvalues, -c_2/c_1 by Vieta applied to the reversed polynomial.
// Throws std::invalid_argument when the zero-root multiplicity is wrong.
Rational reciprocal_nonzero_eigensum(const CharPoly& p);

// Sum of reciprocals of the diagonal entries of a diagonal matrix.
// Throws std::invalid_argument on a non-diagonal input or a zero entry.
Rational reciprocal_eigensum_diagonal(const RationalMatrix& m);

// Product of the nonzero eigenvalues, read off the extreme nonzero
// coefficients: for p = x^k q(x), the product is (-1)^{deg-k} c_k.
Rational nonzero_eigenvalue_product(const CharPoly& p);

}  // namespace octachain
