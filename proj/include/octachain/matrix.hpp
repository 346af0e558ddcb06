#pragma once

// Dense exact-rational linear algebra: Laplacian assembly, fraction-free
// determinants, characteristic polynomials, linear solves and principal
// submatrix machinery.

#include <stdexcept>
#include <vector>

#include "octachain/chain_graph.hpp"
#include "octachain/charpoly.hpp"
#include "octachain/rational.hpp"

namespace octachain {

class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);
    static RationalMatrix diagonal(const std::vector<Rational>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_symmetric() const;
    bool is_diagonal() const;
    bool is_tridiagonal() const;

    Rational trace() const;
    std::vector<Rational> row_sums() const;

    // Leading k x k principal submatrix.
    RationalMatrix leading_principal(int k) const;
    // Copy with row and column `index` deleted.
    RationalMatrix without_row_col(int index) const;
    // Principal submatrix on the given (sorted, distinct) indices.
    RationalMatrix submatrix(const std::vector<int>& keep) const;
    // Contiguous principal block [lo, lo+size).
    RationalMatrix block(int lo, int size) const;

    friend RationalMatrix operator+(const RationalMatrix&, const RationalMatrix&);
    friend RationalMatrix operator-(const RationalMatrix&, const RationalMatrix&);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(int stage_)
        : std::runtime_error("singular matrix: zero pivot column at elimination stage " +
                             std::to_string(stage_)),
          stage(stage_) {}
    int stage;
};

// Combinatorial Laplacian L = D - A over the 6n+2 vertices, V1-first order.
RationalMatrix laplacian(const ChainGraph& g);

// D^{-1} L: similar to the degree-normalized Laplacian D^{-1/2} L D^{-1/2},
// hence shares its characteristic polynomial, while keeping every entry
// rational. All "normalized" spectral data in this library flows through
// this similarity.
RationalMatrix normalized_similar(const ChainGraph& g);

// Exact determinant. Row denominators are cleared and the remaining integer
// matrix is eliminated with the fraction-free (Bareiss) scheme, behind a
// bandwidth-reducing symmetric reordering so that the chain matrices stay
// effectively banded.
Rational determinant(const RationalMatrix& m);

// Exact det(xI - M). Tridiagonal (and diagonal) matrices use the three-term
// recurrence; general matrices are interpolated from exact determinants at
// dim+1 integer points.
CharPoly char_poly(const RationalMatrix& m);

// Exact solution of M x = b. Throws SingularMatrixError naming the
// elimination stage of the zero pivot.
std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& b);

// LU factorization over the rationals with row pivoting, for reuse across
// many right-hand sides. Immutable after construction.
class LuFactorization {
public:
    explicit LuFactorization(const RationalMatrix& m);
    int dim() const { return n_; }
    std::vector<Rational> solve(const std::vector<Rational>& b) const;

private:
    int n_;
    std::vector<Rational> lu_;  // packed L (below diag) and U
    std::vector<int> perm_;
};

// Sum of determinants of all order x order principal submatrices.
// Orders dim and dim-1 go through the char-poly shortcut at any size;
// smaller orders enumerate subsets and require dim <= 16.
Rational principal_minor_sum(const RationalMatrix& m, int order);

// Determinant of m with row and column `index` deleted (matrix-tree route).
Rational cofactor_det(const RationalMatrix& m, int index);

}  // namespace octachain
