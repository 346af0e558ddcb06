#include "octachain/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace octachain {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
    RationalMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
    return m;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RationalMatrix::is_diagonal() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

bool RationalMatrix::is_tridiagonal() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (std::abs(i - j) > 1 && at(i, j) != 0) return false;
    return true;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

std::vector<Rational> RationalMatrix::row_sums() const {
    std::vector<Rational> sums(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) sums[i] += at(i, j);
    return sums;
}

RationalMatrix RationalMatrix::leading_principal(int k) const {
    return block(0, k);
}

RationalMatrix RationalMatrix::block(int lo, int size) const {
    if (lo < 0 || size < 0 || lo + size > rows_ || lo + size > cols_) {
        throw std::out_of_range("matrix block out of range");
    }
    RationalMatrix m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m.at(i, j) = at(lo + i, lo + j);
    return m;
}

RationalMatrix RationalMatrix::without_row_col(int index) const {
    if (index < 0 || index >= rows_ || index >= cols_) {
        throw std::out_of_range("row/column index out of range");
    }
    RationalMatrix m(rows_ - 1, cols_ - 1);
    for (int i = 0, ti = 0; i < rows_; ++i) {
        if (i == index) continue;
        for (int j = 0, tj = 0; j < cols_; ++j) {
            if (j == index) continue;
            m.at(ti, tj++) = at(i, j);
        }
        ++ti;
    }
    return m;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<int>& keep) const {
    RationalMatrix m(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = at(keep[i], keep[j]);
    return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix add: shape mismatch");
    RationalMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
    return m;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sub: shape mismatch");
    RationalMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

RationalMatrix laplacian(const ChainGraph& g) {
    const int n = g.vertex_count();
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = g.degree(i);
        for (int j : g.neighbors(i)) m.at(i, j) = -1;
    }
    return m;
}

RationalMatrix normalized_similar(const ChainGraph& g) {
    const int n = g.vertex_count();
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const long d = g.degree(i);
        m.at(i, i) = 1;
        for (int j : g.neighbors(i)) m.at(i, j) = make_rational(-1, d);
    }
    return m;
}

// ---------------------------------------------------------------------------
// integer elimination core

namespace {

// Cuthill-McKee order (reversed) on the symmetric nonzero pattern. A symmetric
// permutation leaves determinants and characteristic polynomials unchanged and
// keeps the chain-family matrices banded, which is what makes the elimination
// below effectively linear-time on them.
std::vector<int> bandwidth_order(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> seen(n, false);
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return adj[a].size() < adj[b].size(); });

    for (int start : by_degree) {
        if (seen[start]) continue;
        seen[start] = true;
        size_t head = order.size();
        order.push_back(start);
        while (head < order.size()) {
            int u = order[head++];
            std::vector<int> next;
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    next.push_back(w);
                }
            std::stable_sort(next.begin(), next.end(), [&](int a, int b) {
                return adj[a].size() < adj[b].size();
            });
            order.insert(order.end(), next.begin(), next.end());
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

struct IntegerForm {
    std::vector<BigInt> entries;  // row-major n x n
    std::vector<BigInt> row_scales;
    BigInt row_scale_product;     // det(original) = det(entries) / row_scale_product
    int n = 0;
};

// Scale each row by the lcm of its denominators; the result is integer and
// det scales by the product of the row factors.
IntegerForm clear_denominators(const RationalMatrix& m) {
    IntegerForm f;
    f.n = m.rows();
    f.row_scale_product = 1;
    f.row_scales.assign(f.n, BigInt(1));
    f.entries.assign(static_cast<size_t>(f.n) * f.n, BigInt(0));
    for (int i = 0; i < f.n; ++i) {
        BigInt& scale = f.row_scales[i];
        for (int j = 0; j < f.n; ++j) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        }
        f.row_scale_product *= scale;
        for (int j = 0; j < f.n; ++j) {
            const Rational& q = m.at(i, j);
            if (q == 0) continue;
            f.entries[static_cast<size_t>(i) * f.n + j] = q.get_num() * (scale / q.get_den());
        }
    }
    return f;
}

void permute_symmetric(std::vector<BigInt>& a, int n, const std::vector<int>& order) {
    std::vector<BigInt> out(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<size_t>(i) * n + j] =
                a[static_cast<size_t>(order[i]) * n + order[j]];
    a = std::move(out);
}

std::vector<int> pattern_order(const std::vector<BigInt>& a, int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[static_cast<size_t>(i) * n + j] != 0 || a[static_cast<size_t>(j) * n + i] != 0) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    return bandwidth_order(adj);
}

// Fraction-free (Bareiss) elimination, destructive. Row swaps flip the sign;
// a zero pivot column means the determinant is zero. Every division is exact.
BigInt bareiss_determinant(std::vector<BigInt>& a, int n) {
    if (n == 0) return 1;
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    BigInt prev = 1;
    BigInt t1, t2;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        const BigInt& pivot = at(k, k);
        for (int i = k + 1; i < n; ++i) {
            BigInt& head = at(i, k);
            if (head == 0) {
                for (int j = k + 1; j < n; ++j) {
                    BigInt& e = at(i, j);
                    if (e == 0) continue;
                    mpz_mul(t1.get_mpz_t(), e.get_mpz_t(), pivot.get_mpz_t());
                    mpz_divexact(e.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
                }
            } else {
                for (int j = k + 1; j < n; ++j) {
                    BigInt& e = at(i, j);
                    mpz_mul(t1.get_mpz_t(), e.get_mpz_t(), pivot.get_mpz_t());
                    mpz_mul(t2.get_mpz_t(), head.get_mpz_t(), at(k, j).get_mpz_t());
                    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                    mpz_divexact(e.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
                }
                head = 0;
            }
        }
        prev = pivot;
    }
    BigInt det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

std::vector<Rational> poly_mul_linear(const std::vector<Rational>& p, const Rational& root) {
    // p(x) * (x - root)
    std::vector<Rational> out(p.size() + 1, Rational(0));
    for (size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= root * p[i];
    }
    return out;
}

std::vector<Rational> newton_interpolate(const std::vector<Rational>& xs,
                                         std::vector<Rational> ys) {
    const int m = static_cast<int>(xs.size());
    for (int level = 1; level < m; ++level)
        for (int i = m - 1; i >= level; --i)
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);

    std::vector<Rational> poly{ys[m - 1]};
    for (int i = m - 2; i >= 0; --i) {
        poly = poly_mul_linear(poly, xs[i]);
        poly[0] += ys[i];
    }
    return poly;
}

CharPoly char_poly_tridiagonal(const RationalMatrix& m) {
    const int n = m.rows();
    // p_k(x) = (x - m_kk) p_{k-1}(x) - m_{k,k-1} m_{k-1,k} p_{k-2}(x)
    std::vector<Rational> prev2{Rational(1)};
    std::vector<Rational> prev1 = poly_mul_linear(prev2, m.at(0, 0));
    for (int k = 1; k < n; ++k) {
        std::vector<Rational> cur = poly_mul_linear(prev1, m.at(k, k));
        const Rational offdiag = m.at(k, k - 1) * m.at(k - 1, k);
        if (offdiag != 0) {
            for (size_t i = 0; i < prev2.size(); ++i) cur[i] -= offdiag * prev2[i];
        }
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return CharPoly(std::move(prev1));
}

CharPoly char_poly_interpolated(const RationalMatrix& m) {
    const int n = m.rows();
    // det(xI - M) = det(x S - B) / prod(row scales), with S the diagonal of
    // row scales and B the integer form of S*M. Evaluate at n+1 integer
    // points around zero, then interpolate.
    IntegerForm f = clear_denominators(m);
    std::vector<int> order = pattern_order(f.entries, n);
    permute_symmetric(f.entries, n, order);
    std::vector<BigInt> scale_perm(n);
    for (int i = 0; i < n; ++i) scale_perm[i] = f.row_scales[order[i]];

    std::vector<Rational> xs, ys;
    xs.reserve(n + 1);
    ys.reserve(n + 1);
    std::vector<BigInt> work(static_cast<size_t>(n) * n);
    for (int t = 0; t <= n; ++t) {
        const long x = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt v = -f.entries[static_cast<size_t>(i) * n + j];
                if (i == j) v += x * scale_perm[i];
                work[static_cast<size_t>(i) * n + j] = std::move(v);
            }
        BigInt det = bareiss_determinant(work, n);
        xs.push_back(Rational(x));
        ys.push_back(make_rational(det, f.row_scale_product));
    }

    std::vector<Rational> coeffs = newton_interpolate(xs, std::move(ys));
    coeffs.resize(n + 1, Rational(0));
    return CharPoly(std::move(coeffs));
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix must be square");
    IntegerForm f = clear_denominators(m);
    std::vector<int> order = pattern_order(f.entries, f.n);
    permute_symmetric(f.entries, f.n, order);
    BigInt det = bareiss_determinant(f.entries, f.n);
    return make_rational(det, f.row_scale_product);
}

CharPoly char_poly(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix must be square");
    if (m.rows() == 0) return CharPoly({Rational(1)});
    if (m.is_tridiagonal()) return char_poly_tridiagonal(m);
    return char_poly_interpolated(m);
}

LuFactorization::LuFactorization(const RationalMatrix& m) : n_(m.rows()) {
    if (!m.is_square()) throw std::invalid_argument("lu: matrix must be square");
    lu_.assign(static_cast<size_t>(n_) * n_, Rational(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) lu_[static_cast<size_t>(i) * n_ + j] = m.at(i, j);
    perm_.resize(n_);
    std::iota(perm_.begin(), perm_.end(), 0);

    auto at = [&](int i, int j) -> Rational& { return lu_[static_cast<size_t>(i) * n_ + j]; };
    for (int k = 0; k < n_; ++k) {
        int p = -1;
        for (int i = k; i < n_; ++i)
            if (at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw SingularMatrixError(k);
        if (p != k) {
            for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
            std::swap(perm_[k], perm_[p]);
        }
        for (int i = k + 1; i < n_; ++i) {
            if (at(i, k) == 0) continue;
            Rational factor = at(i, k) / at(k, k);
            at(i, k) = factor;
            for (int j = k + 1; j < n_; ++j) {
                if (at(k, j) != 0) at(i, j) -= factor * at(k, j);
            }
        }
    }
}

std::vector<Rational> LuFactorization::solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != n_) throw std::invalid_argument("solve: size mismatch");
    auto at = [&](int i, int j) -> const Rational& {
        return lu_[static_cast<size_t>(i) * n_ + j];
    };
    std::vector<Rational> x(n_);
    for (int i = 0; i < n_; ++i) {
        Rational acc = b[perm_[i]];
        for (int j = 0; j < i; ++j)
            if (at(i, j) != 0 && x[j] != 0) acc -= at(i, j) * x[j];
        x[i] = std::move(acc);
    }
    for (int i = n_ - 1; i >= 0; --i) {
        Rational acc = std::move(x[i]);
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != 0 && x[j] != 0) acc -= at(i, j) * x[j];
        x[i] = acc / at(i, i);
    }
    return x;
}

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
    return LuFactorization(m).solve(b);
}

Rational principal_minor_sum(const RationalMatrix& m, int order) {
    if (!m.is_square()) throw std::invalid_argument("principal_minor_sum: matrix must be square");
    const int n = m.rows();
    if (order < 0 || order > n) throw std::out_of_range("principal_minor_sum: order out of range");
    if (order == 0) return 1;  // empty-product convention
    if (order == n) return determinant(m);
    if (order == n - 1) return char_poly(m).principal_minor_total(order);

    if (n > 16) {
        throw std::invalid_argument("principal_minor_sum: subset enumeration is capped at "
                                    "dimension 16 for orders below dim-1");
    }
    std::vector<int> keep(order);
    std::iota(keep.begin(), keep.end(), 0);
    Rational total = 0;
    while (true) {
        total += determinant(m.submatrix(keep));
        // next k-combination of {0..n-1}
        int i = order - 1;
        while (i >= 0 && keep[i] == n - order + i) --i;
        if (i < 0) break;
        ++keep[i];
        for (int j = i + 1; j < order; ++j) keep[j] = keep[j - 1] + 1;
    }
    return total;
}

Rational cofactor_det(const RationalMatrix& m, int index) {
    if (!m.is_square()) throw std::invalid_argument("cofactor_det: matrix must be square");
    if (index < 0 || index >= m.rows()) throw std::out_of_range("cofactor_det: index out of range");
    return determinant(m.without_row_col(index));
}

}  // namespace octachain
