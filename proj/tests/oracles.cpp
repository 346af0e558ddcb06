#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace oracle {

Rational cofactor_expansion_det(const RationalMatrix& m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("oracle det: not square");
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Rational total = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        RationalMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            for (int c = 0, tc = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, tc++) = m.at(r, c);
            }
        }
        const Rational term = m.at(0, j) * cofactor_expansion_det(minor);
        total += (j % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

Rational gauss_det(const RationalMatrix& m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("oracle det: not square");
    RationalMatrix a = m;
    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a.at(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            det = -det;
        }
        det *= a.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            const Rational f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return det;
}

Rational principal_minor_sum_enumerated(const RationalMatrix& m, int order) {
    const int n = m.rows();
    if (order == 0) return 1;
    std::vector<int> keep(order);
    std::iota(keep.begin(), keep.end(), 0);
    Rational total = 0;
    while (true) {
        total += gauss_det(m.submatrix(keep));
        int i = order - 1;
        while (i >= 0 && keep[i] == n - order + i) --i;
        if (i < 0) break;
        ++keep[i];
        for (int j = i + 1; j < order; ++j) keep[j] = keep[j - 1] + 1;
    }
    return total;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Visits every `size`-subset of [0, total); returns how many satisfy fn.
template <typename Fn>
long long count_subsets(int total, int size, Fn&& fn) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    long long hits = 0;
    while (true) {
        if (fn(pick)) ++hits;
        int i = size - 1;
        while (i >= 0 && pick[i] == total - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    return hits;
}

}  // namespace

BigInt spanning_trees_enumerated(const std::vector<std::pair<int, int>>& edges, int vertices) {
    const int m = static_cast<int>(edges.size());
    if (vertices <= 1) return 1;
    if (m < vertices - 1) return 0;
    return octachain::to_bigint(count_subsets(m, vertices - 1, [&](const std::vector<int>& pick) {
        UnionFind uf(vertices);
        for (int e : pick) {
            if (!uf.unite(edges[e].first, edges[e].second)) return false;
        }
        return true;
    }));
}

Rational resistance_two_forest(const octachain::ChainGraph& g, int u, int v) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int vertices = g.vertex_count();
    const BigInt tau = spanning_trees_enumerated(edges, vertices);
    // forests with vertices-2 edges have exactly two components
    const long long separating =
        count_subsets(m, vertices - 2, [&](const std::vector<int>& pick) {
            UnionFind uf(vertices);
            for (int e : pick) {
                if (!uf.unite(edges[e].first, edges[e].second)) return false;
            }
            return uf.find(u) != uf.find(v);
        });
    return octachain::make_rational(octachain::to_bigint(separating), tau);
}

const int kOneOctagonDistances[8][8] = {
    {0, 1, 2, 3, 1, 1, 2, 3},
    {1, 0, 1, 2, 1, 2, 1, 2},
    {2, 1, 0, 1, 2, 1, 2, 1},
    {3, 2, 1, 0, 3, 2, 1, 1},
    {1, 1, 2, 3, 0, 1, 2, 3},
    {1, 2, 1, 2, 1, 0, 1, 2},
    {2, 1, 2, 1, 2, 1, 0, 1},
    {3, 2, 1, 1, 3, 2, 1, 0},
};

}  // namespace oracle
