#include "octachain/invariants.hpp"

#include <algorithm>

#include "octachain/decomposition.hpp"

namespace octachain {

namespace {

RationalMatrix grounded_laplacian(const ChainGraph& g, int ground) {
    return laplacian(g).without_row_col(ground);
}

}  // namespace

ResistanceSolver::ResistanceSolver(const ChainGraph& g)
    : g_(g), ground_(g.vertex_count() - 1) {
    // ground is the last vertex (3n+1)', so grounded indices match linear
    // indices for everything else
    const int m = g.vertex_count() - 1;
    LuFactorization lu(grounded_laplacian(g, ground_));
    inv_.resize(m);
    std::vector<Rational> e(m, Rational(0));
    for (int c = 0; c < m; ++c) {
        e[c] = 1;
        inv_[c] = lu.solve(e);
        e[c] = 0;
    }
}

Rational ResistanceSolver::resistance(int u, int v) const {
    if (u == v) throw std::invalid_argument("resistance: vertices must differ");
    if (u == ground_) std::swap(u, v);
    if (v == ground_) return inv_[u][u];
    return inv_[u][u] + inv_[v][v] - inv_[u][v] - inv_[v][u];
}

Rational ResistanceSolver::resistance(const VertexId& u, const VertexId& v) const {
    return resistance(g_.linear_index(u), g_.linear_index(v));
}

Rational effective_resistance(const ChainGraph& g, const VertexId& u, const VertexId& v) {
    const int ui = g.linear_index(u);
    const int vi = g.linear_index(v);
    if (ui == vi) throw std::invalid_argument("effective_resistance: vertices must differ");
    const int ground = g.vertex_count() - 1;
    // Unit current in at u, out at v; potentials from one grounded solve.
    if (ui == ground || vi == ground) {
        const int other = (ui == ground) ? vi : ui;
        std::vector<Rational> b(g.vertex_count() - 1, Rational(0));
        b[other] = 1;
        return solve(grounded_laplacian(g, ground), b)[other];
    }
    std::vector<Rational> b(g.vertex_count() - 1, Rational(0));
    b[ui] = 1;
    b[vi] = -1;
    auto x = solve(grounded_laplacian(g, ground), b);
    return x[ui] - x[vi];
}

Rational kirchhoff_resistance_route(const ChainGraph& g) {
    ResistanceSolver solver(g);
    Rational total = 0;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) total += solver.resistance(u, v);
    return total;
}

Rational kirchhoff_block_route(const ChainGraph& g) {
    const MirrorDecomposition d = decompose(g);
    return Rational(static_cast<long>(g.vertex_count())) *
           (reciprocal_nonzero_eigensum(char_poly(d.sum)) + reciprocal_eigensum_diagonal(d.diff));
}

Rational kirchhoff_spectral_route(const ChainGraph& g) {
    const Rational via_blocks = kirchhoff_block_route(g);
    const Rational via_full = Rational(static_cast<long>(g.vertex_count())) *
                              reciprocal_nonzero_eigensum(char_poly(laplacian(g)));
    if (via_blocks != via_full) {
        throw RouteMismatchError("kf", "block_spectrum", rational_to_string(via_blocks),
                                 "full_spectrum", rational_to_string(via_full));
    }
    return via_blocks;
}

Rational mult_kirchhoff_resistance_route(const ChainGraph& g) {
    ResistanceSolver solver(g);
    Rational total = 0;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            total += Rational(g.degree(u)) * g.degree(v) * solver.resistance(u, v);
    return total;
}

Rational mult_kirchhoff_block_route(const ChainGraph& g) {
    const MirrorDecomposition d = decompose(g);
    return Rational(2L * g.edge_count()) *
           (reciprocal_nonzero_eigensum(char_poly(d.norm_sum)) +
            reciprocal_eigensum_diagonal(d.norm_diff));
}

Rational mult_kirchhoff_spectral_route(const ChainGraph& g) {
    const Rational via_blocks = mult_kirchhoff_block_route(g);
    const Rational via_full = Rational(2L * g.edge_count()) *
                              reciprocal_nonzero_eigensum(char_poly(normalized_similar(g)));
    if (via_blocks != via_full) {
        throw RouteMismatchError("kfstar", "block_spectrum", rational_to_string(via_blocks),
                                 "full_spectrum", rational_to_string(via_full));
    }
    return via_blocks;
}

long long wiener(const ChainGraph& g) {
    long long total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int d : g.bfs_distances(v)) total += d;
    }
    return total / 2;
}

long long gutman(const ChainGraph& g) {
    long long total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto dist = g.bfs_distances(v);
        for (int u = 0; u < g.vertex_count(); ++u) {
            total += static_cast<long long>(g.degree(v)) * g.degree(u) * dist[u];
        }
    }
    return total / 2;
}

long long distance_row_sum(const ChainGraph& g, const VertexId& v) {
    long long total = 0;
    for (int d : g.bfs_distances(v)) total += d;
    return total;
}

long long weighted_distance_row_sum(const ChainGraph& g, const VertexId& v) {
    const int vi = g.linear_index(v);
    const auto dist = g.bfs_distances(vi);
    long long total = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        total += static_cast<long long>(g.degree(vi)) * g.degree(u) * dist[u];
    }
    return total;
}

BigInt spanning_trees_matrix_tree(const ChainGraph& g) {
    return to_integer(cofactor_det(laplacian(g), 0));
}

BigInt spanning_trees_product_route(const ChainGraph& g) {
    const MirrorDecomposition d = decompose(g);
    Rational degree_product = 1;
    for (int v = 0; v < g.vertex_count(); ++v) degree_product *= g.degree(v);
    const Rational eig_product = nonzero_eigenvalue_product(char_poly(d.norm_sum)) *
                                 nonzero_eigenvalue_product(char_poly(d.norm_diff));
    const Rational tau = degree_product * eig_product / (2L * g.edge_count());
    if (!is_integer(tau)) {
        throw std::logic_error("spanning tree product route produced non-integer " +
                               rational_to_string(tau));
    }
    return to_integer(tau);
}

BigInt count_spanning_trees_multigraph(std::vector<std::pair<int, int>> edges, int vertices) {
    // drop loops
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const auto& e) { return e.first == e.second; }),
                edges.end());
    if (vertices <= 1) return 1;
    if (static_cast<int>(edges.size()) < vertices - 1) return 0;

    const auto [u, v] = edges.back();
    // deletion
    std::vector<std::pair<int, int>> rest(edges.begin(), edges.end() - 1);
    BigInt total = count_spanning_trees_multigraph(rest, vertices);
    // contraction: merge v into u, relabel the last vertex id down to v
    for (auto& e : rest) {
        if (e.first == v) e.first = u;
        if (e.second == v) e.second = u;
        if (e.first == vertices - 1) e.first = v;
        if (e.second == vertices - 1) e.second = v;
    }
    total += count_spanning_trees_multigraph(std::move(rest), vertices - 1);
    return total;
}

BigInt spanning_trees_deletion_contraction(const ChainGraph& g, int edge_cap) {
    if (g.edge_count() > edge_cap) {
        throw std::invalid_argument(
            "deletion-contraction oracle: " + std::to_string(g.edge_count()) + " edges exceeds cap " +
            std::to_string(edge_cap) + "; use the matrix-tree route instead");
    }
    return count_spanning_trees_multigraph(g.edges(), g.vertex_count());
}

std::vector<RouteValue> InvariantReport::routes_for(const std::string& invariant) const {
    std::vector<RouteValue> out;
    for (const auto& r : routes)
        if (r.invariant == invariant) out.push_back(r);
    return out;
}

namespace {

void check_routes_agree(const std::vector<RouteValue>& routes) {
    for (size_t i = 1; i < routes.size(); ++i) {
        if (routes[i].value != routes[0].value) {
            throw RouteMismatchError(routes[0].invariant, routes[0].route, routes[0].value,
                                     routes[i].route, routes[i].value);
        }
    }
}

}  // namespace

InvariantReport full_report(const ChainGraph& g, int edge_cap) {
    InvariantReport rep;
    rep.n = g.n();
    rep.edge_count = g.edge_count();

    rep.kf = kirchhoff_spectral_route(g);
    rep.routes.push_back({"kf", "block_spectrum", rational_to_string(rep.kf)});
    rep.routes.push_back(
        {"kf", "resistance_sum", rational_to_string(kirchhoff_resistance_route(g))});

    rep.kf_star = mult_kirchhoff_spectral_route(g);
    rep.routes.push_back({"kfstar", "block_spectrum", rational_to_string(rep.kf_star)});
    rep.routes.push_back(
        {"kfstar", "resistance_sum", rational_to_string(mult_kirchhoff_resistance_route(g))});

    rep.tau = spanning_trees_matrix_tree(g);
    rep.routes.push_back({"tau", "matrix_tree_cofactor", rep.tau.get_str()});
    rep.routes.push_back(
        {"tau", "eigenvalue_product", spanning_trees_product_route(g).get_str()});
    if (g.edge_count() <= edge_cap) {
        rep.routes.push_back({"tau", "deletion_contraction",
                              spanning_trees_deletion_contraction(g, edge_cap).get_str()});
    }

    rep.wiener = wiener(g);
    rep.routes.push_back({"wiener", "bfs", std::to_string(rep.wiener)});
    rep.gutman = gutman(g);
    rep.routes.push_back({"gutman", "weighted_bfs", std::to_string(rep.gutman)});

    for (const char* name : {"kf", "kfstar", "tau", "wiener", "gutman"}) {
        check_routes_agree(rep.routes_for(name));
    }
    if (rep.kf <= 0 || rep.kf_star <= 0 || rep.tau < 1) {
        throw std::logic_error("invariant report failed positivity checks");
    }
    return rep;
}

}  // namespace octachain
