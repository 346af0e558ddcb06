#pragma once

// Resistance-distance and distance-based invariants of the chain, each
// computed by independent routes that must agree exactly.

#include <stdexcept>
#include <string>
#include <vector>

#include "octachain/chain_graph.hpp"
#include "octachain/matrix.hpp"
#include "octachain/rational.hpp"

namespace octachain {

// All pairwise effective resistances through one grounded factorization:
// the vertex (3n+1)' is grounded (any choice works; a fixed one keeps runs
// reproducible), the grounded Laplacian is factored once and its inverse
// columns are recovered with one solve per vertex.
class ResistanceSolver {
public:
    explicit ResistanceSolver(const ChainGraph& g);

    Rational resistance(int u, int v) const;  // linear indices, u != v
    Rational resistance(const VertexId& u, const VertexId& v) const;

private:
    const ChainGraph& g_;
    int ground_;
    std::vector<std::vector<Rational>> inv_;  // inv_[c][r] = (grounded L)^{-1}[r][c]
};

// Single-pair effective resistance via one grounded solve with unit current
// injected at u and extracted at v. Throws std::invalid_argument on u == v.
Rational effective_resistance(const ChainGraph& g, const VertexId& u, const VertexId& v);

Rational kirchhoff_resistance_route(const ChainGraph& g);
// Spectral routes. The _block variants use only the (3n+1)-sized mirror
// blocks and stay cheap at any n; the main spectral routes additionally run
// the full-matrix polynomial and require exact agreement of both sub-routes.
Rational kirchhoff_block_route(const ChainGraph& g);
Rational kirchhoff_spectral_route(const ChainGraph& g);

Rational mult_kirchhoff_resistance_route(const ChainGraph& g);
Rational mult_kirchhoff_block_route(const ChainGraph& g);
Rational mult_kirchhoff_spectral_route(const ChainGraph& g);

long long wiener(const ChainGraph& g);
long long gutman(const ChainGraph& g);

// Hop-count row sum of one vertex, and its degree-weighted analogue
// (sum over u of d_v * d_u * dist(v, u)). Used to test the per-type
// distance-sum formulas against plain BFS.
long long distance_row_sum(const ChainGraph& g, const VertexId& v);
long long weighted_distance_row_sum(const ChainGraph& g, const VertexId& v);

BigInt spanning_trees_matrix_tree(const ChainGraph& g);
BigInt spanning_trees_product_route(const ChainGraph& g);

// Independent oracle: tau(G) = tau(G - e) + tau(G / e) with multigraph
// contraction. Exponential; refuses graphs above edge_cap edges.
BigInt spanning_trees_deletion_contraction(const ChainGraph& g, int edge_cap = 14);

// Raw multigraph variant for small fixtures (single edge, triangle, ...).
BigInt count_spanning_trees_multigraph(std::vector<std::pair<int, int>> edges, int vertices);

struct RouteMismatchError : std::runtime_error {
    RouteMismatchError(const std::string& invariant_, const std::string& route_a_,
                       const std::string& value_a_, const std::string& route_b_,
                       const std::string& value_b_)
        : std::runtime_error("route disagreement for " + invariant_ + ": " + route_a_ + " = " +
                             value_a_ + " but " + route_b_ + " = " + value_b_),
          invariant(invariant_),
          route_a(route_a_),
          value_a(value_a_),
          route_b(route_b_),
          value_b(value_b_) {}
    std::string invariant, route_a, value_a, route_b, value_b;
};

struct RouteValue {
    std::string invariant;
    std::string route;
    std::string value;  // exact decimal string (integers) or num/den
};

struct InvariantReport {
    int n = 0;
    long long edge_count = 0;
    Rational kf;
    Rational kf_star;
    long long wiener = 0;
    long long gutman = 0;
    BigInt tau;
    std::vector<RouteValue> routes;

    std::vector<RouteValue> routes_for(const std::string& invariant) const;
};

// Runs every applicable route for every invariant, asserts exact agreement
// (throws RouteMismatchError naming both routes otherwise), and returns the
// bundle. The deletion-contraction route joins in only when the edge count
// fits under edge_cap.
InvariantReport full_report(const ChainGraph& g, int edge_cap = 14);

}  // namespace octachain
