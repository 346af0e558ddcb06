#pragma once

// Linear crossed octagonal chain O_n: two mirror-image paths of 3n+1 vertices
// (copies V1 = {1..3n+1} and V2 = {1'..(3n+1)'}) joined by crossed edges
// between consecutive positions and by rungs at positions congruent to
// 1 (mod 3). 6n+2 vertices, 13n+1 edges.
//
// The vertex ordering is load-bearing: all V1 vertices first (linear index
// position-1), then all V2 vertices (linear index 3n+1 + position-1). The
// block decomposition relies on it.

#include <string>
#include <utility>
#include <vector>

namespace octachain {

enum class Copy { V1, V2 };

// A vertex named by copy and 1-based position, printed "k" for V1 and "k'"
// for V2 to match the chain's conventional labels.
struct VertexId {
    Copy copy = Copy::V1;
    int position = 1;  // 1..3n+1

    friend bool operator==(const VertexId&, const VertexId&) = default;
};

std::string to_string(const VertexId& v);

// Parses "k" or "k'". Throws std::invalid_argument on malformed input or a
// position outside [1, 3n+1].
VertexId parse_vertex(const std::string& text, int n);

class ChainGraph {
public:
    // Builds O_n. Throws std::invalid_argument for n < 1 and std::logic_error
    // if the constructed degree sequence disagrees with the expected
    // 3/4/5 pattern (a loud failure for a wrong edge reconstruction).
    explicit ChainGraph(int n);

    int n() const { return n_; }
    int vertex_count() const { return 6 * n_ + 2; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int positions() const { return 3 * n_ + 1; }  // per copy

    int linear_index(const VertexId& v) const;
    VertexId vertex_at(int linear_index) const;

    bool adjacent(int u, int v) const { return adj_matrix_[u][v]; }
    int degree(int v) const { return static_cast<int>(adj_list_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_list_[v]; }

    // Unordered edges as linear index pairs (u < v), in construction order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<VertexId, VertexId> edge_vertices(const std::pair<int, int>& e) const;

    // The involution swapping k <-> k', as a permutation of linear indices.
    std::vector<int> mirror() const;

    // Unweighted shortest-path hop counts from source to every vertex.
    std::vector<int> bfs_distances(int source) const;
    std::vector<int> bfs_distances(const VertexId& source) const;

private:
    void add_edge(int u, int v);
    void check_degree_pattern() const;

    int n_;
    std::vector<std::vector<bool>> adj_matrix_;
    std::vector<std::vector<int>> adj_list_;
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace octachain
