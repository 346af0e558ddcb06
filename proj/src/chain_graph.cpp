#include "octachain/chain_graph.hpp"

#include <deque>
#include <stdexcept>

namespace octachain {

std::string to_string(const VertexId& v) {
    std::string s = std::to_string(v.position);
    if (v.copy == Copy::V2) s += "'";
    return s;
}

VertexId parse_vertex(const std::string& text, int n) {
    if (text.empty()) throw std::invalid_argument("vertex: empty string");
    std::string digits = text;
    Copy copy = Copy::V1;
    if (digits.back() == '\'') {
        copy = Copy::V2;
        digits.pop_back();
    }
    if (digits.empty()) throw std::invalid_argument("vertex '" + text + "': missing position");
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("vertex '" + text + "': expected digits optionally followed by '");
        }
    }
    long pos = 0;
    try {
        pos = std::stol(digits);
    } catch (const std::exception&) {
        throw std::invalid_argument("vertex '" + text + "': position out of range");
    }
    if (pos < 1 || pos > 3L * n + 1) {
        throw std::invalid_argument("vertex '" + text + "': position must be in [1, " +
                                    std::to_string(3 * n + 1) + "] for n=" + std::to_string(n));
    }
    return VertexId{copy, static_cast<int>(pos)};
}

ChainGraph::ChainGraph(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("ChainGraph: n must be >= 1 (the closed forms for this family "
                                    "are stated for chains of at least one octagon)");
    }
    const int per_copy = positions();
    const int total = vertex_count();
    adj_matrix_.assign(total, std::vector<bool>(total, false));
    adj_list_.assign(total, {});

    auto v1 = [](int pos) { return pos - 1; };
    auto v2 = [per_copy](int pos) { return per_copy + pos - 1; };

    // Path edges in each copy, crossed edges between copies.
    for (int i = 1; i <= 3 * n; ++i) {
        add_edge(v1(i), v1(i + 1));
        add_edge(v2(i), v2(i + 1));
        add_edge(v1(i), v2(i + 1));
        add_edge(v2(i), v1(i + 1));
    }
    // Rungs at positions 1, 4, ..., 3n+1.
    for (int j = 1; j <= 3 * n + 1; j += 3) {
        add_edge(v1(j), v2(j));
    }

    check_degree_pattern();
}

void ChainGraph::add_edge(int u, int v) {
    if (u == v) throw std::logic_error("ChainGraph: loop edge");
    if (adj_matrix_[u][v]) throw std::logic_error("ChainGraph: duplicate edge");
    adj_matrix_[u][v] = adj_matrix_[v][u] = true;
    adj_list_[u].push_back(v);
    adj_list_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

void ChainGraph::check_degree_pattern() const {
    const int per_copy = positions();
    // Expected diagonal of the V1 x V1 Laplacian block: 3 at the chain ends,
    // 4 at positions = 2, 0 (mod 3), 5 at interior positions = 1 (mod 3).
    auto expected_degree = [&](int pos) {
        if (pos == 1 || pos == per_copy) return 3;
        return pos % 3 == 1 ? 5 : 4;
    };
    for (int pos = 1; pos <= per_copy; ++pos) {
        const int want = expected_degree(pos);
        if (degree(pos - 1) != want || degree(per_copy + pos - 1) != want) {
            throw std::logic_error("ChainGraph: degree pattern mismatch at position " +
                                   std::to_string(pos));
        }
        // Rung pattern: k ~ k' exactly when k = 1 (mod 3).
        const bool want_rung = (pos % 3 == 1);
        if (adjacent(pos - 1, per_copy + pos - 1) != want_rung) {
            throw std::logic_error("ChainGraph: rung pattern mismatch at position " +
                                   std::to_string(pos));
        }
    }
    if (edge_count() != 13 * n_ + 1) {
        throw std::logic_error("ChainGraph: edge count " + std::to_string(edge_count()) +
                               " != 13n+1");
    }
}

int ChainGraph::linear_index(const VertexId& v) const {
    if (v.position < 1 || v.position > positions()) {
        throw std::invalid_argument("vertex position " + std::to_string(v.position) +
                                    " out of range for n=" + std::to_string(n_));
    }
    int base = (v.copy == Copy::V1) ? 0 : positions();
    return base + v.position - 1;
}

VertexId ChainGraph::vertex_at(int idx) const {
    if (idx < 0 || idx >= vertex_count()) throw std::invalid_argument("vertex index out of range");
    if (idx < positions()) return VertexId{Copy::V1, idx + 1};
    return VertexId{Copy::V2, idx - positions() + 1};
}

std::pair<VertexId, VertexId> ChainGraph::edge_vertices(const std::pair<int, int>& e) const {
    return {vertex_at(e.first), vertex_at(e.second)};
}

std::vector<int> ChainGraph::mirror() const {
    const int per_copy = positions();
    std::vector<int> perm(vertex_count());
    for (int i = 0; i < per_copy; ++i) {
        perm[i] = per_copy + i;
        perm[per_copy + i] = i;
    }
    return perm;
}

std::vector<int> ChainGraph::bfs_distances(int source) const {
    if (source < 0 || source >= vertex_count()) {
        throw std::invalid_argument("bfs: source out of range");
    }
    std::vector<int> dist(vertex_count(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj_list_[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> ChainGraph::bfs_distances(const VertexId& source) const {
    return bfs_distances(linear_index(source));
}

}  // namespace octachain
