#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kqsym/errors.hpp"

namespace kqsym {

/// Unordered pair stored with first < second, 1-based vertices.
using Edge = std::pair<int, int>;

/// Simple undirected graph on {1..n}. Edges are kept sorted lexicographically;
/// that order is the canonical edge order used by orientations.
class Graph {
public:
    static constexpr int kMaxVertices = 63;

    Graph() = default;
    /// Throws std::invalid_argument on loops or out-of-range endpoints; duplicates are merged.
    static Graph from_edge_list(int n, const std::vector<Edge>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(int u, int v) const;
    /// Neighbours of v as a bitmask over bits 1..n.
    std::uint64_t neighbour_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::vector<int> neighbours(int v) const;
    /// Index of {u,v} in edges(), or -1.
    int edge_index(int u, int v) const;

    bool is_connected() const;
    bool is_forest() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

/// Disjoint union; the second graph's labels are shifted above the first's.
Graph disjoint_union(const Graph& g, const Graph& h);

Graph from_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

/// "n m" header, then m lines "i j". Blank lines and '#' comments are ignored.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list_text(const Graph& g);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph complete_graph(int n);
/// Mycielskian of C_5: cycle c_1..c_5 = 1..5, shadows u_1..u_5 = 6..10, apex 11.
Graph grotzsch_graph();
/// Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram on 6..10.
Graph petersen_graph();

/// Generator syntax "name", "name:p1" or "name:p1,p2" with names cycle, path,
/// complete, complete_bipartite, grotzsch, petersen.
Graph generate(const std::string& spec);

/// A simple cycle in canonical form: smallest vertex first, and the second
/// vertex smaller than the last.
struct Cycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

using CycleList = std::vector<Cycle>;

/// Every simple cycle exactly once, ordered by smallest vertex then by
/// depth-first discovery. Throws ResourceError if more than max_cycles exist.
CycleList simple_cycles(const Graph& g, std::size_t max_cycles = Limits{}.max_cycles);

/// Shortest cycle length by breadth-first search; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// All graphs on n vertices with the given edge subset: bit e of mask selects
/// the e-th pair of the lexicographic list of all pairs {i<j}.
Graph graph_from_pair_mask(int n, std::uint64_t mask);

/// One representative per isomorphism class of connected graphs on exactly n
/// vertices (n <= 7), choosing the minimal pair mask over relabellings.
std::vector<Graph> connected_graphs(int n);

}  // namespace kqsym
