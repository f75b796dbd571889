#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kqsym/errors.hpp"
#include "kqsym/graph.hpp"
#include "kqsym/poset.hpp"

namespace kqsym {

/// Directed edge (tail, head).
using Arc = std::pair<int, int>;

/// One direction per edge of an underlying graph, stored in the graph's
/// canonical edge order.
class Orientation {
public:
    Orientation() = default;
    /// Bit e of reversed set means edge e = {i<j} is directed j -> i.
    Orientation(const Graph& g, std::uint64_t reversed);
    Orientation(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    /// Whether u -> v is an arc.
    bool directed(int u, int v) const;

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

/// Each edge points toward the endpoint with the larger colour. `colors` is
/// indexed by vertex (index 0 unused). Throws std::invalid_argument if improper.
Orientation induced_orientation(const Graph& g, const std::vector<int>& colors);

/// Every cycle has at least k arcs agreeing and k arcs disagreeing with one
/// traversal direction.
bool is_k_balanced(const Orientation& o, int k, const CycleList& cycles);

/// Pruned edge-by-edge search. visit receives the reversed-edge bitmask (see
/// Orientation). Visiting order depends on the internal edge order, not on the
/// canonical order. Throws ResourceError when the node budget is exceeded.
void for_each_k_balanced_orientation(const Graph& g, int k, const CycleList& cycles,
                                     const std::function<void(std::uint64_t)>& visit,
                                     std::uint64_t max_nodes = Limits{}.max_nodes);

/// All k-balanced orientations, sorted by reversed-edge bitmask ascending.
std::vector<Orientation> k_balanced_orientations(const Graph& g, int k, const Limits& limits = {});
std::uint64_t count_k_balanced_orientations(const Graph& g, int k, const Limits& limits = {});

/// Poset generated by the arcs. Throws std::invalid_argument on a directed cycle.
Poset poset_of(const Orientation& o);

/// "1->2 3->2 ..." in canonical edge order.
std::string to_string(const Orientation& o);

}  // namespace kqsym
