#include "kqsym/orient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kqsym {

Orientation::Orientation(const Graph& g, std::uint64_t reversed) : n_(g.vertex_count()) {
    arcs_.reserve(g.edges().size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        arcs_.push_back(((reversed >> e) & 1u) ? Arc{v, u} : Arc{u, v});
    }
}

Orientation::Orientation(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {}

bool Orientation::directed(int u, int v) const {
    return std::find(arcs_.begin(), arcs_.end(), Arc{u, v}) != arcs_.end();
}

Orientation induced_orientation(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) < g.vertex_count() + 1)
        throw std::invalid_argument("colouring must assign a colour to every vertex 1..n");
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) {
        const int cu = colors[static_cast<std::size_t>(u)], cv = colors[static_cast<std::size_t>(v)];
        if (cu == cv)
            throw std::invalid_argument("improper colouring: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} has both ends coloured " + std::to_string(cu));
        arcs.push_back(cu < cv ? Arc{u, v} : Arc{v, u});
    }
    return Orientation(g.vertex_count(), std::move(arcs));
}

bool is_k_balanced(const Orientation& o, int k, const CycleList& cycles) {
    const int n = o.vertex_count();
    std::vector<std::uint64_t> out_mask(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : o.arcs()) out_mask[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    for (const auto& c : cycles) {
        int forward = 0, backward = 0;
        for (int i = 0; i < c.length(); ++i) {
            const int a = c.vertices[static_cast<std::size_t>(i)];
            const int b = c.vertices[static_cast<std::size_t>((i + 1) % c.length())];
            if ((out_mask[static_cast<std::size_t>(a)] >> b) & 1u)
                ++forward;
            else if ((out_mask[static_cast<std::size_t>(b)] >> a) & 1u)
                ++backward;
            else
                throw std::invalid_argument("cycle uses a pair that is not an edge of the orientation");
        }
        if (forward < k || backward < k) return false;
    }
    return true;
}

namespace {

struct Incidence {
    int cycle;
    bool forward;  // traversal agrees with the edge's i -> j (i < j) direction
};

class BalancedSearch {
public:
    BalancedSearch(const Graph& g, int k, const CycleList& cycles, const std::function<void(std::uint64_t)>& visit,
                   std::uint64_t max_nodes)
        : k_(k), visit_(visit), max_nodes_(max_nodes), incidences_(g.edges().size()) {
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            const auto& verts = cycles[c].vertices;
            for (std::size_t i = 0; i < verts.size(); ++i) {
                const int a = verts[i], b = verts[(i + 1) % verts.size()];
                const int e = g.edge_index(a, b);
                if (e < 0) throw std::invalid_argument("cycle list does not match the graph");
                incidences_[static_cast<std::size_t>(e)].push_back({static_cast<int>(c), a < b});
            }
        }
        remaining_.resize(cycles.size());
        for (std::size_t c = 0; c < cycles.size(); ++c) remaining_[c] = cycles[c].length();
        forward_.assign(cycles.size(), 0);
        backward_.assign(cycles.size(), 0);
        feasible_ = std::all_of(cycles.begin(), cycles.end(), [&](const Cycle& c) { return c.length() >= 2 * k; });

        // Edges lying on many short cycles first, so violated cycles close early.
        std::vector<double> score(g.edges().size(), 0.0);
        for (std::size_t e = 0; e < g.edges().size(); ++e)
            for (const auto& inc : incidences_[e])
                score[e] += 1.0 / static_cast<double>(cycles[static_cast<std::size_t>(inc.cycle)].length());
        order_.resize(g.edges().size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(b)];
        });
    }

    void run() {
        if (feasible_) descend(0, 0);
    }

private:
    // Applies direction to edge e (reversed = j -> i); returns false if a cycle can no longer balance.
    bool apply(int e, bool reversed) {
        bool ok = true;
        for (const auto& inc : incidences_[static_cast<std::size_t>(e)]) {
            const auto c = static_cast<std::size_t>(inc.cycle);
            --remaining_[c];
            (inc.forward != reversed ? forward_[c] : backward_[c]) += 1;
            if (forward_[c] + remaining_[c] < k_ || backward_[c] + remaining_[c] < k_) ok = false;
        }
        return ok;
    }

    void undo(int e, bool reversed) {
        for (const auto& inc : incidences_[static_cast<std::size_t>(e)]) {
            const auto c = static_cast<std::size_t>(inc.cycle);
            ++remaining_[c];
            (inc.forward != reversed ? forward_[c] : backward_[c]) -= 1;
        }
    }

    void descend(std::size_t depth, std::uint64_t reversed_mask) {
        if (depth == order_.size()) {
            visit_(reversed_mask);
            return;
        }
        const int e = order_[depth];
        for (bool reversed : {false, true}) {
            if (++nodes_ > max_nodes_)
                throw ResourceError("orientation search exceeded the node budget of " + std::to_string(max_nodes_));
            if (apply(e, reversed))
                descend(depth + 1, reversed ? reversed_mask | (std::uint64_t{1} << e) : reversed_mask);
            undo(e, reversed);
        }
    }

    int k_;
    const std::function<void(std::uint64_t)>& visit_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    bool feasible_ = true;
    std::vector<std::vector<Incidence>> incidences_;
    std::vector<int> remaining_, forward_, backward_;
    std::vector<int> order_;
};

}  // namespace

void for_each_k_balanced_orientation(const Graph& g, int k, const CycleList& cycles,
                                     const std::function<void(std::uint64_t)>& visit, std::uint64_t max_nodes) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (g.edge_count() > 64) throw std::invalid_argument("orientation search supports at most 64 edges");
    BalancedSearch(g, k, cycles, visit, max_nodes).run();
}

std::vector<Orientation> k_balanced_orientations(const Graph& g, int k, const Limits& limits) {
    const CycleList cycles = simple_cycles(g, limits.max_cycles);
    std::vector<std::uint64_t> masks;
    for_each_k_balanced_orientation(g, k, cycles, [&](std::uint64_t m) { masks.push_back(m); }, limits.max_nodes);
    std::sort(masks.begin(), masks.end());
    std::vector<Orientation> out;
    out.reserve(masks.size());
    for (auto m : masks) out.emplace_back(g, m);
    return out;
}

std::uint64_t count_k_balanced_orientations(const Graph& g, int k, const Limits& limits) {
    const CycleList cycles = simple_cycles(g, limits.max_cycles);
    std::uint64_t count = 0;
    for_each_k_balanced_orientation(g, k, cycles, [&](std::uint64_t) { ++count; }, limits.max_nodes);
    return count;
}

Poset poset_of(const Orientation& o) {
    try {
        return Poset::from_relations(o.vertex_count(), o.arcs());
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("orientation is not acyclic");
    }
}

std::string to_string(const Orientation& o) {
    std::string out;
    for (auto [u, v] : o.arcs()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(u) + "->" + std::to_string(v);
    }
    return out;
}

}  // namespace kqsym
