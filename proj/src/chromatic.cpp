#include "kqsym/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "kqsym/orient.hpp"
#include "kqsym/poset.hpp"

namespace kqsym {

namespace {

/// Memoised definition-level balance test keyed by reversed-edge bitmask.
class BalanceOracle {
public:
    BalanceOracle(const Graph& g, int k, const Limits& limits)
        : g_(g), k_(k), cycles_(simple_cycles(g, limits.max_cycles)) {
        if (g.edge_count() <= 24) table_.assign(std::size_t{1} << g.edge_count(), -1);
    }

    bool operator()(std::uint64_t reversed) {
        if (!table_.empty()) {
            auto& slot = table_[reversed];
            if (slot < 0) slot = is_k_balanced(Orientation(g_, reversed), k_, cycles_) ? 1 : 0;
            return slot == 1;
        }
        auto [it, inserted] = sparse_.try_emplace(reversed, false);
        if (inserted) it->second = is_k_balanced(Orientation(g_, reversed), k_, cycles_);
        return it->second;
    }

private:
    const Graph& g_;
    int k_;
    CycleList cycles_;
    std::vector<signed char> table_;
    std::unordered_map<std::uint64_t, bool> sparse_;
};

/// Enumerates proper set partitions (blocks are independent sets) and, for each,
/// every ordering of the blocks as colours 1..l.
class ColoringWalk {
public:
    ColoringWalk(const Graph& g, int k, const Limits& limits) : g_(g), balanced_(g, k, limits) {
        block_of_.assign(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    }

    std::map<std::uint64_t, std::uint64_t> run() {
        if (g_.vertex_count() == 0) {
            tally_[0] = 1;
            return tally_;
        }
        place(1);
        return tally_;
    }

private:
    void place(int v) {
        if (v > g_.vertex_count()) {
            order_blocks();
            return;
        }
        const std::uint64_t bit = std::uint64_t{1} << v;
        for (std::size_t b = 0; b < block_members_.size(); ++b) {
            if (block_members_[b] & g_.neighbour_mask(v)) continue;
            block_members_[b] |= bit;
            block_of_[static_cast<std::size_t>(v)] = static_cast<int>(b);
            place(v + 1);
            block_members_[b] &= ~bit;
        }
        block_of_[static_cast<std::size_t>(v)] = static_cast<int>(block_members_.size());
        block_members_.push_back(bit);
        place(v + 1);
        block_members_.pop_back();
    }

    void order_blocks() {
        const std::size_t blocks = block_members_.size();
        std::vector<int> colour(blocks);  // colour[b] in 0..l-1
        std::iota(colour.begin(), colour.end(), 0);
        std::vector<int> sizes(blocks);
        for (std::size_t b = 0; b < blocks; ++b) sizes[b] = std::popcount(block_members_[b]);
        const auto& edges = g_.edges();
        std::vector<int> by_colour(blocks);
        do {
            std::uint64_t reversed = 0;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                const int cu = colour[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(edges[e].first)])];
                const int cv = colour[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(edges[e].second)])];
                if (cu > cv) reversed |= std::uint64_t{1} << e;
            }
            if (!balanced_(reversed)) continue;
            for (std::size_t b = 0; b < blocks; ++b) by_colour[static_cast<std::size_t>(colour[b])] = sizes[b];
            std::uint64_t mask = 0;
            int sum = 0;
            for (std::size_t c = 0; c + 1 < blocks; ++c) {
                sum += by_colour[c];
                mask |= std::uint64_t{1} << (sum - 1);
            }
            ++tally_[mask];
        } while (std::next_permutation(colour.begin(), colour.end()));
    }

    const Graph& g_;
    BalanceOracle balanced_;
    std::vector<std::uint64_t> block_members_;
    std::vector<int> block_of_;
    std::map<std::uint64_t, std::uint64_t> tally_;
};

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

QSym xk_via_colorings(const Graph& g, int k, const Limits& limits) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    const int n = g.vertex_count();
    QSym f(n, Basis::Monomial);
    for (auto [mask, count] : ColoringWalk(g, k, limits).run()) f.add(composition_from_mask(mask, n), Rational(count));
    return f;
}

QSym xk_via_orientations(const Graph& g, int k, const Limits& limits) {
    const CycleList cycles = simple_cycles(g, limits.max_cycles);
    QSym f(g.vertex_count(), Basis::Fundamental);
    for_each_k_balanced_orientation(
        g, k, cycles, [&](std::uint64_t reversed) { f += kp(poset_of(Orientation(g, reversed))); },
        limits.max_nodes);
    return f;
}

QSym xk_cycle_closed_form(int n) {
    QSym f = xk_via_colorings(cycle_graph(n), 1);
    f.add(Composition(std::vector<int>(static_cast<std::size_t>(n), 1)), Rational(-2 * n));
    return f;
}

int bipartite_segment_count(const Composition& alpha, int m, int n) {
    int r = 0;
    for (int i = 1; i < alpha.length(); ++i) {  // 0-based i >= 1 is the 1-based bound i > 1
        int sum = 0;
        for (int j = i; j < alpha.length(); ++j) {
            sum += alpha[j];
            r += (sum == m) + (sum == n);
        }
    }
    return r;
}

QSym xk_complete_bipartite_closed_form(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite closed form needs m, n >= 1");
    QSym f(m + n, Basis::Monomial);
    const Integer mn = factorial(m) * factorial(n);
    for (const auto& alpha : compositions_of(m + n)) {
        const int r = bipartite_segment_count(alpha, m, n);
        if (r == 0) continue;
        Integer alpha_fact = 1;
        for (int p : alpha.parts()) alpha_fact *= factorial(p);
        f.add(alpha, Rational(mn / alpha_fact * r));
    }
    return f;
}

RationalPolynomial chi_k(const Graph& g, int k, ComputationPath path, const Limits& limits) {
    if (path == ComputationPath::Colorings) return specialize(xk_via_colorings(g, k, limits));
    return specialize(l_to_m(xk_via_orientations(g, k, limits)));
}

IntegralityReport leading_coefficient_check(const Graph& g, int k, const Limits& limits) {
    const RationalPolynomial p = chi_k(g, k, ComputationPath::Colorings, limits);
    IntegralityReport report;
    report.leading_coefficient = p.leading_coefficient();
    report.integer_coefficients = std::all_of(p.coefficients().begin(), p.coefficients().end(),
                                              [](const Rational& c) { return is_integer(c); });
    return report;
}

namespace {

// Calls visit(colours) for every map [n] -> [lambda]; colours is 1-indexed.
template <typename Visit>
void for_each_map(int n, int lambda, Visit&& visit) {
    std::vector<int> colours(static_cast<std::size_t>(n) + 1, 1);
    if (lambda < 1 && n > 0) return;
    while (true) {
        visit(colours);
        int v = n;
        while (v >= 1 && colours[static_cast<std::size_t>(v)] == lambda) colours[static_cast<std::size_t>(v--)] = 1;
        if (v < 1) return;
        ++colours[static_cast<std::size_t>(v)];
    }
}

}  // namespace

std::uint64_t reciprocity_pairs(const Graph& g, int k, int lambda, const Limits& limits) {
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
    std::uint64_t total = 0;
    for (const auto& o : k_balanced_orientations(g, k, limits)) {
        for_each_map(g.vertex_count(), lambda, [&](const std::vector<int>& c) {
            for (auto [u, v] : o.arcs())
                if (c[static_cast<std::size_t>(u)] > c[static_cast<std::size_t>(v)]) return;
            ++total;
        });
    }
    return total;
}

std::uint64_t count_k_balanced_colorings(const Graph& g, int k, int lambda, const Limits& limits) {
    const CycleList cycles = simple_cycles(g, limits.max_cycles);
    std::uint64_t total = 0;
    for_each_map(g.vertex_count(), lambda, [&](const std::vector<int>& c) {
        for (auto [u, v] : g.edges())
            if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return;
        if (is_k_balanced(induced_orientation(g, c), k, cycles)) ++total;
    });
    return total;
}

}  // namespace kqsym
