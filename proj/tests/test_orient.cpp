#include "doctest.h"

#include <algorithm>
#include <set>

#include "kqsym/orient.hpp"

using namespace kqsym;

namespace {

int sources(const Orientation& o) {
    std::set<int> heads;
    for (auto [u, v] : o.arcs()) heads.insert(v);
    return o.vertex_count() - static_cast<int>(heads.size());
}

// Classical chromatic polynomial at -1 by Lagrange interpolation of brute-force
// proper-colouring counts at lambda = 0..n.
Rational classical_chi_at_minus_one(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Rational> ys;
    for (int lambda = 0; lambda <= n; ++lambda) {
        long count = 0;
        std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
        long total = 1;
        for (int i = 0; i < n; ++i) total *= lambda;
        for (long code = 0; code < total; ++code) {
            long x = code;
            for (int v = 1; v <= n; ++v, x /= lambda) c[static_cast<std::size_t>(v)] = static_cast<int>(x % lambda);
            bool proper = true;
            for (auto [u, v] : g.edges()) proper = proper && c[static_cast<std::size_t>(u)] != c[static_cast<std::size_t>(v)];
            count += proper;
        }
        ys.emplace_back(count);
    }
    Rational value = 0;
    for (int i = 0; i <= n; ++i) {
        Rational term = ys[static_cast<std::size_t>(i)];
        for (int j = 0; j <= n; ++j)
            if (j != i) term *= Rational(-1 - j) / Rational(i - j);
        value += term;
    }
    return value;
}

std::set<std::vector<Arc>> arc_sets(const std::vector<Orientation>& os) {
    std::set<std::vector<Arc>> out;
    for (const auto& o : os) out.insert(o.arcs());
    return out;
}

}  // namespace

TEST_CASE("induced_orientation") {
    const Orientation o = induced_orientation(cycle_graph(4), {0, 1, 2, 1, 2});
    CHECK(o.directed(1, 2));
    CHECK(o.directed(3, 2));
    CHECK(o.directed(3, 4));
    CHECK(o.directed(1, 4));

    const Graph edge = path_graph(2);
    CHECK(induced_orientation(edge, {0, 5, 3}).arcs() == std::vector<Arc>{{2, 1}});
    CHECK_THROWS_AS(induced_orientation(edge, {0, 4, 4}), std::invalid_argument);
    CHECK_THROWS_AS(induced_orientation(edge, {0, 4}), std::invalid_argument);
}

TEST_CASE("is_k_balanced") {
    const Graph c4 = cycle_graph(4);
    const auto cycles = simple_cycles(c4);
    const Orientation bypass(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    CHECK_FALSE(is_k_balanced(bypass, 2, cycles));
    CHECK(is_k_balanced(bypass, 1, cycles));

    const Graph tree = Graph::from_edge_list(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}});
    for (std::uint64_t m = 0; m < 16; ++m)
        for (int k = 1; k <= 4; ++k) CHECK(is_k_balanced(Orientation(tree, m), k, simple_cycles(tree)));

    const Graph c6 = cycle_graph(6);
    const Orientation alternating(6, {{1, 2}, {1, 6}, {3, 2}, {3, 4}, {5, 4}, {5, 6}});
    CHECK(is_k_balanced(alternating, 3, simple_cycles(c6)));
    CHECK_FALSE(is_k_balanced(alternating, 4, simple_cycles(c6)));
}

TEST_CASE("k_balanced_orientations of C_4 with k = 2") {
    const auto os = k_balanced_orientations(cycle_graph(4), 2);
    REQUIRE(os.size() == 6);
    CHECK(std::count_if(os.begin(), os.end(), [](const Orientation& o) { return sources(o) == 1; }) == 4);
    CHECK(std::count_if(os.begin(), os.end(), [](const Orientation& o) { return sources(o) == 2; }) == 2);
    CHECK(to_string(os[0]) == "2->1 1->4 2->3 3->4");
}

TEST_CASE("graphs without k-balanced orientations") {
    CHECK(k_balanced_orientations(cycle_graph(3), 2).empty());
    CHECK(count_k_balanced_orientations(grotzsch_graph(), 2) == 0);
    // acyclic orientations, from an independent subset recursion in networkx
    CHECK(count_k_balanced_orientations(grotzsch_graph(), 1) == 167400);
    CHECK(count_k_balanced_orientations(cycle_graph(6), 3) == 20);
    CHECK(count_k_balanced_orientations(path_graph(2), 1) == 2);
}

TEST_CASE("node budget is enforced") {
    Limits tight;
    tight.max_nodes = 10;
    CHECK_THROWS_AS(count_k_balanced_orientations(petersen_graph(), 1, tight), ResourceError);
    Limits few_cycles;
    few_cycles.max_cycles = 5;
    CHECK_THROWS_AS(count_k_balanced_orientations(petersen_graph(), 1, few_cycles), ResourceError);
}

TEST_CASE("1-balanced orientations are the acyclic ones") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : connected_graphs(n)) {
            const Rational sign = n % 2 ? Rational(-1) : Rational(1);
            CHECK(Rational(count_k_balanced_orientations(g, 1)) == sign * classical_chi_at_minus_one(g));
        }
    }
}

TEST_CASE("pruned search equals the exhaustive filter") {
    std::vector<Graph> graphs;
    for (int n = 3; n <= 6; ++n)
        for (auto& g : connected_graphs(n))
            if (g.edge_count() <= 12) graphs.push_back(g);
    graphs.push_back(cycle_graph(8));
    graphs.push_back(complete_bipartite_graph(3, 3));
    for (const auto& g : graphs) {
        const auto cycles = simple_cycles(g);
        std::vector<Orientation> previous;
        for (int k = 1; k <= 4; ++k) {
            std::vector<Orientation> filtered;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
                Orientation o(g, m);
                if (is_k_balanced(o, k, cycles)) filtered.push_back(o);
            }
            const auto found = k_balanced_orientations(g, k);
            CHECK(found == filtered);
            if (k > 1) {
                const auto prev = arc_sets(previous);
                for (const auto& o : found) CHECK(prev.count(o.arcs()) == 1);
            }
            const auto gi = girth(g);
            if (gi && 2 * k > *gi) CHECK(found.empty());
            previous = found;
        }
    }
}

TEST_CASE("poset_of") {
    const Poset diamond = poset_of(Orientation(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    CHECK(diamond.less(1, 4));
    CHECK(diamond.less(1, 2));
    CHECK(diamond.less(3, 4));
    CHECK_FALSE(diamond.less(2, 3));
    CHECK_FALSE(diamond.less(3, 2));

    const Poset two_chain = poset_of(Orientation(path_graph(2), 0));
    CHECK(two_chain == chain(2));

    const Poset three_chain = poset_of(Orientation(path_graph(3), 0));
    CHECK(three_chain == chain(3));
    CHECK(three_chain.covers() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

    CHECK_THROWS_AS(poset_of(Orientation(3, {{1, 2}, {2, 3}, {3, 1}})), std::invalid_argument);
}

TEST_CASE("covers equal arcs exactly for 2-balanced orientations") {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& g : connected_graphs(n)) {
            const auto cycles = simple_cycles(g);
            for (const auto& o : k_balanced_orientations(g, 1)) {
                auto arcs = o.arcs();
                std::sort(arcs.begin(), arcs.end());
                const auto covers = poset_of(o).covers();
                if (is_k_balanced(o, 2, cycles)) {
                    CHECK(covers == arcs);
                } else {
                    CHECK(covers.size() < arcs.size());
                    CHECK(std::includes(arcs.begin(), arcs.end(), covers.begin(), covers.end()));
                }
            }
        }
    }
}
