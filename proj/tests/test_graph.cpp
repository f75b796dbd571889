#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "kqsym/graph.hpp"

using namespace kqsym;

namespace {

// Reference graph6 encoder written directly from the format description:
// build the upper-triangle bit string column by column, pad, cut into 6-bit groups.
std::string reference_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string bits;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
    while (bits.size() % 6) bits += '0';
    std::string out(1, static_cast<char>(63 + n));
    for (std::size_t p = 0; p < bits.size(); p += 6) out += static_cast<char>(63 + std::stoi(bits.substr(p, 6), nullptr, 2));
    return out;
}

// Oracle: edge subsets in which every touched vertex has degree 2 and that are connected.
int brute_force_cycle_count(const Graph& g) {
    const auto& edges = g.edges();
    int count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        std::vector<Edge> chosen;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((mask >> e) & 1u) {
                ++degree[static_cast<std::size_t>(edges[e].first)];
                ++degree[static_cast<std::size_t>(edges[e].second)];
                chosen.push_back(edges[e]);
            }
        if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 0 && d != 2; })) continue;
        std::set<int> reached{chosen[0].first};
        for (bool grew = true; grew;) {
            grew = false;
            for (auto [u, v] : chosen)
                if (reached.count(u) != reached.count(v)) {
                    reached.insert(u);
                    reached.insert(v);
                    grew = true;
                }
        }
        if (reached.size() == chosen.size()) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("from_edge_list") {
    const Graph c4 = Graph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(c4 == cycle_graph(4));
    CHECK(Graph::from_edge_list(4, {{2, 1}, {1, 2}, {3, 2}}).edge_count() == 2);
    CHECK(Graph::from_edge_list(3, {}).edge_count() == 0);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("graph6 known strings") {
    const Graph g = from_graph6("C]");
    CHECK(to_graph6(g) == "C]");
    CHECK(g.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(to_graph6(Graph::from_edge_list(1, {})) == "@");
    // Reference strings produced by networkx.to_graph6_bytes.
    CHECK(to_graph6(cycle_graph(4)) == "Cl");
    CHECK(to_graph6(complete_bipartite_graph(3, 3)) == "EFz_");
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(to_graph6(path_graph(5)) == "DhC");
    CHECK(from_graph6(">>graph6<<Cl\n") == cycle_graph(4));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("C]]"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("C\x20"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("Bx"), std::invalid_argument);  // padding bits set
}

TEST_CASE("graph6 agrees with the reference encoder and round trips for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = graph_from_pair_mask(n, mask);
            const std::string s = to_graph6(g);
            if (n <= 5) CHECK(s == reference_graph6(g));
            CHECK(from_graph6(s) == g);
        }
    }
}

TEST_CASE("graph6 round trips on random graphs up to 10 vertices and the long header form") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        std::vector<Edge> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        const Graph g = Graph::from_edge_list(n, edges);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    const Graph big = path_graph(63);
    CHECK(to_graph6(big).substr(0, 4) == "~??~");
    CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("edge-list text") {
    const Graph g = parse_edge_list("# square\n4 4\n1 2\n2 3\n3 4\n4 1\n");
    CHECK(g == cycle_graph(4));
    CHECK(parse_edge_list(to_edge_list_text(petersen_graph())) == petersen_graph());
    CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2 1\n2 2\n"), std::invalid_argument);
}

TEST_CASE("generators") {
    const Graph c4 = generate("cycle:4");
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(girth(c4) == 4);

    const Graph gr = generate("grotzsch");
    CHECK(gr.vertex_count() == 11);
    CHECK(gr.edge_count() == 20);
    CHECK(girth(gr) == 4);
    for (int w = 6; w <= 10; ++w) CHECK(gr.adjacent(w, 11));
    CHECK(gr.adjacent(6, 2));
    CHECK(gr.adjacent(6, 5));

    const Graph k33 = generate("complete_bipartite:3,3");
    CHECK(k33.vertex_count() == 6);
    CHECK(k33.edge_count() == 9);
    CHECK(girth(k33) == 4);

    const Graph p = generate("petersen");
    CHECK(p.edge_count() == 15);
    CHECK(girth(p) == 5);
    for (int v = 1; v <= 10; ++v) CHECK(p.neighbours(v).size() == 3);

    CHECK_THROWS_AS(generate("cycle:2"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(generate("path:0"), std::invalid_argument);
    CHECK_THROWS_AS(generate("complete_bipartite:3"), std::invalid_argument);
    CHECK_THROWS_AS(generate("wheel:5"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle:-4"), std::invalid_argument);
}

TEST_CASE("Grötzsch graph is triangle-free") {
    const Graph g = grotzsch_graph();
    for (int a = 1; a <= 11; ++a)
        for (int b = a + 1; b <= 11; ++b)
            for (int c = b + 1; c <= 11; ++c) CHECK_FALSE((g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)));
}

TEST_CASE("simple_cycles") {
    for (int n = 3; n <= 8; ++n) {
        const auto cycles = simple_cycles(cycle_graph(n));
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].length() == n);
    }
    CHECK(simple_cycles(path_graph(6)).empty());
    CHECK(simple_cycles(Graph::from_edge_list(5, {{1, 2}, {1, 3}, {1, 4}, {4, 5}})).empty());

    const auto k23 = simple_cycles(complete_bipartite_graph(2, 3));
    CHECK(k23.size() == 3);
    for (const auto& c : k23) CHECK(c.length() == 4);

    const auto c4 = simple_cycles(cycle_graph(4));
    CHECK(c4[0].vertices == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(simple_cycles(complete_graph(6), 10), ResourceError);
}

TEST_CASE("simple_cycles are canonical, valid and match the brute-force count") {
    std::vector<Graph> graphs;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) graphs.push_back(complete_bipartite_graph(m, n));
    graphs.push_back(complete_graph(5));
    graphs.push_back(petersen_graph());
    for (const auto& g : graphs) {
        const auto cycles = simple_cycles(g);
        CHECK(static_cast<int>(cycles.size()) == brute_force_cycle_count(g));
        for (const auto& c : cycles) {
            CHECK(c.vertices[0] == *std::min_element(c.vertices.begin(), c.vertices.end()));
            CHECK(c.vertices[1] < c.vertices.back());
            CHECK(std::set<int>(c.vertices.begin(), c.vertices.end()).size() == c.vertices.size());
            for (int i = 0; i < c.length(); ++i)
                CHECK(g.adjacent(c.vertices[static_cast<std::size_t>(i)],
                                 c.vertices[static_cast<std::size_t>((i + 1) % c.length())]));
        }
    }
}

TEST_CASE("girth") {
    CHECK(girth(complete_bipartite_graph(3, 3)) == 4);
    CHECK_FALSE(girth(path_graph(5)).has_value());
    CHECK(girth(grotzsch_graph()) == 4);
    CHECK(girth(complete_graph(4)) == 3);
    for (const auto& g : connected_graphs(5)) {
        const auto cycles = simple_cycles(g);
        if (cycles.empty()) {
            CHECK_FALSE(girth(g).has_value());
        } else {
            int shortest = cycles[0].length();
            for (const auto& c : cycles) shortest = std::min(shortest, c.length());
            CHECK(girth(g) == shortest);
        }
    }
}

TEST_CASE("connected graph corpus sizes") {
    const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("forest and connectivity predicates") {
    CHECK(path_graph(5).is_forest());
    CHECK_FALSE(cycle_graph(5).is_forest());
    CHECK(disjoint_union(path_graph(2), path_graph(3)).is_forest());
    CHECK_FALSE(disjoint_union(path_graph(2), path_graph(3)).is_connected());
    CHECK(disjoint_union(cycle_graph(3), path_graph(2)).edges().back() == Edge{4, 5});
}
