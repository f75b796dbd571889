#include "doctest.h"

#include "kqsym/chromatic.hpp"
#include "kqsym/orient.hpp"

using namespace kqsym;

namespace {

QSym monomial(int degree, std::initializer_list<std::pair<Composition, long>> terms) {
    QSym f(degree, Basis::Monomial);
    for (const auto& [alpha, c] : terms) f.add(alpha, c);
    return f;
}

}  // namespace

TEST_CASE("xk_via_colorings") {
    const QSym k33 = xk_via_colorings(complete_bipartite_graph(3, 3), 2);
    CHECK(k33.coefficient({2, 1, 2, 1}) == 36);
    CHECK(k33.coefficient({2, 1, 1, 2}) == 18);
    CHECK_FALSE(is_symmetric(k33));

    CHECK(xk_via_colorings(cycle_graph(3), 2).is_zero());

    const Graph tree = Graph::from_edge_list(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}});
    for (int k = 2; k <= 4; ++k) CHECK(xk_via_colorings(tree, k) == xk_via_colorings(tree, 1));

    // Frozen from tests/oracle/brute_force.py.
    CHECK(xk_via_colorings(cycle_graph(4), 2) ==
          monomial(4, {{{2, 2}, 2}, {{2, 1, 1}, 4}, {{1, 2, 1}, 4}, {{1, 1, 2}, 4}, {{1, 1, 1, 1}, 16}}));
    CHECK(xk_via_colorings(cycle_graph(5), 2) ==
          monomial(5, {{{2, 2, 1}, 10}, {{2, 1, 2}, 10}, {{1, 2, 2}, 10}, {{2, 1, 1, 1}, 30}, {{1, 2, 1, 1}, 30},
                       {{1, 1, 2, 1}, 30}, {{1, 1, 1, 2}, 30}, {{1, 1, 1, 1, 1}, 110}}));
    CHECK(xk_via_colorings(Graph::from_edge_list(0, {}), 1) == QSym::one());
}

TEST_CASE("xk_via_orientations") {
    QSym c4(4, Basis::Fundamental);
    c4.add({1, 1, 1, 1}, 6);
    c4.add({2, 1, 1}, 2);
    c4.add({1, 2, 1}, 4);
    c4.add({1, 1, 2}, 2);
    c4.add({2, 2}, 2);
    CHECK(xk_via_orientations(cycle_graph(4), 2) == c4);

    CHECK(xk_via_orientations(grotzsch_graph(), 2).is_zero());

    const QSym edge = xk_via_orientations(path_graph(2), 1);
    CHECK(edge == Rational(2) * QSym::basis_element({1, 1}, Basis::Fundamental));
    CHECK(l_to_m(edge) == xk_via_colorings(path_graph(2), 1));
}

TEST_CASE("both paths agree on named graphs") {
    for (const Graph& g : {cycle_graph(7), complete_bipartite_graph(2, 3), complete_bipartite_graph(3, 3)})
        for (int k = 1; k <= *girth(g) / 2; ++k) CHECK(l_to_m(xk_via_orientations(g, k)) == xk_via_colorings(g, k));
}

TEST_CASE("cycle closed form") {
    CHECK(xk_cycle_closed_form(4).coefficient({1, 1, 1, 1}) == 16);
    CHECK(xk_cycle_closed_form(3).is_zero());
    for (int n = 3; n <= 6; ++n) CHECK(xk_cycle_closed_form(n) == xk_via_colorings(cycle_graph(n), 2));
}

TEST_CASE("complete bipartite closed form") {
    CHECK(bipartite_segment_count({2, 1, 2, 1}, 3, 3) == 4);
    CHECK(bipartite_segment_count({2, 1, 1, 2}, 3, 3) == 2);
    CHECK(bipartite_segment_count({1, 1, 1}, 1, 2) == 3);

    const QSym k33 = xk_complete_bipartite_closed_form(3, 3);
    CHECK(k33.coefficient({2, 1, 2, 1}) == 36);
    CHECK(k33.coefficient({2, 1, 1, 2}) == 18);
    CHECK(xk_complete_bipartite_closed_form(1, 2).coefficient({1, 1, 1}) == 6);

    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}, {2, 4}})
        CHECK(xk_complete_bipartite_closed_form(m, n) == xk_via_colorings(complete_bipartite_graph(m, n), 2));
}

TEST_CASE("chi_k") {
    const RationalPolynomial c4 = chi_k(cycle_graph(4), 2);
    CHECK(c4 == Rational(2) * RationalPolynomial::binomial(2) + Rational(12) * RationalPolynomial::binomial(3) +
                    Rational(16) * RationalPolynomial::binomial(4));
    for (int lambda = 1; lambda <= 4; ++lambda)
        CHECK(evaluate(c4, lambda) == Rational(count_k_balanced_colorings(cycle_graph(4), 2, lambda)));
    CHECK(evaluate(c4, 1) == 0);
    CHECK(evaluate(c4, 2) == 2);
    CHECK(evaluate(c4, 3) == 18);
    CHECK(evaluate(c4, 4) == 76);
    CHECK(chi_k(cycle_graph(4), 2, ComputationPath::Orientations) == c4);

    CHECK(chi_k(complete_graph(4), 2).is_zero());
    CHECK(chi_k(cycle_graph(3), 2).is_zero());

    // Path on 4 vertices: lambda (lambda - 1)^3 for every k.
    const RationalPolynomial path = chi_k(path_graph(4), 3);
    const RationalPolynomial lm1({Rational(-1), Rational(1)});
    CHECK(path == RationalPolynomial::x() * lm1 * lm1 * lm1);
}

TEST_CASE("leading_coefficient_check") {
    const auto c4 = leading_coefficient_check(cycle_graph(4), 2);
    CHECK(c4.leading_coefficient == Rational(2, 3));
    CHECK_FALSE(c4.integer_coefficients);

    CHECK(leading_coefficient_check(path_graph(4), 2).integer_coefficients);
    const auto c3 = leading_coefficient_check(cycle_graph(3), 2);
    CHECK(c3.integer_coefficients);
    CHECK(c3.leading_coefficient == 0);
}

TEST_CASE("reciprocity_pairs") {
    const Graph c4 = cycle_graph(4);
    CHECK(reciprocity_pairs(c4, 2, 1) == 6);
    CHECK(reciprocity_pairs(c4, 2, 2) == 38);
    const RationalPolynomial chi = chi_k(c4, 2);
    for (int lambda = 1; lambda <= 4; ++lambda)
        CHECK(Rational(reciprocity_pairs(c4, 2, lambda)) == evaluate(chi, -lambda));
    CHECK_THROWS_AS(reciprocity_pairs(c4, 2, 0), std::invalid_argument);

    // Forests at k = 1: classical acyclic-orientation reciprocity, chi(lambda) = lambda (lambda-1)^(n-1) for trees.
    const Graph star = Graph::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}});
    for (int lambda = 1; lambda <= 4; ++lambda) {
        const long classical = -lambda * (-lambda - 1) * (-lambda - 1) * (-lambda - 1);
        CHECK(static_cast<long>(reciprocity_pairs(star, 1, lambda)) == classical);
    }
}

TEST_CASE("count_k_balanced_orientations matches chi at -1") {
    CHECK(count_k_balanced_orientations(cycle_graph(4), 2) == 6);
    CHECK(count_k_balanced_orientations(grotzsch_graph(), 2) == 0);
    CHECK(count_k_balanced_orientations(cycle_graph(6), 3) == 20);
    CHECK(evaluate(chi_k(cycle_graph(6), 3), -1) == 20);
}

TEST_CASE("colouring path is invariant under order-preserving recolouring") {
    // Colouring with l colours versus any order-embedded l-subset of [l+2]: the
    // brute-force counts into [lambda] must match specialize at every lambda.
    for (const Graph& g : {cycle_graph(5), complete_bipartite_graph(2, 3), path_graph(4)}) {
        const RationalPolynomial chi = chi_k(g, 2);
        for (int lambda = 1; lambda <= 5; ++lambda)
            CHECK(evaluate(chi, lambda) == Rational(count_k_balanced_colorings(g, 2, lambda)));
    }
}

TEST_CASE("symmetry of cycles and of k = 1") {
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= n / 2; ++k) CHECK(is_symmetric(xk_via_colorings(cycle_graph(n), k)));
    for (const auto& g : connected_graphs(5)) CHECK(is_symmetric(xk_via_colorings(g, 1)));
}

TEST_CASE("multiplicativity") {
    const Graph p2 = path_graph(2);
    CHECK(multiply(xk_via_colorings(p2, 1), xk_via_colorings(p2, 1)) == xk_via_colorings(disjoint_union(p2, p2), 1));
    const Graph c4 = cycle_graph(4);
    CHECK(multiply(xk_via_colorings(c4, 2), xk_via_colorings(p2, 2)) == xk_via_colorings(disjoint_union(c4, p2), 2));
}
