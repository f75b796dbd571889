#pragma once

#include <cstdint>
#include <vector>

#include "kqsym/errors.hpp"
#include "kqsym/graph.hpp"
#include "kqsym/qsym.hpp"

namespace kqsym {

/// Definition-level path: bucket every k-balanced surjective colouring
/// [n] -> [l] by its composition type. Result is in the monomial basis.
QSym xk_via_colorings(const Graph& g, int k, const Limits& limits = {});

/// Sum of K_{P_O} over all k-balanced orientations O. Fundamental basis.
QSym xk_via_orientations(const Graph& g, int k, const Limits& limits = {});

/// X_{C_n} - 2n M_{1^n}.
QSym xk_cycle_closed_form(int n);

/// Coefficient of M_alpha in X^2_{K_{m,n}}: m!n!/alpha! * r(alpha; m, n), where
/// r counts segments alpha_i..alpha_j (i >= 2) once for each of m, n they sum to.
QSym xk_complete_bipartite_closed_form(int m, int n);
int bipartite_segment_count(const Composition& alpha, int m, int n);

enum class ComputationPath { Colorings, Orientations };

/// Specialization of X^k_G; defaults to the colouring path.
RationalPolynomial chi_k(const Graph& g, int k, ComputationPath path = ComputationPath::Colorings,
                         const Limits& limits = {});

struct IntegralityReport {
    Rational leading_coefficient;
    bool integer_coefficients = false;
};

IntegralityReport leading_coefficient_check(const Graph& g, int k, const Limits& limits = {});

/// Pairs (kappa, O): O k-balanced, kappa: V -> [lambda] with kappa(i) <= kappa(j)
/// for every arc i -> j. Counted directly from the arcs.
std::uint64_t reciprocity_pairs(const Graph& g, int k, int lambda, const Limits& limits = {});

/// Brute-force count of k-balanced colourings with colours {1..lambda}.
std::uint64_t count_k_balanced_colorings(const Graph& g, int k, int lambda, const Limits& limits = {});

}  // namespace kqsym
