#include "kqsym/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kqsym/chromatic.hpp"
#include "kqsym/orient.hpp"
#include "kqsym/poset.hpp"
#include "kqsym/qsym.hpp"

namespace kqsym::verify {

namespace {

/// Accumulates many cases into one check line, keeping the first failure.
class Tally {
public:
    explicit Tally(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& what) {
        ++cases_;
        if (!ok && first_failure_.empty()) first_failure_ = what;
        if (!ok) ++failures_;
    }

    Check result() const {
        Check c{name_, failures_ == 0, std::to_string(cases_) + " cases"};
        if (failures_) c.detail += ", " + std::to_string(failures_) + " failed; first: " + first_failure_;
        return c;
    }

private:
    std::string name_;
    int cases_ = 0;
    int failures_ = 0;
    std::string first_failure_;
};

std::string describe(const Graph& g, int k) { return "graph6 " + to_graph6(g) + " k=" + std::to_string(k); }

Rational sign_power(int n) { return n % 2 ? Rational(-1) : Rational(1); }

/// Every naturally labelled poset on [n], generated from relation subsets of {i<j}.
std::vector<Poset> natural_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Poset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> rel;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((mask >> e) & 1u) rel.push_back(pairs[e]);
        Poset p = Poset::from_relations(n, rel);
        std::vector<std::uint64_t> key;
        for (int i = 1; i <= n; ++i) key.push_back(p.above_mask(i));
        if (seen.insert(key).second) out.push_back(p);
    }
    return out;
}

/// f is pi-compatible: weakly increasing along the word, strictly at ascents.
bool pi_compatible(const std::vector<int>& word, const std::vector<int>& f) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        const int a = f[static_cast<std::size_t>(word[i])], b = f[static_cast<std::size_t>(word[i + 1])];
        if (a > b || (word[i] < word[i + 1] && a == b)) return false;
    }
    return true;
}

std::vector<Graph> oracle_graphs(const Options& opt) {
    std::vector<Graph> graphs = corpus(opt.max_n);
    for (auto& g : random_connected_graphs(opt.random_n, opt.random_samples, opt.seed)) graphs.push_back(std::move(g));
    return graphs;
}

}  // namespace

std::vector<Graph> corpus(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : connected_graphs(n)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> random_connected_graphs(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Edge> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

std::vector<int> valid_ks(const Graph& g) {
    const auto gi = girth(g);
    const int top = gi ? *gi / 2 : 3;
    std::vector<int> ks;
    for (int k = 1; k <= top; ++k) ks.push_back(k);
    return ks;
}

std::vector<Check> oracle_equivalence(const Options& opt) {
    Tally exhaustive("oracle: l_to_m(orientation path) == colouring path, connected n<=" + std::to_string(opt.max_n));
    for (const auto& g : corpus(opt.max_n))
        for (int k : valid_ks(g))
            exhaustive.expect(l_to_m(xk_via_orientations(g, k, opt.limits)) == xk_via_colorings(g, k, opt.limits),
                              describe(g, k));
    Tally sampled("oracle: " + std::to_string(opt.random_samples) + " random connected graphs, n=" +
                  std::to_string(opt.random_n));
    for (const auto& g : random_connected_graphs(opt.random_n, opt.random_samples, opt.seed))
        for (int k : valid_ks(g))
            sampled.expect(l_to_m(xk_via_orientations(g, k, opt.limits)) == xk_via_colorings(g, k, opt.limits),
                           describe(g, k));
    return {exhaustive.result(), sampled.result()};
}

std::vector<Check> cycle_formula(const Options& opt) {
    std::vector<Check> out;
    for (int n = 3; n <= std::max(3, opt.max_n); ++n) {
        const std::string c = std::to_string(n);
        Tally t("cycle formula: X^2(C_" + c + ") = X(C_" + c + ") - " + std::to_string(2 * n) + " M_{1^" + c + "}");
        t.expect(xk_cycle_closed_form(n) == xk_via_colorings(cycle_graph(n), 2, opt.limits), "n=" + std::to_string(n));
        out.push_back(t.result());
    }
    return out;
}

std::vector<Check> cycle_symmetry(const Options& opt) {
    std::vector<Check> out;
    for (int n = 3; n <= std::max(3, opt.max_n); ++n) {
        Tally t("cycle symmetry: X^k(C_" + std::to_string(n) + ") symmetric for k=1.." + std::to_string(n / 2));
        for (int k = 1; k <= n / 2; ++k) {
            const auto witness = symmetry_witness(xk_via_colorings(cycle_graph(n), k, opt.limits));
            t.expect(!witness, "k=" + std::to_string(k) +
                                   (witness ? " witness " + to_string(witness->first) + " vs " + to_string(witness->second)
                                            : std::string()));
        }
        out.push_back(t.result());
    }
    return out;
}

std::vector<Check> bipartite_formula(const Options& opt) {
    std::vector<Check> out;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        Tally t("bipartite formula: X^2(K_{" + std::to_string(m) + "," + std::to_string(n) + "})");
        t.expect(xk_complete_bipartite_closed_form(m, n) ==
                     xk_via_colorings(complete_bipartite_graph(m, n), 2, opt.limits),
                 "closed form differs from brute force");
        out.push_back(t.result());
    }
    return out;
}

std::vector<Check> reciprocity(const Options& opt) {
    Tally pairs("reciprocity: (-1)^n chi^k(-lambda) == pair count, n<=" + std::to_string(opt.max_n) +
                ", lambda<=" + std::to_string(opt.max_lambda));
    Tally orientations("reciprocity: (-1)^n chi^k(-1) == number of k-balanced orientations");
    for (const auto& g : corpus(opt.max_n)) {
        for (int k : valid_ks(g)) {
            const RationalPolynomial chi = chi_k(g, k, ComputationPath::Colorings, opt.limits);
            const Rational sign = sign_power(g.vertex_count());
            for (int lambda = 1; lambda <= opt.max_lambda; ++lambda) {
                const Rational lhs = sign * evaluate(chi, -lambda);
                pairs.expect(lhs == Rational(reciprocity_pairs(g, k, lambda, opt.limits)),
                             describe(g, k) + " lambda=" + std::to_string(lambda));
            }
            orientations.expect(sign * evaluate(chi, -1) == Rational(count_k_balanced_orientations(g, k, opt.limits)),
                                describe(g, k));
        }
    }
    return {pairs.result(), orientations.result()};
}

std::vector<Check> integrality(const Options& opt) {
    Tally t("integrality: chi^2 integer iff forest or zero, connected n<=" + std::to_string(opt.max_n));
    for (const auto& g : corpus(opt.max_n)) {
        const RationalPolynomial chi = chi_k(g, 2, ComputationPath::Colorings, opt.limits);
        const IntegralityReport r = leading_coefficient_check(g, 2, opt.limits);
        t.expect(r.integer_coefficients == (g.is_forest() || chi.is_zero()), describe(g, 2));
    }
    Tally c4("integrality: leading coefficient of chi^2(C_4) is 2/3");
    c4.expect(leading_coefficient_check(cycle_graph(4), 2, opt.limits).leading_coefficient == Rational(2, 3),
              "leading coefficient");
    return {t.result(), c4.result()};
}

std::vector<Check> multiplicativity(const Options& opt) {
    std::vector<Graph> parts = corpus(3);
    parts.push_back(cycle_graph(4));
    parts.push_back(complete_bipartite_graph(2, 3));
    Tally t("multiplicativity: X^k(G+H) == X^k(G) X^k(H)");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i; j < parts.size(); ++j) {
            const Graph& g = parts[i];
            const Graph& h = parts[j];
            if (g.vertex_count() + h.vertex_count() > 8) continue;
            for (int k : {1, 2}) {
                const QSym lhs = xk_via_colorings(disjoint_union(g, h), k, opt.limits);
                const QSym rhs = multiply(xk_via_colorings(g, k, opt.limits), xk_via_colorings(h, k, opt.limits));
                t.expect(lhs == rhs, to_graph6(g) + " + " + to_graph6(h) + " k=" + std::to_string(k));
            }
        }
    }
    return {t.result()};
}

std::vector<Check> girth_vanishing(const Options& opt) {
    Tally t("girth vanishing: k > girth/2 gives zero on both paths");
    std::vector<Graph> graphs = corpus(opt.max_n);
    graphs.push_back(petersen_graph());
    for (const auto& g : graphs) {
        const auto gi = girth(g);
        if (!gi) continue;
        const int k = *gi / 2 + 1;
        if (g.vertex_count() <= 8) t.expect(xk_via_colorings(g, k, opt.limits).is_zero(), describe(g, k) + " colourings");
        t.expect(xk_via_orientations(g, k, opt.limits).is_zero(), describe(g, k) + " orientations");
    }
    return {t.result()};
}

std::vector<Check> l_positivity(const Options& opt) {
    Tally t("L-positivity: orientation path has nonnegative integer coefficients");
    for (const auto& g : oracle_graphs(opt)) {
        for (int k : valid_ks(g)) {
            bool ok = true;
            const QSym f = xk_via_orientations(g, k, opt.limits);
            for (const auto& [alpha, c] : f.terms())
                ok = ok && is_integer(c) && c > 0;
            t.expect(ok, describe(g, k));
        }
    }
    return {t.result()};
}

std::vector<Check> basis_round_trip(const Options& opt) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    Tally t("basis round trip: m_to_l . l_to_m and l_to_m . m_to_l are identities, degree<=6");
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            QSym f(n, Basis::Fundamental), g(n, Basis::Monomial);
            for (const auto& alpha : compositions_of(n)) {
                f.add(alpha, coeff(rng));
                g.add(alpha, coeff(rng));
            }
            t.expect(m_to_l(l_to_m(f)) == f, "L round trip degree " + std::to_string(n));
            t.expect(l_to_m(m_to_l(g)) == g, "M round trip degree " + std::to_string(n));
        }
    }
    return {t.result()};
}

std::vector<Check> order_reciprocity(const Options& opt) {
    const int max_size = std::min(opt.max_n, 5);
    Tally t("order-polynomial reciprocity: strict(P,-lambda) == (-1)^|P| order(P,lambda), |P|<=" +
            std::to_string(max_size));
    for (int n = 1; n <= max_size; ++n) {
        for (const auto& p : natural_posets(n)) {
            const RationalPolynomial strict = strict_order_polynomial(p);
            for (int lambda = 1; lambda <= opt.max_lambda; ++lambda)
                t.expect(evaluate(strict, -lambda) == sign_power(n) * Rational(order_polynomial(p, lambda)),
                         to_string(p) + " lambda=" + std::to_string(lambda));
        }
    }
    return {t.result()};
}

std::vector<Check> p_partition_decomposition(const Options& opt) {
    const int max_size = std::min(opt.max_n, 5);
    Tally t("P-partition decomposition: strict maps == sum over extensions of pi-compatible maps, |P|<=" +
            std::to_string(max_size));
    for (int n = 1; n <= max_size; ++n) {
        for (const auto& p : natural_posets(n)) {
            const auto extensions = linear_extensions(p);
            for (int lambda = 1; lambda <= opt.max_lambda; ++lambda) {
                std::uint64_t compatible = 0;
                std::vector<int> f(static_cast<std::size_t>(n) + 1, 1);
                while (true) {
                    for (const auto& w : extensions) compatible += pi_compatible(w, f) ? 1 : 0;
                    int v = n;
                    while (v >= 1 && f[static_cast<std::size_t>(v)] == lambda) f[static_cast<std::size_t>(v--)] = 1;
                    if (v < 1) break;
                    ++f[static_cast<std::size_t>(v)];
                }
                t.expect(compatible == strict_order_polynomial(p, lambda),
                         to_string(p) + " lambda=" + std::to_string(lambda));
            }
        }
    }
    return {t.result()};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "oracle",       "cycle-formula",     "cycle-symmetry", "bipartite",  "reciprocity",       "integrality",
        "multiplicativity", "girth",         "l-positivity",   "round-trip", "order-reciprocity", "p-partition"};
    return names;
}

std::vector<Check> run_suite(const std::string& name, const Options& opt) {
    using Suite = std::vector<Check> (*)(const Options&);
    static const std::vector<std::pair<std::string, Suite>> table = {
        {"oracle", oracle_equivalence},
        {"cycle-formula", cycle_formula},
        {"cycle-symmetry", cycle_symmetry},
        {"bipartite", bipartite_formula},
        {"reciprocity", reciprocity},
        {"integrality", integrality},
        {"multiplicativity", multiplicativity},
        {"girth", girth_vanishing},
        {"l-positivity", l_positivity},
        {"round-trip", basis_round_trip},
        {"order-reciprocity", order_reciprocity},
        {"p-partition", p_partition_decomposition},
    };
    if (name == "all") {
        std::vector<Check> all;
        for (const auto& [suite_name, suite] : table)
            for (auto& c : suite(opt)) all.push_back(std::move(c));
        return all;
    }
    for (const auto& [suite_name, suite] : table)
        if (suite_name == name) return suite(opt);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

}  // namespace kqsym::verify
