#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "kqsym/qsym.hpp"

namespace kqsym {

/// Finite strict partial order on {1..n}, stored transitively closed as one
/// "strictly above" bitmask per element (bits 1..n).
class Poset {
public:
    Poset() = default;
    explicit Poset(int n);
    /// Transitive closure of the given relations i < j. Throws std::invalid_argument
    /// if the relations contain a cycle or an out-of-range element.
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& relations);

    int size() const { return n_; }
    bool less(int i, int j) const { return (above_[static_cast<std::size_t>(i)] >> j) & 1u; }
    std::uint64_t above_mask(int i) const { return above_[static_cast<std::size_t>(i)]; }
    std::uint64_t below_mask(int i) const;

    /// Cover relations (i, j), sorted.
    std::vector<std::pair<int, int>> covers() const;
    bool is_naturally_labelled() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> above_;
};

Poset chain(int n);
Poset antichain(int n);

struct Relabelling {
    Poset poset;
    /// new_label[v] for v in 1..n (index 0 unused).
    std::vector<int> new_label;
};

/// Relabels along the lexicographically least linear extension, which makes
/// the result naturally labelled and the choice canonical.
Relabelling natural_relabelling(const Poset& p);

/// Calls visit(word) for each linear extension in lexicographic order, where
/// word lists the elements 1..n. Requires a naturally labelled poset.
void for_each_linear_extension(const Poset& p, const std::function<void(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> linear_extensions(const Poset& p);

/// K_P = sum over linear extensions pi of L_{co(pi)}, relabelling naturally first.
QSym kp(const Poset& p);

/// Number of maps f: P -> [lambda] with i < j implying f(i) < f(j).
std::uint64_t strict_order_polynomial(const Poset& p, int lambda);
/// Number of maps f: P -> [lambda] with i < j implying f(i) <= f(j).
std::uint64_t order_polynomial(const Poset& p, int lambda);

/// Interpolated through lambda = 1..n+1.
RationalPolynomial strict_order_polynomial(const Poset& p);
RationalPolynomial order_polynomial(const Poset& p);

/// "n: 1<2 1<3 2<4" (cover relations).
std::string to_string(const Poset& p);

}  // namespace kqsym
