#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kqsym {

/// An ordered list of positive parts. The empty composition has weight 0 and
/// is the multiplicative unit of the quasisymmetric functions.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    /// S_alpha as a bitmask: bit (s-1) is set for every interior partial sum s.
    std::uint64_t descent_mask() const;

    /// Product of the factorials of the parts.
    std::uint64_t part_factorial() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Subset of [n-1], strictly increasing.
struct SubsetOfRange {
    int n = 0;
    std::vector<int> elements;

    friend bool operator==(const SubsetOfRange&, const SubsetOfRange&) = default;
};

SubsetOfRange subset_of(const Composition& alpha);
Composition composition_of(const SubsetOfRange& s);
Composition composition_of(const std::vector<int>& elements, int n);
/// Inverse of Composition::descent_mask for weight n.
Composition composition_from_mask(std::uint64_t mask, int n);

/// Non-strict refinement: S_alpha is a subset of S_beta. Throws on unequal weights.
bool refines(const Composition& alpha, const Composition& beta);

/// co(asc(word)); `word` must be a permutation of 1..n.
Composition ascent_composition(const std::vector<int>& word);

/// Multiset of compositions gamma with M_alpha * M_beta = sum M_gamma.
std::vector<Composition> quasi_shuffles(const Composition& alpha, const Composition& beta);

/// All compositions of n ordered by ascending descent mask; 2^(n-1) entries.
std::vector<Composition> compositions_of(int n);

/// "[3,2,1,2]"; the empty composition prints as "[]".
std::string to_string(const Composition& alpha);
/// Inverse of to_string. Throws std::invalid_argument.
Composition parse_composition(const std::string& text);

}  // namespace kqsym
