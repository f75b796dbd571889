#include "kqsym/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kqsym {

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        weight_ += p;
    }
}

std::uint64_t Composition::descent_mask() const {
    std::uint64_t mask = 0;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        sum += parts_[i];
        mask |= std::uint64_t{1} << (sum - 1);
    }
    return mask;
}

std::uint64_t Composition::part_factorial() const {
    std::uint64_t f = 1;
    for (int p : parts_)
        for (int i = 2; i <= p; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

SubsetOfRange subset_of(const Composition& alpha) {
    SubsetOfRange s{alpha.weight(), {}};
    int sum = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        sum += alpha[i];
        s.elements.push_back(sum);
    }
    return s;
}

Composition composition_of(const std::vector<int>& elements, int n) {
    if (n < 1) throw std::invalid_argument("composition_of: n must be positive");
    std::vector<int> parts;
    int prev = 0;
    for (int s : elements) {
        if (s <= prev || s >= n)
            throw std::invalid_argument("composition_of: subset must be strictly increasing inside [1, n-1]");
        parts.push_back(s - prev);
        prev = s;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition composition_of(const SubsetOfRange& s) { return composition_of(s.elements, s.n); }

Composition composition_from_mask(std::uint64_t mask, int n) {
    if (n == 0) return {};
    std::vector<int> parts;
    int prev = 0;
    for (int s = 1; s < n; ++s) {
        if ((mask >> (s - 1)) & 1u) {
            parts.push_back(s - prev);
            prev = s;
        }
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

bool refines(const Composition& alpha, const Composition& beta) {
    if (alpha.weight() != beta.weight()) throw std::invalid_argument("refines: compositions of different weight");
    std::uint64_t a = alpha.descent_mask();
    return (a & beta.descent_mask()) == a;
}

Composition ascent_composition(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("ascent_composition: not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (n == 0) return {};
    std::vector<int> ascents;
    for (int i = 0; i + 1 < n; ++i)
        if (word[static_cast<std::size_t>(i)] < word[static_cast<std::size_t>(i) + 1]) ascents.push_back(i + 1);
    return composition_of(ascents, n);
}

namespace {

void quasi_shuffle_into(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                        std::vector<int>& prefix, std::vector<Composition>& out) {
    if (i == a.size() || j == b.size()) {
        std::vector<int> parts = prefix;
        parts.insert(parts.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
        parts.insert(parts.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
        out.emplace_back(std::move(parts));
        return;
    }
    prefix.push_back(a[i]);
    quasi_shuffle_into(a, i + 1, b, j, prefix, out);
    prefix.back() = b[j];
    quasi_shuffle_into(a, i, b, j + 1, prefix, out);
    prefix.back() = a[i] + b[j];
    quasi_shuffle_into(a, i + 1, b, j + 1, prefix, out);
    prefix.pop_back();
}

}  // namespace

std::vector<Composition> quasi_shuffles(const Composition& alpha, const Composition& beta) {
    std::vector<Composition> out;
    std::vector<int> prefix;
    quasi_shuffle_into(alpha.parts(), 0, beta.parts(), 0, prefix, out);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 1) throw std::invalid_argument("compositions_of: n must be positive");
    if (n > 31) throw std::invalid_argument("compositions_of: n too large to enumerate");
    std::vector<Composition> out;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(composition_from_mask(mask, n));
    return out;
}

std::string to_string(const Composition& alpha) {
    std::string s = "[";
    for (int i = 0; i < alpha.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(alpha[i]);
    }
    return s + "]";
}

Composition parse_composition(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("composition must be bracketed: '" + text + "'");
    std::vector<int> parts;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad composition part in '" + text + "'");
        parts.push_back(std::stoi(item));
    }
    if (!t.substr(1, t.size() - 2).empty() && t[t.size() - 2] == ',')
        throw std::invalid_argument("trailing comma in '" + text + "'");
    return Composition(std::move(parts));
}

}  // namespace kqsym
