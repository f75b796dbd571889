#include "kqsym/poset.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace kqsym {

Poset::Poset(int n) : n_(n), above_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 0 || n > 63) throw std::invalid_argument("poset size outside [0, 63]");
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& relations) {
    Poset p(n);
    for (auto [i, j] : relations) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::invalid_argument("relation " + std::to_string(i) + "<" + std::to_string(j) + " out of range");
        p.above_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
    for (int mid = 1; mid <= n; ++mid)
        for (int i = 1; i <= n; ++i)
            if ((p.above_[static_cast<std::size_t>(i)] >> mid) & 1u)
                p.above_[static_cast<std::size_t>(i)] |= p.above_[static_cast<std::size_t>(mid)];
    for (int i = 1; i <= n; ++i)
        if (p.less(i, i)) throw std::invalid_argument("relations contain a directed cycle through " + std::to_string(i));
    return p;
}

std::uint64_t Poset::below_mask(int i) const {
    std::uint64_t m = 0;
    for (int j = 1; j <= n_; ++j)
        if (less(j, i)) m |= std::uint64_t{1} << j;
    return m;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (less(i, j) && (above_mask(i) & below_mask(j)) == 0) out.emplace_back(i, j);
    return out;
}

bool Poset::is_naturally_labelled() const {
    for (int i = 1; i <= n_; ++i)
        if (above_mask(i) & ((std::uint64_t{2} << i) - 1)) return false;
    return true;
}

Poset chain(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i < n; ++i) rel.emplace_back(i, i + 1);
    return Poset::from_relations(n, rel);
}

Poset antichain(int n) { return Poset(n); }

Relabelling natural_relabelling(const Poset& p) {
    const int n = p.size();
    std::vector<std::uint64_t> below(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) below[static_cast<std::size_t>(i)] = p.below_mask(i);
    std::vector<int> new_label(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t placed = 0;
    for (int next = 1; next <= n; ++next) {
        for (int v = 1; v <= n; ++v) {
            if (((placed >> v) & 1u) || (below[static_cast<std::size_t>(v)] & ~placed)) continue;
            new_label[static_cast<std::size_t>(v)] = next;
            placed |= std::uint64_t{1} << v;
            break;
        }
    }
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (p.less(i, j)) rel.emplace_back(new_label[static_cast<std::size_t>(i)], new_label[static_cast<std::size_t>(j)]);
    return {Poset::from_relations(n, rel), std::move(new_label)};
}

namespace {

struct ExtensionWalk {
    std::vector<std::uint64_t> below;
    const std::function<void(const std::vector<int>&)>& visit;
    std::vector<int> word;
    int n;

    void step(std::uint64_t placed) {
        if (static_cast<int>(word.size()) == n) {
            visit(word);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (((placed >> v) & 1u) || (below[static_cast<std::size_t>(v)] & ~placed)) continue;
            word.push_back(v);
            step(placed | (std::uint64_t{1} << v));
            word.pop_back();
        }
    }
};

}  // namespace

void for_each_linear_extension(const Poset& p, const std::function<void(const std::vector<int>&)>& visit) {
    if (!p.is_naturally_labelled())
        throw std::invalid_argument("linear_extensions requires a naturally labelled poset; relabel first");
    ExtensionWalk walk{{}, visit, {}, p.size()};
    walk.below.resize(static_cast<std::size_t>(p.size()) + 1);
    for (int i = 1; i <= p.size(); ++i) walk.below[static_cast<std::size_t>(i)] = p.below_mask(i);
    walk.word.reserve(static_cast<std::size_t>(p.size()));
    walk.step(0);
}

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
    std::vector<std::vector<int>> out;
    for_each_linear_extension(p, [&](const std::vector<int>& w) { out.push_back(w); });
    return out;
}

QSym kp(const Poset& p) {
    const int n = p.size();
    const Poset natural = p.is_naturally_labelled() ? p : natural_relabelling(p).poset;
    std::map<std::uint64_t, std::uint64_t> tally;  // ascent mask -> count
    for_each_linear_extension(natural, [&](const std::vector<int>& w) {
        std::uint64_t mask = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i) + 1]) mask |= std::uint64_t{1} << i;
        ++tally[mask];
    });
    QSym f(n, Basis::Fundamental);
    for (auto [mask, count] : tally) f.add(composition_from_mask(mask, n), Rational(count));
    return f;
}

namespace {

// Assigns values along a linear extension; every predecessor is already fixed.
std::uint64_t count_maps(const Poset& p, int lambda, bool strict) {
    const int n = p.size();
    if (n == 0) return 1;
    if (lambda <= 0) return 0;
    std::vector<int> order;
    std::uint64_t placed = 0;
    while (static_cast<int>(order.size()) < n) {
        for (int v = 1; v <= n; ++v) {
            if (((placed >> v) & 1u) || (p.below_mask(v) & ~placed)) continue;
            order.push_back(v);
            placed |= std::uint64_t{1} << v;
            break;
        }
    }
    std::vector<std::uint64_t> below(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) below[static_cast<std::size_t>(i)] = p.below_mask(i);
    std::vector<int> value(static_cast<std::size_t>(n) + 1, 0);

    std::function<std::uint64_t(std::size_t)> rec = [&](std::size_t idx) -> std::uint64_t {
        if (idx == order.size()) return 1;
        const int v = order[idx];
        int lo = 1;
        for (std::uint64_t m = below[static_cast<std::size_t>(v)]; m; m &= m - 1) {
            const int bound = value[static_cast<std::size_t>(std::countr_zero(m))] + (strict ? 1 : 0);
            if (bound > lo) lo = bound;
        }
        std::uint64_t total = 0;
        for (int c = lo; c <= lambda; ++c) {
            value[static_cast<std::size_t>(v)] = c;
            total += rec(idx + 1);
        }
        return total;
    };
    return rec(0);
}

RationalPolynomial interpolate_counts(const Poset& p, bool strict) {
    std::vector<std::pair<Rational, Rational>> points;
    for (int lambda = 1; lambda <= p.size() + 1; ++lambda)
        points.emplace_back(Rational(lambda), Rational(count_maps(p, lambda, strict)));
    return interpolate(points);
}

}  // namespace

std::uint64_t strict_order_polynomial(const Poset& p, int lambda) { return count_maps(p, lambda, true); }
std::uint64_t order_polynomial(const Poset& p, int lambda) { return count_maps(p, lambda, false); }
RationalPolynomial strict_order_polynomial(const Poset& p) { return interpolate_counts(p, true); }
RationalPolynomial order_polynomial(const Poset& p) { return interpolate_counts(p, false); }

std::string to_string(const Poset& p) {
    std::string out = std::to_string(p.size()) + ":";
    for (auto [i, j] : p.covers()) out += " " + std::to_string(i) + "<" + std::to_string(j);
    return out;
}

}  // namespace kqsym
