#include "kqsym/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace kqsym {

Graph Graph::from_edge_list(int n, const std::vector<Edge>& pairs) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, " +
                                    std::to_string(kMaxVertices) + "]");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : pairs) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} has an endpoint outside [1, " + std::to_string(n) + "]");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
        g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

std::vector<int> Graph::neighbours(int v) const {
    std::vector<int> out;
    for (std::uint64_t m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = std::uint64_t{1} << 1, frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n_;
}

bool Graph::is_forest() const {
    // A forest has exactly n - c edges, where c counts components.
    std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (auto [u, v] : edges_) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    const int shift = g.vertex_count();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edge_list(g.vertex_count() + h.vertex_count(), edges);
}

// --- graph6 ----------------------------------------------------------------

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    int acc = 0, bits = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(acc + 63);
                acc = bits = 0;
            }
        }
    }
    if (bits) out += static_cast<char>((acc << (6 - bits)) + 63);
    return out;
}

Graph from_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw std::invalid_argument("graph6: empty string");
    for (char c : s)
        if (c < 63 || c > 126) throw std::invalid_argument(std::string("graph6: invalid character '") + c + "'");
    std::size_t pos = 0;
    long n = 0;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~') throw std::invalid_argument("graph6: graph too large");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated vertex count");
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | (s[pos] - 63);
        if (n < 63) throw std::invalid_argument("graph6: non-minimal vertex count encoding");
    }
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("graph6: " + std::to_string(n) + " vertices exceeds the supported maximum");
    const long pairs = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
    if (s.size() != expected)
        throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " characters, got " +
                                    std::to_string(s.size()));
    std::vector<Edge> edges;
    long bit = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i, ++bit) {
            const int chunk = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (; bit % 6 != 0; ++bit) {
        const int chunk = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
        if ((chunk >> (5 - bit % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

// --- edge-list text ----------------------------------------------------------

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<long>> rows;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long> row;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw std::invalid_argument("edge list: non-integer token '" + tok + "'");
            row.push_back(v);
        }
        if (row.empty()) continue;
        if (row.size() != 2) throw std::invalid_argument("edge list: every line needs exactly two integers");
        rows.push_back(row);
    }
    if (rows.empty()) throw std::invalid_argument("edge list: missing 'n m' header");
    const long n = rows[0][0], m = rows[0][1];
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header value");
    if (static_cast<long>(rows.size()) - 1 != m)
        throw std::invalid_argument("edge list: header announces " + std::to_string(m) + " edges, found " +
                                    std::to_string(rows.size() - 1));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < rows.size(); ++i)
        edges.emplace_back(static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1]));
    if (n > Graph::kMaxVertices) throw std::invalid_argument("edge list: too many vertices");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// --- generators --------------------------------------------------------------

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite needs two positive part sizes");
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) edges.emplace_back(i, m + j);
    return Graph::from_edge_list(m + n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph grotzsch_graph() {
    std::vector<Edge> edges;
    auto next = [](int i) { return i % 5 + 1; };
    auto prev = [](int i) { return (i + 3) % 5 + 1; };
    for (int i = 1; i <= 5; ++i) {
        edges.emplace_back(i, next(i));
        edges.emplace_back(5 + i, prev(i));
        edges.emplace_back(5 + i, next(i));
        edges.emplace_back(5 + i, 11);
    }
    return Graph::from_edge_list(11, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i) {
        edges.emplace_back(i, i % 5 + 1);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 1) % 5 + 1);
    }
    return Graph::from_edge_list(10, edges);
}

Graph generate(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
                throw std::invalid_argument("generator '" + spec + "': parameters must be positive integers");
            params.push_back(std::stoi(item));
        }
    }
    auto expect = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("generator '" + name + "' takes " + std::to_string(count) + " parameter(s)");
    };
    if (name == "cycle") return expect(1), cycle_graph(params[0]);
    if (name == "path") return expect(1), path_graph(params[0]);
    if (name == "complete") return expect(1), complete_graph(params[0]);
    if (name == "complete_bipartite") return expect(2), complete_bipartite_graph(params[0], params[1]);
    if (name == "grotzsch") return expect(0), grotzsch_graph();
    if (name == "petersen") return expect(0), petersen_graph();
    throw std::invalid_argument("unknown generator '" + name + "'");
}

// --- cycles ------------------------------------------------------------------

namespace {

struct CycleSearch {
    const Graph& g;
    std::size_t cap;
    CycleList out;
    std::vector<int> path;
    std::uint64_t on_path = 0;

    void extend(int start) {
        const int v = path.back();
        for (int w : g.neighbours(v)) {
            if (w == start) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    if (out.size() >= cap)
                        throw ResourceError("cycle enumeration exceeded the cap of " + std::to_string(cap) +
                                            " cycles");
                    out.push_back(Cycle{path});
                }
                continue;
            }
            if (w < start || ((on_path >> w) & 1u)) continue;
            path.push_back(w);
            on_path |= std::uint64_t{1} << w;
            extend(start);
            on_path &= ~(std::uint64_t{1} << w);
            path.pop_back();
        }
    }
};

}  // namespace

CycleList simple_cycles(const Graph& g, std::size_t max_cycles) {
    CycleSearch search{g, max_cycles, {}, {}, 0};
    for (int s = 1; s <= g.vertex_count(); ++s) {
        search.path = {s};
        search.on_path = std::uint64_t{1} << s;
        search.extend(s);
    }
    return std::move(search.out);
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (int root = 1; root <= n; ++root) {
        std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1), parent(static_cast<std::size_t>(n) + 1, 0);
        std::queue<int> q;
        dist[static_cast<std::size_t>(root)] = 0;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : g.neighbours(u)) {
                auto du = dist[static_cast<std::size_t>(u)];
                auto& dw = dist[static_cast<std::size_t>(w)];
                if (dw < 0) {
                    dw = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    const int len = du + dw + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    if (best == 0) return std::nullopt;
    return best;
}

// --- small-graph corpus --------------------------------------------------------

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

}  // namespace

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
    const auto pairs = all_pairs(n);
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((mask >> e) & 1u) edges.push_back(pairs[e]);
    return Graph::from_edge_list(n, edges);
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("connected_graphs supports 1 <= n <= 7");
    const auto pairs = all_pairs(n);
    const std::size_t m = pairs.size();
    std::vector<int> index(static_cast<std::size_t>((n + 1) * (n + 1)), -1);
    for (std::size_t e = 0; e < m; ++e) {
        auto [i, j] = pairs[e];
        index[static_cast<std::size_t>(i * (n + 1) + j)] = index[static_cast<std::size_t>(j * (n + 1) + i)] =
            static_cast<int>(e);
    }
    // For every relabelling, where each pair index goes.
    std::vector<std::vector<int>> images;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> image(m);
        for (std::size_t e = 0; e < m; ++e) {
            auto [i, j] = pairs[e];
            image[e] = index[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)] * (n + 1) +
                                                      perm[static_cast<std::size_t>(j - 1)])];
        }
        images.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<bool> seen(std::size_t{1} << m, false);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (seen[mask]) continue;
        for (const auto& image : images) {
            std::uint64_t relabelled = 0;
            for (std::size_t e = 0; e < m; ++e)
                if ((mask >> e) & 1u) relabelled |= std::uint64_t{1} << image[e];
            seen[relabelled] = true;
        }
        Graph g = graph_from_pair_mask(n, mask);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace kqsym
