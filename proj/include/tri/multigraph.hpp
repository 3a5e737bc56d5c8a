#pragma once

// Loopless multigraph with 64-bit edge multiplicities and exact triangle
// counting. A triangle is an unordered vertex triple weighted by the
// product of its three multiplicities; the total count is the sum of those
// products over all triples.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tri/int128.hpp"

namespace tri {

class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : adj_(std::size_t(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int order() const { return int(adj_.size()); }

    u64 multiplicity(int u, int v) const {
        check_pair(u, v);
        const auto& row = adj_[std::size_t(u)];
        auto it = std::lower_bound(row.begin(), row.end(), v, cmp_neighbor);
        return (it != row.end() && it->first == v) ? it->second : 0;
    }

    void set_multiplicity(int u, int v, u64 m) {
        check_pair(u, v);
        set_directed(u, v, m);
        set_directed(v, u, m);
    }

    void add_multiplicity(int u, int v, u64 m) {
        set_multiplicity(u, v, checked_add_u64(multiplicity(u, v), m));
    }

    const std::vector<std::pair<int, u64>>& neighbors(int v) const {
        if (v < 0 || v >= order()) throw std::out_of_range("vertex out of range");
        return adj_[std::size_t(v)];
    }

    // Support pairs (u, v, m) with u < v, m >= 1, lexicographic.
    std::vector<std::tuple<int, int, u64>> support_edges() const {
        std::vector<std::tuple<int, int, u64>> out;
        for (int u = 0; u < order(); ++u)
            for (const auto& [v, m] : adj_[std::size_t(u)])
                if (u < v) out.emplace_back(u, v, m);
        return out;
    }

    std::size_t support_size() const {
        std::size_t e = 0;
        for (const auto& row : adj_) e += row.size();
        return e / 2;
    }

    u64 total_multiplicity() const {
        u64 total = 0;
        for (const auto& row : adj_)
            for (const auto& [v, m] : row) total = checked_add_u64(total, m);
        return total / 2;
    }

    bool operator==(const Multigraph& other) const { return adj_ == other.adj_; }

private:
    static bool cmp_neighbor(const std::pair<int, u64>& a, int v) { return a.first < v; }

    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw std::out_of_range("vertex out of range");
        if (u == v) throw std::invalid_argument("self-loops not allowed");
    }

    void set_directed(int u, int v, u64 m) {
        auto& row = adj_[std::size_t(u)];
        auto it = std::lower_bound(row.begin(), row.end(), v, cmp_neighbor);
        if (it != row.end() && it->first == v) {
            if (m == 0) row.erase(it);
            else it->second = m;
        } else if (m != 0) {
            row.insert(it, {v, m});
        }
    }

    std::vector<std::vector<std::pair<int, u64>>> adj_;
};

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(std::size_t(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int order() const { return int(adj_.size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= order() || v >= order() || u == v) return false;
        const auto& row = adj_[std::size_t(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw std::out_of_range("vertex out of range");
        if (u == v) throw std::invalid_argument("self-loops not allowed");
        insert_sorted(adj_[std::size_t(u)], v);
        insert_sorted(adj_[std::size_t(v)], u);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[std::size_t(v)]; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[std::size_t(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (const auto& row : adj_) e += row.size();
        return e / 2;
    }

    Multigraph to_multigraph() const {
        Multigraph g(order());
        for (auto [u, v] : edges()) g.set_multiplicity(u, v, 1);
        return g;
    }

    bool operator==(const SimpleGraph& other) const { return adj_ == other.adj_; }

private:
    static void insert_sorted(std::vector<int>& row, int v) {
        auto it = std::lower_bound(row.begin(), row.end(), v);
        if (it == row.end() || *it != v) row.insert(it, v);
    }

    std::vector<std::vector<int>> adj_;
};

enum class CountAlgo { enumerate, trace };

namespace detail {

// Edge iterator over the support: for each support pair (u, v) with u < v,
// intersect the neighbor lists for w > v and add the multiplicity product.
inline u128 count_triangles_enumerate(const Multigraph& g) {
    u128 total = 0;
    for (int u = 0; u < g.order(); ++u) {
        const auto& nu = g.neighbors(u);
        for (const auto& [v, muv] : nu) {
            if (v <= u) continue;
            const auto& nv = g.neighbors(v);
            auto iu = nu.begin();
            auto iv = nv.begin();
            while (iu != nu.end() && iv != nv.end()) {
                if (iu->first < iv->first) ++iu;
                else if (iv->first < iu->first) ++iv;
                else {
                    if (iu->first > v) {
                        u128 prod = checked_mul(checked_mul(u128(muv), iu->second), iv->second);
                        total = checked_add(total, prod);
                    }
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    return total;
}

// trace(M^3) / 6 on a dense multiplicity matrix. Guarded to n <= 2000.
inline u128 count_triangles_trace(const Multigraph& g) {
    const int n = g.order();
    if (n > 2000) throw std::invalid_argument("trace algorithm guard: n > 2000");
    std::vector<std::vector<u64>> m(std::size_t(n), std::vector<u64>(std::size_t(n), 0));
    for (int u = 0; u < n; ++u)
        for (const auto& [v, w] : g.neighbors(u)) m[std::size_t(u)][std::size_t(v)] = w;
    u128 trace = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m[std::size_t(j)][std::size_t(i)] == 0) continue;
            u128 sq = 0;  // (M^2)[i][j]
            for (int k = 0; k < n; ++k)
                sq = checked_add(sq, checked_mul(u128(m[std::size_t(i)][std::size_t(k)]),
                                                 m[std::size_t(k)][std::size_t(j)]));
            trace = checked_add(trace, checked_mul(sq, u128(m[std::size_t(j)][std::size_t(i)])));
        }
    }
    if (trace % 6 != 0) throw std::logic_error("trace not divisible by 6");
    return trace / 6;
}

}  // namespace detail

inline u128 count_triangles(const Multigraph& g, CountAlgo algo = CountAlgo::enumerate) {
    switch (algo) {
        case CountAlgo::enumerate: return detail::count_triangles_enumerate(g);
        case CountAlgo::trace: return detail::count_triangles_trace(g);
    }
    throw std::invalid_argument("unknown algorithm");
}

inline u128 count_triangles(const SimpleGraph& g) {
    return detail::count_triangles_enumerate(g.to_multigraph());
}

// Every multiplicity scaled by k; vertex set unchanged.
inline Multigraph blow_up(const Multigraph& g, u64 k) {
    if (k < 1) throw std::invalid_argument("blow-up factor must be positive");
    Multigraph out(g.order());
    for (auto [u, v, m] : g.support_edges()) out.set_multiplicity(u, v, checked_mul_u64(m, k));
    return out;
}

// Keeps exactly the pairs with multiplicity in [1, t].
inline SimpleGraph threshold_subgraph(const Multigraph& g, u64 t) {
    if (t < 1) throw std::invalid_argument("threshold must be positive");
    SimpleGraph out(g.order());
    for (auto [u, v, m] : g.support_edges())
        if (m <= t) out.add_edge(u, v);
    return out;
}

// Edge iff multiplicity >= 1.
inline SimpleGraph underlying(const Multigraph& g) {
    SimpleGraph out(g.order());
    for (auto [u, v, m] : g.support_edges()) out.add_edge(u, v);
    return out;
}

// Paths of length exactly 2 between u and v, counted with multiplicity.
inline u128 p2_count(const Multigraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("p2_count requires distinct vertices");
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    u128 total = 0;
    auto iu = nu.begin();
    auto iv = nv.begin();
    while (iu != nu.end() && iv != nv.end()) {
        if (iu->first < iv->first) ++iu;
        else if (iv->first < iu->first) ++iv;
        else {
            if (iu->first != u && iu->first != v)
                total = checked_add(total, checked_mul(u128(iu->second), iv->second));
            ++iu;
            ++iv;
        }
    }
    return total;
}

// Edge-list file: line 1 "n e", then e lines "u v m" with 0-indexed u < v.
inline void write_multigraph(std::ostream& os, const Multigraph& g) {
    auto edges = g.support_edges();
    os << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v, m] : edges) os << u << ' ' << v << ' ' << m << '\n';
}

inline Multigraph read_multigraph(std::istream& is) {
    int n = 0;
    std::size_t e = 0;
    if (!(is >> n >> e)) throw std::runtime_error("bad graph file header");
    Multigraph g(n);
    for (std::size_t i = 0; i < e; ++i) {
        int u = 0, v = 0;
        u64 m = 0;
        if (!(is >> u >> v >> m)) throw std::runtime_error("truncated graph file");
        if (u >= v) throw std::runtime_error("graph file requires u < v");
        if (m < 1) throw std::runtime_error("graph file requires multiplicity >= 1");
        if (g.multiplicity(u, v) != 0) throw std::runtime_error("duplicate pair in graph file");
        g.set_multiplicity(u, v, m);
    }
    return g;
}

inline void write_multigraph_file(const std::string& path, const Multigraph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    write_multigraph(f, g);
}

inline Multigraph read_multigraph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_multigraph(f);
}

}  // namespace tri
