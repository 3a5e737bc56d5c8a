#pragma once

// Tripartite triangle-packing graph built from a 3AP-free set: parts A, B, C
// of sizes n, 2n, 3n, one triangle {A_i, B_{i+s}, C_{i+2s}} per (i, s).
// When the set is 3AP-free these n|S| triangles partition the edge set and
// the graph has no other triangles.

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <stdexcept>
#include <vector>

#include "tri/ap3.hpp"
#include "tri/multigraph.hpp"

namespace tri {

struct RsGraph {
    int n = 0;
    std::vector<u64> set_elements;                 // the S the graph was built from
    SimpleGraph graph;                             // 6n vertices
    std::vector<std::array<int, 3>> intended;      // global-id triples {a, b, c}, sorted

    // Global vertex ids: A_i -> i-1, B_j -> n+j-1, C_k -> 3n+k-1 (1-based part indices).
    int a_vertex(int i) const { return i - 1; }
    int b_vertex(int j) const { return n + j - 1; }
    int c_vertex(int k) const { return 3 * n + k - 1; }
};

inline RsGraph build_rs(int n, const Ap3Set& s) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_well_formed(s);
    for (u64 e : s.elements)
        if (e > u64(n))
            throw std::invalid_argument("set element exceeds n; C indices would overflow");

    RsGraph rs;
    rs.n = n;
    rs.set_elements = s.elements;
    rs.graph = SimpleGraph(6 * n);
    for (int i = 1; i <= n; ++i) {
        for (u64 sv : s.elements) {
            int a = rs.a_vertex(i);
            int b = rs.b_vertex(i + int(sv));
            int c = rs.c_vertex(i + 2 * int(sv));
            rs.graph.add_edge(a, b);
            rs.graph.add_edge(b, c);
            rs.graph.add_edge(a, c);
            rs.intended.push_back({a, b, c});
        }
    }
    std::sort(rs.intended.begin(), rs.intended.end());
    return rs;
}

// Full enumeration of the graph's triangles. Only A-B-C triples can close
// a triangle, so scan b in adj(a) within B and c in adj(b) within C.
inline std::vector<std::array<int, 3>> enumerate_rs_triangles(const RsGraph& rs) {
    const int n = rs.n;
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < n; ++a) {
        for (int b : rs.graph.neighbors(a)) {
            if (b < n || b >= 3 * n) continue;
            for (int c : rs.graph.neighbors(b)) {
                if (c < 3 * n) continue;
                if (rs.graph.has_edge(a, c)) out.push_back({a, b, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct RsReport {
    bool edge_disjoint = false;      // every edge in exactly one intended triangle
    bool edge_count_ok = false;      // |E| == 3 n |S|
    std::vector<std::array<int, 3>> extra_triangles;  // triangles not intended, sorted
    u128 triangle_count = 0;         // total triangles of the graph

    bool all_clear() const { return edge_disjoint && edge_count_ok && extra_triangles.empty(); }
};

inline RsReport verify_rs(const RsGraph& rs) {
    RsReport rep;

    std::size_t expected_edges = 3 * std::size_t(rs.n) * rs.set_elements.size();
    rep.edge_count_ok = rs.graph.edge_count() == expected_edges;

    // Edge disjointness: count how many intended triangles use each edge.
    std::map<std::pair<int, int>, int> uses;
    for (const auto& t : rs.intended) {
        ++uses[{t[0], t[1]}];
        ++uses[{t[1], t[2]}];
        ++uses[{t[0], t[2]}];
    }
    rep.edge_disjoint = true;
    for (const auto& [e, c] : uses)
        if (c != 1) rep.edge_disjoint = false;
    if (uses.size() != rs.graph.edge_count()) rep.edge_disjoint = false;

    auto all = enumerate_rs_triangles(rs);
    rep.triangle_count = u128(all.size());
    std::set_difference(all.begin(), all.end(), rs.intended.begin(), rs.intended.end(),
                        std::back_inserter(rep.extra_triangles));
    return rep;
}

inline Multigraph to_multigraph(const RsGraph& rs) { return rs.graph.to_multigraph(); }

// Sidecar file: one intended triangle per line as three global vertex ids.
inline void write_intended_triangles(std::ostream& os, const RsGraph& rs) {
    for (const auto& t : rs.intended) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace tri
