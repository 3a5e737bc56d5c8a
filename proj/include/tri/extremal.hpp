#pragma once

// Triangle-removal distance and edge-disjoint triangle packing on
// multigraphs. A multigraph is triangle-free iff every support triangle has
// a fully emptied pair (partial emptying leaves the multiplicity product
// positive), so the removal distance equals the minimum weighted triangle
// cover of the support graph with pair weights mult(u, v). See
// docs/notes.md for the reduction lemma.

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "tri/multigraph.hpp"

namespace tri {

inline constexpr std::size_t kExactTriangleGuard = 5000;

// Support triangles: vertex triples u < v < w with all three pairs present,
// lexicographic order.
inline std::vector<std::array<int, 3>> support_triangles(const Multigraph& g) {
    std::vector<std::array<int, 3>> out;
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
                    if (iu->first > v) out.push_back({u, v, iu->first});
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct CoverSolution {
    std::vector<std::pair<int, int>> pairs;  // fully emptied pairs, lex order
    std::vector<u64> weights;                // mult(u, v) per chosen pair
    u64 cost = 0;                            // sum of weights
    bool optimal = false;
};

struct PackingSolution {
    std::vector<std::pair<std::array<int, 3>, u64>> triangles;  // (triple, copies)
    std::map<std::pair<int, int>, u64> usage;                   // pair -> copies using it
    u64 count = 0;                                              // total packed triangles
    bool optimal = false;
};

enum class SolveMode { exact, greedy };

namespace detail {

// Shared instance view: pairs that occur in at least one support triangle.
struct CoverInstance {
    std::vector<std::pair<int, int>> pairs;       // lex order
    std::vector<u64> weight;                      // per pair id
    std::vector<std::array<int, 3>> tri_pairs;    // triangle -> 3 pair ids, ascending

    explicit CoverInstance(const Multigraph& g) {
        auto tris = support_triangles(g);
        std::map<std::pair<int, int>, int> id;
        for (const auto& t : tris) {
            id.emplace(std::pair<int, int>{t[0], t[1]}, 0);
            id.emplace(std::pair<int, int>{t[0], t[2]}, 0);
            id.emplace(std::pair<int, int>{t[1], t[2]}, 0);
        }
        for (auto& [p, pid] : id) {
            pid = int(pairs.size());
            pairs.push_back(p);
            weight.push_back(g.multiplicity(p.first, p.second));
        }
        for (const auto& t : tris) {
            std::array<int, 3> ids = {id[{t[0], t[1]}], id[{t[0], t[2]}], id[{t[1], t[2]}]};
            std::sort(ids.begin(), ids.end());
            tri_pairs.push_back(ids);
        }
    }
};

inline std::vector<int> greedy_cover_ids(const CoverInstance& inst) {
    const std::size_t np = inst.pairs.size();
    std::vector<char> emptied(np, 0);
    std::vector<char> alive(inst.tri_pairs.size(), 1);
    std::vector<int> chosen;
    std::size_t alive_count = inst.tri_pairs.size();
    while (alive_count > 0) {
        std::vector<u64> hits(np, 0);
        for (std::size_t t = 0; t < inst.tri_pairs.size(); ++t)
            if (alive[t])
                for (int pid : inst.tri_pairs[t]) ++hits[std::size_t(pid)];
        // max hits/weight, tie lowest weight, tie lex pair (== lowest id)
        int best = -1;
        for (std::size_t p = 0; p < np; ++p) {
            if (emptied[p] || hits[p] == 0) continue;
            if (best < 0) { best = int(p); continue; }
            u64 hb = hits[std::size_t(best)], wb = inst.weight[std::size_t(best)];
            u64 hp = hits[p], wp = inst.weight[p];
            u128 lhs = u128(hp) * wb, rhs = u128(hb) * wp;
            if (lhs > rhs || (lhs == rhs && wp < wb)) best = int(p);
        }
        emptied[std::size_t(best)] = 1;
        chosen.push_back(best);
        for (std::size_t t = 0; t < inst.tri_pairs.size(); ++t) {
            if (!alive[t]) continue;
            for (int pid : inst.tri_pairs[t])
                if (pid == best) {
                    alive[t] = 0;
                    --alive_count;
                    break;
                }
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// Exact minimum weighted triangle cover. Branch on the three pairs of an
// uncovered triangle with maximum minimum pair weight; later branches
// forbid the earlier pairs. Lower bound from a greedy pair-disjoint
// selection of uncovered triangles.
class CoverSearch {
public:
    explicit CoverSearch(const CoverInstance& inst) : inst_(inst) {}

    std::vector<int> solve() {
        const std::size_t np = inst_.pairs.size();
        emptied_.assign(np, 0);
        forbidden_.assign(np, 0);
        auto greedy = greedy_cover_ids(inst_);
        best_set_ = greedy;
        best_cost_ = 0;
        for (int p : greedy) best_cost_ = checked_add_u64(best_cost_, inst_.weight[std::size_t(p)]);
        cur_.clear();
        dfs(0);
        std::sort(best_set_.begin(), best_set_.end());
        return best_set_;
    }

private:
    static constexpr u64 kInf = std::numeric_limits<u64>::max();

    // Smallest price a cover must still pay: greedily select uncovered
    // triangles with pairwise disjoint pair sets; each contributes the
    // minimum weight over its non-forbidden pairs.
    u64 lower_bound(std::vector<char>& used) const {
        std::fill(used.begin(), used.end(), 0);
        u64 lb = 0;
        for (const auto& t : inst_.tri_pairs) {
            bool covered = false, overlap = false;
            u64 cheapest = kInf;
            for (int pid : t) {
                if (emptied_[std::size_t(pid)]) { covered = true; break; }
                if (used[std::size_t(pid)]) overlap = true;
                if (!forbidden_[std::size_t(pid)])
                    cheapest = std::min(cheapest, inst_.weight[std::size_t(pid)]);
            }
            if (covered || overlap) continue;
            if (cheapest == kInf) return kInf;  // all pairs forbidden, branch infeasible
            lb = checked_add_u64(lb, cheapest);
            for (int pid : t) used[std::size_t(pid)] = 1;
        }
        return lb;
    }

    void dfs(u64 cost) {
        // pick uncovered triangle with maximum min pair weight, tie by order
        int pick = -1;
        u64 pick_key = 0;
        for (std::size_t t = 0; t < inst_.tri_pairs.size(); ++t) {
            bool covered = false;
            u64 mn = kInf;
            for (int pid : inst_.tri_pairs[t]) {
                if (emptied_[std::size_t(pid)]) { covered = true; break; }
                mn = std::min(mn, inst_.weight[std::size_t(pid)]);
            }
            if (covered) continue;
            if (pick < 0 || mn > pick_key) {
                pick = int(t);
                pick_key = mn;
            }
        }
        if (pick < 0) {
            if (cost < best_cost_) {
                best_cost_ = cost;
                best_set_ = cur_;
            }
            return;
        }
        std::vector<char> used(inst_.pairs.size(), 0);
        std::vector<int> newly_forbidden;
        for (int pid : inst_.tri_pairs[std::size_t(pick)]) {
            if (!forbidden_[std::size_t(pid)]) {
                u64 branch_cost = checked_add_u64(cost, inst_.weight[std::size_t(pid)]);
                if (branch_cost < best_cost_) {
                    emptied_[std::size_t(pid)] = 1;
                    cur_.push_back(pid);
                    u64 lb = lower_bound(used);
                    if (lb != kInf && checked_add_u64(branch_cost, lb) < best_cost_)
                        dfs(branch_cost);
                    cur_.pop_back();
                    emptied_[std::size_t(pid)] = 0;
                }
            }
            forbidden_[std::size_t(pid)] = 1;
            newly_forbidden.push_back(pid);
        }
        for (int pid : newly_forbidden) forbidden_[std::size_t(pid)] = 0;
    }

    const CoverInstance& inst_;
    std::vector<char> emptied_, forbidden_;
    std::vector<int> cur_, best_set_;
    u64 best_cost_ = 0;
};

inline CoverSolution make_cover_solution(const CoverInstance& inst, const std::vector<int>& ids,
                                         bool optimal) {
    CoverSolution sol;
    sol.optimal = optimal;
    for (int pid : ids) {
        sol.pairs.push_back(inst.pairs[std::size_t(pid)]);
        sol.weights.push_back(inst.weight[std::size_t(pid)]);
        sol.cost = checked_add_u64(sol.cost, inst.weight[std::size_t(pid)]);
    }
    return sol;
}

}  // namespace detail

// Minimum (exact) or heuristic (greedy) total number of parallel edges whose
// deletion destroys every triangle.
inline CoverSolution removal_distance(const Multigraph& g, SolveMode mode = SolveMode::exact) {
    detail::CoverInstance inst(g);
    if (mode == SolveMode::exact && inst.tri_pairs.size() > kExactTriangleGuard)
        throw std::invalid_argument("instance too large for exact mode (" +
                                    std::to_string(inst.tri_pairs.size()) +
                                    " support triangles > " + std::to_string(kExactTriangleGuard) +
                                    "); use greedy");
    std::vector<int> ids;
    if (mode == SolveMode::exact) {
        detail::CoverSearch search(inst);
        ids = search.solve();
    } else {
        ids = detail::greedy_cover_ids(inst);
    }
    return detail::make_cover_solution(inst, ids, mode == SolveMode::exact);
}

// True iff deleting the given pairs leaves the multigraph triangle-free.
inline bool is_triangle_cover(const Multigraph& g, const std::vector<std::pair<int, int>>& pairs) {
    Multigraph h = g;
    for (auto [u, v] : pairs) h.set_multiplicity(u, v, 0);
    return support_triangles(h).empty();
}

namespace detail {

struct PackingInstance {
    std::vector<std::array<int, 3>> tris;                 // lex order
    std::map<std::pair<int, int>, u64> capacity;          // pair -> mult

    explicit PackingInstance(const Multigraph& g) : tris(support_triangles(g)) {
        for (const auto& t : tris) {
            capacity[{t[0], t[1]}] = g.multiplicity(t[0], t[1]);
            capacity[{t[0], t[2]}] = g.multiplicity(t[0], t[2]);
            capacity[{t[1], t[2]}] = g.multiplicity(t[1], t[2]);
        }
    }

    std::array<std::pair<int, int>, 3> tri_edges(std::size_t t) const {
        const auto& tr = tris[t];
        return {std::pair<int, int>{tr[0], tr[1]}, {tr[0], tr[2]}, {tr[1], tr[2]}};
    }
};

class PackingSearch {
public:
    explicit PackingSearch(PackingInstance& inst) : inst_(inst) {}

    std::vector<u64> solve() {
        cur_.assign(inst_.tris.size(), 0);
        best_ = greedy_counts(inst_);
        best_count_ = 0;
        for (u64 c : best_) best_count_ = checked_add_u64(best_count_, c);
        dfs(0, 0);
        return best_;
    }

    static std::vector<u64> greedy_counts(PackingInstance& inst) {
        auto cap = inst.capacity;
        std::vector<u64> counts(inst.tris.size(), 0);
        for (std::size_t t = 0; t < inst.tris.size(); ++t) {
            u64 fit = std::numeric_limits<u64>::max();
            for (auto e : inst.tri_edges(t)) fit = std::min(fit, cap[e]);
            counts[t] = fit;
            for (auto e : inst.tri_edges(t)) cap[e] -= fit;
        }
        return counts;
    }

private:
    u64 upper_bound(std::size_t from) const {
        // each packed triangle consumes one unit on each of its three pairs
        u64 per_tri = 0;
        for (std::size_t t = from; t < inst_.tris.size(); ++t) {
            u64 fit = std::numeric_limits<u64>::max();
            for (auto e : inst_.tri_edges(t)) fit = std::min(fit, cap_.at(e));
            per_tri = checked_add_u64(per_tri, fit);
        }
        u64 total_cap = 0;
        for (const auto& [e, c] : cap_) total_cap = checked_add_u64(total_cap, c);
        return std::min(per_tri, total_cap / 3);
    }

    void dfs(std::size_t t, u64 count) {
        if (t == 0) cap_ = inst_.capacity;
        if (t == inst_.tris.size()) {
            if (count > best_count_) {
                best_count_ = count;
                best_ = cur_;
            }
            return;
        }
        if (checked_add_u64(count, upper_bound(t)) <= best_count_) return;
        u64 fit = std::numeric_limits<u64>::max();
        for (auto e : inst_.tri_edges(t)) fit = std::min(fit, cap_.at(e));
        for (u64 x = fit + 1; x-- > 0;) {
            for (auto e : inst_.tri_edges(t)) cap_.at(e) -= x;
            cur_[t] = x;
            dfs(t + 1, checked_add_u64(count, x));
            for (auto e : inst_.tri_edges(t)) cap_.at(e) += x;
        }
        cur_[t] = 0;
    }

    PackingInstance& inst_;
    std::map<std::pair<int, int>, u64> cap_;
    std::vector<u64> cur_, best_;
    u64 best_count_ = 0;
};

inline PackingSolution make_packing_solution(const PackingInstance& inst,
                                             const std::vector<u64>& counts, bool optimal) {
    PackingSolution sol;
    sol.optimal = optimal;
    for (std::size_t t = 0; t < inst.tris.size(); ++t) {
        if (counts[t] == 0) continue;
        sol.triangles.emplace_back(inst.tris[t], counts[t]);
        sol.count = checked_add_u64(sol.count, counts[t]);
        const auto& tr = inst.tris[t];
        sol.usage[{tr[0], tr[1]}] += counts[t];
        sol.usage[{tr[0], tr[2]}] += counts[t];
        sol.usage[{tr[1], tr[2]}] += counts[t];
    }
    return sol;
}

}  // namespace detail

// Maximum-cardinality (exact) or maximal (greedy, lex scan) multiset of
// triangles with per-pair usage bounded by the multiplicity.
inline PackingSolution max_packing(const Multigraph& g, SolveMode mode = SolveMode::exact) {
    detail::PackingInstance inst(g);
    if (mode == SolveMode::exact && inst.tris.size() > kExactTriangleGuard)
        throw std::invalid_argument("instance too large for exact mode (" +
                                    std::to_string(inst.tris.size()) + " support triangles > " +
                                    std::to_string(kExactTriangleGuard) + "); use greedy");
    std::vector<u64> counts;
    if (mode == SolveMode::exact) {
        detail::PackingSearch search(inst);
        counts = search.solve();
    } else {
        counts = detail::PackingSearch::greedy_counts(inst);
    }
    return detail::make_packing_solution(inst, counts, mode == SolveMode::exact);
}

}  // namespace tri
