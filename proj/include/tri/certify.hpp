#pragma once

// Executable lower-bound pipeline for triangle counts of multigraphs.
// Given a threshold t, split on the cover cost of the light-pair subgraph,
// then on how many support edges of the reduced graph lie in triangles,
// and fall back to a Cauchy-Schwarz bound over an optimal cover. Every
// intermediate quantity is recorded so a certificate re-verifies from
// scratch. Integer arithmetic only.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tri/extremal.hpp"
#include "tri/multigraph.hpp"

namespace tri {

enum class CertCase { dense_threshold_graph, many_support_triangles, cauchy_schwarz };

inline std::string to_string(CertCase c) {
    switch (c) {
        case CertCase::dense_threshold_graph: return "dense_threshold_graph";
        case CertCase::many_support_triangles: return "many_support_triangles";
        case CertCase::cauchy_schwarz: return "cauchy_schwarz";
    }
    throw std::invalid_argument("unknown case");
}

inline CertCase cert_case_from_string(const std::string& s) {
    if (s == "dense_threshold_graph") return CertCase::dense_threshold_graph;
    if (s == "many_support_triangles") return CertCase::many_support_triangles;
    if (s == "cauchy_schwarz") return CertCase::cauchy_schwarz;
    throw std::invalid_argument("unknown case: " + s);
}

struct Certificate {
    CertCase case_taken = CertCase::dense_threshold_graph;
    u64 t = 1;     // threshold on pair multiplicities
    u64 R = 0;     // removal distance of the input graph
    u128 bound = 0;

    // witnesses
    std::vector<std::pair<int, int>> base_cover;       // optimal cover of G realizing R
    u64 threshold_cover_cost = 0;                      // cover cost of the light subgraph T
    std::vector<std::pair<int, int>> threshold_cover;  // the cover E of T (empty in case 1)
    u128 threshold_triangles = 0;                      // triangles of T (case 1 bound)
    u64 deleted_weight = 0;                            // weight removed from G to form G'
    u64 support_tri_edges = 0;                         // edges of T' lying in T'-triangles
    u128 gprime_triangles = 0;                         // triangles of G' (case 2 bound)
    std::vector<std::pair<int, int>> cover_pairs;      // B: optimal cover of G'
    std::vector<u64> weights;                          // m_{u,v} per pair of B
    std::vector<u128> p2;                              // p2 counts in G' per pair of B
};

// ceil((sum of weights)^2 / b)
inline u128 cauchy_schwarz_bound(std::span<const u64> weights, u64 b) {
    if (weights.empty()) throw std::invalid_argument("empty weight list");
    if (b < weights.size()) throw std::invalid_argument("b smaller than weight count");
    u128 sum = 0;
    for (u64 w : weights) sum = checked_add(sum, w);
    return ceil_div(checked_mul(sum, sum), b);
}

namespace detail {

inline Multigraph delete_pairs(const Multigraph& g, const std::vector<std::pair<int, int>>& pairs,
                               u64* deleted_weight = nullptr) {
    Multigraph h = g;
    u64 deleted = 0;
    for (auto [u, v] : pairs) {
        deleted = checked_add_u64(deleted, h.multiplicity(u, v));
        h.set_multiplicity(u, v, 0);
    }
    if (deleted_weight) *deleted_weight = deleted;
    return h;
}

inline u64 edges_in_triangles(const SimpleGraph& g) {
    auto tris = support_triangles(g.to_multigraph());
    std::vector<std::pair<int, int>> es;
    for (const auto& t : tris) {
        es.emplace_back(t[0], t[1]);
        es.emplace_back(t[0], t[2]);
        es.emplace_back(t[1], t[2]);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return u64(es.size());
}

// Case-1 rule: cover cost of T at least R / (2t), i.e. 2 t cost >= R.
inline bool dense_rule(u64 threshold_cover_cost, u64 t, u64 R) {
    return checked_mul(u128(2) * t, threshold_cover_cost) >= u128(R);
}

// Case-2 rule: edges-in-triangles count e at least R / (2 sqrt(t)),
// i.e. 4 t e^2 >= R^2.
inline bool many_rule(u64 e, u64 t, u64 R) {
    return checked_mul(checked_mul(u128(4), t), checked_mul(u128(e), e)) >=
           checked_mul(u128(R), R);
}

}  // namespace detail

inline Certificate certify(const Multigraph& g, u64 t) {
    if (t < 1) throw std::invalid_argument("threshold must be positive");
    Certificate cert;
    cert.t = t;

    CoverSolution base = removal_distance(g, SolveMode::exact);
    cert.R = base.cost;
    cert.base_cover = base.pairs;
    if (cert.R == 0) {
        cert.case_taken = CertCase::dense_threshold_graph;
        cert.bound = 0;
        return cert;
    }

    SimpleGraph thr = threshold_subgraph(g, t);
    CoverSolution thr_cover = removal_distance(thr.to_multigraph(), SolveMode::exact);
    cert.threshold_cover_cost = thr_cover.cost;
    if (detail::dense_rule(thr_cover.cost, t, cert.R)) {
        cert.case_taken = CertCase::dense_threshold_graph;
        cert.threshold_triangles = count_triangles(thr);
        cert.bound = cert.threshold_triangles;
        return cert;
    }

    cert.threshold_cover = thr_cover.pairs;
    Multigraph gp = detail::delete_pairs(g, thr_cover.pairs, &cert.deleted_weight);

    SimpleGraph underlying_gp = underlying(gp);
    cert.support_tri_edges = detail::edges_in_triangles(underlying_gp);
    if (detail::many_rule(cert.support_tri_edges, t, cert.R)) {
        cert.case_taken = CertCase::many_support_triangles;
        cert.gprime_triangles = count_triangles(gp);
        cert.bound = cert.gprime_triangles;
        return cert;
    }

    CoverSolution gp_cover = removal_distance(gp, SolveMode::exact);
    cert.case_taken = CertCase::cauchy_schwarz;
    cert.cover_pairs = gp_cover.pairs;
    cert.weights = gp_cover.weights;
    u128 sum_sq = 0;
    for (std::size_t i = 0; i < gp_cover.pairs.size(); ++i) {
        auto [u, v] = gp_cover.pairs[i];
        cert.p2.push_back(p2_count(gp, u, v));
        sum_sq = checked_add(sum_sq, checked_mul(u128(gp_cover.weights[i]), gp_cover.weights[i]));
    }
    u128 cs = cauchy_schwarz_bound(cert.weights, u64(cert.cover_pairs.size()));
    cert.bound = std::max(sum_sq, cs);
    return cert;
}

struct RecheckResult {
    bool ok = true;
    std::string failure;  // first failing check, empty when ok

    static RecheckResult fail(std::string what) { return {false, std::move(what)}; }
    static RecheckResult pass() { return {}; }
};

// Re-derives every intermediate quantity from the graph and the
// certificate's recorded choices; confirms every inequality and the final
// soundness bound.
inline RecheckResult recheck(const Certificate& cert, const Multigraph& g) {
    if (cert.t < 1) return RecheckResult::fail("threshold not positive");

    if (!is_triangle_cover(g, cert.base_cover))
        return RecheckResult::fail("base cover does not make the graph triangle-free");
    u64 base_cost = 0;
    for (auto [u, v] : cert.base_cover)
        base_cost = checked_add_u64(base_cost, g.multiplicity(u, v));
    if (base_cost != cert.R) return RecheckResult::fail("base cover cost does not equal R");
    if (removal_distance(g, SolveMode::exact).cost != cert.R)
        return RecheckResult::fail("R is not the minimum removal distance");

    u128 total = count_triangles(g);
    if (cert.bound > total) return RecheckResult::fail("bound exceeds the triangle count");

    if (cert.R == 0) {
        if (cert.case_taken != CertCase::dense_threshold_graph || cert.bound != 0)
            return RecheckResult::fail("degenerate certificate must be case 1 with bound 0");
        return RecheckResult::pass();
    }

    SimpleGraph thr = threshold_subgraph(g, cert.t);
    CoverSolution thr_cover = removal_distance(thr.to_multigraph(), SolveMode::exact);
    if (thr_cover.cost != cert.threshold_cover_cost)
        return RecheckResult::fail("threshold cover cost mismatch");

    if (detail::dense_rule(cert.threshold_cover_cost, cert.t, cert.R)) {
        if (cert.case_taken != CertCase::dense_threshold_graph)
            return RecheckResult::fail("case-1 rule fired but case differs");
        if (cert.bound != count_triangles(thr))
            return RecheckResult::fail("case-1 bound is not the threshold-graph triangle count");
        return RecheckResult::pass();
    }
    if (cert.case_taken == CertCase::dense_threshold_graph)
        return RecheckResult::fail("case 1 recorded but its rule does not fire");

    if (!is_triangle_cover(thr.to_multigraph(), cert.threshold_cover))
        return RecheckResult::fail("recorded E does not cover the threshold graph");
    u64 e_cost = u64(cert.threshold_cover.size());
    if (e_cost != cert.threshold_cover_cost)
        return RecheckResult::fail("recorded E size differs from threshold cover cost");

    u64 deleted = 0;
    Multigraph gp = detail::delete_pairs(g, cert.threshold_cover, &deleted);
    if (deleted != cert.deleted_weight) return RecheckResult::fail("deleted weight mismatch");
    if (u128(2) * deleted >= u128(cert.R))
        return RecheckResult::fail("deleted weight not below R/2");

    u64 e_tri = detail::edges_in_triangles(underlying(gp));
    if (e_tri != cert.support_tri_edges)
        return RecheckResult::fail("edges-in-triangles count mismatch");

    if (detail::many_rule(e_tri, cert.t, cert.R)) {
        if (cert.case_taken != CertCase::many_support_triangles)
            return RecheckResult::fail("case-2 rule fired but case differs");
        if (cert.bound != count_triangles(gp))
            return RecheckResult::fail("case-2 bound is not the reduced graph's triangle count");
        return RecheckResult::pass();
    }
    if (cert.case_taken != CertCase::cauchy_schwarz)
        return RecheckResult::fail("case-3 reached but case differs");

    if (cert.cover_pairs.empty()) return RecheckResult::fail("empty cover in case 3");
    if (cert.weights.size() != cert.cover_pairs.size() || cert.p2.size() != cert.cover_pairs.size())
        return RecheckResult::fail("witness arrays have mismatched lengths");
    if (!is_triangle_cover(gp, cert.cover_pairs))
        return RecheckResult::fail("recorded cover does not make the reduced graph triangle-free");
    u64 sum_w = 0;
    u128 sum_sq = 0;
    for (std::size_t i = 0; i < cert.cover_pairs.size(); ++i) {
        auto [u, v] = cert.cover_pairs[i];
        if (cert.weights[i] != gp.multiplicity(u, v))
            return RecheckResult::fail("recorded weight differs from pair multiplicity");
        u128 paths = p2_count(gp, u, v);
        if (cert.p2[i] != paths) return RecheckResult::fail("recorded p2 count mismatch");
        if (u128(cert.weights[i]) > paths)
            return RecheckResult::fail("exchange inequality m <= p2 violated");
        sum_w = checked_add_u64(sum_w, cert.weights[i]);
        sum_sq = checked_add(sum_sq, checked_mul(u128(cert.weights[i]), cert.weights[i]));
    }
    if (removal_distance(gp, SolveMode::exact).cost != sum_w)
        return RecheckResult::fail("case-3 cover is not minimum");
    if (u128(2) * sum_w < u128(cert.R))
        return RecheckResult::fail("case-3 cover cost below R/2");
    u128 cs = cauchy_schwarz_bound(cert.weights, u64(cert.cover_pairs.size()));
    if (cert.bound != std::max(sum_sq, cs))
        return RecheckResult::fail("case-3 bound formula mismatch");
    return RecheckResult::pass();
}

// JSON round-trip. Counts are decimal strings so the schema is exact at
// any magnitude.
inline nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["case"] = to_string(c.case_taken);
    j["t"] = c.t;
    j["R"] = c.R;
    j["bound"] = to_string_u128(c.bound);
    auto pairs_json = [](const std::vector<std::pair<int, int>>& ps) {
        nlohmann::json a = nlohmann::json::array();
        for (auto [u, v] : ps) a.push_back({u, v});
        return a;
    };
    j["base_cover"] = pairs_json(c.base_cover);
    j["threshold_cover_cost"] = c.threshold_cover_cost;
    j["threshold_cover"] = pairs_json(c.threshold_cover);
    j["threshold_triangles"] = to_string_u128(c.threshold_triangles);
    j["deleted_weight"] = c.deleted_weight;
    j["support_tri_edges"] = c.support_tri_edges;
    j["gprime_triangles"] = to_string_u128(c.gprime_triangles);
    j["cover_pairs"] = pairs_json(c.cover_pairs);
    j["weights"] = c.weights;
    nlohmann::json p2 = nlohmann::json::array();
    for (u128 v : c.p2) p2.push_back(to_string_u128(v));
    j["p2"] = p2;
    return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    c.case_taken = cert_case_from_string(j.at("case").get<std::string>());
    c.t = j.at("t").get<u64>();
    c.R = j.at("R").get<u64>();
    c.bound = parse_u128(j.at("bound").get<std::string>());
    auto pairs_from = [](const nlohmann::json& a) {
        std::vector<std::pair<int, int>> ps;
        for (const auto& e : a) ps.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return ps;
    };
    c.base_cover = pairs_from(j.at("base_cover"));
    c.threshold_cover_cost = j.at("threshold_cover_cost").get<u64>();
    c.threshold_cover = pairs_from(j.at("threshold_cover"));
    c.threshold_triangles = parse_u128(j.at("threshold_triangles").get<std::string>());
    c.deleted_weight = j.at("deleted_weight").get<u64>();
    c.support_tri_edges = j.at("support_tri_edges").get<u64>();
    c.gprime_triangles = parse_u128(j.at("gprime_triangles").get<std::string>());
    c.cover_pairs = pairs_from(j.at("cover_pairs"));
    c.weights = j.at("weights").get<std::vector<u64>>();
    for (const auto& e : j.at("p2")) c.p2.push_back(parse_u128(e.get<std::string>()));
    return c;
}

}  // namespace tri
