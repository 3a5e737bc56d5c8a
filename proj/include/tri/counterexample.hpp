#pragma once

// Blow-up counterexample family: take a 3AP-free S in [1, n], build the
// tripartite triangle-packing graph, replace every edge by k parallel
// copies (k defaults to floor(n/|S|), floored at 1). The result has
// exactly n|S|k^3 triangles and removal distance exactly n|S|k.

#include <atomic>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tri/ap3.hpp"
#include "tri/certify.hpp"
#include "tri/extremal.hpp"
#include "tri/multigraph.hpp"
#include "tri/rs.hpp"

namespace tri {

enum class SetMethod { behrend, exact, greedy };

inline std::string to_string(SetMethod m) {
    switch (m) {
        case SetMethod::behrend: return "behrend";
        case SetMethod::exact: return "exact";
        case SetMethod::greedy: return "greedy";
    }
    throw std::invalid_argument("unknown method");
}

struct Counterexample {
    Multigraph graph;
    RsGraph base;
    Ap3Set set;
    u64 k = 1;
    u128 predicted_triangles = 0;  // n |S| k^3
    u64 predicted_removal = 0;     // n |S| k
};

inline Ap3Set make_set(u64 n, SetMethod method) {
    switch (method) {
        case SetMethod::behrend: return behrend_construct(n);
        case SetMethod::exact: return exact_max_ap3(n);
        case SetMethod::greedy: return greedy_ap3(n);
    }
    throw std::invalid_argument("unknown method");
}

// Always re-verifies both the set and the built graph before blowing up.
inline Counterexample build_counterexample(int n, SetMethod method,
                                           std::optional<u64> k = std::nullopt) {
    Counterexample ce;
    ce.set = make_set(u64(n), method);
    if (!verify_3ap_free(ce.set)) throw std::logic_error("set generator produced a 3AP");
    ce.base = build_rs(n, ce.set);
    RsReport rep = verify_rs(ce.base);
    if (!rep.all_clear()) throw std::logic_error("base graph failed structural verification");

    u64 s = u64(ce.set.elements.size());
    ce.k = k.value_or(std::max<u64>(1, u64(n) / s));
    if (ce.k < 1) throw std::invalid_argument("blow-up factor must be positive");
    ce.graph = blow_up(to_multigraph(ce.base), ce.k);
    u64 ns = checked_mul_u64(u64(n), s);
    ce.predicted_removal = checked_mul_u64(ns, ce.k);
    ce.predicted_triangles =
        checked_mul(checked_mul(u128(ns), ce.k), checked_mul(u128(ce.k), ce.k));
    return ce;
}

// Removal distance without the exact solver, valid for verified blow-ups:
// the intended triangles are a packing of size n|S|k (pair-disjoint, each
// pair at capacity k) and taking the A-B pair of every intended triangle is
// a cover of equal cost, since the support triangles are exactly the
// intended ones. Both facts are checked, not assumed.
inline u64 structural_removal_distance(const Counterexample& ce) {
    RsReport rep = verify_rs(ce.base);
    if (!rep.all_clear()) throw std::logic_error("structural argument needs a verified base graph");
    std::vector<std::pair<int, int>> chosen;
    for (const auto& t : ce.base.intended) chosen.emplace_back(t[0], t[1]);
    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end())
        throw std::logic_error("cover pairs not distinct");
    u64 cost = 0;
    for (auto [u, v] : chosen) {
        u64 m = ce.graph.multiplicity(u, v);
        if (m != ce.k) throw std::logic_error("blow-up multiplicity mismatch");
        cost = checked_add_u64(cost, m);
    }
    // packing lower bound n|S|k meets this cover cost
    if (cost != ce.predicted_removal) throw std::logic_error("cover cost differs from prediction");
    return cost;
}

// Default threshold rule for sweeps: ceil(log2 log2 n)^2, floored at 1.
inline u64 default_threshold(u64 n) {
    if (n < 3) return 1;
    double v = std::ceil(std::log2(std::log2(double(n))));
    u64 t = u64(std::max(1.0, v));
    return t * t;
}

struct SweepRow {
    int n = 0;
    u64 set_size = 0;
    u64 k = 0;
    int vertices = 0;
    u128 triangles = 0;
    u64 removal = 0;
    bool removal_exact = false;   // exact solver vs structural argument
    double ratio = 0.0;           // triangles / removal^2
    double stmt_estimate = 0.0;   // n^2 2^sqrt(8 log2 n)
    double proof_estimate = 0.0;  // n^2 2^(2 sqrt(8 log2 n))
    bool certified = false;
    u64 cert_t = 0;
    u128 cert_bound = 0;
    u64 cert_r = 0;
    std::string error;
};

inline SweepRow sweep_row(int n, SetMethod method, std::optional<u64> t_override) {
    SweepRow row;
    row.n = n;
    try {
        Counterexample ce = build_counterexample(n, method);
        row.set_size = u64(ce.set.elements.size());
        row.k = ce.k;
        row.vertices = ce.graph.order();
        row.triangles = count_triangles(ce.graph);
        if (row.triangles != ce.predicted_triangles)
            throw std::logic_error("triangle count differs from prediction");
        std::size_t tris = ce.base.intended.size();
        if (tris <= kExactTriangleGuard) {
            CoverSolution cover = removal_distance(ce.graph, SolveMode::exact);
            row.removal = cover.cost;
            row.removal_exact = true;
        } else {
            row.removal = structural_removal_distance(ce);
        }
        if (row.removal != ce.predicted_removal)
            throw std::logic_error("removal distance differs from prediction");
        row.ratio = double(row.triangles) / (double(row.removal) * double(row.removal));
        double root = std::sqrt(8.0 * std::log2(double(n)));
        row.stmt_estimate = double(n) * double(n) * std::pow(2.0, root);
        row.proof_estimate = double(n) * double(n) * std::pow(2.0, 2.0 * root);
        if (tris <= kExactTriangleGuard) {
            u64 t = t_override.value_or(default_threshold(u64(n)));
            Certificate cert = certify(ce.graph, t);
            row.certified = true;
            row.cert_t = t;
            row.cert_bound = cert.bound;
            row.cert_r = cert.R;
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

inline std::vector<SweepRow> sweep(std::vector<int> ns, SetMethod method,
                                   std::optional<u64> t_override = std::nullopt,
                                   unsigned workers = 1) {
    std::sort(ns.begin(), ns.end());
    std::vector<SweepRow> rows(ns.size());
    if (workers <= 1 || ns.size() <= 1) {
        for (std::size_t i = 0; i < ns.size(); ++i) rows[i] = sweep_row(ns[i], method, t_override);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < ns.size(); i = next.fetch_add(1))
            rows[i] = sweep_row(ns[i], method, t_override);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, ns.size()); ++w)
        pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return rows;
}

inline constexpr const char* kSweepCsvVersion = "trisweep-csv-v1";

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "# " << kSweepCsvVersion << '\n';
    os << "n,set_size,k,vertices,triangles,removal,removal_exact,ratio,"
          "stmt_estimate,proof_estimate,cert_t,cert_bound,cert_R,error\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.set_size << ',' << r.k << ',' << r.vertices << ','
           << to_string_u128(r.triangles) << ',' << r.removal << ',' << (r.removal_exact ? 1 : 0)
           << ',' << r.ratio << ',' << r.stmt_estimate << ',' << r.proof_estimate << ',';
        if (r.certified)
            os << r.cert_t << ',' << to_string_u128(r.cert_bound) << ',' << r.cert_r;
        else
            os << ",,";
        os << ',' << r.error << '\n';
    }
}

}  // namespace tri
