#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "tri/counterexample.hpp"

using namespace tri;

TEST_CASE("builder re-verifies and meets its predictions at n=5, k=2") {
    Counterexample ce = build_counterexample(5, SetMethod::exact, 2);
    u64 ns = 5 * u64(ce.set.elements.size());
    CHECK(ce.predicted_triangles == u128(ns) * 8);
    CHECK(ce.predicted_removal == ns * 2);
    CHECK(count_triangles(ce.graph) == ce.predicted_triangles);
    CHECK(removal_distance(ce.graph, SolveMode::exact).cost == ce.predicted_removal);
}

TEST_CASE("default blow-up factor is floor(n/|S|), floored at 1") {
    Counterexample ce = build_counterexample(10, SetMethod::exact);
    CHECK(ce.k == 10 / u64(ce.set.elements.size()));
    Counterexample tiny = build_counterexample(1, SetMethod::exact);
    CHECK(tiny.k == 1);
}

TEST_CASE("counterexample identity: triangles = removal * k^2") {
    for (int n : {3, 6, 9}) {
        for (u64 k : {1, 2, 3}) {
            Counterexample ce = build_counterexample(n, SetMethod::exact, k);
            u128 triangles = count_triangles(ce.graph);
            CHECK(triangles == ce.predicted_removal * u128(k) * k);
            CHECK(triangles == u128(n) * ce.set.elements.size() * k * k * k);
        }
    }
}

TEST_CASE("structural removal distance agrees with the exact solver") {
    for (int n : {4, 8, 12}) {
        Counterexample ce = build_counterexample(n, SetMethod::exact, 2);
        CHECK(structural_removal_distance(ce) == removal_distance(ce.graph, SolveMode::exact).cost);
    }
}

TEST_CASE("behrend-backed builder verifies structurally at n=1000") {
    Counterexample ce = build_counterexample(1000, SetMethod::behrend);
    CHECK(structural_removal_distance(ce) == ce.predicted_removal);
    CHECK(count_triangles(ce.graph) == ce.predicted_triangles);
    // n^{2+o(1)} shape: triangles / n^2 = k^2 * (|S| k / n) <= k^2
    u128 k2 = u128(ce.k) * ce.k;
    CHECK(ce.predicted_triangles <= k2 * u128(1000) * 1000);
}

TEST_CASE("sweep over exact sets satisfies both exact formulas per row") {
    std::vector<int> ns{4, 5, 6, 7, 8, 9, 10, 11, 12};
    auto rows = sweep(ns, SetMethod::exact, std::nullopt, 4);
    REQUIRE(rows.size() == ns.size());
    for (const auto& r : rows) {
        CHECK(r.error.empty());
        CHECK(r.triangles == u128(r.n) * r.set_size * r.k * r.k * r.k);
        CHECK(r.removal == u64(r.n) * r.set_size * r.k);
        CHECK(r.vertices == 6 * r.n);
        CHECK(r.removal_exact);
    }
}

TEST_CASE("empty sweep writes only the header") {
    std::stringstream ss;
    write_sweep_csv(ss, sweep({}, SetMethod::exact));
    std::string line;
    std::getline(ss, line);
    CHECK(line.rfind("# trisweep", 0) == 0);
    std::getline(ss, line);
    CHECK(line.rfind("n,set_size", 0) == 0);
    CHECK(!std::getline(ss, line));
}

TEST_CASE("sweep rows come back sorted by n regardless of input order") {
    auto rows = sweep({7, 4, 5}, SetMethod::exact, std::nullopt, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 4);
    CHECK(rows[1].n == 5);
    CHECK(rows[2].n == 7);
}

TEST_CASE("per-row failures are recorded without aborting the sweep") {
    auto rows = sweep({5, 31}, SetMethod::exact);  // 31 exceeds the exact-set guard
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].error.empty());
    CHECK(!rows[1].error.empty());
}

TEST_CASE("default threshold rule") {
    CHECK(default_threshold(2) == 1);
    CHECK(default_threshold(4) == 1);
    CHECK(default_threshold(1000) == 16);
}
