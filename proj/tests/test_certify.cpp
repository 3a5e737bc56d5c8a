#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tri/certify.hpp"
#include "tri/counterexample.hpp"

using namespace tri;

namespace {

Multigraph blown_k3(u64 k) {
    Multigraph g(3);
    g.set_multiplicity(0, 1, k);
    g.set_multiplicity(1, 2, k);
    g.set_multiplicity(0, 2, k);
    return g;
}

}  // namespace

TEST_CASE("cauchy_schwarz_bound examples and property") {
    std::vector<u64> uniform{3, 3};
    CHECK(cauchy_schwarz_bound(uniform, 2) == 18);  // equality at uniform weights
    std::vector<u64> skew{1, 5};
    CHECK(cauchy_schwarz_bound(skew, 2) == 18);
    CHECK(u128(1) * 1 + u128(5) * 5 == 26);

    std::vector<u64> empty;
    CHECK_THROWS_AS(cauchy_schwarz_bound(empty, 1), std::invalid_argument);

    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> len(1, 10);
    std::uniform_int_distribution<u64> wd(1, 50);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<u64> ws(len(rng));
        for (auto& w : ws) w = wd(rng);
        u128 sum_sq = 0;
        for (u64 w : ws) sum_sq += u128(w) * w;
        CHECK(sum_sq >= cauchy_schwarz_bound(ws, u64(ws.size())));
    }
}

TEST_CASE("blown-up K3 at t=3 lands in the many-support-triangles case") {
    Certificate cert = certify(blown_k3(10), 3);
    CHECK(cert.R == 10);
    CHECK(cert.threshold_cover_cost == 0);  // every pair is heavier than t
    CHECK(cert.case_taken == CertCase::many_support_triangles);
    CHECK(cert.bound == 1000);
    CHECK(recheck(cert, blown_k3(10)).ok);
}

TEST_CASE("triangle-free input certifies bound 0") {
    Multigraph g(4);
    g.set_multiplicity(0, 1, 5);
    g.set_multiplicity(2, 3, 2);
    Certificate cert = certify(g, 7);
    CHECK(cert.R == 0);
    CHECK(cert.bound == 0);
    CHECK(cert.case_taken == CertCase::dense_threshold_graph);
    CHECK(recheck(cert, g).ok);
}

TEST_CASE("blown-up K3 at k=9, t=2 reaches the Cauchy-Schwarz case") {
    Multigraph g = blown_k3(9);
    Certificate cert = certify(g, 2);
    CHECK(cert.R == 9);
    CHECK(cert.case_taken == CertCase::cauchy_schwarz);
    CHECK(cert.cover_pairs.size() == 1);
    CHECK(cert.weights == std::vector<u64>{9});
    CHECK(cert.bound == 81);
    CHECK(count_triangles(g) == 729);
    CHECK(recheck(cert, g).ok);
}

TEST_CASE("certificates are sound and re-verifiable on random multigraphs") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> nd(3, 10);
    std::uniform_int_distribution<u64> td(1, 5);
    for (int iter = 0; iter < 50; ++iter) {
        Multigraph g = oracle::random_multigraph(rng, nd(rng), 6);
        u64 t = td(rng);
        Certificate cert = certify(g, t);
        CHECK(cert.bound <= oracle::naive_triangle_count(g));
        RecheckResult r = recheck(cert, g);
        CHECK_MESSAGE(r.ok, r.failure);
    }
}

TEST_CASE("tampered certificates are rejected with a named failure") {
    Multigraph g = blown_k3(9);
    Certificate good = certify(g, 2);
    REQUIRE(recheck(good, g).ok);

    Certificate inflated = good;
    inflated.bound += 1;
    RecheckResult r1 = recheck(inflated, g);
    CHECK(!r1.ok);
    CHECK(!r1.failure.empty());

    Certificate uncovering = good;
    uncovering.cover_pairs.clear();
    uncovering.weights.clear();
    uncovering.p2.clear();
    CHECK(!recheck(uncovering, g).ok);

    Certificate wrong_r = good;
    wrong_r.R += 1;
    CHECK(!recheck(wrong_r, g).ok);
}

TEST_CASE("certificate JSON round-trip") {
    Multigraph g = blown_k3(9);
    Certificate cert = certify(g, 2);
    Certificate back = certificate_from_json(to_json(cert));
    CHECK(back.case_taken == cert.case_taken);
    CHECK(back.t == cert.t);
    CHECK(back.R == cert.R);
    CHECK(back.bound == cert.bound);
    CHECK(back.cover_pairs == cert.cover_pairs);
    CHECK(back.weights == cert.weights);
    CHECK(recheck(back, g).ok);
}

TEST_CASE("case-2 budget: reaching step 3 leaves removal distance at least R/2") {
    std::mt19937 rng(606);
    for (int iter = 0; iter < 40; ++iter) {
        Multigraph g = oracle::random_multigraph(rng, 9, 6);
        u64 t = 1 + iter % 4;
        Certificate cert = certify(g, t);
        if (cert.case_taken == CertCase::dense_threshold_graph) continue;
        Multigraph gp = g;
        for (auto [u, v] : cert.threshold_cover) gp.set_multiplicity(u, v, 0);
        CHECK(u128(2) * removal_distance(gp, SolveMode::exact).cost >= u128(cert.R));
    }
}

TEST_CASE("bound/R ratio over the blow-up family with k = t^2 is nondecreasing in n") {
    for (u64 t : {2, 3}) {
        u128 prev_bound = 0;
        u64 prev_r = 0;
        for (int n = 4; n <= 9; ++n) {
            Counterexample ce = build_counterexample(n, SetMethod::exact, t * t);
            Certificate cert = certify(ce.graph, t);
            REQUIRE(cert.R > 0);
            if (prev_r > 0)  // bound/R >= prev_bound/prev_r as a fraction
                CHECK(cert.bound * prev_r >= prev_bound * cert.R);
            prev_bound = cert.bound;
            prev_r = cert.R;
        }
    }
}
