#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tri/multigraph.hpp"

using namespace tri;

namespace {

Multigraph triangle(u64 a, u64 b, u64 c) {
    Multigraph g(3);
    g.set_multiplicity(0, 1, a);
    g.set_multiplicity(1, 2, b);
    g.set_multiplicity(0, 2, c);
    return g;
}

}  // namespace

TEST_CASE("triangle count on a single weighted triple") {
    CHECK(count_triangles(triangle(2, 3, 5)) == 30);
    CHECK(count_triangles(triangle(2, 3, 5), CountAlgo::trace) == 30);
}

TEST_CASE("a path has no triangles") {
    Multigraph g(3);
    g.set_multiplicity(0, 1, 4);
    g.set_multiplicity(1, 2, 9);
    CHECK(count_triangles(g) == 0);
    CHECK(count_triangles(g, CountAlgo::trace) == 0);
}

TEST_CASE("enumerate, trace and the naive oracle agree on random multigraphs") {
    std::mt19937 rng(999);
    std::uniform_int_distribution<int> nd(3, 25);
    for (int iter = 0; iter < 200; ++iter) {
        Multigraph g = oracle::random_multigraph(rng, nd(rng), 9);
        u128 naive = oracle::naive_triangle_count(g);
        CHECK(count_triangles(g, CountAlgo::enumerate) == naive);
        CHECK(count_triangles(g, CountAlgo::trace) == naive);
    }
}

TEST_CASE("blow-up scales counts cubically") {
    CHECK(count_triangles(blow_up(triangle(1, 1, 1), 3)) == 27);
    std::mt19937 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        Multigraph g = oracle::random_multigraph(rng, 8, 4);
        u128 base = oracle::naive_triangle_count(g);
        for (u64 k = 1; k <= 5; ++k)
            CHECK(count_triangles(blow_up(g, k)) == u128(k) * k * k * base);
    }
}

TEST_CASE("blow-up by 1 is the identity") {
    std::mt19937 rng(11);
    Multigraph g = oracle::random_multigraph(rng, 10, 6);
    CHECK(blow_up(g, 1) == g);
}

TEST_CASE("threshold subgraph keeps exactly the light pairs") {
    Multigraph g(3);
    g.set_multiplicity(0, 1, 5);
    g.set_multiplicity(1, 2, 1);
    g.set_multiplicity(0, 2, 9);
    SimpleGraph t = threshold_subgraph(g, 4);
    CHECK(t.edge_count() == 1);
    CHECK(t.has_edge(1, 2));
}

TEST_CASE("threshold at the max multiplicity saturates to the underlying graph") {
    std::mt19937 rng(23);
    Multigraph g = oracle::random_multigraph(rng, 12, 7);
    u64 mx = 1;
    for (auto [u, v, m] : g.support_edges()) mx = std::max(mx, m);
    CHECK(threshold_subgraph(g, mx) == underlying(g));
}

TEST_CASE("threshold subgraph is monotone in t and unions to the underlying graph") {
    std::mt19937 rng(29);
    Multigraph g = oracle::random_multigraph(rng, 10, 6);
    std::size_t prev = 0;
    for (u64 t = 1; t <= 6; ++t) {
        SimpleGraph s = threshold_subgraph(g, t);
        for (auto [u, v] : s.edges())
            CHECK((g.multiplicity(u, v) >= 1 && g.multiplicity(u, v) <= t));
        CHECK(s.edge_count() >= prev);
        prev = s.edge_count();
    }
    CHECK(threshold_subgraph(g, 6) == underlying(g));
}

TEST_CASE("threshold 1 on a simple graph reproduces it") {
    std::mt19937 rng(31);
    Multigraph g = oracle::random_multigraph(rng, 9, 1);
    CHECK(threshold_subgraph(g, 1) == underlying(g));
}

TEST_CASE("underlying graph ignores multiplicities") {
    CHECK(underlying(triangle(2, 3, 5)).edge_count() == 3);
    Multigraph empty(4);
    CHECK(underlying(empty).edge_count() == 0);
    std::mt19937 rng(37);
    Multigraph g = oracle::random_multigraph(rng, 8, 5);
    for (u64 k = 1; k <= 4; ++k) CHECK(underlying(blow_up(g, k)) == underlying(g));
}

TEST_CASE("p2 counts") {
    Multigraph k3 = triangle(2, 3, 5);
    CHECK(p2_count(k3, 0, 1) == 15);  // via vertex 2: 5 * 3
    Multigraph disc(4);
    disc.set_multiplicity(0, 1, 3);
    disc.set_multiplicity(2, 3, 3);
    CHECK(p2_count(disc, 0, 2) == 0);
    Multigraph star(3);
    star.set_multiplicity(0, 1, 4);  // center 0
    star.set_multiplicity(0, 2, 7);
    CHECK(p2_count(star, 1, 2) == 28);
}

TEST_CASE("triangle count decomposes over pairs via p2 counts") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 50; ++iter) {
        Multigraph g = oracle::random_multigraph(rng, 10, 5);
        u128 sum = 0;
        for (auto [u, v, m] : g.support_edges()) sum += u128(m) * p2_count(g, u, v);
        CHECK(sum % 3 == 0);
        CHECK(sum / 3 == count_triangles(g));
    }
}

TEST_CASE("self-loops are rejected") {
    Multigraph g(3);
    CHECK_THROWS_AS(g.set_multiplicity(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(p2_count(g, 2, 2), std::invalid_argument);
}

TEST_CASE("overflow in counting is detected, not wrapped") {
    Multigraph g(3);
    u64 big = u64(1) << 63;
    g.set_multiplicity(0, 1, big);
    g.set_multiplicity(1, 2, big);
    g.set_multiplicity(0, 2, big);
    CHECK_THROWS_AS(count_triangles(g), std::overflow_error);
}

TEST_CASE("edge list round-trip preserves the multiplicity map") {
    std::mt19937 rng(53);
    for (int iter = 0; iter < 20; ++iter) {
        Multigraph g = oracle::random_multigraph(rng, 15, 9);
        std::stringstream ss;
        write_multigraph(ss, g);
        CHECK(read_multigraph(ss) == g);
    }
}

TEST_CASE("malformed edge lists are rejected") {
    std::stringstream bad1("3 1\n2 1 5\n");  // u >= v
    CHECK_THROWS_AS(read_multigraph(bad1), std::runtime_error);
    std::stringstream bad2("3 1\n0 1 0\n");  // zero multiplicity
    CHECK_THROWS_AS(read_multigraph(bad2), std::runtime_error);
    std::stringstream bad3("3 2\n0 1 1\n");  // truncated
    CHECK_THROWS_AS(read_multigraph(bad3), std::runtime_error);
}
