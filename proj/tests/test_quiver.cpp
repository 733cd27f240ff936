#include "bandlab/quiver.hpp"

#include <doctest.h>

#include <random>

using namespace bandlab;

namespace {

Quiver random_quiver(std::mt19937_64& rng, int n, int frozen) {
    Quiver q;
    for (int v = 0; v < n; ++v) q.add_vertex({1, v, Color::black, v >= n - frozen});
    std::uniform_int_distribution<int> d(-2, 2);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int k = d(rng);
            if (k > 0) q.add_arrows(x, y, k);
            if (k < 0) q.add_arrows(y, x, -k);
        }
    q.drop_frozen_frozen();
    return q;
}

}  // namespace

TEST_CASE("mutation is an involution and keeps skew-symmetry") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Quiver q = random_quiver(rng, 6, 2);
        for (int k : q.mutable_vertices()) {
            Quiver p = q;
            p.mutate(k);
            for (int x = 0; x < p.size(); ++x)
                for (int y = 0; y < p.size(); ++y) CHECK(p.b(x, y) == -p.b(y, x));
            p.mutate(k);
            for (int x = 0; x < p.size(); ++x)
                for (int y = 0; y < p.size(); ++y) CHECK(p.b(x, y) == q.b(x, y));
        }
    }
}

TEST_CASE("numeric exchange relation on a square") {
    // 0 -> 1 -> 2, 0 <- 3 <- 2 with 0 mutable
    Quiver q;
    for (int v = 0; v < 4; ++v) q.add_vertex({1, v, Color::black, v != 0});
    q.add_arrows(0, 1);
    q.add_arrows(3, 0);
    Seed s{q, std::vector<VertexLabel>(4), {}};
    const Q vals[] = {2, 3, 5, 7};
    for (int v = 0; v < 4; ++v) s.labels[v].value = vals[v];
    Seed t = mutate(s, 0);
    CHECK(*t.labels[0].value == Q(5));
    CHECK(t.quiver.b(1, 0) == 1);
    CHECK(t.quiver.b(0, 3) == 1);
    CHECK(t.trace == std::vector<int>{0});
    CHECK_THROWS_AS(mutate(s, 1), std::invalid_argument);
    s.labels[0].value = Q(0);
    CHECK_THROWS_AS(mutate(s, 0), std::domain_error);
}

TEST_CASE("degree bookkeeping") {
    Quiver q;
    for (int v = 0; v < 3; ++v) q.add_vertex({1, v, Color::black, v != 1});
    q.add_arrows(0, 1);
    q.add_arrows(1, 2);
    Seed s{q, std::vector<VertexLabel>(3), {}};
    s.labels[0].degree = BiDegree{{1, 0}, {0, 0}};
    s.labels[1].degree = BiDegree{{0, 0}, {0, 0}};
    s.labels[2].degree = BiDegree{{1, 0}, {0, 0}};
    CHECK(degree_balanced(s, 1));
    Seed t = mutate(s, 1);
    CHECK(t.labels[1].degree->ldeg == Weight{1, 0});
    s.labels[2].degree = BiDegree{{0, 1}, {0, 0}};
    CHECK_FALSE(degree_balanced(s, 1));
    CHECK_THROWS(mutate(s, 1));
}

TEST_CASE("frozen-frozen arrows vanish and iso check detects changes") {
    Quiver q;
    for (int v = 0; v < 3; ++v) q.add_vertex({1, v, Color::black, v != 0});
    q.add_arrows(1, 0);
    q.add_arrows(0, 2);
    q.mutate(0);
    CHECK(q.b(1, 2) == 0);
    Seed a{q, std::vector<VertexLabel>(3), {}};
    Seed b = a;
    CHECK(seed_isomorphic(a, b, {0, 1, 2}).ok);
    b.quiver.add_arrows(1, 2);
    CHECK_FALSE(seed_isomorphic(a, b, {0, 1, 2}).ok);
    CHECK_THROWS(q.add_vertex({1, 0, Color::black, false}));
}
