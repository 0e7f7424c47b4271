#include <doctest.h>

#include "berge/admissibility.hpp"
#include "berge/multigraph.hpp"
#include "berge/rng.hpp"

using namespace berge;

TEST_CASE("complete multigraph edge counts") {
    CHECK(complete_multigraph(0, 5).edge_count() == 0);
    Multigraph k4 = complete_multigraph(1, 4);
    CHECK(k4.edge_count() == 6);
    for (int x = 1; x <= 4; ++x)
        for (int y = x + 1; y <= 4; ++y) CHECK(k4.mult(x, y) == 1);
    Multigraph g = complete_multigraph(3, 5);
    CHECK(g.edge_count() == 30);
    CHECK(g.mult(2, 5) == 3);

    for (int lambda = 0; lambda <= 5; ++lambda)
        for (int n = 2; n <= 40; ++n)
            CHECK(complete_multigraph(lambda, n).edge_count() == lambda * binom2(n));
}

TEST_CASE("near factor") {
    auto I = near_factor_I(1, 6);
    REQUIRE(I.size() == 3);
    CHECK(I[0] == VertexPair(1, 2));
    CHECK(I[1] == VertexPair(3, 4));
    CHECK(I[2] == VertexPair(5, 6));
    CHECK(near_factor_I(2, 7).empty());
    CHECK(near_factor_I(1, 5).empty());
}

TEST_CASE("union and subtract") {
    Multigraph k4 = complete_multigraph(1, 4);
    Multigraph dbl = graph_union(k4, k4);
    CHECK(dbl == complete_multigraph(2, 4));

    Multigraph k5x3 = complete_multigraph(3, 5);
    CHECK(graph_union(Multigraph(5), k5x3) == k5x3);

    Multigraph g = complete_multigraph(2, 3);
    Multigraph one(3);
    one.add(1, 2, 1);
    Multigraph u = graph_union(g, one);
    CHECK(u.mult(1, 2) == 3);
    CHECK(u.mult(1, 3) == 2);

    Multigraph d = subtract(complete_multigraph(2, 3), {VertexPair(1, 2), VertexPair(1, 2)});
    CHECK(d.mult(1, 2) == 0);
    CHECK(d.mult(2, 3) == 2);
    CHECK(subtract(k4, {}) == k4);
    CHECK_THROWS_AS(subtract(complete_multigraph(1, 3), {VertexPair(1, 2), VertexPair(1, 2)}),
                    InfeasibleInput);
}

TEST_CASE("is_even") {
    CHECK(is_even(complete_multigraph(2, 5)));
    CHECK_FALSE(is_even(complete_multigraph(1, 4)));
    CHECK(is_even(complete_multigraph(1, 5)));
}

TEST_CASE("union then subtract roundtrip") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.range(2, 9);
        Multigraph g(n);
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y) g.add(x, y, rng.range(0, 3));
        std::vector<VertexPair> extra;
        Multigraph added = g;
        for (int i = 0; i < 5; ++i) {
            int x = rng.range(1, n - 1), y = rng.range(x + 1, n);
            extra.emplace_back(x, y);
            added.add(x, y, 1);
        }
        CHECK(subtract(added, extra) == g);
    }
}

TEST_CASE("lambda K_n minus I is even with f edges") {
    for (int lambda = 1; lambda <= 4; ++lambda)
        for (int n = 2; n <= 12; ++n) {
            Multigraph g = subtract(complete_multigraph(lambda, n), near_factor_I(lambda, n));
            CHECK(is_even(g));
            CHECK(g.edge_count() == f_edges(lambda, n));
        }
}
