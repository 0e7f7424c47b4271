#include <doctest.h>

#include <map>
#include <set>

#include "berge/berge_lift.hpp"
#include "berge/rng.hpp"
#include "berge/verify.hpp"

using namespace berge;

namespace {

LengthList random_split(Rng& rng, long long total, int lo, int hi, LengthList* rest, int rest_lo,
                        int rest_hi) {
    // random (cycles, paths) pair summing to total
    LengthList first;
    rest->values.clear();
    long long left = total;
    while (left > 0) {
        bool cyc = rng.below(2) == 0;
        int lov = cyc ? lo : rest_lo, hiv = cyc ? hi : rest_hi;
        int len = rng.range(lov, hiv);
        if (len > left) continue;
        if (left - len == 1 && lo > 1) continue; // a single leftover edge has no home
        (cyc ? first : *rest).values.push_back(len);
        left -= len;
    }
    return first;
}

} // namespace

TEST_CASE("round robin coloring is a proper near-factorization") {
    for (int n = 3; n <= 40; ++n)
        for (int mu = 1; mu <= 3; ++mu) {
            auto classes = round_robin_coloring(mu, n);
            long long chi = static_cast<long long>(mu) * (2 * ((n - 1) / 2) + 1);
            REQUIRE(static_cast<long long>(classes.size()) == chi);
            std::map<std::pair<int, int>, int> uses;
            for (const auto& cls : classes) {
                CHECK(static_cast<int>(cls.size()) == n / 2);
                std::set<int> touched;
                for (const auto& p : cls) {
                    CHECK(!touched.count(p.lo));
                    CHECK(!touched.count(p.hi));
                    touched.insert(p.lo);
                    touched.insert(p.hi);
                    uses[{p.lo, p.hi}]++;
                }
            }
            for (int x = 1; x <= n; ++x)
                for (int y = x + 1; y <= n; ++y) CHECK(uses[{x, y}] == mu);
        }
}

TEST_CASE("hall matching on a 4-cycle host") {
    Multigraph h(4);
    h.add(1, 2, 1);
    h.add(2, 3, 1);
    h.add(3, 4, 1);
    h.add(1, 4, 1);
    auto eta = hall_matching(h, 4, 3, 1);
    CHECK(eta.size() == 4);
    std::set<std::vector<int>> used;
    for (const auto& [e, he] : eta.entries()) {
        CHECK(he.members.size() == 3);
        CHECK(std::binary_search(he.members.begin(), he.members.end(), e.x));
        CHECK(std::binary_search(he.members.begin(), he.members.end(), e.y));
        CHECK(!used.count(he.members));
        used.insert(he.members);
    }
}

TEST_CASE("hall matching reports a violator") {
    Multigraph h(4);
    h.add(1, 2, 3); // three copies, but only two 3-sets contain {1,2}
    h.add(3, 4, 1);
    try {
        hall_matching(h, 4, 3, 1);
        FAIL("expected NoPerfectMatching");
    } catch (const NoPerfectMatching& e) {
        CHECK(static_cast<long long>(e.violator.size()) > e.neighborhood_size);
        // recompute N(S) directly: all 3-sets containing some violator pair
        std::set<std::vector<int>> nbhd;
        for (const auto& inst : e.violator)
            for (int z = 1; z <= 4; ++z) {
                if (z == inst.x || z == inst.y) continue;
                std::vector<int> s{inst.x, inst.y, z};
                std::sort(s.begin(), s.end());
                nbhd.insert(s);
            }
        CHECK(static_cast<long long>(nbhd.size()) == e.neighborhood_size);
    }
}

TEST_CASE("lift substitutes hyperedges") {
    Multigraph h(4);
    h.add(1, 2, 2);
    GraphWalk digon;
    digon.kind = WalkKind::cycle;
    digon.vertices = {1, 2};
    digon.edges = {EdgeInstance(1, 2, 0), EdgeInstance(1, 2, 1)};
    GraphDecomposition d;
    d.host = h;
    d.walks.push_back(digon);

    EdgeAssignment eta;
    eta.assign(EdgeInstance(1, 2, 0), HyperEdge{{1, 2, 3}, 0});
    eta.assign(EdgeInstance(1, 2, 1), HyperEdge{{1, 2, 4}, 0});
    auto walks = lift(d, eta);
    REQUIRE(walks.size() == 1);
    CHECK(walks[0].kind == WalkKind::cycle);
    CHECK(walks[0].core == std::vector<int>{1, 2});
    CHECK(walks[0].edges[0].members == std::vector<int>{1, 2, 3});

    EdgeAssignment partial;
    partial.assign(EdgeInstance(1, 2, 0), HyperEdge{{1, 2, 3}, 0});
    CHECK_THROWS_AS(lift(d, partial), MissingAssignment);
}

TEST_CASE("case 3 examples") {
    auto d = case3_decompose(4, 1, LengthList{4}, LengthList{});
    REQUIRE(d.walks.size() == 1);
    CHECK(d.walks[0].core == std::vector<int>{2, 3, 4, 1});
    CHECK(verify_berge_decomposition(4, 3, 1, LengthList{4}, LengthList{}, d).empty());

    auto d2 = case3_decompose(5, 1, LengthList{2}, LengthList{3});
    CHECK(verify_berge_decomposition(5, 4, 1, LengthList{2}, LengthList{3}, d2).empty());

    auto d3 = case3_decompose(4, 2, LengthList{4, 4}, LengthList{});
    CHECK(verify_berge_decomposition(4, 3, 2, LengthList{4, 4}, LengthList{}, d3).empty());
}

TEST_CASE("case 3 randomized sweep") {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int n = rng.range(4, 20);
        int mu = rng.range(1, 3);
        LengthList paths;
        LengthList cycles = random_split(rng, static_cast<long long>(mu) * n, 2, n, &paths, 1, n - 1);
        auto d = case3_decompose(n, mu, cycles, paths);
        auto bad = verify_berge_decomposition(n, n - 1, mu, cycles, paths, d);
        for (const auto& v : bad) FAIL_CHECK(to_string(v.code) << " " << v.detail);
        CHECK(bad.empty());
    }
}

TEST_CASE("case 2 examples") {
    auto d = case2_decompose(10, 1, LengthList{10, 10, 10, 5}, LengthList{5, 5});
    CHECK(verify_berge_decomposition(10, 8, 1, LengthList{10, 10, 10, 5}, LengthList{5, 5}, d).empty());

    auto d2 = case2_decompose(10, 1, LengthList{}, LengthList{9, 9, 9, 9, 9});
    CHECK(verify_berge_decomposition(10, 8, 1, LengthList{}, LengthList{9, 9, 9, 9, 9}, d2).empty());
}

// Facts the SDR argument leans on: the edge order puts at most three colors
// in a block, and all intersection sets have at least n-4 elements.
TEST_CASE("case 2 structural facts") {
    for (int n : {10, 13, 16}) {
        int mu = 1;
        auto classes = round_robin_coloring(mu, n);
        std::vector<int> color_of_pos;
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::size_t i = 0; i < classes[c].size(); ++i) color_of_pos.push_back(static_cast<int>(c));

        Rng rng(n);
        LengthList paths;
        LengthList cycles = random_split(rng, binom2(n), 2, n, &paths, 1, n - 1);
        long long offset = 0;
        auto check_block = [&](int len) {
            std::set<int> colors;
            for (long long i = offset; i < offset + len; ++i) colors.insert(color_of_pos[i]);
            CHECK(colors.size() <= 3);
            offset += len;
        };
        for (int len : cycles.values) check_block(len);
        for (int len : paths.values) check_block(len);

        auto d = case2_decompose(n, mu, cycles, paths);
        for (const auto& w : d.walks) {
            // every consecutive complement intersection has >= n-4 vertices
            for (std::size_t i = 0; i + 1 < w.edges.size(); ++i) {
                std::vector<int> inter;
                std::set_intersection(w.edges[i].members.begin(), w.edges[i].members.end(),
                                      w.edges[i + 1].members.begin(), w.edges[i + 1].members.end(),
                                      std::back_inserter(inter));
                CHECK(static_cast<int>(inter.size()) >= n - 4);
            }
        }
        CHECK(verify_berge_decomposition(n, n - 2, mu, cycles, paths, d).empty());
    }
}

TEST_CASE("decompose dispatches and validates") {
    SolverConfig cfg;
    CHECK_THROWS_AS(decompose(6, 3, 1, LengthList{20}, LengthList{}, cfg), InfeasibleInput);
    CHECK_THROWS_AS(decompose(6, 3, 1, LengthList{5}, LengthList{}, cfg), InfeasibleInput); // sum

    auto d = decompose(5, 4, 1, LengthList{2}, LengthList{3}, cfg);
    CHECK(d.walks.size() == 2);
    CHECK(d.walks[0].kind == WalkKind::cycle);

    auto d2 = decompose(12, 10, 1, LengthList{12, 12, 12, 12, 6}, LengthList{6, 6}, cfg);
    CHECK(d2.walks.size() == 7);
}

TEST_CASE("decompose runs case 1 below threshold best effort") {
    SolverConfig cfg;
    cfg.seed = 3;
    // n=9, k=4: C(9,4) = 126 edges; far below the guaranteed threshold but
    // small enough for the exact engines
    Rng rng(5);
    LengthList paths;
    LengthList cycles = random_split(rng, binom(9, 4), 2, 9, &paths, 1, 8);
    try {
        auto d = decompose(9, 4, 1, cycles, paths, cfg);
        CHECK(verify_berge_decomposition(9, 4, 1, cycles, paths, d).empty());
    } catch (const BelowThresholdFailure& e) {
        MESSAGE("best-effort run reported: ", e.what()); // acceptable below threshold
    }
}
