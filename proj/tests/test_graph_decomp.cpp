#include <doctest.h>

#include <functional>
#include <numeric>

#include <json.hpp>

#include "berge/graph_decomp.hpp"
#include "berge/json_io.hpp"
#include "berge/rng.hpp"

using namespace berge;

namespace {

// All multisets with parts in [lo,hi] and sum <= cap, non-increasing order.
void enumerate_lists(int lo, int hi, long long cap, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
    emit(cur);
    int maxpart = cur.empty() ? hi : std::min(hi, cur.back());
    for (int p = maxpart; p >= lo; --p) {
        if (p > cap) continue;
        cur.push_back(p);
        enumerate_lists(lo, hi, cap - p, cur, emit);
        cur.pop_back();
    }
}

GraphDecomposition checked(const Multigraph& host, GraphDecomposition d, const LengthList& M,
                           WalkKind kind) {
    auto bad = verify_graph_decomposition(host, d, M, kind);
    for (const auto& msg : bad) FAIL_CHECK(msg);
    REQUIRE(bad.empty());
    return d;
}

} // namespace

TEST_CASE("brute force oracle examples") {
    CHECK_FALSE(brute_force_packing_exists(complete_multigraph(1, 5), LengthList{3, 3, 3}, WalkKind::cycle));
    CHECK(brute_force_packing_exists(complete_multigraph(1, 3), LengthList{3}, WalkKind::cycle));
    CHECK(brute_force_packing_exists(complete_multigraph(2, 3), LengthList{2, 2, 2}, WalkKind::cycle));
    CHECK_THROWS_AS(brute_force_packing_exists(complete_multigraph(2, 7), LengthList{3}, WalkKind::cycle),
                    InstanceTooLarge);
}

TEST_CASE("path packing examples") {
    SolverConfig cfg;
    LengthList m1{2, 1};
    auto d1 = checked(complete_multigraph(1, 3), path_packing(1, 3, m1, cfg), m1, WalkKind::path);
    CHECK(d1.leave.empty());

    LengthList m2{1};
    auto d2 = checked(complete_multigraph(1, 4), path_packing(1, 4, m2, cfg), m2, WalkKind::path);
    CHECK(d2.leave.size() == 5);

    LengthList m3{3, 3};
    auto d3 = checked(complete_multigraph(1, 4), path_packing(1, 4, m3, cfg), m3, WalkKind::path);
    CHECK(d3.leave.empty());

    CHECK_THROWS_AS(path_packing(1, 4, LengthList{4}, cfg), InfeasibleInput);
}

TEST_CASE("cycle decomposition examples") {
    SolverConfig cfg;
    LengthList m1{5, 5};
    Multigraph k5 = complete_multigraph(1, 5);
    auto d1 = checked(k5, cycle_decomposition(1, 5, m1, cfg), m1, WalkKind::cycle);
    CHECK(d1.leave.empty());
    CHECK(d1.walks.size() == 2);

    LengthList m2{2, 2, 2};
    auto d2 = checked(complete_multigraph(2, 3), cycle_decomposition(2, 3, m2, cfg), m2, WalkKind::cycle);
    CHECK(d2.walks.size() == 3);

    LengthList m3{3, 3, 3, 3, 3, 3, 3};
    auto d3 = checked(complete_multigraph(1, 7), cycle_decomposition(1, 7, m3, cfg), m3, WalkKind::cycle);
    CHECK(d3.leave.empty());

    CHECK_THROWS_AS(cycle_decomposition(1, 5, LengthList{3, 3}, cfg), InfeasibleInput);
}

TEST_CASE("cycle packing examples") {
    SolverConfig cfg;
    Multigraph k5 = complete_multigraph(1, 5);
    LengthList m1{3, 3};
    auto d1 = checked(k5, cycle_packing(1, 5, m1, cfg), m1, WalkKind::cycle);
    CHECK(d1.leave.size() == 4);

    LengthList m2{3};
    auto d2 = checked(complete_multigraph(2, 3), cycle_packing(2, 3, m2, cfg), m2, WalkKind::cycle);
    CHECK(d2.leave.size() == 3);

    LengthList m3{};
    Multigraph host6 = subtract(complete_multigraph(1, 6), near_factor_I(1, 6));
    auto d3 = checked(host6, cycle_packing(1, 6, m3, cfg), m3, WalkKind::cycle);
    CHECK(d3.leave.size() == 12);
    CHECK(d3.walks.empty());

    CHECK_THROWS_AS(cycle_packing(1, 5, LengthList{3, 3, 3}, cfg), InfeasibleInput);
    CHECK_THROWS_AS(cycle_packing(0, 5, LengthList{3}, cfg), InfeasibleInput);
    CHECK(cycle_packing(0, 5, LengthList{}, cfg).walks.empty());
}

TEST_CASE("verifier flags mutations") {
    SolverConfig cfg;
    LengthList m{5, 5};
    Multigraph k5 = complete_multigraph(1, 5);
    auto d = cycle_decomposition(1, 5, m, cfg);
    REQUIRE(verify_graph_decomposition(k5, d, m, WalkKind::cycle).empty());

    auto reused = d;
    reused.walks[1].edges[0] = reused.walks[0].edges[0];
    CHECK_FALSE(verify_graph_decomposition(k5, reused, m, WalkKind::cycle).empty());

    CHECK_FALSE(verify_graph_decomposition(k5, d, LengthList{4, 6}, WalkKind::cycle).empty());
}

// Reduced oracle sweep; the acceptance suite runs the full criterion ranges.
TEST_CASE("feasibility matches brute force on small hosts") {
    for (int lambda = 1; lambda <= 2; ++lambda)
        for (int n = 3; n <= 5; ++n) {
            Multigraph host = subtract(complete_multigraph(lambda, n), near_factor_I(lambda, n));
            std::vector<int> cur;
            enumerate_lists(2, n, f_edges(lambda, n), cur, [&](const std::vector<int>& lens) {
                LengthList M{std::vector<int>(lens)};
                bool predicted = packing_feasible({lambda, n, M});
                bool actual = brute_force_packing_exists(host, M, WalkKind::cycle);
                if (predicted != actual) {
                    CAPTURE(lambda);
                    CAPTURE(n);
                    CAPTURE(nlohmann::json(lens).dump());
                    CHECK(predicted == actual);
                }
            });
        }
}

TEST_CASE("path feasibility matches brute force on small hosts") {
    for (int lambda = 1; lambda <= 2; ++lambda)
        for (int n = 2; n <= 5; ++n) {
            if (lambda * binom2(n) > 30) continue; // oracle cap
            Multigraph host = complete_multigraph(lambda, n);
            std::vector<int> cur;
            // parts up to n, so the infeasible side is exercised too
            enumerate_lists(1, n, host.edge_count(), cur, [&](const std::vector<int>& lens) {
                LengthList M{std::vector<int>(lens)};
                bool predicted = path_packing_feasible(lambda, n, M);
                bool actual = brute_force_packing_exists(host, M, WalkKind::path);
                if (predicted != actual) {
                    CAPTURE(lambda);
                    CAPTURE(n);
                    CAPTURE(nlohmann::json(lens).dump());
                    CHECK(predicted == actual);
                }
            });
        }
}

TEST_CASE("cycle packing across exhaustive feasible instances") {
    SolverConfig cfg;
    for (int lambda = 1; lambda <= 2; ++lambda)
        for (int n = 3; n <= 5; ++n) {
            Multigraph host = subtract(complete_multigraph(lambda, n), near_factor_I(lambda, n));
            std::vector<int> cur;
            enumerate_lists(2, n, f_edges(lambda, n), cur, [&](const std::vector<int>& lens) {
                LengthList M{std::vector<int>(lens)};
                if (!packing_feasible({lambda, n, M})) return;
                auto d = cycle_packing(lambda, n, M, cfg);
                auto bad = verify_graph_decomposition(host, d, M, WalkKind::cycle);
                CHECK(bad.empty());
                CHECK(static_cast<long long>(d.leave.size()) == f_edges(lambda, n) - M.sigma());
            });
        }
}

TEST_CASE("solver output is deterministic for a fixed seed") {
    SolverConfig cfg;
    cfg.seed = 42;
    LengthList m{4, 3, 3, 4, 4, 3};
    auto a = cycle_decomposition(1, 7, m, cfg);
    auto b = cycle_decomposition(1, 7, m, cfg);
    CHECK(nlohmann::json(a).dump() == nlohmann::json(b).dump());

    cfg.seed = 43;
    auto c = path_packing(2, 13, LengthList{12, 11, 10, 9, 8, 7}, cfg);
    auto d = path_packing(2, 13, LengthList{12, 11, 10, 9, 8, 7}, cfg);
    CHECK(nlohmann::json(c).dump() == nlohmann::json(d).dump());
}

TEST_CASE("heuristic engine handles hosts above the exact threshold") {
    SolverConfig cfg;
    cfg.seed = 5;
    // n = 14 > exact_threshold: decomposition of K_14 - I into mixed lengths
    int n = 14;
    long long total = f_edges(1, n);
    std::vector<int> lens;
    long long left = total;
    Rng rng(3);
    while (left > 0) {
        int c = rng.range(3, n);
        if (c > left) c = static_cast<int>(left);
        if (c == 1) break;
        if (c == 2) c = 3; // keep it simple: no digons in this sweep
        lens.push_back(c);
        left -= c;
    }
    if (left != 0) { // patch the tail so the sum matches exactly
        lens.back() += static_cast<int>(left);
        if (lens.back() > n) {
            int extra = lens.back() - n;
            lens.back() = n;
            lens.push_back(extra < 2 ? 3 : extra); // extra >= 2 by construction
            if (extra < 2) lens[lens.size() - 2] -= (3 - extra);
        }
    }
    LengthList M{std::vector<int>(lens)};
    REQUIRE(M.sigma() == total);
    if (!is_admissible(1, n, M)) return; // nu2 = 0, sum matches: always admissible
    Multigraph host = subtract(complete_multigraph(1, n), near_factor_I(1, n));
    auto d = cycle_decomposition(1, n, M, cfg);
    CHECK(verify_graph_decomposition(host, d, M, WalkKind::cycle).empty());
}

// Cycle packings of even multigraphs obey the counting bound with f = 2 for
// decompositions and f = 1 otherwise.
TEST_CASE("packing size bound on even multigraphs") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.range(3, 8);
        Multigraph g(n);
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y) g.add(x, y, 2 * rng.range(0, 2));
        if (g.edge_count() == 0) continue;

        // random greedy cycle packing, possibly stopped early
        Multigraph res = g;
        std::vector<int> cycle_sizes;
        int stop_after = rng.range(0, 6);
        while (res.edge_count() > 0 && static_cast<int>(cycle_sizes.size()) < 100) {
            if (stop_after > 0 && static_cast<int>(cycle_sizes.size()) == stop_after) break;
            int start = 0;
            for (int v = 1; v <= n && !start; ++v)
                if (res.degree(v) > 0) start = v;
            std::vector<int> seq{start};
            std::vector<int> pos(n + 1, -1);
            pos[start] = 0;
            bool extracted = false;
            while (!extracted) {
                int u = seq.back();
                int prev = seq.size() >= 2 ? seq[seq.size() - 2] : 0;
                std::vector<int> cands;
                for (int w = 1; w <= n; ++w) {
                    if (w == u || res.mult(u, w) == 0) continue;
                    if (w == prev && res.mult(u, w) < 2) continue;
                    cands.push_back(w);
                }
                if (cands.empty()) break;
                int w = cands[rng.below(cands.size())];
                if (pos[w] >= 0) {
                    int len = static_cast<int>(seq.size()) - pos[w];
                    for (int i = pos[w]; i + 1 < static_cast<int>(seq.size()); ++i)
                        res.add(seq[i], seq[i + 1], -1);
                    res.add(seq.back(), w, -1);
                    cycle_sizes.push_back(len);
                    extracted = true;
                } else {
                    seq.push_back(w);
                    pos[w] = static_cast<int>(seq.size()) - 1;
                }
            }
            if (!extracted) break;
        }
        if (cycle_sizes.empty()) continue;
        bool decomposition = res.edge_count() == 0;
        long long f = decomposition ? 2 : 1;
        long long P = static_cast<long long>(cycle_sizes.size());
        for (int c0 : cycle_sizes) CHECK(P <= g.edge_count() / 2 - c0 + f);
    }
}
