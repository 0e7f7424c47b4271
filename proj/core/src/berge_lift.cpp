#include <algorithm>
#include <chrono>
#include <climits>
#include <map>

#include "berge/berge_lift.hpp"
#include "berge/json_io.hpp"
#include "berge/verify.hpp"

namespace berge {

std::vector<BergeWalk> lift(const GraphDecomposition& d, const EdgeAssignment& eta) {
    if (!d.leave.empty()) throw InfeasibleInput("lift: decomposition has a non-empty leave");
    std::vector<BergeWalk> out;
    out.reserve(d.walks.size());
    for (const auto& w : d.walks) {
        BergeWalk bw;
        bw.kind = w.kind;
        bw.core = w.vertices;
        for (const auto& e : w.edges) {
            const HyperEdge* h = eta.find(e);
            if (!h)
                throw MissingAssignment("lift: no hyperedge assigned to {" + std::to_string(e.x) + "," +
                                        std::to_string(e.y) + "}#" + std::to_string(e.copy));
            bw.edges.push_back(*h);
        }
        out.push_back(std::move(bw));
    }
    return out;
}

namespace {

int guaranteed_threshold(int k) {
    if (k == 3) return 108;
    if (k == 4) return 54;
    return 38;
}

// Reorder homogeneous walks so their lengths follow the caller's list order.
std::vector<BergeWalk> align_to_list(std::vector<BergeWalk> walks, const LengthList& lengths) {
    std::map<int, std::vector<std::size_t>> by_len;
    for (std::size_t i = 0; i < walks.size(); ++i) by_len[walks[i].length()].push_back(i);
    std::map<int, std::size_t> cursor;
    std::vector<BergeWalk> out;
    out.reserve(walks.size());
    for (int len : lengths.values) {
        auto it = by_len.find(len);
        if (it == by_len.end() || cursor[len] >= it->second.size())
            throw std::logic_error("align_to_list: walk lengths do not match the request");
        out.push_back(std::move(walks[it->second[cursor[len]++]]));
    }
    return out;
}

struct StageClock {
    std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();
    void lap(RunTrace* trace, const char* name) {
        auto now = std::chrono::steady_clock::now();
        if (trace)
            trace->stage_ms.emplace_back(
                name, std::chrono::duration_cast<std::chrono::milliseconds>(now - last).count());
        last = now;
    }
};

} // namespace

HyperDecomposition decompose(int n, int k, int mu, const LengthList& cycle_lengths,
                             const LengthList& path_lengths, const SolverConfig& cfg, RunTrace* trace) {
    if (!(3 <= k && k < n)) throw InfeasibleInput("decompose: need 3 <= k < n");
    if (mu < 1) throw InfeasibleInput("decompose: mu must be positive");
    for (int m : cycle_lengths.values)
        if (m < 2 || m > n) throw InfeasibleInput("decompose: cycle length out of [2,n]");
    for (int m : path_lengths.values)
        if (m < 1 || m > n - 1) throw InfeasibleInput("decompose: path length out of [1,n-1]");
    long long want = binom(n, k) > 0 && mu <= LLONG_MAX / binom(n, k) ? mu * binom(n, k) : LLONG_MAX;
    if (cycle_lengths.sigma() + path_lengths.sigma() != want)
        throw InfeasibleInput("decompose: lengths must sum to mu*C(n,k)");

    const bool below = n < guaranteed_threshold(k);
    StageClock clock;
    HyperDecomposition result;
    try {
        if (k == n - 1) {
            if (trace) trace->case_label = "case3";
            result = case3_decompose(n, mu, cycle_lengths, path_lengths);
            clock.lap(trace, "case3");
        } else if (k == n - 2) {
            if (trace) trace->case_label = "case2";
            result = case2_decompose(n, mu, cycle_lengths, path_lengths);
            clock.lap(trace, "case2");
        } else {
            auto [lambda_p, lambda_c] = split_levels(cycle_lengths, path_lengths, n);
            if (trace) {
                trace->lambda_paths = lambda_p;
                trace->lambda_cycles = lambda_c;
            }
            StagedHost hp = build_hp(path_lengths, lambda_p, n, cfg);
            clock.lap(trace, "build_hp");
            StagedHost hc = build_hc(cycle_lengths, lambda_c, n, cfg);
            clock.lap(trace, "build_hc");
            if (trace && trace->want_stage_dump) {
                trace->artifacts.emplace_back("hp", nlohmann::json(hp).dump());
                trace->artifacts.emplace_back("hc", nlohmann::json(hc).dump());
            }
            if (trace) trace->case_label = hc.branch_label.empty() ? "case1" : hc.branch_label;
            AssembledHost H = assemble_h(hp, hc, mu, n, k);
            if (trace) {
                trace->spread_lo = H.lambda_lo;
                trace->spread_hi = H.lambda_hi;
            }
            clock.lap(trace, "assemble_h");
            EdgeAssignment eta = hall_matching(H.graph, n, k, mu);
            clock.lap(trace, "hall_matching");
            std::vector<BergeWalk> walks = lift(H.decomposition, eta);
            clock.lap(trace, "lift");

            std::vector<BergeWalk> cycles_only, paths_only;
            for (auto& w : walks)
                (w.kind == WalkKind::cycle ? cycles_only : paths_only).push_back(std::move(w));
            result.n = n;
            result.k = k;
            result.mu = mu;
            result.walks = align_to_list(std::move(cycles_only), cycle_lengths);
            auto paths_aligned = align_to_list(std::move(paths_only), path_lengths);
            for (auto& w : paths_aligned) result.walks.push_back(std::move(w));
        }
    } catch (const InfeasibleInput&) {
        throw;
    } catch (const std::exception& e) {
        if (below)
            throw BelowThresholdFailure("decompose: best-effort run below the guaranteed threshold failed: " +
                                            std::string(e.what()),
                                        trace && !trace->case_label.empty() ? trace->case_label : "pipeline");
        throw;
    }

    auto violations = verify_berge_decomposition(n, k, mu, cycle_lengths, path_lengths, result);
    if (!violations.empty())
        throw std::logic_error("decompose: output failed verification: " + violations.front().detail);
    clock.lap(trace, "verify");
    return result;
}

} // namespace berge
