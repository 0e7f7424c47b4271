#include "berge/graph_decomp.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "engine_internal.hpp"

namespace berge {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Attempt {
    bool ok = false;
    std::vector<engine::VWalk> walks;
};

// Runs seeded attempts until one succeeds. With workers > 1, attempts are
// launched in batches and the smallest successful restart index wins, so the
// result does not depend on thread timing.
template <typename Fn>
Attempt run_restarts(const SolverConfig& cfg, Fn attempt) {
    int restarts = std::max(1, cfg.max_restarts);
    int workers = std::max(1, cfg.workers);
    Attempt best;
    if (workers == 1) {
        for (int i = 0; i < restarts; ++i) {
            Attempt a = attempt(mix_seed(cfg.seed, static_cast<std::uint64_t>(i)));
            if (a.ok) return a;
            if (a.walks.size() > best.walks.size()) best = std::move(a);
        }
        return best;
    }
    for (int base = 0; base < restarts; base += workers) {
        int batch = std::min(workers, restarts - base);
        std::vector<std::future<Attempt>> futs;
        futs.reserve(batch);
        for (int i = 0; i < batch; ++i) {
            std::uint64_t s = mix_seed(cfg.seed, static_cast<std::uint64_t>(base + i));
            futs.push_back(std::async(std::launch::async, [attempt, s] { return attempt(s); }));
        }
        for (auto& f : futs) {
            Attempt a = f.get();
            if (a.ok) return a; // futures are ordered by restart index
            if (a.walks.size() > best.walks.size()) best = std::move(a);
        }
    }
    return best;
}

std::string join_lengths(const LengthList& M) {
    std::ostringstream os;
    for (std::size_t i = 0; i < M.values.size(); ++i) os << (i ? "," : "") << M.values[i];
    return os.str();
}

} // namespace

GraphDecomposition path_packing(int lambda, int n, const LengthList& M, const SolverConfig& cfg) {
    if (lambda == 0) {
        if (!M.empty()) throw InfeasibleInput("path_packing: lambda=0 admits only the empty list");
        return engine::materialize(Multigraph(std::max(1, n)), {});
    }
    if (lambda < 0 || n < 1) throw InfeasibleInput("path_packing: lambda, n must be positive");
    if (!path_packing_feasible(lambda, n, M))
        throw InfeasibleInput("path_packing: infeasible instance (" + join_lengths(M) + ")");
    Multigraph host = complete_multigraph(lambda, n);
    if (M.empty()) return engine::materialize(host, {});

    bool cover = M.sigma() == host.edge_count();
    auto attempt = [&](std::uint64_t seed) {
        Attempt a;
        engine::ExactOptions eo;
        eo.kind = WalkKind::path;
        eo.exact_cover = cover;
        eo.node_budget = 3000000;
        eo.randomize = true;
        eo.seed = seed;
        engine::HeurOptions ho{seed, cfg.switch_budget, nullptr};
        if (n <= cfg.exact_threshold) {
            a.ok = engine::exact_search(host, M.values, eo, &a.walks) == engine::Status::found;
            if (!a.ok) a.ok = engine::heuristic_path_packing(host, M.values, ho, &a.walks);
        } else {
            a.ok = engine::heuristic_path_packing(host, M.values, ho, &a.walks);
        }
        return a;
    };
    Attempt got = run_restarts(cfg, attempt);
    if (!got.ok)
        throw SearchExhausted("path_packing: budgets exhausted for lambda=" + std::to_string(lambda) +
                                  " n=" + std::to_string(n),
                              engine::materialize(host, got.walks), M);
    return engine::materialize(host, got.walks);
}

GraphDecomposition cycle_decomposition(int lambda, int n, const LengthList& M, const SolverConfig& cfg) {
    if (lambda < 1 || n < 1) throw InfeasibleInput("cycle_decomposition: lambda, n must be positive");
    if (!is_admissible(lambda, n, M))
        throw InfeasibleInput("cycle_decomposition: list is not (lambda,n)-admissible (" + join_lengths(M) +
                              ")");
    Multigraph host = subtract(complete_multigraph(lambda, n), near_factor_I(lambda, n));
    if (M.empty()) return engine::materialize(host, {});

    auto attempt = [&](std::uint64_t seed) {
        Attempt a;
        engine::ExactOptions eo;
        eo.kind = WalkKind::cycle;
        eo.exact_cover = true;
        eo.node_budget = 3000000;
        eo.randomize = true;
        eo.seed = seed;
        eo.digon_avoid = &cfg.digon_avoid_pairs;
        engine::HeurOptions ho{seed, cfg.switch_budget, &cfg.digon_avoid_pairs};
        if (n <= cfg.exact_threshold) {
            a.ok = engine::exact_search(host, M.values, eo, &a.walks) == engine::Status::found;
            if (!a.ok) a.ok = engine::heuristic_cycle_decomposition(host, M.values, ho, &a.walks);
        } else {
            a.ok = engine::heuristic_cycle_decomposition(host, M.values, ho, &a.walks);
        }
        return a;
    };
    Attempt got = run_restarts(cfg, attempt);
    if (!got.ok)
        throw SearchExhausted("cycle_decomposition: budgets exhausted for lambda=" +
                                  std::to_string(lambda) + " n=" + std::to_string(n) + " M=(" +
                                  join_lengths(M) + ")",
                              engine::materialize(host, got.walks), M);
    return engine::materialize(host, got.walks);
}

namespace {

// Extension parts for the odd-lambda, r >= 3 reduction branch: as many 3s as
// possible, with the tail adjusted to a 4 or 5 by r mod 3. When n < 5 rules
// that out, fall back to the fewest 2s making the rest divisible by 3.
std::vector<int> odd_extension_parts(long long r, int n) {
    std::vector<int> parts;
    int tail = static_cast<int>(r % 3);
    if (n >= 5 || tail == 0 || (tail == 1 && n == 4)) {
        long long threes = r / 3;
        if (tail == 1) {
            threes -= 1; // 3k+1 = 3(k-1) + 4
            parts.push_back(4);
        } else if (tail == 2) {
            threes -= 1; // 3k+2 = 3(k-1) + 5
            parts.push_back(5);
        }
        for (long long i = 0; i < threes; ++i) parts.push_back(3);
        return parts;
    }
    // n in {2,3,4}: use 2s for the residue
    long long twos = 0;
    long long rest = r;
    if (n == 2) {
        twos = r / 2;
        rest = r - 2 * twos;
    } else {
        while (rest % 3 != 0) {
            rest -= 2;
            twos++;
        }
    }
    for (long long i = 0; i < rest / 3; ++i) parts.push_back(3);
    for (long long i = 0; i < twos; ++i) parts.push_back(2);
    return parts;
}

} // namespace

GraphDecomposition cycle_packing(int lambda, int n, const LengthList& M, const SolverConfig& cfg) {
    if (lambda == 0) {
        if (!M.empty()) throw InfeasibleInput("cycle_packing: lambda=0 admits only the empty list");
        return engine::materialize(Multigraph(std::max(1, n)), {});
    }
    if (lambda < 0 || n < 1) throw InfeasibleInput("cycle_packing: lambda, n must be positive");
    PackingInstance inst{lambda, n, M};
    if (!packing_feasible(inst))
        throw InfeasibleInput("cycle_packing: infeasible instance (" + join_lengths(M) + ")");
    Multigraph host = subtract(complete_multigraph(lambda, n), near_factor_I(lambda, n));
    if (M.empty()) return engine::materialize(host, {});

    long long r = f_edges(lambda, n) - M.sigma();
    LengthList extended = M;
    if (r > 0) {
        if (lambda % 2 == 1) {
            if (r == 2) {
                extended.values.push_back(2);
            } else {
                for (int p : odd_extension_parts(r, n)) extended.values.push_back(p);
            }
        } else {
            long long m1 = M.max_part();
            if (r <= m1) {
                extended.values.push_back(static_cast<int>(r));
            } else {
                int pick = 0;
                for (int cand : {m1 - 1, m1, m1 + 1}) {
                    if (cand < 2 || cand > n) continue;
                    if ((r - cand) % 2 != 0) continue;
                    pick = static_cast<int>(cand);
                    break;
                }
                if (pick == 0)
                    throw SearchExhausted("cycle_packing: no valid extension part", engine::materialize(host, {}),
                                          M);
                extended.values.push_back(pick);
                for (long long i = 0; i < (r - pick) / 2; ++i) extended.values.push_back(2);
            }
        }
    }
    if (!is_admissible(lambda, n, extended))
        throw SearchExhausted("cycle_packing: extended list unexpectedly inadmissible",
                              engine::materialize(host, {}), M);

    GraphDecomposition full = cycle_decomposition(lambda, n, extended, cfg);

    // Keep exactly the prescribed multiset; the added cycles become the leave.
    std::map<int, int> want;
    for (int len : M.values) want[len]++;
    GraphDecomposition out;
    out.host = host;
    for (auto& w : full.walks) {
        auto it = want.find(w.length());
        if (it != want.end() && it->second > 0) {
            it->second--;
            out.walks.push_back(std::move(w));
        } else {
            for (const auto& e : w.edges) out.leave.push_back(e);
        }
    }
    std::sort(out.leave.begin(), out.leave.end());
    return out;
}

bool brute_force_packing_exists(const Multigraph& g, const LengthList& M, WalkKind kind) {
    if (g.edge_count() > 30)
        throw InstanceTooLarge("brute_force_packing_exists: host has more than 30 edges");
    long long min_part = kind == WalkKind::cycle ? 2 : 1;
    long long max_part = kind == WalkKind::cycle ? g.n() : g.n() - 1;
    for (int len : M.values)
        if (len < min_part || len > max_part) return false;
    if (M.sigma() > g.edge_count()) return false;
    if (M.empty()) return true;
    engine::ExactOptions eo;
    eo.kind = kind;
    eo.exact_cover = false;
    eo.node_budget = 0; // complete search
    eo.randomize = false;
    std::vector<engine::VWalk> walks;
    return engine::exact_search(g, M.values, eo, &walks) == engine::Status::found;
}

std::vector<std::string> verify_graph_decomposition(const Multigraph& g, const GraphDecomposition& d,
                                                    const LengthList& M, WalkKind kind) {
    std::vector<std::string> bad;
    auto note = [&](const std::string& s) { bad.push_back(s); };

    std::map<EdgeInstance, int> seen;
    std::multiset<int> walk_lengths;
    for (std::size_t wi = 0; wi < d.walks.size(); ++wi) {
        const GraphWalk& w = d.walks[wi];
        std::string at = "walk " + std::to_string(wi) + ": ";
        if (w.kind != kind) note(at + "wrong walk kind");
        std::size_t nv = w.vertices.size(), ne = w.edges.size();
        if (w.kind == WalkKind::cycle ? (nv != ne || nv < 2) : (nv != ne + 1 || ne < 1)) {
            note(at + "vertex/edge count mismatch");
            continue;
        }
        std::set<int> distinct(w.vertices.begin(), w.vertices.end());
        if (distinct.size() != nv) note(at + "repeated vertex");
        for (int v : w.vertices)
            if (v < 1 || v > g.n()) note(at + "vertex out of range");
        for (std::size_t i = 0; i < ne; ++i) {
            int a = w.vertices[i % nv];
            int b = w.kind == WalkKind::cycle ? w.vertices[(i + 1) % nv] : w.vertices[i + 1];
            const EdgeInstance& e = w.edges[i];
            if (!(VertexPair(a, b) == e.pair())) note(at + "edge " + std::to_string(i) + " does not join its vertices");
            if (e.copy < 0 || e.copy >= g.mult(e.pair())) note(at + "edge copy index out of range");
            seen[e]++;
        }
        walk_lengths.insert(static_cast<int>(ne));
    }
    for (const auto& e : d.leave) {
        if (e.copy < 0 || e.copy >= g.mult(e.pair())) note("leave edge copy index out of range");
        seen[e]++;
    }
    for (const auto& [e, cnt] : seen)
        if (cnt > 1)
            note("edge instance reused: {" + std::to_string(e.x) + "," + std::to_string(e.y) + "}#" +
                 std::to_string(e.copy));
    long long covered = 0;
    for (const auto& [e, cnt] : seen) covered += cnt;
    if (covered != g.edge_count()) note("coverage mismatch: walks+leave do not partition the host edges");

    std::multiset<int> want(M.values.begin(), M.values.end());
    if (walk_lengths != want) note("length multiset mismatch");
    return bad;
}

} // namespace berge
