#include "berge/assembly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace berge {

std::pair<int, int> split_levels(const LengthList& cycle_lengths, const LengthList& path_lengths, int n) {
    if (n < 2) throw InfeasibleInput("split_levels: n must be at least 2");
    long long c2 = binom2(n);
    return {static_cast<int>(path_lengths.sigma() / c2), static_cast<int>(cycle_lengths.sigma() / c2)};
}

GraphDecomposition merge_decompositions(const Multigraph& g1, const GraphDecomposition& d1,
                                        const Multigraph& g2, const GraphDecomposition& d2) {
    GraphDecomposition out;
    out.host = graph_union(g1, g2);
    out.walks = d1.walks;
    out.leave = d1.leave;
    for (const auto& w : d2.walks) {
        GraphWalk nw = w;
        for (auto& e : nw.edges) e.copy += g1.mult(e.x, e.y);
        out.walks.push_back(std::move(nw));
    }
    for (const auto& e : d2.leave) out.leave.push_back(EdgeInstance(e.x, e.y, e.copy + g1.mult(e.x, e.y)));
    return out;
}

namespace {

// Restrict a packing to its used edges: the subgraph they span, with copy
// indices renumbered per pair in walk order.
std::pair<Multigraph, GraphDecomposition> compress_to_used(int n, const std::vector<GraphWalk>& walks) {
    Multigraph g(n);
    for (const auto& w : walks)
        for (const auto& e : w.edges) g.add(e.x, e.y, 1);
    GraphDecomposition d;
    d.host = g;
    std::map<std::pair<int, int>, int> next;
    for (const auto& w : walks) {
        GraphWalk nw = w;
        for (auto& e : nw.edges) e.copy = next[{e.x, e.y}]++;
        d.walks.push_back(std::move(nw));
    }
    return {g, d};
}

void check_level_bounds(const Multigraph& g, int lo, int hi, const char* what) {
    for (int x = 1; x <= g.n(); ++x)
        for (int y = x + 1; y <= g.n(); ++y) {
            int m = g.mult(x, y);
            if (m < lo || m > hi)
                throw std::logic_error(std::string(what) + ": multiplicity " + std::to_string(m) +
                                       " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
        }
}

void check_length_multiset(const GraphDecomposition& d, const LengthList& want, const char* what) {
    std::multiset<int> have;
    for (const auto& w : d.walks) have.insert(w.length());
    std::multiset<int> need(want.values.begin(), want.values.end());
    if (have != need) throw std::logic_error(std::string(what) + ": walk length multiset mismatch");
}

// All digons of lambda*K_n, spread as floor(lambda/2) per pair.
std::pair<Multigraph, GraphDecomposition> all_digon_host(int lambda, int n) {
    Multigraph g = complete_multigraph(lambda, n);
    GraphDecomposition d;
    d.host = g;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            for (int i = 0; i + 1 < lambda; i += 2) {
                GraphWalk w;
                w.kind = WalkKind::cycle;
                w.vertices = {x, y};
                w.edges = {EdgeInstance(x, y, i), EdgeInstance(x, y, i + 1)};
                d.walks.push_back(std::move(w));
            }
    return {g, d};
}

bool is_canonical_matching_pair(const VertexPair& p) { return p.hi == p.lo + 1 && p.lo % 2 == 1; }

} // namespace

StagedHost build_hp(const LengthList& path_lengths, int lambda, int n, const SolverConfig& cfg) {
    if (n < 2) throw InfeasibleInput("build_hp: n must be at least 2");
    for (int m : path_lengths.values)
        if (m < 1 || m > n - 1) throw InfeasibleInput("build_hp: path length out of range");
    StagedHost out;
    out.level_bounds = {lambda, lambda + 1};
    if (path_lengths.empty()) {
        if (lambda != 0) throw InfeasibleInput("build_hp: empty list requires lambda=0");
        out.graph = Multigraph(n);
        out.decomposition.host = out.graph;
        return out;
    }

    LengthList sorted = path_lengths.sorted_desc();
    long long cap = static_cast<long long>(lambda) * binom2(n);
    if (sorted.sigma() < cap || sorted.sigma() >= cap + binom2(n))
        throw InfeasibleInput("build_hp: lambda does not match the length sum");

    std::size_t s = sorted.size();
    std::size_t s0 = 0;
    long long prefix = 0;
    while (s0 < s && prefix + sorted.values[s0] <= cap) prefix += sorted.values[s0++];
    int q = static_cast<int>(cap - prefix);
    int qp = s0 < s ? sorted.values[s0] - q : 0;

    // P' fills lambda*K_n exactly; P'' packs into one simple layer.
    LengthList p_prime, p_second;
    for (std::size_t i = 0; i < s0; ++i) p_prime.values.push_back(sorted.values[i]);
    if (q > 0) p_prime.values.push_back(q);
    if (qp > 0) p_second.values.push_back(qp);
    for (std::size_t i = s0 + 1; i < s; ++i) p_second.values.push_back(sorted.values[i]);

    Multigraph h1(n);
    GraphDecomposition d1;
    d1.host = h1;
    if (lambda > 0) {
        h1 = complete_multigraph(lambda, n);
        d1 = path_packing(lambda, n, p_prime, cfg);
    }
    Multigraph h2(n);
    GraphDecomposition d2;
    d2.host = h2;
    if (!p_second.empty()) {
        GraphDecomposition packed = path_packing(1, n, p_second, cfg);
        std::tie(h2, d2) = compress_to_used(n, packed.walks);
    }

    std::vector<GraphWalk> keep1 = d1.walks, keep2 = d2.walks;
    GraphWalk qwalk, qpwalk;
    bool concat = q > 0 && qp > 0; // q > 0 forces s0 < s, hence q' > 0
    if (concat) {
        auto it = std::find_if(keep1.begin(), keep1.end(), [&](const GraphWalk& w) { return w.length() == q; });
        if (it == keep1.end()) throw std::logic_error("build_hp: q-path missing");
        qwalk = *it;
        keep1.erase(it);
    }
    if (concat) {
        // Rename the vertices of the simple layer so the q'-path starts at the
        // free end of the q-path and continues through fresh vertices.
        auto it = std::find_if(keep2.begin(), keep2.end(), [&](const GraphWalk& w) { return w.length() == qp; });
        if (it == keep2.end()) throw std::logic_error("build_hp: q'-path missing");
        qpwalk = *it;
        keep2.erase(it);

        std::vector<int> perm(n + 1, 0);
        std::vector<char> taken(n + 1, 0);   // already the image of some vertex
        std::vector<char> blocked(n + 1, 0); // q-path vertices: not usable as fresh targets
        int hook = qwalk.vertices.back();
        perm[qpwalk.vertices.front()] = hook;
        taken[hook] = 1;
        for (int v : qwalk.vertices) blocked[v] = 1;
        int fresh = 1;
        for (std::size_t i = 1; i < qpwalk.vertices.size(); ++i) {
            while (fresh <= n && (taken[fresh] || blocked[fresh])) fresh++;
            if (fresh > n) throw std::logic_error("build_hp: no fresh vertex for relabeling");
            perm[qpwalk.vertices[i]] = fresh;
            taken[fresh] = 1;
        }
        int next_target = 1;
        for (int v = 1; v <= n; ++v) {
            if (perm[v] != 0) continue;
            while (taken[next_target]) next_target++;
            perm[v] = next_target;
            taken[next_target] = 1;
        }
        auto relabel_walk = [&](GraphWalk& w) {
            for (int& v : w.vertices) v = perm[v];
            for (auto& e : w.edges) {
                int a = perm[e.x], b = perm[e.y];
                e = EdgeInstance(a, b, e.copy);
            }
        };
        relabel_walk(qpwalk);
        for (auto& w : keep2) relabel_walk(w);
        Multigraph h2r(n);
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y) {
                int m = h2.mult(x, y);
                if (m > 0) h2r.add(perm[x], perm[y], m);
            }
        h2 = h2r;
    }

    out.graph = graph_union(h1, h2);
    out.decomposition.host = out.graph;
    out.decomposition.walks = keep1;
    for (auto w : keep2) {
        for (auto& e : w.edges) e.copy += h1.mult(e.x, e.y);
        out.decomposition.walks.push_back(std::move(w));
    }
    if (concat) {
        GraphWalk joined;
        joined.kind = WalkKind::path;
        joined.vertices = qwalk.vertices;
        joined.vertices.insert(joined.vertices.end(), qpwalk.vertices.begin() + 1, qpwalk.vertices.end());
        std::set<int> distinct(joined.vertices.begin(), joined.vertices.end());
        if (distinct.size() != joined.vertices.size())
            throw std::logic_error("build_hp: concatenated path repeats a vertex");
        joined.edges = qwalk.edges;
        for (auto e : qpwalk.edges) {
            e.copy += h1.mult(e.x, e.y);
            joined.edges.push_back(e);
        }
        out.decomposition.walks.push_back(std::move(joined));
    }

    check_level_bounds(out.graph, lambda, lambda + 1, "build_hp");
    check_length_multiset(out.decomposition, path_lengths, "build_hp");
    return out;
}

StagedHost build_hc(const LengthList& cycle_lengths, int lambda_c, int n, const SolverConfig& cfg) {
    if (n < 2) throw InfeasibleInput("build_hc: n must be at least 2");
    for (int m : cycle_lengths.values)
        if (m < 2 || m > n) throw InfeasibleInput("build_hc: cycle length out of range");
    StagedHost out;
    out.level_bounds = {std::max(0, lambda_c - 2), lambda_c + 2};
    if (cycle_lengths.empty()) {
        if (lambda_c != 0) throw InfeasibleInput("build_hc: empty list requires lambda'=0");
        out.graph = Multigraph(n);
        out.decomposition.host = out.graph;
        return out;
    }

    LengthList sorted = cycle_lengths.sorted_desc();
    long long cap_sum = static_cast<long long>(lambda_c) * binom2(n);
    if (sorted.sigma() < cap_sum || sorted.sigma() >= cap_sum + binom2(n))
        throw InfeasibleInput("build_hc: lambda' does not match the length sum");

    const std::size_t t = sorted.size();
    const long long c2 = binom2(n);

    if (lambda_c == 0) {
        // Everything packs into two simple layers; no decomposition stage.
        GraphDecomposition packed = cycle_packing(2, n, sorted, cfg);
        auto [g4, d4] = compress_to_used(n, packed.walks);
        out.graph = g4;
        out.decomposition = d4;
        out.branch_label = "case1-branch-lambda-zero";
        check_level_bounds(out.graph, 0, 2, "build_hc");
        check_length_multiset(out.decomposition, cycle_lengths, "build_hc");
        return out;
    }

    long long fprime = f_edges(lambda_c, n);
    std::size_t t0 = 0;
    long long prefix = 0;
    while (t0 < t && prefix + sorted.values[t0] <= fprime) prefix += sorted.values[t0++];
    long long r = fprime - prefix;

    LengthList M;
    for (std::size_t i = 0; i < t0; ++i) M.values.push_back(sorted.values[i]);
    if (r == 1) {
        if (t0 == 0 || sorted.values[t0 - 1] >= n) throw std::logic_error("build_hc: cannot bump n_t0 for r=1");
        M.values[t0 - 1] += 1;
    } else if (r >= 2) {
        M.values.push_back(static_cast<int>(r));
    }
    if (M.sigma() != fprime) throw std::logic_error("build_hc: sigma(M) != f(lambda',n)");

    bool odd = lambda_c % 2 == 1;
    long long digon_cap = odd ? static_cast<long long>((lambda_c - 1) / 2) * c2
                              : static_cast<long long>((lambda_c - 2) / 2) * c2;
    long long l = static_cast<long long>(M.size());

    bool bulk_branch = odd ? sorted.nu2() >= digon_cap
                           : sorted.max_part() + l - 2 >= lambda_c / 2 * c2;

    if (bulk_branch) {
        // H3: all-digon layers; H4: the largest t' lengths packed into a
        // 3-layer (lambda' odd) or 4-layer (lambda' even) host.
        int digon_lambda = odd ? lambda_c - 1 : lambda_c - 2;
        long long tprime = static_cast<long long>(t) - digon_cap;
        if (tprime < 0) throw std::logic_error("build_hc: t' negative");
        for (std::size_t i = static_cast<std::size_t>(tprime); i < t; ++i)
            if (sorted.values[i] != 2) throw std::logic_error("build_hc: non-digon in the bulk tail");
        auto [g3, d3] = all_digon_host(digon_lambda, n);
        LengthList rest;
        for (std::size_t i = 0; i < static_cast<std::size_t>(tprime); ++i)
            rest.values.push_back(sorted.values[i]);
        Multigraph g4(n);
        GraphDecomposition d4;
        d4.host = g4;
        if (!rest.empty()) {
            GraphDecomposition packed = cycle_packing(odd ? 3 : 4, n, rest, cfg);
            std::tie(g4, d4) = compress_to_used(n, packed.walks);
        }
        GraphDecomposition merged = merge_decompositions(g3, d3, g4, d4);
        out.graph = merged.host;
        out.decomposition = merged;
        out.branch_label = odd ? "case1.1-branch-nu2-large" : "case1.2-branch-l-large";
    } else {
        // H3: an M-cycle decomposition of lambda'*K_n - I minus one cycle F;
        // H4: the remaining lengths packed into 2*K_n.
        std::vector<VertexPair> I = near_factor_I(lambda_c, n);
        SolverConfig cfg2 = cfg;
        cfg2.digon_avoid_pairs = I;
        if (!is_admissible(lambda_c, n, M)) throw std::logic_error("build_hc: M unexpectedly inadmissible");

        int f_len = r == 1 ? sorted.values[t0 - 1] + 1 : static_cast<int>(r);
        GraphDecomposition D;
        std::size_t f_idx = 0;
        bool found = false;
        for (int retry = 0; retry < 3 && !found; ++retry) {
            SolverConfig cfgr = cfg2;
            cfgr.seed = cfg2.seed + static_cast<std::uint64_t>(retry) * 0x9e3779b9ULL;
            D = cycle_decomposition(lambda_c, n, M, cfgr);
            if (r == 0) {
                found = true;
                break;
            }
            for (std::size_t i = 0; i < D.walks.size(); ++i) {
                if (D.walks[i].length() != f_len) continue;
                // removing a digon that sits on a matching pair would push the
                // pair below lambda'-2
                if (f_len == 2 && !I.empty() && is_canonical_matching_pair(D.walks[i].edges[0].pair()))
                    continue;
                f_idx = i;
                found = true;
                break;
            }
        }
        if (!found)
            throw SearchExhausted("build_hc: no removable F-cycle found", D, LengthList{{f_len}});

        Multigraph h3 = subtract(complete_multigraph(lambda_c, n), I);
        if (r > 0)
            for (const auto& e : D.walks[f_idx].edges) h3.add(e.x, e.y, -1);
        // Reindex the kept walks against the reduced host.
        GraphDecomposition d3;
        d3.host = h3;
        std::map<std::pair<int, int>, int> next;
        for (std::size_t i = 0; i < D.walks.size(); ++i) {
            if (r > 0 && i == f_idx) continue;
            GraphWalk nw = D.walks[i];
            for (auto& e : nw.edges) e.copy = next[{e.x, e.y}]++;
            d3.walks.push_back(std::move(nw));
        }

        LengthList restlens;
        if (r == 1) restlens.values.push_back(sorted.values[t0 - 1]);
        for (std::size_t i = t0; i < t; ++i) restlens.values.push_back(sorted.values[i]);
        Multigraph g4(n);
        GraphDecomposition d4;
        d4.host = g4;
        if (!restlens.empty()) {
            GraphDecomposition packed = cycle_packing(2, n, restlens, cfg);
            std::tie(g4, d4) = compress_to_used(n, packed.walks);
        }
        GraphDecomposition merged = merge_decompositions(h3, d3, g4, d4);
        out.graph = merged.host;
        out.decomposition = merged;
        out.branch_label = odd ? "case1.1-branch-admissible" : "case1.2-branch-admissible";
    }

    check_level_bounds(out.graph, std::max(0, lambda_c - 2), lambda_c + 2, "build_hc");
    check_length_multiset(out.decomposition, cycle_lengths, "build_hc");
    return out;
}

AssembledHost assemble_h(const StagedHost& hp, const StagedHost& hc, int mu, int n, int k) {
    if (mu < 1) throw InfeasibleInput("assemble_h: mu must be positive");
    if (hp.graph.n() != n || hc.graph.n() != n) throw SizeMismatch("assemble_h: vertex count mismatch");
    GraphDecomposition merged = merge_decompositions(hp.graph, hp.decomposition, hc.graph, hc.decomposition);
    long long want = static_cast<long long>(mu) * binom(n, k);
    if (merged.host.edge_count() != want)
        throw SizeMismatch("assemble_h: |E(H)|=" + std::to_string(merged.host.edge_count()) +
                           " but mu*C(n,k)=" + std::to_string(want));
    int lo = merged.host.mult(1, 2), hi = lo;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
            int m = merged.host.mult(x, y);
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
    if (hi - lo > 5)
        throw SpreadTooLarge("assemble_h: multiplicity spread " + std::to_string(hi - lo) + " exceeds 5");
    AssembledHost out;
    out.graph = merged.host;
    out.decomposition = std::move(merged);
    out.lambda_lo = lo;
    out.lambda_hi = hi;
    return out;
}

} // namespace berge
