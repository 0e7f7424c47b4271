#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "berge/admissibility.hpp"
#include "berge/berge_lift.hpp"

namespace berge {

std::vector<std::vector<VertexPair>> round_robin_coloring(int mu, int n) {
    if (n < 3) throw InfeasibleInput("round_robin_coloring: n must be at least 3");
    if (mu < 1) throw InfeasibleInput("round_robin_coloring: mu must be positive");
    std::vector<std::vector<VertexPair>> base;
    if (n % 2 == 0) {
        // n-1 rounds of perfect matchings: vertex n is fixed, the others rotate.
        int m = n - 1;
        for (int r = 0; r < m; ++r) {
            std::vector<VertexPair> cls;
            cls.emplace_back(n, r + 1);
            for (int i = 1; i <= n / 2 - 1; ++i) {
                int a = ((r - i) % m + m) % m + 1;
                int b = (r + i) % m + 1;
                cls.emplace_back(a, b);
            }
            std::sort(cls.begin(), cls.end());
            base.push_back(std::move(cls));
        }
    } else {
        // n rounds of near-perfect matchings: round r leaves vertex r+1 out.
        for (int r = 0; r < n; ++r) {
            std::vector<VertexPair> cls;
            for (int i = 1; i <= (n - 1) / 2; ++i) {
                int a = ((r - i) % n + n) % n + 1;
                int b = (r + i) % n + 1;
                cls.emplace_back(a, b);
            }
            std::sort(cls.begin(), cls.end());
            base.push_back(std::move(cls));
        }
    }
    std::vector<std::vector<VertexPair>> out;
    out.reserve(base.size() * mu);
    for (int rep = 0; rep < mu; ++rep)
        for (const auto& cls : base) out.push_back(cls);
    return out;
}

namespace {

// Kuhn's augmenting-path SDR: one distinct representative per set, scanned
// in deterministic order.
std::vector<int> find_sdr(const std::vector<std::vector<int>>& sets, int n) {
    std::vector<int> owner(n + 1, -1);
    std::vector<char> visited(n + 1, 0);
    std::function<bool(int)> augment = [&](int si) -> bool {
        for (int v : sets[si]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (owner[v] == -1 || augment(owner[v])) {
                owner[v] = si;
                return true;
            }
        }
        return false;
    };
    for (std::size_t si = 0; si < sets.size(); ++si) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(static_cast<int>(si))) return {};
    }
    std::vector<int> rep(sets.size(), 0);
    for (int v = 1; v <= n; ++v)
        if (owner[v] != -1) rep[owner[v]] = v;
    return rep;
}

std::vector<int> complement_of_pair(int n, const VertexPair& p) {
    std::vector<int> out;
    out.reserve(n - 2);
    for (int v = 1; v <= n; ++v)
        if (v != p.lo && v != p.hi) out.push_back(v);
    return out;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_lists(int n, long long want_total, const LengthList& cycles, const LengthList& paths,
                 const char* what) {
    for (int m : cycles.values)
        if (m < 2 || m > n) throw InfeasibleInput(std::string(what) + ": cycle length out of [2,n]");
    for (int m : paths.values)
        if (m < 1 || m > n - 1) throw InfeasibleInput(std::string(what) + ": path length out of [1,n-1]");
    if (cycles.sigma() + paths.sigma() != want_total)
        throw InfeasibleInput(std::string(what) + ": lengths must sum to mu*C(n,k)");
}

} // namespace

HyperDecomposition case2_decompose(int n, int mu, const LengthList& cycle_lengths,
                                   const LengthList& path_lengths) {
    if (n < 5) throw InfeasibleInput("case2_decompose: k=n-2 needs n >= 5");
    if (mu < 1) throw InfeasibleInput("case2_decompose: mu must be positive");
    const int k = n - 2;
    check_lists(n, static_cast<long long>(mu) * binom2(n), cycle_lengths, path_lengths, "case2_decompose");

    // Edge order: color classes in round order, lexicographic inside a class,
    // parallel copies by repetition index.
    auto classes = round_robin_coloring(mu, n);
    int base_rounds = static_cast<int>(classes.size()) / mu;
    std::vector<VertexPair> epairs;
    std::vector<int> ecopy;
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& p : classes[c]) {
            epairs.push_back(p);
            ecopy.push_back(static_cast<int>(c) / base_rounds);
        }
    const long long total = static_cast<long long>(epairs.size());

    std::vector<std::vector<int>> fsets(total);
    for (long long i = 0; i < total; ++i) fsets[i] = complement_of_pair(n, epairs[i]);

    HyperDecomposition out;
    out.n = n;
    out.k = k;
    out.mu = mu;

    long long offset = 0;
    auto emit_block = [&](int len, WalkKind kind) {
        // 0-based block [offset, offset+len)
        std::vector<std::vector<int>> g;
        if (kind == WalkKind::cycle) {
            g.push_back(sorted_intersection(fsets[offset + len - 1], fsets[offset]));
            for (int j = 1; j <= len - 1; ++j)
                g.push_back(sorted_intersection(fsets[offset + j - 1], fsets[offset + j]));
        } else {
            g.push_back(fsets[offset]);
            for (int j = 1; j <= len - 1; ++j)
                g.push_back(sorted_intersection(fsets[offset + j - 1], fsets[offset + j]));
            g.push_back(fsets[offset + len - 1]);
        }
        std::vector<int> sdr = find_sdr(g, n);
        if (sdr.empty())
            throw SDRNotFound("case2_decompose: no SDR for a block of length " + std::to_string(len));
        BergeWalk w;
        w.kind = kind;
        w.core = sdr;
        for (int j = 0; j < len; ++j) {
            HyperEdge e;
            e.members = fsets[offset + j];
            e.copy = ecopy[offset + j];
            w.edges.push_back(std::move(e));
        }
        out.walks.push_back(std::move(w));
        offset += len;
    };

    for (int len : cycle_lengths.values) emit_block(len, WalkKind::cycle);
    for (int len : path_lengths.values) emit_block(len, WalkKind::path);
    return out;
}

HyperDecomposition case3_decompose(int n, int mu, const LengthList& cycle_lengths,
                                   const LengthList& path_lengths) {
    if (n < 4) throw InfeasibleInput("case3_decompose: k=n-1 needs n >= 4");
    if (mu < 1) throw InfeasibleInput("case3_decompose: mu must be positive");
    const int k = n - 1;
    check_lists(n, static_cast<long long>(mu) * n, cycle_lengths, path_lengths, "case3_decompose");

    // r_i = ((i-1) mod n) + 1 and f_i = [n] \ {r_i}, with 1-based i.
    auto rv = [&](long long i) { return static_cast<int>((i - 1) % n) + 1; };
    auto fedge = [&](long long i) {
        HyperEdge e;
        e.members.reserve(k);
        int miss = rv(i);
        for (int v = 1; v <= n; ++v)
            if (v != miss) e.members.push_back(v);
        e.copy = static_cast<int>((i - 1) / n);
        return e;
    };

    HyperDecomposition out;
    out.n = n;
    out.k = k;
    out.mu = mu;

    long long sigma = 0; // 1-based prefix boundary
    auto emit_cycle = [&](int len) {
        BergeWalk w;
        w.kind = WalkKind::cycle;
        if (len == 2) {
            w.core = {rv(sigma + 3), rv(sigma + 4)};
        } else {
            for (long long i = sigma + 2; i <= sigma + len + 1; ++i) w.core.push_back(rv(i));
        }
        for (long long i = sigma + 1; i <= sigma + len; ++i) w.edges.push_back(fedge(i));
        sigma += len;
        out.walks.push_back(std::move(w));
    };
    auto emit_path = [&](int len) {
        BergeWalk w;
        w.kind = WalkKind::path;
        for (long long i = sigma + 2; i <= sigma + len + 2; ++i) w.core.push_back(rv(i));
        for (long long i = sigma + 1; i <= sigma + len; ++i) w.edges.push_back(fedge(i));
        sigma += len;
        out.walks.push_back(std::move(w));
    };

    for (int len : cycle_lengths.values) emit_cycle(len);
    for (int len : path_lengths.values) emit_path(len);
    return out;
}

} // namespace berge
