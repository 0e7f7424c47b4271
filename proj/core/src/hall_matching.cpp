#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

#include "berge/admissibility.hpp"
#include "berge/berge_lift.hpp"

namespace berge {

namespace {

constexpr long long kMaxSideSize = 20'000'000;

// The k-set side of the containment graph, addressed by colex rank of the
// smaller of (set, complement). Neighbors of a pair {x,y} are enumerated on
// the fly so no adjacency list is ever stored.
class KsetSpace {
public:
    KsetSpace(int n, int k) : n_(n), k_(k), by_comp_(n - k < k), rep_(by_comp_ ? n - k : k) {
        tab_.assign(static_cast<std::size_t>(n + 1) * (rep_ + 1), 0);
        for (int m = 0; m <= n; ++m)
            for (int i = 0; i <= rep_; ++i) {
                long long v;
                if (i == 0)
                    v = 1;
                else if (m == 0)
                    v = 0;
                else
                    v = at(m - 1, i) + at(m - 1, i - 1);
                tab_[static_cast<std::size_t>(m) * (rep_ + 1) + i] = v;
            }
        count_ = at(n, rep_);
    }

    long long count() const { return count_; }
    bool by_complement() const { return by_comp_; }
    int rep_size() const { return rep_; }

    long long rank(const std::vector<int>& rep_set) const {
        long long r = 0;
        for (int i = 0; i < rep_; ++i) r += at(rep_set[i] - 1, i + 1);
        return r;
    }

    std::vector<int> unrank(long long r) const {
        std::vector<int> out(rep_);
        for (int i = rep_; i >= 1; --i) {
            int c = i;
            while (c < n_ && at(c, i) <= r) c++;
            out[i - 1] = c;
            r -= at(c - 1, i);
        }
        return out;
    }

    std::vector<int> members_of(long long r, int n) const {
        std::vector<int> rep_set = unrank(r);
        if (!by_comp_) return rep_set;
        std::vector<char> in(n + 1, 0);
        for (int v : rep_set) in[v] = 1;
        std::vector<int> out;
        out.reserve(k_);
        for (int v = 1; v <= n; ++v)
            if (!in[v]) out.push_back(v);
        return out;
    }

private:
    long long at(int m, int i) const { return tab_[static_cast<std::size_t>(m) * (rep_ + 1) + i]; }

    int n_, k_;
    bool by_comp_;
    int rep_;
    long long count_ = 0;
    std::vector<long long> tab_;
};

// Enumerates the k-sets containing a fixed pair in lexicographic order of
// the full k-set, yielding each set's representative rank.
class NeighborEnum {
public:
    NeighborEnum(const KsetSpace& space, int n, int k, int x, int y)
        : space_(space), pick_(space.by_complement() ? n - k : k - 2) {
        for (int v = 1; v <= n; ++v)
            if (v != x && v != y) avail_.push_back(v);
        if (!space_.by_complement()) {
            base_ = {x, y};
        }
        idx_.resize(pick_);
        if (space_.by_complement()) {
            // complements descend as the k-sets ascend
            for (int i = 0; i < pick_; ++i) idx_[i] = static_cast<int>(avail_.size()) - pick_ + i;
        } else {
            for (int i = 0; i < pick_; ++i) idx_[i] = i;
        }
        done_ = pick_ > static_cast<int>(avail_.size());
    }

    bool next(long long* rank_out) {
        if (done_) return false;
        *rank_out = current_rank();
        advance();
        return true;
    }

private:
    long long current_rank() {
        scratch_.clear();
        for (int i = 0; i < pick_; ++i) scratch_.push_back(avail_[idx_[i]]);
        if (!space_.by_complement()) {
            scratch_.insert(scratch_.end(), base_.begin(), base_.end());
            std::sort(scratch_.begin(), scratch_.end());
        }
        return space_.rank(scratch_);
    }

    void advance() {
        int m = static_cast<int>(avail_.size());
        if (pick_ == 0) {
            done_ = true;
            return;
        }
        if (!space_.by_complement()) {
            int i = pick_ - 1;
            while (i >= 0 && idx_[i] == m - pick_ + i) i--;
            if (i < 0) {
                done_ = true;
                return;
            }
            idx_[i]++;
            for (int j = i + 1; j < pick_; ++j) idx_[j] = idx_[j - 1] + 1;
        } else {
            // previous combination in lex order
            int i = pick_ - 1;
            while (i >= 0) {
                int floor_i = i == 0 ? 0 : idx_[i - 1] + 1;
                if (idx_[i] > floor_i) break;
                i--;
            }
            if (i < 0) {
                done_ = true;
                return;
            }
            idx_[i]--;
            for (int j = i + 1; j < pick_; ++j) idx_[j] = m - pick_ + j;
        }
    }

    const KsetSpace& space_;
    int pick_;
    std::vector<int> avail_, base_, idx_;
    std::vector<int> scratch_;
    bool done_ = false;
};

} // namespace

EdgeAssignment hall_matching(const Multigraph& h, int n, int k, int mu) {
    if (k < 2 || k >= n) throw InfeasibleInput("hall_matching: need 2 <= k < n");
    if (mu < 1) throw InfeasibleInput("hall_matching: mu must be positive");
    long long ksets = binom(n, k);
    if (ksets > kMaxSideSize / mu)
        throw InstanceTooLarge("hall_matching: mu*C(n,k) too large to match in memory");
    long long a_size = ksets * mu;
    if (h.edge_count() != a_size)
        throw InfeasibleInput("hall_matching: |E(h)| != mu*C(n,k)");

    std::vector<EdgeInstance> bs;
    bs.reserve(static_cast<std::size_t>(a_size));
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            for (int c = 0; c < h.mult(x, y); ++c) bs.push_back(EdgeInstance(x, y, c));
    const int nb = static_cast<int>(bs.size());

    KsetSpace space(n, k);
    std::vector<int> match_a(static_cast<std::size_t>(a_size), -1);
    std::vector<long long> match_b(nb, -1); // A index = rank*mu + copy

    // Greedy seed: each pair instance grabs the lexicographically smallest
    // k-set that still has a free copy.
    for (int b = 0; b < nb; ++b) {
        NeighborEnum en(space, n, k, bs[b].x, bs[b].y);
        long long r;
        while (en.next(&r)) {
            bool got = false;
            for (int c = 0; c < mu; ++c) {
                long long a = r * mu + c;
                if (match_a[static_cast<std::size_t>(a)] == -1) {
                    match_a[static_cast<std::size_t>(a)] = b;
                    match_b[b] = a;
                    got = true;
                    break;
                }
            }
            if (got) break;
        }
    }

    // Hopcroft-Karp phases over the remaining free instances.
    const int INF = std::numeric_limits<int>::max();
    std::vector<int> dist(nb);
    std::deque<int> queue;

    auto bfs = [&]() {
        bool reachable_free_a = false;
        queue.clear();
        for (int b = 0; b < nb; ++b) {
            if (match_b[b] == -1) {
                dist[b] = 0;
                queue.push_back(b);
            } else {
                dist[b] = INF;
            }
        }
        while (!queue.empty()) {
            int b = queue.front();
            queue.pop_front();
            NeighborEnum en(space, n, k, bs[b].x, bs[b].y);
            long long r;
            while (en.next(&r)) {
                for (int c = 0; c < mu; ++c) {
                    long long a = r * mu + c;
                    int owner = match_a[static_cast<std::size_t>(a)];
                    if (owner == -1) {
                        reachable_free_a = true;
                    } else if (dist[owner] == INF) {
                        dist[owner] = dist[b] + 1;
                        queue.push_back(owner);
                    }
                }
            }
        }
        return reachable_free_a;
    };

    std::function<bool(int)> dfs = [&](int b) -> bool {
        NeighborEnum en(space, n, k, bs[b].x, bs[b].y);
        long long r;
        while (en.next(&r)) {
            for (int c = 0; c < mu; ++c) {
                long long a = r * mu + c;
                int owner = match_a[static_cast<std::size_t>(a)];
                if (owner == -1 || (dist[owner] == dist[b] + 1 && dfs(owner))) {
                    match_a[static_cast<std::size_t>(a)] = b;
                    match_b[b] = a;
                    return true;
                }
            }
        }
        dist[b] = INF;
        return false;
    };

    long long matched = 0;
    for (int b = 0; b < nb; ++b)
        if (match_b[b] != -1) matched++;
    while (matched < nb && bfs()) {
        for (int b = 0; b < nb; ++b)
            if (match_b[b] == -1 && dfs(b)) matched++;
    }

    if (matched < nb) {
        // Hall violator: the free instances plus everything reachable by
        // alternating paths. Its joint neighborhood is fully matched to the
        // non-free part, so it is strictly smaller than the set itself.
        bfs();
        std::vector<EdgeInstance> violator;
        std::vector<char> seen_a; // dedupe neighborhood over ksets*mu
        seen_a.assign(static_cast<std::size_t>(a_size), 0);
        long long nbhd = 0;
        for (int b = 0; b < nb; ++b) {
            if (dist[b] == INF) continue;
            violator.push_back(bs[b]);
            NeighborEnum en(space, n, k, bs[b].x, bs[b].y);
            long long r;
            while (en.next(&r)) {
                for (int c = 0; c < mu; ++c) {
                    long long a = r * mu + c;
                    if (!seen_a[static_cast<std::size_t>(a)]) {
                        seen_a[static_cast<std::size_t>(a)] = 1;
                        nbhd++;
                    }
                }
            }
        }
        throw NoPerfectMatching("hall_matching: no perfect matching; Hall violator of size " +
                                    std::to_string(violator.size()) + " with neighborhood " +
                                    std::to_string(nbhd),
                                std::move(violator), nbhd);
    }

    EdgeAssignment eta;
    for (int b = 0; b < nb; ++b) {
        long long a = match_b[b];
        HyperEdge e;
        e.members = space.members_of(a / mu, n);
        e.copy = static_cast<int>(a % mu);
        eta.assign(bs[b], std::move(e));
    }
    return eta;
}

} // namespace berge
