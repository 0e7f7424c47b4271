#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>

#include "engine_internal.hpp"

namespace berge::engine {
inline constexpr long long kEndgameCap = 40;
}

#define BERGE_TRACE(...)                                       \
    do {                                                       \
        if (std::getenv("BERGE_TRACE")) {                      \
            std::fprintf(stderr, __VA_ARGS__);                 \
            std::fputc('\n', stderr);                          \
        }                                                      \
    } while (0)

namespace berge::engine {
namespace {

struct Residual {
    int n = 0;
    std::vector<long long> row;
    std::vector<int> res;
    std::vector<int> deg;
    long long edges = 0;

    explicit Residual(const Multigraph& g) : n(g.n()) {
        row.assign(n + 1, 0);
        for (int x = 1; x <= n; ++x) row[x] = static_cast<long long>(x - 1) * (2 * n - x) / 2 - x;
        res.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
        deg.assign(n + 1, 0);
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y) {
                int m = g.mult(x, y);
                res[idx(x, y)] = m;
                deg[x] += m;
                deg[y] += m;
                edges += m;
            }
    }

    std::size_t idx(int x, int y) const {
        if (x > y) std::swap(x, y);
        return static_cast<std::size_t>(row[x] + y - 1);
    }
    int mult(int x, int y) const { return res[idx(x, y)]; }

    void consume(int u, int v) {
        res[idx(u, v)]--;
        deg[u]--;
        deg[v]--;
        edges--;
    }
    void restore(int u, int v) {
        res[idx(u, v)]++;
        deg[u]++;
        deg[v]++;
        edges++;
    }
    void consume_walk(const VWalk& w) {
        std::size_t m = w.verts.size();
        if (w.kind == WalkKind::cycle) {
            if (m == 2) {
                consume(w.verts[0], w.verts[1]);
                consume(w.verts[0], w.verts[1]);
            } else {
                for (std::size_t i = 0; i < m; ++i) consume(w.verts[i], w.verts[(i + 1) % m]);
            }
        } else {
            for (std::size_t i = 0; i + 1 < m; ++i) consume(w.verts[i], w.verts[i + 1]);
        }
    }
    void restore_walk(const VWalk& w) {
        std::size_t m = w.verts.size();
        if (w.kind == WalkKind::cycle) {
            if (m == 2) {
                restore(w.verts[0], w.verts[1]);
                restore(w.verts[0], w.verts[1]);
            } else {
                for (std::size_t i = 0; i < m; ++i) restore(w.verts[i], w.verts[(i + 1) % m]);
            }
        } else {
            for (std::size_t i = 0; i + 1 < m; ++i) restore(w.verts[i], w.verts[i + 1]);
        }
    }

    Multigraph to_multigraph() const {
        Multigraph g(n);
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y)
                if (int m = res[idx(x, y)]; m > 0) g.add(x, y, m);
        return g;
    }
};

// Randomized exact-length search with rotation escapes. The walk is only
// probed against multiplicities (a simple cycle or path never needs two
// copies of one pair), so nothing has to be rolled back. When the active
// endpoint has no extension, a random rotation (replace the suffix after a
// neighbor on the walk with its reversal) moves the endpoint instead of
// backtracking.
class WalkFinder {
public:
    WalkFinder(Residual& R, Rng& rng) : R_(R), rng_(rng), in_(R.n + 1, 0) {}

    // Optional per-vertex endpoint budget for exact covers: endpoints are
    // steered onto vertices with remaining quota so the residual degree
    // sequence stays on plan.
    void set_endpoint_quota(const std::vector<int>* quota) { quota_ = quota; }

    bool find_cycle(int len, int tries, long long budget_per_try, std::vector<int>* out) {
        if (len < 2 || len > R_.n) return false;
        if (len == 2) return find_digon(out);
        for (int t = 0; t < tries; ++t)
            if (attempt(len, /*cycle=*/true, budget_per_try, out)) return true;
        return false;
    }

    bool find_path(int len, int tries, long long budget_per_try, std::vector<int>* out) {
        if (len < 1 || len > R_.n - 1) return false;
        for (int t = 0; t < tries; ++t)
            if (attempt(len + 1, /*cycle=*/false, budget_per_try, out)) return true;
        return false;
    }

    // Path endpoints flip the endpoint vertex's degree parity, so tight
    // covers must spend them on odd-degree vertices.
    bool odd_deg(int v) const { return (R_.deg[v] & 1) != 0; }

private:
    bool find_digon(std::vector<int>* out) {
        for (int x = 1; x <= R_.n; ++x)
            for (int y = x + 1; y <= R_.n; ++y)
                if (R_.mult(x, y) >= 2) {
                    *out = {x, y};
                    return true;
                }
        return false;
    }

    int random_vertex(int min_deg, bool prefer_odd) {
        if (quota_ && prefer_odd) {
            int best = 0;
            for (int t = 0; t < 6 * R_.n; ++t) {
                int v = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(R_.n)));
                if (R_.deg[v] < min_deg) continue;
                if ((*quota_)[v] > ((best == 0) ? 0 : (*quota_)[best])) best = v;
                if (best && (*quota_)[best] >= 2) break;
            }
            if (best) return best;
        }
        if (prefer_odd) {
            for (int t = 0; t < 6 * R_.n; ++t) {
                int v = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(R_.n)));
                if (R_.deg[v] >= min_deg && odd_deg(v)) return v;
            }
        }
        for (int t = 0; t < 4 * R_.n; ++t) {
            int v = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(R_.n)));
            if (R_.deg[v] >= min_deg) return v;
        }
        for (int v = 1; v <= R_.n; ++v)
            if (R_.deg[v] >= min_deg) return v;
        return 0;
    }

    // Weighted-random extension: abundant parallel copies first, scarce
    // degrees breaking ties; a terminal pick strongly prefers odd degrees.
    int pick_extension(int last, bool terminal = false) {
        cands_.clear();
        for (int w = 1; w <= R_.n; ++w)
            if (!in_[w] && R_.mult(last, w) > 0) cands_.push_back(w);
        if (cands_.empty()) return 0;
        int best = -1;
        long long best_score = -1;
        for (int w : cands_) {
            long long score = static_cast<long long>(R_.mult(last, w)) * 100000 + R_.deg[w] * 16 +
                              static_cast<long long>(rng_.below(64));
            if (terminal) {
                if (quota_ ? (*quota_)[w] > 0 : odd_deg(w)) score += 100000000;
            }
            if (score > best_score) {
                best_score = score;
                best = w;
            }
        }
        return best;
    }

    bool rotate() {
        int z = seq_.back();
        cands_.clear();
        int m = static_cast<int>(seq_.size());
        for (int i = 0; i + 2 < m; ++i)
            if (R_.mult(z, seq_[i]) > 0) cands_.push_back(i);
        if (cands_.empty()) return false;
        int i = cands_[rng_.below(cands_.size())];
        std::reverse(seq_.begin() + i + 1, seq_.end());
        return true;
    }

    bool attempt(int want_verts, bool cycle, long long budget, std::vector<int>* out) {
        int start = random_vertex(cycle ? 2 : 1, /*prefer_odd=*/!cycle);
        if (start == 0) return false;
        seq_.assign(1, start);
        std::fill(in_.begin(), in_.end(), 0);
        in_[start] = 1;
        while (budget-- > 0) {
            int have = static_cast<int>(seq_.size());
            if (have == want_verts) {
                if (!cycle) {
                    for (int side = 0; side < 2; ++side) {
                        int nudges = 8; // steer this endpoint onto a wanted vertex
                        while (nudges-- > 0 && !good_endpoint(seq_.back()) && wanted_endpoint_exists() &&
                               rotate()) {
                        }
                        std::reverse(seq_.begin(), seq_.end());
                    }
                    bool ends_ok = good_endpoint(seq_.front()) && good_endpoint(seq_.back());
                    if (ends_ok || !quota_ || !wanted_endpoint_exists()) {
                        *out = seq_;
                        return true;
                    }
                    if (!rotate()) return false; // keep searching for on-plan endpoints
                    continue;
                }
                if (R_.mult(seq_.back(), seq_.front()) > 0) {
                    *out = seq_;
                    return true;
                }
                if (!rotate()) return false;
                continue;
            }
            int w = pick_extension(seq_.back(), /*terminal=*/!cycle && have == want_verts - 1);
            if (w != 0) {
                seq_.push_back(w);
                in_[w] = 1;
                continue;
            }
            // stuck: rotate, or hand the active end over
            if (rotate()) continue;
            std::reverse(seq_.begin(), seq_.end());
            if (pick_extension(seq_.back()) == 0 && !rotate()) return false;
        }
        return false;
    }

    bool good_endpoint(int v) const { return quota_ ? (*quota_)[v] > 0 : odd_deg(v); }

    bool wanted_endpoint_exists() const {
        for (int v = 1; v <= R_.n; ++v)
            if (good_endpoint(v)) return true;
        return false;
    }

    Residual& R_;
    Rng& rng_;
    std::vector<char> in_;
    std::vector<int> seq_, cands_;
    const std::vector<int>* quota_ = nullptr;
};

// Decompose an even residual into arbitrary cycles by random walking until a
// vertex repeats. The walk restarts after every extraction, so traversed but
// unconsumed prefixes can never go stale.
std::vector<VWalk> extract_junk_cycles(Residual& R, Rng& rng) {
    std::vector<VWalk> junk;
    std::vector<int> pos(R.n + 1, -1);
    std::vector<int> seq;
    long long guard = 64 * R.edges + 1024;
    while (R.edges > 0 && guard-- > 0) {
        int start = 0;
        for (int t = 0; t < 4 * R.n && start == 0; ++t) {
            int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(R.n)));
            if (R.deg[v] > 0) start = v;
        }
        if (start == 0)
            for (int v = 1; v <= R.n; ++v)
                if (R.deg[v] > 0) {
                    start = v;
                    break;
                }
        seq.assign(1, start);
        pos[start] = 0;
        for (;;) {
            int u = seq.back();
            int prev = seq.size() >= 2 ? seq[seq.size() - 2] : 0;
            long long total = 0;
            for (int c = 1; c <= R.n; ++c) {
                if (c == u) continue;
                int m = R.mult(u, c);
                if (m == 0) continue;
                if (c == prev && m < 2) continue; // cannot close a digon on one copy
                total += m;
            }
            if (total == 0) { // abandoned walk; restart elsewhere
                for (int v : seq) pos[v] = -1;
                break;
            }
            long long pickv = static_cast<long long>(rng.below(static_cast<std::uint64_t>(total)));
            int w = 0;
            for (int c = 1; c <= R.n; ++c) {
                if (c == u) continue;
                int m = R.mult(u, c);
                if (m == 0) continue;
                if (c == prev && m < 2) continue;
                if (pickv < m) {
                    w = c;
                    break;
                }
                pickv -= m;
            }
            if (pos[w] >= 0) {
                VWalk cyc{WalkKind::cycle, {}};
                cyc.verts.assign(seq.begin() + pos[w], seq.end());
                R.consume_walk(cyc);
                junk.push_back(std::move(cyc));
                for (int v : seq) pos[v] = -1;
                break;
            }
            seq.push_back(w);
            pos[w] = static_cast<int>(seq.size()) - 1;
        }
    }
    return junk;
}

// Cover an arbitrary residual with simple paths (greedy maximal walks from
// odd-degree vertices first).
std::vector<VWalk> extract_junk_paths(Residual& R, Rng& rng) {
    std::vector<VWalk> junk;
    std::vector<char> in(R.n + 1, 0);
    while (R.edges > 0) {
        int start = 0;
        for (int v = 1; v <= R.n; ++v)
            if (R.deg[v] % 2 == 1) {
                start = v;
                break;
            }
        if (start == 0)
            for (int v = 1; v <= R.n; ++v)
                if (R.deg[v] > 0) {
                    start = v;
                    break;
                }
        std::fill(in.begin(), in.end(), 0);
        std::vector<int> seq{start};
        in[start] = 1;
        for (;;) {
            int u = seq.back();
            std::vector<int> cands;
            for (int w = 1; w <= R.n; ++w)
                if (!in[w] && R.mult(u, w) > 0) cands.push_back(w);
            if (cands.empty()) break;
            int w = cands[rng.below(cands.size())];
            R.consume(u, w);
            seq.push_back(w);
            in[w] = 1;
        }
        junk.push_back({WalkKind::path, std::move(seq)});
    }
    return junk;
}

// ---------------------------------------------------------------------------
// Segment-switch hill climbing with simulated-annealing acceptance. A move
// picks two walks sharing enough vertices, splits both and recombines the
// four segments; the global edge multiset is untouched while the two walk
// lengths change.
// ---------------------------------------------------------------------------

class SwitchRepair {
public:
    SwitchRepair(std::vector<VWalk>& system, const std::vector<int>& target, bool deficit_only, int n,
                 Rng& rng)
        : sys_(system), rng_(rng), n_(n), deficit_only_(deficit_only), stamp_(n + 1, -1),
          stamp2_(n + 1, -1) {
        for (int t : target) tgt_[t]++;
        rebuild_state();
    }

    long long objective() const {
        long long obj = 0;
        for (const auto& [len, c] : tgt_) {
            auto it = cur_.find(len);
            int have = it == cur_.end() ? 0 : it->second;
            obj += deficit_only_ ? std::max(0, c - have) : std::abs(c - have);
        }
        if (!deficit_only_)
            for (const auto& [len, c] : cur_)
                if (!tgt_.count(len)) obj += c;
        return obj;
    }

    bool run(long long budget) {
        long long obj = objective();
        if (obj == 0) return true;
        // The start state is near-solved, so stay close to hill climbing and
        // restart from the incumbent whenever a stretch makes no progress.
        const double t0 = 0.35, t1 = 0.01;
        std::vector<VWalk> best = sys_;
        long long best_obj = obj;
        long long since_best = 0;
        for (long long step = 0; step < budget && sys_.size() >= 2; ++step) {
            double temp = t0 * std::pow(t1 / t0, static_cast<double>(step) / static_cast<double>(budget));
            if (sys_[0].kind == WalkKind::cycle) {
                obj += rng_.unit() < 0.25 ? try_cycle_repool(temp) : try_cycle_move(temp);
            } else {
                double roll = rng_.unit();
                if (roll < 0.18)
                    obj += try_path_split(temp);
                else if (roll < 0.40)
                    obj += try_path_merge(temp);
                else
                    obj += try_path_move(temp);
            }
            if (obj == 0) return true;
            if (obj < best_obj) {
                best_obj = obj;
                best = sys_;
                since_best = 0;
            } else if (++since_best > 4000) {
                sys_ = best;
                obj = best_obj;
                rebuild_state();
                since_best = 0;
            }
        }
        sys_ = std::move(best);
        rebuild_state();
        return best_obj == 0;
    }

private:
    void rebuild_state() {
        cur_.clear();
        at_.assign(n_ + 1, {});
        for (std::size_t i = 0; i < sys_.size(); ++i) {
            cur_[sys_[i].length()]++;
            index_add(i);
        }
    }

    void index_add(std::size_t i) {
        for (int v : sys_[i].verts) at_[v].push_back(static_cast<int>(i));
    }
    void index_remove(std::size_t i) {
        for (int v : sys_[i].verts) {
            auto& lst = at_[v];
            for (std::size_t j = 0; j < lst.size(); ++j)
                if (lst[j] == static_cast<int>(i)) {
                    lst[j] = lst.back();
                    lst.pop_back();
                    break;
                }
        }
    }
    void erase_walk(std::size_t i) {
        index_remove(i);
        if (i != sys_.size() - 1) {
            index_remove(sys_.size() - 1);
            sys_[i] = std::move(sys_.back());
            sys_.pop_back();
            index_add(i);
        } else {
            sys_.pop_back();
        }
    }

    // Random partner that shares at least `min_shared` vertices with the
    // pre-stamped walk `ia`; found through the vertex incidence lists.
    std::size_t pick_partner(std::size_t ia, std::size_t min_shared, std::vector<int>* shared) {
        const auto& av = sys_[ia].verts;
        for (int t = 0; t < 24; ++t) {
            int u = av[rng_.below(av.size())];
            const auto& lst = at_[u];
            if (lst.empty()) continue;
            std::size_t j = static_cast<std::size_t>(lst[rng_.below(lst.size())]);
            if (j == ia) continue;
            shared->clear();
            for (int v : sys_[j].verts)
                if (stamp_[v] >= 0) shared->push_back(v);
            if (shared->size() >= min_shared) return j;
        }
        return sys_.size();
    }

    int count_of(int len) const {
        auto it = cur_.find(len);
        return it == cur_.end() ? 0 : it->second;
    }
    long long swap_delta(int len, int dir) const {
        auto it = tgt_.find(len);
        int want = it == tgt_.end() ? 0 : it->second;
        int have = count_of(len);
        auto cost = [&](int h) -> long long {
            if (deficit_only_) return std::max(0, want - h);
            return std::abs(want - h);
        };
        return cost(have + dir) - cost(have);
    }
    void apply_count(int len, int dir) { cur_[len] += dir; }

    bool accept(long long delta, double temp) {
        if (delta < 0) return true;
        if (delta == 0) return (rng_.next() & 1) != 0;
        return rng_.unit() < std::exp(-static_cast<double>(delta) / temp);
    }

    // Prefer walks whose length bucket is in surplus; moves that shorten a
    // surplus bucket are the only ones that can pay.
    std::size_t pick_first() {
        for (int t = 0; t < 16; ++t) {
            std::size_t i = rng_.below(sys_.size());
            if (swap_delta(sys_[i].length(), -1) < 0) return i;
        }
        return rng_.below(sys_.size());
    }

    long long try_cycle_move(double temp) {
        std::size_t ia = pick_first();
        const std::vector<int> averts = sys_[ia].verts;
        for (std::size_t i = 0; i < averts.size(); ++i) stamp_[averts[i]] = static_cast<int>(i);
        std::vector<int> shared;
        std::size_t ib = pick_partner(ia, 2, &shared);
        long long delta = 0;
        if (ib != sys_.size()) {
            int u = shared[rng_.below(shared.size())];
            int v = u;
            while (v == u) v = shared[rng_.below(shared.size())];
            delta = cycle_switch(ia, ib, u, v, temp);
        }
        for (int w : averts) stamp_[w] = -1;
        return delta;
    }

    static std::vector<int> segment(const std::vector<int>& c, int i, int j) {
        std::vector<int> out;
        int m = static_cast<int>(c.size());
        for (int p = i;; p = (p + 1) % m) {
            out.push_back(c[p]);
            if (p == j) break;
        }
        return out;
    }

    bool interiors_disjoint(const std::vector<int>& s1, const std::vector<int>& s2) {
        for (std::size_t i = 1; i + 1 < s1.size(); ++i) stamp2_[s1[i]] = 1;
        bool ok = true;
        for (std::size_t i = 1; i + 1 < s2.size(); ++i)
            if (stamp2_[s2[i]] == 1) {
                ok = false;
                break;
            }
        for (std::size_t i = 1; i + 1 < s1.size(); ++i) stamp2_[s1[i]] = -1;
        return ok;
    }

    static std::vector<int> join_cycle(const std::vector<int>& s1, const std::vector<int>& s2) {
        // s1 runs u..v, s2 runs v..u; drop the duplicated endpoints.
        std::vector<int> out(s1);
        for (std::size_t i = 1; i + 1 < s2.size(); ++i) out.push_back(s2[i]);
        return out;
    }

    long long cycle_switch(std::size_t ia, std::size_t ib, int u, int v, double temp) {
        VWalk& A = sys_[ia];
        VWalk& B = sys_[ib];
        int pu = 0, pv = 0, qu = 0, qv = 0;
        for (std::size_t i = 0; i < A.verts.size(); ++i) {
            if (A.verts[i] == u) pu = static_cast<int>(i);
            if (A.verts[i] == v) pv = static_cast<int>(i);
        }
        for (std::size_t i = 0; i < B.verts.size(); ++i) {
            if (B.verts[i] == u) qu = static_cast<int>(i);
            if (B.verts[i] == v) qv = static_cast<int>(i);
        }
        auto a1 = segment(A.verts, pu, pv), a2 = segment(A.verts, pv, pu);
        auto b1 = segment(B.verts, qu, qv), b2 = segment(B.verts, qv, qu);

        struct Option {
            std::vector<int> c1, c2;
            bool ok = false;
        };
        Option opts[2];
        if (interiors_disjoint(a1, b1) && interiors_disjoint(a2, b2)) {
            auto rb1 = b1, rb2 = b2;
            std::reverse(rb1.begin(), rb1.end());
            std::reverse(rb2.begin(), rb2.end());
            opts[0] = {join_cycle(a1, rb1), join_cycle(a2, rb2), true};
        }
        if (interiors_disjoint(a1, b2) && interiors_disjoint(a2, b1))
            opts[1] = {join_cycle(a1, b2), join_cycle(a2, b1), true};

        int order[2] = {0, 1};
        if (rng_.next() & 1) std::swap(order[0], order[1]);
        for (int oi : order) {
            Option& o = opts[oi];
            if (!o.ok) continue;
            int la = A.length(), lb = B.length();
            int l1 = static_cast<int>(o.c1.size()), l2 = static_cast<int>(o.c2.size());
            long long delta = swap_delta(la, -1);
            apply_count(la, -1);
            delta += swap_delta(lb, -1);
            apply_count(lb, -1);
            delta += swap_delta(l1, +1);
            apply_count(l1, +1);
            delta += swap_delta(l2, +1);
            apply_count(l2, +1);
            if (accept(delta, temp)) {
                index_remove(ia);
                index_remove(ib);
                A.verts = std::move(o.c1);
                B.verts = std::move(o.c2);
                index_add(ia);
                index_add(ib);
                return delta;
            }
            apply_count(la, +1);
            apply_count(lb, +1);
            apply_count(l1, -1);
            apply_count(l2, -1);
            return 0;
        }
        return 0;
    }

    // Dissolve two or three mutually intersecting cycles and randomly
    // re-extract the pooled edges; the only move that can change the number
    // of cycles in the system. Merging k cycles into k-1 needs a pool of at
    // least three, since a simple cycle can never equal the union of two
    // intersecting ones.
    long long try_cycle_repool(double temp) {
        if (sys_.size() < 2) return 0;
        std::size_t ia = pick_first();
        for (int v : sys_[ia].verts) stamp_[v] = 1;
        std::vector<int> shared;
        std::size_t ib = pick_partner(ia, 2, &shared);
        std::vector<std::size_t> picked{ia};
        if (ib != sys_.size()) {
            picked.push_back(ib);
            if (rng_.unit() < 0.55 && sys_.size() >= 3) {
                for (int v : sys_[ib].verts) stamp_[v] = 1;
                std::size_t ic = pick_partner(ia, 2, &shared); // stamp now covers the union
                if (ic != sys_.size() && ic != ib) picked.push_back(ic);
                for (int v : sys_[ib].verts) stamp_[v] = -1;
            }
        }
        for (int v : sys_[ia].verts) stamp_[v] = -1;
        if (picked.size() < 2) return 0;

        Multigraph pool(n_);
        auto add_cycle = [&](const VWalk& w) {
            std::size_t m = w.verts.size();
            if (m == 2) {
                pool.add(w.verts[0], w.verts[1], 2);
            } else {
                for (std::size_t i = 0; i < m; ++i) pool.add(w.verts[i], w.verts[(i + 1) % m], 1);
            }
        };
        for (std::size_t i : picked) add_cycle(sys_[i]);
        Residual R(pool);
        std::vector<VWalk> parts;
        // cheap steer: occasionally aim the re-extraction at a missing length
        if (rng_.unit() < 0.4) {
            std::vector<int> deficits;
            for (const auto& [len, c] : tgt_)
                if (count_of(len) < c && len <= R.edges) deficits.push_back(len);
            if (!deficits.empty()) {
                int want = deficits[rng_.below(deficits.size())];
                WalkFinder finder(R, rng_);
                std::vector<int> cyc;
                if (finder.find_cycle(want, 1, 14LL * want, &cyc)) {
                    VWalk w{WalkKind::cycle, std::move(cyc)};
                    R.consume_walk(w);
                    parts.push_back(std::move(w));
                }
            }
        }
        std::vector<VWalk> rest = extract_junk_cycles(R, rng_);
        parts.insert(parts.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
        if (R.edges != 0 || parts.empty()) return 0;

        long long delta = 0;
        for (std::size_t i : picked) {
            delta += swap_delta(sys_[i].length(), -1);
            apply_count(sys_[i].length(), -1);
        }
        for (const auto& p : parts) {
            delta += swap_delta(p.length(), +1);
            apply_count(p.length(), +1);
        }
        if (accept(delta, temp)) {
            std::sort(picked.begin(), picked.end());
            std::size_t reuse = std::min(picked.size(), parts.size());
            for (std::size_t i = 0; i < reuse; ++i) {
                index_remove(picked[i]);
                sys_[picked[i]] = std::move(parts[i]);
                index_add(picked[i]);
            }
            for (std::size_t i = reuse; i < parts.size(); ++i) {
                sys_.push_back(std::move(parts[i]));
                index_add(sys_.size() - 1);
            }
            // erase leftovers from the back so earlier indices stay valid
            for (std::size_t i = picked.size(); i > reuse; --i) erase_walk(picked[i - 1]);
            return delta;
        }
        for (std::size_t i : picked) apply_count(sys_[i].length(), +1);
        for (const auto& p : parts) apply_count(p.length(), -1);
        return 0;
    }

    long long try_path_split(double temp) {
        std::size_t ia = pick_first();
        int la = sys_[ia].length();
        if (la < 2) return 0;
        int cut = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(la - 1)));
        long long delta = swap_delta(la, -1);
        apply_count(la, -1);
        delta += swap_delta(cut, +1);
        apply_count(cut, +1);
        delta += swap_delta(la - cut, +1);
        apply_count(la - cut, +1);
        if (accept(delta, temp)) {
            VWalk tail{WalkKind::path,
                       std::vector<int>(sys_[ia].verts.begin() + cut, sys_[ia].verts.end())};
            index_remove(ia);
            sys_[ia].verts.resize(cut + 1);
            index_add(ia);
            sys_.push_back(std::move(tail));
            index_add(sys_.size() - 1);
            return delta;
        }
        apply_count(la, +1);
        apply_count(cut, -1);
        apply_count(la - cut, -1);
        return 0;
    }

    long long try_path_merge(double temp) {
        if (sys_.size() < 2) return 0;
        for (int t = 0; t < 10; ++t) {
            std::size_t ia = rng_.below(sys_.size());
            const auto& av = sys_[ia].verts;
            bool a_back = rng_.next() & 1;
            int u = a_back ? av.back() : av.front();
            const auto& lst = at_[u];
            if (lst.empty()) continue;
            std::size_t ib = static_cast<std::size_t>(lst[rng_.below(lst.size())]);
            if (ib == ia) continue;
            const auto& bv = sys_[ib].verts;
            bool b_front;
            if (bv.front() == u)
                b_front = true;
            else if (bv.back() == u)
                b_front = false;
            else
                continue; // u is interior in B
            if (!pieces_disjoint(av, bv)) return 0;
            int la = static_cast<int>(av.size()) - 1, lb = static_cast<int>(bv.size()) - 1;
            long long delta = swap_delta(la, -1);
            apply_count(la, -1);
            delta += swap_delta(lb, -1);
            apply_count(lb, -1);
            delta += swap_delta(la + lb, +1);
            apply_count(la + lb, +1);
            if (accept(delta, temp)) {
                std::vector<int> merged(av);
                if (!a_back) std::reverse(merged.begin(), merged.end());
                std::vector<int> tail(bv);
                if (!b_front) std::reverse(tail.begin(), tail.end());
                merged.insert(merged.end(), tail.begin() + 1, tail.end());
                index_remove(ia);
                sys_[ia].verts = std::move(merged);
                index_add(ia);
                erase_walk(ib);
                return delta;
            }
            apply_count(la, +1);
            apply_count(lb, +1);
            apply_count(la + lb, -1);
            return 0;
        }
        return 0;
    }

    long long try_path_move(double temp) {
        std::size_t ia = pick_first();
        const std::vector<int> averts = sys_[ia].verts;
        for (std::size_t i = 0; i < averts.size(); ++i) stamp_[averts[i]] = static_cast<int>(i);
        std::vector<int> shared;
        std::size_t ib = pick_partner(ia, 1, &shared);
        long long delta = 0;
        if (ib != sys_.size()) {
            int u = shared[rng_.below(shared.size())];
            delta = path_switch(ia, ib, u, temp);
        }
        for (int w : averts) stamp_[w] = -1;
        return delta;
    }

    long long path_switch(std::size_t ia, std::size_t ib, int u, double temp) {
        VWalk& A = sys_[ia];
        VWalk& B = sys_[ib];
        auto cut = [&](const std::vector<int>& p) {
            std::size_t pu = 0;
            while (p[pu] != u) pu++;
            std::vector<int> first(p.begin(), p.begin() + pu + 1);
            std::vector<int> second(p.begin() + pu, p.end());
            return std::make_pair(first, second);
        };
        auto [a1, a2] = cut(A.verts); // a1 ends at u, a2 starts at u
        auto [b1, b2] = cut(B.verts);

        auto join = [](std::vector<int> head, const std::vector<int>& tail) {
            head.insert(head.end(), tail.begin() + 1, tail.end());
            return head;
        };
        struct Option {
            std::vector<int> p1, p2;
            bool ok = false;
        };
        Option opts[2];
        if (pieces_disjoint(a1, b2) && pieces_disjoint(b1, a2))
            opts[0] = {join(a1, b2), join(b1, a2), true};
        {
            auto rb1 = b1, ra2 = a2;
            std::reverse(rb1.begin(), rb1.end()); // starts at u
            std::reverse(ra2.begin(), ra2.end()); // ends at u
            if (pieces_disjoint(a1, rb1) && pieces_disjoint(ra2, b2))
                opts[1] = {join(a1, rb1), join(ra2, b2), true};
        }
        int order[2] = {0, 1};
        if (rng_.next() & 1) std::swap(order[0], order[1]);
        for (int oi : order) {
            Option& o = opts[oi];
            if (!o.ok) continue;
            int la = A.length(), lb = B.length();
            int l1 = static_cast<int>(o.p1.size()) - 1, l2 = static_cast<int>(o.p2.size()) - 1;
            if (l1 == 0 || l2 == 0) continue;
            long long delta = swap_delta(la, -1);
            apply_count(la, -1);
            delta += swap_delta(lb, -1);
            apply_count(lb, -1);
            delta += swap_delta(l1, +1);
            apply_count(l1, +1);
            delta += swap_delta(l2, +1);
            apply_count(l2, +1);
            if (accept(delta, temp)) {
                index_remove(ia);
                index_remove(ib);
                A.verts = std::move(o.p1);
                B.verts = std::move(o.p2);
                index_add(ia);
                index_add(ib);
                return delta;
            }
            apply_count(la, +1);
            apply_count(lb, +1);
            apply_count(l1, -1);
            apply_count(l2, -1);
            return 0;
        }
        return 0;
    }

    // Paths may share only the pivot vertex u.
    bool pieces_disjoint(const std::vector<int>& s1, const std::vector<int>& s2) {
        for (std::size_t i = 0; i < s1.size(); ++i) stamp2_[s1[i]] = 2;
        int dup = 0;
        for (std::size_t i = 0; i < s2.size(); ++i)
            if (stamp2_[s2[i]] == 2) dup++;
        for (std::size_t i = 0; i < s1.size(); ++i) stamp2_[s1[i]] = -1;
        return dup <= 1;
    }

    std::vector<VWalk>& sys_;
    Rng& rng_;
    int n_;
    bool deficit_only_;
    std::map<int, int> tgt_, cur_;
    std::vector<int> stamp_, stamp2_;
    std::vector<std::vector<int>> at_; // vertex -> walk indices
};

// ---------------------------------------------------------------------------
// Cycle decomposition driver: digon reservation, greedy exact-length
// placement, exact endgame, large-neighborhood repair, switch repair.
// ---------------------------------------------------------------------------

class CycleHeuristic {
public:
    CycleHeuristic(const Multigraph& host, const std::vector<int>& lengths, const HeurOptions& opt)
        : opt_(opt), rng_(opt.seed), R_(host), lengths_(lengths) {}

    bool run(std::vector<VWalk>* out) {
        std::vector<int> others;
        int digons = 0, hamiltons = 0;
        for (int len : lengths_) {
            if (len == 2)
                digons++;
            else
                others.push_back(len);
            if (len == R_.n) hamiltons++;
        }
        std::sort(others.begin(), others.end());

        // The residual left for the cycles has degree deg(v) - 2*d(v) at a
        // vertex carrying d(v) digons. At most |others| cycles can pass any
        // vertex, and every full-length cycle must, which pins d(v) into a
        // window the reservation has to respect.
        std::vector<int> lb(R_.n + 1, 0), ub(R_.n + 1, digons);
        for (int v = 1; v <= R_.n; ++v) {
            long long deg = R_.deg[v];
            long long lo = deg - 2LL * static_cast<long long>(others.size());
            lb[v] = static_cast<int>(std::max(0LL, (lo + 1) / 2));
            long long hi = (deg - 2LL * hamiltons) / 2;
            ub[v] = static_cast<int>(std::max(0LL, hi));
        }

        std::vector<int> missing;
        int unreserved = reserve_digons(digons, &lb, &ub);
        for (int i = 0; i < unreserved; ++i) missing.push_back(2);

        auto greedy = greedy_place(others);
        missing.insert(missing.end(), greedy.begin(), greedy.end());
        BERGE_TRACE("cycle greedy: missing=%zu R=%lld", missing.size(), R_.edges);
        if (finish(missing, out)) return true;

        for (int round = 1; round <= 12; ++round) {
            missing = lns_round(round, std::move(missing));
            BERGE_TRACE("cycle lns%d: missing=%zu R=%lld", round, missing.size(), R_.edges);
            if (finish(missing, out)) return true;
        }
        return switch_finish(out);
    }

private:
    // Reserve `want` digons, steering the per-vertex counts into [lb, ub]
    // when quotas are given. Returns the number that could not be reserved.
    int reserve_digons(int want, const std::vector<int>* lb = nullptr,
                       const std::vector<int>* ub = nullptr) {
        if (want == 0) return 0;
        std::vector<char> avoid(R_.res.size(), 0);
        if (opt_.digon_avoid)
            for (const auto& p : *opt_.digon_avoid) avoid[R_.idx(p.lo, p.hi)] = 1;
        std::vector<int> have(R_.n + 1, 0);
        auto score = [&](int x, int y) -> long long {
            // unmet lower quotas first, then balance, avoided pairs last
            long long s = static_cast<long long>(rng_.below(16));
            if (lb) {
                if (have[x] < (*lb)[x]) s += 4000000;
                if (have[y] < (*lb)[y]) s += 4000000;
                if (have[x] >= (*ub)[x]) s -= 40000000;
                if (have[y] >= (*ub)[y]) s -= 40000000;
            }
            s -= 1024LL * (have[x] + have[y]);
            if (avoid[R_.idx(x, y)]) s -= 1000000000LL;
            return s;
        };
        while (want > 0) {
            int bx = 0, by = 0;
            long long best = LLONG_MIN;
            for (int x = 1; x <= R_.n; ++x)
                for (int y = x + 1; y <= R_.n; ++y) {
                    if (R_.mult(x, y) < 2) continue;
                    long long s = score(x, y);
                    if (s > best) {
                        best = s;
                        bx = x;
                        by = y;
                    }
                }
            if (bx == 0) break;
            VWalk d{WalkKind::cycle, {bx, by}};
            R_.consume_walk(d);
            placed_.push_back(std::move(d));
            have[bx]++;
            have[by]++;
            want--;
        }
        return want;
    }

    std::vector<int> greedy_place(const std::vector<int>& todo) {
        std::vector<int> missing;
        WalkFinder finder(R_, rng_);
        for (std::size_t i = 0; i < todo.size(); ++i) {
            // leave a small tail for the exact endgame instead of painting
            // the residual into a corner one walk at a time; many short
            // lengths stay with the greedy, which handles them better
            if (R_.edges <= std::max<long long>(kEndgameCap, 2 * R_.n + 6) && todo.size() - i <= 6) {
                missing.insert(missing.end(), todo.begin() + i, todo.end());
                break;
            }
            int len = todo[i];
            std::vector<int> cyc;
            if (finder.find_cycle(len, 24, 90LL * len, &cyc)) {
                VWalk w{WalkKind::cycle, std::move(cyc)};
                R_.consume_walk(w);
                placed_.push_back(std::move(w));
            } else {
                missing.push_back(len);
            }
        }
        return missing;
    }

    // The residual is exactly one simple cycle of the wanted length.
    bool residual_is_cycle(int len, std::vector<int>* verts) {
        if (R_.edges != len) return false;
        if (len == 2) {
            for (int x = 1; x <= R_.n; ++x)
                for (int y = x + 1; y <= R_.n; ++y)
                    if (R_.mult(x, y) == 2) {
                        *verts = {x, y};
                        return true;
                    }
            return false;
        }
        int start = 0;
        for (int v = 1; v <= R_.n; ++v) {
            if (R_.deg[v] != 0 && R_.deg[v] != 2) return false;
            if (R_.deg[v] == 2 && !start) start = v;
        }
        if (!start) return false;
        verts->assign(1, start);
        int prev = 0, cur = start;
        for (int step = 0; step + 1 < len; ++step) {
            int next = 0;
            for (int w = 1; w <= R_.n; ++w) {
                if (w == cur || w == prev) continue;
                if (R_.mult(cur, w) > 0) {
                    if (R_.mult(cur, w) > 1) return false;
                    next = w;
                    break;
                }
            }
            if (!next) return false;
            verts->push_back(next);
            prev = cur;
            cur = next;
        }
        if (R_.mult(cur, start) != 1) return false;
        std::vector<char> seen(R_.n + 1, 0);
        for (int v : *verts) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    bool two_cycle_tail(const std::vector<int>& missing) {
        if (missing.size() > 2 || missing.empty()) return false;
        if (missing.size() == 1) {
            std::vector<int> verts;
            if (!residual_is_cycle(missing[0], &verts)) return false;
            VWalk w{WalkKind::cycle, std::move(verts)};
            R_.consume_walk(w);
            placed_.push_back(std::move(w));
            return true;
        }
        WalkFinder finder(R_, rng_);
        for (int t = 0; t < 400; ++t) {
            std::vector<int> cv;
            if (!finder.find_cycle(missing[0], 2, 90LL * missing[0], &cv)) continue;
            VWalk a{WalkKind::cycle, std::move(cv)};
            R_.consume_walk(a);
            std::vector<int> verts;
            if (residual_is_cycle(missing[1], &verts)) {
                placed_.push_back(a);
                VWalk b{WalkKind::cycle, std::move(verts)};
                R_.consume_walk(b);
                placed_.push_back(std::move(b));
                return true;
            }
            R_.restore_walk(a);
        }
        return false;
    }

    bool finish(std::vector<int>& missing, std::vector<VWalk>* out) {
        if (missing.empty() && R_.edges == 0) {
            *out = placed_;
            return true;
        }
        if (!missing.empty() && std::accumulate(missing.begin(), missing.end(), 0LL) == R_.edges &&
            two_cycle_tail(missing)) {
            missing.clear();
            *out = placed_;
            return true;
        }
        if (!missing.empty() && R_.edges <= std::max<long long>(kEndgameCap, 2 * R_.n + 6)) {
            ExactOptions eo;
            eo.kind = WalkKind::cycle;
            eo.exact_cover = true;
            eo.node_budget = 800000;
            eo.randomize = true;
            eo.seed = rng_.next();
            eo.digon_avoid = opt_.digon_avoid;
            std::vector<VWalk> tail;
            if (exact_search(R_.to_multigraph(), missing, eo, &tail) == Status::found) {
                for (auto& w : tail) {
                    R_.consume_walk(w);
                    placed_.push_back(std::move(w));
                }
                missing.clear();
                *out = placed_;
                return true;
            }
        }
        return false;
    }

    std::vector<int> lns_round(int round, std::vector<int> missing) {
        // Release a growing batch of placed walks back into the residual and
        // try the whole bundle again in a fresh random order.
        int release = std::min<int>(static_cast<int>(placed_.size()), 2 + 3 * round);
        for (int i = 0; i < release && !placed_.empty(); ++i) {
            std::size_t j = rng_.below(placed_.size());
            if (placed_[j].length() == 2 && round < 4) continue; // digons rarely block
            R_.restore_walk(placed_[j]);
            missing.push_back(placed_[j].length());
            placed_[j] = placed_.back();
            placed_.pop_back();
        }
        std::sort(missing.begin(), missing.end());
        int digons = 0;
        std::vector<int> todo;
        for (int len : missing) {
            if (len == 2)
                digons++;
            else
                todo.push_back(len);
        }
        std::vector<int> still = greedy_place(todo);
        int unreserved = reserve_digons(digons);
        for (int i = 0; i < unreserved; ++i) still.push_back(2);
        return still;
    }

    bool switch_finish(std::vector<VWalk>* out) {
        std::vector<VWalk> junk = extract_junk_cycles(R_, rng_);
        if (R_.edges != 0) return false;
        std::vector<VWalk> system = placed_;
        system.insert(system.end(), junk.begin(), junk.end());
        if (system.empty()) return false;
        SwitchRepair rep(system, lengths_, /*deficit_only=*/false, R_.n, rng_);
        bool ok = rep.run(opt_.switch_budget);
        if (std::getenv("BERGE_TRACE")) {
            std::map<int, int> have, want;
            for (const auto& w : system) have[w.length()]++;
            for (int l : lengths_) want[l]++;
            std::string msg;
            for (auto [l, c] : want)
                if (have[l] != c) msg += " " + std::to_string(l) + ":" + std::to_string(have[l]) + "/" + std::to_string(c);
            for (auto [l, c] : have)
                if (!want.count(l)) msg += " " + std::to_string(l) + ":" + std::to_string(c) + "/0";
            BERGE_TRACE("cycle switch: placed=%zu junk=%zu obj_end=%lld ok=%d mismatch:%s", placed_.size(),
                        junk.size(), rep.objective(), (int)ok, msg.c_str());
        }
        if (ok) {
            *out = system;
            return true;
        }
        return false;
    }

    HeurOptions opt_;
    Rng rng_;
    Residual R_;
    std::vector<int> lengths_;
    std::vector<VWalk> placed_;
};

// ---------------------------------------------------------------------------
// Path packing driver (exact cover when the lengths sum to the host size).
// ---------------------------------------------------------------------------

class PathHeuristic {
public:
    PathHeuristic(const Multigraph& host, const std::vector<int>& lengths, const HeurOptions& opt)
        : opt_(opt), rng_(opt.seed), R_(host), lengths_(lengths) {
        exact_cover_ = std::accumulate(lengths.begin(), lengths.end(), 0LL) == host.edge_count();
        if (exact_cover_) {
            // endpoint plan: parity first, then the surplus spread in pairs
            quota_.assign(R_.n + 1, 0);
            long long total = 2LL * static_cast<long long>(lengths.size());
            long long used = 0;
            for (int v = 1; v <= R_.n; ++v) {
                quota_[v] = static_cast<int>(R_.deg[v] & 1);
                used += quota_[v];
            }
            int v = 1;
            while (used + 2 <= total) {
                quota_[v] += 2;
                used += 2;
                v = v % R_.n + 1;
            }
        }
    }

    bool run(std::vector<VWalk>* out) {
        std::vector<int> todo = lengths_;
        std::sort(todo.begin(), todo.end(), std::greater<int>());
        std::vector<int> missing = greedy_place(todo);
        BERGE_TRACE("path greedy: missing=%zu R=%lld", missing.size(), R_.edges);
        if (finish(missing, out)) return true;
        for (int round = 1; round <= 10; ++round) {
            missing = lns_round(round, std::move(missing));
            BERGE_TRACE("path lns%d: missing=%zu R=%lld", round, missing.size(), R_.edges);
            if (finish(missing, out)) return true;
        }
        return switch_finish(out);
    }

private:
    std::vector<int> greedy_place(const std::vector<int>& todo) {
        std::vector<int> missing;
        WalkFinder finder(R_, rng_);
        if (exact_cover_) finder.set_endpoint_quota(&quota_);
        for (std::size_t i = 0; i < todo.size(); ++i) {
            if (R_.edges <= std::max<long long>(kEndgameCap, 2 * R_.n + 6) && todo.size() - i <= 6) {
                missing.insert(missing.end(), todo.begin() + i, todo.end());
                break;
            }
            int len = todo[i];
            std::vector<int> pv;
            if (finder.find_path(len, 24, 70LL * len, &pv)) {
                VWalk w{WalkKind::path, std::move(pv)};
                R_.consume_walk(w);
                if (exact_cover_) {
                    quota_[w.verts.front()]--;
                    quota_[w.verts.back()]--;
                }
                placed_.push_back(std::move(w));
            } else {
                missing.push_back(len);
            }
        }
        return missing;
    }

    // The residual is exactly one simple path of the wanted length.
    bool residual_is_path(int len, std::vector<int>* verts) {
        if (R_.edges != len) return false;
        int end = 0;
        for (int v = 1; v <= R_.n; ++v) {
            if (R_.deg[v] > 2) return false;
            if (R_.deg[v] == 1 && !end) end = v;
        }
        if (!end) return false;
        verts->assign(1, end);
        int prev = 0, cur = end;
        for (int step = 0; step < len; ++step) {
            int next = 0;
            for (int w = 1; w <= R_.n; ++w) {
                if (w == cur || w == prev) continue;
                if (R_.mult(cur, w) > 0) {
                    if (R_.mult(cur, w) > 1) return false;
                    next = w;
                    break;
                }
            }
            if (!next) return false;
            verts->push_back(next);
            prev = cur;
            cur = next;
        }
        std::vector<char> seen(R_.n + 1, 0);
        for (int v : *verts) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    // Last-two-walks tail: place one path at random and accept when the
    // complement is exactly the other path.
    bool two_path_tail(const std::vector<int>& missing) {
        if (missing.size() > 2 || missing.empty()) return false;
        if (missing.size() == 1) {
            std::vector<int> verts;
            if (!residual_is_path(missing[0], &verts)) return false;
            VWalk w{WalkKind::path, std::move(verts)};
            R_.consume_walk(w);
            placed_.push_back(std::move(w));
            return true;
        }
        WalkFinder finder(R_, rng_);
        if (exact_cover_) finder.set_endpoint_quota(&quota_);
        for (int t = 0; t < 400; ++t) {
            std::vector<int> pv;
            if (!finder.find_path(missing[0], 2, 90LL * missing[0], &pv)) continue;
            VWalk a{WalkKind::path, std::move(pv)};
            R_.consume_walk(a);
            std::vector<int> verts;
            if (residual_is_path(missing[1], &verts)) {
                placed_.push_back(a);
                VWalk b{WalkKind::path, std::move(verts)};
                R_.consume_walk(b);
                placed_.push_back(std::move(b));
                return true;
            }
            R_.restore_walk(a);
        }
        return false;
    }

    bool finish(std::vector<int>& missing, std::vector<VWalk>* out) {
        if (missing.empty() && (!exact_cover_ || R_.edges == 0)) {
            *out = placed_;
            return true;
        }
        if (exact_cover_ && !missing.empty() &&
            std::accumulate(missing.begin(), missing.end(), 0LL) == R_.edges && two_path_tail(missing)) {
            missing.clear();
            *out = placed_;
            return true;
        }
        if (!missing.empty() && R_.edges <= std::max<long long>(kEndgameCap, 2 * R_.n + 6)) {
            ExactOptions eo;
            eo.kind = WalkKind::path;
            eo.exact_cover = exact_cover_;
            eo.node_budget = 800000;
            eo.randomize = true;
            eo.seed = rng_.next();
            std::vector<VWalk> tail;
            if (exact_search(R_.to_multigraph(), missing, eo, &tail) == Status::found) {
                for (auto& w : tail) {
                    R_.consume_walk(w);
                    placed_.push_back(std::move(w));
                }
                missing.clear();
                *out = placed_;
                return true;
            }
        }
        return false;
    }

    std::vector<int> lns_round(int round, std::vector<int> missing) {
        int release = std::min<int>(static_cast<int>(placed_.size()), 2 + 3 * round);
        for (int i = 0; i < release && !placed_.empty(); ++i) {
            std::size_t j = rng_.below(placed_.size());
            R_.restore_walk(placed_[j]);
            if (exact_cover_) {
                quota_[placed_[j].verts.front()]++;
                quota_[placed_[j].verts.back()]++;
            }
            missing.push_back(placed_[j].length());
            placed_[j] = placed_.back();
            placed_.pop_back();
        }
        std::sort(missing.begin(), missing.end(), std::greater<int>());
        return greedy_place(missing);
    }

    bool switch_finish(std::vector<VWalk>* out) {
        std::vector<VWalk> junk = extract_junk_paths(R_, rng_);
        std::vector<VWalk> system = placed_;
        system.insert(system.end(), junk.begin(), junk.end());
        if (system.empty()) return false;
        SwitchRepair rep(system, lengths_, /*deficit_only=*/!exact_cover_, R_.n, rng_);
        bool reped = rep.run(opt_.switch_budget);
        BERGE_TRACE("path switch: placed=%zu junk=%zu obj_end=%lld ok=%d", placed_.size(), junk.size(),
                    rep.objective(), (int)reped);
        if (!reped) return false;
        if (exact_cover_) {
            *out = system;
            return true;
        }
        // Keep exactly the prescribed multiset; surplus walks stay in the leave.
        std::map<int, int> want;
        for (int len : lengths_) want[len]++;
        out->clear();
        for (auto& w : system) {
            auto it = want.find(w.length());
            if (it != want.end() && it->second > 0) {
                it->second--;
                out->push_back(std::move(w));
            }
        }
        return true;
    }

    HeurOptions opt_;
    Rng rng_;
    Residual R_;
    std::vector<int> lengths_;
    std::vector<VWalk> placed_;
    std::vector<int> quota_;
    bool exact_cover_ = false;
};

} // namespace

bool heuristic_cycle_decomposition(const Multigraph& host, const std::vector<int>& lengths,
                                   const HeurOptions& opt, std::vector<VWalk>* out) {
    CycleHeuristic h(host, lengths, opt);
    return h.run(out);
}

bool heuristic_path_packing(const Multigraph& host, const std::vector<int>& lengths,
                            const HeurOptions& opt, std::vector<VWalk>* out) {
    PathHeuristic h(host, lengths, opt);
    return h.run(out);
}

} // namespace berge::engine
