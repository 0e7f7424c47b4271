#include <algorithm>
#include <numeric>

#include "engine_internal.hpp"

namespace berge::engine {
namespace {

// Backtracking over walk placements. Branches on the lexicographically
// smallest pair that still has residual copies: either some remaining length
// covers it (one branch per distinct length per walk shape), or, in packing
// mode, one copy is sent to the leave. Every packing can be replayed as such
// a decision sequence, so with an unlimited node budget the search is exact.
class ExactEngine {
public:
    ExactEngine(const Multigraph& host, std::vector<int> lengths, const ExactOptions& opt)
        : n_(host.n()), opt_(opt), rng_(opt.seed) {
        row_.assign(n_ + 1, 0);
        for (int x = 1; x <= n_; ++x)
            row_[x] = static_cast<long long>(x - 1) * (2 * n_ - x) / 2 - x; // idx = row_[x] + y - 1
        res_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, 0);
        deg_.assign(n_ + 1, 0);
        host_par_.assign(n_ + 1, 0);
        skip_deg_.assign(n_ + 1, 0);
        in_.assign(n_ + 1, 0);
        res_edges_ = 0;
        for (int x = 1; x <= n_; ++x)
            for (int y = x + 1; y <= n_; ++y) {
                int m = host.mult(x, y);
                res_[idx(x, y)] = m;
                deg_[x] += m;
                deg_[y] += m;
                res_edges_ += m;
                if (m >= 2) cap2_ += m / 2;
            }
        for (int v = 1; v <= n_; ++v) {
            host_par_[v] = static_cast<int>(deg_[v] & 1);
            if (host_par_[v]) odd_cnt_++;
        }

        std::sort(lengths.begin(), lengths.end(), std::greater<int>());
        for (int len : lengths) {
            if (!rem_.empty() && rem_.back().first == len)
                rem_.back().second++;
            else
                rem_.push_back({len, 1});
            need_ += len;
            if (len == 2 && opt_.kind == WalkKind::cycle) cnt2_++;
        }
        leave_budget_ = res_edges_ - need_;
        scratch_.assign(n_ + 3, std::vector<int>(n_, 0));
        avoid_.assign(res_.size(), 0);
        if (opt_.digon_avoid)
            for (const auto& p : *opt_.digon_avoid) avoid_[idx(p.lo, p.hi)] = 1;
    }

    Status run(std::vector<VWalk>* out) {
        if (leave_budget_ < 0) return Status::infeasible;
        if (opt_.exact_cover && leave_budget_ != 0) return Status::infeasible;
        bool ok = solve();
        if (exhausted_) return Status::exhausted;
        if (!ok) return Status::infeasible;
        *out = done_;
        return Status::found;
    }

private:
    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(row_[x] + y - 1); } // x < y

    void consume(int u, int v) {
        if (u > v) std::swap(u, v);
        int& m = res_[idx(u, v)];
        if ((m & 1) == 0) cap2_--;
        m--;
        odd_cnt_ += (deg_[u] & 1) ? -1 : 1;
        odd_cnt_ += (deg_[v] & 1) ? -1 : 1;
        deg_[u]--;
        deg_[v]--;
        res_edges_--;
    }
    void restore(int u, int v) {
        if (u > v) std::swap(u, v);
        int& m = res_[idx(u, v)];
        m++;
        if ((m & 1) == 0) cap2_++;
        odd_cnt_ += (deg_[u] & 1) ? -1 : 1;
        odd_cnt_ += (deg_[v] & 1) ? -1 : 1;
        deg_[u]++;
        deg_[v]++;
        res_edges_++;
    }
    int res(int u, int v) const { return u < v ? res_[idx(u, v)] : res_[idx(v, u)]; }

    bool tick() {
        if (opt_.node_budget > 0 && ++nodes_ > opt_.node_budget) exhausted_ = true;
        return !exhausted_;
    }

    // Leave degrees stay even (cycle mode): once a vertex has no residual
    // copies its leave degree is final and must match the host parity.
    bool vertex_closed_ok(int v) const {
        if (opt_.kind != WalkKind::cycle) return true;
        if (deg_[v] != 0) return true;
        return (skip_deg_[v] & 1) == host_par_[v];
    }

    bool solve() {
        if (exhausted_) return false;
        if (need_ == 0) return true;
        if (cnt2_ > cap2_) return false;
        if (opt_.kind == WalkKind::path) {
            // every future path or leave edge fixes at most two odd degrees
            long long walks_left = 0;
            for (const auto& [len, cnt] : rem_) walks_left += cnt;
            if (odd_cnt_ > 2 * (walks_left + leave_budget_ - skips_)) return false;
        }

        // Fast path: only digons left. They are independent per pair, so a
        // greedy sweep is exact.
        if (opt_.kind == WalkKind::cycle && rem_.size() == 1 && rem_[0].first == 2 && rem_[0].second > 0)
            return finish_digons();
        if (opt_.kind == WalkKind::path && rem_.size() == 1 && rem_[0].first == 1 && rem_[0].second > 0)
            return finish_singles();

        int ax = 0, ay = 0;
        if (!smallest_pair(ax, ay)) return false;

        for (auto& [len, cnt] : rem_) {
            if (cnt == 0) continue;
            if (exhausted_) return false;
            if (opt_.kind == WalkKind::cycle) {
                if (try_cycles_through(ax, ay, len)) return true;
            } else {
                if (try_paths_through(ax, ay, len)) return true;
            }
        }

        if (!opt_.exact_cover && skips_ < leave_budget_) {
            consume(ax, ay);
            skip_deg_[ax]++;
            skip_deg_[ay]++;
            skips_++;
            bool ok = vertex_closed_ok(ax) && vertex_closed_ok(ay) && solve();
            skips_--;
            skip_deg_[ax]--;
            skip_deg_[ay]--;
            restore(ax, ay);
            if (ok) return true;
        }
        return false;
    }

    bool smallest_pair(int& ax, int& ay) const {
        for (int x = 1; x <= n_; ++x) {
            if (deg_[x] == 0) continue;
            for (int y = x + 1; y <= n_; ++y)
                if (res_[idx(x, y)] > 0) {
                    ax = x;
                    ay = y;
                    return true;
                }
        }
        return false;
    }

    bool finish_digons() {
        int want = rem_[0].second;
        if (cap2_ < want) return false;
        if (opt_.exact_cover) {
            for (std::size_t i = 0; i < res_.size(); ++i)
                if (res_[i] & 1) return false;
        }
        // Spread digons one per pair per sweep (avoided pairs last), keeping
        // the leftover multiplicities as even as possible.
        std::vector<std::pair<int, int>> picked;
        std::vector<int> taken(res_.size(), 0);
        bool progress = true;
        while (want > 0 && progress) {
            progress = false;
            for (int pass = 0; pass < 2 && want > 0; ++pass)
                for (int x = 1; x <= n_ && want > 0; ++x)
                    for (int y = x + 1; y <= n_ && want > 0; ++y) {
                        if (static_cast<int>(avoid_[idx(x, y)]) != (pass == 0 ? 0 : 1)) continue;
                        if (res_[idx(x, y)] - 2 * taken[idx(x, y)] < 2) continue;
                        picked.push_back({x, y});
                        taken[idx(x, y)]++;
                        want--;
                        progress = true;
                    }
        }
        if (want > 0) return false;
        for (auto [x, y] : picked) {
            consume(x, y);
            consume(x, y);
            done_.push_back({WalkKind::cycle, {x, y}});
        }
        int placed = static_cast<int>(picked.size());
        rem_[0].second -= placed;
        need_ -= 2LL * placed;
        cnt2_ -= placed;
        if (solve()) return true;
        for (int i = 0; i < placed; ++i) {
            auto [x, y] = picked[placed - 1 - i];
            done_.pop_back();
            restore(x, y);
            restore(x, y);
        }
        rem_[0].second += placed;
        need_ += 2LL * placed;
        cnt2_ += placed;
        return false;
    }

    bool finish_singles() {
        int want = rem_[0].second;
        std::vector<std::pair<int, int>> picked;
        for (int x = 1; x <= n_ && want > 0; ++x)
            for (int y = x + 1; y <= n_ && want > 0; ++y) {
                int take = std::min(res_[idx(x, y)], want);
                for (int i = 0; i < take; ++i) picked.push_back({x, y});
                want -= take;
            }
        if (want > 0) return false;
        for (auto [x, y] : picked) {
            consume(x, y);
            done_.push_back({WalkKind::path, {x, y}});
        }
        int placed = static_cast<int>(picked.size());
        rem_[0].second -= placed;
        need_ -= placed;
        if (solve()) return true;
        for (int i = 0; i < placed; ++i) {
            auto [x, y] = picked[placed - 1 - i];
            done_.pop_back();
            restore(x, y);
        }
        rem_[0].second += placed;
        need_ += placed;
        return false;
    }

    // Candidate next-vertices from `last`, highest residual multiplicity
    // first; randomized tie-break when requested. A terminal pick for a path
    // prefers odd residual degrees, which the endpoint will repair.
    int order_candidates(int depth, int last, bool terminal = false) {
        auto& buf = scratch_[depth];
        int cnt = 0;
        for (int w = 1; w <= n_; ++w)
            if (!in_[w] && res(last, w) > 0) buf[cnt++] = w;
        if (opt_.randomize) {
            for (int i = cnt - 1; i > 0; --i) {
                int j = static_cast<int>(rng_.below(static_cast<std::uint64_t>(i) + 1));
                std::swap(buf[i], buf[j]);
            }
        }
        std::stable_sort(buf.begin(), buf.begin() + cnt, [&](int a, int b) {
            if (terminal) {
                bool oa = (deg_[a] & 1) != 0, ob = (deg_[b] & 1) != 0;
                if (oa != ob) return oa;
            }
            return res(last, a) > res(last, b);
        });
        return cnt;
    }

    bool dec_length(int len) {
        for (auto& [l, c] : rem_)
            if (l == len) {
                c--;
                need_ -= len;
                if (len == 2 && opt_.kind == WalkKind::cycle) cnt2_--;
                return true;
            }
        return false;
    }
    void inc_length(int len) {
        for (auto& [l, c] : rem_)
            if (l == len) {
                c++;
                need_ += len;
                if (len == 2 && opt_.kind == WalkKind::cycle) cnt2_++;
                return;
            }
    }

    // --- cycles ---

    bool try_cycles_through(int ax, int ay, int len) {
        if (len == 2) {
            if (res(ax, ay) < 2) return false;
            if (!tick()) return false;
            consume(ax, ay);
            consume(ax, ay);
            dec_length(2);
            done_.push_back({WalkKind::cycle, {ax, ay}});
            if (vertex_closed_ok(ax) && vertex_closed_ok(ay) && solve()) return true;
            done_.pop_back();
            inc_length(2);
            restore(ax, ay);
            restore(ax, ay);
            return false;
        }
        if (len > n_) return false;
        consume(ax, ay);
        cur_.assign({ax, ay});
        in_[ax] = in_[ay] = 1;
        bool ok = extend_cycle(ax, len);
        in_[ax] = in_[ay] = 0;
        restore(ax, ay);
        return ok;
    }

    bool extend_cycle(int ax, int len) {
        if (!tick()) return false;
        int last = cur_.back();
        if (static_cast<int>(cur_.size()) == len) {
            if (res(last, ax) == 0) return false;
            consume(last, ax);
            dec_length(len);
            done_.push_back({WalkKind::cycle, cur_});
            std::vector<int> saved = cur_; // recursion below reuses cur_ and in_
            for (int v : saved) in_[v] = 0;
            if (check_closed_cycle(saved) && solve()) return true;
            for (int v : saved) in_[v] = 1;
            done_.pop_back();
            inc_length(len);
            restore(last, ax);
            cur_ = saved;
            return false;
        }
        int depth = static_cast<int>(cur_.size());
        int cnt = order_candidates(depth, last);
        std::vector<int> cands(scratch_[depth].begin(), scratch_[depth].begin() + cnt);
        for (int w : cands) {
            if (exhausted_) return false;
            consume(last, w);
            cur_.push_back(w);
            in_[w] = 1;
            if (extend_cycle(ax, len)) return true;
            in_[w] = 0;
            cur_.pop_back();
            restore(last, w);
        }
        return false;
    }

    bool check_closed_cycle(const std::vector<int>& verts) {
        for (int v : verts)
            if (!vertex_closed_ok(v)) return false;
        return true;
    }

    // --- paths ---

    bool try_paths_through(int ax, int ay, int len) {
        if (len > n_ - 1) return false;
        consume(ax, ay);
        in_[ax] = in_[ay] = 1;
        bool ok = false;
        std::vector<int> splits(static_cast<std::size_t>(len));
        std::iota(splits.begin(), splits.end(), 0);
        for (int a : splits) {
            left_.assign({ax});
            right_.assign({ay});
            if (grow_left(a, len - 1 - a, len)) {
                ok = true;
                break;
            }
        }
        in_[ax] = in_[ay] = 0;
        restore(ax, ay);
        return ok;
    }

    bool grow_left(int need_left, int need_right, int len) {
        if (!tick()) return false;
        if (need_left == 0) return grow_right(need_right, len);
        int last = left_.back();
        int depth = static_cast<int>(left_.size() + right_.size());
        int cnt = order_candidates(depth, last, need_left == 1);
        std::vector<int> cands(scratch_[depth].begin(), scratch_[depth].begin() + cnt);
        for (int w : cands) {
            if (exhausted_) return false;
            consume(last, w);
            left_.push_back(w);
            in_[w] = 1;
            if (grow_left(need_left - 1, need_right, len)) return true;
            in_[w] = 0;
            left_.pop_back();
            restore(last, w);
        }
        return false;
    }

    bool grow_right(int need_right, int len) {
        if (!tick()) return false;
        if (need_right == 0) {
            std::vector<int> verts(left_.rbegin(), left_.rend());
            verts.insert(verts.end(), right_.begin(), right_.end());
            dec_length(len);
            done_.push_back({WalkKind::path, verts});
            std::vector<int> sl = left_, sr = right_; // recursion reuses the buffers
            for (int v : verts) in_[v] = 0;
            if (solve()) return true;
            for (int v : verts) in_[v] = 1;
            done_.pop_back();
            inc_length(len);
            left_ = sl;
            right_ = sr;
            return false;
        }
        int last = right_.back();
        int depth = static_cast<int>(left_.size() + right_.size());
        int cnt = order_candidates(depth, last, need_right == 1);
        std::vector<int> cands(scratch_[depth].begin(), scratch_[depth].begin() + cnt);
        for (int w : cands) {
            if (exhausted_) return false;
            consume(last, w);
            right_.push_back(w);
            in_[w] = 1;
            if (grow_right(need_right - 1, len)) return true;
            in_[w] = 0;
            right_.pop_back();
            restore(last, w);
        }
        return false;
    }

    int n_;
    ExactOptions opt_;
    Rng rng_;
    std::vector<long long> row_;
    std::vector<int> res_;
    std::vector<long long> deg_;
    std::vector<int> host_par_, skip_deg_;
    std::vector<char> in_, avoid_;
    std::vector<std::pair<int, int>> rem_; // (length, count), descending
    std::vector<std::vector<int>> scratch_;
    std::vector<int> cur_, left_, right_;
    std::vector<VWalk> done_;
    long long need_ = 0, res_edges_ = 0, leave_budget_ = 0, skips_ = 0;
    long long cap2_ = 0;
    long long odd_cnt_ = 0;
    int cnt2_ = 0;
    long long nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

Status exact_search(const Multigraph& host, std::vector<int> lengths, const ExactOptions& opt,
                    std::vector<VWalk>* out) {
    ExactEngine eng(host, std::move(lengths), opt);
    return eng.run(out);
}

GraphDecomposition materialize(const Multigraph& host, const std::vector<VWalk>& walks) {
    GraphDecomposition d;
    d.host = host;
    std::vector<int> used(static_cast<std::size_t>(host.n()) * (host.n() - 1) / 2, 0);
    auto take = [&](int x, int y) {
        int c = used[host.index(x, y)]++;
        return EdgeInstance(x, y, c);
    };
    for (const auto& w : walks) {
        GraphWalk gw;
        gw.kind = w.kind;
        gw.vertices = w.verts;
        std::size_t m = w.verts.size();
        if (w.kind == WalkKind::cycle) {
            if (m == 2) {
                gw.edges.push_back(take(w.verts[0], w.verts[1]));
                gw.edges.push_back(take(w.verts[0], w.verts[1]));
            } else {
                for (std::size_t i = 0; i < m; ++i)
                    gw.edges.push_back(take(w.verts[i], w.verts[(i + 1) % m]));
            }
        } else {
            for (std::size_t i = 0; i + 1 < m; ++i) gw.edges.push_back(take(w.verts[i], w.verts[i + 1]));
        }
        d.walks.push_back(std::move(gw));
    }
    for (int x = 1; x <= host.n(); ++x)
        for (int y = x + 1; y <= host.n(); ++y)
            for (int c = used[host.index(x, y)]; c < host.mult(x, y); ++c)
                d.leave.push_back(EdgeInstance(x, y, c));
    return d;
}

} // namespace berge::engine
