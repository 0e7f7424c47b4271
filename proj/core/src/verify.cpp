#include "berge/verify.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "berge/json_io.hpp"

namespace berge {

std::string to_string(ViolationCode code) {
    switch (code) {
        case ViolationCode::DuplicateHyperedge: return "DuplicateHyperedge";
        case ViolationCode::CoreNotDistinct: return "CoreNotDistinct";
        case ViolationCode::ContainmentFail: return "ContainmentFail";
        case ViolationCode::CoverageMismatch: return "CoverageMismatch";
        case ViolationCode::LengthMismatch: return "LengthMismatch";
        case ViolationCode::ArityMismatch: return "ArityMismatch";
    }
    return "Unknown";
}

namespace {

struct CertWalk {
    bool is_cycle = false;
    std::vector<int> core;
    std::vector<std::pair<std::vector<int>, int>> edges; // (members, copy)
};

} // namespace

std::vector<Violation> verify_berge_decomposition(int n, int k, int mu, const LengthList& cycle_lengths,
                                                  const LengthList& path_lengths,
                                                  const nlohmann::json& certificate) {
    std::vector<Violation> out;
    auto flag = [&](ViolationCode code, int wi, std::string detail) {
        out.push_back({code, wi, std::move(detail)});
    };

    std::vector<CertWalk> walks;
    try {
        if (certificate.at("n").get<int>() != n || certificate.at("k").get<int>() != k ||
            certificate.at("mu").get<int>() != mu) {
            flag(ViolationCode::ArityMismatch, -1, "certificate header (n,k,mu) does not match the query");
            return out;
        }
        for (const auto& jw : certificate.at("walks")) {
            CertWalk w;
            std::string kind = jw.at("kind").get<std::string>();
            if (kind != "cycle" && kind != "path") {
                flag(ViolationCode::ArityMismatch, static_cast<int>(walks.size()), "unknown walk kind");
                return out;
            }
            w.is_cycle = kind == "cycle";
            w.core = jw.at("core").get<std::vector<int>>();
            for (const auto& je : jw.at("edges"))
                w.edges.emplace_back(je.at("set").get<std::vector<int>>(), je.at("copy").get<int>());
            walks.push_back(std::move(w));
        }
    } catch (const nlohmann::json::exception& e) {
        flag(ViolationCode::ArityMismatch, -1, std::string("malformed certificate: ") + e.what());
        return out;
    }

    bool structural_fault = false; // ArityMismatch anywhere
    bool duplicate_fault = false;

    for (std::size_t wi = 0; wi < walks.size(); ++wi) {
        const CertWalk& w = walks[wi];
        int iw = static_cast<int>(wi);
        std::size_t nc = w.core.size(), ne = w.edges.size();
        if (w.is_cycle ? (nc != ne || nc < 2) : (nc != ne + 1 || ne < 1)) {
            flag(ViolationCode::ArityMismatch, iw, "core/edge count mismatch for walk kind");
            structural_fault = true;
            continue;
        }
        for (int v : w.core)
            if (v < 1 || v > n) {
                flag(ViolationCode::ArityMismatch, iw, "core vertex out of range");
                structural_fault = true;
            }
        std::set<int> distinct(w.core.begin(), w.core.end());
        if (distinct.size() != nc) flag(ViolationCode::CoreNotDistinct, iw, "core sequence repeats a vertex");

        for (std::size_t ei = 0; ei < ne; ++ei) {
            const auto& [members, copy] = w.edges[ei];
            bool sorted = std::is_sorted(members.begin(), members.end()) &&
                          std::adjacent_find(members.begin(), members.end()) == members.end();
            bool in_range = !members.empty() && members.front() >= 1 && members.back() <= n;
            if (static_cast<int>(members.size()) != k || !sorted || !in_range || copy < 0) {
                flag(ViolationCode::ArityMismatch, iw,
                     "edge " + std::to_string(ei) + " is not a sorted k-subset with a valid copy index");
                structural_fault = true;
                continue;
            }
            int a = w.core[ei % nc];
            int b = w.is_cycle ? w.core[(ei + 1) % nc] : w.core[ei + 1];
            bool has_a = std::binary_search(members.begin(), members.end(), a);
            bool has_b = std::binary_search(members.begin(), members.end(), b);
            if (!has_a || !has_b)
                flag(ViolationCode::ContainmentFail, iw,
                     "edge " + std::to_string(ei) + " misses a flanking core vertex");
        }
    }

    std::map<std::pair<std::vector<int>, int>, int> counts;
    for (const auto& w : walks)
        for (const auto& e : w.edges) counts[e]++;
    for (const auto& [e, c] : counts)
        if (c > 1) {
            flag(ViolationCode::DuplicateHyperedge, -1,
                 "hyperedge instance used " + std::to_string(c) + " times");
            duplicate_fault = true;
        }

    std::multiset<int> have_cycles, have_paths;
    for (const auto& w : walks)
        (w.is_cycle ? have_cycles : have_paths).insert(static_cast<int>(w.edges.size()));
    std::multiset<int> want_cycles(cycle_lengths.values.begin(), cycle_lengths.values.end());
    std::multiset<int> want_paths(path_lengths.values.begin(), path_lengths.values.end());
    if (have_cycles != want_cycles)
        flag(ViolationCode::LengthMismatch, -1, "cycle length multiset differs from the prescribed list");
    if (have_paths != want_paths)
        flag(ViolationCode::LengthMismatch, -1, "path length multiset differs from the prescribed list");

    // The full multiset comparison is meaningless while malformed or
    // duplicated edges are present; those already falsify it.
    if (!structural_fault && !duplicate_fault) {
        long long bk = binom(n, k);
        long long expected = bk > LLONG_MAX / mu ? LLONG_MAX : bk * mu;
        bool mismatch = false;
        long long total = 0;
        for (const auto& [e, c] : counts) {
            total += c;
            if (e.second >= mu) {
                flag(ViolationCode::CoverageMismatch, -1, "copy index beyond mu");
                mismatch = true;
                break;
            }
        }
        if (!mismatch) {
            if (total != expected) {
                flag(ViolationCode::CoverageMismatch, -1,
                     "edge count " + std::to_string(total) + " != mu*C(n,k) = " + std::to_string(expected));
            } else {
                // counts has no duplicates here, so |counts| == total means every
                // instance is distinct; with copies < mu and sets valid, equality
                // to the full universe follows from the count.
                if (static_cast<long long>(counts.size()) != expected)
                    flag(ViolationCode::CoverageMismatch, -1, "hyperedge multiset does not cover mu*K_n^(k)");
            }
        }
    }
    return out;
}

std::vector<Violation> verify_berge_decomposition(int n, int k, int mu, const LengthList& cycle_lengths,
                                                  const LengthList& path_lengths,
                                                  const HyperDecomposition& d) {
    nlohmann::json j = d;
    return verify_berge_decomposition(n, k, mu, cycle_lengths, path_lengths, j);
}

namespace {

void check_family(const SetFamily& S, int* k_out, int n_cap) {
    int k = -1;
    for (const auto& s : S) {
        if (k == -1) k = static_cast<int>(s.size());
        if (static_cast<int>(s.size()) != k) throw InfeasibleInput("shadow: family is not uniform");
        if (!std::is_sorted(s.begin(), s.end())) throw InfeasibleInput("shadow: sets must be sorted");
        if (!s.empty() && (s.front() < 1 || s.back() > n_cap))
            throw InstanceTooLarge("shadow: ground set capped at n <= 16");
    }
    *k_out = k;
}

void subsets_of(const std::vector<int>& s, int take, std::size_t from, std::vector<int>& cur,
                SetFamily& out) {
    if (static_cast<int>(cur.size()) == take) {
        out.insert(cur);
        return;
    }
    for (std::size_t i = from; i < s.size(); ++i) {
        cur.push_back(s[i]);
        subsets_of(s, take, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

SetFamily lower_shadow(const SetFamily& S, int ell) {
    int k = -1;
    check_family(S, &k, 16);
    if (S.empty()) return {};
    if (ell < 0 || ell > k) throw InfeasibleInput("lower_shadow: need 0 <= ell <= k");
    SetFamily out;
    std::vector<int> cur;
    for (const auto& s : S) subsets_of(s, k - ell, 0, cur, out);
    return out;
}

SetFamily upper_shadow(const SetFamily& S, int ell, int n) {
    if (n > 16) throw InstanceTooLarge("upper_shadow: ground set capped at n <= 16");
    int k = -1;
    check_family(S, &k, n);
    if (S.empty()) return {};
    if (ell < 0 || ell > n - k) throw InfeasibleInput("upper_shadow: need 0 <= ell <= n-k");
    SetFamily out;
    for (const auto& s : S) {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(v);
        SetFamily additions;
        std::vector<int> cur;
        subsets_of(rest, ell, 0, cur, additions);
        for (const auto& add : additions) {
            std::vector<int> merged(s);
            merged.insert(merged.end(), add.begin(), add.end());
            std::sort(merged.begin(), merged.end());
            out.insert(std::move(merged));
        }
    }
    return out;
}

} // namespace berge
