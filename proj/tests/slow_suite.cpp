// Optional slow suite: the containment matching alone at the k=3 guaranteed
// threshold (n=108), where the k-set side has C(108,3) = 204156 vertices.
// Not part of the default test set; see BERGE_ENABLE_SLOW_SUITE.

#include <chrono>
#include <cstdio>

#include "berge/admissibility.hpp"
#include "berge/berge_lift.hpp"

using namespace berge;

int main() {
    const int n = 108, k = 3, mu = 1;
    long long total = binom(n, k);
    long long pairs = binom2(n);

    // synthetic H with the flattest admissible multiplicities
    int base = static_cast<int>(total / pairs);
    long long extra = total - static_cast<long long>(base) * pairs;
    Multigraph h(n);
    long long handed = 0;
    for (int x = 1; x <= n && handed < total; ++x)
        for (int y = x + 1; y <= n; ++y) {
            int m = base + (extra > 0 ? 1 : 0);
            if (extra > 0) extra--;
            h.add(x, y, m);
            handed += m;
        }
    std::printf("host: %lld edges over %lld pairs (base multiplicity %d)\n", h.edge_count(), pairs, base);

    auto t0 = std::chrono::steady_clock::now();
    EdgeAssignment eta = hall_matching(h, n, k, mu);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (static_cast<long long>(eta.size()) != total) {
        std::printf("FAIL: matched %zu of %lld\n", eta.size(), total);
        return 1;
    }
    for (const auto& [e, he] : eta.entries()) {
        bool ok = std::binary_search(he.members.begin(), he.members.end(), e.x) &&
                  std::binary_search(he.members.begin(), he.members.end(), e.y);
        if (!ok) {
            std::printf("FAIL: containment violated\n");
            return 1;
        }
    }
    std::printf("PASS: perfect containment matching of %lld pairs in %.1fs\n", total, secs);
    return secs < 3600 ? 0 : 1;
}
