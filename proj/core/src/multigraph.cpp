#include "berge/multigraph.hpp"

namespace berge {

Multigraph complete_multigraph(int lambda, int n) {
    if (n < 1) throw InfeasibleInput("complete_multigraph: n must be positive");
    if (lambda < 0) throw InfeasibleInput("complete_multigraph: lambda must be non-negative");
    Multigraph g(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (lambda > 0) g.add(x, y, lambda);
    return g;
}

std::vector<VertexPair> near_factor_I(int lambda, int n) {
    std::vector<VertexPair> I;
    if (lambda <= 0 || n < 2) return I;
    if ((static_cast<long long>(lambda) * (n - 1)) % 2 == 0) return I;
    // lambda*(n-1) odd forces n-1 odd, so n is even and {1,2},{3,4},... is a
    // perfect matching.
    I.reserve(n / 2);
    for (int v = 1; v + 1 <= n; v += 2) I.emplace_back(v, v + 1);
    return I;
}

Multigraph graph_union(const Multigraph& g1, const Multigraph& g2) {
    if (g1.n() != g2.n()) throw InfeasibleInput("graph_union: vertex counts differ");
    Multigraph out = g1;
    for (int x = 1; x <= g2.n(); ++x)
        for (int y = x + 1; y <= g2.n(); ++y) {
            int m = g2.mult(x, y);
            if (m > 0) out.add(x, y, m);
        }
    return out;
}

Multigraph subtract(const Multigraph& g, const std::vector<VertexPair>& edges) {
    Multigraph out = g;
    for (const auto& p : edges) out.add(p, -1);
    return out;
}

bool is_even(const Multigraph& g) {
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) % 2 != 0) return false;
    return true;
}

} // namespace berge
