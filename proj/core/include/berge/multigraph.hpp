#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace berge {

struct InfeasibleInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unordered pair of distinct vertices, stored with lo < hi. Vertices are 1-based.
struct VertexPair {
    int lo = 0;
    int hi = 0;

    VertexPair() = default;
    VertexPair(int x, int y) : lo(std::min(x, y)), hi(std::max(x, y)) {
        if (x == y) throw InfeasibleInput("loop edge {" + std::to_string(x) + "," + std::to_string(y) + "}");
    }

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Loopless multigraph on vertex set {1..n}: unordered pair -> multiplicity.
// Multiplicities live in a flat triangular array; n stays small in this
// pipeline (a few hundred at most) so the dense layout wins.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n), mult_(static_cast<std::size_t>(n) * (n - 1) / 2, 0) {
        if (n < 1) throw InfeasibleInput("multigraph needs n >= 1");
    }

    int n() const { return n_; }
    long long edge_count() const { return edges_; }

    int mult(int x, int y) const { return mult_[index(x, y)]; }
    int mult(const VertexPair& p) const { return mult_[index(p.lo, p.hi)]; }

    void add(int x, int y, int delta) {
        auto i = index(x, y);
        if (mult_[i] + delta < 0)
            throw InfeasibleInput("edge multiplicity underflow at {" + std::to_string(x) + "," +
                                  std::to_string(y) + "}");
        mult_[i] += delta;
        edges_ += delta;
    }
    void add(const VertexPair& p, int delta) { add(p.lo, p.hi, delta); }

    long long degree(int v) const {
        long long d = 0;
        for (int u = 1; u <= n_; ++u)
            if (u != v) d += mult_[index(std::min(u, v), std::max(u, v))];
        return d;
    }

    bool operator==(const Multigraph& o) const = default;

    // Flat index for 1 <= x < y <= n.
    std::size_t index(int x, int y) const {
        if (x > y) std::swap(x, y);
        if (x < 1 || y > n_ || x == y)
            throw InfeasibleInput("vertex pair {" + std::to_string(x) + "," + std::to_string(y) +
                                  "} out of range for n=" + std::to_string(n_));
        auto a = static_cast<std::size_t>(x), b = static_cast<std::size_t>(y);
        return (a - 1) * (2 * n_ - a) / 2 + (b - a - 1);
    }

private:
    int n_ = 0;
    std::vector<int> mult_;
    long long edges_ = 0;
};

enum class WalkKind { path, cycle };

// One specific parallel copy of an edge: pair {x,y} (x < y) plus copy index
// in 0..mult-1, so walks can consume distinct parallel edges.
struct EdgeInstance {
    int x = 0;
    int y = 0;
    int copy = 0;

    EdgeInstance() = default;
    EdgeInstance(int a, int b, int c) : x(std::min(a, b)), y(std::max(a, b)), copy(c) {}

    VertexPair pair() const { return VertexPair(x, y); }
    friend auto operator<=>(const EdgeInstance&, const EdgeInstance&) = default;
};

// Path or cycle in a multigraph. A path of length L stores L+1 vertices and
// L edges; a cycle of length L stores L vertices and L edges (closing edge
// implicit). Cycles of length 2 are a pair of parallel edges.
struct GraphWalk {
    WalkKind kind = WalkKind::path;
    std::vector<int> vertices;
    std::vector<EdgeInstance> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

// Edge-disjoint walks in `host` plus the unused edge instances (the leave).
// It is a decomposition exactly when the leave is empty.
struct GraphDecomposition {
    Multigraph host;
    std::vector<GraphWalk> walks;
    std::vector<EdgeInstance> leave;
};

Multigraph complete_multigraph(int lambda, int n);

// Canonical near-factor I: the perfect matching {1,2},{3,4},... when
// lambda*(n-1) is odd, empty otherwise.
std::vector<VertexPair> near_factor_I(int lambda, int n);

Multigraph graph_union(const Multigraph& g1, const Multigraph& g2);
Multigraph subtract(const Multigraph& g, const std::vector<VertexPair>& edges);
bool is_even(const Multigraph& g);

} // namespace berge
