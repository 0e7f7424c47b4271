#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/assembly.hpp"
#include "berge/graph_decomp.hpp"

namespace berge {

// One edge of mu*K_n^(k): a sorted k-subset of {1..n} plus a copy index.
struct HyperEdge {
    std::vector<int> members;
    int copy = 0;

    friend auto operator<=>(const HyperEdge&, const HyperEdge&) = default;
};

// Berge path/cycle: distinct core vertices plus distinct hyperedges, each
// hyperedge containing its two flanking core vertices.
struct BergeWalk {
    WalkKind kind = WalkKind::path;
    std::vector<int> core;
    std::vector<HyperEdge> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

struct HyperDecomposition {
    int n = 0;
    int k = 0;
    int mu = 0;
    std::vector<BergeWalk> walks;
};

// Bijection from edge instances of a host multigraph to hyperedges that
// contain the instance's endpoint pair.
class EdgeAssignment {
public:
    void assign(const EdgeInstance& e, HyperEdge h) { map_[e] = std::move(h); }
    const HyperEdge* find(const EdgeInstance& e) const {
        auto it = map_.find(e);
        return it == map_.end() ? nullptr : &it->second;
    }
    std::size_t size() const { return map_.size(); }
    const std::map<EdgeInstance, HyperEdge>& entries() const { return map_; }

private:
    std::map<EdgeInstance, HyperEdge> map_;
};

struct NoPerfectMatching : std::runtime_error {
    // Hall violator: a set of host edge instances whose joint neighborhood in
    // the containment graph is smaller than the set.
    std::vector<EdgeInstance> violator;
    long long neighborhood_size = 0;

    NoPerfectMatching(const std::string& msg, std::vector<EdgeInstance> s, long long nbhd)
        : std::runtime_error(msg), violator(std::move(s)), neighborhood_size(nbhd) {}
};

struct MissingAssignment : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Case 2 block has no system of distinct representatives; signals an
// ordering/precondition bug, since Hall's condition is guaranteed at n >= 10.
struct SDRNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BelowThresholdFailure : std::runtime_error {
    std::string stage;
    BelowThresholdFailure(const std::string& msg, std::string at) : std::runtime_error(msg), stage(std::move(at)) {}
};

// Perfect matching between the edge instances of h and the edges of
// mu*K_n^(k), each instance mapped into a k-set containing its pair.
// Throws NoPerfectMatching with a Hall-violator certificate when none exists.
EdgeAssignment hall_matching(const Multigraph& h, int n, int k, int mu);

// Substitute hyperedges for graph edges; cores and lengths are preserved.
std::vector<BergeWalk> lift(const GraphDecomposition& d, const EdgeAssignment& eta);

// Proper edge coloring of mu*K_n with mu*(2*floor((n-1)/2)+1) classes of
// size exactly floor(n/2), by the circle method repeated mu times.
std::vector<std::vector<VertexPair>> round_robin_coloring(int mu, int n);

HyperDecomposition case2_decompose(int n, int mu, const LengthList& cycle_lengths, const LengthList& path_lengths);
HyperDecomposition case3_decompose(int n, int mu, const LengthList& cycle_lengths, const LengthList& path_lengths);

// Per-run stage labels and timings for reporting.
struct RunTrace {
    std::string case_label;
    std::vector<std::pair<std::string, long long>> stage_ms;
    int lambda_paths = 0;
    int lambda_cycles = 0;
    int spread_lo = 0;
    int spread_hi = 0;
    bool want_stage_dump = false; // fill `artifacts` with staged-host JSON
    std::vector<std::pair<std::string, std::string>> artifacts;
};

// Full pipeline: dispatches on k and returns a decomposition that has already
// passed verify_berge_decomposition.
HyperDecomposition decompose(int n, int k, int mu, const LengthList& cycle_lengths,
                             const LengthList& path_lengths, const SolverConfig& cfg,
                             RunTrace* trace = nullptr);

} // namespace berge
