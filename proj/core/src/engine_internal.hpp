#pragma once

// Internal search engines behind graph_decomp. Walks are handled as plain
// vertex sequences here; edge instances are materialized once a full system
// is found.

#include <cstdint>
#include <vector>

#include "berge/graph_decomp.hpp"
#include "berge/multigraph.hpp"
#include "berge/rng.hpp"

namespace berge::engine {

enum class Status { found, infeasible, exhausted };

struct VWalk {
    WalkKind kind = WalkKind::cycle;
    std::vector<int> verts; // cycle: L vertices; path: L+1 vertices

    int length() const {
        return kind == WalkKind::cycle ? static_cast<int>(verts.size())
                                       : static_cast<int>(verts.size()) - 1;
    }
};

struct ExactOptions {
    WalkKind kind = WalkKind::cycle;
    bool exact_cover = true;  // false: packing, host edges may stay unused
    long long node_budget = 0; // 0 = unlimited (complete search)
    bool randomize = false;
    std::uint64_t seed = 0;
    const std::vector<VertexPair>* digon_avoid = nullptr;
};

// Complete backtracking over placements, branching on the lexicographically
// smallest uncovered pair. With node_budget == 0 the result is exact:
// `infeasible` is a proof of non-existence.
Status exact_search(const Multigraph& host, std::vector<int> lengths, const ExactOptions& opt,
                    std::vector<VWalk>* out);

struct HeurOptions {
    std::uint64_t seed = 0;
    long long switch_budget = 200000;
    const std::vector<VertexPair>* digon_avoid = nullptr;
};

// Randomized greedy placement + large-neighborhood repair + segment-switch
// hill climbing. Returns true on success (out holds the full system).
bool heuristic_cycle_decomposition(const Multigraph& host, const std::vector<int>& lengths,
                                   const HeurOptions& opt, std::vector<VWalk>* out);

// Path packing (exact cover when sigma(lengths) == |E(host)|).
bool heuristic_path_packing(const Multigraph& host, const std::vector<int>& lengths,
                            const HeurOptions& opt, std::vector<VWalk>* out);

// Assign copy indices in walk order and collect the unused instances.
GraphDecomposition materialize(const Multigraph& host, const std::vector<VWalk>& walks);

} // namespace berge::engine
