#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "berge/graph_decomp.hpp"

namespace berge {

struct SizeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpreadTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Auxiliary multigraph with an exact decomposition and per-pair multiplicity
// bounds every edge must satisfy.
struct StagedHost {
    Multigraph graph;
    GraphDecomposition decomposition;
    std::pair<int, int> level_bounds{0, 0};
    std::string branch_label; // which construction branch produced it
};

// (lambda_paths, lambda_cycles): the floor levels of the two length sums
// relative to C(n,2).
std::pair<int, int> split_levels(const LengthList& cycle_lengths, const LengthList& path_lengths, int n);

// H_P: multiplicities in [lambda, lambda+1], path decomposition with the
// prescribed length multiset. `lambda` must equal split_levels' path level.
StagedHost build_hp(const LengthList& path_lengths, int lambda, int n, const SolverConfig& cfg);

// H_C: multiplicities in [max(0, lambda_c-2), lambda_c+2], cycle
// decomposition with the prescribed length multiset.
StagedHost build_hc(const LengthList& cycle_lengths, int lambda_c, int n, const SolverConfig& cfg);

struct AssembledHost {
    Multigraph graph;
    GraphDecomposition decomposition;
    int lambda_lo = 0;
    int lambda_hi = 0;
};

// Edge-disjoint union of H_P and H_C. Validates |E| = mu*C(n,k) and the
// multiplicity spread <= 5 required by the matching step.
AssembledHost assemble_h(const StagedHost& hp, const StagedHost& hc, int mu, int n, int k);

// Shared helper: append d2's walks to d1 re-based on the union graph, with
// copy indices of d2 offset by g1's multiplicities.
GraphDecomposition merge_decompositions(const Multigraph& g1, const GraphDecomposition& d1,
                                        const Multigraph& g2, const GraphDecomposition& d2);

} // namespace berge
