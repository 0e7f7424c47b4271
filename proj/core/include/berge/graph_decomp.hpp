#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/admissibility.hpp"
#include "berge/multigraph.hpp"

namespace berge {

struct SolverConfig {
    std::uint64_t seed = 0;
    int max_restarts = 8;
    int exact_threshold = 12;   // largest n handled by the exact backtracking engine
    long long switch_budget = 200000; // edge-swap repair moves per restart
    int workers = 1;            // parallel restart attempts; 1 = sequential
    // Engine hint: place cycles of length 2 off these pairs when possible, so
    // a later digon removal cannot push a pair below its multiplicity floor.
    std::vector<VertexPair> digon_avoid_pairs;
};

// Search gave up within its budgets. Carries the best partial solution seen.
struct SearchExhausted : std::runtime_error {
    GraphDecomposition best_partial;
    LengthList unplaced;

    SearchExhausted(const std::string& msg, GraphDecomposition partial, LengthList missing)
        : std::runtime_error(msg), best_partial(std::move(partial)), unplaced(std::move(missing)) {}
};

// Certified M-path packing of lambda*K_n. Exact cover of the host when
// sigma(M) = lambda*C(n,2).
GraphDecomposition path_packing(int lambda, int n, const LengthList& M, const SolverConfig& cfg);

// M-cycle decomposition of lambda*K_n - I; requires is_admissible.
GraphDecomposition cycle_decomposition(int lambda, int n, const LengthList& M, const SolverConfig& cfg);

// M-cycle packing of lambda*K_n - I via the reduction to a decomposition of
// an extended list; the leave has size exactly f(lambda,n) - sigma(M).
GraphDecomposition cycle_packing(int lambda, int n, const LengthList& M, const SolverConfig& cfg);

// Exhaustive existence check for tiny hosts (|E| <= 30).
bool brute_force_packing_exists(const Multigraph& g, const LengthList& M, WalkKind kind);

// Empty vector = Ok; otherwise one message per violation.
std::vector<std::string> verify_graph_decomposition(const Multigraph& g, const GraphDecomposition& d,
                                                    const LengthList& M, WalkKind kind);

} // namespace berge
