#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "berge/admissibility.hpp"
#include "berge/berge_lift.hpp"

namespace berge {

enum class ViolationCode {
    DuplicateHyperedge,
    CoreNotDistinct,
    ContainmentFail,
    CoverageMismatch,
    LengthMismatch,
    ArityMismatch,
};

std::string to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    int walk_index = -1; // -1 for global violations
    std::string detail;
};

// Audits a certificate in the JSON wire format; never inspects constructor
// state, so third-party certificates can be checked. Empty result = Ok.
//
// Reporting rules: per-walk structural faults (ArityMismatch, CoreNotDistinct,
// ContainmentFail) and DuplicateHyperedge are always reported; LengthMismatch
// compares the walk-length multisets against the prescribed lists; the global
// CoverageMismatch comparison is skipped while malformed or duplicated
// hyperedges are present, since those already falsify the multiset.
std::vector<Violation> verify_berge_decomposition(int n, int k, int mu, const LengthList& cycle_lengths,
                                                  const LengthList& path_lengths,
                                                  const nlohmann::json& certificate);

// Convenience overload: serializes through the certificate format first.
std::vector<Violation> verify_berge_decomposition(int n, int k, int mu, const LengthList& cycle_lengths,
                                                  const LengthList& path_lengths, const HyperDecomposition& d);

using SetFamily = std::set<std::vector<int>>;

// All (k-ell)-subsets of members of S. Exhaustive; capped at n <= 16.
SetFamily lower_shadow(const SetFamily& S, int ell);

// All (k+ell)-supersets within {1..n} of members of S. Capped at n <= 16.
SetFamily upper_shadow(const SetFamily& S, int ell, int n);

} // namespace berge
