#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace berge {

// List of prescribed walk lengths. Order is preserved for reporting but all
// predicates treat it as a multiset.
struct LengthList {
    std::vector<int> values;

    LengthList() = default;
    LengthList(std::initializer_list<int> v) : values(v) {}
    explicit LengthList(std::vector<int> v) : values(std::move(v)) {}

    long long sigma() const { return std::accumulate(values.begin(), values.end(), 0LL); }
    int nu2() const { return static_cast<int>(std::count(values.begin(), values.end(), 2)); }
    // Max over the empty list is 0 by convention.
    int max_part() const { return values.empty() ? 0 : *std::max_element(values.begin(), values.end()); }
    int min_part() const { return values.empty() ? 0 : *std::min_element(values.begin(), values.end()); }
    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }

    LengthList sorted_desc() const {
        LengthList out = *this;
        std::sort(out.values.begin(), out.values.end(), std::greater<int>());
        return out;
    }

    bool operator==(const LengthList&) const = default;
};

struct PackingInstance {
    int lambda = 1;
    int n = 2;
    LengthList lengths;
};

long long binom2(long long n);

// Binomial coefficient, saturating at LLONG_MAX instead of overflowing.
long long binom(int n, int k);

// Edge count of lambda*K_n - I.
long long f_edges(int lambda, int n);

// Named condition breakdowns backing the CLI `check` subcommand.
struct ConditionReport {
    bool overall = false;
    long long r = 0; // f(lambda,n) - sigma(M); only meaningful for packing checks
    std::vector<std::pair<std::string, bool>> conditions;
};

bool is_admissible(int lambda, int n, const LengthList& M);
ConditionReport admissibility_report(int lambda, int n, const LengthList& M);

bool packing_feasible(const PackingInstance& inst);
ConditionReport packing_report(const PackingInstance& inst);

bool path_packing_feasible(int lambda, int n, const LengthList& M);
ConditionReport path_packing_report(int lambda, int n, const LengthList& M);

} // namespace berge
