#include "berge/admissibility.hpp"

#include <climits>

namespace berge {

long long binom2(long long n) { return n * (n - 1) / 2; }

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > LLONG_MAX / (n - k + i)) return LLONG_MAX; // saturate
        r = r * (n - k + i) / i;
    }
    return r;
}

long long f_edges(int lambda, int n) {
    long long full = static_cast<long long>(lambda) * binom2(n);
    if ((static_cast<long long>(lambda) * (n - 1)) % 2 == 0) return full;
    return full - n / 2;
}

static bool parts_within(const LengthList& M, int lo, int hi) {
    for (int m : M.values)
        if (m < lo || m > hi) return false;
    return true;
}

ConditionReport admissibility_report(int lambda, int n, const LengthList& M) {
    ConditionReport rep;
    long long f = f_edges(lambda, n);
    long long t = static_cast<long long>(M.size());
    bool parts_ok = parts_within(M, 2, n);
    bool sum_ok = M.sigma() == f;
    bool nu2_ok = lambda % 2 == 0 || M.nu2() <= (lambda - 1) / 2 * binom2(n);
    bool spread_ok = lambda % 2 == 1 || M.max_part() + t - 2 <= lambda / 2 * binom2(n);
    rep.conditions = {{"parts_in_range", parts_ok},
                      {"sum_equals_f", sum_ok},
                      {"nu2_bound", nu2_ok},
                      {"max_plus_t_bound", spread_ok}};
    rep.overall = parts_ok && sum_ok && nu2_ok && spread_ok;
    rep.r = f - M.sigma();
    return rep;
}

bool is_admissible(int lambda, int n, const LengthList& M) {
    return admissibility_report(lambda, n, M).overall;
}

ConditionReport packing_report(const PackingInstance& inst) {
    ConditionReport rep;
    const auto& M = inst.lengths;
    long long f = f_edges(inst.lambda, inst.n);
    long long r = f - M.sigma();
    long long t = static_cast<long long>(M.size());
    long long half = binom2(inst.n);
    rep.r = r;

    bool parts_ok = parts_within(M, 2, inst.n) && r >= 0;
    bool branch_ok;
    if (inst.lambda % 2 == 1) {
        long long cap = static_cast<long long>((inst.lambda - 1) / 2) * half;
        branch_ok = (r != 1 && r != 2 && M.nu2() <= cap) || (r == 2 && M.nu2() < cap);
        rep.conditions = {{"parts_and_r_nonneg", parts_ok}, {"odd_lambda_branch", branch_ok}};
    } else {
        long long cap = static_cast<long long>(inst.lambda / 2) * half;
        long long lhs = M.max_part() + t - 2;
        branch_ok = (r == 0 && lhs <= cap) || (r >= 2 && lhs < cap);
        rep.conditions = {{"parts_and_r_nonneg", parts_ok}, {"even_lambda_branch", branch_ok}};
    }
    rep.overall = parts_ok && branch_ok;
    return rep;
}

bool packing_feasible(const PackingInstance& inst) {
    return packing_report(inst).overall;
}

ConditionReport path_packing_report(int lambda, int n, const LengthList& M) {
    ConditionReport rep;
    bool parts_ok = parts_within(M, 1, n - 1);
    bool sum_ok = M.sigma() <= static_cast<long long>(lambda) * binom2(n);
    rep.conditions = {{"parts_in_range", parts_ok}, {"sum_within_host", sum_ok}};
    rep.overall = parts_ok && sum_ok;
    rep.r = static_cast<long long>(lambda) * binom2(n) - M.sigma();
    return rep;
}

bool path_packing_feasible(int lambda, int n, const LengthList& M) {
    return path_packing_report(lambda, n, M).overall;
}

} // namespace berge
