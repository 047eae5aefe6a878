#pragma once

#include <optional>
#include <set>

#include "rankzeta/code.hpp"

namespace rankzeta {

/// Weight tuple sanity per the general theory: d_0 = 0, nondecreasing,
/// d_i < d_{i+m}, ceil(i/m) <= d_i <= n - floor((k-i)/m), d_k <= n.
inline bool weight_tuple_valid(const std::vector<long>& d, long n, long m) {
    long k = static_cast<long>(d.size()) - 1;
    if (k < 0 || d[0] != 0) return false;
    for (long i = 1; i <= k; ++i) {
        if (d[static_cast<size_t>(i)] < d[static_cast<size_t>(i - 1)]) return false;
        if (i + m <= k && d[static_cast<size_t>(i)] >= d[static_cast<size_t>(i + m)]) return false;
        if (d[static_cast<size_t>(i)] < ceil_div(i, m)) return false;
        if (d[static_cast<size_t>(i)] > n - floor_div(k - i, m)) return false;
    }
    return k == 0 || d[static_cast<size_t>(k)] <= n;
}

/// Weights of the dual code from the weights of C alone, via the residue
/// classes V_p = {d_{p+jm} : 1 <= p+jm <= k} and the complement relation
/// V_p(dual) = {1..n} \ {n+1-x : x in V_{p+k}}. Requires 1 <= k <= nm-1;
/// the extreme codes are handled by their known weight ladders.
inline std::vector<long> wei_dual_weights(const std::vector<long>& d, long n, long m) {
    long k = static_cast<long>(d.size()) - 1;
    long nm = n * m;
    if (!weight_tuple_valid(d, n, m)) throw std::invalid_argument("inconsistent weight tuple");
    long k_dual = nm - k;
    std::vector<long> out(static_cast<size_t>(k_dual) + 1, 0);
    if (k == 0) {  // dual of {0} is the full space: d_i = ceil(i/m)
        for (long i = 1; i <= k_dual; ++i) out[static_cast<size_t>(i)] = ceil_div(i, m);
        return out;
    }
    if (k == nm) return out;  // dual of the full space is {0}
    for (long p = 1; p <= m; ++p) {
        // V-bar of the class p+k of C, as a set of values in {1..n}
        std::set<long> vbar;
        long residue = (p + k) % m;  // class of indices congruent to p+k
        for (long idx = residue <= 0 ? residue + m : residue; idx <= k; idx += m)
            if (idx >= 1) vbar.insert(n + 1 - d[static_cast<size_t>(idx)]);
        std::vector<long> vp_dual;
        for (long x = 1; x <= n; ++x)
            if (!vbar.count(x)) vp_dual.push_back(x);
        // within one residue class the weights strictly increase, so the
        // sorted complement lists d_p(dual), d_{p+m}(dual), ... in order
        long count = 0;
        for (long idx = p; idx <= k_dual; idx += m) ++count;
        if (static_cast<long>(vp_dual.size()) != count)
            throw std::invalid_argument("weight tuple fails duality consistency");
        long t = 0;
        for (long idx = p; idx <= k_dual; idx += m, ++t)
            out[static_cast<size_t>(idx)] = vp_dual[static_cast<size_t>(t)];
    }
    if (!weight_tuple_valid(out, n, m))
        throw std::invalid_argument("weight tuple fails duality consistency");
    return out;
}

struct ClassificationReport {
    CodeParams params;
    std::vector<long> weights;       // d_0..d_k (size 2 for the zero code, by convention)
    std::vector<long> dual_weights;  // of the dual code
    long d = 0;                      // minimum distance (n+1 for the zero code)
    long d_dual = 0;
    long alpha = 0, rho = 0;         // k = alpha*m + rho, 0 <= rho <= m-1
    std::vector<bool> is_ibmd;       // index i = 0..max(k,1)
    std::vector<bool> is_imrd;
    std::optional<long> minimal_bmd;
    bool is_mrd = false, is_qmrd = false, is_dqmrd = false;
};

namespace detail {

// d_i with the zero-code convention d_i({0}) = n+1 for i >= 1.
inline long weight_at(const std::vector<long>& d, long n, long k, long i) {
    if (i == 0) return 0;
    if (k == 0) return n + 1;
    return d.at(static_cast<size_t>(i));
}

}  // namespace detail

inline ClassificationReport classify(const RankMetricCode& c,
                                     unsigned long long cap = Budget{}.subspace_cap) {
    ClassificationReport r;
    r.params = c.params();
    long n = c.n(), m = c.m(), k = c.k();
    r.weights = generalized_weights(c, cap);
    RankMetricCode dual = c.dual();
    r.dual_weights = generalized_weights(dual, cap);
    r.d = k == 0 ? n + 1 : r.weights[1];
    r.d_dual = dual.k() == 0 ? n + 1 : r.dual_weights[1];
    r.alpha = k / m;
    r.rho = k % m;

    long top = std::max(k, 1L);
    r.is_ibmd.resize(static_cast<size_t>(top) + 1);
    r.is_imrd.resize(static_cast<size_t>(top) + 1);
    for (long i = 0; i <= top; ++i) {
        long di = detail::weight_at(r.weights, n, k, i);
        r.is_ibmd[static_cast<size_t>(i)] = (n - r.d_dual - di) < 0;
        r.is_imrd[static_cast<size_t>(i)] = di == n - floor_div(k - i, m);
    }
    // smallest i >= 1 with the monotone BMD property; binary scan
    {
        long lo = 1, hi = top, found = -1;
        while (lo <= hi) {
            long mid = lo + (hi - lo) / 2;
            if (r.is_ibmd[static_cast<size_t>(mid)]) { found = mid; hi = mid - 1; }
            else lo = mid + 1;
        }
        if (found > 0) r.minimal_bmd = found;
    }
    r.is_mrd = Int(k) == Int(m) * Int(n - r.d + 1);
    auto qmrd = [&](long dim, long dist) {
        return dim % m != 0 && dist == n - ceil_div(dim, m) + 1;
    };
    r.is_qmrd = qmrd(k, r.d);
    r.is_dqmrd = r.is_qmrd && qmrd(n * m - k, r.d_dual);
    return r;
}

/// n - d(dual) - d_i < 0; the BMD property at index i.
inline bool is_ibmd(const RankMetricCode& c, long i, unsigned long long cap = Budget{}.subspace_cap) {
    ClassificationReport r = classify(c, cap);
    return r.is_ibmd.at(static_cast<size_t>(i));
}

/// d_i = n - floor((k-i)/m); the MRD property at index i.
inline bool is_imrd(const RankMetricCode& c, long i, unsigned long long cap = Budget{}.subspace_cap) {
    ClassificationReport r = classify(c, cap);
    return r.is_imrd.at(static_cast<size_t>(i));
}

inline std::optional<long> minimal_bmd_index(const RankMetricCode& c,
                                             unsigned long long cap = Budget{}.subspace_cap) {
    return classify(c, cap).minimal_bmd;
}

inline bool is_qmrd(const RankMetricCode& c, unsigned long long cap = Budget{}.subspace_cap) {
    return classify(c, cap).is_qmrd;
}
inline bool is_dqmrd(const RankMetricCode& c, unsigned long long cap = Budget{}.subspace_cap) {
    return classify(c, cap).is_dqmrd;
}

}  // namespace rankzeta
