#pragma once

#include <span>
#include <vector>

#include "rankzeta/poly.hpp"
#include "rankzeta/rational.hpp"

namespace rankzeta {

/// Evaluated table of homogeneous ordinary partial Bell polynomials at fixed
/// arguments x_0..x_a: values P_{u,w} for 0 <= w <= u <= a. By convention
/// P_{0,0} = 1 and P_{u,0} = P_{0,w} = 0 for u, w >= 1.
struct BellEvaluation {
    std::vector<Rat> arguments;           // x_0..x_a
    std::vector<std::vector<Rat>> table;  // table[u][w] = P_{u,w}

    const Rat& partial(long u, long w) const { return table.at(u).at(w); }
    Rat full(long u) const {
        Rat s(0);
        for (const Rat& v : table.at(u)) s += v;
        return s;
    }
};

namespace detail {

// P_{u,w} is the coefficient of X^u in (sum_{j>=1} x_j x_0^{j-1} X^j)^w.
// One multiplication by the inner series per w gives the whole table.
inline std::vector<std::vector<Rat>> bell_table_rows(long a, std::span<const Rat> x) {
    std::vector<Rat> inner(static_cast<size_t>(a) + 1, Rat(0));
    Rat x0pow(1);
    for (long j = 1; j <= a; ++j) {
        if (static_cast<size_t>(j) < x.size()) inner[static_cast<size_t>(j)] = x[static_cast<size_t>(j)] * x0pow;
        if (!x.empty()) x0pow *= x[0];
    }
    std::vector<std::vector<Rat>> table(static_cast<size_t>(a) + 1,
                                        std::vector<Rat>(static_cast<size_t>(a) + 1, Rat(0)));
    std::vector<Rat> power(static_cast<size_t>(a) + 1, Rat(0));
    power[0] = Rat(1);  // inner^0
    table[0][0] = Rat(1);
    for (long w = 1; w <= a; ++w) {
        std::vector<Rat> next(static_cast<size_t>(a) + 1, Rat(0));
        for (long s = 0; s <= a; ++s) {
            if (power[static_cast<size_t>(s)] == 0) continue;
            for (long j = 1; s + j <= a; ++j)
                next[static_cast<size_t>(s + j)] += power[static_cast<size_t>(s)] * inner[static_cast<size_t>(j)];
        }
        power = std::move(next);
        for (long u = w; u <= a; ++u) table[static_cast<size_t>(u)][static_cast<size_t>(w)] = power[static_cast<size_t>(u)];
    }
    return table;
}

}  // namespace detail

/// Full evaluation table at arguments x_0..x_a (x must supply all of them).
inline BellEvaluation bell_table(long a, std::span<const Rat> x) {
    if (a < 0) throw std::invalid_argument("negative Bell index");
    if (a >= 1 && x.size() < static_cast<size_t>(a) + 1)
        throw std::invalid_argument("bell_table needs arguments x_0..x_a");
    BellEvaluation ev;
    ev.arguments.assign(x.begin(), x.end());
    ev.table = detail::bell_table_rows(a, x);
    return ev;
}

/// P_{a,b}(x_0, ..., x_{a-b+1}): sum over compositions of a into b parts of
/// x_0^{a-b} x_{c_1} ... x_{c_b}, computed by the series-power recurrence.
/// Composition enumeration exists only as a small-instance test oracle.
inline Rat bell_partial(long a, long b, std::span<const Rat> x) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative Bell index");
    if (a == 0 && b == 0) return Rat(1);
    if (a == 0 || b == 0) return Rat(0);
    if (b > a) return Rat(0);
    if (x.size() < static_cast<size_t>(a - b) + 2)
        throw std::invalid_argument("bell_partial needs arguments x_0..x_{a-b+1}");
    return detail::bell_table_rows(a, x)[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

/// P_a(x_0..x_a) = sum_{b=0}^{a} P_{a,b}.
inline Rat bell_full(long a, std::span<const Rat> x) {
    if (a < 0) throw std::invalid_argument("negative Bell index");
    if (a == 0) return Rat(1);
    if (x.size() < static_cast<size_t>(a) + 1)
        throw std::invalid_argument("bell_full needs arguments x_0..x_a");
    auto rows = detail::bell_table_rows(a, x);
    Rat s(0);
    for (const Rat& v : rows[static_cast<size_t>(a)]) s += v;
    return s;
}

/// Reciprocal mod T^{order+1} through the Bell-polynomial closed form:
/// with y_0 = 1/q_0, y_a = (1/q_0)^{a+1} P_a(q_0, -q_1, ..., -q_a).
/// Independent of the long-division route in poly.hpp; the two must agree.
inline TruncatedSeries series_reciprocal_bell(const TruncatedSeries& q) {
    if (q[0] == 0) throw std::invalid_argument("reciprocal of series with zero constant term");
    long N = q.order();
    std::vector<Rat> args(static_cast<size_t>(N) + 1);
    args[0] = q[0];
    for (long u = 1; u <= N; ++u) args[static_cast<size_t>(u)] = -q[u];
    BellEvaluation ev = bell_table(N, args);
    Rat inv0 = make_rat(q[0].get_den(), q[0].get_num());
    TruncatedSeries y(N);
    Rat scale = inv0;
    for (long a = 0; a <= N; ++a) {
        y[a] = scale * ev.full(a);
        scale *= inv0;
    }
    return y;
}

}  // namespace rankzeta
