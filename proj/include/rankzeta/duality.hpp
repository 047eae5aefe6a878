#pragma once

#include "rankzeta/invariants.hpp"

namespace rankzeta {

/// Moment tables indexed [j][u], j the moment superscript, u = 0..n.
using MomentTable = std::vector<std::vector<Rat>>;

/// MacWilliams identity for generalized binomial moments, exactly as stated:
///   B_u^(i)(C) = sum_{j=0}^{i} q^{j(k - m(n-u) - i + j)} qbin(k - m(n-u), i-j)
///                B_{n-u}^(j)(dual).
/// `primal` carries the parameters of C (k its dimension); powers of q with
/// negative exponent stay exact rationals.
inline Rat moment_of_dual_to_primal_at(const MomentTable& b_dual, const CodeParams& primal, long i,
                                       long u) {
    if (static_cast<long>(b_dual.size()) <= i)
        throw std::invalid_argument("dual moment table missing rows up to i");
    Int q(primal.q);
    long e = primal.k - primal.m * (primal.n - u);
    Rat acc(0);
    for (long j = 0; j <= i; ++j) {
        acc += pow_rat(q, j * (e - i + j)) * qbin(e, i - j, q) *
               b_dual[static_cast<size_t>(j)][static_cast<size_t>(primal.n - u)];
    }
    return acc;
}

inline std::vector<Rat> moments_of_dual_to_primal(const MomentTable& b_dual,
                                                  const CodeParams& primal, long i) {
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(primal.n) + 1);
    for (long u = 0; u <= primal.n; ++u) out.push_back(moment_of_dual_to_primal_at(b_dual, primal, i, u));
    return out;
}

/// Inverse direction (not printed anywhere; a triangular solve). For each u
/// the j = i term has pivot coefficient q^{i(k - m(n-u))}, so rows are
/// recovered for j = 0, 1, ..., i, each time subtracting the already-known
/// lower rows. Returns the dual's table rows 0..i.
inline MomentTable primal_to_dual_moments(const MomentTable& b_primal, const CodeParams& primal,
                                          long i) {
    if (static_cast<long>(b_primal.size()) <= i)
        throw std::invalid_argument("primal moment table missing rows up to i");
    Int q(primal.q);
    MomentTable dual(static_cast<size_t>(i) + 1,
                     std::vector<Rat>(static_cast<size_t>(primal.n) + 1, Rat(0)));
    for (long jj = 0; jj <= i; ++jj) {
        for (long u = 0; u <= primal.n; ++u) {
            long e = primal.k - primal.m * (primal.n - u);
            Rat acc = b_primal[static_cast<size_t>(jj)][static_cast<size_t>(u)];
            for (long j = 0; j < jj; ++j)
                acc -= pow_rat(q, j * (e - jj + j)) * qbin(e, jj - j, q) *
                       dual[static_cast<size_t>(j)][static_cast<size_t>(primal.n - u)];
            Rat pivot = pow_rat(q, jj * e);
            dual[static_cast<size_t>(jj)][static_cast<size_t>(primal.n - u)] =
                acc * make_rat(pivot.get_den(), pivot.get_num());
        }
    }
    return dual;
}

/// Normalized moment b_u^(i)(C) from the dual side:
///   b_u^(i)(C) = sum_j q^{j(k - m(n-d_i-u) - i + j)} qbin(k - m(n-d_i-u), i-j)
///                b^(j)_{n-u-d_j(dual)-d_i}(dual),
/// valid on 0 <= u <= n - d_i - d. `d_dual_weights` lists d_j(dual) for
/// j = 0..i; `b_dual[j]` must cover the indices used.
inline Rat dual_normalized_moment(const MomentTable& b_dual, const std::vector<long>& d_dual_weights,
                                  const CodeParams& primal, long i, long d_i, long d, long u) {
    if (u < 0 || u > primal.n - d_i - d)
        throw std::out_of_range("dual normalized moment index outside its valid range");
    Int q(primal.q);
    long e = primal.k - primal.m * (primal.n - d_i - u);
    Rat acc(0);
    for (long j = 0; j <= i; ++j) {
        long idx = primal.n - u - d_dual_weights[static_cast<size_t>(j)] - d_i;
        Rat bj = idx < 0 ? Rat(0) : b_dual[static_cast<size_t>(j)].at(static_cast<size_t>(idx));
        acc += pow_rat(q, j * (e - i + j)) * qbin(e, i - j, q) * bj;
    }
    return acc;
}

/// Zeta series of C rebuilt from the dual side alone. The moment transform
/// recovers B^(i)(C) in full (B_w(dual) = qbin(n,w) b_{w-d_j(dual)}(dual) in
/// every regime), then the normalized-moment rule produces the coefficients.
inline TruncatedSeries dual_zeta(const MomentTable& b_dual, const std::vector<long>& d_dual_weights,
                                 const CodeParams& primal, long i, long d_i, long order) {
    Int q(primal.q);
    MomentTable B_dual(static_cast<size_t>(i) + 1,
                       std::vector<Rat>(static_cast<size_t>(primal.n) + 1, Rat(0)));
    for (long j = 0; j <= i; ++j)
        for (long w = 0; w <= primal.n; ++w) {
            long idx = w - d_dual_weights[static_cast<size_t>(j)];
            if (idx >= 0)
                B_dual[static_cast<size_t>(j)][static_cast<size_t>(w)] =
                    qbin(primal.n, w, q) * b_dual[static_cast<size_t>(j)].at(static_cast<size_t>(idx));
        }
    std::vector<Rat> B = moments_of_dual_to_primal(B_dual, primal, i);
    long d_dual = d_dual_weights.size() > 1 ? d_dual_weights[1] : primal.n + 1;  // d(dual) = d_1(dual)
    InvariantProfile p;
    p.params = primal;
    p.i = i;
    p.d_i = d_i;
    p.d_dual = d_dual;
    p.B = std::move(B);
    TruncatedSeries z(order);
    for (long u = 0; u <= order; ++u) z[u] = p.b_at(u);
    return z;
}

/// A^(i)(C) from the dual's distributions A^(j)(dual), j <= i: compose the
/// distribution->moment map on the dual side, the MacWilliams transform, and
/// the moment->distribution inversion on the primal side.
inline std::vector<Rat> dual_rank_distribution(const MomentTable& a_dual, const CodeParams& primal,
                                               long i) {
    if (static_cast<long>(a_dual.size()) <= i)
        throw std::invalid_argument("dual distribution table missing rows up to i");
    Int q(primal.q);
    MomentTable b_dual;
    b_dual.reserve(static_cast<size_t>(i) + 1);
    for (long j = 0; j <= i; ++j)
        b_dual.push_back(moments_from_distribution(primal.n, q, a_dual[static_cast<size_t>(j)]));
    std::vector<Rat> B = moments_of_dual_to_primal(b_dual, primal, i);
    return distribution_from_moments(primal.n, q, B);
}

}  // namespace rankzeta
