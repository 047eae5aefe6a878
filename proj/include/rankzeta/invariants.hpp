#pragma once

#include "rankzeta/code.hpp"
#include "rankzeta/poly.hpp"

namespace rankzeta {

/// Generalized binomial moments B_0^(i)..B_n^(i):
///   B_u^(i) = sum over u-dim U of qbin(dim C(U), i)          for n < m,
///   the half-sum of column and row contributions              for n = m.
/// Rational-valued: the half-sum is not a priori integral. Indices i > k are
/// allowed and give the zero vector (no i-dimensional subcodes exist); the
/// MacWilliams transform needs such rows when dim C > dim of the dual.
inline std::vector<Rat> binomial_moments(const RankMetricCode& c, long i,
                                         unsigned long long cap = Budget{}.subspace_cap) {
    if (i < 0) throw std::invalid_argument("negative moment index");
    Int q(c.field()->q());
    std::vector<Rat> B(static_cast<size_t>(c.n()) + 1, Rat(0));
    for (long u = 0; u <= c.n(); ++u) {
        Rat acc(0);
        for_each_subspace(c.field(), c.n(), u, [&](const Subspace& s) {
            if (c.is_square()) {
                acc += make_rat(1, 2) * (qbin(dim_supported_col(c, s), i, q) +
                                         qbin(dim_supported_row(c, s), i, q));
            } else {
                acc += qbin(dim_supported_col(c, s), i, q);
            }
        }, cap);
        B[static_cast<size_t>(u)] = acc;
    }
    return B;
}

/// B from A:  B_u = sum_{w<=u} qbin(n-w, u-w) A_w.
inline std::vector<Rat> moments_from_distribution(long n, const Int& q, const std::vector<Rat>& A) {
    std::vector<Rat> B(static_cast<size_t>(n) + 1, Rat(0));
    for (long u = 0; u <= n; ++u)
        for (long w = 0; w <= u; ++w)
            B[static_cast<size_t>(u)] += qbin(n - w, u - w, q) * A[static_cast<size_t>(w)];
    return B;
}

/// A from B:  A_w = sum_{u<=w} qbin(n-u, w-u) (-1)^{w-u} q^{C(w-u,2)} B_u.
inline std::vector<Rat> distribution_from_moments(long n, const Int& q, const std::vector<Rat>& B) {
    std::vector<Rat> A(static_cast<size_t>(n) + 1, Rat(0));
    for (long w = 0; w <= n; ++w) {
        for (long u = 0; u <= w; ++u) {
            Rat sign = ((w - u) % 2 == 0) ? Rat(1) : Rat(-1);
            A[static_cast<size_t>(w)] += qbin(n - u, w - u, q) * sign *
                                         Rat(pow_int(q, choose2(w - u).get_ui())) *
                                         B[static_cast<size_t>(u)];
        }
    }
    return A;
}

/// i-th generalized rank weight distribution, through the moment inversion.
inline std::vector<Rat> rank_distribution(const RankMetricCode& c, long i,
                                          unsigned long long cap = Budget{}.subspace_cap) {
    return distribution_from_moments(c.n(), Int(c.field()->q()), binomial_moments(c, i, cap));
}

/// Direct form of the distribution: enumerate the i-dimensional subcodes of C
/// and bin them by support dimension. This is the oracle the fast path is
/// checked against; budget is qbin(k, i, q).
inline std::vector<Rat> rank_distribution_oracle(const RankMetricCode& c, long i,
                                                 unsigned long long cap = Budget{}.subcode_cap) {
    if (i < 0) throw std::invalid_argument("negative moment index");
    if (i > c.k()) return std::vector<Rat>(static_cast<size_t>(c.n()) + 1, Rat(0));
    Int q(c.field()->q());
    Int total = SubspaceStream::count(c.k(), i, q);
    if (total > int_from_ull(cap)) throw budget_exceeded("subcode enumeration over budget", total.get_str());
    auto basis = c.basis_matrices();
    std::vector<Int> col_count(static_cast<size_t>(c.n()) + 1, 0);
    std::vector<Int> row_count(static_cast<size_t>(c.m()) + 1, 0);
    for_each_subspace(c.field(), c.k(), i, [&](const Subspace& coeffs) {
        std::vector<FqMatrix> sub_basis;
        sub_basis.reserve(static_cast<size_t>(i));
        for (long r = 0; r < i; ++r) {
            std::vector<Fe> co(static_cast<size_t>(c.k()));
            for (long g = 0; g < c.k(); ++g) co[static_cast<size_t>(g)] = coeffs.basis().at(r, g);
            sub_basis.push_back(linear_combination(basis, co));
        }
        RankMetricCode d(c.field(), c.n(), c.m(), std::move(sub_basis));
        auto [colsupp, rowsupp] = code_supports(d);
        ++col_count[static_cast<size_t>(colsupp.dim())];
        if (c.is_square()) ++row_count[static_cast<size_t>(rowsupp.dim())];
    }, cap);
    std::vector<Rat> A(static_cast<size_t>(c.n()) + 1, Rat(0));
    for (long w = 0; w <= c.n(); ++w) {
        if (c.is_square())
            A[static_cast<size_t>(w)] =
                make_rat(col_count[static_cast<size_t>(w)] + row_count[static_cast<size_t>(w)], 2);
        else
            A[static_cast<size_t>(w)] = Rat(col_count[static_cast<size_t>(w)]);
    }
    return A;
}

/// W^(i)(X, Y) = sum_w A_w^(i) X^{n-w} Y^w.
inline HomogeneousPoly weight_enumerator_from_distribution(long n, const std::vector<Rat>& A) {
    return HomogeneousPoly(n, A);
}

/// The invariants of one (code, i) pair, plus the parameters needed to
/// extend b beyond the stored range.
struct InvariantProfile {
    CodeParams params;
    long i = 0;
    long d_i = 0;       // i-th generalized rank weight
    long d_dual = 0;    // minimum distance of the dual code
    std::vector<Rat> B;  // B_0..B_n
    std::vector<Rat> A;  // A_0..A_n
    std::vector<Rat> b;  // b_0..b_{n-d_i}
    HomogeneousPoly W{0};

    /// Normalized moment b_u^(i) for any integer u:
    ///   0 below zero; B_{u+d_i}/qbin(n, u+d_i) through u <= n-d_dual-d_i;
    ///   qbin(k - m(n-u-d_i), i) beyond.
    Rat b_at(long u) const {
        if (u < 0) return Rat(0);
        Int q(params.q);
        if (u <= params.n - d_dual - d_i) {
            Rat denom = qbin(params.n, u + d_i, q);
            return B[static_cast<size_t>(u + d_i)] * make_rat(denom.get_den(), denom.get_num());
        }
        return qbin(params.k - params.m * (params.n - u - d_i), i, q);
    }
};

/// Normalized moments b_0..b_{n-d_i}, with the extension rule applied where
/// the direct B-quotient regime ends.
inline std::vector<Rat> normalized_moments(const InvariantProfile& p) {
    std::vector<Rat> b;
    b.reserve(static_cast<size_t>(p.params.n - p.d_i) + 1);
    for (long u = 0; u <= p.params.n - p.d_i; ++u) b.push_back(p.b_at(u));
    return b;
}

/// Coefficients of W^(i) over the Bernstein basis: W^(i) = sum_{u=d_i}^{n}
/// b_{u-d_i} B_{n,u}. Returns (b_0, ..., b_{n-d_i}); reconstruction against
/// the monomial-basis enumerator is a tested invariant.
inline std::vector<Rat> bernstein_expansion(const InvariantProfile& p) { return p.b; }

inline InvariantProfile invariant_profile(const RankMetricCode& c, long i,
                                          const Budget& budget = Budget{}) {
    if (i < 0 || i > c.k()) throw std::invalid_argument("moment index outside [0, k]");
    InvariantProfile p;
    p.params = c.params();
    p.i = i;
    auto d = generalized_weights(c, budget.subspace_cap);
    p.d_i = d[static_cast<size_t>(i)];
    RankMetricCode dual = c.dual();
    p.d_dual = dual.k() == 0 ? c.n() + 1 : generalized_weights(dual, budget.subspace_cap)[1];
    p.B = binomial_moments(c, i, budget.subspace_cap);
    p.A = distribution_from_moments(c.n(), Int(c.field()->q()), p.B);
    p.b = normalized_moments(p);
    p.W = weight_enumerator_from_distribution(c.n(), p.A);
    return p;
}

}  // namespace rankzeta
