#pragma once

#include "rankzeta/bell.hpp"
#include "rankzeta/invariants.hpp"

namespace rankzeta {

inline long default_series_order(long n) { return 2 * n + 2; }

/// Z^(i)(T) = sum_{u>=0} b_u^(i) T^u, the generating function of the
/// normalized binomial moments, truncated at the requested order.
inline TruncatedSeries zeta_series(const InvariantProfile& p, long order) {
    TruncatedSeries z(order);
    for (long u = 0; u <= order; ++u) z[u] = p.b_at(u);
    return z;
}
inline TruncatedSeries zeta_series(const RankMetricCode& c, long i, long order = -1,
                                   const Budget& budget = Budget{}) {
    if (order < 0) order = default_series_order(c.n());
    return zeta_series(invariant_profile(c, i, budget), order);
}

/// deg P^(i) <= n - d(dual) - d_i + i + 1.
inline long zeta_degree_bound(const InvariantProfile& p) {
    return p.params.n - p.d_dual - p.d_i + p.i + 1;
}

/// Coefficients of the zeta polynomial P^(i) = Z^(i) * prod_{j=0}^{i} (1 - q^{mj} T):
///   p_u^(i) = sum_{j=0}^{i+1} qbin(i+1, j; q^m) (-1)^j q^{m C(j,2)} b_{u-j}^(i).
/// Every coefficient beyond the degree bound is computed and must be exactly
/// zero; a nonzero one means the arithmetic is broken somewhere upstream.
inline TruncatedSeries zeta_polynomial(const InvariantProfile& p, long order) {
    Int qm = pow_int(Int(p.params.q), static_cast<unsigned long>(p.params.m));
    TruncatedSeries P(order);
    for (long u = 0; u <= order; ++u) {
        Rat acc(0);
        for (long j = 0; j <= p.i + 1; ++j) {
            Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
            acc += qbin(p.i + 1, j, qm) * sign * Rat(pow_int(qm, choose2(j).get_ui())) * p.b_at(u - j);
        }
        P[u] = acc;
    }
    long bound = zeta_degree_bound(p);
    if (!P.is_polynomial_of_degree_at_most(bound))
        throw consistency_error("zeta polynomial has a nonzero coefficient above its degree bound");
    return P;
}
inline TruncatedSeries zeta_polynomial(const RankMetricCode& c, long i, long order = -1,
                                       const Budget& budget = Budget{}) {
    if (order < 0) order = default_series_order(c.n());
    return zeta_polynomial(invariant_profile(c, i, budget), order);
}

/// prod_{j=0}^{i} (1 - q^{mj} T) as a truncated series.
inline TruncatedSeries zeta_denominator(long i, unsigned q, long m, long order) {
    TruncatedSeries d(order);
    d[0] = Rat(1);
    for (long j = 0; j <= i; ++j) {
        TruncatedSeries f(order);
        f[0] = Rat(1);
        if (order >= 1) f[1] = -Rat(pow_int(Int(q), static_cast<unsigned long>(m * j)));
        d = d * f;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Reference data of a hypothetical j-BMD code with dim = tau (mod m):
//   b_{tau,u} = qbin(tau + m(u - floor((tau-j)/m)), j), its zeta series and
//   polynomial, and the enumerators M_{tau,r} = sum_u b_{tau,u} B_{n,u+r}.
// These are parameter-defined objects; coincidence with a concrete BMD code
// is a theorem checked in tests, not a definition.
// ---------------------------------------------------------------------------

inline Rat bmd_reference_b(long tau, long j, long u, const Int& q, long m) {
    if (u < 0) return Rat(0);
    return qbin(tau + m * (u - floor_div(tau - j, m)), j, q);
}

inline Rat bmd_reference_p(long tau, long j, long u, const Int& q, long m) {
    Int qm = pow_int(q, static_cast<unsigned long>(m));
    Rat acc(0);
    for (long t = 0; t <= j + 1; ++t) {
        Rat sign = (t % 2 == 0) ? Rat(1) : Rat(-1);
        acc += qbin(j + 1, t, qm) * sign * Rat(pow_int(qm, choose2(t).get_ui())) *
               bmd_reference_b(tau, j, u - t, q, m);
    }
    return acc;
}

struct BmdReference {
    long tau = 0, j = 0, n = 0, m = 0;
    unsigned q = 2;
    std::vector<Rat> b, p;             // coefficients 0..order
    TruncatedSeries Z{0}, P{0};
    std::vector<HomogeneousPoly> M;    // M_{tau,r} for r = 0..n
};

inline HomogeneousPoly bmd_reference_enumerator(long tau, long r, long j, const Int& q, long m,
                                                long n) {
    HomogeneousPoly out(n);
    for (long u = 0; u + r <= n; ++u)
        out += bmd_reference_b(tau, j, u, q, m) * bernstein(n, u + r, q);
    return out;
}

inline BmdReference bmd_reference(long tau, long j, unsigned q, long m, long n, long order = -1) {
    if (tau < 0 || tau >= m) throw std::invalid_argument("tau outside [0, m-1]");
    if (order < 0) order = default_series_order(n);
    BmdReference ref;
    ref.tau = tau;
    ref.j = j;
    ref.n = n;
    ref.m = m;
    ref.q = q;
    Int Q(q);
    ref.Z = TruncatedSeries(order);
    ref.P = TruncatedSeries(order);
    for (long u = 0; u <= order; ++u) {
        ref.b.push_back(bmd_reference_b(tau, j, u, Q, m));
        ref.p.push_back(bmd_reference_p(tau, j, u, Q, m));
        ref.Z[u] = ref.b.back();
        ref.P[u] = ref.p.back();
    }
    for (long r = 0; r <= n; ++r) ref.M.push_back(bmd_reference_enumerator(tau, r, j, Q, m, n));
    return ref;
}

// ---------------------------------------------------------------------------
// phi_n(X, Y, T) = sum_u B_{n,u}(X, Y; q) T^{n-u} and the enumerator
// extraction W^(i) = [T^{n-d_i}] Z^(i tilde) phi_n.
// ---------------------------------------------------------------------------

/// Coefficient polynomials of phi_n: entry t is the coefficient of T^t,
/// namely B_{n,n-t}.
inline std::vector<HomogeneousPoly> phi(long n, const Int& q) {
    std::vector<HomogeneousPoly> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (long t = 0; t <= n; ++t) out.push_back(bernstein(n, n - t, q));
    return out;
}

/// Coefficient of T^t in Z * phi_n (a polynomial-valued series product).
inline HomogeneousPoly zeta_phi_coefficient(const TruncatedSeries& z, long n, const Int& q, long t) {
    if (t > z.order()) throw std::invalid_argument("series order too small for phi extraction");
    std::vector<HomogeneousPoly> ph = phi(n, q);
    HomogeneousPoly out(n);
    // T-degree must split as t = u + (n - u'), u' the Bernstein index
    for (long u = 0; u <= t; ++u) {
        long up = n - t + u;
        if (up < 0 || up > n) continue;
        out += z[u] * ph[static_cast<size_t>(n - up)];
    }
    return out;
}

/// W^(i) recovered as the T^{n-d_i} coefficient of Z^(i) phi_n. An exact
/// mismatch with the direct enumerator is a consistency failure; the check
/// lives in tests and the oracle harness.
inline HomogeneousPoly enumerator_from_zeta(const InvariantProfile& p, long order = -1) {
    if (order < 0) order = default_series_order(p.params.n);
    TruncatedSeries z = zeta_series(p, order);
    return zeta_phi_coefficient(z, p.params.n, Int(p.params.q), p.params.n - p.d_i);
}

// ---------------------------------------------------------------------------
// Beta coefficients: Z^(i) = Z_tau^(i) * sum_u beta_{tau,u} T^u.
// Computed through the Bell closed form over the zeta-polynomial
// coefficients, re-derived over the normalized moments, and cross-checked
// against plain series division; the three must agree exactly.
// ---------------------------------------------------------------------------

namespace detail {

// sum_{j=0}^{u} f_j / (g_0)^{u-j+1} * P_{u-j}(g_0, -g_1, ..., -g_{u-j}),
// the shared shape of both closed forms.
inline std::vector<Rat> beta_bell_form(const std::vector<Rat>& f, const std::vector<Rat>& g,
                                       long order) {
    if (g[0] == 0) throw std::invalid_argument("degenerate reference: leading coefficient is zero");
    std::vector<Rat> args(static_cast<size_t>(order) + 1);
    args[0] = g[0];
    for (long t = 1; t <= order; ++t) args[static_cast<size_t>(t)] = -g[static_cast<size_t>(t)];
    BellEvaluation bell = bell_table(order, args);
    Rat inv0 = make_rat(g[0].get_den(), g[0].get_num());
    std::vector<Rat> beta(static_cast<size_t>(order) + 1, Rat(0));
    for (long u = 0; u <= order; ++u) {
        Rat acc(0);
        Rat scale = inv0;  // (1/g_0)^{u-j+1} built down from j = u
        for (long j = u; j >= 0; --j) {
            acc += f[static_cast<size_t>(j)] * scale * bell.full(u - j);
            scale *= inv0;
        }
        beta[static_cast<size_t>(u)] = acc;
    }
    return beta;
}

}  // namespace detail

/// beta_{tau,0..order}. Throws consistency_error if the Bell routes and the
/// division route disagree, or if the defining series identities fail.
inline std::vector<Rat> beta_coefficients(const InvariantProfile& p, long tau, long order = -1) {
    if (order < 0) order = default_series_order(p.params.n);
    TruncatedSeries zc = zeta_series(p, order);
    TruncatedSeries pc = zeta_polynomial(p, order);
    std::vector<Rat> b_ref, p_ref;
    Int q(p.params.q);
    for (long u = 0; u <= order; ++u) {
        b_ref.push_back(bmd_reference_b(tau, p.i, u, q, p.params.m));
        p_ref.push_back(bmd_reference_p(tau, p.i, u, q, p.params.m));
    }
    std::vector<Rat> via_p = detail::beta_bell_form(pc.coeffs(), p_ref, order);
    std::vector<Rat> via_b = detail::beta_bell_form(zc.coeffs(), b_ref, order);
    TruncatedSeries z_ref(order, b_ref);
    std::vector<Rat> via_division = (zc * series_reciprocal(z_ref)).coeffs();
    if (via_p != via_b || via_p != via_division)
        throw consistency_error("beta routes disagree (Bell vs series division)");
    // defining identities, mod T^{order+1}
    TruncatedSeries beta_series(order, via_p);
    if (!(z_ref * beta_series == zc))
        throw consistency_error("beta fails Z = Z_tau * sum beta T^u");
    if (!(TruncatedSeries(order, p_ref) * beta_series == pc))
        throw consistency_error("beta fails P = P_tau * sum beta T^u");
    return via_p;
}
inline std::vector<Rat> beta_coefficients(const RankMetricCode& c, long i, long tau,
                                          long order = -1, const Budget& budget = Budget{}) {
    return beta_coefficients(invariant_profile(c, i, budget), tau, order);
}

/// W^(i) = sum_{j=0}^{n-d_i} beta_{tau,j} M_{tau, d_i+j}; the expansion of
/// the enumerator over the reference basis.
inline HomogeneousPoly enumerator_from_beta(const InvariantProfile& p, long tau, long order = -1) {
    std::vector<Rat> beta = beta_coefficients(p, tau, order);
    Int q(p.params.q);
    HomogeneousPoly out(p.params.n);
    for (long j = 0; j + p.d_i <= p.params.n; ++j)
        out += beta[static_cast<size_t>(j)] *
               bmd_reference_enumerator(tau, p.d_i + j, p.i, q, p.params.m, p.params.n);
    return out;
}

struct ZetaProfile {
    long i = 0;
    long order = 0;
    TruncatedSeries Z{0};
    TruncatedSeries P{0};
    long degree_bound = 0;
    std::optional<long> tau;
    std::vector<Rat> beta;
};

inline ZetaProfile zeta_profile(const RankMetricCode& c, long i, long order = -1,
                                std::optional<long> tau = std::nullopt,
                                const Budget& budget = Budget{}) {
    if (order < 0) order = default_series_order(c.n());
    InvariantProfile p = invariant_profile(c, i, budget);
    ZetaProfile z;
    z.i = i;
    z.order = order;
    z.Z = zeta_series(p, order);
    z.P = zeta_polynomial(p, order);
    z.degree_bound = zeta_degree_bound(p);
    if (tau) {
        z.tau = tau;
        z.beta = beta_coefficients(p, *tau, order);
    }
    return z;
}

}  // namespace rankzeta
