#pragma once

#include <utility>

#include "rankzeta/errors.hpp"
#include "rankzeta/subspace.hpp"

namespace rankzeta {

struct CodeParams {
    unsigned q = 2;
    long n = 0, m = 0, k = 0;
};

/// F_q-linear subspace of n x m matrices, held by k independent generators
/// together with the canonical RREF basis of the flattened code. Codes with
/// n > m are transposed at construction (all invariants here assume n <= m)
/// and the transposition is recorded.
class RankMetricCode {
public:
    enum class DependentGenerators { Reject, Reduce };

    RankMetricCode(FieldPtr field, long n, long m, std::vector<FqMatrix> generators,
                   DependentGenerators policy = DependentGenerators::Reject)
        : field_(std::move(field)), n_(n), m_(m) {
        if (n < 1 || m < 1) throw std::invalid_argument("code ambient must have n, m >= 1");
        for (const auto& g : generators) {
            if (g.rows() != n || g.cols() != m)
                throw std::invalid_argument("generator shape mismatch");
            if (g.field()->q() != field_->q()) throw std::invalid_argument("generator field mismatch");
        }
        if (n_ > m_) {
            std::swap(n_, m_);
            for (auto& g : generators) g = g.transposed();
            transposed_ = true;
        }
        std::vector<FqMatrix> flats;
        flats.reserve(generators.size());
        for (const auto& g : generators) flats.push_back(g.flattened());
        RrefResult rr = rref(stack_rows(field_, n_ * m_, flats));
        if (policy == DependentGenerators::Reject &&
            rr.rank != static_cast<long>(generators.size()))
            throw std::invalid_argument("generators are linearly dependent");
        k_ = rr.rank;
        flat_ = std::make_shared<FqMatrix>(std::move(rr.mat));
        gens_ = std::move(generators);
    }

    static RankMetricCode zero(FieldPtr field, long n, long m) {
        return RankMetricCode(std::move(field), n, m, {});
    }
    static RankMetricCode full(FieldPtr field, long n, long m) {
        std::vector<FqMatrix> gens;
        gens.reserve(static_cast<size_t>(n) * m);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < m; ++j) {
                FqMatrix e(field, n, m);
                e.set(i, j, 1);
                gens.push_back(std::move(e));
            }
        return RankMetricCode(std::move(field), n, m, std::move(gens));
    }

    const FieldPtr& field() const { return field_; }
    long n() const { return n_; }
    long m() const { return m_; }
    long k() const { return k_; }
    bool was_transposed() const { return transposed_; }
    bool is_square() const { return n_ == m_; }
    CodeParams params() const { return CodeParams{field_->q(), n_, m_, k_}; }

    /// Canonical basis (rows of the flattened RREF, reshaped).
    std::vector<FqMatrix> basis_matrices() const {
        std::vector<FqMatrix> out;
        out.reserve(static_cast<size_t>(k_));
        for (long i = 0; i < k_; ++i) {
            FqMatrix mtx(field_, n_, m_);
            for (long r = 0; r < n_; ++r)
                for (long c = 0; c < m_; ++c) mtx.set(r, c, flat_->at(i, r * m_ + c));
            out.push_back(std::move(mtx));
        }
        return out;
    }

    const FqMatrix& flat_basis() const { return *flat_; }

    /// Trace-dual: {N : Tr(M N^t) = 0 for all M in C}. Tr(M N^t) is the
    /// entrywise dot product of the flattenings, so the dual's flat basis is
    /// the null space of the flat basis. dim = nm - k.
    RankMetricCode dual() const {
        FqMatrix dual_flat = null_space(*flat_);
        std::vector<FqMatrix> gens;
        gens.reserve(static_cast<size_t>(dual_flat.rows()));
        for (long i = 0; i < dual_flat.rows(); ++i) {
            FqMatrix mtx(field_, n_, m_);
            for (long r = 0; r < n_; ++r)
                for (long c = 0; c < m_; ++c) mtx.set(r, c, dual_flat.at(i, r * m_ + c));
            gens.push_back(std::move(mtx));
        }
        return RankMetricCode(field_, n_, m_, std::move(gens));
    }

    friend bool operator==(const RankMetricCode& a, const RankMetricCode& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && *a.flat_ == *b.flat_;
    }

private:
    FieldPtr field_;
    long n_, m_, k_ = 0;
    bool transposed_ = false;
    std::vector<FqMatrix> gens_;
    std::shared_ptr<const FqMatrix> flat_;
};

/// Visits all q^k codewords (including zero), coefficients in odometer order.
template <class Fn>
void for_each_codeword(const RankMetricCode& c, Fn&& fn,
                       unsigned long long cap = Budget{}.codeword_cap) {
    Int total = pow_int(Int(c.field()->q()), static_cast<unsigned long>(c.k()));
    if (total > int_from_ull(cap)) throw budget_exceeded("codeword enumeration over budget", total.get_str());
    auto basis = c.basis_matrices();
    std::vector<Fe> coeffs(static_cast<size_t>(c.k()), 0);
    while (true) {
        if (c.k() == 0) { fn(FqMatrix(c.field(), c.n(), c.m())); return; }
        fn(linear_combination(basis, coeffs));
        size_t t = coeffs.size();
        while (t > 0) {
            --t;
            if (coeffs[t] + 1u < c.field()->q()) {
                ++coeffs[t];
                std::fill(coeffs.begin() + static_cast<long>(t) + 1, coeffs.end(), 0);
                break;
            }
            if (t == 0) return;
        }
    }
}

/// Minimum rank over nonzero codewords; n+1 for the zero code by convention.
inline long min_distance(const RankMetricCode& c, unsigned long long cap = Budget{}.codeword_cap) {
    if (c.k() == 0) return c.n() + 1;
    long best = c.n() + 1;
    for_each_codeword(c, [&](const FqMatrix& w) {
        if (w.is_zero()) return;
        best = std::min(best, rref(w).rank);
    }, cap);
    return best;
}

/// Maximum rank over codewords; 0 for the zero code.
inline long max_rank(const RankMetricCode& c, unsigned long long cap = Budget{}.codeword_cap) {
    long best = 0;
    for_each_codeword(c, [&](const FqMatrix& w) { best = std::max(best, rref(w).rank); }, cap);
    return best;
}

namespace detail {

// Linear conditions cutting out C(U) (or C[U]) inside the coefficient space
// F_q^k: one row per (complement basis vector, matrix column/row).
inline FqMatrix support_conditions(const RankMetricCode& c, const Subspace& u, bool column_type) {
    long ambient = column_type ? c.n() : c.m();
    if (u.ambient() != ambient)
        throw std::invalid_argument("support subspace has wrong ambient dimension");
    const FieldSpec& F = *c.field();
    Subspace perp = u.complement();
    auto basis = c.basis_matrices();
    long cond_per_h = column_type ? c.m() : c.n();
    FqMatrix sys(c.field(), perp.dim() * cond_per_h, c.k());
    for (long h = 0; h < perp.dim(); ++h) {
        for (long t = 0; t < cond_per_h; ++t) {
            for (long g = 0; g < c.k(); ++g) {
                Fe acc = 0;
                if (column_type) {
                    // (h^T G)_t with h in F_q^n
                    for (long i = 0; i < c.n(); ++i)
                        acc = F.add(acc, F.mul(perp.basis().at(h, i), basis[static_cast<size_t>(g)].at(i, t)));
                } else {
                    // (G h)_t with h in F_q^m
                    for (long j = 0; j < c.m(); ++j)
                        acc = F.add(acc, F.mul(basis[static_cast<size_t>(g)].at(t, j), perp.basis().at(h, j)));
                }
                sys.set(h * cond_per_h + t, g, acc);
            }
        }
    }
    return sys;
}

inline RankMetricCode supported_subcode(const RankMetricCode& c, const Subspace& u, bool column_type) {
    FqMatrix sol = null_space(support_conditions(c, u, column_type));
    auto basis = c.basis_matrices();
    std::vector<FqMatrix> gens;
    gens.reserve(static_cast<size_t>(sol.rows()));
    for (long i = 0; i < sol.rows(); ++i) {
        std::vector<Fe> coeffs(static_cast<size_t>(c.k()));
        for (long g = 0; g < c.k(); ++g) coeffs[static_cast<size_t>(g)] = sol.at(i, g);
        gens.push_back(c.k() ? linear_combination(basis, coeffs) : FqMatrix(c.field(), c.n(), c.m()));
    }
    return RankMetricCode(c.field(), c.n(), c.m(), std::move(gens));
}

}  // namespace detail

/// C(U) = {M in C : colsp(M) <= U}, U <= F_q^n, by linear solving (never by
/// codeword enumeration; anticodes have q^{mu} elements).
inline RankMetricCode supported_subcode_col(const RankMetricCode& c, const Subspace& u) {
    return detail::supported_subcode(c, u, true);
}
/// C[U] = {M in C : rowsp(M) <= U}, U <= F_q^m.
inline RankMetricCode supported_subcode_row(const RankMetricCode& c, const Subspace& u) {
    return detail::supported_subcode(c, u, false);
}

inline long dim_supported_col(const RankMetricCode& c, const Subspace& u) {
    if (c.k() == 0) return 0;
    return c.k() - rref(detail::support_conditions(c, u, true)).rank;
}
inline long dim_supported_row(const RankMetricCode& c, const Subspace& u) {
    if (c.k() == 0) return 0;
    return c.k() - rref(detail::support_conditions(c, u, false)).rank;
}

/// (column support, row support) = (sum of colsp(M), sum of rowsp(M)) over
/// the code, computed from generators.
inline std::pair<Subspace, Subspace> code_supports(const RankMetricCode& c) {
    auto basis = c.basis_matrices();
    FqMatrix cols(c.field(), c.k() * c.m(), c.n());
    FqMatrix rows(c.field(), c.k() * c.n(), c.m());
    for (long g = 0; g < c.k(); ++g) {
        const FqMatrix& G = basis[static_cast<size_t>(g)];
        for (long j = 0; j < c.m(); ++j)
            for (long i = 0; i < c.n(); ++i) cols.set(g * c.m() + j, i, G.at(i, j));
        for (long i = 0; i < c.n(); ++i)
            for (long j = 0; j < c.m(); ++j) rows.set(g * c.n() + i, j, G.at(i, j));
    }
    return {Subspace::span_of(cols), Subspace::span_of(rows)};
}

/// Optimal anticodes of dimension m*u in F_q^{n x m}: the column-supported
/// spaces F^{n x m}(U) for every u-dimensional U (all of them when n < m),
/// plus the row-supported spaces F^{n x m}[U] when n = m. For n = m the two
/// families coincide exactly at u = 0 and u = n, where one descriptor is
/// emitted. Order: all column descriptors, then all row descriptors.
struct AnticodeDescriptor {
    enum class Type { Column, Row };
    Type type;
    Subspace support;
};

inline std::vector<AnticodeDescriptor> optimal_anticodes(const FieldPtr& field, long n, long m,
                                                         long u,
                                                         unsigned long long cap = Budget{}.subspace_cap) {
    if (u < 0 || u > n) throw std::invalid_argument("anticode parameter outside [0, n]");
    std::vector<AnticodeDescriptor> out;
    for_each_subspace(field, n, u,
                      [&](const Subspace& s) { out.push_back({AnticodeDescriptor::Type::Column, s}); },
                      cap);
    if (n == m && u > 0 && u < n) {
        for_each_subspace(field, n, u,
                          [&](const Subspace& s) { out.push_back({AnticodeDescriptor::Type::Row, s}); },
                          cap);
    }
    return out;
}

inline long anticode_intersection_dim(const RankMetricCode& c, const AnticodeDescriptor& a) {
    return a.type == AnticodeDescriptor::Type::Column ? dim_supported_col(c, a.support)
                                                      : dim_supported_row(c, a.support);
}

/// For each u: the largest dim(C ∩ A) over optimal anticodes A of dimension
/// m*u. Nondecreasing in u; reaches k at u = n.
inline std::vector<long> max_intersection_profile(const RankMetricCode& c,
                                                  unsigned long long cap = Budget{}.subspace_cap) {
    std::vector<long> best(static_cast<size_t>(c.n()) + 1, 0);
    for (long u = 0; u <= c.n(); ++u) {
        long mx = 0;
        for_each_subspace(c.field(), c.n(), u, [&](const Subspace& s) {
            mx = std::max(mx, dim_supported_col(c, s));
            if (c.is_square()) mx = std::max(mx, dim_supported_row(c, s));
        }, cap);
        best[static_cast<size_t>(u)] = mx;
    }
    return best;
}

/// Generalized rank weights d_0..d_k; d_0 = 0 and, for i >= 1,
/// d_i = min{u : some optimal anticode A of dimension m*u has dim(C ∩ A) >= i}.
inline std::vector<long> generalized_weights(const RankMetricCode& c,
                                             unsigned long long cap = Budget{}.subspace_cap) {
    std::vector<long> best = max_intersection_profile(c, cap);
    std::vector<long> d(static_cast<size_t>(c.k()) + 1, 0);
    for (long i = 1; i <= c.k(); ++i) {
        long u = 0;
        while (best[static_cast<size_t>(u)] < i) ++u;
        d[static_cast<size_t>(i)] = u;
    }
    return d;
}

}  // namespace rankzeta
