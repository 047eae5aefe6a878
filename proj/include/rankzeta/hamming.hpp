#pragma once

#include <optional>

#include "rankzeta/errors.hpp"
#include "rankzeta/matrix.hpp"
#include "rankzeta/poly.hpp"
#include "rankzeta/subspace.hpp"

namespace rankzeta::hamming {

/// Whether the anticode characterization of generalized weights backing the
/// support-based computation is available at this field size (q >= 3). For
/// q = 2 the Wei-support values are still computed; callers should surface
/// this flag next to them.
inline bool anticode_characterization_applies(unsigned q) { return q >= 3; }

/// Linear [n, k] block code over F_q given by k independent generator rows.
class BlockCode {
public:
    BlockCode(FieldPtr field, long n, std::vector<std::vector<Fe>> generators)
        : field_(std::move(field)), n_(n) {
        if (n < 1) throw std::invalid_argument("block length must be >= 1");
        FqMatrix g(field_, static_cast<long>(generators.size()), n);
        for (size_t i = 0; i < generators.size(); ++i) {
            if (static_cast<long>(generators[i].size()) != n)
                throw std::invalid_argument("generator length mismatch");
            for (long j = 0; j < n; ++j) g.set(static_cast<long>(i), j, generators[i][j]);
        }
        RrefResult rr = rref(g);
        if (rr.rank != static_cast<long>(generators.size()))
            throw std::invalid_argument("generators are linearly dependent");
        gen_ = std::make_shared<FqMatrix>(std::move(rr.mat));
        k_ = rr.rank;
    }

    const FieldPtr& field() const { return field_; }
    long n() const { return n_; }
    long k() const { return k_; }
    const FqMatrix& generator() const { return *gen_; }

    BlockCode dual() const {
        FqMatrix ns = null_space(*gen_);
        std::vector<std::vector<Fe>> rows;
        for (long i = 0; i < ns.rows(); ++i) {
            std::vector<Fe> r(static_cast<size_t>(n_));
            for (long j = 0; j < n_; ++j) r[static_cast<size_t>(j)] = ns.at(i, j);
            rows.push_back(std::move(r));
        }
        return BlockCode(field_, n_, std::move(rows));
    }

private:
    FieldPtr field_;
    long n_, k_ = 0;
    std::shared_ptr<const FqMatrix> gen_;
};

namespace detail {

// visit each i-dim subcode as its k-coordinate RREF coefficient basis
template <class Fn>
void for_each_subcode(const BlockCode& c, long i, Fn&& fn, unsigned long long cap) {
    Int total = SubspaceStream::count(c.k(), i, Int(c.field()->q()));
    if (total > int_from_ull(cap)) throw budget_exceeded("subcode enumeration over budget", total.get_str());
    for_each_subspace(c.field(), c.k(), i, std::forward<Fn>(fn), cap);
}

// |supp(D)| for the subcode spanned by coeff-rows * generator
inline long subcode_support_size(const BlockCode& c, const Subspace& coeffs) {
    const FieldSpec& F = *c.field();
    long size = 0;
    for (long j = 0; j < c.n(); ++j) {
        bool hit = false;
        for (long r = 0; r < coeffs.dim() && !hit; ++r) {
            Fe acc = 0;
            for (long g = 0; g < c.k(); ++g)
                acc = F.add(acc, F.mul(coeffs.basis().at(r, g), c.generator().at(g, j)));
            hit = acc != 0;
        }
        if (hit) ++size;
    }
    return size;
}

}  // namespace detail

/// Generalized Hamming weights d_0..d_k: d_i = min |supp(D)| over i-dim
/// subcodes D <= C (the support/Wei form; equivalent to the minimum anticode
/// dimension for q >= 3). Strictly increasing with d_k <= n.
inline std::vector<long> generalized_hamming_weights(const BlockCode& c,
                                                     unsigned long long cap = Budget{}.subcode_cap) {
    std::vector<long> d(static_cast<size_t>(c.k()) + 1, 0);
    for (long i = 1; i <= c.k(); ++i) {
        long best = c.n();
        detail::for_each_subcode(c, i, [&](const Subspace& s) {
            best = std::min(best, detail::subcode_support_size(c, s));
        }, cap);
        d[static_cast<size_t>(i)] = best;
    }
    return d;
}

/// Minimum Hamming distance; n+1 for the zero code. Scans the 1-dimensional
/// subcodes only (one projective point per nonzero codeword direction).
inline long min_distance(const BlockCode& c, unsigned long long cap = Budget{}.subcode_cap) {
    if (c.k() == 0) return c.n() + 1;
    long best = c.n();
    detail::for_each_subcode(c, 1, [&](const Subspace& s) {
        best = std::min(best, detail::subcode_support_size(c, s));
    }, cap);
    return best;
}

/// dim C(S) for S a coordinate subset: codewords supported inside S.
inline long dim_supported(const BlockCode& c, const std::vector<bool>& in_s) {
    long rows = 0;
    for (long j = 0; j < c.n(); ++j)
        if (!in_s[static_cast<size_t>(j)]) ++rows;
    FqMatrix sys(c.field(), rows, c.k());
    long r = 0;
    for (long j = 0; j < c.n(); ++j) {
        if (in_s[static_cast<size_t>(j)]) continue;
        for (long g = 0; g < c.k(); ++g) sys.set(r, g, c.generator().at(g, j));
        ++r;
    }
    return c.k() - rref(std::move(sys)).rank;
}

/// Binomial moments over the subset lattice: B_u^(i) = sum_{|S|=u}
/// qbin(dim C(S), i). Ordinary subsets, q-binomial counting of subcodes.
inline std::vector<Rat> binomial_moments(const BlockCode& c, long i) {
    Int q(c.field()->q());
    std::vector<Rat> B(static_cast<size_t>(c.n()) + 1, Rat(0));
    std::vector<bool> in_s(static_cast<size_t>(c.n()), false);
    // iterate subsets as bitmasks; n is small in every supported use
    if (c.n() > 24) throw budget_exceeded("subset enumeration over budget", std::to_string(c.n()));
    for (unsigned long mask = 0; mask < (1UL << c.n()); ++mask) {
        long u = 0;
        for (long j = 0; j < c.n(); ++j) {
            in_s[static_cast<size_t>(j)] = (mask >> j) & 1UL;
            u += in_s[static_cast<size_t>(j)] ? 1 : 0;
        }
        B[static_cast<size_t>(u)] += qbin(dim_supported(c, in_s), i, q);
    }
    return B;
}

/// A from B on the Boolean lattice: A_w = sum_u (-1)^{w-u} binom(n-u, w-u) B_u.
inline std::vector<Rat> distribution_from_moments(long n, const std::vector<Rat>& B) {
    std::vector<Rat> A(static_cast<size_t>(n) + 1, Rat(0));
    for (long w = 0; w <= n; ++w)
        for (long u = 0; u <= w; ++u) {
            Rat sign = ((w - u) % 2 == 0) ? Rat(1) : Rat(-1);
            A[static_cast<size_t>(w)] += sign * Rat(binom(n - u, w - u)) * B[static_cast<size_t>(u)];
        }
    return A;
}

/// Direct distribution: count i-dim subcodes by support size.
inline std::vector<Rat> weight_distribution(const BlockCode& c, long i,
                                            unsigned long long cap = Budget{}.subcode_cap) {
    std::vector<Rat> A(static_cast<size_t>(c.n()) + 1, Rat(0));
    detail::for_each_subcode(c, i, [&](const Subspace& s) {
        A[static_cast<size_t>(detail::subcode_support_size(c, s))] += 1;
    }, cap);
    return A;
}

/// n - d(dual) - d_i < 0.
inline bool is_ibmd(const BlockCode& c, long i, unsigned long long cap = Budget{}.subcode_cap) {
    long di;
    if (c.k() == 0 && i >= 1)
        di = c.n() + 1;
    else
        di = generalized_hamming_weights(c, cap).at(static_cast<size_t>(i));
    BlockCode dual = c.dual();
    long d_dual = min_distance(dual, cap);
    return c.n() - d_dual - di < 0;
}

inline std::optional<long> minimal_ibmd_index(const BlockCode& c,
                                              unsigned long long cap = Budget{}.subcode_cap) {
    for (long i = 1; i <= std::max(c.k(), 1L); ++i)
        if (is_ibmd(c, i, cap)) return i;
    return std::nullopt;
}

/// Closed form (minimally i-BMD codes, j >= i): b_u^(j) = qbin(k-n+u+d_j, j)
/// for u >= 0, zero below. Throws unless the certification holds.
inline Rat closed_form_b(const BlockCode& c, long certified_min_i, long j, long u,
                         unsigned long long cap = Budget{}.subcode_cap) {
    if (minimal_ibmd_index(c, cap) != std::optional<long>(certified_min_i) || j < certified_min_i)
        throw std::invalid_argument("closed form requires a minimally i-BMD code and j >= i");
    if (u < 0) return Rat(0);
    auto d = generalized_hamming_weights(c, cap);
    return qbin(c.k() - c.n() + u + d.at(static_cast<size_t>(j)), j, Int(c.field()->q()));
}

/// Closed form (2): A_w^(j) = binom(n,w) sum_{u=d_j}^{w} (-1)^{w-u} binom(w,u)
/// qbin(k-n+u, j). Ordinary binomials outside, q-binomial inside, exactly as
/// printed.
inline Rat closed_form_A(const BlockCode& c, long certified_min_i, long j, long w,
                         unsigned long long cap = Budget{}.subcode_cap) {
    if (minimal_ibmd_index(c, cap) != std::optional<long>(certified_min_i) || j < certified_min_i)
        throw std::invalid_argument("closed form requires a minimally i-BMD code and j >= i");
    auto d = generalized_hamming_weights(c, cap);
    long dj = d.at(static_cast<size_t>(j));
    Int q(c.field()->q());
    Rat acc(0);
    for (long u = dj; u <= w; ++u) {
        Rat sign = ((w - u) % 2 == 0) ? Rat(1) : Rat(-1);
        acc += sign * Rat(binom(w, u)) * qbin(c.k() - c.n() + u, j, q);
    }
    return Rat(binom(c.n(), w)) * acc;
}

/// The i-BMD <=> i-MDS equivalence, exposed as a checkable predicate: both
/// sides are evaluated and the biconditional returned. A theorem, so the
/// test suite certifies it is always true.
inline bool ibmd_iff_imds_check(const BlockCode& c, long i,
                                unsigned long long cap = Budget{}.subcode_cap) {
    auto d = generalized_hamming_weights(c, cap);
    bool imds = d.at(static_cast<size_t>(i)) == c.n() - c.k() + i;
    return is_ibmd(c, i, cap) == imds;
}

}  // namespace rankzeta::hamming
