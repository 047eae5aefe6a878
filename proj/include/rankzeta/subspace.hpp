#pragma once

#include <optional>

#include "rankzeta/errors.hpp"
#include "rankzeta/matrix.hpp"
#include "rankzeta/qbinomial.hpp"

namespace rankzeta {

/// Subspace of F_q^ambient, identified by its unique RREF basis. The
/// canonical representative makes subspaces usable as ordered map keys.
class Subspace {
public:
    static Subspace span_of(const FqMatrix& rows) { return Subspace(rref(rows).mat); }
    static Subspace zero(FieldPtr field, long ambient) {
        return Subspace(FqMatrix(std::move(field), 0, ambient));
    }
    static Subspace full(FieldPtr field, long ambient) {
        FqMatrix id(field, ambient, ambient);
        for (long i = 0; i < ambient; ++i) id.set(i, i, 1);
        return Subspace(std::move(id));
    }

    long dim() const { return basis_.rows(); }
    long ambient() const { return basis_.cols(); }
    const FqMatrix& basis() const { return basis_; }
    const FieldPtr& field() const { return basis_.field(); }

    /// Orthogonal complement under the standard dot product.
    Subspace complement() const { return Subspace(null_space(basis_)); }

    Subspace sum(const Subspace& o) const {
        if (ambient() != o.ambient()) throw std::invalid_argument("subspace ambient mismatch");
        return span_of(stack_rows(field(), ambient(), {basis_, o.basis_}));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.basis_.entries() < b.basis_.entries();
    }

private:
    explicit Subspace(FqMatrix canonical_basis) : basis_(std::move(canonical_basis)) {}
    friend class SubspaceStream;
    FqMatrix basis_;
};

/// Streams every u-dimensional subspace of F_q^ambient exactly once, in a
/// deterministic order: lexicographically over pivot-column sets, then over
/// the free entries (row-major, last position varying fastest). The total
/// count qbin(ambient, u, q) is checked against the cap up front.
class SubspaceStream {
public:
    SubspaceStream(FieldPtr field, long ambient, long u, unsigned long long cap = Budget{}.subspace_cap)
        : field_(std::move(field)), n_(ambient), u_(u) {
        if (u < 0 || u > ambient) throw std::invalid_argument("subspace dimension outside [0, ambient]");
        Int total = count(ambient, u, Int(field_->q()));
        if (total > int_from_ull(cap))
            throw budget_exceeded("subspace enumeration over budget", total.get_str());
        pivots_.resize(static_cast<size_t>(u));
        for (long i = 0; i < u; ++i) pivots_[static_cast<size_t>(i)] = i;
        pivots_valid_ = (u <= ambient);
        start_pivot_block();
    }

    static Int count(long ambient, long u, const Int& q) { return qbin_int(ambient, u, q); }

    std::optional<Subspace> next() {
        if (done_) return std::nullopt;
        FqMatrix basis(field_, u_, n_);
        for (long i = 0; i < u_; ++i) basis.set(i, pivots_[static_cast<size_t>(i)], 1);
        for (size_t t = 0; t < free_pos_.size(); ++t)
            basis.set(free_pos_[t].first, free_pos_[t].second, free_val_[t]);
        Subspace out(std::move(basis));  // already canonical by construction
        advance();
        return out;
    }

private:
    void start_pivot_block() {
        if (u_ == 0) { free_pos_.clear(); free_val_.clear(); done_ = false; return; }
        if (!pivots_valid_) { done_ = true; return; }
        free_pos_.clear();
        std::vector<bool> is_pivot(static_cast<size_t>(n_), false);
        for (long p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
        for (long i = 0; i < u_; ++i)
            for (long c = pivots_[static_cast<size_t>(i)] + 1; c < n_; ++c)
                if (!is_pivot[static_cast<size_t>(c)]) free_pos_.emplace_back(i, c);
        free_val_.assign(free_pos_.size(), 0);
        done_ = false;
    }

    void advance() {
        if (u_ == 0) { done_ = true; return; }
        // odometer over free entries, last varying fastest
        size_t t = free_val_.size();
        while (t > 0) {
            --t;
            if (free_val_[t] + 1u < field_->q()) {
                ++free_val_[t];
                std::fill(free_val_.begin() + static_cast<long>(t) + 1, free_val_.end(), 0);
                return;
            }
        }
        // next pivot combination in lexicographic order
        long i = u_ - 1;
        while (i >= 0 && pivots_[static_cast<size_t>(i)] == n_ - (u_ - i)) --i;
        if (i < 0) { done_ = true; return; }
        ++pivots_[static_cast<size_t>(i)];
        for (long j = i + 1; j < u_; ++j)
            pivots_[static_cast<size_t>(j)] = pivots_[static_cast<size_t>(j - 1)] + 1;
        start_pivot_block();
    }

    FieldPtr field_;
    long n_, u_;
    std::vector<long> pivots_;
    bool pivots_valid_ = true;
    std::vector<std::pair<long, long>> free_pos_;
    std::vector<Fe> free_val_;
    bool done_ = false;
};

template <class Fn>
void for_each_subspace(const FieldPtr& field, long ambient, long u, Fn&& fn,
                       unsigned long long cap = Budget{}.subspace_cap) {
    SubspaceStream stream(field, ambient, u, cap);
    while (auto s = stream.next()) fn(*s);
}

inline std::vector<Subspace> all_subspaces(const FieldPtr& field, long ambient, long u,
                                           unsigned long long cap = Budget{}.subspace_cap) {
    std::vector<Subspace> out;
    for_each_subspace(field, ambient, u, [&](const Subspace& s) { out.push_back(s); }, cap);
    return out;
}

}  // namespace rankzeta
