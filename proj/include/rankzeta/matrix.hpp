#pragma once

#include <span>
#include <sstream>
#include <vector>

#include "rankzeta/gf.hpp"

namespace rankzeta {

/// Dense matrix over F_q; entries are field element codes.
class FqMatrix {
public:
    FqMatrix(FieldPtr field, long rows, long cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }
    FqMatrix(FieldPtr field, long rows, long cols, std::vector<Fe> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
            throw std::invalid_argument("entry count does not match shape");
        for (Fe x : a_)
            if (x >= field_->q()) throw std::invalid_argument("entry outside field range");
    }

    const FieldPtr& field() const { return field_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Fe at(long i, long j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set(long i, long j, Fe v) { a_[static_cast<size_t>(i) * cols_ + j] = v; }
    const std::vector<Fe>& entries() const { return a_; }

    bool is_zero() const {
        for (Fe x : a_)
            if (x) return false;
        return true;
    }

    FqMatrix transposed() const {
        FqMatrix t(field_, cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
        return t;
    }

    /// Row-major flattening as a 1 x (rows*cols) matrix.
    FqMatrix flattened() const { return FqMatrix(field_, 1, rows_ * cols_, a_); }

    FqMatrix row(long i) const {
        FqMatrix r(field_, 1, cols_);
        for (long j = 0; j < cols_; ++j) r.set(0, j, at(i, j));
        return r;
    }

    void scale_row(long i, Fe s) {
        for (long j = 0; j < cols_; ++j) set(i, j, field_->mul(at(i, j), s));
    }
    // row i -= f * row r
    void subtract_scaled_row(long i, long r, Fe f) {
        if (f == 0) return;
        for (long j = 0; j < cols_; ++j)
            set(i, j, field_->sub(at(i, j), field_->mul(f, at(r, j))));
    }
    void swap_rows(long i, long j) {
        for (long c = 0; c < cols_; ++c) {
            Fe t = at(i, c);
            set(i, c, at(j, c));
            set(j, c, t);
        }
    }

    friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ &&
               a.field_->q() == b.field_->q();
    }

    std::string to_string() const {
        std::ostringstream os;
        for (long i = 0; i < rows_; ++i) {
            for (long j = 0; j < cols_; ++j) os << (j ? " " : "") << unsigned(at(i, j));
            os << "\n";
        }
        return os.str();
    }

private:
    FieldPtr field_;
    long rows_, cols_;
    std::vector<Fe> a_;
};

struct RrefResult {
    FqMatrix mat;               // canonical reduced row echelon form, zero rows dropped
    long rank;                  // = number of rows of mat
    std::vector<long> pivots;   // pivot column per row, strictly increasing
};

/// Canonical reduced row echelon form. Deterministic: pivot = first nonzero
/// entry scanning columns left to right, rows top to bottom.
inline RrefResult rref(FqMatrix m) {
    const FieldSpec& F = *m.field();
    long r = 0;
    std::vector<long> pivots;
    for (long c = 0; c < m.cols() && r < m.rows(); ++c) {
        long sel = -1;
        for (long i = r; i < m.rows(); ++i)
            if (m.at(i, c)) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r) m.swap_rows(sel, r);
        m.scale_row(r, F.inv(m.at(r, c)));
        for (long i = 0; i < m.rows(); ++i)
            if (i != r) m.subtract_scaled_row(i, r, m.at(i, c));
        pivots.push_back(c);
        ++r;
    }
    FqMatrix out(m.field(), r, m.cols());
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
    return RrefResult{std::move(out), r, std::move(pivots)};
}

/// Basis of {x : M x = 0} (x a column vector of length cols), returned as
/// rows in canonical RREF form. Empty M (zero rows) yields the identity.
inline FqMatrix null_space(const FqMatrix& m) {
    RrefResult rr = rref(m);
    long n = m.cols();
    long nullity = n - rr.rank;
    FqMatrix basis(m.field(), nullity, n);
    const FieldSpec& F = *m.field();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (long p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;
    long row = 0;
    for (long f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        basis.set(row, f, 1);
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            basis.set(row, rr.pivots[i], F.neg(rr.mat.at(static_cast<long>(i), f)));
        ++row;
    }
    return rref(std::move(basis)).mat;
}

/// Tr(M N^t) = sum_{i,j} M_ij N_ij; the bilinear form defining duality.
inline Fe trace_pairing(const FqMatrix& m, const FqMatrix& n) {
    if (m.rows() != n.rows() || m.cols() != n.cols())
        throw std::invalid_argument("trace pairing shape mismatch");
    const FieldSpec& F = *m.field();
    Fe acc = 0;
    for (size_t t = 0; t < m.entries().size(); ++t)
        acc = F.add(acc, F.mul(m.entries()[t], n.entries()[t]));
    return acc;
}

/// sum_g coeffs[g] * gens[g]; all generators share shape and field.
inline FqMatrix linear_combination(std::span<const FqMatrix> gens, std::span<const Fe> coeffs) {
    if (gens.empty()) throw std::invalid_argument("linear combination of no matrices");
    const FieldSpec& F = *gens[0].field();
    FqMatrix out(gens[0].field(), gens[0].rows(), gens[0].cols());
    for (size_t g = 0; g < gens.size(); ++g) {
        if (coeffs[g] == 0) continue;
        for (long i = 0; i < out.rows(); ++i)
            for (long j = 0; j < out.cols(); ++j)
                out.set(i, j, F.add(out.at(i, j), F.mul(coeffs[g], gens[g].at(i, j))));
    }
    return out;
}

inline FqMatrix stack_rows(FieldPtr field, long cols, const std::vector<FqMatrix>& parts) {
    long total = 0;
    for (const auto& p : parts) total += p.rows();
    FqMatrix out(field, total, cols);
    long r = 0;
    for (const auto& p : parts) {
        for (long i = 0; i < p.rows(); ++i, ++r)
            for (long j = 0; j < cols; ++j) out.set(r, j, p.at(i, j));
    }
    return out;
}

}  // namespace rankzeta
