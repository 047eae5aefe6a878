#pragma once

#include <algorithm>
#include <sstream>
#include <vector>

#include "rankzeta/qbinomial.hpp"
#include "rankzeta/rational.hpp"

namespace rankzeta {

/// Homogeneous polynomial of fixed degree n in X, Y, stored as the
/// coefficients c_0..c_n of X^{n-w} Y^w.
class HomogeneousPoly {
public:
    explicit HomogeneousPoly(long degree) : coeffs_(static_cast<size_t>(degree) + 1, Rat(0)) {
        if (degree < 0) throw std::invalid_argument("negative polynomial degree");
    }
    HomogeneousPoly(long degree, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (degree < 0 || coeffs_.size() != static_cast<size_t>(degree) + 1)
            throw std::invalid_argument("coefficient count must be degree+1");
    }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& operator[](long w) const { return coeffs_.at(static_cast<size_t>(w)); }
    Rat& operator[](long w) { return coeffs_.at(static_cast<size_t>(w)); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    HomogeneousPoly& operator+=(const HomogeneousPoly& o) {
        require_same_degree(o);
        for (size_t w = 0; w < coeffs_.size(); ++w) coeffs_[w] += o.coeffs_[w];
        return *this;
    }
    friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
    friend HomogeneousPoly operator*(const Rat& s, HomogeneousPoly p) {
        for (auto& c : p.coeffs_) c *= s;
        return p;
    }
    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Rendering in X,Y notation, e.g. "13XY^2 + 638Y^3".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        long n = degree();
        for (long w = 0; w <= n; ++w) {
            const Rat& c = coeffs_[static_cast<size_t>(w)];
            if (c == 0) continue;
            Rat abs = c < 0 ? Rat(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (!(abs == 1 && n > 0)) os << rat_to_string(abs);
            long xe = n - w;
            if (xe > 0) os << "X" << (xe > 1 ? "^" + std::to_string(xe) : "");
            if (w > 0) os << "Y" << (w > 1 ? "^" + std::to_string(w) : "");
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void require_same_degree(const HomogeneousPoly& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("homogeneous degree mismatch");
    }
    std::vector<Rat> coeffs_;
};

/// Power series in T truncated at T^order (inclusive); arithmetic is exact
/// modulo T^{order+1}. Operations deliberately refuse to mix orders:
/// silent truncation mismatches are the dominant bug class here.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long order) : coeffs_(static_cast<size_t>(order) + 1, Rat(0)) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }
    TruncatedSeries(long order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (order < 0 || coeffs_.size() != static_cast<size_t>(order) + 1)
            throw std::invalid_argument("coefficient count must be order+1");
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& operator[](long u) const { return coeffs_.at(static_cast<size_t>(u)); }
    Rat& operator[](long u) { return coeffs_.at(static_cast<size_t>(u)); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(long new_order) const {
        TruncatedSeries out(new_order);
        long upto = std::min(new_order, order());
        for (long u = 0; u <= upto; ++u) out[u] = (*this)[u];
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_order(o);
        for (size_t u = 0; u < coeffs_.size(); ++u) coeffs_[u] += o.coeffs_[u];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_order(o);
        for (size_t u = 0; u < coeffs_.size(); ++u) coeffs_[u] -= o.coeffs_[u];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries out(a.order());
        for (long u = 0; u <= a.order(); ++u) {
            if (a[u] == 0) continue;
            for (long v = 0; u + v <= a.order(); ++v) {
                if (b[v] == 0) continue;
                out[u + v] += a[u] * b[v];
            }
        }
        return out;
    }
    friend TruncatedSeries operator*(const Rat& s, TruncatedSeries a) {
        for (auto& c : a.coeffs_) c *= s;
        return a;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    bool is_polynomial_of_degree_at_most(long d) const {
        for (long u = std::max(d + 1, 0L); u <= order(); ++u)
            if ((*this)[u] != 0) return false;
        return true;
    }

    /// Largest u <= order with nonzero coefficient, or -1 for the zero series.
    long top_degree() const {
        for (long u = order(); u >= 0; --u)
            if ((*this)[u] != 0) return u;
        return -1;
    }

private:
    void require_same_order(const TruncatedSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("series order mismatch; re-truncate explicitly");
    }
    std::vector<Rat> coeffs_;
};

/// Reciprocal mod T^{order+1} by long division. The constant term must be
/// nonzero. The Bell-polynomial route computing the same coefficients lives
/// in bell.hpp; their agreement is a library-level invariant under test.
inline TruncatedSeries series_reciprocal(const TruncatedSeries& q) {
    if (q[0] == 0) throw std::invalid_argument("reciprocal of series with zero constant term");
    TruncatedSeries y(q.order());
    Rat inv0 = make_rat(q[0].get_den(), q[0].get_num());
    y[0] = inv0;
    for (long n = 1; n <= q.order(); ++n) {
        Rat acc(0);
        for (long j = 1; j <= n; ++j) acc += q[j] * y[n - j];
        y[n] = -inv0 * acc;
    }
    return y;
}

/// (n,u)-th q-ary Bernstein basis polynomial
///   qbin(n,u) Y^u prod_{j=0}^{n-u-1} (X - q^j Y),
/// homogeneous of degree n with integer coefficients.
inline HomogeneousPoly bernstein(long n, long u, const Int& q) {
    if (u < 0 || u > n) throw std::out_of_range("bernstein index outside [0, n]");
    std::vector<Rat> prod{Rat(1)};  // degree-0 seed
    for (long j = 0; j < n - u; ++j) {
        std::vector<Rat> next(prod.size() + 1, Rat(0));
        Rat qj(pow_int(q, static_cast<unsigned long>(j)));
        for (size_t w = 0; w < prod.size(); ++w) {
            next[w] += prod[w];
            next[w + 1] -= qj * prod[w];
        }
        prod = std::move(next);
    }
    HomogeneousPoly out(n);
    Rat scale = qbin(n, u, q);
    for (size_t w = 0; w < prod.size(); ++w) out[static_cast<long>(w) + u] = scale * prod[w];
    return out;
}

/// Coefficients lambda_t..lambda_n expanding the monomial X^{n-t} Y^t over
/// the Bernstein basis: X^{n-t}Y^t = sum_{u=t}^{n} lambda_u B_{n,u};
/// lambda_u = qbin(n,t)^{-1} qbin(u,t).
inline std::vector<Rat> monomial_in_bernstein_basis(long n, long t, const Int& q) {
    if (t < 0 || t > n) throw std::out_of_range("monomial index outside [0, n]");
    Rat lead = qbin(n, t, q);
    Rat inv = make_rat(lead.get_den(), lead.get_num());
    std::vector<Rat> lambda;
    lambda.reserve(static_cast<size_t>(n - t) + 1);
    for (long u = t; u <= n; ++u) lambda.push_back(inv * qbin(u, t, q));
    return lambda;
}

/// Rank of a rational matrix by fraction-exact Gaussian elimination.
inline long rational_matrix_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = make_rat(m[r][c].get_den(), m[r][c].get_num());
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<long>(r);
}

}  // namespace rankzeta
