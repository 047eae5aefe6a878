#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rankzeta {

using Fe = std::uint8_t;  // field element code, 0..q-1

/// F_q for a prime power q <= 256, with table-driven arithmetic. Elements of
/// F_{p^e} are encoded 0..q-1 as base-p digit expansions of their polynomial
/// coordinates (code = sum c_i p^i for the coefficient c_i of x^i); the
/// modulus polynomial is the lexicographically smallest monic irreducible of
/// degree e over F_p, recorded for reproducibility.
class FieldSpec {
public:
    static std::shared_ptr<const FieldSpec> make(unsigned q) {
        return std::shared_ptr<const FieldSpec>(new FieldSpec(q));
    }

    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned extension_degree() const { return e_; }
    /// Modulus coefficients c_0..c_e (c_e = 1); {c_0, 1} for prime fields.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Fe add(Fe a, Fe b) const { return add_[idx(a, b)]; }
    Fe sub(Fe a, Fe b) const { return add_[idx(a, neg_[b])]; }
    Fe mul(Fe a, Fe b) const { return mul_[idx(a, b)]; }
    Fe neg(Fe a) const { return neg_[a]; }
    Fe inv(Fe a) const {
        if (a == 0) throw std::domain_error("inverse of zero field element");
        return inv_[a];
    }

private:
    explicit FieldSpec(unsigned q) : q_(q) {
        if (q < 2 || q > 256) throw std::invalid_argument("field size must be in [2, 256]");
        factor_prime_power();
        if (e_ == 1) {
            modulus_ = {0, 1};  // placeholder x - 0; unused for prime fields
            build_prime_tables();
        } else {
            modulus_ = smallest_irreducible();
            build_extension_tables();
        }
        check_axioms();
    }

    void factor_prime_power() {
        unsigned n = q_;
        unsigned p = 2;
        while (p * p <= n && n % p != 0) ++p;
        if (n % p != 0) p = n;  // q prime
        unsigned e = 0, m = q_;
        while (m % p == 0) { m /= p; ++e; }
        if (m != 1) throw std::invalid_argument("field size is not a prime power");
        p_ = p;
        e_ = e;
    }

    size_t idx(Fe a, Fe b) const { return static_cast<size_t>(a) * q_ + b; }

    void build_prime_tables() {
        add_.resize(static_cast<size_t>(q_) * q_);
        mul_.resize(static_cast<size_t>(q_) * q_);
        neg_.resize(q_);
        inv_.resize(q_);
        for (unsigned a = 0; a < q_; ++a) {
            neg_[a] = static_cast<Fe>((q_ - a) % q_);
            for (unsigned b = 0; b < q_; ++b) {
                add_[idx(a, b)] = static_cast<Fe>((a + b) % q_);
                mul_[idx(a, b)] = static_cast<Fe>((a * b) % q_);
            }
        }
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                if (mul_[idx(a, b)] == 1) inv_[a] = static_cast<Fe>(b);
    }

    // ---- extension-field construction over F_p[x]/(modulus) ----

    using Poly = std::vector<unsigned>;  // coefficients over F_p, low degree first

    static Poly trim(Poly f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
        return f;
    }

    Poly poly_mod(Poly a, const Poly& f) const {
        a = trim(std::move(a));
        Poly g = trim(f);
        while (a.size() >= g.size() && !a.empty()) {
            unsigned lead = a.back();  // g monic
            size_t shift = a.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i) {
                unsigned sub = (lead * g[i]) % p_;
                a[i + shift] = (a[i + shift] + p_ - sub) % p_;
            }
            a = trim(std::move(a));
        }
        return a;
    }

    Poly poly_mul(const Poly& a, const Poly& b) const {
        if (a.empty() || b.empty()) return {};
        Poly c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        return c;
    }

    bool divides(const Poly& g, const Poly& f) const { return poly_mod(f, g).empty(); }

    Poly smallest_irreducible() const {
        // monic degree-e candidates in lexicographic order on (c_0, ..., c_{e-1})
        std::vector<unsigned> digits(e_, 0);
        while (true) {
            Poly f(digits.begin(), digits.end());
            f.push_back(1);
            bool irreducible = true;
            // trial division by every monic polynomial of degree 1..e/2
            for (unsigned d = 1; irreducible && 2 * d <= e_; ++d) {
                std::vector<unsigned> gd(d, 0);
                while (true) {
                    Poly g(gd.begin(), gd.end());
                    g.push_back(1);
                    if (divides(g, f)) { irreducible = false; break; }
                    size_t pos = 0;
                    while (pos < gd.size() && gd[pos] + 1 == p_) gd[pos++] = 0;
                    if (pos == gd.size()) break;
                    ++gd[pos];
                }
            }
            if (irreducible) return f;
            size_t pos = 0;
            while (pos < digits.size() && digits[pos] + 1 == p_) digits[pos++] = 0;
            if (pos == digits.size()) throw std::logic_error("no irreducible polynomial found");
            ++digits[pos];
        }
    }

    Poly decode(unsigned code) const {
        Poly f;
        while (code) { f.push_back(code % p_); code /= p_; }
        return f;
    }

    unsigned encode(const Poly& f) const {
        unsigned code = 0, base = 1;
        for (unsigned c : f) { code += c * base; base *= p_; }
        return code;
    }

    void build_extension_tables() {
        add_.resize(static_cast<size_t>(q_) * q_);
        mul_.resize(static_cast<size_t>(q_) * q_);
        neg_.resize(q_);
        inv_.resize(q_);
        for (unsigned a = 0; a < q_; ++a) {
            Poly fa = decode(a);
            Poly na(fa.size());
            for (size_t i = 0; i < fa.size(); ++i) na[i] = (p_ - fa[i]) % p_;
            neg_[a] = static_cast<Fe>(encode(trim(na)));
            for (unsigned b = 0; b < q_; ++b) {
                Poly fb = decode(b);
                Poly s(std::max(fa.size(), fb.size()), 0);
                for (size_t i = 0; i < s.size(); ++i) {
                    unsigned x = i < fa.size() ? fa[i] : 0;
                    unsigned y = i < fb.size() ? fb[i] : 0;
                    s[i] = (x + y) % p_;
                }
                add_[idx(a, b)] = static_cast<Fe>(encode(trim(s)));
                mul_[idx(a, b)] = static_cast<Fe>(encode(poly_mod(poly_mul(fa, fb), modulus_)));
            }
        }
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                if (mul_[idx(a, b)] == 1) inv_[a] = static_cast<Fe>(b);
    }

    void check_axioms() const {
        for (unsigned a = 0; a < q_; ++a) {
            if (add_[idx(a, 0)] != a || mul_[idx(a, 1)] != a)
                throw std::logic_error("field table identity check failed");
            if (add_[idx(a, neg_[a])] != 0) throw std::logic_error("field table negation check failed");
            if (a != 0 && mul_[idx(a, inv_[a])] != 1)
                throw std::logic_error("field table inversion check failed");
            for (unsigned b = 0; b < q_; ++b) {
                if (add_[idx(a, b)] != add_[idx(b, a)] || mul_[idx(a, b)] != mul_[idx(b, a)])
                    throw std::logic_error("field table commutativity check failed");
            }
        }
        // full associativity/distributivity sweep for small q only (O(q^3))
        if (q_ <= 16) {
            for (unsigned a = 0; a < q_; ++a)
                for (unsigned b = 0; b < q_; ++b)
                    for (unsigned c = 0; c < q_; ++c) {
                        Fe ab_c = mul_[idx(mul_[idx(a, b)], c)];
                        Fe a_bc = mul_[idx(a, mul_[idx(b, c)])];
                        if (ab_c != a_bc) throw std::logic_error("field table associativity check failed");
                        Fe lhs = mul_[idx(a, add_[idx(b, c)])];
                        Fe rhs = add_[idx(mul_[idx(a, b)], mul_[idx(a, c)])];
                        if (lhs != rhs) throw std::logic_error("field table distributivity check failed");
                    }
        }
    }

    unsigned q_ = 0, p_ = 0, e_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<Fe> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

}  // namespace rankzeta
