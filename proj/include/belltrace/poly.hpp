#pragma once

// Dense univariate polynomials over an arbitrary coefficient ring R.
// Nested instantiations (Poly<Poly<Mod>> etc.) give multivariate arithmetic.
//
// Coefficient rings plug in through free functions found by ADL:
//   ring_zero(e), ring_one(e), ring_from(e, v), ring_inv(e), is_zero(e), ring_str(e)
// Elements carry any runtime context they need (modulus, field), so generic
// code below never fabricates a constant out of thin air: the zero polynomial
// is the empty coefficient vector and every other value is derived from
// operands.

#include "belltrace/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace belltrace {

template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
    // c * t^k
    static Poly monomial(R c, std::size_t k) {
        std::vector<R> v;
        if (!is_zero(c)) {
            v.reserve(k + 1);
            for (std::size_t i = 0; i < k; ++i) v.push_back(ring_zero(c));
            v.push_back(std::move(c));
        }
        return Poly(std::move(v));
    }

    bool zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](std::size_t i) const { return c_[i]; }
    const R& leading() const { return c_.back(); }
    R coeff_or(std::size_t i, const R& zero) const { return i < c_.size() ? c_[i] : zero; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.zero()) return b;
        if (b.zero()) return a;
        std::vector<R> r;
        r.reserve(std::max(a.c_.size(), b.c_.size()));
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.c_[i] + b.c_[i]);
        for (std::size_t i = n; i < a.c_.size(); ++i) r.push_back(a.c_[i]);
        for (std::size_t i = n; i < b.c_.size(); ++i) r.push_back(b.c_[i]);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        if (b.zero()) return a;
        std::vector<R> r;
        r.reserve(std::max(a.c_.size(), b.c_.size()));
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.c_[i] - b.c_[i]);
        for (std::size_t i = n; i < a.c_.size(); ++i) r.push_back(a.c_[i]);
        for (std::size_t i = n; i < b.c_.size(); ++i) r.push_back(ring_zero(b.c_[i]) - b.c_[i]);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<R> r;
        r.reserve(a.c_.size());
        for (const R& x : a.c_) r.push_back(ring_zero(x) - x);
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        std::vector<R> r;
        r.reserve(a.c_.size() + b.c_.size() - 1);
        for (std::size_t k = 0; k + 1 < a.c_.size() + b.c_.size(); ++k) {
            std::size_t lo = k >= b.c_.size() - 1 ? k - (b.c_.size() - 1) : 0;
            std::size_t hi = std::min(k, a.c_.size() - 1);
            R acc = a.c_[lo] * b.c_[k - lo];
            for (std::size_t i = lo + 1; i <= hi; ++i) acc += a.c_[i] * b.c_[k - i];
            r.push_back(std::move(acc));
        }
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const R& s) const {
        if (is_zero(s)) return Poly();
        std::vector<R> r;
        r.reserve(c_.size());
        for (const R& x : c_) r.push_back(x * s);
        return Poly(std::move(r));
    }
    // multiply by t^k
    Poly shifted(std::size_t k) const {
        if (zero() || k == 0) return *this;
        std::vector<R> r;
        r.reserve(c_.size() + k);
        for (std::size_t i = 0; i < k; ++i) r.push_back(ring_zero(c_[0]));
        for (const R& x : c_) r.push_back(x);
        return Poly(std::move(r));
    }

    R eval(const R& x) const {
        if (zero()) return ring_zero(x);
        R acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

// Division with remainder; requires the leading coefficient of b to be a unit.
template <class R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const Poly<R>& a, const Poly<R>& b) {
    if (b.zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly<R>(), a};
    R lead_inv = ring_inv(b.leading());
    std::vector<R> rem(a.coeffs());
    std::size_t qlen = a.coeffs().size() - b.coeffs().size() + 1;
    std::vector<R> q(qlen, ring_zero(rem[0]));
    for (std::size_t k = qlen; k-- > 0;) {
        R c = rem[k + b.coeffs().size() - 1] * lead_inv;
        q[k] = c;
        if (!is_zero(c))
            for (std::size_t i = 0; i < b.coeffs().size(); ++i)
                rem[k + i] = rem[k + i] - c * b.coeffs()[i];
    }
    return {Poly<R>(std::move(q)), Poly<R>(std::move(rem))};
}

// Exact quotient in an integral domain; each elimination step must divide.
// Used by the fraction-free (Bareiss) determinant over Z[x].
inline Int exact_quot(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw std::domain_error("exact_quot: inexact integer division");
    return q;
}
inline Poly<Int> exact_quot(const Poly<Int>& a, const Poly<Int>& b) {
    if (b.zero()) throw std::domain_error("exact_quot: division by zero polynomial");
    if (a.zero()) return a;
    if (a.degree() < b.degree()) throw std::domain_error("exact_quot: degree mismatch");
    std::vector<Int> rem(a.coeffs());
    std::size_t qlen = a.coeffs().size() - b.coeffs().size() + 1;
    std::vector<Int> q(qlen, Int(0));
    for (std::size_t k = qlen; k-- > 0;) {
        Int c = exact_quot(rem[k + b.coeffs().size() - 1], b.leading());
        q[k] = c;
        if (!c.is_zero())
            for (std::size_t i = 0; i < b.coeffs().size(); ++i)
                rem[k + i] -= c * b.coeffs()[i];
    }
    for (const Int& r : rem)
        if (!r.is_zero()) throw std::domain_error("exact_quot: nonzero remainder");
    return Poly<Int>(std::move(q));
}

// Monic gcd over a field coefficient ring.
template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
    while (!b.zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.zero() ) a = a.scaled(ring_inv(a.leading()));
    return a;
}

// ---- ring trait hooks so Poly<R> itself can be a coefficient ring ----

template <class R>
Poly<R> ring_zero(const Poly<R>&) { return Poly<R>(); }
template <class R>
Poly<R> ring_one(const Poly<R>& a) {
    if (a.zero()) throw std::domain_error("ring_one: zero polynomial carries no base ring");
    return Poly<R>::constant(ring_one(a.coeffs()[0]));
}
template <class R>
Poly<R> ring_from(const Poly<R>& a, long long v) {
    if (a.zero()) throw std::domain_error("ring_from: zero polynomial carries no base ring");
    return Poly<R>::constant(ring_from(a.coeffs()[0], v));
}
template <class R>
bool is_zero(const Poly<R>& a) { return a.zero(); }
template <class R>
Poly<R> ring_inv(const Poly<R>& a) {
    if (a.degree() != 0) throw std::domain_error("ring_inv: polynomial is not a unit");
    return Poly<R>::constant(ring_inv(a.coeffs()[0]));
}

// Canonical rendering, highest degree first. Nested coefficient rings are
// parenthesized when they print as sums.
template <class R>
std::string ring_str_poly(const Poly<R>& a, const std::string& var) {
    if (a.zero()) return "0";
    std::string out;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const R& c = a.coeffs()[i];
        if (is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        std::string cs = ring_str(c);
        bool needs_parens = cs.find(' ') != std::string::npos;
        bool is_one = (cs == "1");
        if (i == 0) {
            out += needs_parens ? "(" + cs + ")" : cs;
        } else {
            if (is_one) {
            } else if (needs_parens) {
                out += "(" + cs + ")*";
            } else {
                out += cs + "*";
            }
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// Default variable names by nesting depth: innermost lam, then x, then z.
template <class R>
std::string ring_str(const Poly<R>& a) { return ring_str_poly(a, "lam"); }
template <class R>
std::string ring_str(const Poly<Poly<R>>& a) { return ring_str_poly(a, "x"); }
template <class R>
std::string ring_str(const Poly<Poly<Poly<R>>>& a) { return ring_str_poly(a, "z"); }

}  // namespace belltrace
