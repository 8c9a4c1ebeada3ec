#pragma once

// Stirling numbers, weighted Stirling polynomials R(n,j,lambda), (weighted)
// Bell polynomials, evaluation of b_N(x) mod p for arbitrary-precision N via
// the order-p Touchard recurrence, and Hankel determinants.

#include "belltrace/arith.hpp"
#include "belltrace/bigint.hpp"
#include "belltrace/modint.hpp"
#include "belltrace/poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace belltrace {

// S(n,j) mod m for 0 <= j <= n <= nmax.
class StirlingTable {
public:
    StirlingTable(std::size_t nmax, std::uint64_t m) : nmax_(nmax), m_(m), t_((nmax + 1) * (nmax + 2) / 2, 0) {
        at(0, 0) = 1 % m;
        for (std::size_t n = 1; n <= nmax; ++n) {
            for (std::size_t j = 1; j <= n; ++j) {
                std::uint64_t v = at(n - 1, j - 1);
                if (j < n) v = (v + mul_mod(j % m, at(n - 1, j), m)) % m;
                at(n, j) = v;
            }
        }
    }
    std::uint64_t operator()(std::size_t n, std::size_t j) const {
        return j > n ? 0 : t_[n * (n + 1) / 2 + j];
    }
    std::size_t nmax() const { return nmax_; }
    std::uint64_t modulus() const { return m_; }

private:
    std::uint64_t& at(std::size_t n, std::size_t j) { return t_[n * (n + 1) / 2 + j]; }
    std::size_t nmax_;
    std::uint64_t m_;
    std::vector<std::uint64_t> t_;
};

// Exact S(n,j) table.
inline std::vector<std::vector<Int>> stirling_exact(std::size_t nmax) {
    std::vector<std::vector<Int>> s(nmax + 1);
    s[0] = {Int(1)};
    for (std::size_t n = 1; n <= nmax; ++n) {
        s[n].assign(n + 1, Int(0));
        for (std::size_t j = 1; j <= n; ++j) {
            if (j < n) s[n][j] = Int(j) * s[n - 1][j];
            s[n][j] += s[n - 1][j - 1];
        }
    }
    return s;
}

// Weighted Stirling polynomials R(n,j,lambda) over any coefficient ring, via
// the recurrence R(n,j) = (lambda + j) R(n-1,j) + R(n-1,j-1); returns the row
// for a fixed n as lambda-polynomials indexed by j.
template <class R>
std::vector<Poly<R>> weighted_stirling_row(std::size_t n, const R& one) {
    std::vector<Poly<R>> row{Poly<R>::constant(one)};  // R(0,0) = 1
    for (std::size_t step = 1; step <= n; ++step) {
        std::vector<Poly<R>> next(step + 1);
        for (std::size_t j = 0; j <= step; ++j) {
            Poly<R> acc;
            if (j < row.size()) {
                Poly<R> lam_plus_j(std::vector<R>{ring_from(one, static_cast<long long>(j)), one});
                acc = lam_plus_j * row[j];
            }
            if (j >= 1) acc += row[j - 1];
            next[j] = std::move(acc);
        }
        row = std::move(next);
    }
    return row;
}

template <class R>
Poly<R> weighted_stirling(std::size_t n, std::size_t j, const R& one) {
    if (j > n) return Poly<R>();
    return weighted_stirling_row(n, one)[j];
}

// b_n(x, lambda) as a polynomial in x with lambda-polynomial coefficients.
template <class R>
Poly<Poly<R>> bell_poly_xlambda(std::size_t n, const R& one) {
    return Poly<Poly<R>>(weighted_stirling_row(n, one));
}

// b_n(x, lambda) with x specialized; result is a polynomial in lambda.
template <class R>
Poly<R> bell_poly_lambda(std::size_t n, const R& x0) {
    R one = ring_one(x0);
    auto row = weighted_stirling_row(n, one);
    Poly<R> acc;
    R xp = one;
    for (std::size_t j = 0; j < row.size(); ++j) {
        acc += row[j].scaled(xp);
        xp = xp * x0;
    }
    return acc;
}

// Exact b_n(x) over Z[x]; values grow super-exponentially, so n is capped.
inline Poly<Int> bell_poly_exact(std::size_t n) {
    if (n > 64) throw std::invalid_argument("bell_poly_exact: n capped at 64");
    auto s = stirling_exact(n);
    return Poly<Int>(s[n]);
}

// b_n(x0) mod p for small n via the Stirling table.
inline Mod bell_eval_small(const StirlingTable& st, std::size_t n, Mod x0) {
    std::uint64_t p = st.modulus();
    Mod acc(0, p), xp(1, p);
    for (std::size_t j = 0; j <= n; ++j) {
        acc += Mod(static_cast<std::int64_t>(st(n, j)), p) * xp;
        xp *= x0;
    }
    return acc;
}

namespace detail {

// z * a mod (z^p - z - c) over F_p; a has p coefficients.
inline void shift_reduce(std::vector<std::uint64_t>& a, std::uint64_t c, std::uint64_t p) {
    std::uint64_t top = a.back();
    for (std::size_t i = a.size() - 1; i > 0; --i) a[i] = a[i - 1];
    a[0] = 0;
    if (top) {
        a[1] = (a[1] + top) % p;
        a[0] = (a[0] + mul_mod(top, c, p)) % p;
    }
}

// product of two length-p coefficient vectors mod (z^p - z - c) over F_p
inline std::vector<std::uint64_t> mul_reduce(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b,
                                             std::uint64_t c, std::uint64_t p) {
    std::size_t d = a.size();
    std::vector<std::uint64_t> r(2 * d - 1, 0);
    if (p < (1u << 21) && d < (1u << 20)) {
        for (std::size_t i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < d; ++j) r[i + j] += a[i] * b[j];
        }
        for (auto& v : r) v %= p;
    } else {
        for (std::size_t i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < d; ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
        }
    }
    for (std::size_t k = 2 * d - 2; k >= d; --k) {
        std::uint64_t v = r[k];
        if (v) {
            r[k - d + 1] = (r[k - d + 1] + v) % p;
            r[k - d] = (r[k - d] + mul_mod(v, c, p)) % p;
        }
        r[k] = 0;
        if (k == d) break;
    }
    r.resize(d);
    return r;
}

// z^N mod (z^p - z - c) over F_p
inline std::vector<std::uint64_t> z_pow_mod(const Int& N, std::uint64_t c, std::uint64_t p) {
    std::vector<std::uint64_t> r(p, 0);
    if (N < static_cast<std::int64_t>(p)) {
        r[N.convert_to<std::size_t>()] = 1;
        return r;
    }
    r[0] = 1;
    std::vector<std::uint64_t> z(p, 0);
    z[1] = 1;
    for (long i = static_cast<long>(boost::multiprecision::msb(N)); i >= 0; --i) {
        r = mul_reduce(r, r, c, p);
        if (bit_test(N, static_cast<unsigned>(i))) shift_reduce(r, c, p);
    }
    return r;
}

}  // namespace detail

// b_N(x0) mod p for arbitrary-precision N >= 0. The sequence n -> b_n(x0)
// satisfies the order-p recurrence b_{n+p} = b_{n+1} + x0^p b_n (Touchard), so
// b_N is read off from z^N mod (z^p - z - x0^p) against the initial segment
// b_0..b_{p-1}.
inline Mod bell_eval_huge(std::uint64_t p, Mod x0, const Int& N) {
    require_prime(p);
    if (x0.modulus() != p) throw std::invalid_argument("bell_eval_huge: x0 not mod p");
    if (N < 0) throw std::invalid_argument("bell_eval_huge: negative index");
    StirlingTable st(p - 1, p);
    std::uint64_t c = pow_mod(x0.value(), p, p);
    auto coord = detail::z_pow_mod(N, c, p);
    Mod acc(0, p);
    for (std::size_t i = 0; i < p; ++i) {
        if (!coord[i]) continue;
        acc += Mod(static_cast<std::int64_t>(coord[i]), p) * bell_eval_small(st, i, x0);
    }
    return acc;
}

// det of an n x n matrix over F_p by Gaussian elimination with partial pivoting.
inline Mod det_mod(std::vector<std::vector<Mod>> m, std::uint64_t p) {
    std::size_t n = m.size();
    Mod det(1, p);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) return Mod(0, p);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Mod inv = m[col][col].inv();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Mod f = m[r][col] * inv;
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

// Exact determinant of B_n(x) = (b_{i+j}(x)) over Z[x] by fraction-free
// Bareiss elimination (pivots are the leading principal minors, all nonzero).
inline Poly<Int> hankel_det(std::size_t n) {
    if (n == 0) throw std::invalid_argument("hankel_det: n >= 1");
    std::vector<std::vector<Poly<Int>>> m(n, std::vector<Poly<Int>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = bell_poly_exact(i + j);
    Poly<Int> prev = Poly<Int>::constant(Int(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_quot(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

// det of the shifted p x p Hankel matrix (b_{m+i+j}(x0)) over F_p; entries
// come from one z^m power followed by cheap z-shifts.
inline Mod shifted_hankel_det(std::uint64_t p, const Int& shift, Mod x0) {
    require_prime(p);
    StirlingTable st(p - 1, p);
    std::uint64_t c = pow_mod(x0.value(), p, p);
    auto coord = detail::z_pow_mod(shift, c, p);
    std::vector<Mod> initial;
    for (std::size_t i = 0; i < p; ++i) initial.push_back(bell_eval_small(st, i, x0));
    std::vector<Mod> entries;  // b_{shift + s} for s in [0, 2p-2]
    for (std::size_t s = 0; s <= 2 * (p - 1); ++s) {
        Mod acc(0, p);
        for (std::size_t i = 0; i < p; ++i)
            if (coord[i]) acc += Mod(static_cast<std::int64_t>(coord[i]), p) * initial[i];
        entries.push_back(acc);
        detail::shift_reduce(coord, c, p);
    }
    std::vector<std::vector<Mod>> m(p, std::vector<Mod>(p, Mod(0, p)));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) m[i][j] = entries[i + j];
    return det_mod(std::move(m), p);
}

// Partitions of {1..n} into r distinguishable boxes (possibly empty) plus j
// indistinguishable nonempty blocks, by brute-force enumeration: label each
// element with one of r + j labels, require the j block labels nonempty,
// divide by j! (blocks are disjoint and nonempty, so relabelings are distinct).
inline Int count_box_partitions(std::size_t n, std::size_t j, std::size_t r) {
    if (n > 10) throw std::invalid_argument("count_box_partitions: n capped at 10");
    std::size_t labels = r + j;
    if (labels == 0) return n == 0 ? Int(1) : Int(0);
    Int count = 0;
    std::vector<std::size_t> assign(n, 0);
    while (true) {
        std::vector<bool> used(j, false);
        for (std::size_t i = 0; i < n; ++i)
            if (assign[i] >= r) used[assign[i] - r] = true;
        bool all = true;
        for (bool u : used) all = all && u;
        if (all) ++count;
        std::size_t k = 0;
        while (k < n && ++assign[k] == labels) assign[k++] = 0;
        if (k == n) break;
    }
    Int jf = 1;
    for (std::size_t i = 2; i <= j; ++i) jf *= i;
    return count / jf;
}

}  // namespace belltrace
