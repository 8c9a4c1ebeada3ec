#pragma once

// Generating-series identities for weighted Stirling/Bell polynomials, the
// two rationality congruences of the Bell generating series, and the
// deformation and separable-factorization identities behind them. Everything
// is exact: truncated series over Z/m, exact rationals, or F_{p^f}.

#include "belltrace/bell.hpp"
#include "belltrace/ffield.hpp"
#include "belltrace/modint.hpp"
#include "belltrace/poly.hpp"
#include "belltrace/series.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace belltrace {

// lambda-polynomial (lam + j) over the ring of `one`
template <class R>
Poly<R> lam_plus(const R& one, long long j) {
    return Poly<R>(std::vector<R>{ring_from(one, j), one});
}

// sum_{n} R(n, j, lambda) z^n = 1/(1 - lam z) * prod_{i=1}^{j} z/(1 - (lam+i) z)
template <class R>
Series<Poly<R>> gf_stirling(std::size_t j, std::size_t precision, const R& one) {
    using L = Poly<R>;
    L lone = L::constant(one);
    Series<L> acc = Series<L>(std::vector<L>{lone}, precision);
    // 1/(1 - lam z)
    acc = acc * Series<L>(std::vector<L>{lone, -lam_plus(one, 0)}, precision).inverse();
    for (std::size_t i = 1; i <= j; ++i) {
        Series<L> den(std::vector<L>{lone, -lam_plus(one, static_cast<long long>(i))}, precision);
        Series<L> znum(std::vector<L>{L(), lone}, precision);  // z
        acc = acc * znum * den.inverse();
    }
    return acc;
}

// F(x, lam, z) = 1/(1 - lam z) * sum_{n >= 0} prod_{j=1}^{n} x z/(1 - (lam+j) z);
// the outer sum is truncated at n = precision (term n starts at z^n).
template <class R>
Series<Poly<Poly<R>>> gf_bell(std::size_t precision, const R& one) {
    using L = Poly<R>;        // lambda-polys
    using X = Poly<L>;        // x-polys of lambda-polys
    L lone = L::constant(one);
    X xone = X::constant(lone);
    X xmono = X::monomial(lone, 1);
    Series<X> sum(std::vector<X>{xone}, precision);   // n = 0 term
    Series<X> term(std::vector<X>{xone}, precision);
    for (std::size_t n = 1; n < precision; ++n) {
        Series<X> den(std::vector<X>{xone, -X::constant(lam_plus(one, static_cast<long long>(n)))}, precision);
        Series<X> xz(std::vector<X>{X(), xmono}, precision);
        term = term * xz * den.inverse();
        sum = sum + term;
    }
    Series<X> front(std::vector<X>{xone, -X::constant(lam_plus(one, 0))}, precision);
    return sum * front.inverse();
}

// F as the honest generating series of the weighted Bell polynomials.
template <class R>
Series<Poly<Poly<R>>> bell_gf_reference(std::size_t precision, const R& one) {
    std::vector<Poly<Poly<R>>> c;
    c.reserve(precision);
    for (std::size_t m = 0; m < precision; ++m) c.push_back(bell_poly_xlambda(m, one));
    return Series<Poly<Poly<R>>>(std::move(c), precision);
}

namespace detail {

template <class R>
Poly<R> truncate_poly(const Poly<R>& p, std::size_t maxdeg) {
    std::vector<R> c = p.coeffs();
    if (c.size() > maxdeg + 1) c.resize(maxdeg + 1);
    return Poly<R>(std::move(c));
}

}  // namespace detail

struct MezoReport {
    bool ok = true;
    // (x-power, z-power) of the first differing coefficient
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Right-hand side of the Mezo-type identity, e^{-x} sum_n x^n/((1-(lam+n)z) n!),
// truncated to x-degree < xprec and z-precision zprec. `skip_term` drops one
// summand (used by the mutation test); pass a value >= xprec for the honest sum.
inline Series<Poly<Poly<Rat>>> mezo_rhs(std::size_t xprec, std::size_t zprec, std::size_t skip_term) {
    using L = Poly<Rat>;
    using X = Poly<L>;
    Rat one(1);
    L lone = L::constant(one);
    // e^{-x} to x-degree < xprec
    std::vector<L> exp_coeffs;
    Rat fact(1);
    for (std::size_t k = 0; k < xprec; ++k) {
        if (k > 0) fact *= Rat(static_cast<long long>(k));
        exp_coeffs.push_back(L::constant(Rat(k % 2 ? -1 : 1) / fact));
    }
    X expx(exp_coeffs);
    X zero_x;
    Series<X> acc(std::vector<X>{zero_x, zero_x}, zprec);
    Rat nfact(1);
    for (std::size_t n = 0; n < xprec; ++n) {
        if (n > 0) nfact *= Rat(static_cast<long long>(n));
        if (n == skip_term) continue;
        X coeff = detail::truncate_poly(expx.shifted(n).scaled(L::constant(Rat(1) / nfact)), xprec - 1);
        Series<X> den(std::vector<X>{X::constant(lone), -X::constant(lam_plus(one, static_cast<long long>(n)))}, zprec);
        Series<X> term = den.inverse();
        std::vector<X> scaled;
        for (std::size_t i = 0; i < zprec; ++i) scaled.push_back(detail::truncate_poly(term[i] * coeff, xprec - 1));
        acc = acc + Series<X>(std::move(scaled), zprec);
    }
    return acc;
}

inline MezoReport compare_x_truncated(const Series<Poly<Poly<Rat>>>& lhs,
                                      const Series<Poly<Poly<Rat>>>& rhs, std::size_t xprec) {
    MezoReport rep;
    std::size_t n = std::min(lhs.precision(), rhs.precision());
    for (std::size_t m = 0; m < n; ++m) {
        Poly<Poly<Rat>> a = detail::truncate_poly(lhs[m], xprec - 1);
        Poly<Poly<Rat>> b = detail::truncate_poly(rhs[m], xprec - 1);
        if (a == b) continue;
        std::size_t d = std::max(a.coeffs().size(), b.coeffs().size());
        for (std::size_t i = 0; i < d; ++i) {
            Poly<Rat> ca = i < a.coeffs().size() ? a.coeffs()[i] : Poly<Rat>();
            Poly<Rat> cb = i < b.coeffs().size() ? b.coeffs()[i] : Poly<Rat>();
            if (!(ca == cb)) {
                rep.ok = false;
                rep.witness = {i, m};
                return rep;
            }
        }
    }
    return rep;
}

// F(x, lam, z) = e^{-x} sum_n x^n/((1-(lam+n)z) n!) to O(x^K, z^N), lambda symbolic.
inline MezoReport verify_mezo(std::size_t xprec, std::size_t zprec) {
    auto lhs = bell_gf_reference(zprec, Rat(1));
    auto rhs = mezo_rhs(xprec, zprec, xprec + 1);
    return compare_x_truncated(lhs, rhs, xprec);
}

struct CongruenceReport {
    bool ok = true;
    std::optional<std::size_t> witness;  // first differing z-power
};

namespace detail {

// b_m(x, r) over Z/M as an x-polynomial: scalar weighted-Stirling recurrence.
inline Poly<Mod> bell_poly_x_at_lambda(std::size_t n, Mod r) {
    std::uint64_t M = r.modulus();
    std::vector<Mod> row{Mod(1, M)};  // R(0, j, r)
    for (std::size_t step = 1; step <= n; ++step) {
        std::vector<Mod> next(step + 1, Mod(0, M));
        for (std::size_t j = 0; j <= step; ++j) {
            Mod acc(0, M);
            if (j < row.size()) acc += (r + Mod(static_cast<std::int64_t>(j % M), M)) * row[j];
            if (j >= 1) acc += row[j - 1];
            next[j] = acc;
        }
        row = std::move(next);
    }
    return Poly<Mod>(std::move(row));
}

}  // namespace detail

// First rationality congruence, lambda and x symbolic, in (Z/nZ)[x,lam][[z]]:
//   (1 - lam z) F = [sum_{k<n} (xz)^k prod_{j=k+1}^{n} (1-(lam+j)z)]
//                   / [prod_{j=1}^{n} (1-(lam+j)z) - (xz)^n]        (mod n).
// `display_variant` swaps in the alternate product bounds (numerator products
// to n-1, denominator product from j = 0); see the unit tests for its status.
inline CongruenceReport rationality_lambda(std::size_t n, std::size_t precision, bool display_variant = false) {
    if (n == 0) throw std::invalid_argument("rationality_lambda: n >= 1");
    if (n == 1) return {};  // Z/1 is the zero ring; the congruence is vacuous
    using L = Poly<Mod>;
    using X = Poly<L>;
    Mod one(1, n);
    L lone = L::constant(one);
    X xone = X::constant(lone);

    std::vector<X> lhs_coeffs;
    for (std::size_t m = 0; m < precision; ++m) lhs_coeffs.push_back(bell_poly_xlambda(m, one));
    Series<X> F(std::move(lhs_coeffs), precision);
    Series<X> front(std::vector<X>{xone, -X::constant(lam_plus(one, 0))}, precision);
    Series<X> lhs = front * F;

    auto lin = [&](long long j) {  // 1 - (lam + j) z  as a z-poly
        return Poly<X>(std::vector<X>{xone, -X::constant(lam_plus(one, j))});
    };
    std::size_t num_hi = display_variant ? n - 1 : n;
    std::size_t den_lo = display_variant ? 0 : 1;
    std::size_t den_hi = display_variant ? n - 1 : n;

    Poly<X> num;
    for (std::size_t k = 0; k < n; ++k) {
        Poly<X> term = Poly<X>::monomial(X::monomial(lone, k), k);  // (xz)^k
        for (std::size_t j = k + 1; j <= num_hi; ++j) term *= lin(static_cast<long long>(j));
        num += term;
    }
    Poly<X> den = Poly<X>::constant(xone);
    for (std::size_t j = den_lo; j <= den_hi; ++j) den *= lin(static_cast<long long>(j));
    den -= Poly<X>::monomial(X::monomial(lone, n), n);  // (xz)^n

    Series<X> rhs = series_of_rational(num, den, xone, precision);
    CongruenceReport rep;
    rep.witness = first_mismatch(lhs, rhs);
    rep.ok = !rep.witness.has_value();
    return rep;
}

inline std::uint64_t padic_modulus(std::uint64_t p, std::size_t n) {
    std::uint64_t m = p;
    while (n % p == 0) {
        n /= p;
        m *= p;
    }
    return m;
}

// Second congruence, lambda specialized to an integer r, x symbolic:
//   (1 - r z) F(x, r, z) = [sum_{k<np} (xz)^k prod_{j=k+1}^{np} (1-(r+j)z)]
//                          / [(1 - z^{p-1})^n - (xz)^{np}]
// in (Z_p/(np/2)Z_p)[x][[z]]. The ideal (np/2)Z_p equals p^{v_p(n)+1} Z_p for
// odd p, so the check runs mod that prime power.
inline CongruenceReport rationality_specialized(std::uint64_t p, std::size_t n, long long r,
                                                std::size_t precision) {
    require_prime(p);
    if (p == 2) throw std::invalid_argument("rationality_specialized: p must be odd");
    std::uint64_t M = padic_modulus(p, n);
    using X = Poly<Mod>;
    Mod one(1, M), rr(r, M);
    X xone = X::constant(one);

    std::vector<X> F_coeffs;
    for (std::size_t m = 0; m < precision; ++m) F_coeffs.push_back(detail::bell_poly_x_at_lambda(m, rr));
    Series<X> F(std::move(F_coeffs), precision);
    Series<X> front(std::vector<X>{xone, -X::constant(rr)}, precision);
    Series<X> lhs = front * F;

    std::size_t np = n * p;
    auto lin = [&](long long j) {  // 1 - (r + j) z
        return Poly<X>(std::vector<X>{xone, -X::constant(rr + Mod(j, M))});
    };
    Poly<X> num;
    for (std::size_t k = 0; k < np; ++k) {
        Poly<X> term = Poly<X>::monomial(X::monomial(one, k), k);
        for (std::size_t j = k + 1; j <= np; ++j) term *= lin(static_cast<long long>(j));
        num += term;
    }
    Poly<X> base(std::vector<X>{xone});  // 1 - z^{p-1}
    base -= Poly<X>::monomial(xone, p - 1);
    Poly<X> den = Poly<X>::constant(xone);
    for (std::size_t i = 0; i < n; ++i) den *= base;
    den -= Poly<X>::monomial(X::monomial(one, np), np);

    Series<X> rhs = series_of_rational(num, den, xone, precision);
    CongruenceReport rep;
    rep.witness = first_mismatch(lhs, rhs);
    rep.ok = !rep.witness.has_value();
    return rep;
}

// Deformation lemma in (Z/pZ)[x, z]:
//   sum_{k<np} (xz)^k prod_{j=k+1}^{np-1} (1-jz)
//     = sum_{k<np} (xz)^{np-k-1} prod_{j=1}^{k} (1+jz).
inline bool deformation_identity(std::uint64_t p, std::size_t n) {
    require_prime(p);
    using X = Poly<Mod>;
    Mod one(1, p);
    X xone = X::constant(one);
    std::size_t np = n * p;
    auto lin = [&](long long j, int sign) {
        return Poly<X>(std::vector<X>{xone, X::constant(Mod(sign * j, p))});
    };
    Poly<X> lhs, rhs;
    for (std::size_t k = 0; k < np; ++k) {
        Poly<X> tl = Poly<X>::monomial(X::monomial(one, k), k);
        for (std::size_t j = k + 1; j <= np - 1; ++j) tl *= lin(static_cast<long long>(j), -1);
        lhs += tl;
        Poly<X> tr = Poly<X>::monomial(X::monomial(one, np - k - 1), np - k - 1);
        for (std::size_t j = 1; j <= k; ++j) tr *= lin(static_cast<long long>(j), +1);
        rhs += tr;
    }
    return lhs == rhs;
}

// Separable-factorization lemma over F_{p^f} (f = ord_n(p)):
//   (z^p - z)^n - x^{np} = prod_{m=1}^{n} ((z^p - z) - (zeta_n^m x)^p).
inline bool separable_factorization(std::uint64_t p, std::size_t n) {
    require_prime(p);
    if (n == 0 || n % p == 0) throw std::invalid_argument("separable_factorization: need gcd(n, p) = 1");
    auto [ctx, zeta] = cyclotomic_context(p, n);
    using E = FpElem;
    using X = Poly<E>;   // x-polys over F_{p^f}
    using Z = Poly<X>;   // z-polys of x-polys
    E one = ff_one(ctx);
    X xone = X::constant(one);
    Z w = Z::monomial(xone, p) - Z::monomial(xone, 1);  // z^p - z
    Z lhs = Z::constant(xone);
    for (std::size_t i = 0; i < n; ++i) lhs *= w;
    lhs -= Z::constant(X::monomial(one, n * p));
    Z rhs = Z::constant(xone);
    for (std::size_t m = 1; m <= n; ++m) {
        E zmp = zeta.pow(Int(m) * Int(p));
        rhs *= w - Z::constant(X::monomial(zmp, p));
    }
    return lhs == rhs;
}

}  // namespace belltrace
