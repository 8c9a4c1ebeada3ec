#pragma once

// Special exponents and modular combinatorics: tau_p(a), Z_a, k_p, Legendre
// symbol, power sums S_j(p), factorials and binomials mod m.

#include "belltrace/bigint.hpp"
#include "belltrace/modint.hpp"

#include <cstdint>
#include <stdexcept>

namespace belltrace {

inline void require_prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("expected a prime");
}

// Legendre symbol (a|p) in {-1,0,+1}, via Euler's criterion.
inline int legendre(const Int& a, std::uint64_t p) {
    require_prime(p);
    if (p == 2) throw std::invalid_argument("legendre: p must be odd");
    std::uint64_t r = residue(a, p);
    if (r == 0) return 0;
    std::uint64_t e = pow_mod(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// tau_p(a) = sum_{j=1}^{p-1} j p^{ja-1}
inline Int tau(std::uint64_t p, std::uint64_t a) {
    require_prime(p);
    if (a == 0) throw std::invalid_argument("tau: a must be >= 1");
    Int sum = 0;
    Int pa = pow(Int(p), static_cast<unsigned>(a));
    Int term = pow(Int(p), static_cast<unsigned>(a - 1));  // p^{a-1}
    for (std::uint64_t j = 1; j <= p - 1; ++j) {
        sum += j * term;
        term *= pa;
    }
    return sum;
}

// k_p = (p^p - 1)/(p - 1), the order of the norm-one subgroup containing theta.
inline Int k_p(std::uint64_t p) {
    require_prime(p);
    Int num = pow(Int(p), static_cast<unsigned>(p)) - 1;
    return num / Int(p - 1);
}

// Z_a = sum_{j=1}^{p-1} j p^{(j+1)a-1} = p^a tau_p(a); reduces to zeta(F_p,a) mod k_p.
inline Int zeta_exponent(std::uint64_t p, std::uint64_t a) {
    require_prime(p);
    if (a == 0 || a % p == 0) throw std::invalid_argument("zeta_exponent: need gcd(a, p) = 1, a >= 1");
    return pow(Int(p), static_cast<unsigned>(a)) * tau(p, a);
}

// S_j(p) = sum_{m=0}^{p-1} m^j mod p
inline Mod power_sum(std::uint64_t j, std::uint64_t p) {
    require_prime(p);
    std::uint64_t acc = 0;
    for (std::uint64_t m = 0; m < p; ++m)
        acc = (acc + pow_mod(m, j, p)) % p;
    return Mod(static_cast<std::int64_t>(acc), p);
}

// n! mod m by direct product.
inline Mod factorial_mod(std::uint64_t n, std::uint64_t m) {
    Mod r(1, m);
    for (std::uint64_t i = 2; i <= n; ++i) r *= Mod(static_cast<std::int64_t>(i % m), m);
    return r;
}

// Exact binomial coefficient.
inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return Int(0);
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int r = 1;
    for (Int i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;
    }
    return r;
}

// C(n, k) mod prime p for arbitrary-precision n, k via Lucas' theorem.
inline Mod binomial_mod(Int n, Int k, std::uint64_t p) {
    require_prime(p);
    if (k < 0 || k > n) return Mod(0, p);
    Mod r(1, p);
    while (n > 0 || k > 0) {
        std::uint64_t nd = residue(n, p), kd = residue(k, p);
        if (kd > nd) return Mod(0, p);
        Int c = binomial(Int(nd), Int(kd));
        r *= Mod::reduce(c, p);
        n /= p;
        k /= p;
    }
    return r;
}

}  // namespace belltrace
