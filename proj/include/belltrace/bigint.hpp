#pragma once

// Arbitrary-precision integers and rationals, plus the handful of
// integer-arithmetic helpers the rest of the library leans on.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace belltrace {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---- ring trait hooks (free functions, extended per coefficient type) ----

inline Int ring_zero(const Int&) { return Int(0); }
inline Int ring_one(const Int&) { return Int(1); }
inline Int ring_from(const Int&, long long v) { return Int(v); }
inline bool is_zero(const Int& a) { return a.is_zero(); }
inline Int ring_inv(const Int& a) {
    if (a == 1 || a == -1) return a;
    throw std::domain_error("ring_inv: integer is not a unit");
}
inline std::string ring_str(const Int& a) { return a.str(); }

inline Rat ring_zero(const Rat&) { return Rat(0); }
inline Rat ring_one(const Rat&) { return Rat(1); }
inline Rat ring_from(const Rat&, long long v) { return Rat(v); }
inline bool is_zero(const Rat& a) { return a.is_zero(); }
inline Rat ring_inv(const Rat& a) {
    if (a.is_zero()) throw std::domain_error("ring_inv: zero rational");
    return Rat(1) / a;
}
inline std::string ring_str(const Rat& a) { return a.str(); }

namespace detail {
// ADL dispatcher: lets class templates with an is_zero() member reach the
// free-function overload for their coefficient type.
template <class T>
bool ring_is_zero(const T& x) { return is_zero(x); }
}  // namespace detail

// ---- small-integer modular helpers ----

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Modular inverse; throws when gcd(a, m) != 1.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) {
        if (m == 1) return 0;  // zero ring: 0 is its own inverse
        throw std::domain_error("inv_mod: not invertible");
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

// Deterministic Miller-Rabin, valid for all inputs < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = lo; p <= hi; ++p)
        if (is_prime_u64(p)) out.push_back(p);
    return out;
}

// Floor square root of a nonnegative big integer.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

// Residue of a big integer in [0, m).
inline std::uint64_t residue(const Int& a, std::uint64_t m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r.convert_to<std::uint64_t>();
}

}  // namespace belltrace
