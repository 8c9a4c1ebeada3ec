#pragma once

// Class numbers h(+-p) of the quadratic fields Q(sqrt(+-p)) and the
// fundamental unit (t_p + u_p sqrt(p))/2 > 1, all in exact integer
// arithmetic: reduced-form enumeration for discriminant -p, reduction cycles
// of indefinite forms for discriminant p, and the continued fraction of
// (1 + sqrt(p))/2 for the unit.

#include "belltrace/arith.hpp"
#include "belltrace/bigint.hpp"
#include "belltrace/modint.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace belltrace {

struct UnitData {
    Int t;
    Int u;
    int norm;  // (t^2 - p u^2)/4, either +1 or -1
};

// h(-p) for p = 3 mod 4, p > 3: count reduced positive definite forms
// (a, b, c) of discriminant -p, i.e. |b| <= a <= c with b >= 0 whenever
// |b| = a or a = c.
inline std::int64_t class_number_imaginary(std::uint64_t p) {
    require_prime(p);
    if (p % 4 != 3 || p <= 3)
        throw std::invalid_argument("class_number_imaginary: need p = 3 mod 4, p > 3");
    std::int64_t count = 0;
    std::int64_t P = static_cast<std::int64_t>(p);
    for (std::int64_t a = 1; 3 * a * a <= P; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            if ((b * b + P) % (4 * a) != 0) continue;
            std::int64_t c = (b * b + P) / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            ++count;
        }
    }
    return count;
}

// Fundamental unit of Q(sqrt(p)), p = 1 mod 4: expand omega = (1 + sqrt(p))/2
// as a continued fraction (exact integer states) and scan convergents h/k for
// |h^2 - hk - k^2 (p-1)/4| = 1; the first hit is the minimal solution of
// t^2 - p u^2 = +-4 with t = 2h - k, u = k.
inline UnitData fundamental_unit(std::uint64_t p) {
    require_prime(p);
    if (p % 4 != 1) throw std::invalid_argument("fundamental_unit: need p = 1 mod 4");
    const Int D(p);
    const Int s = isqrt(D);
    const Int quart = (D - 1) / 4;
    Int P = 1, Q = 2;
    Int h_prev = 1, h_prev2 = 0;  // h_{-1}, h_{-2}
    Int k_prev = 0, k_prev2 = 1;
    for (int iter = 0; iter < 100000; ++iter) {
        Int a = (P + s) / Q;  // floor((P + sqrt(D))/Q); invariant keeps Q > 0
        Int h = a * h_prev + h_prev2;
        Int k = a * k_prev + k_prev2;
        Int nrm = h * h - h * k - k * k * quart;
        if (nrm == 1 || nrm == -1) {
            UnitData u;
            u.t = 2 * h - k;
            u.u = k;
            u.norm = nrm == 1 ? 1 : -1;
            return u;
        }
        h_prev2 = h_prev; h_prev = h;
        k_prev2 = k_prev; k_prev = k;
        P = a * Q - P;
        Int num = D - P * P;
        if (num % Q != 0) throw std::logic_error("fundamental_unit: CF invariant violated (Q | D - P^2)");
        Q = num / Q;
        if (Q <= 0) throw std::logic_error("fundamental_unit: CF invariant violated (Q > 0)");
    }
    throw std::logic_error("fundamental_unit: period not found");
}

namespace detail {

struct Form {
    std::int64_t a, b, c;
    friend bool operator<(const Form& x, const Form& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
    friend bool operator==(const Form& x, const Form& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

// reduced indefinite form of discriminant D: 0 < b < sqrt(D) and
// sqrt(D) - b < 2|a| < sqrt(D) + b (exact integer comparisons, D nonsquare)
inline bool reduced_indefinite(std::int64_t a, std::int64_t b, std::int64_t D) {
    if (b <= 0 || b * b >= D) return false;
    std::int64_t twoa = 2 * (a < 0 ? -a : a);
    bool lower = D < (twoa + b) * (twoa + b);           // sqrt(D) - b < 2|a|
    bool upper = twoa - b <= 0 || (twoa - b) * (twoa - b) < D;  // 2|a| < sqrt(D) + b
    return lower && upper;
}

inline std::vector<Form> reduced_forms(std::uint64_t p) {
    std::int64_t D = static_cast<std::int64_t>(p);
    std::int64_t s = static_cast<std::int64_t>(isqrt(Int(p)).convert_to<std::int64_t>());
    std::vector<Form> out;
    for (std::int64_t b = 1; b <= s; ++b) {
        if ((b * b - D) % 4 != 0) continue;
        for (std::int64_t aa = 1; 2 * aa <= s + b; ++aa) {
            for (std::int64_t a : {aa, -aa}) {
                if ((b * b - D) % (4 * a) != 0) continue;
                std::int64_t c = (b * b - D) / (4 * a);
                if (reduced_indefinite(a, b, D)) out.push_back({a, b, c});
            }
        }
    }
    return out;
}

// one reduction step rho(a,b,c) = (c, r, (r^2-D)/(4c)) with r = -b mod 2|c|
// taken in the window (sqrt(D) - 2|c|, sqrt(D))
inline Form rho(const Form& f, std::int64_t D, std::int64_t s) {
    std::int64_t cabs = f.c < 0 ? -f.c : f.c;
    std::int64_t m = 2 * cabs;
    std::int64_t r = ((-f.b) % m + m) % m;
    while (r > s) r -= m;
    while (r <= s - m) r += m;
    return {f.c, r, (r * r - D) / (4 * f.c)};
}

}  // namespace detail

// Narrow class number h+ of discriminant p: the number of rho-cycles
// partitioning the reduced indefinite forms.
inline std::int64_t narrow_class_number(std::uint64_t p) {
    require_prime(p);
    if (p % 4 != 1) throw std::invalid_argument("narrow_class_number: need p = 1 mod 4");
    std::int64_t D = static_cast<std::int64_t>(p);
    std::int64_t s = isqrt(Int(p)).convert_to<std::int64_t>();
    auto forms = detail::reduced_forms(p);
    std::set<detail::Form> all(forms.begin(), forms.end());
    std::set<detail::Form> seen;
    std::int64_t cycles = 0;
    for (const auto& f : all) {
        if (seen.count(f)) continue;
        ++cycles;
        detail::Form cur = f;
        while (!seen.count(cur)) {
            seen.insert(cur);
            cur = detail::rho(cur, D, s);
            if (!all.count(cur)) throw std::logic_error("narrow_class_number: rho left the reduced set");
        }
    }
    return cycles;
}

// h(p) for p = 1 mod 4: h+ when the fundamental unit has norm -1, else h+/2.
// For prime p the norm is expected to be -1; norm +1 would be an anomaly.
inline std::int64_t class_number_real(std::uint64_t p) {
    std::int64_t hplus = narrow_class_number(p);
    UnitData u = fundamental_unit(p);
    if (u.norm == -1) return hplus;
    if (hplus % 2 != 0) throw std::logic_error("class_number_real: odd h+ with norm +1");
    return hplus / 2;
}

struct ClassData {
    std::uint64_t p;
    std::int64_t h;          // h(p) if p = 1 mod 4, else h(-p)
    bool real;               // which field the h refers to
    UnitData unit;           // meaningful only when real
};

inline ClassData class_data(std::uint64_t p) {
    require_prime(p);
    if (p <= 3) throw std::invalid_argument("class_data: p > 3 required");
    ClassData d;
    d.p = p;
    d.real = (p % 4 == 1);
    if (d.real) {
        d.unit = fundamental_unit(p);
        d.h = class_number_real(p);
    } else {
        d.unit = UnitData{0, 0, 0};
        d.h = class_number_imaginary(p);
    }
    if (d.h % 2 == 0) throw std::logic_error("class_data: even class number for prime discriminant");
    return d;
}

// Mordell/Chowla right-hand side: the value congruent to ((p-1)/2)! mod p,
//   (-1)^{(h(p)+1)/2} t_p / 2      when p = 1 mod 4,
//   (-1)^{(h(-p)+1)/2}             when p = 3 mod 4 (p > 3).
inline Mod mordell_chowla_rhs(const ClassData& d) {
    std::uint64_t p = d.p;
    Mod sign((d.h + 1) / 2 % 2 == 0 ? 1 : -1, p);
    if (d.real) return sign * Mod::reduce(d.unit.t, p) * Mod(2, p).inv();
    return sign;
}

inline Mod mordell_chowla_rhs(std::uint64_t p) { return mordell_chowla_rhs(class_data(p)); }

}  // namespace belltrace
