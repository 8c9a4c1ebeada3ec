#pragma once

// Residues modulo a runtime modulus m >= 1. Elements carry their modulus, so a
// zero Mod is still a usable ring sample; m == 1 is the zero ring.

#include "belltrace/bigint.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace belltrace {

class Mod {
public:
    Mod(std::int64_t v, std::uint64_t m) : m_(check(m)) {
        std::int64_t r = v % static_cast<std::int64_t>(m_);
        if (r < 0) r += static_cast<std::int64_t>(m_);
        v_ = static_cast<std::uint64_t>(r);
    }
    static Mod reduce(const Int& v, std::uint64_t m) {
        Mod r(0, m);
        r.v_ = residue(v, m);
        return r;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }

    friend Mod operator+(Mod a, Mod b) {
        a.match(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.m_) s -= a.m_;
        return Mod::raw(s, a.m_);
    }
    friend Mod operator-(Mod a, Mod b) {
        a.match(b);
        std::uint64_t s = a.v_ + a.m_ - b.v_;
        if (s >= a.m_) s -= a.m_;
        return Mod::raw(s, a.m_);
    }
    friend Mod operator*(Mod a, Mod b) {
        a.match(b);
        return Mod::raw(mul_mod(a.v_, b.v_, a.m_), a.m_);
    }
    friend Mod operator-(Mod a) { return Mod::raw(a.v_ ? a.m_ - a.v_ : 0, a.m_); }
    Mod& operator+=(Mod b) { return *this = *this + b; }
    Mod& operator-=(Mod b) { return *this = *this - b; }
    Mod& operator*=(Mod b) { return *this = *this * b; }
    friend bool operator==(Mod a, Mod b) { return a.m_ == b.m_ && a.v_ == b.v_; }
    friend bool operator!=(Mod a, Mod b) { return !(a == b); }

    Mod inv() const { return Mod::raw(inv_mod(v_, m_), m_); }
    bool is_unit() const {
        std::uint64_t a = v_, b = m_;
        while (a) { std::uint64_t t = b % a; b = a; a = t; }
        return b == 1;  // m == 1 makes everything a unit of the zero ring
    }
    Mod pow(std::uint64_t e) const { return Mod::raw(pow_mod(v_, e, m_), m_); }

    friend std::ostream& operator<<(std::ostream& os, Mod a) { return os << a.v_; }

private:
    static std::uint64_t check(std::uint64_t m) {
        if (m == 0) throw std::invalid_argument("Mod: modulus must be >= 1");
        return m;
    }
    static Mod raw(std::uint64_t v, std::uint64_t m) {
        Mod r(0, m);
        r.v_ = v;
        return r;
    }
    void match(Mod b) const {
        if (m_ != b.m_) throw std::invalid_argument("Mod: mixed moduli");
    }

    std::uint64_t v_;
    std::uint64_t m_;
};

inline Mod ring_zero(const Mod& a) { return Mod(0, a.modulus()); }
inline Mod ring_one(const Mod& a) { return Mod(1, a.modulus()); }
inline Mod ring_from(const Mod& a, long long v) { return Mod(v, a.modulus()); }
inline bool is_zero(const Mod& a) { return a.is_zero(); }
inline Mod ring_inv(const Mod& a) { return a.inv(); }
inline std::string ring_str(const Mod& a) { return std::to_string(a.value()); }

}  // namespace belltrace
