#pragma once

// Truncated formal power series in z over a coefficient ring R, with exactly
// `precision` stored coefficients. Multiplication truncates; inversion needs a
// unit constant term.

#include "belltrace/poly.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace belltrace {

template <class R>
class Series {
public:
    // Pads with zeros derived from the first coefficient; a series cannot be
    // built from nothing, so at least one coefficient is required.
    Series(std::vector<R> coeffs, std::size_t precision) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Series: need at least one coefficient");
        if (precision == 0) throw std::invalid_argument("Series: precision must be positive");
        R z = ring_zero(c_[0]);
        c_.resize(precision, z);
    }
    static Series from_poly(const Poly<R>& p, const R& sample, std::size_t precision) {
        std::vector<R> v = p.coeffs();
        if (v.empty()) v.push_back(ring_zero(sample));
        if (v.size() > precision) v.resize(precision, v[0]);
        return Series(std::move(v), precision);
    }

    std::size_t precision() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](std::size_t i) const { return c_[i]; }

    friend Series operator+(const Series& a, const Series& b) {
        std::size_t n = std::min(a.precision(), b.precision());
        std::vector<R> r;
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.c_[i] + b.c_[i]);
        return Series(std::move(r), n);
    }
    friend Series operator-(const Series& a, const Series& b) {
        std::size_t n = std::min(a.precision(), b.precision());
        std::vector<R> r;
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.c_[i] - b.c_[i]);
        return Series(std::move(r), n);
    }
    friend Series operator*(const Series& a, const Series& b) {
        std::size_t n = std::min(a.precision(), b.precision());
        R z = ring_zero(a.c_[0]);
        std::vector<R> r(n, z);
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j + i < n; ++j) {
                if (is_zero(b.c_[j])) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Series(std::move(r), n);
    }
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    // Multiplicative inverse: (s * s.inverse()) == 1 + O(z^N).
    Series inverse() const {
        R c0inv = ring_inv(c_[0]);  // throws when the constant term is not a unit
        std::size_t n = precision();
        std::vector<R> r;
        r.reserve(n);
        r.push_back(c0inv);
        for (std::size_t k = 1; k < n; ++k) {
            R acc = ring_zero(c_[0]);
            for (std::size_t i = 1; i <= k; ++i) {
                if (is_zero(c_[i])) continue;
                acc += c_[i] * r[k - i];
            }
            r.push_back((ring_zero(acc) - acc) * c0inv);
        }
        return Series(std::move(r), n);
    }

    bool is_zero_series() const {
        for (const R& c : c_)
            if (!is_zero(c)) return false;
        return true;
    }

private:
    std::vector<R> c_;
};

template <class R>
std::optional<std::size_t> first_mismatch(const Series<R>& a, const Series<R>& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    for (std::size_t i = 0; i < n; ++i)
        if (!(a[i] == b[i])) return i;
    return std::nullopt;
}

// Expansion of numerator/denominator to N terms. The denominator's constant
// term must be a unit of R; postcondition: numerator - denominator * result
// vanishes to O(z^N).
template <class R>
Series<R> series_of_rational(const Poly<R>& num, const Poly<R>& den, const R& sample, std::size_t precision) {
    if (den.zero() || is_zero(den.coeffs()[0]))
        throw std::domain_error("series_of_rational: denominator constant term is zero");
    Series<R> n = Series<R>::from_poly(num, sample, precision);
    Series<R> d = Series<R>::from_poly(den, sample, precision);
    return n * d.inverse();
}

}  // namespace belltrace
