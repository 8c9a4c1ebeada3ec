#include <belltrace/arith.hpp>
#include <belltrace/quadratic.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace belltrace;

namespace {

// exact character-sum oracle for the imaginary class number:
// h(-p) = (sum_{0 < a < p/2} (a|p)) / (2 - (2|p))   for p = 3 mod 4, p > 3
std::int64_t h_imag_oracle(std::uint64_t p) {
    std::int64_t s = 0;
    for (std::uint64_t a = 1; a < (p + 1) / 2; ++a) s += legendre(Int(a), p);
    return s / (2 - legendre(Int(2), p));
}

// floating-point analytic class number oracle for the real field:
// h = sqrt(p) L(1, chi) / (2 ln eps),  L(1, chi) = -(1/sqrt(p)) sum chi(a) ln sin(pi a / p)
std::int64_t h_real_oracle(std::uint64_t p) {
    double L = 0;
    for (std::uint64_t a = 1; a < p; ++a)
        L -= legendre(Int(a), p) * std::log(std::sin(M_PI * static_cast<double>(a) / p));
    L /= std::sqrt(static_cast<double>(p));
    UnitData u = fundamental_unit(p);
    double eps = (u.t.convert_to<double>() + u.u.convert_to<double>() * std::sqrt(static_cast<double>(p))) / 2.0;
    return std::llround(std::sqrt(static_cast<double>(p)) * L / (2 * std::log(eps)));
}

}  // namespace

TEST_CASE("imaginary class numbers") {
    CHECK(class_number_imaginary(7) == 1);
    CHECK(class_number_imaginary(23) == 3);
    CHECK(class_number_imaginary(47) == 5);
    CHECK(class_number_imaginary(71) == 7);
    CHECK_THROWS_AS(class_number_imaginary(5), std::invalid_argument);
    CHECK_THROWS_AS(class_number_imaginary(3), std::invalid_argument);
    for (std::uint64_t p : primes_in(7, 199)) {
        if (p % 4 != 3) continue;
        CHECK(class_number_imaginary(p) == h_imag_oracle(p));
        CHECK(class_number_imaginary(p) % 2 == 1);
    }
}

TEST_CASE("fundamental units") {
    auto u5 = fundamental_unit(5);
    CHECK(u5.t == 1);
    CHECK(u5.u == 1);
    CHECK(u5.norm == -1);
    auto u13 = fundamental_unit(13);
    CHECK(u13.t == 3);
    CHECK(u13.u == 1);
    CHECK(u13.norm == -1);
    auto u29 = fundamental_unit(29);
    CHECK(u29.t == 5);
    CHECK(u29.u == 1);
    CHECK(u29.norm == -1);
    CHECK_THROWS_AS(fundamental_unit(7), std::invalid_argument);

    for (std::uint64_t p : primes_in(5, 97)) {
        if (p % 4 != 1) continue;
        UnitData u = fundamental_unit(p);
        CHECK(u.t > 0);
        CHECK(u.u > 0);
        CHECK(u.t * u.t - Int(p) * u.u * u.u == Int(4) * u.norm);
        // minimality: no smaller positive u solves t^2 - p u^2 = +-4
        for (Int uu = 1; uu < u.u && uu <= 10000; ++uu) {
            for (int s : {-4, 4}) {
                Int v = Int(p) * uu * uu + s;
                if (v < 0) continue;
                Int t = isqrt(v);
                CHECK(t * t != v);
            }
        }
    }
}

TEST_CASE("real class numbers via reduction cycles") {
    CHECK(class_number_real(5) == 1);
    CHECK(class_number_real(13) == 1);
    CHECK(class_number_real(229) == 3);
    CHECK_THROWS_AS(class_number_real(7), std::invalid_argument);
    for (std::uint64_t p : primes_in(5, 229)) {
        if (p % 4 != 1) continue;
        std::int64_t h = class_number_real(p);
        CHECK(h == h_real_oracle(p));
        CHECK(h % 2 == 1);
        CHECK(h >= 1);
        // for prime p the narrow and wide class numbers agree (norm -1 unit)
        CHECK(narrow_class_number(p) == h);
    }
}

TEST_CASE("class_data guards") {
    CHECK_THROWS_AS(class_data(3), std::invalid_argument);
    CHECK_THROWS_AS(class_data(2), std::invalid_argument);
    ClassData d5 = class_data(5);
    CHECK(d5.real);
    CHECK(d5.h == 1);
    CHECK(d5.unit.t == 1);
    ClassData d7 = class_data(7);
    CHECK_FALSE(d7.real);
    CHECK(d7.h == 1);
}

TEST_CASE("Mordell-Chowla congruence for ((p-1)/2)!") {
    // examples worked out by hand
    CHECK(mordell_chowla_rhs(5).value() == 2);    // (-1)^1 * 1 * inv(2) = -3 = 2; 2! = 2
    CHECK(mordell_chowla_rhs(7).value() == 6);    // (-1)^1 = 6 mod 7; 3! = 6
    CHECK(mordell_chowla_rhs(13).value() == 5);   // (-1)*3*inv(2) = -21 = 5; 6! = 720 = 5
    for (std::uint64_t p : primes_in(5, 97))
        CHECK(mordell_chowla_rhs(p) == factorial_mod((p - 1) / 2, p));
}
