#include <belltrace/arith.hpp>
#include <belltrace/bigint.hpp>
#include <belltrace/modint.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace belltrace;

namespace {

// brute-force quadratic-residue oracle
int legendre_oracle(std::int64_t a, std::uint64_t p) {
    std::uint64_t r = ((a % static_cast<std::int64_t>(p)) + p) % p;
    if (r == 0) return 0;
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    return squares.count(r) ? 1 : -1;
}

}  // namespace

TEST_CASE("legendre symbol") {
    CHECK(legendre(Int(1), 5) == 1);
    CHECK(legendre(Int(3), 5) == -1);   // 3^2 = 4 = -1 mod 5
    CHECK(legendre(Int(2), 7) == 1);    // squares mod 7: {1,2,4}
    CHECK(legendre(Int(10), 5) == 0);
    CHECK_THROWS_AS(legendre(Int(1), 6), std::invalid_argument);
    CHECK_THROWS_AS(legendre(Int(1), 2), std::invalid_argument);

    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 31ull})
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a)
            CHECK(legendre(Int(a), p) == legendre_oracle(a, p));
}

TEST_CASE("legendre multiplicativity") {
    for (std::uint64_t p : {5ull, 13ull, 31ull})
        for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a)
            for (std::int64_t b = 1; b < static_cast<std::int64_t>(p); ++b)
                CHECK(legendre(Int(a), p) * legendre(Int(b), p) == legendre(Int(a) * b, p));
}

TEST_CASE("tau") {
    CHECK(tau(2, 1) == 1);
    CHECK(tau(3, 1) == 7);     // 1 + 2*3
    CHECK(tau(5, 1) == 586);   // 1 + 2*5 + 3*25 + 4*125
    // direct-sum oracle
    for (std::uint64_t p : {3ull, 7ull, 11ull})
        for (std::uint64_t a = 1; a <= 4; ++a) {
            Int expect = 0;
            for (std::uint64_t j = 1; j < p; ++j) expect += Int(j) * pow(Int(p), static_cast<unsigned>(j * a - 1));
            CHECK(tau(p, a) == expect);
        }
    CHECK_THROWS_AS(tau(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(tau(5, 0), std::invalid_argument);
}

TEST_CASE("k_p") {
    CHECK(k_p(2) == 3);
    CHECK(k_p(3) == 13);
    CHECK(k_p(5) == 781);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 13ull, 31ull})
        CHECK(Int(p - 1) * k_p(p) == pow(Int(p), static_cast<unsigned>(p)) - 1);
}

TEST_CASE("zeta exponent") {
    CHECK(zeta_exponent(3, 1) == 21);  // 1*3 + 2*9
    CHECK(zeta_exponent(2, 1) == 2);
    CHECK(zeta_exponent(3, 1) % k_p(3) == 8);
    CHECK(Int(3) * tau(3, 1) % k_p(3) == 8);
    CHECK_THROWS_AS(zeta_exponent(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(zeta_exponent(5, 10), std::invalid_argument);

    // Z_a = p^a tau_p(a), and Z_a (p^a - 1) = p^a mod k_p
    for (std::uint64_t p : {3ull, 5ull, 7ull, 13ull})
        for (std::uint64_t a = 1; a <= 6; ++a) {
            if (a % p == 0) continue;
            Int za = zeta_exponent(p, a);
            Int pa = pow(Int(p), static_cast<unsigned>(a));
            CHECK(za == pa * tau(p, a));
            CHECK(za * (pa - 1) % k_p(p) == pa % k_p(p));
        }
}

TEST_CASE("inverse lemma: tau_p(a) (p^a - 1) = 1 mod k_p") {
    for (std::uint64_t p : primes_in(2, 31))
        for (std::uint64_t a = 1; a <= 12; ++a) {
            if (a % p == 0) continue;
            Int prod = tau(p, a) * (pow(Int(p), static_cast<unsigned>(a)) - 1);
            CHECK(prod % k_p(p) == 1);
        }
}

TEST_CASE("tau mod p-1 is (p-1)/2 for odd p") {
    for (std::uint64_t p : primes_in(3, 31))
        for (std::uint64_t a = 1; a <= 12; ++a) {
            if (a % p == 0) continue;
            CHECK(tau(p, a) % (p - 1) == (p - 1) / 2);
        }
}

TEST_CASE("power sums") {
    CHECK(power_sum(4, 5).value() == 4);  // 0+1+16+81+256 = 354 = 4 mod 5
    CHECK(power_sum(2, 5).value() == 0);
    CHECK(power_sum(0, 5).value() == 0);
    // exact-integer oracle + the appendix case split
    for (std::uint64_t p : primes_in(2, 31))
        for (std::uint64_t j = 0; j <= 2 * (p - 1); ++j) {
            Int exact = 0;
            for (std::uint64_t m = 0; m < p; ++m) exact += pow(Int(m), static_cast<unsigned>(j));
            CHECK(power_sum(j, p).value() == residue(exact, p));
            std::uint64_t expect = (j > 0 && j % (p - 1) == 0) ? p - 1 : 0;
            CHECK(power_sum(j, p).value() == expect);
        }
}

TEST_CASE("factorials and binomials") {
    CHECK(binomial_mod(Int(4), Int(2), 5).value() == 1);
    CHECK(factorial_mod(3, 7).value() == 6);
    CHECK(binomial_mod(Int(7), Int(1), 7).value() == 0);
    CHECK(binomial(Int(10), Int(3)) == 120);
    CHECK(binomial(Int(10), Int(11)) == 0);

    // Lucas vs exact reduction
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        for (int n = 0; n <= 40; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(binomial_mod(Int(n), Int(k), p).value() == residue(binomial(Int(n), Int(k)), p));
    // huge indices decompose digitwise (Lucas)
    for (std::uint64_t p : {3ull, 5ull, 13ull}) {
        Int n = pow(Int(p), 3) + 2;  // digits (2, 0, 0, 1)
        Int k = Int(p) + 1;          // digits (1, 1)
        CHECK(binomial_mod(n, k, p).value() == 0);  // C(0,1) = 0 in the middle digit
        CHECK(binomial_mod(n, Int(p) + 2, p).value() == 0);
        CHECK(binomial_mod(pow(Int(p), 3) + p, Int(p), p).value() == 1);  // digitwise C(2,0)C(0,0)C(1,1)... = 1
    }
}

TEST_CASE("primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(61));
    CHECK(is_prime_u64(9223372036854775783ull));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));  // Carmichael
    CHECK(primes_in(5, 13) == std::vector<std::uint64_t>{5, 7, 11, 13});
}

TEST_CASE("Mod basics") {
    Mod a(10, 7);
    CHECK(a.value() == 3);
    CHECK((Mod(-1, 7)).value() == 6);
    CHECK((a * a.inv()).value() == 1);
    CHECK_THROWS_AS(Mod(2, 4).inv(), std::domain_error);
    CHECK(Mod(2, 4).is_unit() == false);
    CHECK(Mod(3, 4).is_unit());
    CHECK_THROWS_AS(Mod(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Mod(1, 5) + Mod(1, 7), std::invalid_argument);
    // zero ring
    Mod z(3, 1);
    CHECK(z.value() == 0);
    CHECK(z.is_unit());
    CHECK(z.inv().value() == 0);
    // big reduction
    CHECK(Mod::reduce(pow(Int(10), 30) + 3, 7).value() == (pow_mod(10 % 7, 30, 7) + 3) % 7);
}
