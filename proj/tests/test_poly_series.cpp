#include <belltrace/bigint.hpp>
#include <belltrace/modint.hpp>
#include <belltrace/poly.hpp>
#include <belltrace/series.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace belltrace;

namespace {

// deterministic LCG so the randomized cases are reproducible
struct Lcg {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
};

Poly<Mod> random_poly(Lcg& g, std::uint64_t m, std::size_t maxdeg) {
    std::vector<Mod> c;
    std::size_t d = g.next() % (maxdeg + 1);
    for (std::size_t i = 0; i <= d; ++i) c.emplace_back(static_cast<std::int64_t>(g.next() % m), m);
    return Poly<Mod>(std::move(c));
}

// naive convolution oracle
Poly<Mod> naive_mul(const Poly<Mod>& a, const Poly<Mod>& b, std::uint64_t m) {
    if (a.zero() || b.zero()) return Poly<Mod>();
    std::vector<Mod> r(a.coeffs().size() + b.coeffs().size() - 1, Mod(0, m));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a[i] * b[j];
    return Poly<Mod>(std::move(r));
}

// schoolbook long division of num by den to n terms (series oracle)
std::vector<Mod> long_division(std::vector<Mod> num, const std::vector<Mod>& den, std::size_t n) {
    std::uint64_t m = den[0].modulus();
    num.resize(n, Mod(0, m));
    std::vector<Mod> q;
    for (std::size_t k = 0; k < n; ++k) {
        Mod c = num[k] * den[0].inv();
        q.push_back(c);
        for (std::size_t i = 0; i < den.size() && k + i < n; ++i) num[k + i] -= c * den[i];
    }
    return q;
}

}  // namespace

TEST_CASE("poly arithmetic against naive oracle") {
    Lcg g;
    for (int trial = 0; trial < 200; ++trial) {
        Poly<Mod> a = random_poly(g, 7, 6), b = random_poly(g, 7, 6);
        CHECK(a * b == naive_mul(a, b, 7));
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("poly normalization and degree") {
    Poly<Mod> z(std::vector<Mod>{Mod(0, 5), Mod(0, 5)});
    CHECK(z.zero());
    CHECK(z.degree() == -1);
    Poly<Mod> a(std::vector<Mod>{Mod(1, 5), Mod(2, 5), Mod(0, 5)});
    CHECK(a.degree() == 1);
    CHECK(a.eval(Mod(3, 5)).value() == (1 + 2 * 3) % 5);
    CHECK(a.shifted(2).degree() == 3);
    CHECK(Poly<Mod>::monomial(Mod(0, 5), 4).zero());
}

TEST_CASE("poly divmod over a field") {
    Lcg g;
    for (int trial = 0; trial < 100; ++trial) {
        Poly<Mod> a = random_poly(g, 13, 8), b = random_poly(g, 13, 4);
        if (b.zero()) continue;
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(poly_divmod(random_poly(g, 13, 3), Poly<Mod>()), std::domain_error);
}

TEST_CASE("poly gcd over a field") {
    Lcg g;
    for (int trial = 0; trial < 50; ++trial) {
        Poly<Mod> f = random_poly(g, 5, 4), h = random_poly(g, 5, 4), c = random_poly(g, 5, 3);
        if (c.zero()) continue;
        Poly<Mod> d = poly_gcd(f * c, h * c);
        // c divides the gcd
        if (!d.zero()) CHECK(poly_divmod(d, c.scaled(ring_inv(c.leading()))).second.zero());
    }
}

TEST_CASE("exact integer polynomial division") {
    Poly<Int> a(std::vector<Int>{Int(2), Int(3)});
    Poly<Int> b(std::vector<Int>{Int(-1), Int(1), Int(5)});
    CHECK(exact_quot(a * b, b) == a);
    Poly<Int> bad(std::vector<Int>{Int(1), Int(2)});
    CHECK_THROWS_AS(exact_quot(a * b + Poly<Int>::constant(Int(1)), b), std::domain_error);
    (void)bad;
}

TEST_CASE("geometric series") {
    // 1/(1-z) = 1 + z + z^2 + z^3 + O(z^4)
    Mod one(1, 97);
    auto s = series_of_rational(Poly<Mod>::constant(one), Poly<Mod>(std::vector<Mod>{one, Mod(-1, 97)}),
                                one, 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(s[i].value() == 1);
}

TEST_CASE("1/(1 - lam z) expands to powers of lam") {
    using L = Poly<Rat>;
    L lone = L::constant(Rat(1));
    L lam = L::monomial(Rat(1), 1);
    auto s = series_of_rational(Poly<L>::constant(lone), Poly<L>(std::vector<L>{lone, -lam}), lone, 3);
    CHECK(s[0] == lone);
    CHECK(s[1] == lam);
    CHECK(s[2] == lam * lam);
}

TEST_CASE("series expansion matches long division") {
    // z/(1 - 2z) to N = 3: z + 2 z^2
    Mod one(1, 101);
    std::vector<Mod> num{Mod(0, 101), one};
    std::vector<Mod> den{one, Mod(-2, 101)};
    auto s = series_of_rational(Poly<Mod>(num), Poly<Mod>(den), one, 3);
    auto oracle = long_division(num, den, 3);
    CHECK(s[0] == oracle[0]);
    CHECK(s[1] == oracle[1]);
    CHECK(s[2] == oracle[2]);
    CHECK(s[1].value() == 1);
    CHECK(s[2].value() == 2);

    Lcg g;
    for (int trial = 0; trial < 100; ++trial) {
        Poly<Mod> a = random_poly(g, 101, 5);
        Poly<Mod> b = random_poly(g, 101, 5);
        if (b.zero() || b[0].is_zero()) continue;
        auto got = series_of_rational(a, b, one, 12);
        std::vector<Mod> nc = a.coeffs();
        if (nc.empty()) nc.push_back(Mod(0, 101));
        auto want = long_division(nc, b.coeffs(), 12);
        for (std::size_t i = 0; i < 12; ++i) CHECK(got[i] == want[i]);
    }
}

TEST_CASE("series inverse contract") {
    Lcg g;
    Mod one(1, 13);
    for (int trial = 0; trial < 60; ++trial) {
        Poly<Mod> b = random_poly(g, 13, 6);
        if (b.zero() || b[0].is_zero()) continue;
        Series<Mod> s = Series<Mod>::from_poly(b, one, 10);
        Series<Mod> t = s * s.inverse();
        CHECK(t[0].value() == 1);
        for (std::size_t i = 1; i < 10; ++i) CHECK(t[i].is_zero());
    }
    // non-unit constant term
    Series<Mod> bad(std::vector<Mod>{Mod(0, 13), Mod(1, 13)}, 4);
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);
    CHECK_THROWS_AS(series_of_rational(Poly<Mod>::constant(one),
                                       Poly<Mod>(std::vector<Mod>{Mod(0, 13), one}), one, 4),
                    std::domain_error);
    // num - den * result = O(z^N)
    for (int trial = 0; trial < 60; ++trial) {
        Poly<Mod> a = random_poly(g, 13, 6), b = random_poly(g, 13, 6);
        if (b.zero() || !b[0].is_unit()) continue;
        auto res = series_of_rational(a, b, one, 9);
        auto lhs = Series<Mod>::from_poly(a, one, 9);
        auto prod = Series<Mod>::from_poly(b, one, 9) * res;
        CHECK(first_mismatch(lhs, prod) == std::nullopt);
    }
}

TEST_CASE("canonical rendering") {
    Poly<Mod> a(std::vector<Mod>{Mod(1, 7), Mod(2, 7), Mod(0, 7), Mod(1, 7)});
    CHECK(ring_str_poly(a, "x") == "x^3 + 2*x + 1");
    CHECK(ring_str_poly(Poly<Mod>(), "x") == "0");
    Poly<Poly<Mod>> b(std::vector<Poly<Mod>>{Poly<Mod>(), Poly<Mod>(std::vector<Mod>{Mod(1, 7), Mod(2, 7)})});
    CHECK(ring_str(b) == "(2*lam + 1)*x");
    CHECK(ring_str(Int(-12)) == "-12");
    CHECK(ring_str(Rat(3, 4)) == "3/4");
}
