#include <belltrace/arith.hpp>
#include <belltrace/ffield.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace belltrace;

namespace {

// independent trace oracle: sum of Frobenius images e^{p^i}
Mod trace_oracle(const FpElem& e) {
    FpElem acc = ff_zero(e.context());
    FpElem cur = e;
    for (std::size_t i = 0; i < e.context()->degree(); ++i) {
        acc += cur;
        cur = cur.frobenius();
    }
    for (std::size_t i = 1; i < acc.coeffs().size(); ++i) REQUIRE(acc.coeffs()[i].is_zero());
    return acc.coeffs()[0];
}

std::vector<FpElem> sample_elements(const FpCtx& ctx, int count) {
    std::vector<FpElem> out;
    std::uint64_t p = ctx->characteristic;
    std::uint64_t seed = 12345;
    for (int i = 0; i < count; ++i) {
        std::vector<Mod> c;
        for (std::size_t k = 0; k < ctx->degree(); ++k) {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            c.emplace_back(static_cast<std::int64_t>((seed >> 33) % p), p);
        }
        out.emplace_back(ctx, std::move(c));
    }
    return out;
}

}  // namespace

TEST_CASE("Artin-Schreier context basics") {
    // p = 2: theta^2 = theta + 1 in F_4, theta^3 = 1
    FpCtx f4 = artin_schreier_context(2);
    FpElem th2 = theta(f4);
    CHECK(th2 * th2 == th2 + ff_one(f4));
    CHECK(th2.pow(Int(3)) == ff_one(f4));

    // p = 3: defining relation theta^3 - theta - 1 = 0
    FpCtx f27 = artin_schreier_context(3);
    FpElem th3 = theta(f27);
    CHECK(th3.pow(Int(3)) - th3 - ff_one(f27) == ff_zero(f27));

    // theta^{k_p} = 1 (theta generates the norm-one subgroup of order k_p)
    CHECK(theta(f27).pow(Int(13)) == ff_one(f27));
    FpCtx f5 = artin_schreier_context(5);
    CHECK(theta(f5).pow(k_p(5)) == ff_one(f5));
    CHECK(theta(f5).pow(Int(781)) == ff_one(f5));

    CHECK(f5->artin_schreier);
    CHECK(f5->card == pow(Int(5), 5));
}

TEST_CASE("frobenius moves theta to theta + 1") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        FpCtx ctx = artin_schreier_context(p);
        CHECK(theta(ctx).frobenius() == theta(ctx) + ff_one(ctx));
    }
}

TEST_CASE("trace values from the trace-calculus lemma") {
    FpCtx ctx = artin_schreier_context(5);
    FpElem th = theta(ctx);
    for (int j = 0; j <= 3; ++j) CHECK(th.pow(Int(j)).trace().value() == 0);  // Tr(theta^j) = 0, j <= p-2
    CHECK(th.pow(Int(4)).trace().value() == 4);                               // Tr(theta^{p-1}) = -1
    CHECK(th.pow(Int(-1)).trace().value() == 4);                              // Tr(theta^{-1}) = -1
    CHECK(th.pow(Int(7)).trace().value() == 0);                               // Tr(theta^{2p-3}) = 0
}

TEST_CASE("trace equals the Frobenius-sum oracle") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        FpCtx ctx = artin_schreier_context(p);
        for (const FpElem& e : sample_elements(ctx, 25)) CHECK(e.trace() == trace_oracle(e));
    }
}

TEST_CASE("trace equals minus the top coefficient in AS contexts") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
        FpCtx ctx = artin_schreier_context(p);
        for (const FpElem& e : sample_elements(ctx, 25)) CHECK(e.trace() == e.trace_via_coefficient());
        FpElem th = theta(ctx);
        CHECK(th.pow(Int(p - 1)).trace_via_coefficient() == Mod(-1, p));
        CHECK(ff_one(ctx).trace_via_coefficient() == Mod(0, p));
        CHECK(th.pow(Int(2 * p - 3)).trace_via_coefficient() == Mod(0, p));
    }
    // wrong context
    auto [f9, zeta4] = cyclotomic_context(3, 4);
    CHECK_THROWS_AS(zeta4.trace_via_coefficient(), std::invalid_argument);
}

TEST_CASE("trace linearity and Frobenius invariance, norm multiplicativity") {
    FpCtx ctx = artin_schreier_context(5);
    auto es = sample_elements(ctx, 12);
    for (std::size_t i = 0; i + 1 < es.size(); i += 2) {
        const FpElem &a = es[i], &b = es[i + 1];
        CHECK((a + b).trace() == a.trace() + b.trace());
        CHECK(a.frobenius().trace() == a.trace());
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
    // norm(theta) = 1 for odd p: constant term of t^p - t - 1 is -1
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        FpCtx c = artin_schreier_context(p);
        CHECK(theta(c).norm() == Mod(1, p));
    }
}

TEST_CASE("pow handles identities, inverses and huge exponents") {
    FpCtx ctx = artin_schreier_context(5);
    FpElem th = theta(ctx);
    CHECK(th.pow(Int(0)) == ff_one(ctx));
    CHECK(th.pow(Int(-1)) * th == ff_one(ctx));
    CHECK_THROWS_AS(ff_zero(ctx).pow(Int(-2)), std::domain_error);
    CHECK(ff_zero(ctx).pow(Int(0)) == ff_one(ctx));
    CHECK(ff_zero(ctx).pow(Int(7)) == ff_zero(ctx));

    // theta lies in the norm-one subgroup of order k_p: exponents reduce mod k_p
    for (std::uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
        FpCtx c = artin_schreier_context(p);
        FpElem t = theta(c);
        Int kp = k_p(p);
        for (std::uint64_t a = 1; a <= 6; ++a) {
            if (a % p == 0) continue;
            Int e = zeta_exponent(p, a);
            CHECK(t.pow(e) == t.pow(e % kp));
            // Z_a = p^a tau: the two exponent routes land on the same element
            CHECK(t.pow(e) == t.pow(tau(p, a) * pow(Int(p), static_cast<unsigned>(a))));
            // conjugacy: theta^{Z_a} is a Frobenius image of theta^{tau}
            CHECK(t.pow(e).trace() == t.pow(tau(p, a)).trace());
        }
    }
}

TEST_CASE("cyclotomic contexts") {
    auto [f3, z2] = cyclotomic_context(3, 2);
    CHECK(f3->degree() == 1);
    CHECK(z2 == ff_scalar(f3, 2));  // -1 in F_3

    auto [f9, z4] = cyclotomic_context(3, 4);
    CHECK(f9->degree() == 2);
    CHECK(z4 * z4 == -ff_one(f9));  // zeta_4^2 = -1
    CHECK(z4.pow(Int(4)) == ff_one(f9));
    CHECK(z4.pow(Int(2)) != ff_one(f9));

    auto [f5, z1] = cyclotomic_context(5, 1);
    CHECK(f5->degree() == 1);
    CHECK(z1 == ff_one(f5));

    CHECK_THROWS_AS(cyclotomic_context(5, 10), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_context(5, 0), std::invalid_argument);

    // exact order for a few more n
    for (std::uint64_t n : {2ull, 3ull, 4ull, 6ull, 8ull}) {
        auto [ctx, z] = cyclotomic_context(7, n);
        CHECK(z.pow(Int(n)) == ff_one(ctx));
        for (std::uint64_t q = 2; q <= n; ++q)
            if (n % q == 0 && is_prime_u64(q)) CHECK(z.pow(Int(n / q)) != ff_one(ctx));
    }
}

TEST_CASE("reducible moduli are rejected") {
    // t^2 - 1 = (t-1)(t+1) over F_5
    CHECK_THROWS_AS(make_field_context<Mod>(Mod(1, 5), {Mod(-1, 5), Mod(0, 5)}, 5, Int(5)),
                    std::invalid_argument);
    // t^3 over F_3
    CHECK_THROWS_AS(make_field_context<Mod>(Mod(1, 3), {Mod(0, 3), Mod(0, 3), Mod(0, 3)}, 3, Int(3)),
                    std::invalid_argument);
    // t (t^2 + 1) over F_3, mixed factor degrees
    CHECK_THROWS_AS(make_field_context<Mod>(Mod(1, 3), {Mod(0, 3), Mod(1, 3), Mod(0, 3)}, 3, Int(3)),
                    std::invalid_argument);
    // t^2 + 1 over F_3 is fine
    auto ok = make_field_context<Mod>(Mod(1, 3), {Mod(1, 3), Mod(0, 3)}, 3, Int(3));
    CHECK(ok->degree() == 2);
}

TEST_CASE("solve_artin_schreier: split case in the base field") {
    // t^3 - t = 0 over F_3: roots {0, 1, 2}
    auto [f3, unused] = cyclotomic_context(3, 1);
    auto res = solve_artin_schreier(f3, ff_zero(f3));
    REQUIRE(res.split);
    REQUIRE(res.roots.size() == 3);
    for (std::uint64_t j = 0; j < 3; ++j) CHECK(res.roots[j] == ff_scalar(f3, static_cast<long long>(j)));
}

TEST_CASE("solve_artin_schreier: irreducible branch recovers the AS tower") {
    auto [f5, unused] = cyclotomic_context(5, 1);
    auto res = solve_artin_schreier(f5, ff_one(f5));
    REQUIRE_FALSE(res.split);
    REQUIRE(res.ext_root.has_value());
    TowerElem th = *res.ext_root;
    // theta^5 = theta + 1, matching the F_{5^5} defining relation
    CHECK(th.pow(Int(5)) == th + ff_one(res.extension));
    CHECK(res.extension->card == pow(Int(5), 5));
    // same trace as the direct Artin-Schreier context
    FpCtx direct = artin_schreier_context(5);
    CHECK(abs_trace(th.pow(Int(7))).value() == theta(direct).pow(Int(7)).trace().value());
}

TEST_CASE("solve_artin_schreier: split case inside F_9") {
    auto [f9, z4] = cyclotomic_context(3, 4);
    // Tr_{F_9/F_3}(zeta_4) = zeta_4 + zeta_4^3 = 0, so three roots live in F_9
    REQUIRE(z4.trace().value() == 0);
    auto res = solve_artin_schreier(f9, z4);
    REQUIRE(res.split);
    REQUIRE(res.roots.size() == 3);
    for (const FpElem& r : res.roots) CHECK(r.pow(Int(3)) - r == z4);
    // pairwise distinct, differing by prime-field elements
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            CHECK(res.roots[i] != res.roots[j]);
            FpElem d = res.roots[i] - res.roots[j];
            for (std::size_t k = 1; k < d.coeffs().size(); ++k) CHECK(d.coeffs()[k].is_zero());
        }
}

TEST_CASE("tower traces agree with explicit Frobenius sums") {
    // degree-3 Artin-Schreier tower over F_9 from a nonzero-trace constant
    auto [f9, z4] = cyclotomic_context(3, 4);
    FpElem c = z4 + ff_one(f9);  // Tr(z4) = 0, Tr(1) = 2 != 0
    REQUIRE(c.trace().value() != 0);
    auto res = solve_artin_schreier(f9, c);
    REQUIRE_FALSE(res.split);
    TowerCtx L = res.extension;
    TowerElem th = *res.ext_root;
    std::vector<TowerElem> samples{th, th * th + ff_one(L), th.pow(Int(17)), th + ff_from_base(L, z4)};
    for (const TowerElem& e : samples) {
        // relative trace to F_9: sum of e^{9^i}, i < 3
        TowerElem acc = ff_zero(L);
        TowerElem cur = e;
        for (int i = 0; i < 3; ++i) {
            acc += cur;
            cur = cur.pow(Int(9));
        }
        for (std::size_t i = 1; i < acc.coeffs().size(); ++i) REQUIRE(acc.coeffs()[i].is_zero());
        CHECK(e.trace() == acc.coeffs()[0]);
        // absolute trace to F_3: sum of e^{3^i}, i < 6
        TowerElem abs_acc = ff_zero(L);
        cur = e;
        for (int i = 0; i < 6; ++i) {
            abs_acc += cur;
            cur = cur.frobenius();
        }
        for (std::size_t i = 1; i < abs_acc.coeffs().size(); ++i) REQUIRE(abs_acc.coeffs()[i].is_zero());
        const FpElem& base = abs_acc.coeffs()[0];
        for (std::size_t i = 1; i < base.coeffs().size(); ++i) REQUIRE(base.coeffs()[i].is_zero());
        CHECK(abs_trace(e) == base.coeffs()[0]);
    }
}

TEST_CASE("mixed-context arithmetic is rejected") {
    FpCtx a = artin_schreier_context(3);
    auto [b, z] = cyclotomic_context(3, 4);
    CHECK_THROWS_AS(theta(a) + z, std::invalid_argument);
}
