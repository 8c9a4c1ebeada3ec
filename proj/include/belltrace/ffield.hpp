#pragma once

// Finite extension fields as quotient rings R[t]/(m(t)) with m monic
// irreducible over the coefficient field R. R = Mod gives F_{p^f}; nesting
// R = FFElem<Mod> gives the degree-p Artin-Schreier towers over F_{p^f} used
// by the intermediate-proposition checks.
//
// Contexts are immutable after construction and shared by shared_ptr; element
// arithmetic never mixes contexts. Construction always verifies
// irreducibility (gcd(t^{q^i} - t, m) = 1 for i <= f/2 and t^{q^f} = t); a
// reducible modulus is a hard error.

#include "belltrace/arith.hpp"
#include "belltrace/bigint.hpp"
#include "belltrace/modint.hpp"
#include "belltrace/poly.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace belltrace {

template <class R>
class FFElem;

template <class R>
struct FieldCtx {
    explicit FieldCtx(R one) : base_one(std::move(one)) {}

    R base_one;
    std::vector<R> modulus_tail;  // m(t) = t^f + sum_i modulus_tail[i] t^i
    std::uint64_t characteristic = 0;
    Int base_card;   // |R|
    Int card;        // |R|^f
    Int unit_order;  // card - 1
    bool sparse = false;  // m(t) = t^f - t - c, linear-time reduction
    bool artin_schreier = false;  // sparse with f == p and c == 1
    std::vector<R> basis_traces;  // Tr(t^i) for i < f, from Newton's identities

    std::size_t degree() const { return modulus_tail.size(); }

    bool same_as(const FieldCtx& o) const {
        return characteristic == o.characteristic && base_card == o.base_card &&
               modulus_tail == o.modulus_tail;
    }
};

// Square-and-multiply in R[t]/(m); the exponent is used as-is (no reduction by
// a group order, so this is sound in non-field quotients too).
template <class R>
Poly<R> poly_powmod(const Poly<R>& base, Int e, const Poly<R>& m) {
    if (e < 0) throw std::domain_error("poly_powmod: negative exponent");
    Poly<R> one = Poly<R>::constant(ring_one(m.leading()));
    if (e == 0) return one;
    Poly<R> r = poly_divmod(base, m).second;
    for (long i = static_cast<long>(boost::multiprecision::msb(e)) - 1; i >= 0; --i) {
        r = poly_divmod(r * r, m).second;
        if (bit_test(e, static_cast<unsigned>(i))) r = poly_divmod(r * base, m).second;
    }
    return r;
}

namespace detail {

template <class R>
void verify_irreducible(const std::vector<R>& tail, const R& one, const Int& base_card) {
    std::size_t f = tail.size();
    std::vector<R> mc = tail;
    mc.push_back(one);
    Poly<R> m(mc);
    Poly<R> t = Poly<R>::monomial(one, 1);
    Poly<R> u = t;
    for (std::size_t i = 1; i <= f; ++i) {
        u = poly_powmod(u, base_card, m);
        if (i <= f / 2) {
            Poly<R> g = poly_gcd(u - t, m);
            if (g.degree() != 0)
                throw std::invalid_argument("field modulus is reducible");
        }
    }
    if (!(poly_divmod(u - t, m).second.zero()))
        throw std::invalid_argument("field modulus is reducible (t^{q^f} != t)");
}

template <class R>
std::vector<R> newton_basis_traces(const std::vector<R>& tail, const R& one) {
    std::size_t f = tail.size();
    std::vector<R> s;
    s.reserve(f);
    s.push_back(ring_from(one, static_cast<long long>(f)));
    for (std::size_t k = 1; k < f; ++k) {
        R acc = ring_from(one, static_cast<long long>(k)) * tail[f - k];
        for (std::size_t i = 1; i < k; ++i) acc += tail[f - i] * s[k - i];
        s.push_back(ring_zero(one) - acc);
    }
    return s;
}

}  // namespace detail

// Builds a field context over base field R; `tail` holds the non-leading
// coefficients of the monic modulus. Throws on a reducible modulus.
template <class R>
std::shared_ptr<const FieldCtx<R>> make_field_context(R base_one, std::vector<R> tail,
                                                      std::uint64_t characteristic, Int base_card) {
    if (tail.empty()) throw std::invalid_argument("field modulus must have degree >= 1");
    detail::verify_irreducible(tail, base_one, base_card);
    auto ctx = std::make_shared<FieldCtx<R>>(base_one);
    ctx->modulus_tail = std::move(tail);
    ctx->characteristic = characteristic;
    ctx->base_card = base_card;
    ctx->card = pow(base_card, static_cast<unsigned>(ctx->modulus_tail.size()));
    ctx->unit_order = ctx->card - 1;
    std::size_t f = ctx->modulus_tail.size();
    R zero = ring_zero(base_one);
    R minus_one = zero - base_one;
    ctx->sparse = f >= 2 && ctx->modulus_tail[1] == minus_one;
    for (std::size_t i = 2; i < f && ctx->sparse; ++i)
        if (!is_zero(ctx->modulus_tail[i])) ctx->sparse = false;
    if (ctx->sparse) {
        ctx->artin_schreier =
            f == characteristic && ctx->modulus_tail[0] == minus_one;
    }
    ctx->basis_traces = detail::newton_basis_traces(ctx->modulus_tail, base_one);
    return ctx;
}

template <class R>
class FFElem {
public:
    using Ctx = std::shared_ptr<const FieldCtx<R>>;

    FFElem(Ctx ctx, std::vector<R> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        if (c_.size() != ctx_->degree()) throw std::invalid_argument("FFElem: wrong coefficient count");
    }

    const Ctx& context() const { return ctx_; }
    const std::vector<R>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const R& x : c_)
            if (!detail::ring_is_zero(x)) return false;
        return true;
    }

    friend FFElem operator+(const FFElem& a, const FFElem& b) {
        a.match(b);
        std::vector<R> r;
        r.reserve(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.push_back(a.c_[i] + b.c_[i]);
        return FFElem(a.ctx_, std::move(r));
    }
    friend FFElem operator-(const FFElem& a, const FFElem& b) {
        a.match(b);
        std::vector<R> r;
        r.reserve(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.push_back(a.c_[i] - b.c_[i]);
        return FFElem(a.ctx_, std::move(r));
    }
    friend FFElem operator-(const FFElem& a) {
        std::vector<R> r;
        r.reserve(a.c_.size());
        for (const R& x : a.c_) r.push_back(ring_zero(x) - x);
        return FFElem(a.ctx_, std::move(r));
    }
    friend FFElem operator*(const FFElem& a, const FFElem& b) {
        a.match(b);
        if constexpr (std::is_same_v<R, Mod>) {
            if (a.fits_raw()) return mul_raw(a, b);
        }
        return mul_generic(a, b);
    }
    FFElem& operator+=(const FFElem& b) { return *this = *this + b; }
    FFElem& operator-=(const FFElem& b) { return *this = *this - b; }
    FFElem& operator*=(const FFElem& b) { return *this = *this * b; }
    friend bool operator==(const FFElem& a, const FFElem& b) {
        return (a.ctx_ == b.ctx_ || a.ctx_->same_as(*b.ctx_)) && a.c_ == b.c_;
    }
    friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }

    // e^n with the exponent reduced mod card - 1 (negative exponents wrap to
    // the positive representative). Zero base: 0^0 = 1, 0^positive = 0,
    // 0^negative is a division-by-zero error.
    FFElem pow(Int n) const {
        if (is_zero()) {
            if (n == 0) return one_like();
            if (n < 0) throw std::domain_error("pow: zero base with negative exponent");
            return *this;
        }
        Int e = n % ctx_->unit_order;
        if (e < 0) e += ctx_->unit_order;
        if (e == 0) return one_like();
        FFElem r = *this;
        for (long i = static_cast<long>(boost::multiprecision::msb(e)) - 1; i >= 0; --i) {
            r = r * r;
            if (bit_test(e, static_cast<unsigned>(i))) r = r * *this;
        }
        return r;
    }

    FFElem inv() const {
        if (is_zero()) throw std::domain_error("inv: zero element");
        return pow(ctx_->card - 2);
    }

    // x -> x^p, the absolute Frobenius.
    FFElem frobenius() const { return pow(Int(ctx_->characteristic)); }

    // Trace to the base field R (for R = Mod this is the F_p trace).
    R trace() const {
        R acc = ring_zero(ctx_->base_one);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (detail::ring_is_zero(c_[i])) continue;
            acc += c_[i] * ctx_->basis_traces[i];
        }
        return acc;
    }

    // Norm to the base field R.
    R norm() const {
        if (is_zero()) return ring_zero(ctx_->base_one);
        Int e = ctx_->unit_order / (ctx_->base_card - 1);
        FFElem n = pow(e);
        for (std::size_t i = 1; i < n.c_.size(); ++i)
            if (!detail::ring_is_zero(n.c_[i])) throw std::logic_error("norm: result not in base field");
        return n.c_[0];
    }

    // Artin-Schreier shortcut: Tr(e) = -(coefficient of t^{p-1}).
    R trace_via_coefficient() const {
        if (!ctx_->artin_schreier)
            throw std::invalid_argument("trace_via_coefficient: not an Artin-Schreier context");
        return ring_zero(ctx_->base_one) - c_.back();
    }

    FFElem one_like() const {
        std::vector<R> r(c_.size(), ring_zero(ctx_->base_one));
        r[0] = ctx_->base_one;
        return FFElem(ctx_, std::move(r));
    }

private:
    void match(const FFElem& b) const {
        if (ctx_ != b.ctx_ && !ctx_->same_as(*b.ctx_))
            throw std::invalid_argument("FFElem: mixed field contexts");
    }

    bool fits_raw() const {
        std::uint64_t p = 0;
        for (const R& x : c_) {
            if constexpr (std::is_same_v<R, Mod>) p = x.modulus();
            break;
        }
        // accumulated convolution sums must stay below 2^63
        return p > 0 && p < (1u << 21) && c_.size() < (1u << 20);
    }

    static FFElem mul_raw(const FFElem& a, const FFElem& b) {
        const std::size_t f = a.c_.size();
        const std::uint64_t p = a.c_[0].modulus();
        std::vector<std::uint64_t> r(2 * f - 1, 0);
        for (std::size_t i = 0; i < f; ++i) {
            std::uint64_t ai = a.c_[i].value();
            if (!ai) continue;
            for (std::size_t j = 0; j < f; ++j) r[i + j] += ai * b.c_[j].value();
        }
        for (auto& v : r) v %= p;
        const auto& tail = a.ctx_->modulus_tail;
        if (a.ctx_->sparse) {
            std::uint64_t c = (p - tail[0].value()) % p;  // m = t^f - t - c
            for (std::size_t k = 2 * f - 2; k >= f; --k) {
                std::uint64_t v = r[k];
                if (v) {
                    r[k - f + 1] = (r[k - f + 1] + v) % p;
                    r[k - f] = (r[k - f] + v * c) % p;
                }
                r[k] = 0;
                if (k == f) break;
            }
        } else {
            for (std::size_t k = 2 * f - 2; k >= f; --k) {
                std::uint64_t v = r[k];
                if (v) {
                    for (std::size_t i = 0; i < f; ++i) {
                        std::uint64_t sub = mul_mod(v, tail[i].value(), p);
                        r[k - f + i] = (r[k - f + i] + p - sub) % p;
                    }
                }
                r[k] = 0;
                if (k == f) break;
            }
        }
        std::vector<Mod> out;
        out.reserve(f);
        for (std::size_t i = 0; i < f; ++i) out.emplace_back(static_cast<std::int64_t>(r[i]), p);
        return FFElem(a.ctx_, std::move(out));
    }

    static FFElem mul_generic(const FFElem& a, const FFElem& b) {
        const std::size_t f = a.c_.size();
        R zero = ring_zero(a.ctx_->base_one);
        std::vector<R> r(2 * f - 1, zero);
        for (std::size_t i = 0; i < f; ++i) {
            if (detail::ring_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < f; ++j) {
                if (detail::ring_is_zero(b.c_[j])) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        const auto& tail = a.ctx_->modulus_tail;
        for (std::size_t k = 2 * f - 2; k >= f; --k) {
            if (!detail::ring_is_zero(r[k])) {
                for (std::size_t i = 0; i < f; ++i) r[k - f + i] -= r[k] * tail[i];
            }
            r[k] = zero;
            if (k == f) break;
        }
        r.resize(f, zero);
        return FFElem(a.ctx_, std::move(r));
    }

    Ctx ctx_;
    std::vector<R> c_;
};

// ---- element factories ----

template <class R>
FFElem<R> ff_zero(const std::shared_ptr<const FieldCtx<R>>& ctx) {
    return FFElem<R>(ctx, std::vector<R>(ctx->degree(), ring_zero(ctx->base_one)));
}
template <class R>
FFElem<R> ff_from_base(const std::shared_ptr<const FieldCtx<R>>& ctx, R v) {
    std::vector<R> c(ctx->degree(), ring_zero(ctx->base_one));
    c[0] = std::move(v);
    return FFElem<R>(ctx, std::move(c));
}
template <class R>
FFElem<R> ff_one(const std::shared_ptr<const FieldCtx<R>>& ctx) {
    return ff_from_base(ctx, ctx->base_one);
}
template <class R>
FFElem<R> ff_scalar(const std::shared_ptr<const FieldCtx<R>>& ctx, long long v) {
    return ff_from_base(ctx, ring_from(ctx->base_one, v));
}
// class of t (for a degree-1 modulus t + c0 this is the constant -c0)
template <class R>
FFElem<R> ff_gen(const std::shared_ptr<const FieldCtx<R>>& ctx) {
    if (ctx->degree() == 1)
        return ff_from_base(ctx, ring_zero(ctx->base_one) - ctx->modulus_tail[0]);
    std::vector<R> c(ctx->degree(), ring_zero(ctx->base_one));
    c[1] = ctx->base_one;
    return FFElem<R>(ctx, std::move(c));
}

// ---- ring trait hooks (Poly<FFElem<...>> is used by the separable check) ----

template <class R>
FFElem<R> ring_zero(const FFElem<R>& a) { return ff_zero(a.context()); }
template <class R>
FFElem<R> ring_one(const FFElem<R>& a) { return ff_one(a.context()); }
template <class R>
FFElem<R> ring_from(const FFElem<R>& a, long long v) { return ff_scalar(a.context(), v); }
template <class R>
bool is_zero(const FFElem<R>& a) { return a.is_zero(); }
template <class R>
FFElem<R> ring_inv(const FFElem<R>& a) { return a.inv(); }
template <class R>
std::string ring_str(const FFElem<R>& a) {
    std::string out;
    bool any = false;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const R& c = a.coeffs()[i];
        if (detail::ring_is_zero(c)) continue;
        if (any) out += " + ";
        any = true;
        std::string cs = ring_str(c);
        if (i == 0) { out += cs; continue; }
        if (cs != "1") out += cs + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return any ? out : "0";
}

using FpElem = FFElem<Mod>;
using FpCtx = std::shared_ptr<const FieldCtx<Mod>>;
using TowerElem = FFElem<FFElem<Mod>>;
using TowerCtx = std::shared_ptr<const FieldCtx<FFElem<Mod>>>;

// F_{p^p} with modulus t^p - t - 1; theta = class of t satisfies theta^p = theta + 1.
// Contexts are cached per prime.
inline FpCtx artin_schreier_context(std::uint64_t p) {
    require_prime(p);
    static std::mutex mu;
    static std::map<std::uint64_t, FpCtx> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::vector<Mod> tail(p, Mod(0, p));
    tail[0] = Mod(-1, p);
    tail[1] = Mod(-1, p);
    FpCtx ctx = make_field_context<Mod>(Mod(1, p), std::move(tail), p, Int(p));
    cache.emplace(p, ctx);
    return ctx;
}

inline FpElem theta(const FpCtx& ctx) { return ff_gen(ctx); }

// Smallest f with p^f = 1 mod n.
inline std::size_t multiplicative_order_mod(std::uint64_t p, std::uint64_t n) {
    if (n == 1) return 1;
    std::uint64_t v = p % n;
    if (v == 0) throw std::invalid_argument("multiplicative_order_mod: gcd(p, n) != 1");
    std::size_t f = 1;
    std::uint64_t acc = v;
    while (acc != 1) {
        acc = acc * p % n;
        if (++f > n) throw std::logic_error("multiplicative_order_mod: no order found");
    }
    return f;
}

// F_{p^f} containing a primitive n-th root of unity, f = ord_n(p), together
// with one such root. Modulus and root are found by deterministic search in a
// fixed enumeration order, so repeated runs agree.
inline std::pair<FpCtx, FpElem> cyclotomic_context(std::uint64_t p, std::uint64_t n) {
    require_prime(p);
    if (n == 0 || n % p == 0)
        throw std::invalid_argument("cyclotomic_context: need gcd(n, p) = 1, n >= 1");
    std::size_t f = multiplicative_order_mod(p, n);

    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<FpCtx, std::vector<std::uint64_t>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, n});
        if (it != cache.end()) {
            std::vector<Mod> c;
            for (auto v : it->second.second) c.emplace_back(static_cast<std::int64_t>(v), p);
            return {it->second.first, FpElem(it->second.first, std::move(c))};
        }
    }

    // monic modulus search, coefficient vectors enumerated as base-p counters
    FpCtx ctx;
    Int counter_max = pow(Int(p), static_cast<unsigned>(f));
    for (Int v = 0; v < counter_max; ++v) {
        std::vector<Mod> tail;
        Int w = v;
        for (std::size_t i = 0; i < f; ++i) {
            tail.emplace_back(static_cast<std::int64_t>(residue(w, p)), p);
            w /= p;
        }
        try {
            ctx = make_field_context<Mod>(Mod(1, p), std::move(tail), p, Int(p));
            break;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    if (!ctx) throw std::logic_error("cyclotomic_context: no irreducible modulus found");

    // zeta search: first element (same enumeration order) whose (card-1)/n
    // power has exact order n
    Int exp = ctx->unit_order / n;
    std::vector<std::uint64_t> nprimes;
    {
        std::uint64_t m = n;
        for (std::uint64_t q = 2; q * q <= m; ++q)
            while (m % q == 0) { if (nprimes.empty() || nprimes.back() != q) nprimes.push_back(q); m /= q; }
        if (m > 1) nprimes.push_back(m);
    }
    std::optional<FpElem> zeta;
    for (Int v = 1; v < ctx->card; ++v) {
        std::vector<Mod> c;
        Int w = v;
        for (std::size_t i = 0; i < f; ++i) {
            c.emplace_back(static_cast<std::int64_t>(residue(w, p)), p);
            w /= p;
        }
        FpElem cand = FFElem<Mod>(ctx, std::move(c)).pow(exp);
        bool exact = true;
        for (std::uint64_t q : nprimes)
            if (cand.pow(Int(n / q)) == ff_one(ctx)) { exact = false; break; }
        if (exact) { zeta = cand; break; }
    }
    if (!zeta) throw std::logic_error("cyclotomic_context: no primitive root found");

    {
        std::lock_guard<std::mutex> lock(mu);
        std::vector<std::uint64_t> zc;
        for (const Mod& m : zeta->coeffs()) zc.push_back(m.value());
        cache.emplace(std::make_pair(p, n), std::make_pair(ctx, zc));
    }
    return {ctx, *zeta};
}

// Result of solving t^p - t = c over F_q: either all p roots inside F_q
// (absolute trace of c vanishes), or the degree-p extension F_q[t]/(t^p-t-c)
// together with the root theta_c = class of t.
struct ArtinSchreierRoots {
    bool split = false;
    std::vector<FpElem> roots;           // split case
    TowerCtx extension;                  // irreducible case
    std::optional<TowerElem> ext_root;   // class of t in `extension`
};

inline ArtinSchreierRoots solve_artin_schreier(const FpCtx& ctx, const FpElem& c) {
    const std::uint64_t p = ctx->characteristic;
    const std::size_t f = ctx->degree();
    ArtinSchreierRoots out;
    if (c.trace().value() == 0) {
        // (Frobenius - id) x = c as an F_p-linear system on coordinates
        std::vector<std::vector<std::uint64_t>> M(f, std::vector<std::uint64_t>(f + 1, 0));
        for (std::size_t i = 0; i < f; ++i) {
            std::vector<Mod> basis(f, Mod(0, p));
            basis[i] = Mod(1, p);
            FpElem bi(ctx, std::move(basis));
            FpElem img = bi.frobenius() - bi;
            for (std::size_t r = 0; r < f; ++r) M[r][i] = img.coeffs()[r].value();
        }
        for (std::size_t r = 0; r < f; ++r) M[r][f] = c.coeffs()[r].value();
        // Gaussian elimination to reduced row echelon form
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_col;
        for (std::size_t col = 0; col < f && rank < f; ++col) {
            std::size_t sel = rank;
            while (sel < f && M[sel][col] == 0) ++sel;
            if (sel == f) continue;
            std::swap(M[sel], M[rank]);
            std::uint64_t inv = inv_mod(M[rank][col], p);
            for (auto& v : M[rank]) v = mul_mod(v, inv, p);
            for (std::size_t r = 0; r < f; ++r) {
                if (r == rank || M[r][col] == 0) continue;
                std::uint64_t fac = M[r][col];
                for (std::size_t k = col; k <= f; ++k)
                    M[r][k] = (M[r][k] + (p - mul_mod(fac, M[rank][k], p))) % p;
            }
            pivot_col.push_back(col);
            ++rank;
        }
        for (std::size_t r = rank; r < f; ++r)
            if (M[r][f] != 0) throw std::logic_error("solve_artin_schreier: inconsistent system despite zero trace");
        std::vector<Mod> sol(f, Mod(0, p));
        for (std::size_t r = 0; r < rank; ++r)
            sol[pivot_col[r]] = Mod(static_cast<std::int64_t>(M[r][f]), p);
        FpElem x0(ctx, std::move(sol));
        out.split = true;
        for (std::uint64_t j = 0; j < p; ++j)
            out.roots.push_back(x0 + ff_scalar(ctx, static_cast<long long>(j)));
        return out;
    }
    // irreducible branch: build the tower
    std::vector<FpElem> tail(p, ff_zero(ctx));
    tail[0] = -c;
    tail[1] = -ff_one(ctx);
    out.extension = make_field_context<FpElem>(ff_one(ctx), std::move(tail), p, ctx->card);
    out.ext_root = ff_gen(out.extension);
    return out;
}

inline Mod abs_trace(const FpElem& e) { return e.trace(); }
inline Mod abs_trace(const TowerElem& e) { return e.trace().trace(); }

}  // namespace belltrace
