#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace trinogen {

using Integer = boost::multiprecision::cpp_int;

/// p-adic valuation value: a natural number or +infinity (valuation of 0).
/// Infinity is a genuine variant, never an integer sentinel, so polygon code
/// can skip vanishing coefficients without magic numbers.
class Val {
public:
    constexpr Val() = default;
    static constexpr Val infinity() { Val v; v.finite_ = false; return v; }
    static constexpr Val of(unsigned long n) { Val v; v.value_ = n; return v; }

    constexpr bool is_finite() const { return finite_; }
    unsigned long value() const {
        if (!finite_) throw std::logic_error("Val: value() of +infinity");
        return value_;
    }

    friend constexpr bool operator==(const Val& a, const Val& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator!=(const Val& a, const Val& b) { return !(a == b); }
    friend constexpr bool operator<(const Val& a, const Val& b) {
        if (!a.finite_) return false;            // inf < x never
        if (!b.finite_) return true;             // finite < inf
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(const Val& a, const Val& b) { return a < b || a == b; }
    friend constexpr bool operator>(const Val& a, const Val& b) { return b < a; }
    friend constexpr bool operator>=(const Val& a, const Val& b) { return b <= a; }

    friend constexpr Val min(const Val& a, const Val& b) { return a < b ? a : b; }

    std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

private:
    bool finite_ = true;
    unsigned long value_ = 0;
};

/// Result of exact p-adic decomposition t = p^v * unit with p not dividing unit.
struct PadicDecomposition {
    Val v;
    Integer unit;   // t_p; zero iff t = 0
};

/// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        a %= n;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// A verified prime modulus.
struct PrimeContext {
    std::uint64_t p;

    explicit PrimeContext(std::uint64_t prime) : p(prime) {
        if (!is_prime_u64(prime))
            throw std::invalid_argument("PrimeContext: " + std::to_string(prime) + " is not prime");
    }
};

/// t = p^v * unit.  t = 0 yields the distinguished infinite valuation.
inline PadicDecomposition padic_val(const Integer& t, std::uint64_t p) {
    if (p < 2 || !is_prime_u64(p)) throw std::invalid_argument("padic_val: p must be prime");
    if (t == 0) return {Val::infinity(), Integer(0)};
    Integer u = t;
    unsigned long v = 0;
    Integer q, r;
    for (;;) {
        divide_qr(u, Integer(p), q, r);
        if (r != 0) break;
        u = q;
        ++v;
    }
    return {Val::of(v), u};
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer acc(1), b = base;
    unsigned long k = e;
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

/// nu_p(binomial(p^r, j)) = r - nu_p(j) for 1 <= j <= p^r - 1.
inline unsigned long binom_padic_val(std::uint64_t p, unsigned long r, const Integer& j) {
    if (!is_prime_u64(p)) throw std::invalid_argument("binom_padic_val: p must be prime");
    Integer pr = pow_integer(Integer(p), r);
    if (j < 1 || j > pr - 1)
        throw std::invalid_argument("binom_padic_val: j out of range [1, p^r - 1]");
    PadicDecomposition d = padic_val(j, p);
    return r - d.v.value();
}

/// Trinomial x^n + a x^m + b.
struct TrinomialParams {
    unsigned n;
    unsigned m;
    Integer a;
    Integer b;

    TrinomialParams(unsigned n_, unsigned m_, Integer a_, Integer b_)
        : n(n_), m(m_), a(std::move(a_)), b(std::move(b_)) {
        if (n < 2) throw std::invalid_argument("TrinomialParams: n must be >= 2");
        if (m < 1 || m >= n) throw std::invalid_argument("TrinomialParams: need 1 <= m < n");
        if (b == 0) throw std::invalid_argument("TrinomialParams: b must be nonzero");
    }
};

/// p-adic shape data of a trinomial: n = s * p^r with p not dividing s,
/// mu = nu_p(a), nu = nu_p(b^(p-1) - 1), g = min(mu, nu).
/// Valid only under the hypotheses p | n, p | a, p does not divide b;
/// otherwise carries hypotheses_met = false with the reason.
struct PAdicProfile {
    std::uint64_t p = 0;
    unsigned long r = 0;
    Integer s;
    Val mu;
    Val nu;
    Val g;
    bool hypotheses_met = false;
    std::string failure_reason;
};

inline PAdicProfile padic_profile(const TrinomialParams& params, std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("padic_profile: p must be prime");
    PAdicProfile out;
    out.p = p;

    PadicDecomposition dn = padic_val(Integer(params.n), p);
    out.r = dn.v.value();
    out.s = dn.unit;
    out.mu = padic_val(params.a, p).v;

    if (params.b % p == 0) {
        out.failure_reason = "p divides b; nu undefined";
        return out;
    }
    // b^(p-1) - 1 computed exactly; bit-size guard keeps this from exploding
    // for absurd p (the library's prime lists stay far below the bound).
    const unsigned long bbits = static_cast<unsigned long>(msb(abs(params.b) + 1) + 2);
    if ((p - 1) * bbits > 8'000'000ul)
        throw std::invalid_argument("padic_profile: p too large for exact nu = nu_p(b^(p-1) - 1)");
    Integer t = pow_integer(params.b, static_cast<unsigned long>(p - 1)) - 1;
    out.nu = padic_val(t, p).v;   // infinity exactly when b^(p-1) = 1
    out.g = min(out.mu, out.nu);

    if (out.r == 0) {
        out.failure_reason = "p does not divide n";
        return out;
    }
    if (out.mu == Val::of(0)) {
        out.failure_reason = "p does not divide a";
        return out;
    }
    out.hypotheses_met = true;
    return out;
}

}  // namespace trinogen
