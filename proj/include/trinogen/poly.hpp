#pragma once

#include "trinogen/core_arith.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace trinogen {

template <class F>
concept FieldLike = requires(const F f, typename F::Elem a, std::vector<std::uint64_t>& key) {
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.add(a, a) } -> std::same_as<typename F::Elem>;
    { f.sub(a, a) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.mul(a, a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.pth_root(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.eq(a, a) } -> std::same_as<bool>;
    { f.same(f) } -> std::same_as<bool>;
    { f.characteristic() } -> std::same_as<std::uint64_t>;
    { f.order() } -> std::same_as<Integer>;
    { f.ext_degree() } -> std::same_as<unsigned>;
    f.append_key(key, a);
};

namespace detail {

/// splitmix64: the deterministic stream behind equal-degree splitting.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t fnv1a(const std::vector<std::uint64_t>& words) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words) {
        for (int i = 0; i < 8; ++i) {
            h ^= (w >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

}  // namespace detail

/// Dense univariate polynomial over a finite field F, coefficients ascending.
template <FieldLike F>
class Polynomial {
public:
    using Elem = typename F::Elem;

    explicit Polynomial(F field) : field_(std::move(field)) {}
    Polynomial(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static Polynomial zero(const F& field) { return Polynomial(field); }
    static Polynomial constant(const F& field, Elem v) { return Polynomial(field, {std::move(v)}); }
    static Polynomial x(const F& field) { return Polynomial(field, {field.zero(), field.one()}); }
    static Polynomial monomial(const F& field, unsigned k, Elem coeff) {
        std::vector<Elem> c(k + 1, field.zero());
        c[k] = std::move(coeff);
        return Polynomial(field, std::move(c));
    }

    const F& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    const Elem& leading() const {
        if (c_.empty()) throw std::logic_error("Polynomial: leading() of zero");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && field_.eq(c_.back(), field_.one()); }

    bool equals(const Polynomial& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!field_.eq(c_[i], o.c_[i])) return false;
        return true;
    }

    Polynomial add(const Polynomial& o) const {
        check_field(o);
        std::vector<Elem> c(std::max(c_.size(), o.c_.size()), field_.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.add(coeff(i), o.coeff(i));
        return Polynomial(field_, std::move(c));
    }
    Polynomial sub(const Polynomial& o) const {
        check_field(o);
        std::vector<Elem> c(std::max(c_.size(), o.c_.size()), field_.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.sub(coeff(i), o.coeff(i));
        return Polynomial(field_, std::move(c));
    }
    Polynomial mul(const Polynomial& o) const {
        check_field(o);
        if (is_zero() || o.is_zero()) return Polynomial(field_);
        std::vector<Elem> c(c_.size() + o.c_.size() - 1, field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (field_.is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] = field_.add(c[i + j], field_.mul(c_[i], o.c_[j]));
        }
        return Polynomial(field_, std::move(c));
    }
    Polynomial scale(const Elem& k) const {
        std::vector<Elem> c(c_);
        for (auto& v : c) v = field_.mul(v, k);
        return Polynomial(field_, std::move(c));
    }

    /// Division with remainder; divisor's leading coefficient must be invertible
    /// (always true over a field for nonzero divisors).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        check_field(d);
        if (d.is_zero()) throw std::invalid_argument("Polynomial: division by zero");
        if (degree() < d.degree()) return {Polynomial(field_), *this};
        Elem lcinv = field_.inv(d.leading());
        std::vector<Elem> rem = c_;
        const std::size_t dd = d.c_.size() - 1;
        std::vector<Elem> quo(rem.size() - dd, field_.zero());
        for (std::size_t i = rem.size(); i-- > dd;) {
            if (field_.is_zero(rem[i])) continue;
            Elem q = field_.mul(rem[i], lcinv);
            quo[i - dd] = q;
            for (std::size_t k = 0; k <= dd; ++k)
                rem[i - dd + k] = field_.sub(rem[i - dd + k], field_.mul(q, d.c_[k]));
        }
        return {Polynomial(field_, std::move(quo)), Polynomial(field_, std::move(rem))};
    }
    Polynomial rem(const Polynomial& d) const { return divmod(d).second; }
    Polynomial quo(const Polynomial& d) const { return divmod(d).first; }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial(field_);
        std::vector<Elem> c(c_.size() - 1, field_.zero());
        for (std::size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = field_.mul(c_[i], field_.from_word(i % field_.characteristic()));
        return Polynomial(field_, std::move(c));
    }

    /// Makes the polynomial monic; returns the former leading coefficient.
    Elem make_monic() {
        if (is_zero()) throw std::invalid_argument("Polynomial: cannot make zero monic");
        Elem lc = c_.back();
        if (field_.eq(lc, field_.one())) return lc;
        Elem inv = field_.inv(lc);
        for (auto& v : c_) v = field_.mul(v, inv);
        return lc;
    }

    Elem eval(const Elem& x) const {
        Elem acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
        return acc;
    }

    /// Canonical key: degree first, then coefficients from leading to constant.
    std::vector<std::uint64_t> sort_key() const {
        std::vector<std::uint64_t> key;
        key.push_back(static_cast<std::uint64_t>(c_.size()));
        for (std::size_t i = c_.size(); i-- > 0;) field_.append_key(key, c_[i]);
        return key;
    }

    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (field_.is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            bool unit = field_.eq(c_[i], field_.one());
            if (i == 0 || !unit) os << field_.elem_str(c_[i]);
            if (i > 0) {
                if (!unit) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void check_field(const Polynomial& o) const {
        if (!field_.same(o.field_)) throw std::invalid_argument("Polynomial: mixed fields");
    }
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<Elem> c_;
};

/// Monic gcd via the Euclidean algorithm.
template <FieldLike F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        Polynomial<F> r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a.make_monic();
    return a;
}

/// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
template <FieldLike F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> poly_ext_gcd(const Polynomial<F>& a,
                                                                     const Polynomial<F>& b) {
    const F& fld = a.field();
    Polynomial<F> r0 = a, r1 = b;
    Polynomial<F> s0 = Polynomial<F>::constant(fld, fld.one()), s1 = Polynomial<F>::zero(fld);
    Polynomial<F> t0 = Polynomial<F>::zero(fld), t1 = Polynomial<F>::constant(fld, fld.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1); r1 = std::move(r);
        Polynomial<F> s2 = s0.sub(q.mul(s1));
        s0 = std::move(s1); s1 = std::move(s2);
        Polynomial<F> t2 = t0.sub(q.mul(t1));
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        auto lc = r0.leading();
        auto lcinv = fld.inv(lc);
        r0 = r0.scale(lcinv);
        s0 = s0.scale(lcinv);
        t0 = t0.scale(lcinv);
    }
    return {r0, s0, t0};
}

/// base^e mod m, e an arbitrary-precision exponent >= 0.
template <FieldLike F>
Polynomial<F> poly_powmod(Polynomial<F> base, Integer e, const Polynomial<F>& m) {
    Polynomial<F> r = Polynomial<F>::constant(base.field(), base.field().one());
    base = base.rem(m);
    while (e > 0) {
        if (bit_test(e, 0)) r = r.mul(base).rem(m);
        base = base.mul(base).rem(m);
        e >>= 1;
    }
    return r;
}

template <FieldLike F>
struct FactorTerm {
    Polynomial<F> factor;       // monic irreducible
    unsigned multiplicity;
};

template <FieldLike F>
struct Factorization {
    typename F::Elem unit;      // leading coefficient of the input
    std::vector<FactorTerm<F>> terms;
};

namespace detail {

/// Squarefree decomposition in characteristic p (handles the p-th power slide).
template <FieldLike F>
void squarefree_decompose(const Polynomial<F>& f, unsigned outer_mult,
                          std::vector<std::pair<Polynomial<F>, unsigned>>& out) {
    const F& fld = f.field();
    const std::uint64_t p = fld.characteristic();
    if (f.degree() <= 0) return;
    Polynomial<F> fp = f.derivative();
    if (fp.is_zero()) {
        // f = g(x^p); pull back with coefficientwise p-th roots
        std::vector<typename F::Elem> g;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); i += p)
            g.push_back(fld.pth_root(f.coeff(i)));
        squarefree_decompose(Polynomial<F>(fld, std::move(g)), outer_mult * static_cast<unsigned>(p), out);
        return;
    }
    Polynomial<F> c = poly_gcd(f, fp);
    Polynomial<F> w = f.quo(c);
    unsigned i = 1;
    while (w.degree() > 0) {
        Polynomial<F> y = poly_gcd(w, c);
        Polynomial<F> z = w.quo(y);
        if (z.degree() > 0) out.emplace_back(z, i * outer_mult);
        w = std::move(y);
        c = c.quo(w);
        ++i;
    }
    if (c.degree() > 0) {
        std::vector<typename F::Elem> g;
        for (std::size_t k = 0; k <= static_cast<std::size_t>(c.degree()); k += p)
            g.push_back(fld.pth_root(c.coeff(k)));
        squarefree_decompose(Polynomial<F>(fld, std::move(g)), outer_mult * static_cast<unsigned>(p), out);
    }
}

/// Distinct-degree split of a squarefree monic polynomial:
/// returns pairs (product of irreducible factors of degree d, d).
template <FieldLike F>
std::vector<std::pair<Polynomial<F>, unsigned>> distinct_degree(Polynomial<F> f) {
    const F& fld = f.field();
    const Integer q = fld.order();
    std::vector<std::pair<Polynomial<F>, unsigned>> out;
    Polynomial<F> x = Polynomial<F>::x(fld);
    Polynomial<F> h = x;
    unsigned d = 0;
    while (f.degree() > 2 * static_cast<long>(d + 1) - 1) {
        ++d;
        h = poly_powmod(h, q, f);
        Polynomial<F> g = poly_gcd(h.sub(x), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f.quo(g);
            h = h.rem(f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting, derandomized by the caller's rng.
template <FieldLike F>
void equal_degree(const Polynomial<F>& f, unsigned d, SplitMix64& rng,
                  std::vector<Polynomial<F>>& out) {
    const F& fld = f.field();
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    const std::uint64_t p = fld.characteristic();
    const unsigned k = fld.ext_degree();
    for (;;) {
        // deterministic "random" polynomial of degree < deg f (at least 1)
        std::vector<typename F::Elem> rc;
        const long n = f.degree();
        for (long i = 0; i < n; ++i) rc.push_back(fld.sample(rng));
        Polynomial<F> r(fld, std::move(rc));
        if (r.degree() < 1) continue;
        Polynomial<F> g = poly_gcd(r, f);
        if (g.degree() == 0 || g.degree() == f.degree()) {
            if (p == 2) {
                // trace map over GF(2): T(r) = r + r^2 + ... + r^(2^(k*d-1))
                Polynomial<F> t = Polynomial<F>::zero(fld);
                Polynomial<F> cur = r.rem(f);
                for (unsigned i = 0; i < k * d; ++i) {
                    t = t.add(cur);
                    cur = cur.mul(cur).rem(f);
                }
                g = poly_gcd(t, f);
            } else {
                Integer e = (pow_integer(fld.order(), d) - 1) / 2;
                Polynomial<F> t = poly_powmod(r, e, f);
                t = t.sub(Polynomial<F>::constant(fld, fld.one()));
                g = poly_gcd(t, f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f.quo(g), d, rng, out);
            return;
        }
    }
}

template <FieldLike F>
typename F::Elem sample_elem(const F& fld, SplitMix64& rng) {
    return fld.sample(rng);
}

template <FieldLike F>
std::uint64_t factor_seed(const Polynomial<F>& f) {
    std::vector<std::uint64_t> words;
    words.push_back(f.field().characteristic());
    words.push_back(f.field().ext_degree());
    for (const auto& c : f.coeffs()) f.field().append_key(words, c);
    return fnv1a(words);
}

}  // namespace detail

/// Complete factorization into monic irreducibles with multiplicities.
/// Output order is canonical: ascending (degree, coefficient tuple).
/// The equal-degree stage is seeded from a hash of the input so identical
/// inputs always factor identically.
template <FieldLike F>
Factorization<F> factor(const Polynomial<F>& input) {
    if (input.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    Factorization<F> result;
    result.unit = input.leading();
    if (input.degree() == 0) return result;

    Polynomial<F> f = input;
    f.make_monic();
    detail::SplitMix64 rng(detail::factor_seed(input));

    std::vector<std::pair<Polynomial<F>, unsigned>> sqf;
    detail::squarefree_decompose(f, 1, sqf);
    for (auto& [g, mult] : sqf) {
        for (auto& [h, d] : detail::distinct_degree(g)) {
            std::vector<Polynomial<F>> irr;
            detail::equal_degree(h, d, rng, irr);
            for (auto& t : irr) result.terms.push_back({t, mult});
        }
    }
    std::sort(result.terms.begin(), result.terms.end(),
              [](const FactorTerm<F>& a, const FactorTerm<F>& b) {
                  return a.factor.sort_key() < b.factor.sort_key();
              });
    return result;
}

/// Rabin irreducibility test; requires a monic input of degree >= 1.
template <FieldLike F>
bool is_irreducible(const Polynomial<F>& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    if (!f.is_monic()) throw std::invalid_argument("is_irreducible: input must be monic");
    const F& fld = f.field();
    const Integer q = fld.order();
    const unsigned long n = static_cast<unsigned long>(f.degree());
    Polynomial<F> x = Polynomial<F>::x(fld);

    Polynomial<F> frob = poly_powmod(x, pow_integer(q, n), f);
    if (!frob.equals(x.rem(f))) return false;

    unsigned long nn = n;
    for (unsigned long t = 2; t * t <= nn; ++t) {
        if (nn % t != 0) continue;
        while (nn % t == 0) nn /= t;
        Polynomial<F> h = poly_powmod(x, pow_integer(q, n / t), f);
        if (poly_gcd(h.sub(x), f).degree() != 0) return false;
    }
    if (nn > 1) {
        Polynomial<F> h = poly_powmod(x, pow_integer(q, n / nn), f);
        if (poly_gcd(h.sub(x), f).degree() != 0) return false;
    }
    return true;
}

}  // namespace trinogen
