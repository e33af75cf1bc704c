#pragma once

#include "trinogen/core_arith.hpp"

#include <cstdint>
#include <vector>

namespace trinogen {

/// Prime field GF(p), elements as canonical residues in [0, p).
class GfP {
public:
    using Elem = std::uint64_t;

    explicit GfP(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("GfP: modulus must be prime");
    }

    std::uint64_t characteristic() const { return p_; }
    unsigned ext_degree() const { return 1; }
    Integer order() const { return Integer(p_); }
    bool same(const GfP& o) const { return p_ == o.p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        if (s >= p_ || s < a) s -= p_;
        return s;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem pow(Elem a, Integer e) const {
        if (e < 0) { a = inv(a); e = -e; }
        Elem r = 1;
        while (e > 0) {
            if (bit_test(e, 0)) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("GfP: inverse of zero");
        return pow(a, Integer(p_ - 2));
    }
    Elem pth_root(Elem a) const { return a; }   // Frobenius is the identity on GF(p)

    /// Canonicalize an arbitrary big integer into [0, p).
    Elem from_integer(const Integer& t) const {
        Integer r = t % p_;
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    Elem from_word(std::uint64_t w) const { return w % p_; }

    template <class Rng>
    Elem sample(Rng& rng) const { return from_word(rng.next()); }

    /// Stable sort/hash key.
    void append_key(std::vector<std::uint64_t>& out, Elem a) const { out.push_back(a); }

    std::string elem_str(Elem a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
};

}  // namespace trinogen
