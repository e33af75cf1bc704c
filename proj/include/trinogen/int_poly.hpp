#pragma once

#include "trinogen/core_arith.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace trinogen {

/// Dense univariate polynomial over Z with arbitrary-precision coefficients,
/// stored ascending (coeffs[i] is the x^i coefficient), trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Integer v) { return IntPoly({std::move(v)}); }

    /// x^k
    static IntPoly monomial(unsigned k, Integer coeff = Integer(1)) {
        std::vector<Integer> c(k + 1);
        c[k] = std::move(coeff);
        return IntPoly(std::move(c));
    }

    static IntPoly trinomial(const TrinomialParams& t) {
        std::vector<Integer> c(t.n + 1);
        c[0] = t.b;
        c[t.m] += t.a;
        c[t.n] += 1;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention here
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Integer& leading() const {
        if (c_.empty()) throw std::logic_error("IntPoly: leading() of zero");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const Integer& k, const IntPoly& a) {
        std::vector<Integer> c(a.c_);
        for (auto& x : c) x *= k;
        return IntPoly(std::move(c));
    }

    /// Exact Euclidean division by a monic divisor: *this = q * d + r over Z,
    /// deg r < deg d.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& d) const {
        if (!d.is_monic()) throw std::invalid_argument("IntPoly: divisor must be monic");
        std::vector<Integer> rem = c_;
        const std::size_t dd = d.c_.size() - 1;
        if (rem.size() <= dd) return {IntPoly(), IntPoly(rem)};
        std::vector<Integer> quo(rem.size() - dd);
        for (std::size_t i = rem.size(); i-- > dd;) {
            Integer q = rem[i];
            if (q == 0) continue;
            quo[i - dd] = q;
            for (std::size_t k = 0; k <= dd; ++k) rem[i - dd + k] -= q * d.c_[k];
        }
        return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
    }

    Integer eval(const Integer& x) const {
        Integer acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<Integer> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Integer(i) * c_[i];
        return IntPoly(std::move(c));
    }

    /// min over nonzero coefficients of nu_p; infinity for the zero polynomial.
    Val padic_min_val(std::uint64_t p) const {
        Val best = Val::infinity();
        for (const Integer& x : c_) {
            if (x == 0) continue;
            best = min(best, padic_val(x, p).v);
            if (best == Val::of(0)) break;
        }
        return best;
    }

    /// Divides every coefficient by p^v exactly (throws if not divisible).
    IntPoly exact_div_pow(std::uint64_t p, unsigned long v) const {
        Integer pv = pow_integer(Integer(p), v);
        std::vector<Integer> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Integer q, r;
            divide_qr(c_[i], pv, q, r);
            if (r != 0) throw std::logic_error("IntPoly: coefficient not divisible by p^v");
            c[i] = q;
        }
        return IntPoly(std::move(c));
    }

    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Integer& a = c_[i];
            if (a == 0) continue;
            Integer mag = abs(a);
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            if (i == 0 || mag != 1) os << mag.str();
            if (i > 0) {
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

}  // namespace trinogen
