#pragma once

#include <map>

#include "ocring/value.hpp"

namespace ocring {

// Finite S-Laurent polynomial over F_p: the computational model of elements of
// k((S)) and of the characteristic-p fiber of O[[S]] at (p).
class FpLaurent {
    long p_ = 0;
    std::map<long, long> t_;

public:
    FpLaurent() = default;
    explicit FpLaurent(long p) : p_(p) {}

    static FpLaurent zero(long p) { return FpLaurent(p); }
    static FpLaurent one(long p) { return monomial(p, 1, 0); }
    static FpLaurent monomial(long p, long c, long n) {
        FpLaurent f(p);
        f.add_term(n, c);
        return f;
    }

    long p() const { return p_; }
    const std::map<long, long>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    long coeff(long n) const {
        auto it = t_.find(n);
        return it == t_.end() ? 0 : it->second;
    }

    void add_term(long n, long c) {
        c %= p_;
        if (c < 0) c += p_;
        auto it = t_.find(n);
        if (it == t_.end()) {
            if (c) t_[n] = c;
            return;
        }
        it->second = (it->second + c) % p_;
        if (it->second == 0) t_.erase(it);
    }

    FpLaurent operator+(const FpLaurent& o) const {
        FpLaurent out(*this);
        for (auto& [n, c] : o.t_) out.add_term(n, c);
        return out;
    }
    FpLaurent operator-() const {
        FpLaurent out(p_);
        for (auto& [n, c] : t_) out.t_[n] = p_ - c;
        return out;
    }
    FpLaurent operator-(const FpLaurent& o) const { return *this + (-o); }
    FpLaurent operator*(const FpLaurent& o) const {
        FpLaurent out(p_);
        for (auto& [n, a] : t_)
            for (auto& [m, b] : o.t_)
                out.add_term(n + m, a * b);
        return out;
    }
    bool operator==(const FpLaurent& o) const { return t_ == o.t_; }
    bool operator!=(const FpLaurent& o) const { return !(*this == o); }

    FpLaurent shifted(long k) const {
        FpLaurent out(p_);
        for (auto& [n, c] : t_) out.t_[n + k] = c;
        return out;
    }
    FpLaurent scaled(long c) const {
        FpLaurent out(p_);
        for (auto& [n, a] : t_) out.add_term(n, a * c);
        return out;
    }
    // truncation to exponents <= N
    FpLaurent truncated(long N) const {
        FpLaurent out(p_);
        for (auto& [n, c] : t_)
            if (n <= N) out.t_[n] = c;
        return out;
    }

    long min_exp() const {
        if (t_.empty()) throw std::domain_error("FpLaurent: zero has no exponents");
        return t_.begin()->first;
    }
    long max_exp() const {
        if (t_.empty()) throw std::domain_error("FpLaurent: zero has no exponents");
        return t_.rbegin()->first;
    }
    Val v_S() const { return t_.empty() ? Val::inf() : Val(t_.begin()->first); }

    // inverse in F_p((S)) truncated so that the result is correct modulo S^(N+1)
    FpLaurent inverse_series(long N) const;

    std::string str() const;
};

// dense F_p[S] polynomials (coefficient index = S-exponent), used for exact
// resultants via fraction-free elimination
using FpPoly = std::vector<long>;

FpPoly fp_poly_trim(FpPoly a);
FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_poly_sub(const FpPoly& a, const FpPoly& b, long p);
// exact division (throws if not exact)
FpPoly fp_poly_divexact(const FpPoly& a, const FpPoly& b, long p);

} // namespace ocring
