#pragma once

#include <map>

#include "ocring/coeff.hpp"

namespace ocring {

// Finite S-Laurent polynomial over the coefficient ring, the concrete model of
// elements of O((S))^{dagger,r}. Exponents live in the window [-Ns, Ns];
// multiplication drops terms leaving the window (a quotient-ring truncation on
// the nonnegative side, a precision cut on the negative side).
class LaurentElem {
    ConfigPtr cfg_;
    std::map<long, CoeffElem> t_;

public:
    LaurentElem() = default;
    explicit LaurentElem(ConfigPtr cfg) : cfg_(std::move(cfg)) {}

    static LaurentElem zero(ConfigPtr cfg) { return LaurentElem(std::move(cfg)); }
    static LaurentElem one(ConfigPtr cfg) {
        LaurentElem f(cfg);
        f.set(0, CoeffElem::from_int(cfg, 1));
        return f;
    }
    static LaurentElem monomial(ConfigPtr cfg, const CoeffElem& c, long n) {
        LaurentElem f(std::move(cfg));
        f.set(n, c);
        return f;
    }

    const ConfigPtr& config() const { return cfg_; }
    const std::map<long, CoeffElem>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    CoeffElem coeff(long n) const {
        auto it = t_.find(n);
        if (it != t_.end()) return it->second;
        return CoeffElem(cfg_);
    }

    // sets the coefficient of S^n; zero coefficients are removed
    void set(long n, const CoeffElem& c);
    // as set(), but adds to an existing coefficient
    void add_term(long n, const CoeffElem& c);

    LaurentElem operator+(const LaurentElem& o) const;
    LaurentElem operator-(const LaurentElem& o) const;
    LaurentElem operator-() const;
    LaurentElem operator*(const LaurentElem& o) const;
    bool operator==(const LaurentElem& o) const { return (*this - o).is_zero(); }
    bool operator!=(const LaurentElem& o) const { return !(*this == o); }

    LaurentElem scaled(const CoeffElem& c) const;
    LaurentElem shifted(long k) const; // multiplication by S^k

    long min_exp() const; // domain error on zero
    long max_exp() const;
    bool has_negative_exponents() const { return !t_.empty() && t_.begin()->first < 0; }
    bool has_denominators() const;

    // w_r(f) = min_n (v_p(a_n) + r n); the Gauss valuation of Notation 3.1.7
    Val gauss_valuation(const Rat& r) const;
    // v^{<=n}(f) = v_S(f mod p^{n+1}); the partial valuation of Construction 1.6.1
    Val partial_valuation(long n) const;

    // coefficient-wise image in O/p^N
    LaurentElem reduce_mod_pN(long N) const;
    // drop terms with w_r below nothing / above the cut (precision truncation)
    LaurentElem truncate_gauss(const Rat& r, const Rat& cut) const;

    // inverse of a unit of O[[S]] (v_p = 0, nonnegative exponents, unit constant
    // term) modulo (p^pN, S^(sN+1)); exact in S up to the window
    LaurentElem invert_series(long pN, long sN) const;

    std::string str() const;
};

} // namespace ocring
