#pragma once

#include <vector>

#include "ocring/ring_config.hpp"

namespace ocring {

// Element of the coefficient ring O = W(F_{p^f}) (allowing p in denominators,
// i.e. an element of O[1/p]).
//
// f == 1: an exact rational with p-power denominator.
// f > 1 : digit-vector representation sum dig[i]*g^i mod (p^Np, conway_lift(g)),
//         divided by p^den; arithmetic is modular at precision Np.
class CoeffElem {
    ConfigPtr cfg_;
    Rat q_;
    std::vector<Int> dig_;
    long den_ = 0;

    void normalize();

public:
    CoeffElem() = default; // zero placeholder without a ring; not usable in arithmetic
    explicit CoeffElem(ConfigPtr cfg);

    static CoeffElem from_rat(ConfigPtr cfg, const Rat& q);
    static CoeffElem from_int(ConfigPtr cfg, long n) { return from_rat(std::move(cfg), Rat(n)); }
    // f > 1 constructor: digits of the value (not yet divided by p^den)
    static CoeffElem from_digits(ConfigPtr cfg, std::vector<Int> dig, long den = 0);

    const ConfigPtr& config() const { return cfg_; }
    bool is_zero() const;
    Val vp() const;

    CoeffElem operator+(const CoeffElem& o) const;
    CoeffElem operator-(const CoeffElem& o) const;
    CoeffElem operator*(const CoeffElem& o) const;
    CoeffElem operator-() const;
    bool operator==(const CoeffElem& o) const;
    bool operator!=(const CoeffElem& o) const { return !(*this == o); }

    // true iff the element is exactly +1 or -1
    bool is_pm_one() const;
    // p-adic inverse at absolute precision `prec` digits; exact when the unit
    // part is +-1 or the element is +-p^k
    CoeffElem invert(long prec) const;
    // image in the quotient O/p^N (the p-power denominator is kept exact)
    CoeffElem reduce_mod_pN(long N) const;

    // f == 1 accessors
    Rat rat() const;

    std::string str() const;
};

} // namespace ocring
