#pragma once

#include "ocring/eisenstein.hpp"

namespace ocring {

// Relative extension L = kappa(P)[z]/(g) of a level-1 field, g monic of degree
// n. Elements are coordinate vectors in the basis 1, z, ..., z^{n-1}; the
// valuation is v_K(N_{L/K}(x)), which is the v_L with v_L(pi_L) = 1 whenever
// L/K is totally ramified.
class Ext2 {
public:
    using Elem = std::vector<FiberElem>;

private:
    PrimePtr base_;
    std::vector<FiberElem> g_; // g_[i] = coefficient of z^i, g_[n] = 1
    long n_ = 0;

    Elem reduce(std::vector<FiberElem> c) const;

public:
    Ext2(PrimePtr base, std::vector<FiberElem> g);

    long deg() const { return n_; }
    const PrimePtr& base() const { return base_; }
    const std::vector<FiberElem>& minpoly() const { return g_; }

    Elem zero() const;
    Elem one() const;
    Elem z() const;
    Elem from_base(const FiberElem& c) const;

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, const FiberElem& c) const;
    Elem pow(const Elem& a, long k) const;
    // evaluate a polynomial with base coefficients at an element of L
    Elem eval(const std::vector<FiberElem>& poly, const Elem& x) const;

    // norm and characteristic polynomial of multiplication by x, by Leibniz
    // expansion (the degrees in scope are tiny)
    FiberElem norm(const Elem& x) const;
    std::vector<FiberElem> char_poly(const Elem& x) const; // monic, degree n

    Val valuation(const Elem& x) const; // v_K(N(x))
};

// Eisenstein polynomial of zeta_{p^n} - 1 over Q_p (the cyclotomic level n)
PrimePtr cyclotomic_level(ConfigPtr cfg, long n);

// residue digit c in {0, ..., p-1} with v(x - c pi^k) > k, given v(x) >= k;
// found by valuation tests, no inversion needed
long residue_digit(const FiberElem& x, long k);

// the first `count` pi-digits of x starting at exponent k0
std::vector<long> pi_digits(const FiberElem& x, long k0, long count);

} // namespace ocring
