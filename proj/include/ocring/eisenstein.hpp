#pragma once

#include <memory>
#include <optional>

#include "ocring/fp_laurent.hpp"
#include "ocring/laurent.hpp"

namespace ocring {

// An Eisenstein prime ideal of O[[S]]: either (P(S)) for an Eisenstein
// polynomial P, or the distinguished prime (p) of degree infinity.
struct EisensteinPrime {
    ConfigPtr cfg;
    bool char_p = false;  // the prime (p)
    long e = 0;           // degree (finite case)
    std::vector<Int> a;   // P = S^e + a[e-1] S^(e-1) + ... + a[0]

    static std::shared_ptr<const EisensteinPrime> prime_p(ConfigPtr cfg);
    // coeffs = (a_0, ..., a_{e-1}); the leading 1 is implicit
    static std::shared_ptr<const EisensteinPrime> from_coeffs(ConfigPtr cfg,
                                                              std::vector<Int> coeffs);

    bool degree_finite() const { return !char_p; }
    std::string str() const;
};

using PrimePtr = std::shared_ptr<const EisensteinPrime>;

// Element of the fiber kappa(p) (finite degree: polynomial of degree < e over
// O[1/p], exact; at (p): an F_p-Laurent polynomial).
class FiberElem {
    PrimePtr pr_;
    std::vector<Rat> c_; // finite-degree case, size e
    FpLaurent fp_;       // characteristic-p case

    void reduce(); // not needed: inputs always reduced

public:
    FiberElem() = default;
    explicit FiberElem(PrimePtr pr);
    static FiberElem from_poly(PrimePtr pr, std::vector<Rat> c); // reduced mod P
    static FiberElem from_fp(PrimePtr pr, FpLaurent f);
    static FiberElem one(PrimePtr pr);
    static FiberElem uniformizer(PrimePtr pr); // pi (finite) or S (char p)

    const PrimePtr& prime() const { return pr_; }
    bool char_p() const { return pr_->char_p; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const FpLaurent& fp() const { return fp_; }
    bool is_zero() const;

    FiberElem operator+(const FiberElem& o) const;
    FiberElem operator-(const FiberElem& o) const;
    FiberElem operator*(const FiberElem& o) const;
    FiberElem operator-() const;
    bool operator==(const FiberElem& o) const;
    bool operator!=(const FiberElem& o) const { return !(*this == o); }

    // v_{kappa(p)} normalized with v(pi) = 1
    Val valuation() const;
    // exact field inverse (finite degree); truncated series inverse at (p)
    FiberElem invert() const;

    std::string str() const;
};

// ring homomorphism O((S))^dagger -> kappa(p), S -> pi
FiberElem reduce_mod_eisenstein(const LaurentElem& f, const PrimePtr& pr);

struct TransferReport {
    Val v_p, v_q;
    bool hypothesis = false; // min(v_p, v_q) < min(deg p, deg q)
    bool equal = false;
};
// Lemma 3.1.10: fiber valuations of x in O[[S]] agree below the degree bound
TransferReport fiber_valuation_transfer(const LaurentElem& x, const PrimePtr& p,
                                        const PrimePtr& q);

// Lifting lemma (Lemma 3.4.5): given a totally ramified L/kappa(p) presented by
// a monic Eisenstein polynomial over kappa(p), produce R' = O[[T]] together
// with the image of S as T^e * u(T).
struct LiftedExtension {
    ConfigPtr cfg;
    PrimePtr base;
    long e_rel = 1;
    LaurentElem alpha;        // T^e_rel * u, exponents interpreted in T
    long achieved_precision;  // number of computed T-digits of u
};

LiftedExtension lift_extension(const PrimePtr& pr, const std::vector<FiberElem>& minpoly,
                               long target_precision);

// pushforward of an Eisenstein prime along a lifted extension; the Weierstrass
// factor is recovered at p-precision pN
PrimePtr push_eisenstein(const LiftedExtension& lift, const PrimePtr& q, long pN);

} // namespace ocring
