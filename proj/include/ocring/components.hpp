#pragma once

#include <random>

#include "ocring/groebner.hpp"

namespace ocring {

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A family A = R<X>/I presented by a certified basis over O[[S]]
struct Family {
    ConfigPtr cfg;
    OrderPtr ord;
    GroebnerBasis<LaurentElem> gb;
    std::string label;
};

// the fiber A_{kappa(p)} = kappa(p)<X> / (reduced ideal)
struct FiberAlgebra {
    PrimePtr pr;
    OrderPtr ord;
    GroebnerBasis<FiberElem> gb;
};

// coefficient-wise reduction of the family presentation at an Eisenstein prime
FiberAlgebra fiber(const Family& fam, const PrimePtr& pr);

TateElem<FiberElem> reduce_tate(const TateElem<LaurentElem>& f, const PrimePtr& pr);

// quotient valuation in the fiber: valuation of the remainder (variables carry
// norm 1, so the minimal coefficient valuation decides)
Val fiber_quotient_valuation(const FiberAlgebra& fib, const TateElem<FiberElem>& f);

// w_qt(f^{n^i}) / n^i for i = 0..i_max; the supremum estimates the spectral
// valuation (Proposition 3.4.7)
std::vector<Val> spectral_sequence(const FiberAlgebra& fib, const TateElem<FiberElem>& f,
                                   long n, long i_max);

// sampled check of the transferred power inequality w_qt(f^n) <= n w_qt(f) + c
// at the prime q (Lemma 3.4.2)
struct TransferCheckReport {
    long samples = 0;
    long violations = 0;
    bool ok() const { return violations == 0; }
};
TransferCheckReport transfer_inequality_check(const Family& fam, const PrimePtr& p,
                                              const PrimePtr& q, long c, long n,
                                              long samples, unsigned long seed);

// Hensel-style idempotent lifting (Lemma 3.4.3): from e with e^2 = e in the
// fiber to f with f^2 = f in A^{+,r} at the target quotient valuation
struct LiftReport {
    TateElem<LaurentElem> f;
    std::vector<Rat> h_vals; // w_{r,qt}(f_n^2 - f_n) per iteration
    long iterations = 0;
    bool contraction_ok = true; // w(h_{n+1}) >= 3 w(h_n) throughout
    Val final_valuation;
};
LiftReport lift_idempotent(const Family& fam, const PrimePtr& pr,
                           const TateElem<FiberElem>& e, long c, const Rat& r,
                           long target_precision);

// component counting across fibers (Proposition 3.4.7): lift the idempotent
// system at pr, check orthogonality / completeness / kernel triviality, and
// compare counts with the system at (p)
struct BijectionReport {
    size_t count_p = 0, count_q = 0, lifted = 0;
    bool orthogonal = true;
    bool sums_to_one = true;
    bool kernel_trivial = true;
    bool matched = false;
};
BijectionReport component_bijection_report(const Family& fam, const PrimePtr& pr,
                                           const std::vector<TateElem<FiberElem>>& idem_q,
                                           const std::vector<TateElem<FiberElem>>& idem_p,
                                           const Rat& r, long target_precision);

// ---- helpers shared with the fixtures ---------------------------------------

// simple root of a monic polynomial over F_p[[S]] by Newton iteration, given a
// seed residue a0 that is a simple root mod S; correct mod S^(N+1)
FpLaurent fp_newton_root(const std::vector<FpLaurent>& poly, long a0, long N);

// Newton iteration in a finite fiber field from a seed with simple reduction;
// stops once poly(x) has valuation >= digits
FiberElem fiber_newton_root(const std::vector<FiberElem>& poly, FiberElem seed, long digits);

// lift of a fiber coefficient to O[[S]] mod p^pN (finite case: coordinates in
// the pi-power basis become S-power coefficients; denominators prime to p are
// resolved modulo p^pN)
LaurentElem lift_fiber_to_series(const FiberElem& e, const ConfigPtr& cfg, long pN);

TateElem<LaurentElem> lift_tate_to_series(const TateElem<FiberElem>& e, const ConfigPtr& cfg,
                                          long pN);

} // namespace ocring
