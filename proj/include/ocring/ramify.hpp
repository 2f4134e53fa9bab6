#pragma once

#include "ocring/components.hpp"
#include "ocring/localfield.hpp"

namespace ocring {

// ---- root distances -------------------------------------------------------

struct RootDistanceData {
    std::vector<Rat> d;  // v_K-normalized distances v(t - x_j) to the other roots
    long e = 1;
    Rat different;       // v_K(f'(t))
    bool sum_ok = true;  // sum of distances equals the different
};

// distances from the valuations v_L(c_j) of the shifted minimal polynomial
// f(X + t) = sum_j c_j X^j (vj[j] = v_L(c_j), j = 1..e), via the Newton
// polygon of f(X + t) / X
std::vector<Rat> distances_from_shift_valuations(const std::vector<Val>& vj, long e);

// monogenic presentation: t in L with monic minimal polynomial f over the base
RootDistanceData root_distances(const Ext2& L, const Ext2::Elem& t,
                                const std::vector<FiberElem>& f);

// ---- ramification breaks from root clustering -----------------------------

struct BreakReport {
    Rat b, b_log;
    long e = 1;
    // (threshold a, connected-component count for parameters just above a);
    // the first entry is (0, 1)
    std::vector<std::pair<Rat, long>> steps;
};

BreakReport breaks_from_distances(const std::vector<Rat>& d, long e);
BreakReport as_breaks(const Ext2& L, const Ext2::Elem& t, const std::vector<FiberElem>& f);

// ---- Herbrand oracle ------------------------------------------------------

struct HerbrandReport {
    std::vector<long> i_vals;  // i(sigma^k) for k = 1..e-1, cyclic generator order
    std::vector<std::pair<long, Rat>> breaks;  // (lower break u, upper break phi(u))
    Rat b, b_log;
    std::vector<Rat> conductors;  // Artin conductors of the nontrivial characters
    bool hasse_arf_ok = true;     // conductors are integers
};

// classical ramification data of a totally ramified cyclic extension from the
// verified displacements i(sigma) = v_L(sigma(t) - t)
HerbrandReport herbrand_oracle(const std::vector<long>& i_vals);

// fixture extensions; each verifies the Galois action against the minimal
// polynomial exactly before measuring displacements
HerbrandReport herbrand_sqrt_p(const ConfigPtr& cfg);      // Q_p(p^(1/2)) / Q_p
HerbrandReport herbrand_zeta_p(const ConfigPtr& cfg);      // Q_p(zeta_p) / Q_p
HerbrandReport herbrand_zeta_p2(const ConfigPtr& cfg);     // Q_p(zeta_{p^2}) / Q_p(zeta_p)
HerbrandReport herbrand_as(const ConfigPtr& cfg, long m);  // y^p - y = S^-m over F_p((S))

// the same extensions measured through root distances
BreakReport as_breaks_sqrt_p(const ConfigPtr& cfg);
BreakReport as_breaks_zeta_p(const ConfigPtr& cfg);
BreakReport as_breaks_zeta_p2(const ConfigPtr& cfg);
BreakReport as_breaks_as(const ConfigPtr& cfg, long m);

// ---- Artin-Schreier families over O[[S]] (Section 3.5) --------------------

struct ASFamily {
    Family fam;                 // R<X0, Y0> / (Q0), Q0 = S^alpha0 Y0 - P0^beta0
    std::vector<FpLaurent> p0;  // char-p minimal polynomial of t = S^a y^b
    long e = 0;                 // = p
    long m = 0;
    long a_num = 0, b_pow = 0;  // t = S^a_num y^b_pow
    long alpha0 = 0, beta0 = 0;
};

// family with scaling parameter a = alpha/beta; the log flag shifts the
// S-exponent by one threshold step (alpha0 = alpha + beta)
ASFamily build_as_family(const ConfigPtr& cfg, long m, const Rat& a, bool log_shift);

struct ASFiberComparison {
    bool exact_at_p = false;  // fiber at (p) equals the direct char-p generator
    Val min_agreement;        // min valuation of coefficient differences at pr
    Val threshold;            // deg(pr) * v_p(xi')
    bool pass = false;
};

// compare the fiber of the family at a finite prime against the independently
// built characteristic-0 presentation, modulo xi' of the given p-valuation
ASFiberComparison compare_as_fiber(const ASFamily& fam, const PrimePtr& pr, const Rat& xi_vp);

} // namespace ocring
