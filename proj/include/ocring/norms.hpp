#pragma once

#include "ocring/ramify.hpp"

namespace ocring {

// Cyclotomic tower K_n = Q_p(zeta_{p^n}) with congruence element xi recorded
// through its p-valuation. constant_rule freezes the tower at level 1 (a
// degenerate tower used to exercise the failure detection).
struct TowerSpec {
    ConfigPtr cfg;
    long n0 = 1;
    long N = 3;
    Rat xi_vp;
    bool constant_rule = false;
};

// the standard choice xi = zeta_p - 1, v_p(xi) = 1/(p-1)
TowerSpec cyclotomic_tower(ConfigPtr cfg, long n0, long N);

struct SdrLevel {
    long n;            // the step K_n -> K_{n+1}
    long degree_ratio; // [K_{n+1} : K_n]
    Val v_congruence;  // v_{K_{n+1}}(pi_{n+1}^p - pi_n)
    Val v_xi;          // v_{K_{n+1}}(xi)
    bool pass = false;
};

struct SdrReport {
    bool xi_ok = false; // 0 < v_p(xi) <= 1
    std::vector<SdrLevel> levels;
    bool pass = false;
};

// strictly-deeply-ramified check: degree p per step and the uniformizer
// congruence pi_{n+1}^p = pi_n mod xi at every computed level
SdrReport check_sdr(const TowerSpec& tower);

enum class NormExtKind { trivial, unramified, ramified };

struct NormFieldApprox {
    long level = 0;
    long degree = 1;
    NormExtKind kind = NormExtKind::trivial;
    // minimal polynomial of the norm-field generator over k((Pi)): T - Pi
    // (trivial), T^2 - c with c a non-square residue (unramified), or
    // T^2 - (Pi-digit series) (ramified), at the given Pi-precision
    std::vector<FpLaurent> poly;
    long pi_precision = 0;
    Rat b, b_log; // char-p breaks of the norm-field extension
};

// classification of K(sqrt(d)) over the level-1 field kappa(pr), transported
// along pi -> Pi; digit extraction is valuation-based, no inversions
NormFieldApprox classify_quadratic(const PrimePtr& pr, const Rat& d, long pi_precision);

// norm-field approximation of L = K(sqrt(d)) at level N; degree stationarity
// is checked against level N+1 and a precision_error raised if it fails
NormFieldApprox norm_field_min_poly(const TowerSpec& tower, const Rat& d, long N,
                                    long pi_precision);

struct BreakRow {
    long n;
    Rat b, b_log;
};

struct ConvergenceReport {
    std::vector<BreakRow> rows; // char-0 breaks of L_n / K_n per level
    NormFieldApprox norm_field; // char-p side at the top level
    bool stationary = false;    // the last two rows agree
    bool matches_charp = false; // ... and agree with the char-p breaks
};

ConvergenceReport break_convergence_experiment(const TowerSpec& tower, const Rat& d,
                                               long n_lo, long n_hi);

} // namespace ocring
