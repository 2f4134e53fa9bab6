// Acceptance checks for the computational core: one pass/fail line per
// criterion, exit 0 iff all pass.
#include <chrono>
#include <iostream>
#include <map>
#include <random>

#include "ocring/components.hpp"
#include "ocring/newton.hpp"
#include "ocring/norms.hpp"
#include "ocring/ramify.hpp"

using namespace ocring;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

LaurentElem L(const ConfigPtr& cfg, std::vector<std::pair<long, Rat>> terms) {
    LaurentElem f(cfg);
    for (auto& [n, q] : terms) f.set(n, CoeffElem::from_rat(cfg, q));
    return f;
}

TateElem<LaurentElem> random_tate(std::mt19937_64& rng, const ConfigPtr& cfg,
                                  const OrderPtr& ord, long min_s_exp = 0) {
    std::uniform_int_distribution<long> deg_d(0, 5), k_d(0, 3), e_d(min_s_exp, 5),
        m_d(-9, 9);
    TateElem<LaurentElem> f(ord);
    for (int t = 0; t < 4; ++t) {
        LaurentElem c(cfg);
        for (int u = 0; u < 3; ++u) {
            long m = m_d(rng);
            if (m == 0) continue;
            c.add_term(e_d(rng), CoeffElem::from_rat(cfg, Rat(m) * pow_rat(cfg->p, k_d(rng))));
        }
        if (c.is_zero()) continue;
        f.add_term({deg_d(rng), deg_d(rng)}, c);
    }
    return f;
}

// random certified basis {X0^a + tail(X0), X1^b + tail(X0,X1)}
GroebnerBasis<LaurentElem> random_gb(std::mt19937_64& rng, const ConfigPtr& cfg,
                                     const OrderPtr& ord) {
    std::uniform_int_distribution<long> a_d(1, 4), k_d(0, 2), e_d(0, 3), m_d(-9, 9);
    long a = a_d(rng), b = a_d(rng);
    TateElem<LaurentElem> f1(ord), f2(ord);
    f1.set({a, 0}, LaurentElem::one(cfg));
    for (long i = 0; i < a; ++i) {
        long m = m_d(rng);
        if (m) f1.add_term({i, 0}, L(cfg, {{e_d(rng), Rat(m) * pow_rat(cfg->p, k_d(rng))}}));
    }
    f2.set({0, b}, LaurentElem::one(cfg));
    for (long j = 0; j < b; ++j) {
        long m = m_d(rng);
        if (m) f2.add_term({a_d(rng), j}, L(cfg, {{e_d(rng), Rat(m) * pow_rat(cfg->p, k_d(rng))}}));
    }
    return certify_concrete<LaurentElem>({f1, f2}, cfg->Np, cfg->Ns);
}

// random integral series with a nontrivial Newton polygon
LaurentElem random_poly(std::mt19937_64& rng, const ConfigPtr& cfg, long deg_max = 8) {
    std::uniform_int_distribution<long> deg_d(1, deg_max), k_d(0, 4), m_d(1, 20);
    std::uniform_int_distribution<int> sign_d(0, 1), skip_d(0, 3);
    long d = deg_d(rng);
    LaurentElem f(cfg);
    for (long n = 0; n <= d; ++n) {
        if (n != 0 && n != d && skip_d(rng) == 0) continue;
        long m = m_d(rng) * (sign_d(rng) ? 1 : -1);
        while (m % cfg->p == 0) ++m;
        long k = (n == d) ? 0 : k_d(rng);
        f.set(n, CoeffElem::from_rat(cfg, Rat(m) * pow_rat(cfg->p, k)));
    }
    return f;
}

Val coeff_error(const LaurentElem& a, const LaurentElem& b) {
    LaurentElem diff = a - b;
    Val err = Val::inf();
    for (const auto& [n, c] : diff.terms()) err = val_min(err, c.vp());
    return err;
}

// A = R<X>/(X^2 - X - S), the quadratic-split family
Family quad_family(const ConfigPtr& cfg) {
    auto ord = make_order(OrderContext::lex(1));
    TateElem<LaurentElem> g(ord);
    g.set({2}, LaurentElem::one(cfg));
    g.set({1}, L(cfg, {{0, -1}}));
    g.set({0}, L(cfg, {{1, -1}}));
    Family fam{cfg, ord, certify_concrete<LaurentElem>({g}, cfg->Np, cfg->Ns), "quad-split"};
    return fam;
}

// the char-p root projector of the quadratic-split family at (p)
TateElem<FiberElem> quad_idem_charp(const Family& fam, const PrimePtr& pr) {
    long p = fam.cfg->p;
    long N = fam.cfg->Ns;
    FpLaurent c0 = -FpLaurent::monomial(p, 1, 1);
    FpLaurent c1 = -FpLaurent::one(p);
    FpLaurent a = fp_newton_root({c0, c1, FpLaurent::one(p)}, 0, N);
    FpLaurent u = (FpLaurent::one(p) - a.scaled(2)).inverse_series(N);
    TateElem<FiberElem> e(fam.ord);
    e.set({1}, FiberElem::from_fp(pr, u));
    e.set({0}, FiberElem::from_fp(pr, (-(a * u)).truncated(N)));
    return e;
}

bool same_breaks(const BreakReport& br, const HerbrandReport& hb) {
    return br.b == hb.b && br.b_log == hb.b_log;
}

// ---------------------------------------------------------------------------

bool division_contract() {
    auto cfg = make_config(3, 1, 64, 64);
    auto ord = make_order(OrderContext::lex(2));
    auto t0 = Clock::now();
    std::mt19937_64 rng(20260823);
    for (int i = 0; i < 500; ++i) {
        auto gb = random_gb(rng, cfg, ord);
        if (!gb.certified) return false;
        auto f = random_tate(rng, cfg, ord);
        auto se = divide(f, gb, cfg->Np, cfg->Ns);
        TateElem<LaurentElem> back = se.remainder;
        for (size_t j = 0; j < gb.gens.size(); ++j) back = back + se.quotients[j] * gb.gens[j];
        if (!(back.normalized(cfg->Np, cfg->Ns) == f.normalized(cfg->Np, cfg->Ns))) return false;
        if (!se.dominance_ok) return false;
        for (const auto& [m, c] : se.remainder.terms())
            for (const auto& lt : gb.lts)
                if (mono_divides(lt.deg, m)) return false;
        TateElem<LaurentElem> g = f;
        for (size_t j = 0; j < gb.gens.size(); ++j)
            g = g + random_tate(rng, cfg, ord) * gb.gens[j];
        if (!(divide(g, gb, cfg->Np, cfg->Ns).remainder == se.remainder)) return false;
    }
    return seconds_since(t0) < 60.0;
}

bool quotient_norm_optimality() {
    auto cfg = make_config(3, 1, 64, 64);
    auto ord = make_order(OrderContext::lex(2));
    std::mt19937_64 rng(5150);
    Rat rp(1, 2);
    auto tate_val = [&](const TateElem<LaurentElem>& f) {
        Val v = Val::inf();
        for (const auto& [m, c] : f.terms()) v = val_min(v, c.gauss_valuation(rp));
        return v;
    };
    for (int i = 0; i < 200; ++i) {
        auto gb = random_gb(rng, cfg, ord);
        if (!gb.certified) return false;
        auto f = random_tate(rng, cfg, ord);
        auto r = remainder_annulus(f, gb, cfg->Np, cfg->Ns);
        Val vr = tate_val(r);
        // the remainder itself lies in the coset and witnesses equality
        if (!(divide(f - r, gb, cfg->Np, cfg->Ns).remainder.is_zero())) return false;
        for (int j = 0; j < 200; ++j) {
            TateElem<LaurentElem> g = f;
            for (size_t k = 0; k < gb.gens.size(); ++k)
                g = g + random_tate(rng, cfg, ord, -3) * gb.gens[k];
            if (tate_val(g) > vr) return false; // a coset member beat the remainder
        }
    }
    return true;
}

bool newton_round_trip() {
    auto cfg = make_config(3, 1, 64, 256);
    std::mt19937_64 rng(777);
    const long prec = 40;
    auto total_mult = [](const NewtonPolygon& np) {
        long t = 0;
        for (auto& s : np.segments) t += s.mult;
        return t;
    };
    for (int i = 0; i < 100; ++i) {
        // multiplicativity on a random pair, per slope and in total
        LaurentElem f = random_poly(rng, cfg), g = random_poly(rng, cfg);
        auto nf = newton_polygon(f, Rat(2)), ng = newton_polygon(g, Rat(2));
        auto nfg = newton_polygon(f * g, Rat(2));
        if (total_mult(nfg) != total_mult(nf) + total_mult(ng)) return false;
        std::map<Rat, long> want, got;
        for (auto& s : nf.segments) want[s.slope] += s.mult;
        for (auto& s : ng.segments) want[s.slope] += s.mult;
        for (auto& s : nfg.segments) got[s.slope] += s.mult;
        if (got != want) return false;
        // factorization round-trip on both polynomials of the pair
        for (const LaurentElem* h : {&f, &g}) {
            auto fac = slope_factor(*h, Rat(2), prec);
            if (fac.achieved_precision < prec) return false;
            LaurentElem prod = fac.unit;
            for (auto& sf : fac.factors) prod = prod * sf.factor;
            if (coeff_error(prod, *h) < Val(prec)) return false;
            if (!is_unit(fac.unit, Rat(2))) return false;
            // refactoring reproduces the factors up to the unit part
            auto fac2 = slope_factor(prod, Rat(2), prec);
            if (fac2.factors.size() != fac.factors.size()) return false;
            for (size_t j = 0; j < fac.factors.size(); ++j) {
                if (fac2.factors[j].slope != fac.factors[j].slope) return false;
                if (coeff_error(fac2.factors[j].factor, fac.factors[j].factor) < Val(prec - 5))
                    return false;
            }
        }
    }
    return true;
}

bool idempotent_lifting() {
    auto cfg = make_config(3, 1, 64, 128);
    Family fam = quad_family(cfg);
    if (!fam.gb.certified) return false;
    auto prp = EisensteinPrime::prime_p(cfg);
    auto e = quad_idem_charp(fam, prp);
    auto lr = lift_idempotent(fam, prp, e, 0, Rat(1, 2), 40);
    if (lr.iterations > 8) return false;
    if (!lr.contraction_ok) return false;
    if (lr.final_valuation < Val(40)) return false;
    // exact contraction w(h') >= 2 w(h) + min(w(h), v_p(p)) at every step;
    // h' = h^2 (4h - 3) makes this the sharp rate
    for (size_t i = 0; i + 1 < lr.h_vals.size(); ++i)
        if (lr.h_vals[i + 1] < 2 * lr.h_vals[i] + std::min(lr.h_vals[i], Rat(1))) return false;
    // f(1 - f) below the target precision in the quotient seminorm
    TateElem<LaurentElem> one(fam.ord);
    one.set({0}, LaurentElem::one(cfg));
    auto prod = remainder_annulus(lr.f * (one - lr.f), fam.gb, cfg->Np, cfg->Ns);
    Val pv = Val::inf();
    for (const auto& [m, c] : prod.terms()) pv = val_min(pv, c.gauss_valuation(Rat(1, 2)));
    return pv >= Val(40);
}

bool ramification_oracles() {
    auto t0 = Clock::now();
    auto cfg3 = make_config(3, 1, 64, 64);
    auto cfg5 = make_config(5, 1, 64, 64);
    std::vector<std::pair<BreakReport, HerbrandReport>> pairs;
    pairs.emplace_back(as_breaks_sqrt_p(cfg3), herbrand_sqrt_p(cfg3));
    pairs.emplace_back(as_breaks_sqrt_p(cfg5), herbrand_sqrt_p(cfg5));
    pairs.emplace_back(as_breaks_zeta_p(cfg3), herbrand_zeta_p(cfg3));
    pairs.emplace_back(as_breaks_zeta_p(cfg5), herbrand_zeta_p(cfg5));
    pairs.emplace_back(as_breaks_zeta_p2(cfg3), herbrand_zeta_p2(cfg3));
    for (long m : {1L, 2L, 4L, 5L}) {
        auto br = as_breaks_as(cfg3, m);
        auto hb = herbrand_as(cfg3, m);
        if (br.b != Rat(m + 1) || br.b_log != Rat(m)) return false;
        pairs.emplace_back(br, hb);
    }
    for (const auto& [br, hb] : pairs) {
        if (!same_breaks(br, hb)) return false;
        if (!hb.hasse_arf_ok) return false; // breaks and conductors integral
    }
    return seconds_since(t0) < 120.0;
}

bool as_family_fibers() {
    auto cfg = make_config(3, 1, 64, 64);
    std::vector<Int> c9(9, Int(0));
    c9[0] = Int(-3);
    auto pr9 = EisensteinPrime::from_coeffs(cfg, c9);
    for (Rat a : {Rat(1, 2), Rat(1), Rat(2)}) {
        ASFamily fam = build_as_family(cfg, 1, a, false);
        ASFiberComparison cmp = compare_as_fiber(fam, pr9, Rat(1, 3));
        if (!cmp.exact_at_p) return false;
        if (!cmp.pass) return false;
    }
    return true;
}

bool break_convergence() {
    auto t0 = Clock::now();
    auto cfg = make_config(3, 1, 128, 64);
    TowerSpec tower = cyclotomic_tower(cfg, 1, 4);
    if (!check_sdr(tower).pass) return false;
    ConvergenceReport rep = break_convergence_experiment(tower, Rat(3), 2, 4);
    if (rep.rows.size() != 3) return false;
    // b_log stationary across the last two levels, equal to the char-p break
    const auto& r1 = rep.rows[rep.rows.size() - 2];
    const auto& r2 = rep.rows.back();
    if (r1.b_log != r2.b_log || r1.b != r2.b) return false;
    if (!rep.stationary || !rep.matches_charp) return false;
    if (r2.b_log != rep.norm_field.b_log) return false;
    return seconds_since(t0) < 600.0;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"division contract (500 randomized instances)", division_contract},
        {"quotient-norm optimality (200 x 200 cosets)", quotient_norm_optimality},
        {"Newton multiplicativity and factorization round-trip", newton_round_trip},
        {"idempotent lifting in the quadratic-split family", idempotent_lifting},
        {"ramification break oracle agreement", ramification_oracles},
        {"Artin-Schreier family fibers", as_family_fibers},
        {"break convergence along the cyclotomic tower", break_convergence},
    };
    bool all_ok = true;
    for (const auto& c : criteria) {
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << note << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
