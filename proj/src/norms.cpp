#include "ocring/norms.hpp"

#include <algorithm>

namespace ocring {

namespace {

FiberElem fiber_pow(const FiberElem& x, long k) {
    FiberElem out = FiberElem::one(x.prime());
    for (long i = 0; i < k; ++i) out = out * x;
    return out;
}

bool is_square_residue(long c, long p) {
    c %= p;
    if (c < 0) c += p;
    for (long x = 0; x < p; ++x)
        if ((x * x) % p == c) return true;
    return false;
}

} // namespace

TowerSpec cyclotomic_tower(ConfigPtr cfg, long n0, long N) {
    TowerSpec t;
    t.xi_vp = Rat(1, cfg->p - 1);
    t.cfg = std::move(cfg);
    t.n0 = n0;
    t.N = N;
    return t;
}

SdrReport check_sdr(const TowerSpec& tower) {
    const ConfigPtr& cfg = tower.cfg;
    long p = cfg->p;
    SdrReport rep;
    rep.xi_ok = tower.xi_vp > 0 && tower.xi_vp <= 1;
    if (!rep.xi_ok) return rep;
    long lo = std::max(tower.n0, 1L);
    bool all = true;
    for (long n = lo; n < tower.N; ++n) {
        auto level = [&](long k) { return cyclotomic_level(cfg, tower.constant_rule ? 1 : k); };
        auto pr_lo = level(n);
        auto pr_hi = level(n + 1);
        SdrLevel lev;
        lev.n = n;
        lev.degree_ratio = pr_hi->e / pr_lo->e;
        // pi_n inside K_{n+1}: (1 + pi_{n+1})^p - 1 for the genuine rule,
        // pi itself for the frozen tower
        FiberElem pi = FiberElem::uniformizer(pr_hi);
        FiberElem pi_lo = tower.constant_rule
                              ? pi
                              : fiber_pow(FiberElem::one(pr_hi) + pi, p) - FiberElem::one(pr_hi);
        lev.v_congruence = (fiber_pow(pi, p) - pi_lo).valuation();
        Rat vx = Rat(pr_hi->e) * tower.xi_vp;
        vx.canonicalize();
        lev.v_xi = Val(vx);
        lev.pass = (lev.degree_ratio == p) && (lev.v_congruence >= lev.v_xi);
        if (!lev.pass) all = false;
        rep.levels.push_back(std::move(lev));
    }
    rep.pass = all && !rep.levels.empty();
    return rep;
}

NormFieldApprox classify_quadratic(const PrimePtr& pr, const Rat& d, long pi_precision) {
    long p = pr->cfg->p;
    if (p == 2) throw std::domain_error("classify_quadratic: p must be odd");
    if (d == 0) throw std::domain_error("classify_quadratic: d must be nonzero");
    NormFieldApprox out;
    out.pi_precision = pi_precision;
    FiberElem dd = FiberElem::from_poly(pr, {d});
    Val v = dd.valuation();
    if (v.finite().get_den() != 1)
        throw std::logic_error("classify_quadratic: non-integral valuation");
    long vz = v.finite().get_num().get_si();
    if (vz % 2 != 0) {
        // odd valuation: sqrt(d) generates a ramified quadratic extension with
        // uniformizer squaring to d pi^(1-vz); its digit series is the digit
        // series of d shifted from exponent vz down to exponent 1
        out.kind = NormExtKind::ramified;
        out.degree = 2;
        std::vector<long> digits = pi_digits(dd, vz, pi_precision);
        FpLaurent series(p);
        for (long i = 0; i < (long)digits.size(); ++i)
            if (digits[i]) series.add_term(1 + i, digits[i]);
        out.poly = {-series, FpLaurent::zero(p), FpLaurent::one(p)};
        out.b = 1; // tame quadratic
        out.b_log = 0;
        return out;
    }
    long c = residue_digit(dd, vz); // residue of the unit d pi^-vz
    if (c == 0) throw std::logic_error("classify_quadratic: zero residue");
    if (is_square_residue(c, p)) {
        // the unit is a square (Hensel, p odd), so sqrt(d) is already in K
        out.kind = NormExtKind::trivial;
        out.degree = 1;
        out.poly = {-FpLaurent::monomial(p, 1, 1), FpLaurent::one(p)};
    } else {
        out.kind = NormExtKind::unramified;
        out.degree = 2;
        out.poly = {FpLaurent::monomial(p, p - (c % p), 0), FpLaurent::zero(p),
                    FpLaurent::one(p)};
    }
    out.b = 0;
    out.b_log = 0;
    return out;
}

NormFieldApprox norm_field_min_poly(const TowerSpec& tower, const Rat& d, long N,
                                    long pi_precision) {
    auto at = [&](long n) {
        return classify_quadratic(cyclotomic_level(tower.cfg, n), d, pi_precision);
    };
    NormFieldApprox lo = at(N);
    NormFieldApprox hi = at(N + 1);
    if (lo.degree != hi.degree || lo.kind != hi.kind || lo.poly != hi.poly)
        throw precision_error("norm_field_min_poly: degree not stationary at level " +
                              std::to_string(N));
    lo.level = N;
    return lo;
}

ConvergenceReport break_convergence_experiment(const TowerSpec& tower, const Rat& d,
                                               long n_lo, long n_hi) {
    ConvergenceReport rep;
    for (long n = n_lo; n <= n_hi; ++n) {
        NormFieldApprox cls = classify_quadratic(cyclotomic_level(tower.cfg, n), d, 8);
        BreakRow row{n, Rat(0), Rat(0)};
        if (cls.kind == NormExtKind::ramified) {
            // totally ramified tame quadratic: the displacement is v_L(2 t) = 1
            HerbrandReport hb = herbrand_oracle({1});
            row.b = hb.b;
            row.b_log = hb.b_log;
        }
        rep.rows.push_back(row);
    }
    // stationarity is certified at the top two computed levels
    rep.norm_field = norm_field_min_poly(tower, d, std::max(n_lo, n_hi - 1), 8);
    if (rep.rows.size() >= 2) {
        const BreakRow& a = rep.rows[rep.rows.size() - 2];
        const BreakRow& b = rep.rows.back();
        rep.stationary = (a.b == b.b && a.b_log == b.b_log);
        rep.matches_charp =
            rep.stationary && b.b == rep.norm_field.b && b.b_log == rep.norm_field.b_log;
    }
    return rep;
}

} // namespace ocring
