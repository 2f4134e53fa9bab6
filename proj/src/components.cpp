#include "ocring/components.hpp"

namespace ocring {

namespace {

Val val_div(const Val& v, long k) {
    if (v.is_inf()) return v;
    Rat q = v.finite() / k;
    q.canonicalize();
    return Val(q);
}

Val tate_gauss_val(const TateElem<LaurentElem>& f, const Rat& r) {
    Val v = Val::inf();
    for (const auto& [m, c] : f.terms()) v = val_min(v, c.gauss_valuation(r));
    return v;
}

TateElem<LaurentElem> truncate_tate(const TateElem<LaurentElem>& f, const Rat& r,
                                    const Rat& cut) {
    TateElem<LaurentElem> out(f.order());
    for (const auto& [m, c] : f.terms()) {
        LaurentElem t = c.truncate_gauss(r, cut);
        if (!t.is_zero()) out.set(m, t);
    }
    return out;
}

FiberElem random_fiber_coeff(std::mt19937_64& rng, const PrimePtr& pr) {
    if (pr->char_p) {
        std::uniform_int_distribution<long> e_d(0, 4), c_d(0, pr->cfg->p - 1);
        FpLaurent f(pr->cfg->p);
        for (int t = 0; t < 3; ++t) f.add_term(e_d(rng), c_d(rng));
        return FiberElem::from_fp(pr, f);
    }
    std::uniform_int_distribution<long> m_d(-8, 8);
    std::vector<Rat> c;
    for (long i = 0; i < pr->e; ++i) c.emplace_back(m_d(rng));
    return FiberElem::from_poly(pr, std::move(c));
}

TateElem<FiberElem> random_fiber_tate(std::mt19937_64& rng, const PrimePtr& pr,
                                      const OrderPtr& ord) {
    std::uniform_int_distribution<long> deg_d(0, 2);
    TateElem<FiberElem> f(ord);
    for (int t = 0; t < 3; ++t) {
        Monomial m(ord->nvars);
        for (auto& e : m) e = deg_d(rng);
        f.add_term(m, random_fiber_coeff(rng, pr));
    }
    return f;
}

} // namespace

FiberAlgebra fiber(const Family& fam, const PrimePtr& pr) {
    std::vector<TateElem<FiberElem>> gens;
    for (const auto& g : fam.gb.gens) gens.push_back(reduce_tate(g, pr));
    FiberAlgebra fib;
    fib.pr = pr;
    fib.ord = fam.ord;
    fib.gb = certify_concrete<FiberElem>(std::move(gens), fam.cfg->Np, fam.cfg->Ns);
    if (fam.gb.certified && !fib.gb.certified)
        throw std::logic_error("fiber: certification lost under reduction");
    return fib;
}

TateElem<FiberElem> reduce_tate(const TateElem<LaurentElem>& f, const PrimePtr& pr) {
    TateElem<FiberElem> out(f.order());
    for (const auto& [m, c] : f.terms()) {
        FiberElem x = reduce_mod_eisenstein(c, pr);
        if (!x.is_zero()) out.add_term(m, x);
    }
    return out;
}

Val fiber_quotient_valuation(const FiberAlgebra& fib, const TateElem<FiberElem>& f) {
    const ConfigPtr& cfg = fib.pr->cfg;
    TateElem<FiberElem> rem = divide(f, fib.gb, cfg->Np, cfg->Ns).remainder;
    Val v = Val::inf();
    for (const auto& [m, c] : rem.terms()) v = val_min(v, c.valuation());
    return v;
}

std::vector<Val> spectral_sequence(const FiberAlgebra& fib, const TateElem<FiberElem>& f,
                                   long n, long i_max) {
    if (n < 2) throw std::domain_error("spectral_sequence: n >= 2 required");
    const ConfigPtr& cfg = fib.pr->cfg;
    std::vector<Val> out;
    TateElem<FiberElem> g = divide(f, fib.gb, cfg->Np, cfg->Ns).remainder;
    long scale = 1;
    for (long i = 0; i <= i_max; ++i) {
        out.push_back(val_div(fiber_quotient_valuation(fib, g), scale));
        if (i == i_max) break;
        TateElem<FiberElem> pow = g;
        for (long j = 1; j < n; ++j) pow = pow * g;
        g = divide(pow, fib.gb, cfg->Np, cfg->Ns).remainder;
        scale *= n;
    }
    return out;
}

TransferCheckReport transfer_inequality_check(const Family& fam, const PrimePtr& p,
                                              const PrimePtr& q, long c, long n,
                                              long samples, unsigned long seed) {
    if (c < 0) throw std::domain_error("transfer: c >= 0 required");
    long dmin = std::min(p->char_p ? LONG_MAX : p->e, q->char_p ? LONG_MAX : q->e);
    if (c >= dmin) throw std::domain_error("transfer: c < min(deg p, deg q) required");
    FiberAlgebra fib = fiber(fam, q);
    std::mt19937_64 rng(seed);
    TransferCheckReport rep;
    for (long s = 0; s < samples; ++s) {
        TateElem<FiberElem> f = random_fiber_tate(rng, q, fam.ord);
        Val w = fiber_quotient_valuation(fib, f);
        if (w.is_inf()) continue;
        TateElem<FiberElem> pow = f;
        for (long j = 1; j < n; ++j) {
            pow = pow * f;
            pow = divide(pow, fib.gb, fam.cfg->Np, fam.cfg->Ns).remainder;
        }
        Val wn = fiber_quotient_valuation(fib, pow);
        ++rep.samples;
        if (!(wn.is_inf() || wn.finite() <= Rat(n) * w.finite() + Rat(c))) ++rep.violations;
    }
    return rep;
}

LaurentElem lift_fiber_to_series(const FiberElem& e, const ConfigPtr& cfg, long pN) {
    LaurentElem out(cfg);
    if (e.is_zero()) return out;
    if (e.char_p()) {
        for (const auto& [n, c] : e.fp().terms()) {
            if (n < 0) throw std::domain_error("lift: fiber element not integral");
            out.set(n, CoeffElem::from_int(cfg, c));
        }
        return out;
    }
    Int m = pow_int(cfg->p, pN);
    const auto& c = e.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int den = c[i].get_den();
        if (den % cfg->p == 0) throw std::domain_error("lift: fiber element not integral");
        Int a = (c[i].get_num() % m) * inv_mod(den % m, m) % m;
        if (a < 0) a += m;
        out.set((long)i, CoeffElem::from_rat(cfg, Rat(a)));
    }
    return out;
}

TateElem<LaurentElem> lift_tate_to_series(const TateElem<FiberElem>& e, const ConfigPtr& cfg,
                                          long pN) {
    TateElem<LaurentElem> out(e.order());
    for (const auto& [m, c] : e.terms()) {
        LaurentElem x = lift_fiber_to_series(c, cfg, pN);
        if (!x.is_zero()) out.set(m, x);
    }
    return out;
}

LiftReport lift_idempotent(const Family& fam, const PrimePtr& pr,
                           const TateElem<FiberElem>& e, long c, const Rat& r,
                           long target_precision) {
    if (r <= 0) throw std::domain_error("lift_idempotent: r > 0 required");
    if (!pr->char_p && r < Rat(1, pr->e))
        throw std::domain_error("lift_idempotent: r >= 1/deg(p) required");
    if (c > 0 && r >= Rat(1, 2 * c))
        throw std::domain_error("lift_idempotent: r < 1/(2c) required");
    const ConfigPtr& cfg = fam.cfg;
    Rat cut = Rat(target_precision + 8);
    // exact contraction rate: h' = h^2 (4h - 3), so w(h') >= 2w + min(w, v_p(3))
    Rat v3(cfg->p == 3 ? 1 : 0);
    auto expected = [&](const Rat& w) {
        return std::min(Rat(2 * w + std::min(w, v3)), Rat(target_precision));
    };

    LiftReport rep;
    TateElem<LaurentElem> f =
        remainder_annulus(lift_tate_to_series(e, cfg, cfg->Np), fam.gb, cfg->Np, cfg->Ns);
    Rat prev(0);
    bool have_prev = false;
    for (long it = 0; it < 64; ++it) {
        TateElem<LaurentElem> h = remainder_annulus(f * f - f, fam.gb, cfg->Np, cfg->Ns);
        Val w = tate_gauss_val(h, r);
        if (w.is_inf() || w >= Val(target_precision)) {
            rep.f = std::move(f);
            rep.iterations = it;
            rep.final_valuation = w;
            if (have_prev && !w.is_inf() && w.finite() < expected(prev))
                rep.contraction_ok = false;
            return rep;
        }
        if (!(w > Val(0)))
            throw convergence_error("lift_idempotent: |f^2 - f| not below 1 (bad c or r)");
        if (have_prev && w.finite() < expected(prev))
            rep.contraction_ok = false;
        rep.h_vals.push_back(w.finite());
        prev = w.finite();
        have_prev = true;
        // f <- f + h - 2 h f, truncated to the relevant Gauss ball
        TateElem<LaurentElem> two_hf = (h * f).scaled(LaurentElem::monomial(cfg, CoeffElem::from_int(cfg, 2), 0));
        f = remainder_annulus(f + h - two_hf, fam.gb, cfg->Np, cfg->Ns);
        f = truncate_tate(f, r, cut);
    }
    throw convergence_error("lift_idempotent: iteration cap reached");
}

BijectionReport component_bijection_report(const Family& fam, const PrimePtr& pr,
                                           const std::vector<TateElem<FiberElem>>& idem_q,
                                           const std::vector<TateElem<FiberElem>>& idem_p,
                                           const Rat& r, long target_precision) {
    const ConfigPtr& cfg = fam.cfg;
    BijectionReport rep;
    rep.count_p = idem_p.size();
    rep.count_q = idem_q.size();
    std::vector<TateElem<LaurentElem>> lifts;
    for (const auto& e : idem_q) {
        LiftReport lr = lift_idempotent(fam, pr, e, 0, r, target_precision);
        // kernel triviality: a nonzero idempotent must stay nonzero in the fiber
        if (!e.is_zero() && reduce_tate(lr.f, pr).is_zero()) rep.kernel_trivial = false;
        lifts.push_back(std::move(lr.f));
    }
    rep.lifted = lifts.size();
    for (size_t i = 0; i < lifts.size(); ++i)
        for (size_t j = i + 1; j < lifts.size(); ++j) {
            Val w = tate_gauss_val(
                remainder_annulus(lifts[i] * lifts[j], fam.gb, cfg->Np, cfg->Ns), r);
            if (!(w.is_inf() || w >= Val(target_precision))) rep.orthogonal = false;
        }
    if (!lifts.empty()) {
        TateElem<LaurentElem> sum(fam.ord);
        for (const auto& f : lifts) sum = sum + f;
        TateElem<LaurentElem> one(fam.ord);
        one.set(mono_one(fam.ord->nvars), LaurentElem::one(cfg));
        Val w = tate_gauss_val(remainder_annulus(sum - one, fam.gb, cfg->Np, cfg->Ns), r);
        if (!(w.is_inf() || w >= Val(target_precision))) rep.sums_to_one = false;
    }
    rep.matched = rep.count_p == rep.count_q && rep.lifted == rep.count_q;
    return rep;
}

FpLaurent fp_newton_root(const std::vector<FpLaurent>& poly, long a0, long N) {
    long p = poly.at(0).p() ? poly[0].p() : poly.at(1).p();
    auto eval = [&](const std::vector<FpLaurent>& g, const FpLaurent& x) {
        FpLaurent v(p);
        for (long i = (long)g.size() - 1; i >= 0; --i) v = (v * x + g[i]).truncated(N);
        return v;
    };
    std::vector<FpLaurent> deriv;
    for (size_t i = 1; i < poly.size(); ++i) deriv.push_back(poly[i].scaled((long)i));
    FpLaurent x = FpLaurent::monomial(p, a0, 0);
    for (int it = 0; it < 64; ++it) {
        FpLaurent v = eval(poly, x);
        if (v.is_zero()) return x;
        FpLaurent d = eval(deriv, x);
        if (d.is_zero() || d.min_exp() != 0)
            throw std::domain_error("fp_newton_root: seed not a simple root");
        x = (x - v * d.inverse_series(N)).truncated(N);
        if (eval(poly, x).is_zero()) return x;
    }
    throw convergence_error("fp_newton_root: no convergence");
}

FiberElem fiber_newton_root(const std::vector<FiberElem>& poly, FiberElem seed, long digits) {
    auto eval = [&](const std::vector<FiberElem>& g, const FiberElem& x) {
        FiberElem v(x.prime());
        for (long i = (long)g.size() - 1; i >= 0; --i) v = v * x + g[i];
        return v;
    };
    std::vector<FiberElem> deriv;
    for (size_t i = 1; i < poly.size(); ++i) {
        FiberElem s = poly[i];
        for (size_t j = 1; j < i; ++j) s = s + poly[i];
        deriv.push_back(std::move(s));
    }
    FiberElem x = std::move(seed);
    for (int it = 0; it < 64; ++it) {
        FiberElem v = eval(poly, x);
        if (v.is_zero() || v.valuation() >= Val(digits)) return x;
        FiberElem d = eval(deriv, x);
        if (d.is_zero() || !(d.valuation() == Val(0)))
            throw std::domain_error("fiber_newton_root: seed not a simple root");
        x = x - v * d.invert();
    }
    throw convergence_error("fiber_newton_root: no convergence");
}

} // namespace ocring
