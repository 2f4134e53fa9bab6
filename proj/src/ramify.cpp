#include "ocring/ramify.hpp"

#include <algorithm>
#include <set>

namespace ocring {

namespace {

FiberElem fiber_int(const PrimePtr& pr, long c) {
    if (pr->char_p) return FiberElem::from_fp(pr, FpLaurent::monomial(pr->cfg->p, c, 0));
    return FiberElem::from_poly(pr, {Rat(c)});
}

FiberElem fiber_pow(const FiberElem& x, long k) {
    FiberElem out = FiberElem::one(x.prime());
    for (long i = 0; i < k; ++i) out = out * x;
    return out;
}

long binom(long n, long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return b.get_si();
}

// a cyclic totally ramified extension together with its verified action: the
// generating element `gen` with minimal polynomial g, the images of gen under
// the powers of a generator of the Galois group, and the uniformizer t with
// minimal polynomial f used for displacement and distance measurements
struct CyclicFixture {
    Ext2 L;
    Ext2::Elem gen;
    std::vector<FiberElem> g;
    std::vector<Ext2::Elem> sigma_gen;
    Ext2::Elem t;
    std::vector<FiberElem> f;
    std::vector<Ext2::Elem> sigma_t;
};

long smallest_primitive_root(long p) {
    for (long r = 2; r < p; ++r) {
        long x = 1;
        bool primitive = true;
        for (long k = 1; k < p - 1; ++k) {
            x = (x * r) % p;
            if (x == 1) { primitive = false; break; }
        }
        if (primitive) return r;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

CyclicFixture fixture_sqrt_p(const ConfigPtr& cfg) {
    auto base = EisensteinPrime::from_coeffs(cfg, {Int(-cfg->p)});
    FiberElem pi = FiberElem::uniformizer(base);
    std::vector<FiberElem> g = {-pi, FiberElem(base), FiberElem::one(base)};
    Ext2 L(base, g);
    Ext2::Elem z = L.z();
    CyclicFixture fx{std::move(L), z, g, {}, z, g, {}};
    fx.sigma_gen = {fx.L.neg(z)};
    fx.sigma_t = fx.sigma_gen;
    return fx;
}

CyclicFixture fixture_zeta_p(const ConfigPtr& cfg) {
    long p = cfg->p;
    if (p == 2) throw std::domain_error("fixture_zeta_p: trivial for p = 2");
    auto base = EisensteinPrime::from_coeffs(cfg, {Int(-p)});
    // minimal polynomial of zeta_p - 1: sum_k C(p, k+1) z^k
    std::vector<FiberElem> g;
    for (long k = 0; k < p; ++k) g.push_back(fiber_int(base, binom(p, k + 1)));
    Ext2 L(base, g);
    Ext2::Elem z = L.z();
    CyclicFixture fx{std::move(L), z, g, {}, z, g, {}};
    long r = smallest_primitive_root(p);
    Ext2::Elem one = fx.L.one();
    long j = 1;
    for (long k = 1; k < p - 1; ++k) {
        j = (j * r) % p;
        fx.sigma_gen.push_back(fx.L.sub(fx.L.pow(fx.L.add(one, z), j), one));
    }
    fx.sigma_t = fx.sigma_gen;
    return fx;
}

CyclicFixture fixture_zeta_p2(const ConfigPtr& cfg) {
    long p = cfg->p;
    if (p == 2) throw std::domain_error("fixture_zeta_p2: p must be odd here");
    auto base = cyclotomic_level(cfg, 1);
    FiberElem pi = FiberElem::uniformizer(base);
    // minimal polynomial of w = zeta_{p^2} - 1 over Q_p(zeta_p):
    // (1 + w)^p - 1 - pi
    std::vector<FiberElem> g;
    g.push_back(-pi);
    for (long k = 1; k <= p; ++k) g.push_back(fiber_int(base, binom(p, k)));
    Ext2 L(base, g);
    Ext2::Elem w = L.z();
    CyclicFixture fx{std::move(L), w, g, {}, w, g, {}};
    Ext2::Elem one = fx.L.one();
    long p2 = p * p, j = 1;
    for (long k = 1; k < p; ++k) {
        j = (j * (1 + p)) % p2;
        fx.sigma_gen.push_back(fx.L.sub(fx.L.pow(fx.L.add(one, w), j), one));
    }
    fx.sigma_t = fx.sigma_gen;
    return fx;
}

CyclicFixture fixture_as(const ConfigPtr& cfg, long m) {
    long p = cfg->p;
    if (m < 1 || m % p == 0) throw std::domain_error("fixture_as: need m >= 1 prime to p");
    auto base = EisensteinPrime::prime_p(cfg);
    std::vector<FiberElem> g(p + 1, FiberElem(base));
    g[0] = FiberElem::from_fp(base, -FpLaurent::monomial(p, 1, -m));
    g[1] = -FiberElem::one(base);
    g[p] = FiberElem::one(base);
    Ext2 L(base, g);
    Ext2::Elem y = L.z();
    // t = S^a y^b with p a - m b = 1
    long b = 1;
    while ((m * b) % p != p - 1) ++b;
    long a = (1 + m * b) / p;
    FiberElem Sa = FiberElem::from_fp(base, FpLaurent::monomial(p, 1, a));
    Ext2::Elem t = L.scale(L.pow(y, b), Sa);
    std::vector<FiberElem> f = L.char_poly(t);
    CyclicFixture fx{std::move(L), y, g, {}, t, f, {}};
    for (long c = 1; c < p; ++c) {
        Ext2::Elem yc = fx.L.add(y, fx.L.from_base(fiber_int(base, c)));
        fx.sigma_gen.push_back(yc);
        fx.sigma_t.push_back(fx.L.scale(fx.L.pow(yc, b), Sa));
    }
    return fx;
}

HerbrandReport herbrand_from_fixture(const CyclicFixture& fx) {
    std::vector<long> iv;
    for (size_t k = 0; k < fx.sigma_gen.size(); ++k) {
        if (!fx.L.is_zero(fx.L.eval(fx.g, fx.sigma_gen[k])))
            throw std::logic_error("herbrand: Galois action fails the minimal polynomial");
        Val v = fx.L.valuation(fx.L.sub(fx.sigma_t[k], fx.t));
        if (v.is_inf() || v.finite().get_den() != 1 || v.finite() < 1)
            throw std::logic_error("herbrand: displacement is not a positive integer");
        iv.push_back(v.finite().get_num().get_si());
    }
    return herbrand_oracle(iv);
}

template <class C>
TateElem<C> tate_pow(const TateElem<C>& x, long k, long pN, long sN) {
    TateElem<C> out = x;
    for (long i = 1; i < k; ++i) out = (out * x).normalized(pN, sN);
    return out;
}

} // namespace

std::vector<Rat> distances_from_shift_valuations(const std::vector<Val>& vj, long e) {
    if ((long)vj.size() != e + 1) throw std::domain_error("distances: need e+1 valuations");
    std::vector<std::pair<long, Rat>> pts;
    for (long j = 1; j <= e; ++j)
        if (!vj[j].is_inf()) pts.emplace_back(j - 1, vj[j].finite());
    if (pts.empty() || pts.front().first != 0)
        throw std::domain_error("distances: c_1 vanishes (inseparable shift)");
    // lower convex hull, left to right
    std::vector<std::pair<long, Rat>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            Rat lhs = (b.second - a.second) * Rat(pt.first - a.first);
            Rat rhs = (pt.second - a.second) * Rat(b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<Rat> d;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        long width = hull[i + 1].first - hull[i].first;
        Rat mu = (hull[i].second - hull[i + 1].second) / Rat(width);
        Rat dv = mu / Rat(e);
        dv.canonicalize();
        for (long k = 0; k < width; ++k) d.push_back(dv);
    }
    std::sort(d.begin(), d.end());
    return d;
}

RootDistanceData root_distances(const Ext2& L, const Ext2::Elem& t,
                                const std::vector<FiberElem>& f) {
    long e = L.deg();
    if ((long)f.size() != e + 1) throw std::domain_error("root_distances: deg f != [L:K]");
    if (!L.is_zero(L.eval(f, t))) throw std::domain_error("root_distances: f(t) != 0");
    // f(X + t) = sum_j c_j X^j with c_j = sum_{i >= j} C(i, j) f_i t^{i-j}
    std::vector<Ext2::Elem> tpow(e + 1);
    tpow[0] = L.one();
    for (long i = 1; i <= e; ++i) tpow[i] = L.mul(tpow[i - 1], t);
    std::vector<Val> vj(e + 1, Val::inf());
    for (long j = 1; j <= e; ++j) {
        Ext2::Elem cj = L.zero();
        for (long i = j; i <= e; ++i) {
            Ext2::Elem term = L.scale(tpow[i - j], f[i] * fiber_int(L.base(), binom(i, j)));
            cj = L.add(cj, term);
        }
        vj[j] = L.valuation(cj);
    }
    RootDistanceData out;
    out.e = e;
    out.d = distances_from_shift_valuations(vj, e);
    if (vj[1].is_inf()) throw std::domain_error("root_distances: f'(t) = 0");
    out.different = vj[1].finite() / Rat(e);
    out.different.canonicalize();
    Rat sum(0);
    for (const Rat& x : out.d) sum += x;
    sum.canonicalize();
    out.sum_ok = (sum == out.different);
    return out;
}

BreakReport breaks_from_distances(const std::vector<Rat>& d, long e) {
    BreakReport rep;
    rep.e = e;
    rep.steps.emplace_back(Rat(0), 1);
    if (e <= 1 || d.empty()) {
        rep.b = 0;
        rep.b_log = 0;
        return rep;
    }
    std::vector<Rat> ds = d;
    std::sort(ds.begin(), ds.end());
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i && ds[i] == ds[i - 1]) continue;
        const Rat& delta = ds[i];
        Rat a = delta;
        long above = 0;
        for (const Rat& dj : ds) {
            a += std::min(delta, dj);
            if (dj > delta) ++above;
        }
        a.canonicalize();
        if (e % (1 + above)) throw std::logic_error("breaks: cluster sizes do not divide e");
        rep.steps.emplace_back(a, e / (1 + above));
    }
    rep.b = rep.steps.back().first;
    rep.b_log = rep.b > 1 ? Rat(rep.b - 1) : Rat(0);
    rep.b_log.canonicalize();
    return rep;
}

BreakReport as_breaks(const Ext2& L, const Ext2::Elem& t, const std::vector<FiberElem>& f) {
    RootDistanceData rd = root_distances(L, t, f);
    if (!rd.sum_ok) throw std::logic_error("as_breaks: distance sum mismatch");
    return breaks_from_distances(rd.d, rd.e);
}

HerbrandReport herbrand_oracle(const std::vector<long>& i_vals) {
    HerbrandReport rep;
    rep.i_vals = i_vals;
    long e = (long)i_vals.size() + 1;
    if (e == 1) {
        rep.b = 0;
        rep.b_log = 0;
        return rep;
    }
    for (long i : i_vals)
        if (i < 1) throw std::domain_error("herbrand_oracle: extension not totally ramified");
    auto phi = [&](long u) {
        Rat s(u + 1);
        for (long i : i_vals) s += Rat(std::min(i, u + 1));
        Rat v = s / Rat(e) - 1;
        v.canonicalize();
        return v;
    };
    std::set<long> lowers;
    for (long i : i_vals) lowers.insert(i - 1);
    for (long u : lowers) rep.breaks.emplace_back(u, phi(u));
    rep.b = rep.breaks.back().second + 1;
    rep.b.canonicalize();
    rep.b_log = rep.breaks.back().second;
    long umax = *lowers.rbegin();
    for (long j = 1; j < e; ++j) {
        Rat fj(0);
        for (long u = 0; u <= umax; ++u) {
            long size = 1;
            bool nontrivial = false;
            for (long k = 1; k < e; ++k)
                if (i_vals[k - 1] >= u + 1) {
                    ++size;
                    if ((j * k) % e != 0) nontrivial = true;
                }
            if (nontrivial) fj += Rat(size, e);
        }
        fj.canonicalize();
        if (fj.get_den() != 1) rep.hasse_arf_ok = false;
        rep.conductors.push_back(std::move(fj));
    }
    return rep;
}

HerbrandReport herbrand_sqrt_p(const ConfigPtr& cfg) {
    return herbrand_from_fixture(fixture_sqrt_p(cfg));
}
HerbrandReport herbrand_zeta_p(const ConfigPtr& cfg) {
    return herbrand_from_fixture(fixture_zeta_p(cfg));
}
HerbrandReport herbrand_zeta_p2(const ConfigPtr& cfg) {
    return herbrand_from_fixture(fixture_zeta_p2(cfg));
}
HerbrandReport herbrand_as(const ConfigPtr& cfg, long m) {
    return herbrand_from_fixture(fixture_as(cfg, m));
}

BreakReport as_breaks_sqrt_p(const ConfigPtr& cfg) {
    auto fx = fixture_sqrt_p(cfg);
    return as_breaks(fx.L, fx.t, fx.f);
}
BreakReport as_breaks_zeta_p(const ConfigPtr& cfg) {
    auto fx = fixture_zeta_p(cfg);
    return as_breaks(fx.L, fx.t, fx.f);
}
BreakReport as_breaks_zeta_p2(const ConfigPtr& cfg) {
    auto fx = fixture_zeta_p2(cfg);
    return as_breaks(fx.L, fx.t, fx.f);
}
BreakReport as_breaks_as(const ConfigPtr& cfg, long m) {
    auto fx = fixture_as(cfg, m);
    return as_breaks(fx.L, fx.t, fx.f);
}

ASFamily build_as_family(const ConfigPtr& cfg, long m, const Rat& a, bool log_shift) {
    long p = cfg->p;
    auto fx = fixture_as(cfg, m);
    ASFamily out;
    out.e = p;
    out.m = m;
    out.b_pow = 1;
    while ((m * out.b_pow) % p != p - 1) ++out.b_pow;
    out.a_num = (1 + m * out.b_pow) / p;
    for (const auto& c : fx.f) out.p0.push_back(c.fp());
    // Eisenstein sanity over F_p[[S]]
    if (out.p0[p] != FpLaurent::one(p) || out.p0[0].v_S() != Val(1))
        throw std::logic_error("build_as_family: p0 is not Eisenstein");
    for (long i = 1; i < p; ++i)
        if (!out.p0[i].is_zero() && out.p0[i].min_exp() < 1)
            throw std::logic_error("build_as_family: p0 is not Eisenstein");
    Rat ac = a;
    ac.canonicalize();
    if (ac < 0) throw std::domain_error("build_as_family: a must be >= 0");
    out.alpha0 = ac.get_num().get_si();
    out.beta0 = ac.get_den().get_si();
    if (log_shift) out.alpha0 += out.beta0;
    auto ord = make_order(OrderContext::lex(2)); // variables X0, Y0
    TateElem<LaurentElem> P0(ord);
    for (long i = 0; i <= p; ++i) {
        if (out.p0[i].is_zero()) continue;
        LaurentElem c(cfg);
        for (const auto& [n, digit] : out.p0[i].terms())
            c.set(n, CoeffElem::from_rat(cfg, Rat(digit)));
        P0.set({i, 0}, c);
    }
    TateElem<LaurentElem> Q0(ord);
    LaurentElem sa(cfg);
    sa.set(out.alpha0, CoeffElem::from_rat(cfg, Rat(1)));
    Q0.set({0, 1}, sa);
    Q0 = (Q0 - tate_pow(P0, out.beta0, cfg->Np, cfg->Ns)).normalized(cfg->Np, cfg->Ns);
    out.fam = Family{cfg, ord, certify_concrete<LaurentElem>({Q0}, cfg->Np, cfg->Ns),
                     "artin-schreier"};
    if (!out.fam.gb.certified) throw std::logic_error("build_as_family: basis not certified");
    return out;
}

ASFiberComparison compare_as_fiber(const ASFamily& asf, const PrimePtr& pr, const Rat& xi_vp) {
    const Family& fam = asf.fam;
    long p = fam.cfg->p;
    ASFiberComparison out;

    // the fiber at (p) must reproduce the direct characteristic-p generator
    auto prp = EisensteinPrime::prime_p(fam.cfg);
    TateElem<FiberElem> at_p = reduce_tate(fam.gb.gens[0], prp);
    TateElem<FiberElem> Pp(fam.ord);
    for (long i = 0; i <= p; ++i)
        if (!asf.p0[i].is_zero()) Pp.set({i, 0}, FiberElem::from_fp(prp, asf.p0[i]));
    TateElem<FiberElem> direct_p(fam.ord);
    direct_p.set({0, 1}, FiberElem::from_fp(prp, FpLaurent::monomial(p, 1, asf.alpha0)));
    direct_p = direct_p - tate_pow(Pp, asf.beta0, fam.cfg->Np, fam.cfg->Ns);
    out.exact_at_p = (at_p == direct_p);

    // characteristic-0 presentation over kappa(pr): y^p - y = pi^-m,
    // t = pi^a y^b, generator pi^alpha0 Y0 - (minpoly of t)^beta0
    if (pr->char_p) throw std::domain_error("compare_as_fiber: pr must be a finite prime");
    FiberElem pi = FiberElem::uniformizer(pr);
    std::vector<FiberElem> gy(p + 1, FiberElem(pr));
    gy[0] = -fiber_pow(pi, asf.m).invert();
    gy[1] = -FiberElem::one(pr);
    gy[p] = FiberElem::one(pr);
    Ext2 L0(pr, gy);
    Ext2::Elem t2 = L0.scale(L0.pow(L0.z(), asf.b_pow), fiber_pow(pi, asf.a_num));
    std::vector<FiberElem> q0 = L0.char_poly(t2);
    TateElem<FiberElem> Pq(fam.ord);
    for (long i = 0; i <= p; ++i)
        if (!q0[i].is_zero()) Pq.set({i, 0}, q0[i]);
    TateElem<FiberElem> direct_q(fam.ord);
    direct_q.set({0, 1}, fiber_pow(pi, asf.alpha0));
    direct_q = direct_q - tate_pow(Pq, asf.beta0, fam.cfg->Np, fam.cfg->Ns);

    TateElem<FiberElem> diff = reduce_tate(fam.gb.gens[0], pr) - direct_q;
    out.min_agreement = Val::inf();
    for (const auto& [mono, c] : diff.terms()) out.min_agreement = val_min(out.min_agreement, c.valuation());
    Rat thr = Rat(pr->e) * xi_vp;
    thr.canonicalize();
    out.threshold = Val(thr);
    out.pass = out.exact_at_p && out.min_agreement >= out.threshold;
    return out;
}

} // namespace ocring
