#include "ocring/newton.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ocring/qpoly.hpp"

namespace ocring {

namespace {

using Point = std::pair<Rat, Rat>;

// lower convex hull of points with distinct x handled by keeping minimal y
std::vector<Point> lower_hull(std::vector<Point> pts) {
    std::map<Rat, Rat> best;
    for (auto& [x, y] : pts) {
        auto it = best.find(x);
        if (it == best.end() || y < it->second) best[x] = y;
    }
    std::vector<Point> h;
    for (auto& [x, y] : best) {
        while (h.size() >= 2) {
            // drop the middle point if it lies on or above the chord
            const auto& [x1, y1] = h[h.size() - 2];
            const auto& [x2, y2] = h[h.size() - 1];
            if ((y2 - y1) * (x - x1) >= (y - y1) * (x2 - x1)) h.pop_back();
            else break;
        }
        h.emplace_back(x, y);
    }
    return h;
}

std::vector<NewtonSegment> hull_segments(const std::vector<Point>& hull, const Rat& r) {
    std::vector<NewtonSegment> segs;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Rat slope = -(hull[i + 1].second - hull[i].second) / (hull[i + 1].first - hull[i].first);
        slope.canonicalize();
        if (slope > 0 && slope <= r) {
            Rat dy = hull[i].second - hull[i + 1].second;
            dy.canonicalize();
            if (dy.get_den() != 1)
                throw std::logic_error("newton_polygon: non-integral multiplicity");
            segs.push_back({slope, dy.get_num().get_si()});
        }
    }
    // left-to-right hull traversal yields strictly decreasing s already for the
    // paper coordinates; classical coordinates give increasing s
    std::sort(segs.begin(), segs.end(),
              [](const NewtonSegment& a, const NewtonSegment& b) { return b.slope < a.slope; });
    return segs;
}

std::vector<Point> classical_points(const LaurentElem& f) {
    std::vector<Point> pts;
    for (const auto& [n, c] : f.terms())
        pts.emplace_back(Rat(n), c.vp().finite());
    return pts;
}

std::vector<Point> paper_points(const LaurentElem& f) {
    long n_min = 0, n_max = 0;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        long v = c.vp().finite().get_num().get_si();
        if (first) { n_min = n_max = v; first = false; }
        n_min = std::min(n_min, v);
        n_max = std::max(n_max, v);
    }
    std::vector<Point> pts;
    for (long n = n_min; n <= n_max; ++n) {
        Val x = f.partial_valuation(n);
        if (!x.is_inf()) pts.emplace_back(x.finite(), Rat(n));
    }
    return pts;
}

} // namespace

NewtonPolygon newton_polygon(const LaurentElem& f, const Rat& r) {
    if (f.is_zero()) throw std::domain_error("newton_polygon: f = 0");
    if (r <= 0) throw std::domain_error("newton_polygon: r > 0 required");
    NewtonPolygon np;
    np.r = r;
    auto hull = lower_hull(paper_points(f));
    for (auto& [x, y] : hull)
        np.vertices.emplace_back(x.get_num().get_si(), y.get_num().get_si());
    np.segments = hull_segments(hull, r);
    // independent recipe from the classical points must agree
    auto segs2 = hull_segments(lower_hull(classical_points(f)), r);
    if (!(np.segments == segs2))
        throw std::logic_error("newton_polygon: recipe cross-check failed");
    return np;
}

std::optional<Rat> is_pure(const LaurentElem& f, const Rat& r) {
    auto np = newton_polygon(f, r);
    if (np.segments.size() == 1) return np.segments[0].slope;
    return std::nullopt;
}

bool is_unit(const LaurentElem& f, const Rat& r) {
    return newton_polygon(f, r).segments.empty();
}

// ---- slope factorization ---------------------------------------------------

namespace {

Val qp_min_vp(const QPoly& f, long p) {
    Val v = Val::inf();
    for (const auto& c : f) v = val_min(v, vp_rat(c, p));
    return v;
}

QPoly qp_round(const QPoly& f, long p, long N) {
    QPoly out(f);
    for (auto& c : out) c = padic_round(c, p, N);
    return qp_trim(std::move(out));
}

// classical hull of a polynomial: hull vertices as (degree, v_p) pairs
std::vector<Point> poly_hull(const QPoly& F, long p) {
    std::vector<Point> pts;
    for (size_t n = 0; n < F.size(); ++n)
        if (F[n] != 0) pts.emplace_back(Rat((long)n), vp_rat(F[n], p).finite());
    return lower_hull(std::move(pts));
}

Val qp_gauss(const QPoly& f, long p, const Rat& rho) {
    Val v = Val::inf();
    for (size_t n = 0; n < f.size(); ++n)
        if (f[n] != 0) v = val_min(v, vp_rat(f[n], p) + Val(rho * Rat((long)n)));
    return v;
}

// split F (monic after scaling by 1/F[k]) into g (degree k, the left hull
// part) and h with F = F[k] * g * h to p-adic precision Pt; rho is a radius
// separating the slopes of the two parts and keep bounds coefficient size
std::pair<QPoly, QPoly> hensel_split(const QPoly& F, long k, long p, long Pt, long cap,
                                     const Rat& rho, long keep) {
    Rat ck = F[k];
    QPoly Ft = qp_scale(F, Rat(1) / ck);
    QPoly g(Ft.begin(), Ft.begin() + k + 1);
    QPoly h(Ft.begin() + k, Ft.end());
    Val last = Val::inf();
    for (long it = 0; it < cap; ++it) {
        QPoly e = qp_sub(Ft, qp_mul(g, h));
        Val ev = qp_min_vp(e, p);
        if (ev.is_inf() || ev >= Val(Pt)) return {g, h};
        Val wv = qp_gauss(e, p, rho);
        if (it > 0 && !(last < wv))
            throw precision_error("slope_factor: Hensel iteration stalled");
        last = wv;
        auto [gcd, u, v] = qp_xgcd(g, h);
        if (qp_deg(gcd) != 0)
            throw precision_error("slope_factor: initial factors not coprime");
        auto [q, dg] = qp_divrem(qp_mul(v, e), g);
        QPoly dh_num = qp_sub(e, qp_mul(dg, h));
        auto [dh, rem] = qp_divrem(dh_num, g);
        if (!rem.empty())
            throw std::logic_error("slope_factor: inexact Hensel division");
        g = qp_add(g, dg);
        h = qp_add(h, dh);
        // p-adic rounding caps coefficient growth without hurting convergence
        g = qp_round(g, p, keep);
        h = qp_round(h, p, keep);
        if ((long)g.size() != k + 1 || g[k] != 1)
            throw std::logic_error("slope_factor: monicity lost");
    }
    throw precision_error("slope_factor: iteration cap reached");
}

LaurentElem from_qpoly(const ConfigPtr& cfg, const QPoly& f, long shift) {
    LaurentElem out(cfg);
    for (size_t n = 0; n < f.size(); ++n)
        if (f[n] != 0) out.set((long)n + shift, CoeffElem::from_rat(cfg, f[n]));
    return out;
}

} // namespace

SlopeFactorization slope_factor(const LaurentElem& f, const Rat& r, long target_precision) {
    if (f.is_zero()) throw std::domain_error("slope_factor: f = 0");
    if (r <= 0) throw std::domain_error("slope_factor: r > 0 required");
    const ConfigPtr& cfg = f.config();
    if (cfg->f != 1) throw std::domain_error("slope_factor: f = 1 coefficients required");
    const long p = cfg->p;

    const long shift = f.min_exp();
    QPoly F(f.max_exp() - shift + 1, Rat(0));
    for (const auto& [n, c] : f.terms()) F[n - shift] = c.rat();

    const long cap = (long)std::ceil(std::log2((double)std::max(target_precision, 2L))) + 4;

    SlopeFactorization out;
    long guard = 8;
    for (int attempt = 0; attempt < 4; ++attempt, guard *= 2) {
        out.factors.clear();
        long Pt = target_precision + guard;
        std::vector<std::pair<QPoly, Rat>> pieces; // (factor, classical hull slope)
        QPoly cur = F;
        Rat scalar(1);
        for (;;) {
            auto hull = poly_hull(cur, p);
            if (hull.size() <= 2) {
                pieces.emplace_back(cur, hull.size() == 2
                                             ? Rat((hull[1].second - hull[0].second) /
                                                   (hull[1].first - hull[0].first))
                                             : Rat(0));
                break;
            }
            long k = hull[1].first.get_num().get_si();
            Rat sigma = (hull[1].second - hull[0].second) / (hull[1].first - hull[0].first);
            sigma.canonicalize();
            Rat sigma2 = (hull[2].second - hull[1].second) / (hull[2].first - hull[1].first);
            Rat rho = -(sigma + sigma2) / 2;
            rho.canonicalize();
            long depth = 0;
            for (const auto& c : cur)
                if (c != 0) depth = std::max(depth, -std::min(0L, vp_rat(c, p).finite().get_num().get_si()));
            long keep = Pt + 32 + 2 * depth;
            auto [g, h] = hensel_split(cur, k, p, Pt + 8, cap + attempt * 4, rho, keep);
            pieces.emplace_back(g, sigma);
            scalar *= cur[k];
            scalar.canonicalize();
            cur = h;
        }
        if (pieces.size() == 1) scalar = Rat(1); // untouched polynomial keeps its coefficients

        // assemble: pure factors for paper slope in (0, r], the rest is a unit
        LaurentElem unit = from_qpoly(cfg, {scalar}, shift);
        bool single = pieces.size() == 1;
        for (auto& [g, sigma] : pieces) {
            Rat s = -sigma;
            s.canonicalize();
            if (s > 0 && s <= r && qp_deg(g) >= 1) {
                Rat lead = g.back();
                QPoly monic = qp_scale(g, Rat(1) / lead);
                out.factors.push_back({from_qpoly(cfg, qp_round(monic, p, Pt), 0), s});
                if (!single) {
                    unit = unit.scaled(CoeffElem::from_rat(cfg, padic_round(lead, p, Pt)));
                } else if (lead != 1) {
                    unit = unit.scaled(CoeffElem::from_rat(cfg, lead));
                }
            } else {
                unit = unit * from_qpoly(cfg, single ? g : qp_round(g, p, Pt), 0);
            }
        }
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const SlopeFactor& a, const SlopeFactor& b) { return b.slope < a.slope; });
        out.unit = unit;

        // verify the reconstruction and report achieved precision
        LaurentElem prod = unit;
        for (auto& sf : out.factors) prod = prod * sf.factor;
        LaurentElem diff = prod - f;
        Val err = Val::inf();
        for (const auto& [n, c] : diff.terms()) err = val_min(err, c.vp());
        if (err.is_inf()) { out.achieved_precision = target_precision + guard; return out; }
        long got = err.finite().get_num().get_si();
        if (got >= target_precision) { out.achieved_precision = got; return out; }
    }
    throw precision_error("slope_factor: could not reach target precision");
}

} // namespace ocring
