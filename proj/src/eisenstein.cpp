#include "ocring/eisenstein.hpp"

#include <algorithm>

#include "ocring/qpoly.hpp"

namespace ocring {

namespace {

void require_f1(const ConfigPtr& cfg, const char* where) {
    if (cfg->f != 1)
        throw std::domain_error(std::string(where) + ": fiber arithmetic is restricted to f = 1");
}

// reduce a rational polynomial modulo the monic integer polynomial of the prime
void reduce_mod_P(std::vector<Rat>& c, const EisensteinPrime& pr) {
    for (long i = (long)c.size() - 1; i >= pr.e; --i) {
        if (c[i] == 0) continue;
        for (long j = 0; j < pr.e; ++j) {
            c[i - pr.e + j] -= c[i] * Rat(pr.a[j]);
            c[i - pr.e + j].canonicalize();
        }
        c[i] = 0;
    }
    c.resize(pr.e);
}

} // namespace

PrimePtr EisensteinPrime::prime_p(ConfigPtr cfg) {
    auto pr = std::make_shared<EisensteinPrime>();
    pr->cfg = std::move(cfg);
    pr->char_p = true;
    return pr;
}

PrimePtr EisensteinPrime::from_coeffs(ConfigPtr cfg, std::vector<Int> coeffs) {
    if (coeffs.empty()) throw std::domain_error("EisensteinPrime: degree >= 1 required");
    for (const auto& c : coeffs)
        if (c % cfg->p != 0)
            throw std::domain_error("EisensteinPrime: all lower coefficients must be divisible by p");
    if (coeffs[0] % (cfg->p * cfg->p) == 0)
        throw std::domain_error("EisensteinPrime: p^2 must not divide the constant term");
    auto pr = std::make_shared<EisensteinPrime>();
    pr->cfg = std::move(cfg);
    pr->e = (long)coeffs.size();
    pr->a = std::move(coeffs);
    return pr;
}

std::string EisensteinPrime::str() const {
    if (char_p) return "(p)";
    std::string s = "S^" + std::to_string(e);
    for (long i = e - 1; i >= 0; --i) {
        if (a[i] == 0) continue;
        s += " + " + a[i].get_str() + (i == 0 ? "" : i == 1 ? "*S" : "*S^" + std::to_string(i));
    }
    return "(" + s + ")";
}

FiberElem::FiberElem(PrimePtr pr) : pr_(std::move(pr)) {
    if (pr_->char_p) fp_ = FpLaurent(pr_->cfg->p);
    else c_.assign(pr_->e, Rat(0));
}

FiberElem FiberElem::from_poly(PrimePtr pr, std::vector<Rat> c) {
    if (pr->char_p) throw std::domain_error("FiberElem: polynomial form needs a finite-degree prime");
    require_f1(pr->cfg, "FiberElem");
    FiberElem x(pr);
    reduce_mod_P(c, *pr);
    c.resize(pr->e, Rat(0));
    for (auto& q : c) q.canonicalize();
    x.c_ = std::move(c);
    return x;
}

FiberElem FiberElem::from_fp(PrimePtr pr, FpLaurent f) {
    if (!pr->char_p) throw std::domain_error("FiberElem: Laurent form needs the prime (p)");
    FiberElem x(pr);
    x.fp_ = std::move(f);
    return x;
}

FiberElem FiberElem::one(PrimePtr pr) {
    if (pr->char_p) return from_fp(pr, FpLaurent::one(pr->cfg->p));
    std::vector<Rat> c(pr->e, Rat(0));
    c[0] = 1;
    return from_poly(std::move(pr), std::move(c));
}

FiberElem FiberElem::uniformizer(PrimePtr pr) {
    if (pr->char_p) return from_fp(pr, FpLaurent::monomial(pr->cfg->p, 1, 1));
    std::vector<Rat> c(pr->e, Rat(0));
    if (pr->e == 1) c[0] = Rat(-pr->a[0]);
    else c[1] = 1;
    return from_poly(std::move(pr), std::move(c));
}

bool FiberElem::is_zero() const {
    if (!pr_) return true;
    if (pr_->char_p) return fp_.is_zero();
    return std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return q == 0; });
}

FiberElem FiberElem::operator+(const FiberElem& o) const {
    if (pr_->char_p) return from_fp(pr_, fp_ + o.fp_);
    std::vector<Rat> c(c_);
    for (long i = 0; i < pr_->e; ++i) { c[i] += o.c_[i]; c[i].canonicalize(); }
    return from_poly(pr_, std::move(c));
}

FiberElem FiberElem::operator-() const {
    if (pr_->char_p) return from_fp(pr_, -fp_);
    std::vector<Rat> c(c_);
    for (auto& q : c) q = -q;
    return from_poly(pr_, std::move(c));
}

FiberElem FiberElem::operator-(const FiberElem& o) const { return *this + (-o); }

FiberElem FiberElem::operator*(const FiberElem& o) const {
    if (pr_->char_p) return from_fp(pr_, fp_ * o.fp_);
    std::vector<Rat> c(2 * pr_->e - 1, Rat(0));
    for (long i = 0; i < pr_->e; ++i)
        for (long j = 0; j < pr_->e; ++j)
            c[i + j] += c_[i] * o.c_[j];
    return from_poly(pr_, std::move(c));
}

bool FiberElem::operator==(const FiberElem& o) const { return (*this - o).is_zero(); }

Val FiberElem::valuation() const {
    if (is_zero()) return Val::inf();
    if (pr_->char_p) return fp_.v_S();
    // v(x) = v_p(N_{kappa/Q_p}(x)) via the multiplication matrix, exactly
    const long e = pr_->e;
    std::vector<std::vector<Int>> m(e, std::vector<Int>(e));
    std::vector<Rat> col(c_);
    long den_v = 0;
    for (long j = 0; j < e; ++j) {
        Int den(1);
        for (long i = 0; i < e; ++i) den = lcm(den, col[i].get_den());
        den_v += vp(den, pr_->cfg->p);
        for (long i = 0; i < e; ++i) {
            Rat scaled = col[i] * Rat(den);
            scaled.canonicalize();
            m[i][j] = scaled.get_num();
        }
        if (j + 1 < e) {
            // col <- col * pi mod P
            std::vector<Rat> next(e + 1, Rat(0));
            for (long i = 0; i < e; ++i) next[i + 1] = col[i];
            reduce_mod_P(next, *pr_);
            col.assign(next.begin(), next.begin() + e);
        }
    }
    Int d = det_integer(std::move(m));
    if (d == 0) throw std::domain_error("FiberElem::valuation: singular multiplication matrix");
    return Val(vp(d, pr_->cfg->p) - den_v);
}

FiberElem FiberElem::invert() const {
    if (is_zero()) throw std::domain_error("FiberElem: inverting zero");
    if (pr_->char_p) return from_fp(pr_, fp_.inverse_series(pr_->cfg->Ns));
    QPoly P(pr_->e + 1, Rat(0));
    for (long i = 0; i < pr_->e; ++i) P[i] = Rat(pr_->a[i]);
    P[pr_->e] = 1;
    auto [g, u, v] = qp_xgcd(QPoly(c_.begin(), c_.end()), P);
    if (qp_deg(g) != 0)
        throw std::domain_error("FiberElem::invert: element shares a factor with P");
    return from_poly(pr_, std::move(u));
}

std::string FiberElem::str() const {
    if (pr_->char_p) return fp_.str();
    std::string s;
    for (long i = 0; i < pr_->e; ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string mono = i == 0 ? "" : i == 1 ? "pi" : "pi^" + std::to_string(i);
        if (mono.empty()) s += rat_str(c_[i]);
        else if (c_[i] == 1) s += mono;
        else s += rat_str(c_[i]) + "*" + mono;
    }
    return s.empty() ? "0" : s;
}

FiberElem reduce_mod_eisenstein(const LaurentElem& f, const PrimePtr& pr) {
    require_f1(pr->cfg, "reduce_mod_eisenstein");
    if (pr->char_p) {
        FpLaurent out(pr->cfg->p);
        for (const auto& [n, c] : f.terms()) {
            if (c.vp() < Val(0))
                throw std::domain_error("reduce_mod_eisenstein: p in denominator at the prime (p)");
            Rat q = c.rat();
            Int num = q.get_num(); // denominator is a p-free p-power, i.e. 1
            out.add_term(n, mpz_fdiv_ui(num.get_mpz_t(), (unsigned long)pr->cfg->p));
        }
        return FiberElem::from_fp(pr, std::move(out));
    }
    if (f.is_zero()) return FiberElem(pr);
    FiberElem acc(pr);
    FiberElem pi = FiberElem::uniformizer(pr);
    FiberElem pi_inv = pi.invert();
    // powers of pi from min_exp to max_exp
    long lo = f.min_exp(), hi = f.max_exp();
    FiberElem pw = FiberElem::one(pr);
    std::map<long, FiberElem> powers;
    powers[0] = pw;
    for (long n = 1; n <= std::max(hi, 0L); ++n) powers[n] = powers[n - 1] * pi;
    for (long n = -1; n >= std::min(lo, 0L); --n) powers[n] = powers[n + 1] * pi_inv;
    for (const auto& [n, c] : f.terms()) {
        std::vector<Rat> scalar(pr->e, Rat(0));
        scalar[0] = c.rat();
        acc = acc + FiberElem::from_poly(pr, std::move(scalar)) * powers[n];
    }
    return acc;
}

TransferReport fiber_valuation_transfer(const LaurentElem& x, const PrimePtr& p,
                                        const PrimePtr& q) {
    if (x.has_negative_exponents() || x.has_denominators())
        throw std::domain_error("fiber_valuation_transfer: x must lie in O[[S]]");
    TransferReport rep;
    rep.v_p = reduce_mod_eisenstein(x, p).valuation();
    rep.v_q = reduce_mod_eisenstein(x, q).valuation();
    Val min_deg = Val::inf();
    if (p->degree_finite()) min_deg = val_min(min_deg, Val(p->e));
    if (q->degree_finite()) min_deg = val_min(min_deg, Val(q->e));
    rep.hypothesis = val_min(rep.v_p, rep.v_q) < min_deg;
    rep.equal = rep.v_p == rep.v_q;
    if (rep.hypothesis && !rep.equal)
        throw std::logic_error("fiber_valuation_transfer: Lemma 3.1.10 violated");
    return rep;
}

// ---- lifting lemma -------------------------------------------------------

namespace {

using LPoly = std::vector<FiberElem>; // element of L = kappa[T]/Q, degree < d

LPoly lmul(const LPoly& x, const LPoly& y, const LPoly& Qlow, const PrimePtr& pr) {
    const long d = (long)x.size();
    std::vector<FiberElem> prod(2 * d - 1, FiberElem(pr));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
            prod[i + j] = prod[i + j] + x[i] * y[j];
    // reduce modulo the monic Q: T^d = -Qlow
    for (long i = 2 * d - 2; i >= d; --i) {
        if (prod[i].is_zero()) continue;
        for (long j = 0; j < d; ++j)
            prod[i - d + j] = prod[i - d + j] - prod[i] * Qlow[j];
        prod[i] = FiberElem(pr);
    }
    prod.resize(d);
    return prod;
}

FiberElem ldet(std::vector<std::vector<FiberElem>>& m, std::vector<long>& rows, long col,
               const PrimePtr& pr) {
    // cofactor expansion; d is tiny for all supported presentations
    const long d = (long)m.size();
    if (col == d) return FiberElem::one(pr);
    FiberElem acc(pr);
    long sign = 1;
    for (size_t k = 0; k < rows.size(); ++k) {
        long r = rows[k];
        if (!m[r][col].is_zero()) {
            std::vector<long> rest;
            for (size_t j = 0; j < rows.size(); ++j)
                if (j != k) rest.push_back(rows[j]);
            FiberElem sub = ldet(m, rest, col + 1, pr);
            FiberElem term = m[r][col] * sub;
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
    }
    return acc;
}

Val lval(const LPoly& x, const LPoly& Qlow, const PrimePtr& pr) {
    const long d = (long)x.size();
    bool zero = std::all_of(x.begin(), x.end(), [](const FiberElem& c) { return c.is_zero(); });
    if (zero) return Val::inf();
    // norm = det of multiplication by x on the basis 1, T, ..., T^{d-1}
    std::vector<std::vector<FiberElem>> m(d, std::vector<FiberElem>(d, FiberElem(pr)));
    LPoly col = x;
    LPoly tpoly(d, FiberElem(pr));
    if (d > 1) tpoly[1] = FiberElem::one(pr);
    else tpoly[0] = -Qlow[0];
    for (long j = 0; j < d; ++j) {
        for (long i = 0; i < d; ++i) m[i][j] = col[i];
        if (j + 1 < d) col = lmul(col, tpoly, Qlow, pr);
    }
    std::vector<long> rows(d);
    for (long i = 0; i < d; ++i) rows[i] = i;
    return ldet(m, rows, 0, pr).valuation();
}

} // namespace

LiftedExtension lift_extension(const PrimePtr& pr, const std::vector<FiberElem>& minpoly,
                               long target_precision) {
    if (!pr->degree_finite())
        throw std::domain_error("lift_extension: base prime must have finite degree");
    require_f1(pr->cfg, "lift_extension");
    if (minpoly.size() < 2 || !(minpoly.back() == FiberElem::one(pr)))
        throw std::domain_error("lift_extension: monic minimal polynomial required");
    const long d = (long)minpoly.size() - 1;
    for (long i = 0; i < d; ++i)
        if (minpoly[i].valuation() < Val(1))
            throw std::domain_error("lift_extension: polynomial is not Eisenstein");
    if (minpoly[0].valuation() != Val(1))
        throw std::domain_error("lift_extension: polynomial is not Eisenstein");

    LiftedExtension out;
    out.cfg = pr->cfg;
    out.base = pr;
    out.e_rel = d;
    long digits = std::min(target_precision, pr->cfg->Ns - d);
    if (digits < 1) throw precision_error("lift_extension: degree window too small");

    LPoly Qlow(minpoly.begin(), minpoly.begin() + d);
    // T^{-1} = -(1/q_0)(T^{d-1} + q_{d-1} T^{d-2} + ... + q_1)
    FiberElem q0inv = minpoly[0].invert();
    LPoly tinv(d, FiberElem(pr));
    if (d == 1) {
        tinv[0] = -q0inv; // T = -q_0
    } else {
        for (long j = 1; j <= d; ++j) {
            FiberElem c = j == d ? FiberElem::one(pr) : minpoly[j];
            tinv[j - 1] = -(q0inv * c);
        }
    }

    LPoly y(d, FiberElem(pr));
    y[0] = FiberElem::uniformizer(pr);
    for (long k = 0; k < d; ++k) y = lmul(y, tinv, Qlow, pr);

    LaurentElem alpha(pr->cfg);
    const long p = pr->cfg->p;
    for (long i = 0; i < digits; ++i) {
        long digit = -1;
        for (long c = 0; c < p; ++c) {
            LPoly diff = y;
            diff[0] = diff[0] - FiberElem::from_poly(pr, std::vector<Rat>{Rat(c)}) * FiberElem::one(pr);
            if (lval(diff, Qlow, pr) > Val(0)) { digit = c; y = diff; break; }
        }
        if (digit < 0)
            throw precision_error("lift_extension: residue digit not found (residue field not F_p?)");
        if (digit != 0)
            alpha.set(d + i, CoeffElem::from_int(pr->cfg, digit));
        y = lmul(y, tinv, Qlow, pr);
    }
    if (alpha.is_zero() || alpha.min_exp() != d)
        throw precision_error("lift_extension: leading unit digit vanished");
    out.alpha = alpha;
    out.achieved_precision = digits;
    return out;
}

PrimePtr push_eisenstein(const LiftedExtension& lift, const PrimePtr& q, long pN) {
    if (q->char_p) return EisensteinPrime::prime_p(lift.cfg);
    const long p = lift.cfg->p;
    const long dW = lift.e_rel * q->e;
    const long M = lift.cfg->Ns; // T-degree used for the unit cofactor

    // g(T) = Q_q(alpha(T)) as a dense integer vector
    std::vector<Int> g(M + 1, Int(0));
    {
        std::vector<Int> pw(M + 1, Int(0));
        pw[0] = 1;
        auto mul_alpha = [&](const std::vector<Int>& v) {
            std::vector<Int> out(M + 1, Int(0));
            for (long i = 0; i <= M; ++i) {
                if (v[i] == 0) continue;
                for (const auto& [n, c] : lift.alpha.terms()) {
                    if (i + n > M) break;
                    out[i + n] += v[i] * c.rat().get_num();
                }
            }
            return out;
        };
        for (long k = 0; k <= q->e; ++k) {
            Int coeff = k == q->e ? Int(1) : q->a[k];
            if (coeff != 0)
                for (long i = 0; i <= M; ++i) g[i] += coeff * pw[i];
            if (k < q->e) pw = mul_alpha(pw);
        }
    }

    Int mod = pow_int(p, (unsigned long)pN);
    for (auto& c : g) { c %= mod; if (c < 0) c += mod; }

    // residual factorization mod p: g = T^dW * ebar
    FpLaurent ebar(p);
    for (long i = 0; i <= M; ++i) {
        long c = mpz_fdiv_ui(g[i].get_mpz_t(), (unsigned long)p);
        if (c != 0) {
            if (i < dW) throw precision_error("push_eisenstein: unexpected low-order term mod p");
            ebar.add_term(i - dW, c);
        }
    }
    if (ebar.coeff(0) == 0)
        throw precision_error("push_eisenstein: distinguished degree mismatch");
    FpLaurent einv = ebar.inverse_series(M);

    std::vector<Int> W(dW + 1, Int(0)), E(M + 1, Int(0));
    W[dW] = 1;
    for (long i = 0; i + dW <= M; ++i) E[i] = ebar.coeff(i);

    Int pk(p);
    for (long k = 1; k < pN; ++k, pk *= p) {
        // rem = (g - W*E)/p^k mod p
        std::vector<Int> we(M + 1, Int(0));
        for (long i = 0; i <= dW; ++i) {
            if (W[i] == 0) continue;
            for (long j = 0; i + j <= M; ++j) we[i + j] += W[i] * E[j];
        }
        FpLaurent h(p);
        for (long i = 0; i <= M; ++i) {
            Int r = (g[i] - we[i]) % mod;
            if (r < 0) r += mod;
            if (r == 0) continue;
            if (r % pk != 0) throw std::logic_error("push_eisenstein: lost Hensel invariant");
            h.add_term(i, mpz_fdiv_ui(Int(r / pk).get_mpz_t(), (unsigned long)p));
        }
        if (h.is_zero()) continue;
        FpLaurent dWpart(p), dEpart(p);
        FpLaurent prodh = (h * einv).truncated(M);
        for (const auto& [n, c] : prodh.terms())
            if (n < dW) dWpart.add_term(n, c);
        FpLaurent rest = h - ebar * dWpart;
        for (const auto& [n, c] : rest.terms()) {
            if (n < dW) throw std::logic_error("push_eisenstein: correction not divisible");
            if (n - dW <= M) dEpart.add_term(n - dW, c);
        }
        for (const auto& [n, c] : dWpart.terms()) W[n] = (W[n] + pk * c) % mod;
        for (const auto& [n, c] : dEpart.terms())
            if (n <= M) E[n] = (E[n] + pk * c) % mod;
    }

    std::vector<Int> coeffs(W.begin(), W.begin() + dW);
    return EisensteinPrime::from_coeffs(lift.cfg, std::move(coeffs));
}

} // namespace ocring
