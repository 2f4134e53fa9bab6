#include "ocring/coeff.hpp"

#include <algorithm>

namespace ocring {

namespace {

void require_cfg(const ConfigPtr& a) {
    if (!a) throw std::domain_error("CoeffElem: missing ring config");
}

void require_same(const ConfigPtr& a, const ConfigPtr& b) {
    require_cfg(a);
    require_cfg(b);
    if (a->p != b->p || a->f != b->f)
        throw std::domain_error("CoeffElem: mixed coefficient rings");
}

// reduce a digit polynomial modulo the monic conway lift, in place
void reduce_conway(std::vector<Int>& d, const RingConfig& cfg) {
    const long f = cfg.f;
    for (long i = (long)d.size() - 1; i >= f; --i) {
        if (d[i] == 0) continue;
        for (long j = 0; j < f; ++j)
            d[i - f + j] -= d[i] * cfg.conway_lift[j];
        d[i] = 0;
    }
    d.resize(f);
}

} // namespace

CoeffElem::CoeffElem(ConfigPtr cfg) : cfg_(std::move(cfg)) {
    require_cfg(cfg_);
    if (cfg_->f > 1) dig_.assign(cfg_->f, Int(0));
}

CoeffElem CoeffElem::from_rat(ConfigPtr cfg, const Rat& q) {
    require_cfg(cfg);
    CoeffElem c(cfg);
    Rat v(q);
    v.canonicalize();
    const Int& den = v.get_den();
    long k = den == 1 ? 0 : ocring::vp(den, cfg->p);
    if (pow_int(cfg->p, (unsigned long)k) != den)
        throw std::domain_error("CoeffElem: denominator must be a power of p");
    if (cfg->f == 1) {
        c.q_ = v;
    } else {
        c.dig_.assign(cfg->f, Int(0));
        c.dig_[0] = v.get_num();
        c.den_ = k;
        c.normalize();
    }
    return c;
}

CoeffElem CoeffElem::from_digits(ConfigPtr cfg, std::vector<Int> dig, long den) {
    require_cfg(cfg);
    if (cfg->f == 1) throw std::domain_error("CoeffElem: digit constructor needs f > 1");
    CoeffElem c(cfg);
    reduce_conway(dig, *cfg);
    c.dig_ = std::move(dig);
    c.den_ = den;
    c.normalize();
    return c;
}

void CoeffElem::normalize() {
    if (cfg_->f == 1) return;
    Int mod = pow_int(cfg_->p, (unsigned long)cfg_->Np);
    bool all_zero = true;
    for (auto& d : dig_) {
        d %= mod;
        if (d < 0) d += mod;
        if (d != 0) all_zero = false;
    }
    if (all_zero) { den_ = 0; return; }
    while (den_ > 0) {
        bool divisible = true;
        for (const auto& d : dig_)
            if (d % cfg_->p != 0) { divisible = false; break; }
        if (!divisible) break;
        for (auto& d : dig_) d /= cfg_->p;
        --den_;
    }
}

bool CoeffElem::is_zero() const {
    if (!cfg_) return true;
    if (cfg_->f == 1) return q_ == 0;
    return std::all_of(dig_.begin(), dig_.end(), [](const Int& d) { return d == 0; });
}

Val CoeffElem::vp() const {
    if (is_zero()) return Val::inf();
    if (cfg_->f == 1) return vp_rat(q_, cfg_->p);
    long best = 0;
    bool first = true;
    for (const auto& d : dig_) {
        if (d == 0) continue;
        long v = ocring::vp(d, cfg_->p);
        if (first || v < best) { best = v; first = false; }
    }
    return Val(best - den_);
}

CoeffElem CoeffElem::operator+(const CoeffElem& o) const {
    require_same(cfg_, o.cfg_);
    CoeffElem c(cfg_);
    if (cfg_->f == 1) {
        c.q_ = q_ + o.q_;
        return c;
    }
    long den = std::max(den_, o.den_);
    Int sa = pow_int(cfg_->p, (unsigned long)(den - den_));
    Int sb = pow_int(cfg_->p, (unsigned long)(den - o.den_));
    for (long i = 0; i < cfg_->f; ++i) c.dig_[i] = dig_[i] * sa + o.dig_[i] * sb;
    c.den_ = den;
    c.normalize();
    return c;
}

CoeffElem CoeffElem::operator-() const {
    require_cfg(cfg_);
    CoeffElem c(cfg_);
    if (cfg_->f == 1) { c.q_ = -q_; return c; }
    for (long i = 0; i < cfg_->f; ++i) c.dig_[i] = -dig_[i];
    c.den_ = den_;
    c.normalize();
    return c;
}

CoeffElem CoeffElem::operator-(const CoeffElem& o) const { return *this + (-o); }

CoeffElem CoeffElem::operator*(const CoeffElem& o) const {
    require_same(cfg_, o.cfg_);
    CoeffElem c(cfg_);
    if (cfg_->f == 1) {
        c.q_ = q_ * o.q_;
        c.q_.canonicalize();
        return c;
    }
    std::vector<Int> prod(2 * cfg_->f - 1, Int(0));
    for (long i = 0; i < cfg_->f; ++i)
        for (long j = 0; j < cfg_->f; ++j)
            prod[i + j] += dig_[i] * o.dig_[j];
    reduce_conway(prod, *cfg_);
    c.dig_ = std::move(prod);
    c.den_ = den_ + o.den_;
    c.normalize();
    return c;
}

bool CoeffElem::operator==(const CoeffElem& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (is_zero() != o.is_zero()) return false;
    require_same(cfg_, o.cfg_);
    if (cfg_->f == 1) return q_ == o.q_;
    return den_ == o.den_ && dig_ == o.dig_;
}

bool CoeffElem::is_pm_one() const {
    if (!cfg_ || is_zero()) return false;
    if (cfg_->f == 1) return q_ == 1 || q_ == -1;
    if (den_ != 0) return false;
    Int mod = pow_int(cfg_->p, (unsigned long)cfg_->Np);
    for (long i = 1; i < cfg_->f; ++i)
        if (dig_[i] != 0) return false;
    return dig_[0] == 1 || dig_[0] == mod - 1;
}

CoeffElem CoeffElem::invert(long prec) const {
    require_cfg(cfg_);
    if (is_zero()) throw std::domain_error("CoeffElem: inverting zero");
    if (cfg_->f == 1) {
        long v = vp().finite().get_num().get_si();
        Rat u = q_ / pow_rat(cfg_->p, v);
        u.canonicalize();
        CoeffElem c(cfg_);
        if (u == 1 || u == -1) {
            c.q_ = u * pow_rat(cfg_->p, -v);
        } else {
            if (prec < 1) throw precision_error("CoeffElem::invert: no working precision");
            Int mod = pow_int(cfg_->p, (unsigned long)prec);
            Int m = u.get_den() * inv_mod(u.get_num(), mod) % mod;
            if (m < 0) m += mod;
            c.q_ = Rat(m) * pow_rat(cfg_->p, -v);
        }
        c.q_.canonicalize();
        return c;
    }
    // f > 1: strip the p-power part, invert the unit by Newton iteration
    long w = vp().finite().get_num().get_si() + den_; // min digit valuation
    std::vector<Int> u(dig_);
    for (auto& d : u)
        for (long i = 0; i < w; ++i) d /= cfg_->p;
    // inverse mod p by brute Euclid on the digit polynomial over F_p
    // (f is tiny; use trial multiplication over F_{p^f})
    CoeffElem unit = from_digits(cfg_, u, 0);
    // Newton: x -> x(2 - a x); seed from inverse mod p found by search over F_{p^f}
    Int mod1(cfg_->p);
    std::vector<Int> seed;
    {
        // enumerate F_{p^f} (p^f is small in supported configs)
        std::vector<Int> cand(cfg_->f, Int(0));
        long total = 1;
        for (long i = 0; i < cfg_->f; ++i) total *= cfg_->p;
        bool found = false;
        for (long n = 1; n < total && !found; ++n) {
            long m = n;
            for (long i = 0; i < cfg_->f; ++i) { cand[i] = m % cfg_->p; m /= cfg_->p; }
            CoeffElem t = unit * from_digits(cfg_, cand, 0);
            Int c0 = t.dig_[0] % mod1;
            if (c0 < 0) c0 += mod1;
            bool ok = (c0 == 1) && t.den_ == 0;
            for (long i = 1; ok && i < cfg_->f; ++i)
                if (t.dig_[i] % mod1 != 0) ok = false;
            if (ok) { seed = cand; found = true; }
        }
        if (!found) throw precision_error("CoeffElem::invert: unit has no residue inverse");
    }
    CoeffElem x = from_digits(cfg_, seed, 0);
    CoeffElem two = from_rat(cfg_, Rat(2));
    for (long k = 1; k < prec; k *= 2)
        x = x * (two - unit * x);
    // value = p^(w - den_) * unit; inverse = p^(den_ - w) * unit^{-1}
    long shift = den_ - w;
    if (shift >= 0) {
        Int s = pow_int(cfg_->p, (unsigned long)shift);
        for (auto& d : x.dig_) d *= s;
        x.normalize();
    } else {
        x.den_ += -shift;
        x.normalize();
    }
    return x;
}

CoeffElem CoeffElem::reduce_mod_pN(long N) const {
    require_cfg(cfg_);
    CoeffElem c(cfg_);
    if (cfg_->f == 1) {
        if (q_ == 0) return c;
        long k = q_.get_den() == 1 ? 0 : ocring::vp(q_.get_den(), cfg_->p);
        if (N + k <= 0) return c;
        Int mod = pow_int(cfg_->p, (unsigned long)(N + k));
        Int num = q_.get_num() % mod;
        if (num < 0) num += mod;
        c.q_ = Rat(num) / Rat(q_.get_den());
        c.q_.canonicalize();
        return c;
    }
    long M = std::min(N + den_, cfg_->Np);
    if (M <= 0) return c;
    Int mod = pow_int(cfg_->p, (unsigned long)M);
    c.dig_ = dig_;
    for (auto& d : c.dig_) { d %= mod; if (d < 0) d += mod; }
    c.den_ = den_;
    c.normalize();
    return c;
}

Rat CoeffElem::rat() const {
    require_cfg(cfg_);
    if (cfg_->f != 1) throw std::domain_error("CoeffElem: rational view needs f = 1");
    return q_;
}

std::string CoeffElem::str() const {
    if (is_zero()) return "0";
    if (cfg_->f == 1) {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        long k = ocring::vp(q_.get_den(), cfg_->p);
        return q_.get_num().get_str() + "/p^" + std::to_string(k);
    }
    std::string s = "[";
    for (long i = 0; i < cfg_->f; ++i) {
        if (i) s += ",";
        s += dig_[i].get_str();
    }
    s += "]";
    if (den_ > 0) s += "/p^" + std::to_string(den_);
    return s;
}

} // namespace ocring
