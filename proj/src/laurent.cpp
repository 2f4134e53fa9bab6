#include "ocring/laurent.hpp"

namespace ocring {

namespace {
void require_same(const LaurentElem& a, const LaurentElem& b) {
    if (!a.config() || !b.config() || a.config()->p != b.config()->p ||
        a.config()->f != b.config()->f)
        throw std::domain_error("LaurentElem: mixed rings");
}
} // namespace

void LaurentElem::set(long n, const CoeffElem& c) {
    if (!cfg_) throw std::domain_error("LaurentElem: missing ring config");
    if (n < -cfg_->Ns || n > cfg_->Ns) {
        if (c.is_zero()) return;
        throw std::domain_error("LaurentElem: exponent outside the degree window");
    }
    if (c.is_zero()) t_.erase(n);
    else t_[n] = c;
}

void LaurentElem::add_term(long n, const CoeffElem& c) {
    if (n < -cfg_->Ns || n > cfg_->Ns) return; // window truncation
    auto it = t_.find(n);
    if (it == t_.end()) {
        if (!c.is_zero()) t_[n] = c;
        return;
    }
    CoeffElem s = it->second + c;
    if (s.is_zero()) t_.erase(it);
    else it->second = s;
}

LaurentElem LaurentElem::operator+(const LaurentElem& o) const {
    require_same(*this, o);
    LaurentElem out(*this);
    for (const auto& [n, c] : o.t_) out.add_term(n, c);
    return out;
}

LaurentElem LaurentElem::operator-() const {
    LaurentElem out(cfg_);
    for (const auto& [n, c] : t_) out.t_[n] = -c;
    return out;
}

LaurentElem LaurentElem::operator-(const LaurentElem& o) const { return *this + (-o); }

LaurentElem LaurentElem::operator*(const LaurentElem& o) const {
    require_same(*this, o);
    LaurentElem out(cfg_);
    for (const auto& [n, a] : t_)
        for (const auto& [m, b] : o.t_)
            out.add_term(n + m, a * b);
    return out;
}

LaurentElem LaurentElem::scaled(const CoeffElem& c) const {
    LaurentElem out(cfg_);
    for (const auto& [n, a] : t_) out.add_term(n, a * c);
    return out;
}

LaurentElem LaurentElem::shifted(long k) const {
    LaurentElem out(cfg_);
    for (const auto& [n, a] : t_) out.add_term(n + k, a);
    return out;
}

long LaurentElem::min_exp() const {
    if (t_.empty()) throw std::domain_error("LaurentElem: zero has no exponents");
    return t_.begin()->first;
}

long LaurentElem::max_exp() const {
    if (t_.empty()) throw std::domain_error("LaurentElem: zero has no exponents");
    return t_.rbegin()->first;
}

bool LaurentElem::has_denominators() const {
    for (const auto& [n, c] : t_)
        if (c.vp() < Val(0)) return true;
    return false;
}

Val LaurentElem::gauss_valuation(const Rat& r) const {
    if (r <= 0) throw std::domain_error("gauss_valuation: r > 0 required");
    Val best = Val::inf();
    for (const auto& [n, c] : t_)
        best = val_min(best, c.vp() + Val(Rat(n) * r));
    return best;
}

Val LaurentElem::partial_valuation(long n) const {
    Val best = Val::inf();
    for (const auto& [m, c] : t_) {
        Val v = c.vp();
        if (!v.is_inf() && v <= Val(n)) { best = Val(m); break; } // map is exponent-sorted
    }
    return best;
}

LaurentElem LaurentElem::reduce_mod_pN(long N) const {
    LaurentElem out(cfg_);
    for (const auto& [n, c] : t_) out.add_term(n, c.reduce_mod_pN(N));
    return out;
}

LaurentElem LaurentElem::truncate_gauss(const Rat& r, const Rat& cut) const {
    LaurentElem out(cfg_);
    for (const auto& [n, c] : t_) {
        Val w = c.vp() + Val(Rat(n) * r);
        if (w < Val(cut)) out.t_[n] = c;
    }
    return out;
}

LaurentElem LaurentElem::invert_series(long pN, long sN) const {
    if (is_zero() || has_negative_exponents() || has_denominators())
        throw std::domain_error("invert_series: a unit of O[[S]] is required");
    CoeffElem c0 = coeff(0);
    if (c0.is_zero() || c0.vp() != Val(0))
        throw std::domain_error("invert_series: constant term must be a unit");
    LaurentElem x = monomial(cfg_, c0.invert(pN), 0);
    LaurentElem two = one(cfg_) + one(cfg_);
    // Newton iteration doubles the S-adic accuracy each round
    for (long k = 1; k <= sN; k *= 2) {
        x = x * (two - *this * x);
        // keep only what the target window needs
        LaurentElem cutx(cfg_);
        for (const auto& [n, c] : x.terms()) {
            if (n > sN) break;
            cutx.set(n, c.reduce_mod_pN(pN));
        }
        x = cutx;
    }
    return x;
}

std::string LaurentElem::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [n, c] : t_) {
        if (!s.empty()) s += " + ";
        std::string cs = c.str();
        if (n == 0) { s += cs; continue; }
        std::string mono = n == 1 ? "S" : "S^" + std::to_string(n);
        if (cs == "1") s += mono;
        else s += cs + "*" + mono;
    }
    return s;
}

} // namespace ocring
