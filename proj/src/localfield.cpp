#include "ocring/localfield.hpp"

#include <algorithm>
#include <numeric>

#include "ocring/qpoly.hpp"

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

// sign of a permutation by inversion count
int perm_sign(const std::vector<int>& s) {
    int inv = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

} // namespace

Ext2::Ext2(PrimePtr base, std::vector<FiberElem> g) : base_(std::move(base)), g_(std::move(g)) {
    if (g_.size() < 2) throw std::domain_error("Ext2: degree must be at least 1");
    n_ = (long)g_.size() - 1;
    if (g_.back() != FiberElem::one(base_)) throw std::domain_error("Ext2: g must be monic");
}

Ext2::Elem Ext2::reduce(std::vector<FiberElem> c) const {
    for (long k = (long)c.size() - 1; k >= n_; --k) {
        if (c[k].is_zero()) continue;
        for (long i = 0; i < n_; ++i) c[k - n_ + i] = c[k - n_ + i] - c[k] * g_[i];
        c[k] = FiberElem(base_);
    }
    c.resize(n_, FiberElem(base_));
    return c;
}

Ext2::Elem Ext2::zero() const { return Elem(n_, FiberElem(base_)); }

Ext2::Elem Ext2::one() const {
    Elem a = zero();
    a[0] = FiberElem::one(base_);
    return a;
}

Ext2::Elem Ext2::z() const {
    if (n_ == 1) return reduce({FiberElem(base_), FiberElem::one(base_)});
    Elem a = zero();
    a[1] = FiberElem::one(base_);
    return a;
}

Ext2::Elem Ext2::from_base(const FiberElem& c) const {
    Elem a = zero();
    a[0] = c;
    return a;
}

bool Ext2::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](const FiberElem& c) { return c.is_zero(); });
}

Ext2::Elem Ext2::add(const Elem& a, const Elem& b) const {
    Elem c = a;
    for (long i = 0; i < n_; ++i) c[i] = c[i] + b[i];
    return c;
}

Ext2::Elem Ext2::sub(const Elem& a, const Elem& b) const {
    Elem c = a;
    for (long i = 0; i < n_; ++i) c[i] = c[i] - b[i];
    return c;
}

Ext2::Elem Ext2::neg(const Elem& a) const {
    Elem c = a;
    for (auto& x : c) x = -x;
    return c;
}

Ext2::Elem Ext2::mul(const Elem& a, const Elem& b) const {
    std::vector<FiberElem> c(2 * n_ - 1, FiberElem(base_));
    for (long i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; j < n_; ++j) c[i + j] = c[i + j] + a[i] * b[j];
    }
    return reduce(std::move(c));
}

Ext2::Elem Ext2::scale(const Elem& a, const FiberElem& c) const {
    Elem out = a;
    for (auto& x : out) x = x * c;
    return out;
}

Ext2::Elem Ext2::pow(const Elem& a, long k) const {
    if (k < 0) throw std::domain_error("Ext2::pow: negative exponent");
    Elem out = one(), base = a;
    while (k) {
        if (k & 1) out = mul(out, base);
        base = mul(base, base);
        k >>= 1;
    }
    return out;
}

Ext2::Elem Ext2::eval(const std::vector<FiberElem>& poly, const Elem& x) const {
    Elem v = zero();
    for (long i = (long)poly.size() - 1; i >= 0; --i)
        v = add(mul(v, x), from_base(poly[i]));
    return v;
}

FiberElem Ext2::norm(const Elem& x) const {
    // multiplication matrix: column j holds the coordinates of x * z^j
    std::vector<Elem> col(n_);
    col[0] = x;
    for (long j = 1; j < n_; ++j) {
        std::vector<FiberElem> shifted(n_ + 1, FiberElem(base_));
        for (long i = 0; i < n_; ++i) shifted[i + 1] = col[j - 1][i];
        col[j] = reduce(std::move(shifted));
    }
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    FiberElem det(base_);
    std::sort(perm.begin(), perm.end());
    do {
        FiberElem term = fiber_int(base_, perm_sign(perm));
        bool zero = false;
        for (long j = 0; j < n_ && !zero; ++j) {
            const FiberElem& entry = col[j][perm[j]];
            if (entry.is_zero()) zero = true;
            else term = term * entry;
        }
        if (!zero) det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<FiberElem> Ext2::char_poly(const Elem& x) const {
    std::vector<Elem> col(n_);
    col[0] = x;
    for (long j = 1; j < n_; ++j) {
        std::vector<FiberElem> shifted(n_ + 1, FiberElem(base_));
        for (long i = 0; i < n_; ++i) shifted[i + 1] = col[j - 1][i];
        col[j] = reduce(std::move(shifted));
    }
    // entries of T*I - M are linear polynomials in T over the base field
    using TPoly = std::vector<FiberElem>;
    auto tp_mul = [&](const TPoly& a, const TPoly& b) {
        TPoly c(a.size() + b.size() - 1, FiberElem(base_));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = c[i + j] + a[i] * b[j];
        return c;
    };
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    TPoly det(n_ + 1, FiberElem(base_));
    do {
        TPoly term = {fiber_int(base_, perm_sign(perm))};
        for (long j = 0; j < n_; ++j) {
            long i = perm[j];
            TPoly entry = {-col[j][i]};
            if (i == j) entry.push_back(FiberElem::one(base_));
            term = tp_mul(term, entry);
        }
        for (size_t k = 0; k < term.size(); ++k) det[k] = det[k] + term[k];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Val Ext2::valuation(const Elem& x) const {
    if (is_zero(x)) return Val::inf();
    return norm(x).valuation();
}

PrimePtr cyclotomic_level(ConfigPtr cfg, long n) {
    if (n < 1) throw std::domain_error("cyclotomic_level: level must be >= 1");
    long p = cfg->p;
    auto xp1_pow = [&](long k) { // (X+1)^(p^k) - 1
        QPoly f = {Rat(1), Rat(1)};
        QPoly out = {Rat(1)};
        Int e = pow_int(p, (unsigned long)k);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) out = qp_mul(out, f);
            f = qp_mul(f, f);
            e /= 2;
        }
        out[0] -= 1;
        return qp_trim(std::move(out));
    };
    auto [E, rem] = qp_divrem(xp1_pow(n), xp1_pow(n - 1));
    if (!rem.empty()) throw std::logic_error("cyclotomic_level: inexact division");
    std::vector<Int> coeffs;
    for (size_t i = 0; i + 1 < E.size(); ++i) {
        if (E[i].get_den() != 1) throw std::logic_error("cyclotomic_level: non-integer coeff");
        coeffs.push_back(E[i].get_num());
    }
    return EisensteinPrime::from_coeffs(std::move(cfg), std::move(coeffs));
}

long residue_digit(const FiberElem& x, long k) {
    const PrimePtr& pr = x.prime();
    if (x.is_zero()) return 0;
    if (x.valuation() < Val(k)) throw std::domain_error("residue_digit: valuation below k");
    FiberElem pik = fiber_pow(FiberElem::uniformizer(pr), k);
    for (long c = 0; c < pr->cfg->p; ++c)
        if ((x - fiber_int(pr, c) * pik).valuation() > Val(k)) return c;
    throw std::logic_error("residue_digit: no digit found");
}

std::vector<long> pi_digits(const FiberElem& x, long k0, long count) {
    const PrimePtr& pr = x.prime();
    std::vector<long> out;
    FiberElem y = x;
    FiberElem pik = fiber_pow(FiberElem::uniformizer(pr), k0);
    for (long i = 0; i < count; ++i) {
        long c = y.is_zero() ? 0 : residue_digit(y, k0 + i);
        out.push_back(c);
        if (c) y = y - fiber_int(pr, c) * pik;
        pik = pik * FiberElem::uniformizer(pr);
    }
    return out;
}

} // namespace ocring
