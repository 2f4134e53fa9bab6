#include "ocring/fp_laurent.hpp"

namespace ocring {

namespace {
long inv_mod_p(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    long r = 1;
    // p is small; Fermat
    for (long e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
    }
    return r;
}
} // namespace

FpLaurent FpLaurent::inverse_series(long N) const {
    if (is_zero()) throw std::domain_error("FpLaurent: inverting zero");
    long k = min_exp();
    FpLaurent u = shifted(-k); // unit of F_p[[S]]
    long c0 = u.coeff(0);
    FpLaurent x = monomial(p_, inv_mod_p(c0, p_), 0);
    FpLaurent two = monomial(p_, 2, 0);
    long M = N + std::labs(k) + 1;
    for (long m = 1; m <= M; m *= 2)
        x = (x * (two - u * x)).truncated(M);
    return x.shifted(-k).truncated(N);
}

std::string FpLaurent::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [n, c] : t_) {
        if (!s.empty()) s += " + ";
        if (n == 0) { s += std::to_string(c); continue; }
        std::string mono = n == 1 ? "S" : "S^" + std::to_string(n);
        if (c == 1) s += mono;
        else s += std::to_string(c) + "*" + mono;
    }
    return s;
}

FpPoly fp_poly_trim(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return fp_poly_trim(std::move(c));
}

FpPoly fp_poly_sub(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        long x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        x %= p;
        if (x < 0) x += p;
        c[i] = x;
    }
    return fp_poly_trim(std::move(c));
}

FpPoly fp_poly_divexact(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly r = fp_poly_trim(a), bt = fp_poly_trim(b);
    if (bt.empty()) throw std::domain_error("fp_poly_divexact: division by zero");
    if (r.empty()) return {};
    long lead_inv = inv_mod_p(bt.back(), p);
    if (r.size() < bt.size()) throw std::domain_error("fp_poly_divexact: not divisible");
    FpPoly q(r.size() - bt.size() + 1, 0);
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        long c = r[i + bt.size() - 1] * lead_inv % p;
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < bt.size(); ++j) {
            long x = (r[i + j] - c * bt[j]) % p;
            if (x < 0) x += p;
            r[i + j] = x;
        }
    }
    if (!fp_poly_trim(r).empty()) throw std::domain_error("fp_poly_divexact: not divisible");
    return fp_poly_trim(std::move(q));
}

} // namespace ocring
