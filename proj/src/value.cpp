#include "ocring/value.hpp"

namespace ocring {

std::string Val::str() const {
    if (infinite) return "inf";
    return rat_str(q);
}

std::string rat_str(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Val val_min(const Val& a, const Val& b) { return a < b ? a : b; }

long vp(const Int& n, long p) {
    if (n == 0) throw std::domain_error("vp: zero argument");
    Int m = n, r, q;
    long v = 0;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), (unsigned long)p);
        if (r != 0) return v;
        m = q;
        ++v;
    }
}

Val vp_rat(const Rat& q, long p) {
    if (q == 0) return Val::inf();
    Rat c(q);
    c.canonicalize();
    long v = vp(c.get_num(), p);
    if (v == 0) v = -vp(c.get_den(), p);
    return Val(v);
}

Int pow_int(long p, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)p, e);
    return r;
}

Rat pow_rat(long p, long e) {
    Int pw = pow_int(p, (unsigned long)(e < 0 ? -e : e));
    Rat r;
    if (e >= 0) r = Rat(pw);
    else r = Rat(1) / Rat(pw);
    r.canonicalize();
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: not invertible");
    return r;
}

Rat padic_round(const Rat& q, long p, long N) {
    if (q == 0) return Rat(0);
    Val v = vp_rat(q, p);
    long k = v.finite().get_num().get_si(); // v_p of a rational is an integer
    if (k >= N) return Rat(0);
    // q = p^k * num/den with p coprime to num, den
    Rat u = q / pow_rat(p, k);
    u.canonicalize();
    Int mod = pow_int(p, (unsigned long)(N - k));
    Int rep = (u.get_num() % mod) * inv_mod(u.get_den(), mod) % mod;
    if (rep < 0) rep += mod;
    if (2 * rep > mod) rep -= mod; // balanced representative keeps numbers small
    Rat out = Rat(rep) * pow_rat(p, k);
    out.canonicalize();
    return out;
}

Int det_integer(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("det_integer: square matrix required");
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace ocring
