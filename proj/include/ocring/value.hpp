#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocring {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an iterative algorithm cannot reach its target precision.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// A valuation value: a rational number or +infinity (valuation of 0).
struct Val {
    bool infinite = true;
    Rat q;

    Val() = default;
    Val(long v) : infinite(false), q(v) {}
    Val(const Rat& v) : infinite(false), q(v) {}
    static Val inf() { return Val(); }

    bool is_inf() const { return infinite; }
    Rat finite() const {
        if (infinite) throw std::domain_error("Val: infinite valuation has no finite value");
        return q;
    }

    Val operator+(const Val& o) const {
        if (infinite || o.infinite) return inf();
        return Val(q + o.q);
    }
    Val& operator+=(const Val& o) { *this = *this + o; return *this; }

    bool operator==(const Val& o) const {
        if (infinite != o.infinite) return false;
        return infinite || q == o.q;
    }
    bool operator!=(const Val& o) const { return !(*this == o); }
    // infinity compares greater than every finite value
    bool operator<(const Val& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return q < o.q;
    }
    bool operator<=(const Val& o) const { return *this < o || *this == o; }
    bool operator>(const Val& o) const { return o < *this; }
    bool operator>=(const Val& o) const { return o <= *this; }

    std::string str() const;
};

Val val_min(const Val& a, const Val& b);

// p-adic valuation of a nonzero integer
long vp(const Int& n, long p);
// p-adic valuation of a rational; Val::inf() for 0
Val vp_rat(const Rat& q, long p);

Int pow_int(long p, unsigned long e);
// p^e as an exact rational, e may be negative
Rat pow_rat(long p, long e);

// inverse of a modulo m (gcd(a,m)=1 required)
Int inv_mod(const Int& a, const Int& m);

// Nearest element of Z[1/p] with p-power denominator: result q' satisfies
// v_p(q - q') >= N and q' = u*p^v with u a balanced representative mod p^(N-v).
Rat padic_round(const Rat& q, long p, long N);

bool is_prime(long n);

std::string rat_str(const Rat& q);

// exact determinant of an integer matrix (Bareiss fraction-free elimination)
Int det_integer(std::vector<std::vector<Int>> m);

} // namespace ocring
