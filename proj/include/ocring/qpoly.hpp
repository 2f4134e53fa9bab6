#pragma once

#include "ocring/value.hpp"

namespace ocring {

// dense polynomials over Q, coefficient index = degree
using QPoly = std::vector<Rat>;

inline QPoly qp_trim(QPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline long qp_deg(const QPoly& a) { return (long)a.size() - 1; } // -1 for zero

inline QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly c(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] += b[i];
        c[i].canonicalize();
    }
    return qp_trim(std::move(c));
}

inline QPoly qp_neg(QPoly a) {
    for (auto& x : a) x = -x;
    return a;
}

inline QPoly qp_sub(const QPoly& a, const QPoly& b) { return qp_add(a, qp_neg(b)); }

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    for (auto& x : c) x.canonicalize();
    return qp_trim(std::move(c));
}

inline QPoly qp_scale(QPoly a, const Rat& s) {
    for (auto& x : a) { x *= s; x.canonicalize(); }
    return qp_trim(std::move(a));
}

// division with remainder over the field Q
inline std::pair<QPoly, QPoly> qp_divrem(QPoly a, const QPoly& b) {
    QPoly bb = qp_trim(b);
    if (bb.empty()) throw std::domain_error("qp_divrem: division by zero");
    a = qp_trim(std::move(a));
    if (a.size() < bb.size()) return {{}, a};
    QPoly q(a.size() - bb.size() + 1, Rat(0));
    Rat lead = bb.back();
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        Rat c = a[i + bb.size() - 1] / lead;
        c.canonicalize();
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < bb.size(); ++j) {
            a[i + j] -= c * bb[j];
            a[i + j].canonicalize();
        }
    }
    a.resize(bb.size() - 1);
    return {qp_trim(std::move(q)), qp_trim(std::move(a))};
}

// extended gcd: returns (g, u, v) with u*a + v*b = g (g monic unless zero)
inline std::tuple<QPoly, QPoly, QPoly> qp_xgcd(QPoly a, QPoly b) {
    QPoly r0 = qp_trim(std::move(a)), r1 = qp_trim(std::move(b));
    QPoly u0 = {Rat(1)}, v0 = {}, u1 = {}, v1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = qp_divrem(r0, r1);
        QPoly u2 = qp_sub(u0, qp_mul(q, u1));
        QPoly v2 = qp_sub(v0, qp_mul(q, v1));
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!r0.empty() && r0.back() != 1) {
        Rat inv = Rat(1) / r0.back();
        inv.canonicalize();
        u0 = qp_scale(std::move(u0), inv);
        v0 = qp_scale(std::move(v0), inv);
        r0 = qp_scale(std::move(r0), inv);
    }
    return {r0, u0, v0};
}

inline QPoly qp_derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = Rat((long)i) * a[i];
    return qp_trim(std::move(d));
}

inline Rat qp_eval(const QPoly& a, const Rat& x) {
    Rat v(0);
    for (long i = (long)a.size() - 1; i >= 0; --i) { v = v * x + a[i]; v.canonicalize(); }
    return v;
}

} // namespace ocring
