#pragma once

#include <map>
#include <memory>
#include <optional>

#include "ocring/eisenstein.hpp"
#include "ocring/fp_laurent.hpp"
#include "ocring/laurent.hpp"

namespace ocring {

// exponent vector, one entry per variable
using Monomial = std::vector<long>;

// Monomial order (Definition 3.2.1) together with the ordered regular system
// of parameters (Construction 3.2.2). The parameter chain is implicit in the
// coefficient type: (p, S) for O[[S]], (pi) for a fiber, (S) for k[[S]].
struct OrderContext {
    long nvars = 0;
    std::vector<int> priority; // variable indices, most significant first
    bool graded = false;       // graded-lex when set; plain lex otherwise

    static OrderContext lex(long nvars) {
        OrderContext o;
        o.nvars = nvars;
        for (long i = nvars - 1; i >= 0; --i) o.priority.push_back((int)i);
        return o;
    }
};

using OrderPtr = std::shared_ptr<const OrderContext>;

inline OrderPtr make_order(OrderContext o) {
    return std::make_shared<const OrderContext>(std::move(o));
}

inline Monomial mono_one(long nvars) { return Monomial(nvars, 0); }

inline bool mono_is_one(const Monomial& m) {
    for (long e : m)
        if (e) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) { // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) { // b / a
    Monomial c(b);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= a[i];
    return c;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// -1 / 0 / +1 in the monomial order
inline int mono_cmp(const OrderContext& ord, const Monomial& a, const Monomial& b) {
    if (ord.graded) {
        long da = 0, db = 0;
        for (long e : a) da += e;
        for (long e : b) db += e;
        if (da != db) return da < db ? -1 : 1;
    }
    for (int i : ord.priority) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::string mono_str(const Monomial& m);

// ---- parameter-valuation traits for the supported coefficient rings --------

// v-bar of a coefficient: the iterated parameter valuations, empty = infinity
inline std::vector<long> tate_vbar(const LaurentElem& c) {
    if (c.is_zero()) return {};
    if (c.has_negative_exponents() || c.has_denominators())
        throw std::domain_error("tate: coefficient not in O[[S]]");
    long a = 0;
    bool first = true;
    for (const auto& [n, x] : c.terms()) {
        long v = x.vp().finite().get_num().get_si();
        if (first || v < a) a = v;
        first = false;
    }
    long b = 0;
    first = true;
    for (const auto& [n, x] : c.terms())
        if (x.vp() == Val(a)) {
            if (first || n < b) b = n;
            first = false;
        }
    return {a, b};
}

inline std::vector<long> tate_vbar(const FiberElem& c) {
    if (c.is_zero()) return {};
    Val v = c.valuation();
    return {v.finite().get_num().get_si()};
}

inline std::vector<long> tate_vbar(const FpLaurent& c) {
    if (c.is_zero()) return {};
    return {c.min_exp()};
}

// inverse of a unit coefficient at precision (p^pN, S^(sN+1))
inline LaurentElem tate_inverse(const LaurentElem& c, long pN, long sN) {
    return c.invert_series(pN, sN);
}
inline FiberElem tate_inverse(const FiberElem& c, long, long sN) {
    FiberElem i = c.invert();
    if (c.char_p()) return FiberElem::from_fp(c.prime(), i.fp().truncated(sN));
    return i;
}
inline FpLaurent tate_inverse(const FpLaurent& c, long, long sN) {
    return c.inverse_series(sN);
}

// canonical representative in the working quotient ring
inline LaurentElem tate_normalize(const LaurentElem& c, long pN, long) {
    return c.reduce_mod_pN(pN);
}
inline FiberElem tate_normalize(const FiberElem& c, long, long sN) {
    if (c.is_zero() || !c.char_p()) return c;
    return FiberElem::from_fp(c.prime(), c.fp().truncated(sN));
}
inline FpLaurent tate_normalize(const FpLaurent& c, long, long sN) { return c.truncated(sN); }

inline std::string tate_cstr(const LaurentElem& c) { return c.str(); }
inline std::string tate_cstr(const FiberElem& c) { return c.str(); }
inline std::string tate_cstr(const FpLaurent& c) { return c.str(); }

// ---- elements of R<X> -------------------------------------------------------

template <class C>
class TateElem {
    OrderPtr ord_;
    std::map<Monomial, C> t_;

public:
    TateElem() = default;
    explicit TateElem(OrderPtr ord) : ord_(std::move(ord)) {}

    static TateElem zero(OrderPtr ord) { return TateElem(std::move(ord)); }

    const OrderPtr& order() const { return ord_; }
    const std::map<Monomial, C>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void set(const Monomial& m, const C& c) {
        if ((long)m.size() != ord_->nvars)
            throw std::invalid_argument("TateElem: wrong monomial arity");
        if (c.is_zero()) t_.erase(m);
        else t_[m] = c;
    }
    void add_term(const Monomial& m, const C& c) {
        auto it = t_.find(m);
        if (it == t_.end()) { set(m, c); return; }
        C s = it->second + c;
        if (s.is_zero()) t_.erase(it);
        else it->second = std::move(s);
    }
    const C* find(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? nullptr : &it->second;
    }

    TateElem operator+(const TateElem& o) const {
        TateElem out(*this);
        for (const auto& [m, c] : o.t_) out.add_term(m, c);
        return out;
    }
    TateElem operator-() const {
        TateElem out(ord_);
        for (const auto& [m, c] : t_) out.t_[m] = -c;
        return out;
    }
    TateElem operator-(const TateElem& o) const { return *this + (-o); }
    TateElem operator*(const TateElem& o) const {
        TateElem out(ord_);
        for (const auto& [m, a] : t_)
            for (const auto& [n, b] : o.t_)
                out.add_term(mono_mul(m, n), a * b);
        return out;
    }
    bool operator==(const TateElem& o) const { return (*this - o).is_zero(); }
    bool operator!=(const TateElem& o) const { return !(*this == o); }

    // multiplication by the term c * X^m
    TateElem term_scaled(const C& c, const Monomial& m) const {
        TateElem out(ord_);
        if (c.is_zero()) return out;
        for (const auto& [n, a] : t_) {
            C prod = a * c;
            if (!prod.is_zero()) out.t_[mono_mul(n, m)] = std::move(prod);
        }
        return out;
    }
    TateElem scaled(const C& c) const { return term_scaled(c, mono_one(ord_->nvars)); }

    TateElem normalized(long pN, long sN) const {
        TateElem out(ord_);
        for (const auto& [m, c] : t_) {
            C r = tate_normalize(c, pN, sN);
            if (!r.is_zero()) out.t_[m] = std::move(r);
        }
        return out;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            std::string cs = tate_cstr(c);
            bool multi = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
            if (mono_is_one(m)) { s += multi ? "(" + cs + ")" : cs; continue; }
            if (cs == "1") { s += mono_str(m); continue; }
            s += (multi ? "(" + cs + ")" : cs) + "*" + mono_str(m);
        }
        return s;
    }
};

// ---- extended valuation / leading term (Construction 3.2.2) ----------------

struct ExtendedLT {
    std::vector<long> v; // parameter valuations, lex
    Monomial deg;
    bool operator==(const ExtendedLT& o) const { return v == o.v && deg == o.deg; }
    std::string str() const;
};

// -1 / 0 / +1: smaller v-bar (lex) wins, ties broken by the monomial order
inline int lt_compare(const OrderContext& ord, const ExtendedLT& a, const ExtendedLT& b) {
    if (a.v != b.v) {
        bool a_less = std::lexicographical_compare(a.v.begin(), a.v.end(), b.v.begin(), b.v.end());
        return a_less ? 1 : -1;
    }
    return mono_cmp(ord, a.deg, b.deg);
}

// v-bar_R(f): lex-minimal parameter valuation over coefficients; nullopt = infinity
template <class C>
std::optional<std::vector<long>> extended_valuation(const TateElem<C>& f) {
    std::optional<std::vector<long>> best;
    for (const auto& [m, c] : f.terms()) {
        std::vector<long> v = tate_vbar(c);
        if (v.empty()) continue; // zero coefficient (not stored, defensive)
        if (!best || std::lexicographical_compare(v.begin(), v.end(), best->begin(), best->end()))
            best = std::move(v);
    }
    return best;
}

// LT_R(f) = s^v X^deg with deg the order-greatest monomial among the
// valuation minimizers (see the leading-term convention note in README)
template <class C>
ExtendedLT leading_term(const TateElem<C>& f) {
    auto v = extended_valuation(f);
    if (!v) throw std::domain_error("leading_term: zero element");
    const Monomial* deg = nullptr;
    for (const auto& [m, c] : f.terms()) {
        if (tate_vbar(c) != *v) continue;
        if (!deg || mono_cmp(*f.order(), m, *deg) > 0) deg = &m;
    }
    return {*v, *deg};
}

// extended term of a single coefficient-monomial pair
template <class C>
ExtendedLT term_handle(const Monomial& m, const C& c) {
    return {tate_vbar(c), m};
}

} // namespace ocring
