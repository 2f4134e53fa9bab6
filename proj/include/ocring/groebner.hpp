#pragma once

#include "ocring/tate.hpp"

namespace ocring {

// Basis certified by the concrete criterion of Proposition 3.2.9: leading
// terms are units times pairwise coprime monic monomials. Certification is a
// recorded fact implying flatness and the Groebner property; it is the only
// kind of basis the division algorithm accepts.
template <class C>
struct GroebnerBasis {
    std::vector<TateElem<C>> gens;
    bool certified = false;
    std::vector<ExtendedLT> lts;  // leading terms, parallel to gens
    std::vector<C> lead_inv;      // inverses of the leading coefficients
    long pN = 0, sN = 0;          // precision the inverses were computed at
};

template <class C>
GroebnerBasis<C> certify_concrete(std::vector<TateElem<C>> gens, long pN, long sN) {
    GroebnerBasis<C> gb;
    gb.gens = std::move(gens);
    gb.pN = pN;
    gb.sN = sN;
    gb.certified = !gb.gens.empty();
    for (const auto& g : gb.gens) {
        if (g.is_zero()) { gb.certified = false; break; }
        ExtendedLT lt = leading_term(g);
        for (long v : lt.v)
            if (v != 0) { gb.certified = false; break; }
        if (!gb.certified) break;
        for (const auto& prev : gb.lts)
            if (!mono_coprime(prev.deg, lt.deg)) { gb.certified = false; break; }
        if (!gb.certified) break;
        gb.lts.push_back(std::move(lt));
    }
    if (gb.certified) {
        for (size_t i = 0; i < gb.gens.size(); ++i)
            gb.lead_inv.push_back(tate_inverse(*gb.gens[i].find(gb.lts[i].deg), pN, sN));
    } else {
        gb.lts.clear();
    }
    return gb;
}

// Standard expression f = sum a_i f_i + r (Proposition 3.2.6). Quotients are
// fixed by processing generators in input order and terms in decreasing
// extended term order; only the remainder is canonical.
template <class C>
struct StandardExpression {
    std::vector<TateElem<C>> quotients;
    TateElem<C> remainder;
    std::vector<bool> dominance; // LT(f) >= LT(a_i f_i) for each nonzero a_i f_i
    bool dominance_ok = true;
};

// Division algorithm in the quotient ring at precision (p^pN, S^(sN+1)):
// repeatedly cancel the greatest term whose monomial some LT monomial divides
template <class C>
StandardExpression<C> divide(const TateElem<C>& f, const GroebnerBasis<C>& gb, long pN,
                             long sN) {
    if (!gb.certified) throw std::domain_error("divide: basis not certified");
    const OrderContext& ord = *f.order();
    TateElem<C> work = f.normalized(pN, sN);
    StandardExpression<C> out;
    out.quotients.assign(gb.gens.size(), TateElem<C>(f.order()));
    const bool f_nonzero = !work.is_zero();
    ExtendedLT ltf;
    if (f_nonzero) ltf = leading_term(work);
    for (;;) {
        Monomial bm;
        C bc;
        ExtendedLT bt;
        int bi = -1;
        for (const auto& [m, c] : work.terms()) {
            int i = -1;
            for (size_t j = 0; j < gb.gens.size(); ++j)
                if (mono_divides(gb.lts[j].deg, m)) { i = (int)j; break; }
            if (i < 0) continue;
            ExtendedLT t = term_handle(m, c);
            if (bi < 0 || lt_compare(ord, t, bt) > 0) {
                bm = m; bc = c; bt = std::move(t); bi = i;
            }
        }
        if (bi < 0) break;
        Monomial shift = mono_div(bm, gb.lts[bi].deg);
        C mult = tate_normalize(bc * gb.lead_inv[bi], pN, sN);
        work = (work - gb.gens[bi].term_scaled(mult, shift)).normalized(pN, sN);
        if (work.find(bm))
            throw std::logic_error("divide: cancellation failed");
        out.quotients[bi].add_term(shift, mult);
    }
    out.remainder = std::move(work);
    // dominance evidence: LT(f) >= LT(a_i f_i) whenever a_i f_i != 0
    if (f_nonzero) {
        for (size_t i = 0; i < gb.gens.size(); ++i) {
            TateElem<C> prod = (out.quotients[i] * gb.gens[i]).normalized(pN, sN);
            bool ok = prod.is_zero() || lt_compare(ord, ltf, leading_term(prod)) >= 0;
            out.dominance.push_back(ok);
            if (!ok) out.dominance_ok = false;
        }
    } else {
        out.dominance.assign(gb.gens.size(), true);
    }
    return out;
}

// membership at precision: f in I iff the remainder vanishes
template <class C>
bool in_ideal(const TateElem<C>& f, const GroebnerBasis<C>& gb, long pN, long sN) {
    return divide(f, gb, pN, sN).remainder.is_zero();
}

// Remainder over the annulus ring (Lemma 3.3.2): Laurent coefficients are
// split as S^{-k} * (integral part) and the integral standard expressions are
// recombined with the S^{-k} weights.
TateElem<LaurentElem> remainder_annulus(const TateElem<LaurentElem>& f,
                                        const GroebnerBasis<LaurentElem>& gb, long pN,
                                        long sN);

// Valuation of the remainder = the quotient valuation of f mod I
// (Lemma 3.2.10 / Lemma 3.3.2); the variables carry norm 1, so the Gauss
// valuation at radius r_exp of the remainder coefficients decides.
Val quotient_valuation(const TateElem<LaurentElem>& f, const GroebnerBasis<LaurentElem>& gb,
                       const Rat& r_exp, long pN, long sN);

} // namespace ocring
