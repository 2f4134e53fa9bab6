#include "ocring/groebner.hpp"

namespace ocring {

TateElem<LaurentElem> remainder_annulus(const TateElem<LaurentElem>& f,
                                        const GroebnerBasis<LaurentElem>& gb, long pN,
                                        long sN) {
    if (!gb.certified) throw std::domain_error("remainder_annulus: basis not certified");
    TateElem<LaurentElem> rem(f.order());
    for (const auto& [m, c] : f.terms()) {
        long k = std::min(0L, c.min_exp());
        TateElem<LaurentElem> g(f.order());
        g.set(m, c.shifted(-k));
        TateElem<LaurentElem> r = divide(g, gb, pN, sN).remainder;
        for (const auto& [n, rc] : r.terms()) rem.add_term(n, rc.shifted(k));
    }
    return rem.normalized(pN, sN);
}

Val quotient_valuation(const TateElem<LaurentElem>& f, const GroebnerBasis<LaurentElem>& gb,
                       const Rat& r_exp, long pN, long sN) {
    TateElem<LaurentElem> rem = remainder_annulus(f, gb, pN, sN);
    Val v = Val::inf();
    for (const auto& [m, c] : rem.terms()) v = val_min(v, c.gauss_valuation(r_exp));
    return v;
}

} // namespace ocring
