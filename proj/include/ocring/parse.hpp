#pragma once

#include "ocring/tate.hpp"

namespace ocring {

// syntax error carrying the offending position in the input text
struct parse_error : std::runtime_error {
    size_t pos;
    parse_error(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          pos(position) {}
};

// "a/b" or "a"
Rat parse_rat(const std::string& text);

// element grammar: terms `c*S^n` joined by `+`, coefficients `m`, `m/p^k`,
// or `p^k*m`; e.g. "p^2*S^-3 + 3 + S^5"
LaurentElem parse_element(const std::string& text, const ConfigPtr& cfg);

// order spec "lex:X1>X0" or "grlex:X1>X0"; the listed variables fix nvars
OrderContext parse_order(const std::string& text);

// TateElem grammar: `coef*monomial` terms joined by `+`, parenthesized
// multi-term coefficients; e.g. "2*X0^2*X1 + (p + S)*X0"
TateElem<LaurentElem> parse_tate(const std::string& text, const ConfigPtr& cfg,
                                 const OrderPtr& ord);

// RingConfig from JSON: {"p":3,"f":1,"Np":64,"Ns":256}; f > 1 needs a
// monic lift as "conway": [c0,...,1]
ConfigPtr config_from_json(const std::string& json_text);

} // namespace ocring
