#pragma once

#include <optional>

#include "ocring/laurent.hpp"

namespace ocring {

struct NewtonSegment {
    Rat slope;  // s in (0, r]
    long mult;  // positive difference in y-coordinates
    bool operator==(const NewtonSegment& o) const { return slope == o.slope && mult == o.mult; }
};

struct NewtonPolygon {
    std::vector<std::pair<long, long>> vertices; // (x = S-valuation coordinate, y = p-power coordinate)
    Rat r;
    std::vector<NewtonSegment> segments; // slopes strictly decreasing
};

// Definition 2.0.2, computed from the points (v^{<=n}(f), n) and cross-checked
// against the classical recipe (n, v_p(a_n))
NewtonPolygon newton_polygon(const LaurentElem& f, const Rat& r);

std::optional<Rat> is_pure(const LaurentElem& f, const Rat& r);
bool is_unit(const LaurentElem& f, const Rat& r);

struct SlopeFactor {
    LaurentElem factor; // monic in S, pure of the given slope
    Rat slope;
};

struct SlopeFactorization {
    std::vector<SlopeFactor> factors; // slopes strictly decreasing
    LaurentElem unit;
    long achieved_precision; // p-adic coefficient precision of the reconstruction
};

// Lemma 2.0.3: two-factor Hensel lifting along the hull segments
SlopeFactorization slope_factor(const LaurentElem& f, const Rat& r, long target_precision);

} // namespace ocring
