#include "doctest.h"

#include <map>
#include <random>

#include "ocring/newton.hpp"

using namespace ocring;

namespace {

ConfigPtr cfg3() {
    static ConfigPtr c = make_config(3, 1, 64, 256);
    return c;
}

LaurentElem parse_terms(const ConfigPtr& cfg, std::vector<std::pair<long, Rat>> terms) {
    LaurentElem f(cfg);
    for (auto& [n, q] : terms) f.set(n, CoeffElem::from_rat(cfg, q));
    return f;
}

// random integral series with a nontrivial polygon
LaurentElem random_poly(std::mt19937_64& rng, const ConfigPtr& cfg, long deg_max = 8) {
    std::uniform_int_distribution<long> deg_d(1, deg_max), k_d(0, 4), m_d(1, 20);
    std::uniform_int_distribution<int> sign_d(0, 1), skip_d(0, 3);
    long d = deg_d(rng);
    LaurentElem f(cfg);
    for (long n = 0; n <= d; ++n) {
        if (n != 0 && n != d && skip_d(rng) == 0) continue;
        long m = m_d(rng) * (sign_d(rng) ? 1 : -1);
        while (m % cfg->p == 0) ++m;
        long k = (n == d) ? 0 : k_d(rng);
        f.set(n, CoeffElem::from_rat(cfg, Rat(m) * pow_rat(cfg->p, k)));
    }
    return f;
}

long total_mult(const NewtonPolygon& np) {
    long t = 0;
    for (auto& s : np.segments) t += s.mult;
    return t;
}

Val coeff_error(const LaurentElem& a, const LaurentElem& b) {
    LaurentElem diff = a - b;
    Val err = Val::inf();
    for (const auto& [n, c] : diff.terms()) err = val_min(err, c.vp());
    return err;
}

} // namespace

TEST_CASE("newton polygon examples") {
    auto cfg = cfg3();
    // 1 + pS: no segment in (0, 1]
    auto np0 = newton_polygon(parse_terms(cfg, {{0, 1}, {1, 3}}), Rat(1));
    CHECK(np0.segments.empty());
    // p + S: one segment of slope 1, multiplicity 1
    auto np1 = newton_polygon(parse_terms(cfg, {{0, 3}, {1, 1}}), Rat(1));
    REQUIRE(np1.segments.size() == 1);
    CHECK(np1.segments[0].slope == Rat(1));
    CHECK(np1.segments[0].mult == 1);
    // p^2 + S at r = 2: slope 2, multiplicity 2
    auto np2 = newton_polygon(parse_terms(cfg, {{0, 9}, {1, 1}}), Rat(2));
    REQUIRE(np2.segments.size() == 1);
    CHECK(np2.segments[0].slope == Rat(2));
    CHECK(np2.segments[0].mult == 2);
    // same element at r = 1: slope 2 falls outside (0, 1]
    CHECK(newton_polygon(parse_terms(cfg, {{0, 9}, {1, 1}}), Rat(1)).segments.empty());
    // product: slopes 2 and 1, strictly decreasing
    LaurentElem prod =
        parse_terms(cfg, {{0, 3}, {1, 1}}) * parse_terms(cfg, {{0, 9}, {1, 1}});
    auto np3 = newton_polygon(prod, Rat(2));
    REQUIRE(np3.segments.size() == 2);
    CHECK(np3.segments[0].slope == Rat(2));
    CHECK(np3.segments[0].mult == 2);
    CHECK(np3.segments[1].slope == Rat(1));
    CHECK(np3.segments[1].mult == 1);
    CHECK_THROWS_AS(newton_polygon(LaurentElem::zero(cfg), Rat(1)), std::domain_error);
    CHECK_THROWS_AS(newton_polygon(prod, Rat(0)), std::domain_error);
}

TEST_CASE("purity and units") {
    auto cfg = cfg3();
    CHECK(is_pure(parse_terms(cfg, {{0, 3}, {1, 1}}), Rat(1)) == Rat(1));
    CHECK(!is_pure(parse_terms(cfg, {{0, 27}, {1, 12}, {2, 1}}), Rat(2)).has_value());
    CHECK(!is_pure(parse_terms(cfg, {{3, 1}}), Rat(1)).has_value()); // S^3 has no segment
    CHECK(is_unit(parse_terms(cfg, {{-3, 1}}), Rat(1)));
    CHECK(is_unit(parse_terms(cfg, {{0, 1}, {1, 3}}), Rat(1)));
    CHECK_FALSE(is_unit(parse_terms(cfg, {{0, 3}, {1, 1}}), Rat(1)));
}

TEST_CASE("segment multiplicity is additive under multiplication") {
    auto cfg = cfg3();
    std::mt19937_64 rng(999);
    for (int i = 0; i < 200; ++i) {
        LaurentElem f = random_poly(rng, cfg), g = random_poly(rng, cfg);
        auto nf = newton_polygon(f, Rat(2)), ng = newton_polygon(g, Rat(2));
        auto nfg = newton_polygon(f * g, Rat(2));
        REQUIRE(total_mult(nfg) == total_mult(nf) + total_mult(ng));
        // per-slope multiplicities add as well
        std::map<Rat, long> want;
        for (auto& s : nf.segments) want[s.slope] += s.mult;
        for (auto& s : ng.segments) want[s.slope] += s.mult;
        std::map<Rat, long> got;
        for (auto& s : nfg.segments) got[s.slope] += s.mult;
        REQUIRE(got == want);
    }
}

TEST_CASE("slope factorization examples") {
    auto cfg = cfg3();
    LaurentElem f1 = parse_terms(cfg, {{0, 3}, {1, 1}});  // p + S
    LaurentElem f2 = parse_terms(cfg, {{0, 9}, {1, 1}});  // p^2 + S
    SUBCASE("two distinct slopes") {
        auto fac = slope_factor(f1 * f2, Rat(2), 40);
        REQUIRE(fac.factors.size() == 2);
        CHECK(fac.factors[0].slope == Rat(2));
        CHECK(fac.factors[1].slope == Rat(1));
        CHECK(fac.achieved_precision >= 40);
        CHECK(coeff_error(fac.factors[0].factor, f2) >= Val(40));
        CHECK(coeff_error(fac.factors[1].factor, f1) >= Val(40));
        CHECK(coeff_error(fac.unit, parse_terms(cfg, {{0, 1}})) >= Val(40));
    }
    SUBCASE("pure element: single factor, trivial unit") {
        auto fac = slope_factor(f1, Rat(1), 40);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].slope == Rat(1));
        CHECK(fac.factors[0].factor == f1);
        CHECK(fac.unit == parse_terms(cfg, {{0, 1}}));
    }
    SUBCASE("unit times pure: S^-1 (p + S)") {
        auto fac = slope_factor(parse_terms(cfg, {{-1, 3}, {0, 1}}), Rat(1), 40);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].slope == Rat(1));
        CHECK(coeff_error(fac.factors[0].factor, f1) >= Val(40));
        CHECK(coeff_error(fac.unit, parse_terms(cfg, {{-1, 1}})) >= Val(40));
    }
    SUBCASE("unit input: no factors") {
        auto fac = slope_factor(parse_terms(cfg, {{0, 1}, {1, 3}}), Rat(1), 40);
        CHECK(fac.factors.empty());
        CHECK(fac.unit == parse_terms(cfg, {{0, 1}, {1, 3}}));
    }
}

TEST_CASE("slope factorization: random round-trip and uniqueness") {
    auto cfg = cfg3();
    std::mt19937_64 rng(4242);
    const long prec = 40;
    for (int i = 0; i < 40; ++i) {
        LaurentElem f = random_poly(rng, cfg);
        auto np = newton_polygon(f, Rat(2));
        auto fac = slope_factor(f, Rat(2), prec);
        // factor list matches the polygon
        REQUIRE(fac.factors.size() == np.segments.size());
        for (size_t j = 0; j < np.segments.size(); ++j) {
            REQUIRE(fac.factors[j].slope == np.segments[j].slope);
            auto pure = is_pure(fac.factors[j].factor, Rat(2));
            REQUIRE(pure.has_value());
            REQUIRE(*pure == np.segments[j].slope);
        }
        // reconstruction at precision
        LaurentElem prod = fac.unit;
        for (auto& sf : fac.factors) prod = prod * sf.factor;
        REQUIRE(coeff_error(prod, f) >= Val(prec));
        REQUIRE(is_unit(fac.unit, Rat(2)));
        // refactoring the reconstruction reproduces the factors at precision
        auto fac2 = slope_factor(prod, Rat(2), prec);
        REQUIRE(fac2.factors.size() == fac.factors.size());
        for (size_t j = 0; j < fac.factors.size(); ++j)
            REQUIRE(coeff_error(fac2.factors[j].factor, fac.factors[j].factor) >= Val(prec - 5));
    }
}
