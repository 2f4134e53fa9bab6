#include "doctest.h"

#include "ocring/norms.hpp"

using namespace ocring;

namespace {

ConfigPtr cfgn() {
    static ConfigPtr c = make_config(3, 1, 64, 64);
    return c;
}

} // namespace

TEST_CASE("cyclotomic levels") {
    auto pr1 = cyclotomic_level(cfgn(), 1);
    CHECK(pr1->e == 2);
    CHECK(pr1->a == std::vector<Int>({Int(3), Int(3)})); // X^2 + 3X + 3
    auto pr2 = cyclotomic_level(cfgn(), 2);
    CHECK(pr2->e == 6);
    // Phi_9(X+1) = X^6 + 9 X^5 + ... + 3; constant term and Eisenstein shape
    CHECK(pr2->a[0] == 3);
    CHECK(cyclotomic_level(cfgn(), 3)->e == 18);
    CHECK_THROWS_AS(cyclotomic_level(cfgn(), 0), std::domain_error);
}

TEST_CASE("strictly-deeply-ramified check") {
    auto tower = cyclotomic_tower(cfgn(), 1, 4);
    CHECK(tower.xi_vp == Rat(1, 2));
    auto rep = check_sdr(tower);
    REQUIRE(rep.xi_ok);
    REQUIRE(rep.levels.size() == 3);
    // v_xi = e_{n+1}/2 = 3^n; congruence defect is exactly e_{n+1} + 1
    long exp_e[] = {6, 18, 54};
    for (size_t i = 0; i < 3; ++i) {
        CHECK(rep.levels[i].degree_ratio == 3);
        Rat half_e(exp_e[i], 2);
        half_e.canonicalize();
        CHECK(rep.levels[i].v_xi == Val(half_e));
        CHECK(rep.levels[i].v_congruence == Val(exp_e[i] + 1));
        CHECK(rep.levels[i].pass);
    }
    CHECK(rep.pass);
    // xi = p^2 has v_p = 2 > 1
    TowerSpec bad = tower;
    bad.xi_vp = Rat(2);
    CHECK(!check_sdr(bad).xi_ok);
    CHECK(!check_sdr(bad).pass);
    // the frozen tower fails the degree condition
    TowerSpec frozen = tower;
    frozen.N = 3;
    frozen.constant_rule = true;
    auto frep = check_sdr(frozen);
    CHECK(frep.xi_ok);
    CHECK(!frep.pass);
    CHECK(frep.levels[0].degree_ratio == 1);
}

TEST_CASE("quadratic classification over a level") {
    auto cfg = cfgn();
    // odd valuation at the degree-1 field: ramified, digits of 3 = pi
    auto base = EisensteinPrime::from_coeffs(cfg, {Int(-3)});
    auto ram = classify_quadratic(base, Rat(3), 6);
    CHECK(ram.kind == NormExtKind::ramified);
    CHECK(ram.degree == 2);
    CHECK(ram.poly[0] == -FpLaurent::monomial(3, 1, 1)); // T^2 - Pi
    CHECK(ram.b == 1);
    CHECK(ram.b_log == 0);
    // sqrt(-3) lies in Q_3(zeta_3) already: trivial at every level
    for (long n : {1L, 2L}) {
        auto triv = classify_quadratic(cyclotomic_level(cfg, n), Rat(-3), 6);
        CHECK(triv.kind == NormExtKind::trivial);
        CHECK(triv.degree == 1);
    }
    // sqrt(3) is not in the cyclotomic tower: unramified quadratic residue
    // extension T^2 - 2
    for (long n : {1L, 2L, 3L}) {
        auto unr = classify_quadratic(cyclotomic_level(cfg, n), Rat(3), 6);
        CHECK(unr.kind == NormExtKind::unramified);
        CHECK(unr.degree == 2);
        CHECK(unr.poly[0] == FpLaurent::monomial(3, 1, 0)); // -2 = 1 mod 3
        CHECK(unr.b == 0);
        CHECK(unr.b_log == 0);
    }
    // squares of units are trivial
    CHECK(classify_quadratic(cyclotomic_level(cfg, 1), Rat(4), 6).kind ==
          NormExtKind::trivial);
    CHECK_THROWS_AS(classify_quadratic(base, Rat(0), 6), std::domain_error);
}

TEST_CASE("norm-field minimal polynomial with stationarity") {
    auto tower = cyclotomic_tower(cfgn(), 1, 4);
    // trivial target
    auto triv = norm_field_min_poly(tower, Rat(1), 2, 6);
    CHECK(triv.degree == 1);
    CHECK(triv.kind == NormExtKind::trivial);
    CHECK(triv.poly == std::vector<FpLaurent>(
                           {-FpLaurent::monomial(3, 1, 1), FpLaurent::one(3)}));
    // sqrt(3): stationary degree-2 polynomial at levels 2 vs 3
    auto nf = norm_field_min_poly(tower, Rat(3), 2, 6);
    CHECK(nf.degree == 2);
    CHECK(nf.kind == NormExtKind::unramified);
    CHECK(nf.level == 2);
}

TEST_CASE("break convergence experiment") {
    auto tower = cyclotomic_tower(cfgn(), 1, 4);
    // L = K: everything zero
    auto triv = break_convergence_experiment(tower, Rat(1), 2, 3);
    for (const auto& row : triv.rows) {
        CHECK(row.b == 0);
        CHECK(row.b_log == 0);
    }
    CHECK(triv.stationary);
    CHECK(triv.matches_charp);
    // L = Q_3(sqrt 3): unramified over every level, so the char-0 breaks are
    // stationary at 0 and agree with the char-p break of the norm field
    auto rep = break_convergence_experiment(tower, Rat(3), 2, 4);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) {
        CHECK(row.b == 0);
        CHECK(row.b_log == 0);
    }
    CHECK(rep.norm_field.degree == 2);
    CHECK(rep.stationary);
    CHECK(rep.matches_charp);
}
