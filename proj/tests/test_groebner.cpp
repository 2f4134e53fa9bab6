#include "doctest.h"

#include <random>

#include "ocring/groebner.hpp"

using namespace ocring;

namespace {

ConfigPtr cfgq() {
    static ConfigPtr c = make_config(3, 1, 64, 64);
    return c;
}

OrderPtr ord2() {
    static OrderPtr o = make_order(OrderContext::lex(2));
    return o;
}

LaurentElem L(const ConfigPtr& cfg, std::vector<std::pair<long, Rat>> terms) {
    LaurentElem f(cfg);
    for (auto& [n, q] : terms) f.set(n, CoeffElem::from_rat(cfg, q));
    return f;
}

// {X0^2 - S, X1^3 - p}
GroebnerBasis<LaurentElem> gb_xy(const ConfigPtr& cfg, const OrderPtr& ord) {
    TateElem<LaurentElem> f1(ord), f2(ord);
    f1.set({2, 0}, LaurentElem::one(cfg));
    f1.set({0, 0}, L(cfg, {{1, -1}}));
    f2.set({0, 3}, LaurentElem::one(cfg));
    f2.set({0, 0}, L(cfg, {{0, -3}}));
    return certify_concrete<LaurentElem>({f1, f2}, cfg->Np, cfg->Ns);
}

TateElem<LaurentElem> random_tate(std::mt19937_64& rng, const ConfigPtr& cfg,
                                  const OrderPtr& ord, long min_s_exp = 0) {
    std::uniform_int_distribution<long> deg_d(0, 5), k_d(0, 3), e_d(min_s_exp, 5),
        m_d(-9, 9);
    TateElem<LaurentElem> f(ord);
    for (int t = 0; t < 4; ++t) {
        LaurentElem c(cfg);
        for (int u = 0; u < 3; ++u) {
            long m = m_d(rng);
            if (m == 0) continue;
            c.add_term(e_d(rng), CoeffElem::from_rat(cfg, Rat(m) * pow_rat(cfg->p, k_d(rng))));
        }
        if (c.is_zero()) continue;
        f.add_term({deg_d(rng), deg_d(rng)}, c);
    }
    return f;
}

// random certified basis {X0^a + tail(X0), X1^b + tail(X0,X1)}
GroebnerBasis<LaurentElem> random_gb(std::mt19937_64& rng, const ConfigPtr& cfg,
                                     const OrderPtr& ord) {
    std::uniform_int_distribution<long> a_d(1, 4), k_d(0, 2), e_d(0, 3), m_d(-9, 9);
    long a = a_d(rng), b = a_d(rng);
    TateElem<LaurentElem> f1(ord), f2(ord);
    f1.set({a, 0}, LaurentElem::one(cfg));
    for (long i = 0; i < a; ++i) {
        long m = m_d(rng);
        if (m) f1.add_term({i, 0},
                           L(cfg, {{e_d(rng), Rat(m) * pow_rat(cfg->p, k_d(rng))}}));
    }
    f2.set({0, b}, LaurentElem::one(cfg));
    for (long j = 0; j < b; ++j) {
        long m = m_d(rng);
        if (m) f2.add_term({a_d(rng), j},
                           L(cfg, {{e_d(rng), Rat(m) * pow_rat(cfg->p, k_d(rng))}}));
    }
    auto gb = certify_concrete<LaurentElem>({f1, f2}, cfg->Np, cfg->Ns);
    REQUIRE(gb.certified);
    return gb;
}

TateElem<FpLaurent> mod_p(const TateElem<LaurentElem>& f) {
    TateElem<FpLaurent> out(f.order());
    for (const auto& [m, c] : f.terms()) {
        long p = c.config()->p;
        FpLaurent r(p);
        for (const auto& [n, x] : c.terms())
            r.add_term(n, (long)mpz_class(x.rat().get_num() % p).get_si());
        if (!r.is_zero()) out.add_term(m, r);
    }
    return out;
}

} // namespace

TEST_CASE("certification examples") {
    auto cfg = cfgq();
    auto ord = ord2();
    CHECK(gb_xy(cfg, ord).certified);
    // shared variable in the leading monomials
    TateElem<LaurentElem> f1(ord), f2(ord);
    f1.set({2, 0}, LaurentElem::one(cfg));
    f1.set({0, 0}, L(cfg, {{1, -1}}));
    f2.set({3, 0}, LaurentElem::one(cfg));
    f2.set({0, 0}, L(cfg, {{0, -3}}));
    CHECK_FALSE(certify_concrete<LaurentElem>({f1, f2}, cfg->Np, cfg->Ns).certified);
    // unit ideal
    TateElem<LaurentElem> u(ord);
    u.set({0, 0}, LaurentElem::one(cfg));
    CHECK(certify_concrete<LaurentElem>({u}, cfg->Np, cfg->Ns).certified);
    // non-unit leading coefficient
    TateElem<LaurentElem> v(ord);
    v.set({1, 0}, L(cfg, {{0, 3}}));
    CHECK_FALSE(certify_concrete<LaurentElem>({v}, cfg->Np, cfg->Ns).certified);
}

TEST_CASE("division examples") {
    auto cfg = cfgq();
    auto ord = ord2();
    auto gb = gb_xy(cfg, ord);
    // X0^2 X1^3 -> remainder pS
    TateElem<LaurentElem> f(ord);
    f.set({2, 3}, LaurentElem::one(cfg));
    auto se = divide(f, gb, cfg->Np, cfg->Ns);
    TateElem<LaurentElem> want(ord);
    want.set({0, 0}, L(cfg, {{1, 3}}));
    CHECK(se.remainder == want);
    CHECK(se.dominance_ok);
    // reconstruction
    TateElem<LaurentElem> back = se.remainder;
    for (size_t i = 0; i < gb.gens.size(); ++i) back = back + se.quotients[i] * gb.gens[i];
    CHECK(back.normalized(cfg->Np, cfg->Ns) == f);
    // membership: X0 f1 + S f2
    TateElem<LaurentElem> x(ord);
    x.set({1, 0}, LaurentElem::one(cfg));
    TateElem<LaurentElem> s(ord);
    s.set({0, 0}, L(cfg, {{1, 1}}));
    CHECK(in_ideal(x * gb.gens[0] + s * gb.gens[1], gb, cfg->Np, cfg->Ns));
    // f = 1 is its own remainder
    TateElem<LaurentElem> one(ord);
    one.set({0, 0}, LaurentElem::one(cfg));
    CHECK(divide(one, gb, cfg->Np, cfg->Ns).remainder == one);
    // uncertified basis refused
    GroebnerBasis<LaurentElem> bad;
    CHECK_THROWS_AS(divide(f, bad, cfg->Np, cfg->Ns), std::domain_error);
}

TEST_CASE("annulus remainders") {
    auto cfg = cfgq();
    auto ord = ord2();
    auto gb = gb_xy(cfg, ord);
    // S^-1 X0^2 X1^3 -> p
    TateElem<LaurentElem> f(ord);
    f.set({2, 3}, L(cfg, {{-1, 1}}));
    TateElem<LaurentElem> want(ord);
    want.set({0, 0}, L(cfg, {{0, 3}}));
    CHECK(remainder_annulus(f, gb, cfg->Np, cfg->Ns) == want);
    // Laurent-scalar combination of the generators
    TateElem<LaurentElem> c1(ord), c2(ord);
    c1.set({1, 1}, L(cfg, {{-2, 1}, {0, 5}}));
    c2.set({0, 0}, L(cfg, {{-1, 3}}));
    CHECK(remainder_annulus(c1 * gb.gens[0] + c2 * gb.gens[1], gb, cfg->Np, cfg->Ns)
              .is_zero());
    // non-divisible monomial passes through
    TateElem<LaurentElem> g(ord);
    g.set({0, 0}, L(cfg, {{-4, 1}}));
    CHECK(remainder_annulus(g, gb, cfg->Np, cfg->Ns) == g);
}

TEST_CASE("quotient valuations") {
    auto cfg = cfgq();
    auto ord = ord2();
    auto gb = gb_xy(cfg, ord);
    TateElem<LaurentElem> f(ord);
    f.set({2, 3}, LaurentElem::one(cfg));
    CHECK(quotient_valuation(f, gb, Rat(1, 2), cfg->Np, cfg->Ns) == Val(Rat(3, 2)));
    CHECK(quotient_valuation(gb.gens[0] * gb.gens[1], gb, Rat(1, 2), cfg->Np, cfg->Ns) ==
          Val::inf());
    TateElem<LaurentElem> one(ord);
    one.set({0, 0}, LaurentElem::one(cfg));
    CHECK(quotient_valuation(one, gb, Rat(1, 2), cfg->Np, cfg->Ns) == Val(0));
}

TEST_CASE("reconstruction and coset independence on random instances") {
    auto cfg = cfgq();
    auto ord = ord2();
    std::mt19937_64 rng(88);
    for (int i = 0; i < 100; ++i) {
        auto gb = random_gb(rng, cfg, ord);
        auto f = random_tate(rng, cfg, ord);
        auto se = divide(f, gb, cfg->Np, cfg->Ns);
        TateElem<LaurentElem> back = se.remainder;
        for (size_t j = 0; j < gb.gens.size(); ++j) back = back + se.quotients[j] * gb.gens[j];
        REQUIRE(back.normalized(cfg->Np, cfg->Ns) == f.normalized(cfg->Np, cfg->Ns));
        REQUIRE(se.dominance_ok);
        // no remainder term divisible by a leading monomial
        for (const auto& [m, c] : se.remainder.terms())
            for (const auto& lt : gb.lts) REQUIRE_FALSE(mono_divides(lt.deg, m));
        // coset independence
        TateElem<LaurentElem> g = f;
        for (size_t j = 0; j < gb.gens.size(); ++j)
            g = g + random_tate(rng, cfg, ord) * gb.gens[j];
        REQUIRE(divide(g, gb, cfg->Np, cfg->Ns).remainder == se.remainder);
    }
}

TEST_CASE("quotient-norm optimality on sampled cosets") {
    auto cfg = cfgq();
    auto ord = ord2();
    auto gb = gb_xy(cfg, ord);
    std::mt19937_64 rng(99);
    Rat rp(1, 2);
    auto tate_val = [&](const TateElem<LaurentElem>& f) {
        Val v = Val::inf();
        for (const auto& [m, c] : f.terms()) v = val_min(v, c.gauss_valuation(rp));
        return v;
    };
    for (int i = 0; i < 50; ++i) {
        auto f = random_tate(rng, cfg, ord);
        Val vr = tate_val(remainder_annulus(f, gb, cfg->Np, cfg->Ns));
        for (int j = 0; j < 10; ++j) {
            TateElem<LaurentElem> g = f;
            for (size_t k = 0; k < gb.gens.size(); ++k)
                g = g + random_tate(rng, cfg, ord, -3) * gb.gens[k];
            REQUIRE(tate_val(g) <= vr); // the remainder achieves the quotient norm
        }
    }
}

TEST_CASE("reduction compatibility mod p") {
    auto cfg = cfgq();
    auto ord = ord2();
    auto gb = gb_xy(cfg, ord);
    // the basis mod p: {X0^2 - S, X1^3}
    std::vector<TateElem<FpLaurent>> gensp;
    for (const auto& g : gb.gens) gensp.push_back(mod_p(g));
    auto gbp = certify_concrete<FpLaurent>(gensp, cfg->Np, cfg->Ns);
    REQUIRE(gbp.certified);
    std::mt19937_64 rng(321);
    for (int i = 0; i < 100; ++i) {
        auto f = random_tate(rng, cfg, ord);
        if (mod_p(f).is_zero()) continue; // p | f
        auto r = divide(f, gb, cfg->Np, cfg->Ns).remainder;
        auto rp = divide(mod_p(f), gbp, cfg->Np, cfg->Ns).remainder;
        REQUIRE(mod_p(r) == rp);
    }
}

TEST_CASE("intersection property: p-divisible remainders vanish") {
    auto cfg = cfgq();
    auto ord = ord2();
    std::mt19937_64 rng(654);
    for (int i = 0; i < 100; ++i) {
        auto gb = random_gb(rng, cfg, ord);
        auto r = divide(random_tate(rng, cfg, ord), gb, cfg->Np, cfg->Ns).remainder;
        if (r.is_zero()) continue;
        // some coefficient survives below the precision frontier
        Val best = Val::inf();
        for (const auto& [m, c] : r.terms())
            for (const auto& [n, x] : c.terms()) best = val_min(best, x.vp());
        REQUIRE(best < Val(cfg->Np));
    }
}
