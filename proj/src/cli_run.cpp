#include "ocring/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ocring/newton.hpp"
#include "ocring/norms.hpp"
#include "ocring/parse.hpp"

namespace ocring {

namespace {

using nlohmann::json;

// arguments are accepted as file names or inline strings
std::string load_arg(const std::string& v) {
    std::ifstream in(v);
    if (in.good()) return std::string(std::istreambuf_iterator<char>(in), {});
    return v;
}

std::string vstr(const Val& v) { return v.str(); }

json config_json(const ConfigPtr& cfg) {
    return json{{"p", cfg->p}, {"f", cfg->f}, {"Np", cfg->Np}, {"Ns", cfg->Ns}};
}

ConfigPtr config_from_arg(const std::string& arg) {
    if (arg.empty()) return make_config(3, 1, 64, 64);
    return config_from_json(load_arg(arg));
}

PrimePtr prime_from_text(const std::string& txt, const ConfigPtr& cfg) {
    std::string t;
    for (char c : txt)
        if (!std::isspace((unsigned char)c)) t += c;
    if (t == "p" || t == "(p)") return EisensteinPrime::prime_p(cfg);
    LaurentElem f = parse_element(txt, cfg);
    if (f.is_zero() || f.min_exp() < 0)
        throw std::domain_error("prime: polynomial in S with nonnegative exponents required");
    long e = f.max_exp();
    if (f.coeff(e).rat() != 1) throw std::domain_error("prime: polynomial must be monic");
    std::vector<Int> coeffs;
    for (long n = 0; n < e; ++n) {
        Rat c = f.coeff(n).rat();
        if (c.get_den() != 1) throw std::domain_error("prime: integer coefficients required");
        coeffs.push_back(c.get_num());
    }
    return EisensteinPrime::from_coeffs(cfg, std::move(coeffs));
}

struct GBInput {
    OrderPtr ord;
    GroebnerBasis<LaurentElem> gb;
    std::vector<std::string> gens_text;
};

GBInput gb_from_json(const std::string& text, const ConfigPtr& cfg) {
    json j = json::parse(text);
    GBInput out;
    out.ord = make_order(parse_order(j.at("order").get<std::string>()));
    std::vector<TateElem<LaurentElem>> gens;
    for (const auto& g : j.at("gens")) {
        out.gens_text.push_back(g.get<std::string>());
        gens.push_back(parse_tate(out.gens_text.back(), cfg, out.ord));
    }
    out.gb = certify_concrete<LaurentElem>(std::move(gens), cfg->Np, cfg->Ns);
    return out;
}

json herbrand_json(const HerbrandReport& hb) {
    json breaks = json::array();
    for (const auto& [u, phi] : hb.breaks) breaks.push_back({u, rat_str(phi)});
    json cond = json::array();
    for (const auto& c : hb.conductors) cond.push_back(rat_str(c));
    return json{{"i_vals", hb.i_vals},     {"breaks", breaks},
                {"b", rat_str(hb.b)},      {"b_log", rat_str(hb.b_log)},
                {"conductors", cond},      {"hasse_arf_ok", hb.hasse_arf_ok}};
}

json break_json(const BreakReport& br) {
    json steps = json::array();
    for (const auto& [a, count] : br.steps) steps.push_back({rat_str(a), count});
    return json{{"b", rat_str(br.b)},
                {"b_log", rat_str(br.b_log)},
                {"e", br.e},
                {"steps", steps}};
}

// fixture spec {"fixture": "sqrt-p"|"zeta-p"|"zeta-p2"|"as", "m": 2}
std::pair<BreakReport, HerbrandReport> fixture_reports(const std::string& text,
                                                       const ConfigPtr& cfg) {
    json j = json::parse(text);
    std::string fx = j.at("fixture").get<std::string>();
    if (fx == "sqrt-p") return {as_breaks_sqrt_p(cfg), herbrand_sqrt_p(cfg)};
    if (fx == "zeta-p") return {as_breaks_zeta_p(cfg), herbrand_zeta_p(cfg)};
    if (fx == "zeta-p2") return {as_breaks_zeta_p2(cfg), herbrand_zeta_p2(cfg)};
    if (fx == "as") {
        long m = j.at("m").get<long>();
        return {as_breaks_as(cfg, m), herbrand_as(cfg, m)};
    }
    throw std::domain_error("unknown fixture '" + fx + "'");
}

json selftest_run(const ConfigPtr& cfg, unsigned long seed);

void emit(const json& result, const json& manifest, const std::string& out_path,
          std::ostream& out) {
    json doc{{"manifest", manifest}, {"result", result}};
    std::string text = doc.dump(2);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << text << "\n";
    } else {
        out << text << "\n";
    }
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact overconvergent-ring computations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_arg, out_path;
    long prec = 40;
    unsigned long seed = 0;
    app.add_option("--config", config_arg, "ring config (JSON file or inline)");
    app.add_option("--prec", prec, "target precision for iterative algorithms");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--out", out_path, "write JSON output to a file");

    std::string r_text = "1/2", elem_text, gb_arg, family_arg, prime_text = "p";
    std::string e_text, ext_arg, tower_arg, levels_text = "2..4", a_text = "1";
    long c_const = 0, m_param = 1;
    bool log_flag = false, with_oracle = false;
    std::string compare_prime = "S^9 + -3", xi_vp_text = "1/3", d_text = "3";

    auto* cmd_newton = app.add_subcommand("newton", "Newton polygon of an element");
    cmd_newton->add_option("--r", r_text, "radius exponent a/b")->required();
    cmd_newton->add_option("--elem", elem_text, "element in the series grammar")->required();

    auto* cmd_sf = app.add_subcommand("slope-factor", "slope factorization");
    cmd_sf->add_option("--r", r_text)->required();
    cmd_sf->add_option("--elem", elem_text)->required();

    auto* cmd_div = app.add_subcommand("divide", "standard expression against a certified basis");
    cmd_div->add_option("--gb", gb_arg, "basis JSON (file or inline)")->required();
    cmd_div->add_option("--elem", elem_text, "Tate element")->required();
    cmd_div->add_option("--r", r_text, "radius for the quotient valuation");

    auto* cmd_cert = app.add_subcommand("groebner-certify", "concrete certification check");
    cmd_cert->add_option("--gb", gb_arg)->required();

    auto* cmd_lift = app.add_subcommand("lift-idempotent", "Hensel idempotent lifting");
    cmd_lift->add_option("--family", family_arg, "family JSON (order + gens)")->required();
    cmd_lift->add_option("--prime", prime_text, "Eisenstein prime ('p' or monic poly in S)");
    cmd_lift->add_option("--e", e_text, "idempotent over O[[S]], reduced at the prime")
        ->required();
    cmd_lift->add_option("--c", c_const, "transfer constant");
    cmd_lift->add_option("--r", r_text, "radius a/b");

    auto* cmd_break = app.add_subcommand("break", "ramification breaks of a fixture extension");
    cmd_break->add_option("--ext", ext_arg, "fixture JSON")->required();
    cmd_break->add_flag("--oracle", with_oracle, "include the Herbrand oracle data");

    auto* cmd_herb = app.add_subcommand("herbrand", "Herbrand oracle of a fixture extension");
    cmd_herb->add_option("--ext", ext_arg, "fixture JSON")->required();

    auto* cmd_asf = app.add_subcommand("as-family", "Artin-Schreier family over O[[S]]");
    cmd_asf->add_option("--m", m_param, "Artin-Schreier break parameter");
    cmd_asf->add_option("--a", a_text, "scaling parameter a/b");
    cmd_asf->add_flag("--log", log_flag, "log-shifted exponent");
    cmd_asf->add_option("--compare-prime", compare_prime, "finite prime for the fiber check");
    cmd_asf->add_option("--xi-vp", xi_vp_text, "v_p of the congruence element xi'");

    auto* cmd_norms = app.add_subcommand("norms-experiment", "break convergence along a tower");
    cmd_norms->add_option("--tower", tower_arg, "tower JSON {n0, N, xi_vp}");
    cmd_norms->add_option("--ext", ext_arg, "target JSON {\"d\": \"3\"}");
    cmd_norms->add_option("--levels", levels_text, "level range lo..hi");

    app.add_subcommand("selftest", "run the invariant suites");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        ConfigPtr cfg = config_from_arg(config_arg);
        json manifest{{"config", config_json(cfg)},
                      {"seed", seed},
                      {"inputs", json::object()},
                      {"achieved_precisions", json::object()}};
        auto input = [&](const std::string& key, const std::string& value) {
            manifest["inputs"][key] = value;
        };
        json result;

        if (*cmd_newton || *cmd_sf) {
            Rat r = parse_rat(r_text);
            LaurentElem f = parse_element(elem_text, cfg);
            input("r", r_text);
            input("elem", elem_text);
            if (*cmd_newton) {
                manifest["command"] = "newton";
                NewtonPolygon np = newton_polygon(f, r);
                json verts = json::array(), segs = json::array();
                for (const auto& [x, y] : np.vertices) verts.push_back({x, y});
                for (const auto& s : np.segments)
                    segs.push_back({{"slope", rat_str(s.slope)}, {"mult", s.mult}});
                result = {{"vertices", verts}, {"segments", segs}};
            } else {
                manifest["command"] = "slope-factor";
                SlopeFactorization sf = slope_factor(f, r, prec);
                json factors = json::array();
                for (const auto& fac : sf.factors)
                    factors.push_back(
                        {{"slope", rat_str(fac.slope)}, {"factor", fac.factor.str()}});
                result = {{"factors", factors},
                          {"unit", sf.unit.str()},
                          {"achieved_precision", sf.achieved_precision}};
                manifest["achieved_precisions"]["p_adic"] = sf.achieved_precision;
            }
        } else if (*cmd_div || *cmd_cert) {
            std::string gb_text = load_arg(gb_arg);
            GBInput gbi = gb_from_json(gb_text, cfg);
            input("gb", gb_text);
            if (*cmd_cert) {
                manifest["command"] = "groebner-certify";
                json lts = json::array();
                for (const auto& lt : gbi.gb.lts) lts.push_back(lt.str());
                result = {{"certified", gbi.gb.certified}, {"lts", lts}};
            } else {
                manifest["command"] = "divide";
                input("elem", elem_text);
                if (!gbi.gb.certified) throw std::domain_error("divide: basis not certified");
                TateElem<LaurentElem> f = parse_tate(elem_text, cfg, gbi.ord);
                auto se = divide(f, gbi.gb, cfg->Np, cfg->Ns);
                Rat r = parse_rat(r_text);
                json quots = json::array();
                for (const auto& q : se.quotients) quots.push_back(q.str());
                result = {{"remainder", se.remainder.str()},
                          {"quotients", quots},
                          {"dominance_ok", se.dominance_ok},
                          {"valuation", vstr(quotient_valuation(f, gbi.gb, r, cfg->Np, cfg->Ns))}};
            }
        } else if (*cmd_lift) {
            manifest["command"] = "lift-idempotent";
            std::string fam_text = load_arg(family_arg);
            GBInput gbi = gb_from_json(fam_text, cfg);
            if (!gbi.gb.certified) throw std::domain_error("lift: family not certified");
            input("family", fam_text);
            input("prime", prime_text);
            input("e", e_text);
            PrimePtr pr = prime_from_text(prime_text, cfg);
            Family fam{cfg, gbi.ord, gbi.gb, "cli"};
            TateElem<FiberElem> e0 = reduce_tate(parse_tate(e_text, cfg, gbi.ord), pr);
            LiftReport lr = lift_idempotent(fam, pr, e0, c_const, parse_rat(r_text), prec);
            json hv = json::array();
            for (const auto& h : lr.h_vals) hv.push_back(rat_str(h));
            result = {{"f", lr.f.str()},
                      {"iterations", lr.iterations},
                      {"h_vals", hv},
                      {"contraction_ok", lr.contraction_ok},
                      {"final_valuation", vstr(lr.final_valuation)}};
            manifest["achieved_precisions"]["quotient_valuation"] = vstr(lr.final_valuation);
        } else if (*cmd_break || *cmd_herb) {
            std::string ext_text = load_arg(ext_arg);
            input("ext", ext_text);
            auto [br, hb] = fixture_reports(ext_text, cfg);
            if (*cmd_herb) {
                manifest["command"] = "herbrand";
                result = herbrand_json(hb);
            } else {
                manifest["command"] = "break";
                result = break_json(br);
                if (with_oracle) result["oracle"] = herbrand_json(hb);
            }
        } else if (*cmd_asf) {
            manifest["command"] = "as-family";
            input("m", std::to_string(m_param));
            input("a", a_text);
            input("compare_prime", compare_prime);
            input("xi_vp", xi_vp_text);
            ASFamily fam = build_as_family(cfg, m_param, parse_rat(a_text), log_flag);
            PrimePtr pr = prime_from_text(compare_prime, cfg);
            ASFiberComparison cmp = compare_as_fiber(fam, pr, parse_rat(xi_vp_text));
            json p0 = json::array();
            for (const auto& c : fam.p0) p0.push_back(c.str());
            result = {{"e", fam.e},
                      {"m", fam.m},
                      {"alpha0", fam.alpha0},
                      {"beta0", fam.beta0},
                      {"generator", fam.fam.gb.gens[0].str()},
                      {"lt", fam.fam.gb.lts[0].str()},
                      {"p0", p0},
                      {"compare",
                       {{"exact_at_p", cmp.exact_at_p},
                        {"min_agreement", vstr(cmp.min_agreement)},
                        {"threshold", vstr(cmp.threshold)},
                        {"pass", cmp.pass}}}};
        } else if (*cmd_norms) {
            manifest["command"] = "norms-experiment";
            TowerSpec tower = cyclotomic_tower(cfg, 1, 4);
            if (!tower_arg.empty()) {
                std::string tower_text = load_arg(tower_arg);
                input("tower", tower_text);
                json tj = json::parse(tower_text);
                tower.n0 = tj.value("n0", 1L);
                tower.N = tj.value("N", 4L);
                if (tj.contains("xi_vp")) tower.xi_vp = parse_rat(tj["xi_vp"].get<std::string>());
                tower.constant_rule = tj.value("constant_rule", false);
            }
            Rat d(3);
            if (!ext_arg.empty()) {
                std::string ext_text = load_arg(ext_arg);
                input("ext", ext_text);
                d = parse_rat(json::parse(ext_text).at("d").get<std::string>());
            }
            input("levels", levels_text);
            auto dots = levels_text.find("..");
            if (dots == std::string::npos)
                throw std::domain_error("levels: expected range lo..hi");
            long lo = std::stol(levels_text.substr(0, dots));
            long hi = std::stol(levels_text.substr(dots + 2));
            SdrReport sdr = check_sdr(tower);
            ConvergenceReport rep = break_convergence_experiment(tower, d, lo, hi);
            json levels = json::array();
            for (const auto& lev : sdr.levels)
                levels.push_back({{"n", lev.n},
                                  {"degree_ratio", lev.degree_ratio},
                                  {"v_congruence", vstr(lev.v_congruence)},
                                  {"v_xi", vstr(lev.v_xi)},
                                  {"pass", lev.pass}});
            json rows = json::array();
            for (const auto& row : rep.rows)
                rows.push_back(
                    {{"n", row.n}, {"b", rat_str(row.b)}, {"b_log", rat_str(row.b_log)}});
            json poly = json::array();
            for (const auto& c : rep.norm_field.poly) poly.push_back(c.str());
            const char* kinds[] = {"trivial", "unramified", "ramified"};
            result = {{"sdr", {{"xi_ok", sdr.xi_ok}, {"levels", levels}, {"pass", sdr.pass}}},
                      {"rows", rows},
                      {"norm_field",
                       {{"level", rep.norm_field.level},
                        {"degree", rep.norm_field.degree},
                        {"kind", kinds[(int)rep.norm_field.kind]},
                        {"poly", poly},
                        {"b", rat_str(rep.norm_field.b)},
                        {"b_log", rat_str(rep.norm_field.b_log)}}},
                      {"stationary", rep.stationary},
                      {"matches_charp", rep.matches_charp}};
        } else { // selftest
            manifest["command"] = "selftest";
            result = selftest_run(cfg, seed);
            if (!result["ok"].get<bool>()) {
                emit(result, manifest, out_path, out);
                return 1;
            }
        }

        emit(result, manifest, out_path, out);
        return 0;
    } catch (const precision_error& e) {
        err << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        err << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

json selftest_run(const ConfigPtr& cfg, unsigned long seed) {
    std::mt19937_64 rng(seed);
    auto rnd_coeff = [&]() -> Rat {
        long num = (long)(rng() % 19) - 9;
        long k = (long)(rng() % 3);
        return Rat(num) * pow_rat(cfg->p, k);
    };
    auto rnd_elem = [&]() {
        LaurentElem f(cfg);
        long nterms = 1 + (long)(rng() % 4);
        for (long t = 0; t < nterms; ++t)
            f.add_term((long)(rng() % 13) - 6, CoeffElem::from_rat(cfg, rnd_coeff()));
        return f;
    };
    json suites = json::array();
    bool ok = true;
    auto record = [&](const std::string& name, long checked, long passed) {
        suites.push_back({{"name", name}, {"checked", checked}, {"passed", passed}});
        if (checked != passed) ok = false;
    };

    // Gauss-valuation multiplicativity
    {
        long passed = 0, total = 50;
        Rat r(1, 2);
        for (long t = 0; t < total; ++t) {
            LaurentElem f = rnd_elem(), g = rnd_elem();
            if (f.is_zero() || g.is_zero()) { ++passed; continue; }
            if ((f * g).gauss_valuation(r) == f.gauss_valuation(r) + g.gauss_valuation(r))
                ++passed;
        }
        record("gauss_multiplicativity", total, passed);
    }
    // Newton slope additivity
    {
        long passed = 0, total = 25;
        Rat r(1);
        for (long t = 0; t < total; ++t) {
            LaurentElem f = rnd_elem(), g = rnd_elem();
            if (f.is_zero() || g.is_zero()) { ++passed; continue; }
            auto count = [&](const LaurentElem& x) {
                long n = 0;
                for (const auto& s : newton_polygon(x, r).segments) n += s.mult;
                return n;
            };
            if (count(f * g) == count(f) + count(g)) ++passed;
        }
        record("newton_slope_additivity", total, passed);
    }
    // division reconstruction against a fixed certified basis
    {
        long passed = 0, total = 20;
        auto ord = make_order(OrderContext::lex(2));
        TateElem<LaurentElem> f1(ord), f2(ord);
        f1.set({2, 0}, LaurentElem::one(cfg));
        f1.set({0, 0}, -LaurentElem::one(cfg).shifted(1));
        f2.set({0, 3}, LaurentElem::one(cfg));
        f2.set({0, 0}, -LaurentElem::one(cfg).scaled(CoeffElem::from_int(cfg, cfg->p)));
        auto gb = certify_concrete<LaurentElem>({f1, f2}, cfg->Np, cfg->Ns);
        for (long t = 0; t < total; ++t) {
            TateElem<LaurentElem> f(ord);
            long nterms = 1 + (long)(rng() % 4);
            for (long k = 0; k < nterms; ++k)
                f.add_term({(long)(rng() % 4), (long)(rng() % 4)},
                           LaurentElem::monomial(cfg, CoeffElem::from_rat(cfg, rnd_coeff()),
                                                 (long)(rng() % 5)));
            auto se = divide(f, gb, cfg->Np, cfg->Ns);
            TateElem<LaurentElem> recon = se.remainder;
            for (size_t i = 0; i < gb.gens.size(); ++i) recon = recon + se.quotients[i] * gb.gens[i];
            bool good = (recon.normalized(cfg->Np, cfg->Ns) == f.normalized(cfg->Np, cfg->Ns)) &&
                        se.dominance_ok;
            for (const auto& [m2, c2] : se.remainder.terms())
                for (const auto& lt : gb.lts)
                    if (mono_divides(lt.deg, m2)) good = false;
            if (good) ++passed;
        }
        record("division_contract", total, passed);
    }
    // ramification fixture agreement
    {
        long passed = 0, total = 0;
        auto agree = [&](const BreakReport& br, const HerbrandReport& hb) {
            ++total;
            if (br.b == hb.b && br.b_log == hb.b_log) ++passed;
        };
        agree(as_breaks_sqrt_p(cfg), herbrand_sqrt_p(cfg));
        agree(as_breaks_zeta_p(cfg), herbrand_zeta_p(cfg));
        agree(as_breaks_zeta_p2(cfg), herbrand_zeta_p2(cfg));
        agree(as_breaks_as(cfg, 1), herbrand_as(cfg, 1));
        agree(as_breaks_as(cfg, 2), herbrand_as(cfg, 2));
        record("ramification_oracle_agreement", total, passed);
    }

    return json{{"suites", suites}, {"ok", ok}};
}

} // namespace

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_run(args, std::cout, std::cerr);
}

} // namespace ocring
