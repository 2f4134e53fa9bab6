#include "ocring/parse.hpp"

#include <cctype>

#include "json.hpp"

namespace ocring {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", i);
    }
    Int integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == digits) throw parse_error("expected integer", start);
        return Int(s.substr(start, i - start));
    }
    long small_integer() {
        Int n = integer();
        if (!n.fits_slong_p()) throw parse_error("integer too large", i);
        return n.get_si();
    }
};

// 'p' ('^' int)? as an exact rational power of the configured prime
Rat p_power(Cursor& c, long p) {
    ++c.i; // the 'p'
    long k = 1;
    if (c.accept('^')) k = c.small_integer();
    return pow_rat(p, k);
}

// int ('/' ('p'('^'int)? | uint))?
Rat number(Cursor& c, long p) {
    Int num = c.integer();
    if (!c.accept('/')) return Rat(num);
    Rat den;
    if (c.peek() == 'p') den = p_power(c, p);
    else den = Rat(c.integer());
    if (den == 0) throw parse_error("division by zero", c.i);
    Rat q = Rat(num) / den;
    q.canonicalize();
    return q;
}

// one term of the element grammar, folded into (coefficient, S-exponent)
void element_term(Cursor& c, long p, Rat& coeff, long& sexp) {
    coeff = 1;
    sexp = 0;
    for (;;) {
        char ch = c.peek();
        if (ch == 'S') {
            ++c.i;
            long n = 1;
            if (c.accept('^')) n = c.small_integer();
            sexp += n;
        } else if (ch == 'p') {
            coeff *= p_power(c, p);
        } else if (ch == '-' || ch == '+' || std::isdigit((unsigned char)ch)) {
            coeff *= number(c, p);
        } else {
            throw parse_error("expected term factor", c.i);
        }
        coeff.canonicalize();
        if (!c.accept('*')) return;
    }
}

LaurentElem element(Cursor& c, const ConfigPtr& cfg) {
    LaurentElem out(cfg);
    do {
        Rat coeff;
        long sexp;
        element_term(c, cfg->p, coeff, sexp);
        if (sexp < -cfg->Ns || sexp > cfg->Ns)
            throw parse_error("exponent outside window", c.i);
        out.add_term(sexp, CoeffElem::from_rat(cfg, coeff));
    } while (c.accept('+'));
    return out;
}

} // namespace

Rat parse_rat(const std::string& text) {
    Cursor c{text};
    Int num = c.integer();
    Rat q(num);
    if (c.accept('/')) {
        Int den = c.integer();
        if (den == 0) throw parse_error("division by zero", c.i);
        q = Rat(num) / Rat(den);
    }
    if (!c.eof()) throw parse_error("trailing input", c.i);
    q.canonicalize();
    return q;
}

LaurentElem parse_element(const std::string& text, const ConfigPtr& cfg) {
    Cursor c{text};
    LaurentElem out = element(c, cfg);
    if (!c.eof()) throw parse_error("trailing input", c.i);
    return out;
}

OrderContext parse_order(const std::string& text) {
    Cursor c{text};
    size_t name_start = c.i;
    std::string name;
    while (!c.eof() && (std::isalpha((unsigned char)c.peek()))) name += text[c.i++];
    bool graded;
    if (name == "lex") graded = false;
    else if (name == "grlex") graded = true;
    else throw parse_error("unknown order '" + name + "'", name_start);
    c.expect(':');
    std::vector<int> priority;
    do {
        if (c.peek() != 'X') throw parse_error("expected variable", c.i);
        ++c.i;
        long idx = c.small_integer();
        if (idx < 0) throw parse_error("negative variable index", c.i);
        priority.push_back((int)idx);
    } while (c.accept('>'));
    if (!c.eof()) throw parse_error("trailing input", c.i);
    long nvars = 0;
    for (int idx : priority) nvars = std::max(nvars, (long)idx + 1);
    std::vector<bool> seen(nvars, false);
    for (int idx : priority) {
        if (seen[idx]) throw parse_error("duplicate variable in order", text.size());
        seen[idx] = true;
    }
    if ((long)priority.size() != nvars)
        throw parse_error("order must list every variable X0..Xn", text.size());
    OrderContext ord;
    ord.nvars = nvars;
    ord.priority = std::move(priority);
    ord.graded = graded;
    return ord;
}

TateElem<LaurentElem> parse_tate(const std::string& text, const ConfigPtr& cfg,
                                 const OrderPtr& ord) {
    Cursor c{text};
    TateElem<LaurentElem> out(ord);
    do {
        LaurentElem coeff = LaurentElem::one(cfg);
        Monomial mono = mono_one(ord->nvars);
        for (;;) {
            char ch = c.peek();
            if (ch == '(') {
                ++c.i;
                coeff = coeff * element(c, cfg);
                c.expect(')');
            } else if (ch == 'X') {
                ++c.i;
                long idx = c.small_integer();
                if (idx < 0 || idx >= ord->nvars)
                    throw parse_error("variable index out of range", c.i);
                long e = 1;
                if (c.accept('^')) e = c.small_integer();
                if (e < 0) throw parse_error("negative monomial exponent", c.i);
                mono[idx] += e;
            } else if (ch == 'S') {
                ++c.i;
                long n = 1;
                if (c.accept('^')) n = c.small_integer();
                if (n < -cfg->Ns || n > cfg->Ns)
                    throw parse_error("exponent outside window", c.i);
                coeff = coeff.shifted(n);
            } else if (ch == 'p') {
                coeff = coeff.scaled(CoeffElem::from_rat(cfg, p_power(c, cfg->p)));
            } else if (ch == '-' || std::isdigit((unsigned char)ch)) {
                coeff = coeff.scaled(CoeffElem::from_rat(cfg, number(c, cfg->p)));
            } else {
                throw parse_error("expected term factor", c.i);
            }
            if (!c.accept('*')) break;
        }
        out.add_term(mono, coeff);
    } while (c.accept('+'));
    if (!c.eof()) throw parse_error("trailing input", c.i);
    return out;
}

ConfigPtr config_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    long p = j.at("p").get<long>();
    long f = j.value("f", 1L);
    long Np = j.value("Np", 64L);
    long Ns = j.value("Ns", 256L);
    std::vector<long> conway = j.value("conway", std::vector<long>{});
    return make_config(p, f, Np, Ns, std::move(conway));
}

} // namespace ocring
