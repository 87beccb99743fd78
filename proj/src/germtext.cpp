#include "germ2/germtext.hpp"
#include "germ2/error.hpp"
#include <json.hpp>
#include <cctype>
#include <memory>
#include <sstream>

namespace germ2 {

namespace {

struct Token {
    enum T { Ident, Number, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, Equals, End } t;
    std::string text;
    int line, col;
};

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;
    explicit Lexer(const std::string& text) : s(text) {}

    void advance() {
        if (pos < s.size() && s[pos] == '\n') { line++; col = 1; }
        else col++;
        pos++;
    }
    void skip_space() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' || s[pos] == '\n'))
            advance();
    }
    Token next() {
        skip_space();
        if (pos >= s.size()) return {Token::End, "", line, col};
        int l = line, c = col;
        char ch = s[pos];
        if (std::isalpha((unsigned char)ch) || ch == '_') {
            std::string id;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) {
                id += s[pos];
                advance();
            }
            return {Token::Ident, id, l, c};
        }
        if (std::isdigit((unsigned char)ch)) {
            std::string num;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                num += s[pos];
                advance();
            }
            if (pos < s.size() && s[pos] == '.')
                throw ParseError("non-rational literal", l, c);
            return {Token::Number, num, l, c};
        }
        advance();
        switch (ch) {
            case '+': return {Token::Plus, "+", l, c};
            case '-': return {Token::Minus, "-", l, c};
            case '*': return {Token::Star, "*", l, c};
            case '^': return {Token::Caret, "^", l, c};
            case '/': return {Token::Slash, "/", l, c};
            case '(': return {Token::LParen, "(", l, c};
            case ')': return {Token::RParen, ")", l, c};
            case ',': return {Token::Comma, ",", l, c};
            case '=': return {Token::Equals, "=", l, c};
            case '.': throw ParseError("non-rational literal", l, c);
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }
};

struct Expr {
    enum K { Num, Var, Add, Sub, Mul, Pow, Neg } k;
    Gaussian num;
    int var = 0; // index into the variable list
    int expo = 0;
    std::unique_ptr<Expr> a, b;
};

using ExprP = std::unique_ptr<Expr>;

struct ExprParser {
    Lexer lex;
    Token cur;
    std::vector<std::string> vars;
    bool allow_slash_expr; // '/' only joins integer literals in germ files

    ExprParser(const std::string& text, std::vector<std::string> vars_, bool allow_slash)
        : lex(text), vars(std::move(vars_)), allow_slash_expr(allow_slash) {
        cur = lex.next();
    }
    void bump() { cur = lex.next(); }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur.line, cur.col); }
    void expect(Token::T t, const char* what) {
        if (cur.t != t) fail(std::string("expected ") + what);
        bump();
    }

    ExprP mk(Expr::K k) {
        auto e = std::make_unique<Expr>();
        e->k = k;
        return e;
    }

    ExprP parse_expr() {
        ExprP e = parse_term();
        while (cur.t == Token::Plus || cur.t == Token::Minus) {
            bool plus = cur.t == Token::Plus;
            bump();
            ExprP rhs = parse_term();
            ExprP n = mk(plus ? Expr::Add : Expr::Sub);
            n->a = std::move(e);
            n->b = std::move(rhs);
            e = std::move(n);
        }
        return e;
    }

    ExprP parse_term() {
        ExprP e = parse_factor();
        while (cur.t == Token::Star || (allow_slash_expr && cur.t == Token::Slash)) {
            bool mul = cur.t == Token::Star;
            bump();
            ExprP rhs = parse_factor();
            if (mul) {
                ExprP n = mk(Expr::Mul);
                n->a = std::move(e);
                n->b = std::move(rhs);
                e = std::move(n);
            } else {
                fail("division of expressions is not part of the germ grammar");
            }
        }
        return e;
    }

    ExprP parse_factor() {
        if (cur.t == Token::Minus) {
            bump();
            ExprP n = mk(Expr::Neg);
            n->a = parse_factor();
            return n;
        }
        ExprP base = parse_atom();
        if (cur.t == Token::Caret) {
            bump();
            if (cur.t != Token::Number) fail("expected nonnegative integer exponent");
            ExprP n = mk(Expr::Pow);
            n->a = std::move(base);
            n->expo = std::stoi(cur.text);
            bump();
            return n;
        }
        return base;
    }

    ExprP parse_atom() {
        if (cur.t == Token::Number) {
            Int nnum(cur.text);
            bump();
            Int den = 1;
            if (cur.t == Token::Slash) {
                bump();
                if (cur.t != Token::Number) fail("expected integer denominator");
                den = Int(cur.text);
                if (den == 0) fail("zero denominator");
                bump();
            }
            ExprP n = mk(Expr::Num);
            Rat q(nnum, den);
            q.canonicalize();
            n->num = Gaussian(q);
            return n;
        }
        if (cur.t == Token::Ident) {
            if (cur.text == "i") {
                bump();
                ExprP n = mk(Expr::Num);
                n->num = Gaussian::i();
                return n;
            }
            for (size_t v = 0; v < vars.size(); v++)
                if (cur.text == vars[v]) {
                    bump();
                    ExprP n = mk(Expr::Var);
                    n->var = (int)v;
                    return n;
                }
            fail("undeclared variable '" + cur.text + "'");
        }
        if (cur.t == Token::LParen) {
            bump();
            ExprP e = parse_expr();
            expect(Token::RParen, "')'");
            return e;
        }
        fail("expected a number, variable or '('");
    }
};

template <class V>
V eval_expr(const Expr& e, const std::vector<V>& vars, const V& one) {
    switch (e.k) {
        case Expr::Num: return Gaussian(e.num) * one;
        case Expr::Var: return vars[e.var];
        case Expr::Add: return eval_expr(*e.a, vars, one) + eval_expr(*e.b, vars, one);
        case Expr::Sub: return eval_expr(*e.a, vars, one) - eval_expr(*e.b, vars, one);
        case Expr::Mul: return eval_expr(*e.a, vars, one) * eval_expr(*e.b, vars, one);
        case Expr::Neg: return -eval_expr(*e.a, vars, one);
        case Expr::Pow: {
            V base = eval_expr(*e.a, vars, one);
            V acc = one;
            for (int t = 0; t < e.expo; t++) acc = acc * base;
            return acc;
        }
    }
    throw MathError("cli: unreachable expression node");
}

// Gaussian * Jet2 exists; Gaussian * Poly1 exists; Gaussian * Jet1 needs the
// scalar on the left which Jet1T provides; Gaussian * Gaussian fine.

} // namespace

GermDocument parse_germ(const std::string& text) {
    GermDocument doc;

    // leading '# key: value' lines become metadata
    std::istringstream is(text);
    std::string body, lineStr;
    int lineno = 0;
    bool in_header = true;
    while (std::getline(is, lineStr)) {
        lineno++;
        if (in_header && !lineStr.empty() && lineStr[0] == '#') {
            size_t colon = lineStr.find(':');
            if (colon != std::string::npos) {
                std::string key = lineStr.substr(1, colon - 1);
                std::string val = lineStr.substr(colon + 1);
                auto trim = [](std::string& s) {
                    while (!s.empty() && std::isspace((unsigned char)s.front())) s.erase(s.begin());
                    while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
                };
                trim(key);
                trim(val);
                doc.metadata[key] = val;
            }
            body += "\n";
            continue;
        }
        in_header = false;
        body += lineStr + "\n";
    }

    Lexer lx(body);
    Token t = lx.next();
    if (t.t != Token::Ident || (t.text != "map" && t.text != "field"))
        throw ParseError("expected 'map' or 'field'", t.line, t.col);
    doc.kind = t.text == "map" ? GermDocument::Map : GermDocument::Field;

    t = lx.next();
    if (t.t != Token::Ident) throw ParseError("expected germ name", t.line, t.col);
    doc.name = t.text;

    t = lx.next();
    if (t.t != Token::LParen) throw ParseError("expected '('", t.line, t.col);
    std::vector<std::string> vars;
    while (true) {
        t = lx.next();
        if (t.t != Token::Ident) throw ParseError("expected variable name", t.line, t.col);
        vars.push_back(t.text);
        t = lx.next();
        if (t.t == Token::RParen) break;
        if (t.t != Token::Comma) throw ParseError("expected ',' or ')'", t.line, t.col);
    }
    if (vars.size() != 1 && vars.size() != 2)
        throw ParseError("one or two variables expected", t.line, t.col);
    doc.nvars = (int)vars.size();

    t = lx.next();
    if (t.t != Token::Equals) throw ParseError("expected '='", t.line, t.col);

    // everything after '=' up to optional trailing 'order N'
    std::string rest = body.substr(lx.pos);
    int order = 12;
    size_t opos = rest.rfind("order");
    if (opos != std::string::npos) {
        std::istringstream os(rest.substr(opos + 5));
        if (!(os >> order) || order < 1)
            throw ParseError("bad truncation order", 0, 0);
        rest = rest.substr(0, opos);
    }
    doc.truncation = order;

    ExprParser ep(rest, vars, true);
    std::vector<ExprP> comps;
    if (ep.cur.t == Token::LParen) {
        // tuple or a parenthesized single expression
        ep.bump();
        comps.push_back(ep.parse_expr());
        while (ep.cur.t == Token::Comma) {
            ep.bump();
            comps.push_back(ep.parse_expr());
        }
        ep.expect(Token::RParen, "')'");
    } else {
        comps.push_back(ep.parse_expr());
    }
    if (ep.cur.t != Token::End)
        throw ParseError("trailing input after germ expression", ep.cur.line, ep.cur.col);
    if ((int)comps.size() != doc.nvars && !(doc.nvars == 1 && comps.size() == 1))
        throw ParseError("component count does not match variable count", 0, 0);

    if (doc.nvars == 2) {
        std::vector<Jet2> vv{Jet2::var_x(order), Jet2::var_y(order)};
        Jet2 one = Jet2::constant(Gaussian(1), order);
        doc.cx = eval_expr(*comps[0], vv, one);
        doc.cy = eval_expr(*comps[1], vv, one);
        try {
            if (doc.kind == GermDocument::Map)
                doc_to_map(doc); // validates origin fixing and invertible linear part
            else
                doc_to_field(doc);
        } catch (const MathError& e) {
            throw ParseError(e.what(), 0, 0);
        }
    } else {
        std::vector<Jet1> vv{Jet1::var(order)};
        Jet1 one = Jet1::constant(Gaussian(1), order);
        doc.c1 = eval_expr(*comps[0], vv, one);
        if (doc.kind == GermDocument::Map) {
            if (!doc.c1.coeff(0).is_zero())
                throw ParseError("map must fix the origin", 0, 0);
            if (doc.c1.coeff(1).is_zero())
                throw ParseError("zero linear part for a map declared as diffeo", 0, 0);
        }
        doc.cx = Jet2(order);
        doc.cy = Jet2(order);
    }
    return doc;
}

std::string render_germ(const GermDocument& doc) {
    std::ostringstream os;
    for (auto& [k, v] : doc.metadata) os << "# " << k << ": " << v << "\n";
    os << (doc.kind == GermDocument::Map ? "map " : "field ") << doc.name;
    if (doc.nvars == 2) {
        os << "(x,y) = (" << doc.cx.str() << ", " << doc.cy.str() << ")";
    } else {
        bool first = true;
        const Jet1& h = doc.c1;
        std::string body;
        for (int d = 0; d <= h.order(); d++) {
            Gaussian c = h.coeff(d);
            if (c.is_zero()) continue;
            Jet2 mono = Jet2::monomial(c, d, 0, h.order());
            std::string term = mono.str("x", "y");
            if (first) body = term;
            else if (!term.empty() && term[0] == '-') body += term;
            else body += "+" + term;
            first = false;
        }
        if (first) body = "0";
        os << "(x) = " << body;
    }
    os << " order " << doc.truncation << "\n";
    return os.str();
}

MapGerm doc_to_map(const GermDocument& doc) {
    if (doc.kind != GermDocument::Map || doc.nvars != 2)
        throw MathError("cli: expected a two-variable map germ");
    return MapGerm(doc.cx, doc.cy, doc.truncation);
}

VFieldGerm doc_to_field(const GermDocument& doc) {
    if (doc.kind != GermDocument::Field || doc.nvars != 2)
        throw MathError("cli: expected a two-variable field germ");
    return VFieldGerm(doc.cx, doc.cy, doc.truncation);
}

Jet1 doc_to_jet1(const GermDocument& doc) {
    if (doc.nvars != 1) throw MathError("cli: expected a one-variable germ");
    return doc.c1;
}

GermDocument doc_from_map(const MapGerm& F, const std::string& name) {
    GermDocument d;
    d.kind = GermDocument::Map;
    d.name = name;
    d.nvars = 2;
    d.truncation = F.order;
    d.cx = F.fx;
    d.cy = F.fy;
    return d;
}

GermDocument doc_from_field(const VFieldGerm& X, const std::string& name) {
    GermDocument d;
    d.kind = GermDocument::Field;
    d.name = name;
    d.nvars = 2;
    d.truncation = X.order;
    d.cx = X.vx;
    d.cy = X.vy;
    return d;
}

GermDocument doc_from_jet1(const Jet1& h, const std::string& name) {
    GermDocument d;
    d.kind = GermDocument::Map;
    d.name = name;
    d.nvars = 1;
    d.truncation = h.order();
    d.c1 = h;
    d.cx = Jet2(h.order());
    d.cy = Jet2(h.order());
    return d;
}

GermDocument doc_with_order(const GermDocument& doc, int order) {
    GermDocument d = doc;
    d.truncation = order;
    if (doc.nvars == 2) {
        d.cx = order <= doc.cx.order() ? doc.cx.truncated(order) : doc.cx.padded(order);
        d.cy = order <= doc.cy.order() ? doc.cy.truncated(order) : doc.cy.padded(order);
    } else {
        Jet1 h(order);
        for (int i = 0; i <= std::min(order, doc.c1.order()); i++) h.set_coeff(i, doc.c1.coeff(i));
        d.c1 = h;
    }
    return d;
}

Poly1 parse_poly1(const std::string& text, const std::string& var) {
    ExprParser ep(text, {var}, true);
    ExprP e = ep.parse_expr();
    if (ep.cur.t != Token::End)
        throw ParseError("trailing input after polynomial", ep.cur.line, ep.cur.col);
    std::vector<Poly1> vv{Poly1::var()};
    return eval_expr(*e, vv, Poly1(1));
}

RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
    // rendered form "(num)/(den)" or a plain polynomial expression
    if (!text.empty() && text[0] == '(') {
        int depth = 0;
        for (size_t i = 0; i < text.size(); i++) {
            if (text[i] == '(') depth++;
            if (text[i] == ')') {
                depth--;
                if (depth == 0) {
                    if (i + 2 < text.size() && text[i + 1] == '/' && text[i + 2] == '(') {
                        Poly1 num = parse_poly1(text.substr(1, i - 1), var);
                        std::string denpart = text.substr(i + 2);
                        if (denpart.back() != ')')
                            throw MathError("cli: malformed rational function text");
                        Poly1 den = parse_poly1(denpart.substr(1, denpart.size() - 2), var);
                        return RatFunc(num, den);
                    }
                    break;
                }
            }
        }
    }
    return RatFunc(parse_poly1(text, var));
}

SemiSeries parse_semiseries_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int order = j.at("order").get<int>();
    SemiSeries S(order, RatFunc());
    auto xs = j.at("xcoeffs");
    auto vs = j.at("vcoeffs");
    for (int d = 0; d <= order; d++) {
        S.xcoeffs[d] = parse_ratfunc(xs.at(d).get<std::string>());
        S.vcoeffs[d] = parse_ratfunc(vs.at(d).get<std::string>());
    }
    return S;
}

} // namespace germ2
