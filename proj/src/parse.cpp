#include "idealkit/parse.hpp"

#include <cctype>

namespace idealkit {

namespace {

constexpr int kMaxExponent = 1 << 20;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

TokenStream::TokenStream(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == '#') {
            while (i < n && text[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t begin = i;
        if (ident_start(c)) {
            while (i < n && ident_char(text[i])) ++i;
            tokens_.push_back({Tok::Ident, std::string(text.substr(begin, i - begin)), {begin, i}});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens_.push_back({Tok::Int, std::string(text.substr(begin, i - begin)), {begin, i}});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '/': kind = Tok::Slash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case '{': kind = Tok::LBrace; break;
            case '}': kind = Tok::RBrace; break;
            case ',': kind = Tok::Comma; break;
            case ';': kind = Tok::Semi; break;
            case ':': kind = Tok::Colon; break;
            case '=': kind = Tok::Eq; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", {begin, begin + 1});
        }
        ++i;
        tokens_.push_back({kind, std::string(text.substr(begin, 1)), {begin, i}});
    }
    tokens_.push_back({Tok::End, "", {n, n}});
}

const Token& TokenStream::peek(std::size_t ahead) const {
    std::size_t idx = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[idx];
}

Token TokenStream::next() {
    Token t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    last_end_ = t.span.end;
    return t;
}

Token TokenStream::expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, peek());
    return next();
}

bool TokenStream::accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
}

void TokenStream::fail(const std::string& msg, const Token& at) const {
    std::string shown = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
    throw ParseError(msg + ", got " + shown, at.span);
}

namespace grammar {

namespace {

BigInt parse_big(const Token& t) { return BigInt(t.text); }

int parse_exponent(TokenStream& ts) {
    const Token& t = ts.peek();
    if (t.kind != Tok::Int) ts.fail("expected a non-negative integer exponent", t);
    BigInt e = parse_big(ts.next());
    if (e > kMaxExponent)
        throw ParseError("exponent too large", t.span);
    return e.convert_to<int>();
}

Polynomial parse_expr(TokenStream& ts, const RingPtr& ring);

Polynomial parse_atom(TokenStream& ts, const RingPtr& ring) {
    const Token t = ts.peek();
    switch (t.kind) {
        case Tok::Int: {
            ts.next();
            BigInt num = parse_big(t);
            if (ts.peek().kind == Tok::Slash && ts.peek(1).kind == Tok::Int) {
                ts.next();
                BigInt den = parse_big(ts.next());
                if (den == 0) throw ParseError("zero denominator", t.span);
                return Polynomial::constant(
                    ring, FieldElem::from_rational(ring->field(), Rational(num, den)));
            }
            return Polynomial::constant(ring, FieldElem::from_integer(ring->field(), num));
        }
        case Tok::Ident: {
            ts.next();
            if (auto idx = ring->variable_index(t.text))
                return Polynomial::variable(ring, *idx);
            const FieldPtr& f = ring->field();
            if (f->kind() == FieldKind::SimpleExtension && t.text == f->generator_name())
                return Polynomial::constant(ring, FieldElem::generator(f));
            throw ParseError("unknown variable '" + t.text + "'", t.span);
        }
        case Tok::LParen: {
            ts.next();
            Polynomial inner = parse_expr(ts, ring);
            ts.expect(Tok::RParen, "')'");
            return inner;
        }
        default:
            ts.fail("expected a number, variable, or '('", t);
    }
}

Polynomial parse_factor(TokenStream& ts, const RingPtr& ring) {
    Polynomial base = parse_atom(ts, ring);
    if (ts.accept(Tok::Caret)) {
        int e = parse_exponent(ts);
        return base.pow(static_cast<unsigned>(e));
    }
    return base;
}

Polynomial parse_product(TokenStream& ts, const RingPtr& ring) {
    Polynomial p = parse_factor(ts, ring);
    while (ts.accept(Tok::Star)) p = p * parse_factor(ts, ring);
    return p;
}

Polynomial parse_expr(TokenStream& ts, const RingPtr& ring) {
    bool negate = ts.accept(Tok::Minus);
    Polynomial p = parse_product(ts, ring);
    if (negate) p = -p;
    while (true) {
        if (ts.accept(Tok::Plus)) {
            p = p + parse_product(ts, ring);
        } else if (ts.accept(Tok::Minus)) {
            p = p - parse_product(ts, ring);
        } else {
            return p;
        }
    }
}

std::vector<std::string> parse_var_list(TokenStream& ts) {
    ts.expect(Tok::LBracket, "'['");
    std::vector<std::string> names;
    names.push_back(ts.expect(Tok::Ident, "a variable name").text);
    while (ts.accept(Tok::Comma))
        names.push_back(ts.expect(Tok::Ident, "a variable name").text);
    ts.expect(Tok::RBracket, "']'");
    return names;
}

}  // namespace

Rational rational(TokenStream& ts) {
    bool negate = ts.accept(Tok::Minus);
    Token t = ts.expect(Tok::Int, "an integer");
    BigInt num = parse_big(t);
    BigInt den = 1;
    if (ts.peek().kind == Tok::Slash && ts.peek(1).kind == Tok::Int) {
        ts.next();
        den = parse_big(ts.next());
        if (den == 0) throw ParseError("zero denominator", t.span);
    }
    Rational q(num, den);
    return negate ? -q : q;
}

FieldPtr field(TokenStream& ts) {
    Token name = ts.expect(Tok::Ident, "a field name (QQ or Fp)");
    if (name.text == "Fp") {
        ts.expect(Tok::LParen, "'('");
        Token p = ts.expect(Tok::Int, "a prime modulus");
        ts.expect(Tok::RParen, "')'");
        BigInt mod = parse_big(p);
        if (mod >= (BigInt(1) << 31))
            throw ParseError("prime modulus too large", p.span);
        long long pv = mod.convert_to<long long>();
        if (!is_supported_prime(pv))
            throw ParseError("modulus " + p.text + " is not prime", p.span);
        return FieldDescriptor::prime_field(pv);
    }
    if (name.text != "QQ")
        throw ParseError("unknown field '" + name.text + "'", name.span);
    // QQ, possibly followed by [gen]/(minpoly)
    if (ts.peek().kind == Tok::LBracket && ts.peek(1).kind == Tok::Ident &&
        ts.peek(2).kind == Tok::RBracket && ts.peek(3).kind == Tok::Slash) {
        ts.next();
        Token gen = ts.next();
        ts.next();
        ts.next();
        ts.expect(Tok::LParen, "'('");
        RingPtr gen_ring = PolyRing::make({gen.text}, FieldDescriptor::rationals());
        Polynomial m = poly(ts, gen_ring);
        ts.expect(Tok::RParen, "')'");
        long long deg = m.degree_in(0);
        if (deg < 2)
            throw ParseError("minimal polynomial must have degree >= 2", gen.span);
        std::vector<FieldElem> coeffs(static_cast<std::size_t>(deg) + 1,
                                      FieldElem::zero(FieldDescriptor::rationals()));
        for (const auto& t : m.terms())
            coeffs[static_cast<std::size_t>(t.mono[0])] = t.coeff;
        return FieldDescriptor::simple_extension(FieldDescriptor::rationals(), gen.text,
                                                 std::move(coeffs));
    }
    return FieldDescriptor::rationals();
}

RingPtr ring(TokenStream& ts) {
    FieldPtr f = field(ts);
    Token open = ts.peek();
    std::vector<std::string> names = parse_var_list(ts);
    try {
        return PolyRing::make(std::move(names), std::move(f));
    } catch (const RingError& e) {
        throw ParseError(e.what(), open.span);
    }
}

Polynomial poly(TokenStream& ts, const RingPtr& r) { return parse_expr(ts, r); }

std::vector<Polynomial> poly_list(TokenStream& ts, const RingPtr& r) {
    ts.expect(Tok::LBracket, "'['");
    std::vector<Polynomial> out;
    out.push_back(poly(ts, r));
    while (ts.accept(Tok::Semi)) out.push_back(poly(ts, r));
    ts.expect(Tok::RBracket, "']'");
    return out;
}

}  // namespace grammar

FieldPtr parse_field(const std::string& text) {
    TokenStream ts(text);
    FieldPtr f = grammar::field(ts);
    if (!ts.at_end()) ts.fail("trailing input after field", ts.peek());
    return f;
}

RingPtr parse_ring(const std::string& text) {
    TokenStream ts(text);
    RingPtr r = grammar::ring(ts);
    if (!ts.at_end()) ts.fail("trailing input after ring", ts.peek());
    return r;
}

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
    TokenStream ts(text);
    Polynomial p = grammar::poly(ts, ring);
    if (!ts.at_end()) ts.fail("trailing input after polynomial", ts.peek());
    return p;
}

std::string print_poly(const Polynomial& p) { return p.to_text(); }

const std::vector<Polynomial>& FixtureFile::ideal(const std::string& name) const {
    for (const auto& [n, gens] : ideals)
        if (n == name) return gens;
    throw RingError("fixture has no ideal named '" + name + "'");
}

const Polynomial& FixtureFile::poly(const std::string& name) const {
    for (const auto& [n, p] : polys)
        if (n == name) return p;
    throw RingError("fixture has no polynomial named '" + name + "'");
}

FixtureFile parse_fixture(const std::string& text) {
    TokenStream ts(text);
    FixtureFile out;
    while (!ts.at_end()) {
        Token kw = ts.expect(Tok::Ident, "'ring', 'ideal', or 'poly'");
        if (kw.text == "ring") {
            ts.expect(Tok::Colon, "':'");
            out.ring = grammar::ring(ts);
        } else if (kw.text == "ideal") {
            if (!out.ring) ts.fail("'ring:' must come before ideal entries", kw);
            Token name = ts.expect(Tok::Ident, "an ideal name");
            ts.expect(Tok::Eq, "'='");
            out.ideals.emplace_back(name.text, grammar::poly_list(ts, out.ring));
        } else if (kw.text == "poly") {
            if (!out.ring) ts.fail("'ring:' must come before poly entries", kw);
            Token name = ts.expect(Tok::Ident, "a polynomial name");
            ts.expect(Tok::Eq, "'='");
            out.polys.emplace_back(name.text, grammar::poly(ts, out.ring));
        } else {
            ts.fail("expected 'ring', 'ideal', or 'poly'", kw);
        }
    }
    if (!out.ring) throw ParseError("fixture is missing a 'ring:' line", {0, 0});
    return out;
}

}  // namespace idealkit
