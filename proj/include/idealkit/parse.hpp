#ifndef IDEALKIT_PARSE_HPP
#define IDEALKIT_PARSE_HPP

#include "idealkit/poly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace idealkit {

enum class Tok {
    Ident, Int, Plus, Minus, Star, Caret, Slash,
    LParen, RParen, LBracket, RBracket, LBrace, RBrace,
    Comma, Semi, Colon, Eq, End
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

/// Tokenizes a whole input up front; '#' starts a comment running to the
/// end of the line. Unknown bytes raise ParseError with their span.
class TokenStream {
public:
    explicit TokenStream(std::string_view text);

    const Token& peek(std::size_t ahead = 0) const;
    Token next();
    bool at_end() const { return peek().kind == Tok::End; }
    Token expect(Tok kind, const std::string& what);
    bool accept(Tok kind);
    /// End offset of the most recently consumed token.
    std::size_t last_end() const { return last_end_; }
    [[noreturn]] void fail(const std::string& msg, const Token& at) const;

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t last_end_ = 0;
};

/// Grammar entry points over an existing token stream; used by the CLI's
/// fixture and scenario readers.
namespace grammar {
FieldPtr field(TokenStream& ts);
RingPtr ring(TokenStream& ts);
Polynomial poly(TokenStream& ts, const RingPtr& ring);
std::vector<Polynomial> poly_list(TokenStream& ts, const RingPtr& ring);  // [ p ; p ; ... ]
Rational rational(TokenStream& ts);
}  // namespace grammar

FieldPtr parse_field(const std::string& text);
RingPtr parse_ring(const std::string& text);
Polynomial parse_poly(const std::string& text, const RingPtr& ring);
/// Canonical text form; parse_poly(print_poly(p)) == p.
std::string print_poly(const Polynomial& p);

/// Fixture file: `ring: <ring>` header, then any number of
/// `ideal NAME = [ p ; p ; ... ]` and `poly NAME = p` entries.
struct FixtureFile {
    RingPtr ring;
    std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
    std::vector<std::pair<std::string, Polynomial>> polys;

    const std::vector<Polynomial>& ideal(const std::string& name) const;
    const Polynomial& poly(const std::string& name) const;
};

FixtureFile parse_fixture(const std::string& text);

}  // namespace idealkit

#endif
