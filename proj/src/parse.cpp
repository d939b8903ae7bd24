#include "grmod/parse.hpp"

#include <cctype>
#include <sstream>

namespace grmod {

std::string ParseError::format(const std::string& msg, int line, int col,
                               const std::string& token) {
    std::ostringstream os;
    if (line > 0)
        os << "line " << line << ", col " << col << ": ";
    else if (col > 0)
        os << "col " << col << ": ";
    os << msg;
    if (!token.empty()) os << " near '" << token << "'";
    return os.str();
}

namespace {

enum class Tok { End, Int, Ident, Plus, Minus, Star, Caret, LParen, RParen };

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line;

    Tok kind = Tok::End;
    std::string text;
    int64_t value = 0;
    int tok_col = 1;

    Lexer(const std::string& s_, int line_) : s(s_), line(line_) { next(); }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line, tok_col, text);
    }

    void next() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
        tok_col = static_cast<int>(pos) + 1;
        text.clear();
        if (pos >= s.size()) {
            kind = Tok::End;
            return;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            text = s.substr(start, pos - start);
            if (text.size() > 18)
                throw ParseError("integer literal too large", line, tok_col,
                                 text);
            value = std::stoll(text);
            kind = Tok::Int;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                    s[pos] == '_'))
                ++pos;
            text = s.substr(start, pos - start);
            kind = Tok::Ident;
            return;
        }
        ++pos;
        text = std::string(1, c);
        switch (c) {
        case '+': kind = Tok::Plus; return;
        case '-': kind = Tok::Minus; return;
        case '*': kind = Tok::Star; return;
        case '^': kind = Tok::Caret; return;
        case '(': kind = Tok::LParen; return;
        case ')': kind = Tok::RParen; return;
        default:
            throw ParseError("unexpected character", line, tok_col, text);
        }
    }
};

struct Parser {
    Lexer lx;
    const ContextPtr& ctx;

    Parser(const ContextPtr& ctx_, const std::string& text, int line)
        : lx(text, line), ctx(ctx_) {}

    Poly expr() {
        bool neg = false;
        if (lx.kind == Tok::Minus) {
            neg = true;
            lx.next();
        }
        Poly acc = term();
        if (neg) acc = -acc;
        while (lx.kind == Tok::Plus || lx.kind == Tok::Minus) {
            bool minus = lx.kind == Tok::Minus;
            lx.next();
            Poly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (lx.kind == Tok::Star) {
            lx.next();
            acc = acc * factor();
        }
        // Adjacency without an operator is an error: no implicit products.
        if (lx.kind == Tok::Ident || lx.kind == Tok::Int ||
            lx.kind == Tok::LParen)
            lx.fail("missing operator (multiplication must be explicit)");
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        if (lx.kind == Tok::Caret) {
            lx.next();
            if (lx.kind != Tok::Int) lx.fail("exponent must be an integer");
            int64_t e = lx.value;
            if (e < 0) lx.fail("negative exponent");
            lx.next();
            Poly acc = Poly::constant(ctx, 1);
            for (int64_t i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly primary() {
        switch (lx.kind) {
        case Tok::Int: {
            int64_t v = lx.value;
            lx.next();
            return Poly::constant(ctx, v);
        }
        case Tok::Ident: {
            int idx = ctx->var_index(lx.text);
            if (idx < 0) lx.fail("unknown variable");
            lx.next();
            return Poly::variable(ctx, idx);
        }
        case Tok::LParen: {
            lx.next();
            Poly inner = expr();
            if (lx.kind != Tok::RParen) lx.fail("expected ')'");
            lx.next();
            return inner;
        }
        default:
            lx.fail("expected a term");
        }
    }
};

} // namespace

Poly parse_poly(const ContextPtr& ctx, const std::string& text, int line) {
    Parser p(ctx, text, line);
    Poly result = p.expr();
    if (p.lx.kind != Tok::End)
        throw ParseError("trailing input", line, p.lx.tok_col, p.lx.text);
    result.validate();
    return result;
}

} // namespace grmod
