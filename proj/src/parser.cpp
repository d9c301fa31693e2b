#include "prefcalc/parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <vector>

namespace prefcalc {

ParseError::ParseError(ParseDiagnostic d)
    : Error("parse error at line " + std::to_string(d.line) + ", column " +
            std::to_string(d.column) + ": " + d.message +
            (d.token.empty() ? "" : " (got '" + d.token + "')")),
      diagnostic_(std::move(d)) {}

namespace {

enum class Tok { End, Ident, Number, Dot, Bar, Tilde, Equals, LParen, RParen, Top, Bot };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    double number = 0.0;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_space();
            Token t = next();
            tokens.push_back(t);
            if (t.kind == Tok::End) break;
        }
        return tokens;
    }

    [[noreturn]] void fail(std::size_t offset, std::string message, std::string token) const {
        ParseDiagnostic d;
        d.offset = offset;
        d.line = 1;
        d.column = 1;
        for (std::size_t i = 0; i < offset && i < input_.size(); ++i) {
            if (input_[i] == '\n') { ++d.line; d.column = 1; }
            else ++d.column;
        }
        d.message = std::move(message);
        d.token = std::move(token);
        throw ParseError(std::move(d));
    }

private:
    void skip_space() {
        while (pos_ < input_.size() &&
               std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
    }

    bool match_bytes(std::string_view bytes) {
        if (input_.substr(pos_, bytes.size()) != bytes) return false;
        pos_ += bytes.size();
        return true;
    }

    Token next() {
        Token t;
        t.offset = pos_;
        if (pos_ >= input_.size()) return t;

        const char c = input_[pos_];
        if (match_bytes("∨")) { t.kind = Tok::Bar; t.text = "∨"; return t; }
        if (match_bytes("·")) { t.kind = Tok::Dot; t.text = "·"; return t; }
        switch (c) {
            case '.': ++pos_; t.kind = Tok::Dot; t.text = "."; return t;
            case '|': ++pos_; t.kind = Tok::Bar; t.text = "|"; return t;
            case '~': ++pos_; t.kind = Tok::Tilde; t.text = "~"; return t;
            case '=': ++pos_; t.kind = Tok::Equals; t.text = "="; return t;
            case '(': ++pos_; t.kind = Tok::LParen; t.text = "("; return t;
            case ')': ++pos_; t.kind = Tok::RParen; t.text = ")"; return t;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-')
            return lex_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return lex_ident();
        fail(pos_, "unexpected character", std::string(1, c));
    }

    Token lex_number() {
        Token t;
        t.kind = Tok::Number;
        t.offset = pos_;
        std::size_t p = pos_;
        if (p < input_.size() && (input_[p] == '+' || input_[p] == '-')) ++p;
        const std::size_t digits_start = p;
        while (p < input_.size() && std::isdigit(static_cast<unsigned char>(input_[p]))) ++p;
        if (p == digits_start)
            fail(pos_, "malformed number", std::string(1, input_[pos_]));
        // a '.' is part of the number only when a digit follows; otherwise it
        // is the conjunction operator
        if (p + 1 < input_.size() && input_[p] == '.' &&
            std::isdigit(static_cast<unsigned char>(input_[p + 1]))) {
            ++p;
            while (p < input_.size() && std::isdigit(static_cast<unsigned char>(input_[p]))) ++p;
        }
        if (p < input_.size() && (input_[p] == 'e' || input_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < input_.size() && (input_[q] == '+' || input_[q] == '-')) ++q;
            std::size_t exp_start = q;
            while (q < input_.size() && std::isdigit(static_cast<unsigned char>(input_[q]))) ++q;
            if (q > exp_start) p = q;
        }
        t.text = std::string(input_.substr(pos_, p - pos_));
        // from_chars takes no leading '+'
        const char* begin = input_.data() + pos_ + (input_[pos_] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(begin, input_.data() + p, t.number);
        if (ec != std::errc{} || ptr != input_.data() + p)
            fail(pos_, "malformed number", t.text);
        pos_ = p;
        return t;
    }

    Token lex_ident() {
        Token t;
        t.offset = pos_;
        std::size_t p = pos_;
        while (p < input_.size() &&
               (std::isalnum(static_cast<unsigned char>(input_[p])) || input_[p] == '_'))
            ++p;
        t.text = std::string(input_.substr(pos_, p - pos_));
        pos_ = p;
        if (t.text == "TOP") t.kind = Tok::Top;
        else if (t.text == "BOT") t.kind = Tok::Bot;
        else t.kind = Tok::Ident;
        return t;
    }

    std::string_view input_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view input) : lexer_(input), tokens_(lexer_.run()) {}

    ExprPtr run() {
        ExprPtr e = parse_disj();
        expect_end();
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const Token& at, std::string message) {
        lexer_.fail(at.offset, std::move(message), at.text);
    }

    void expect_end() {
        if (peek().kind == Tok::Equals)
            fail(peek(), "duplicate '=' in atom");
        if (peek().kind != Tok::End)
            fail(peek(), "expected end of input");
    }

    ExprPtr parse_disj() {
        std::vector<ExprPtr> parts{parse_conj()};
        while (peek().kind == Tok::Bar) {
            advance();
            parts.push_back(parse_conj());
        }
        return Expr::disjunction(std::move(parts));
    }

    ExprPtr parse_conj() {
        std::vector<ExprPtr> parts{parse_unary()};
        while (peek().kind == Tok::Dot) {
            advance();
            parts.push_back(parse_unary());
        }
        return Expr::conjunction(std::move(parts));
    }

    ExprPtr parse_unary() {
        if (peek().kind == Tok::Tilde) {
            advance();
            return Expr::complement(parse_unary());
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Top: advance(); return Expr::top();
            case Tok::Bot: advance(); return Expr::bottom();
            case Tok::LParen: {
                advance();
                ExprPtr e = parse_disj();
                if (peek().kind != Tok::RParen)
                    fail(peek(), "expected ')'");
                advance();
                return e;
            }
            case Tok::Ident: {
                const Token name = advance();
                if (peek().kind != Tok::Equals)
                    fail(peek(), "expected '=' after attribute name");
                advance();
                if (peek().kind != Tok::Number)
                    fail(peek(), "expected a level after '='");
                const Token level = advance();
                if (peek().kind == Tok::Equals)
                    fail(peek(), "duplicate '=' in atom");
                return Expr::atom(name.text, level.number);
            }
            default:
                fail(t, "expected an atom, '(', 'TOP' or 'BOT'");
        }
    }

    Lexer lexer_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Disjunction: return 0;
        case ExprKind::Conjunction: return 1;
        case ExprKind::Complement: return 2;
        default: return 3;
    }
}

void format_rec(const ExprPtr& e, int parent_prec, std::string& out) {
    const bool needs_parens = precedence(*e) < parent_prec;
    if (needs_parens) out += '(';
    switch (e->kind()) {
        case ExprKind::Top: out += "TOP"; break;
        case ExprKind::Bottom: out += "BOT"; break;
        case ExprKind::Atom:
            out += e->atom_value().attribute;
            out += '=';
            out += format_level(e->atom_value().level);
            break;
        case ExprKind::Complement:
            out += '~';
            format_rec(e->child(), 2, out);
            break;
        case ExprKind::Conjunction:
        case ExprKind::Disjunction: {
            const int prec = precedence(*e);
            const char* sep = e->kind() == ExprKind::Conjunction ? " . " : " | ";
            for (std::size_t i = 0; i < e->children().size(); ++i) {
                if (i) out += sep;
                format_rec(e->children()[i], prec + 1, out);
            }
            break;
        }
    }
    if (needs_parens) out += ')';
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string format(const ExprPtr& e) {
    std::string out;
    format_rec(e, 0, out);
    return out;
}

std::string format_level(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string format_number(double value, int significant_digits) {
    char buf[64];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general,
                      significant_digits);
    return std::string(buf, ptr);
}

}  // namespace prefcalc
