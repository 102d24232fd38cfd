#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "doomlc/diagnostic.hpp"

namespace doomlc {

enum class TokenKind {
    Ident,
    Number,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Colon,
    Semicolon,
    Slash,
    Dot,
    Bang,      // `!` or ●
    Question,  // `?` or ○
    Arrow,     // `->` or →
    DashDash,  // `--`
    Plus,
    Minus,
    Hash,
    Newline,
    Invalid,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string_view text;
    SourceSpan span;
};

/// Splits DooML source into tokens. Comments (`//` to end of line) are dropped,
/// newlines are kept because members are line-terminated. Never fails: bytes
/// outside the alphabet come back as Invalid tokens for the parser to report.
class Lexer {
public:
    Lexer(std::string_view source, std::uint32_t file) : src_(source), file_(file) {}

    std::vector<Token> tokenize() {
        std::vector<Token> out;
        for (;;) {
            Token t = next();
            out.push_back(t);
            if (t.kind == TokenKind::End) break;
        }
        return out;
    }

private:
    std::string_view src_;
    std::uint32_t file_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::uint32_t col_ = 1;

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
            const auto c = static_cast<unsigned char>(src_[pos_]);
            if (c == '\n') {
                ++line_;
                col_ = 1;
            } else if ((c & 0xC0) != 0x80) {
                ++col_;
            }
        }
    }

    Token make(TokenKind kind, std::size_t len) {
        Token t;
        t.kind = kind;
        t.text = src_.substr(pos_, len);
        t.span = SourceSpan{file_, line_, col_, pos_, len};
        advance(len);
        return t;
    }

    static bool ident_start(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    }
    static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

    Token next() {
        for (;;) {
            const char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') {
                advance(1);
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && peek() != '\n') advance(1);
            } else {
                break;
            }
        }
        if (pos_ >= src_.size()) {
            return Token{TokenKind::End, {}, SourceSpan{file_, line_, col_, src_.size(), 0}};
        }

        const char c = peek();
        if (ident_start(c)) {
            std::size_t n = 1;
            while (ident_char(peek(n))) ++n;
            return make(TokenKind::Ident, n);
        }
        if (c >= '0' && c <= '9') {
            std::size_t n = 1;
            while (peek(n) >= '0' && peek(n) <= '9') ++n;
            return make(TokenKind::Number, n);
        }
        if (starts_with("->")) return make(TokenKind::Arrow, 2);
        if (starts_with("--")) return make(TokenKind::DashDash, 2);
        if (starts_with("→")) return make(TokenKind::Arrow, 3);
        if (starts_with("●")) return make(TokenKind::Bang, 3);
        if (starts_with("○")) return make(TokenKind::Question, 3);

        switch (c) {
            case '\n': return make(TokenKind::Newline, 1);
            case '{': return make(TokenKind::LBrace, 1);
            case '}': return make(TokenKind::RBrace, 1);
            case '(': return make(TokenKind::LParen, 1);
            case ')': return make(TokenKind::RParen, 1);
            case ',': return make(TokenKind::Comma, 1);
            case ':': return make(TokenKind::Colon, 1);
            case ';': return make(TokenKind::Semicolon, 1);
            case '/': return make(TokenKind::Slash, 1);
            case '.': return make(TokenKind::Dot, 1);
            case '!': return make(TokenKind::Bang, 1);
            case '?': return make(TokenKind::Question, 1);
            case '+': return make(TokenKind::Plus, 1);
            case '-': return make(TokenKind::Minus, 1);
            case '#': return make(TokenKind::Hash, 1);
            default: break;
        }

        // One whole UTF-8 sequence per Invalid token.
        std::size_t n = 1;
        const auto lead = static_cast<unsigned char>(c);
        if (lead >= 0xC0) {
            while (n < 4 && (static_cast<unsigned char>(peek(n)) & 0xC0) == 0x80) ++n;
        }
        return make(TokenKind::Invalid, n);
    }
};

inline std::string_view describe(TokenKind k) {
    switch (k) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::Number: return "number";
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Comma: return "','";
        case TokenKind::Colon: return "':'";
        case TokenKind::Semicolon: return "';'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Dot: return "'.'";
        case TokenKind::Bang: return "'!'";
        case TokenKind::Question: return "'?'";
        case TokenKind::Arrow: return "'->'";
        case TokenKind::DashDash: return "'--'";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Hash: return "'#'";
        case TokenKind::Newline: return "end of line";
        case TokenKind::Invalid: return "invalid character";
        case TokenKind::End: return "end of input";
    }
    return "token";
}

}  // namespace doomlc
