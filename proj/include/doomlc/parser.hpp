#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doomlc/diagnostic.hpp"
#include "doomlc/lexer.hpp"
#include "doomlc/model.hpp"

namespace doomlc {

struct ParseResult {
    Model model;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

namespace detail {

struct SyntaxError {
    Diagnostic diag;
};

class Parser {
public:
    Parser(std::string_view source, std::uint32_t file)
        : tokens_(Lexer(source, file).tokenize()) {}

    ParseResult run() {
        ParseResult result;
        for (;;) {
            skip_separators();
            if (at(TokenKind::End)) break;
            try {
                const Token& t = cur();
                if (is_keyword(t, "archetype")) {
                    add_archetype(result, parse_archetype());
                } else if (is_keyword(t, "relationship")) {
                    add_relationship(result, parse_relationship());
                } else {
                    fail(codes::kSyntax,
                         "expected 'archetype' or 'relationship', found " + found(t), t.span);
                }
            } catch (const SyntaxError& e) {
                result.diagnostics.push_back(e.diag);
                recover();
            }
        }
        sort_diagnostics(result.diagnostics);
        return result;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    const Token& cur() const { return tokens_[pos_]; }
    const Token& peek_token(std::size_t ahead) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    bool at(TokenKind k) const { return cur().kind == k; }
    const Token& bump() {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::End) ++pos_;
        return t;
    }

    static bool is_keyword(const Token& t, std::string_view word) {
        return t.kind == TokenKind::Ident && t.text == word;
    }

    static std::string found(const Token& t) {
        if (t.kind == TokenKind::Ident || t.kind == TokenKind::Number ||
            t.kind == TokenKind::Invalid) {
            return std::string(describe(t.kind)) + " '" + std::string(t.text) + "'";
        }
        return std::string(describe(t.kind));
    }

    [[noreturn]] static void fail(std::string_view code, std::string message, SourceSpan span) {
        throw SyntaxError{make_error(code, std::move(message), span)};
    }

    [[noreturn]] void unexpected(std::string_view what) const {
        const Token& t = cur();
        const auto code = t.kind == TokenKind::Invalid ? codes::kBadCharacter : codes::kSyntax;
        fail(code, "expected " + std::string(what) + ", found " + found(t), t.span);
    }

    const Token& expect(TokenKind k, std::string_view what) {
        if (!at(k)) unexpected(what);
        return bump();
    }

    const Token& expect_ident(std::string_view what) { return expect(TokenKind::Ident, what); }

    void skip_newlines() {
        while (at(TokenKind::Newline)) bump();
    }

    void skip_separators() {
        while (at(TokenKind::Newline) || at(TokenKind::Semicolon)) bump();
    }

    // A member ends at a newline, a ';' or the closing brace of its section.
    void end_member() {
        if (at(TokenKind::Newline) || at(TokenKind::Semicolon)) {
            bump();
            return;
        }
        if (at(TokenKind::RBrace)) return;
        unexpected("end of line");
    }

    // Resume at the next line that starts with a top-level keyword.
    void recover() {
        if (!at(TokenKind::End)) bump();
        while (!at(TokenKind::End)) {
            const bool line_start = pos_ == 0 || tokens_[pos_ - 1].kind == TokenKind::Newline;
            if (line_start && (is_keyword(cur(), "archetype") || is_keyword(cur(), "relationship"))) {
                return;
            }
            bump();
        }
    }

    static SourceSpan join(SourceSpan from, const Token& last) {
        const std::size_t end = last.span.offset + last.span.length;
        if (end > from.offset) from.length = end - from.offset;
        return from;
    }

    const Token& previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }

    Classifier parse_classifier() {
        const Token& letter = cur();
        if (letter.kind != TokenKind::Ident || letter.text.size() != 1 ||
            !lifeline_from_letter(letter.text[0])) {
            fail(codes::kBadClassifier,
                 "expected a classifier (A, B, C, D or x followed by +, - or #), found " + found(letter),
                 letter.span);
        }
        bump();
        const Token& sym = cur();
        std::optional<Visibility> vis;
        if (sym.kind == TokenKind::Plus || sym.kind == TokenKind::Minus || sym.kind == TokenKind::Hash) {
            vis = visibility_from_symbol(sym.text[0]);
        }
        if (!vis) {
            fail(codes::kBadClassifier,
                 "classifier '" + std::string(letter.text) + "' needs a visibility symbol (+, - or #)",
                 sym.span);
        }
        bump();
        return Classifier{*lifeline_from_letter(letter.text[0]), *vis};
    }

    static bool is_type_start(const Token& t) {
        return t.kind == TokenKind::Ident && t.text != "PK";
    }

    // name [ '(' arg {',' arg} ')' ]
    std::string parse_type_token() {
        const Token& name = cur();
        if (!is_type_start(name)) {
            fail(codes::kMalformedType, "expected a type name, found " + found(name), name.span);
        }
        bump();
        std::string text(name.text);
        if (at(TokenKind::LParen)) {
            bump();
            text += '(';
            for (bool first = true;; first = false) {
                if (!first) {
                    if (at(TokenKind::RParen)) break;
                    if (!at(TokenKind::Comma)) {
                        fail(codes::kMalformedType, "expected ',' or ')' in type arguments, found " + found(cur()),
                             cur().span);
                    }
                    bump();
                    text += ',';
                }
                const Token& arg = cur();
                if (arg.kind != TokenKind::Number && arg.kind != TokenKind::Ident) {
                    fail(codes::kMalformedType, "expected a type argument, found " + found(arg), arg.span);
                }
                text += arg.text;
                bump();
            }
            bump();
            text += ')';
        }
        return text;
    }

    DualType parse_dual_type() {
        const SourceSpan start = cur().span;
        DualType t;
        if (at(TokenKind::Slash)) {
            bump();
            if (!is_type_start(cur())) {
                fail(codes::kMalformedType, "a type needs a code side or a database side", start);
            }
            t.db = parse_type_token();
        } else {
            t.code = parse_type_token();
            if (at(TokenKind::Slash)) {
                bump();
                if (is_type_start(cur())) t.db = parse_type_token();
            } else {
                t.db = t.code;
            }
        }
        if (at(TokenKind::Slash)) {
            fail(codes::kMalformedType, "a type has at most one '/' separating code and database types",
                 cur().span);
        }
        return t;
    }

    void expect_colon(std::string_view after) {
        if (!at(TokenKind::Colon)) {
            fail(codes::kMissingColon,
                 "expected ':' after " + std::string(after) + ", found " + found(cur()), cur().span);
        }
        bump();
    }

    Field parse_field() {
        const SourceSpan start = cur().span;
        Field f;
        f.classifier = parse_classifier();
        f.name = std::string(expect_ident("field name").text);
        expect_colon("field name '" + f.name + "'");
        f.type = parse_dual_type();
        if (is_keyword(cur(), "PK")) {
            bump();
            f.primary_key = true;
        }
        f.span = join(start, previous());
        return f;
    }

    Method parse_method() {
        const SourceSpan start = cur().span;
        Method m;
        m.classifier = parse_classifier();
        m.name = std::string(expect_ident("method name").text);
        expect(TokenKind::LParen, "'(' after method name");
        skip_newlines();
        if (!at(TokenKind::RParen)) {
            for (;;) {
                skip_newlines();
                Parameter p;
                p.name = std::string(expect_ident("parameter name").text);
                expect_colon("parameter name '" + p.name + "'");
                p.type = parse_dual_type();
                m.params.push_back(std::move(p));
                skip_newlines();
                if (at(TokenKind::Comma)) {
                    bump();
                    continue;
                }
                break;
            }
        }
        expect(TokenKind::RParen, "',' or ')' in parameter list");
        if (at(TokenKind::Colon)) {
            bump();
            m.result = parse_dual_type();
        }
        m.span = join(start, previous());
        return m;
    }

    ArchetypeKind parse_kind_keyword(const Token& t) {
        if (t.kind == TokenKind::Ident && t.text.size() == 7 && t.text.substr(1) == "Object") {
            if (auto k = kind_from_letter(t.text[0])) return *k;
        }
        fail(codes::kSyntax, "expected an archetype kind (xObject, aObject, bObject, cObject or dObject), found " +
                                 found(t),
             t.span);
    }

    RelationalEntry parse_relational_entry() {
        const SourceSpan start = cur().span;
        RelationalEntry e;
        e.classifier = parse_classifier();
        e.local_field = std::string(expect_ident("local field name").text);
        expect(TokenKind::Arrow, "'->'");
        e.target.kind = parse_kind_keyword(cur());
        bump();
        expect(TokenKind::Dot, "'.' after archetype kind");
        e.target.name = std::string(expect_ident("target archetype name").text);
        expect(TokenKind::Dot, "'.' after target archetype name");
        e.target_field = std::string(expect_ident("target field name or PID").text);
        const Token& marker = cur();
        if (marker.kind == TokenKind::Bang) {
            e.participation = Participation::Filled;
        } else if (marker.kind == TokenKind::Question) {
            e.participation = Participation::Open;
        } else {
            fail(codes::kBadParticipation,
                 "expected participation marker '!' (filled) or '?' (open), found " + found(marker),
                 marker.span);
        }
        bump();
        e.span = join(start, previous());
        return e;
    }

    template <typename Fn>
    void parse_member_block(Fn&& member) {
        expect(TokenKind::LBrace, "'{'");
        for (;;) {
            skip_separators();
            if (at(TokenKind::RBrace)) break;
            if (at(TokenKind::End)) unexpected("'}'");
            member();
            end_member();
        }
        bump();
    }

    void check_unique_members(const Archetype& a) {
        std::set<std::string> fields;
        for (const auto& f : a.fields) {
            if (!fields.insert(f.name).second) {
                fail(codes::kDuplicate, "duplicate field '" + f.name + "' in archetype " + a.name, f.span);
            }
        }
        std::set<std::pair<std::string, std::size_t>> methods;
        for (const auto& m : a.methods) {
            if (!methods.insert({m.name, m.params.size()}).second) {
                fail(codes::kDuplicate,
                     "duplicate method '" + m.name + "' with " + std::to_string(m.params.size()) +
                         " parameter(s) in archetype " + a.name,
                     m.span);
            }
        }
    }

    Archetype parse_archetype() {
        bump();  // 'archetype'
        Archetype a;
        a.kind = parse_kind_keyword(cur());
        bump();
        const Token& name = expect_ident("archetype name");
        a.name = std::string(name.text);
        a.span = name.span;
        skip_newlines();
        expect(TokenKind::LBrace, "'{' to open archetype " + a.name);
        for (;;) {
            skip_separators();
            const Token& t = cur();
            if (t.kind == TokenKind::RBrace) break;
            if (is_keyword(t, "fields")) {
                bump();
                skip_newlines();
                parse_member_block([&] { a.fields.push_back(parse_field()); });
            } else if (is_keyword(t, "methods")) {
                bump();
                skip_newlines();
                parse_member_block([&] { a.methods.push_back(parse_method()); });
            } else if (is_keyword(t, "relations")) {
                bump();
                skip_newlines();
                parse_member_block([&] { a.relations.push_back(parse_relational_entry()); });
            } else {
                unexpected("'fields', 'methods', 'relations' or '}'");
            }
        }
        bump();
        check_unique_members(a);
        return a;
    }

    Cardinality parse_cardinality() {
        const Token& t = cur();
        std::optional<Cardinality> c;
        if (t.kind == TokenKind::Number && t.text == "1") c = Cardinality::One;
        if (t.kind == TokenKind::Ident && (t.text == "n" || t.text == "N")) c = Cardinality::N;
        if (t.kind == TokenKind::Ident && (t.text == "m" || t.text == "M")) c = Cardinality::M;
        if (!c) fail(codes::kSyntax, "expected a cardinality (1, n or m), found " + found(t), t.span);
        bump();
        return *c;
    }

    RelationshipEnd parse_end_name() {
        const Token& t = expect_ident("archetype name");
        RelationshipEnd e;
        e.archetype = std::string(t.text);
        e.span = t.span;
        return e;
    }

    Relationship parse_relationship() {
        bump();  // 'relationship'
        Relationship r;
        const Token& name = expect_ident("relationship name");
        r.name = std::string(name.text);
        r.span = name.span;

        expect(TokenKind::LParen, "'(' after relationship name");
        skip_newlines();
        RelationshipEnd first = parse_end_name();
        first.cardinality = parse_cardinality();
        r.ends.push_back(std::move(first));
        do {
            skip_newlines();
            expect(TokenKind::DashDash, "'--'");
            skip_newlines();
            const Cardinality c = parse_cardinality();
            RelationshipEnd e = parse_end_name();
            e.cardinality = c;
            r.ends.push_back(std::move(e));
            skip_newlines();
        } while (at(TokenKind::DashDash) && r.ends.size() < 3);
        expect(TokenKind::RParen, r.ends.size() < 3 ? "'--' or ')'" : "')'");
        skip_newlines();

        expect(TokenKind::LBrace, "'{' to open relationship " + r.name);
        for (;;) {
            skip_separators();
            const Token& t = cur();
            if (t.kind == TokenKind::RBrace) break;
            if (is_keyword(t, "total")) {
                bump();
                expect_colon("'total'");
                for (;;) {
                    const Token& end_name = expect_ident("archetype name");
                    auto it = std::find_if(r.ends.begin(), r.ends.end(), [&](const RelationshipEnd& e) {
                        return e.archetype == end_name.text;
                    });
                    if (it == r.ends.end()) {
                        fail(codes::kUnknownEnd,
                             "'" + std::string(end_name.text) + "' is not an end of relationship " + r.name,
                             end_name.span);
                    }
                    it->total = true;
                    if (!at(TokenKind::Comma)) break;
                    bump();
                }
                end_member();
            } else if (is_keyword(t, "attributes")) {
                bump();
                skip_newlines();
                parse_member_block([&] { r.attributes.push_back(parse_field()); });
            } else {
                unexpected("'total', 'attributes' or '}'");
            }
        }
        bump();

        std::set<std::string> attrs;
        for (const auto& f : r.attributes) {
            if (!attrs.insert(f.name).second) {
                fail(codes::kDuplicate, "duplicate attribute '" + f.name + "' in relationship " + r.name,
                     f.span);
            }
        }
        return r;
    }

    void add_archetype(ParseResult& result, Archetype a) {
        for (const auto& other : result.model.archetypes) {
            if (iequals(other.name, a.name)) {
                result.diagnostics.push_back(make_error(
                    codes::kDuplicate, "duplicate archetype name '" + a.name + "'", a.span));
                return;
            }
        }
        result.model.archetypes.push_back(std::move(a));
    }

    void add_relationship(ParseResult& result, Relationship r) {
        for (const auto& other : result.model.relationships) {
            if (iequals(other.name, r.name)) {
                result.diagnostics.push_back(make_error(
                    codes::kDuplicate, "duplicate relationship name '" + r.name + "'", r.span));
                return;
            }
        }
        result.model.relationships.push_back(std::move(r));
    }
};

}  // namespace detail

/// Parses one DooML source. `file` is stamped into every span so diagnostics
/// from several inputs can be told apart. Errors inside a declaration skip to
/// the next top-level `archetype` / `relationship` line, so one call can
/// report several problems.
inline ParseResult parse_model(std::string_view source, std::uint32_t file = 0) {
    return detail::Parser(source, file).run();
}

}  // namespace doomlc
