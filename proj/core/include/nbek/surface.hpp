/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nbek/monoid.hpp"
#include "nbek/nf.hpp"
#include "nbek/syntax.hpp"

namespace nbek::surface {

// Concrete syntax.
//
//   type  ::= atype ("->" type)?               right-associative
//   atype ::= "O" | "(" type ")"
//   term  ::= "\" ident ":" type "." term      body extends as far right as possible
//           | atom atom*                       application, left-associative
//   atom  ::= "yes" | "no" | ident | "(" term ")"
//   mon   ::= "eps" | "(" "gen" ident ")" | "(" "mu" mon mon ")"
//
// Identifiers are [a-zA-Z][a-zA-Z0-9_]* other than the keywords yes, no, O.
// Whitespace is insignificant.

/// Half-open byte range [start, end) into the parsed text.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, const std::string& message);
    SourceSpan span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

class UnknownIdentifier : public std::runtime_error {
public:
    UnknownIdentifier(std::string name, SourceSpan span);
    const std::string& name() const noexcept { return name_; }
    SourceSpan span() const noexcept { return span_; }

private:
    std::string name_;
    SourceSpan span_;
};

/// A term with variables still referred to by name.
struct NamedTerm {
    struct Var {
        std::string name;
    };
    struct Lam {
        std::string binder;
        Type annot;
        Box<NamedTerm> body;
    };
    struct App {
        Box<NamedTerm> fun;
        Box<NamedTerm> arg;
    };
    struct Yes {};
    struct No {};

    std::variant<Var, Lam, App, Yes, No> node;
    SourceSpan span;
};

enum class TokenKind { Ident, Yes, No, O, Backslash, Colon, Dot, LParen, RParen, Arrow, Equals, Comma, End };

struct Token {
    TokenKind kind;
    std::string_view text;
    SourceSpan span;
};

/// Recursive-descent parser over one line of input. The entry points consume
/// a maximal phrase and stop at the first token that cannot continue it, so
/// callers can parse composite forms such as `term : type`.
class Parser {
public:
    /// Tokenizes eagerly; throws ParseError on a character outside the grammar.
    explicit Parser(std::string_view src);

    Type type();
    NamedTerm term();
    monoid::MonExpr mon_expr();
    std::string ident();

    const Token& peek() const noexcept { return tokens_[pos_]; }
    bool accept(TokenKind kind);
    void expect(TokenKind kind);
    bool at_end() const noexcept { return peek().kind == TokenKind::End; }
    void expect_end();

    std::string_view source() const noexcept { return src_; }

private:
    Type atype();
    NamedTerm atom();
    bool at_atom_start() const noexcept;
    [[noreturn]] void fail(const std::string& expected) const;
    const Token& advance() noexcept { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    std::string_view src_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Whole-input entry points: trailing tokens are a ParseError.
Type parse_type(std::string_view src);
NamedTerm parse_term(std::string_view src);
monoid::MonExpr parse_mon_expr(std::string_view src);

/// Converts names to de Bruijn indices. `ctx_names` is in binding order
/// (outermost first); later bindings shadow earlier ones.
Term resolve(const std::vector<std::string>& ctx_names, const NamedTerm& t);

std::string print_type(const Type& a);
std::string print_nftp(const NfTp& n);
/// Binders get the first of x, x1, x2, ... not already in scope, so the
/// output always parses and resolves back to t.
std::string print_term(const std::vector<std::string>& ctx_names, const Term& t);
std::string print_nf(const std::vector<std::string>& ctx_names, const NfTm& n);

std::string_view describe(TokenKind kind);

}  // namespace nbek::surface
