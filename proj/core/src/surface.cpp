/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "nbek/surface.hpp"

#include <algorithm>
#include <cctype>

namespace nbek::surface {

ParseError::ParseError(SourceSpan span, const std::string& message)
    : std::runtime_error("parse error at " + std::to_string(span.start) + ".." + std::to_string(span.end) + ": " +
                         message),
      span_(span) {}

UnknownIdentifier::UnknownIdentifier(std::string name, SourceSpan span)
    : std::runtime_error("unknown identifier '" + name + "' at " + std::to_string(span.start) + ".." +
                         std::to_string(span.end)),
      name_(std::move(name)),
      span_(span) {}

std::string_view describe(TokenKind kind) {
    switch (kind) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::Yes: return "'yes'";
        case TokenKind::No: return "'no'";
        case TokenKind::O: return "'O'";
        case TokenKind::Backslash: return "'\\'";
        case TokenKind::Colon: return "':'";
        case TokenKind::Dot: return "'.'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Arrow: return "'->'";
        case TokenKind::Equals: return "'='";
        case TokenKind::Comma: return "','";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

// ---------------------------------------------------------------------------

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](TokenKind k, std::size_t len) {
        out.push_back(Token{k, src.substr(i, len), SourceSpan{i, i + len}});
        i += len;
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
            case '\\': push(TokenKind::Backslash, 1); continue;
            case ':': push(TokenKind::Colon, 1); continue;
            case '.': push(TokenKind::Dot, 1); continue;
            case '(': push(TokenKind::LParen, 1); continue;
            case ')': push(TokenKind::RParen, 1); continue;
            case '=': push(TokenKind::Equals, 1); continue;
            case ',': push(TokenKind::Comma, 1); continue;
            case '-':
                if (i + 1 < src.size() && src[i + 1] == '>') {
                    push(TokenKind::Arrow, 2);
                    continue;
                }
                throw ParseError(SourceSpan{i, i + 1}, "expected '->'");
            default: break;
        }
        if (!ident_start(c)) throw ParseError(SourceSpan{i, i + 1}, std::string("unexpected character '") + c + "'");
        std::size_t j = i + 1;
        while (j < src.size() && ident_char(src[j])) ++j;
        std::string_view word = src.substr(i, j - i);
        TokenKind k = word == "yes" ? TokenKind::Yes : word == "no" ? TokenKind::No : word == "O" ? TokenKind::O
                                                                                                 : TokenKind::Ident;
        push(k, j - i);
    }
    out.push_back(Token{TokenKind::End, src.substr(src.size()), SourceSpan{src.size(), src.size()}});
    return out;
}

}  // namespace

Parser::Parser(std::string_view src) : src_(src), tokens_(tokenize(src)) {}

void Parser::fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? std::string("end of input") : "'" + std::string(t.text) + "'";
    throw ParseError(t.span, "expected " + expected + ", found " + found);
}

bool Parser::accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    advance();
    return true;
}

void Parser::expect(TokenKind kind) {
    if (!accept(kind)) fail(std::string(describe(kind)));
}

void Parser::expect_end() {
    if (!at_end()) fail("end of input");
}

std::string Parser::ident() {
    if (peek().kind != TokenKind::Ident) fail("identifier");
    return std::string(advance().text);
}

Type Parser::type() {
    Type dom = atype();
    if (accept(TokenKind::Arrow)) return Type::fun(std::move(dom), type());
    return dom;
}

Type Parser::atype() {
    if (accept(TokenKind::O)) return Type::o();
    if (accept(TokenKind::LParen)) {
        Type a = type();
        expect(TokenKind::RParen);
        return a;
    }
    fail("a type");
}

bool Parser::at_atom_start() const noexcept {
    switch (peek().kind) {
        case TokenKind::Yes:
        case TokenKind::No:
        case TokenKind::Ident:
        case TokenKind::LParen: return true;
        default: return false;
    }
}

NamedTerm Parser::term() {
    std::size_t start = peek().span.start;
    if (accept(TokenKind::Backslash)) {
        std::string binder = ident();
        expect(TokenKind::Colon);
        Type annot = type();
        expect(TokenKind::Dot);
        NamedTerm body = term();
        SourceSpan span{start, body.span.end};
        return NamedTerm{NamedTerm::Lam{std::move(binder), std::move(annot), std::move(body)}, span};
    }
    if (!at_atom_start()) fail("a term");
    NamedTerm head = atom();
    while (at_atom_start()) {
        NamedTerm arg = atom();
        SourceSpan span{start, arg.span.end};
        head = NamedTerm{NamedTerm::App{std::move(head), std::move(arg)}, span};
    }
    return head;
}

NamedTerm Parser::atom() {
    const Token& t = peek();
    SourceSpan span = t.span;
    switch (t.kind) {
        case TokenKind::Yes: advance(); return NamedTerm{NamedTerm::Yes{}, span};
        case TokenKind::No: advance(); return NamedTerm{NamedTerm::No{}, span};
        case TokenKind::Ident: advance(); return NamedTerm{NamedTerm::Var{std::string(t.text)}, span};
        case TokenKind::LParen: {
            advance();
            NamedTerm inner = term();
            std::size_t end = peek().span.end;
            expect(TokenKind::RParen);
            inner.span = SourceSpan{span.start, end};
            return inner;
        }
        default: fail("a term");
    }
}

monoid::MonExpr Parser::mon_expr() {
    if (peek().kind == TokenKind::Ident && peek().text == "eps") {
        advance();
        return monoid::MonExpr::eps();
    }
    if (!accept(TokenKind::LParen)) fail("'eps' or '('");
    if (peek().kind == TokenKind::Ident && peek().text == "gen") {
        advance();
        std::string a = ident();
        expect(TokenKind::RParen);
        return monoid::MonExpr::gen(std::move(a));
    }
    if (peek().kind == TokenKind::Ident && peek().text == "mu") {
        advance();
        monoid::MonExpr l = mon_expr();
        monoid::MonExpr r = mon_expr();
        expect(TokenKind::RParen);
        return monoid::MonExpr::mu(std::move(l), std::move(r));
    }
    fail("'gen' or 'mu'");
}

Type parse_type(std::string_view src) {
    Parser p(src);
    Type a = p.type();
    p.expect_end();
    return a;
}

NamedTerm parse_term(std::string_view src) {
    Parser p(src);
    NamedTerm t = p.term();
    p.expect_end();
    return t;
}

monoid::MonExpr parse_mon_expr(std::string_view src) {
    Parser p(src);
    monoid::MonExpr e = p.mon_expr();
    p.expect_end();
    return e;
}

// ---------------------------------------------------------------------------

namespace {

Term resolve_in(std::vector<std::string>& scope, const NamedTerm& t) {
    return std::visit(overloaded{
                          [&](const NamedTerm::Var& v) {
                              auto it = std::find(scope.rbegin(), scope.rend(), v.name);
                              if (it == scope.rend()) throw UnknownIdentifier(v.name, t.span);
                              return Term::var(static_cast<std::size_t>(it - scope.rbegin()));
                          },
                          [&](const NamedTerm::Lam& l) {
                              scope.push_back(l.binder);
                              Term body = resolve_in(scope, *l.body);
                              scope.pop_back();
                              return Term::lam(l.annot, std::move(body));
                          },
                          [&](const NamedTerm::App& a) {
                              Term f = resolve_in(scope, *a.fun);
                              return Term::app(std::move(f), resolve_in(scope, *a.arg));
                          },
                          [](const NamedTerm::Yes&) { return Term::yes(); },
                          [](const NamedTerm::No&) { return Term::no(); },
                      },
                      t.node);
}

std::string fresh_name(const std::vector<std::string>& scope) {
    auto taken = [&](const std::string& s) { return std::find(scope.begin(), scope.end(), s) != scope.end(); };
    if (!taken("x")) return "x";
    for (std::size_t k = 1;; ++k) {
        std::string candidate = "x" + std::to_string(k);
        if (!taken(candidate)) return candidate;
    }
}

// prec: 0 = anything, 1 = application head, 2 = argument (atoms only)
void print_in(std::string& out, std::vector<std::string>& scope, const Term& t, int prec) {
    std::visit(overloaded{
                   [&](const Term::Var& v) {
                       if (v.index.value >= scope.size())
                           throw std::out_of_range("print_term: unbound index " + std::to_string(v.index.value));
                       out += scope[scope.size() - 1 - v.index.value];
                   },
                   [&](const Term::Lam& l) {
                       if (prec > 0) out += '(';
                       std::string x = fresh_name(scope);
                       out += '\\';
                       out += x;
                       out += ':';
                       out += print_type(l.annot);
                       out += ". ";
                       scope.push_back(std::move(x));
                       print_in(out, scope, *l.body, 0);
                       scope.pop_back();
                       if (prec > 0) out += ')';
                   },
                   [&](const Term::App& a) {
                       if (prec > 1) out += '(';
                       print_in(out, scope, *a.fun, 1);
                       out += ' ';
                       print_in(out, scope, *a.arg, 2);
                       if (prec > 1) out += ')';
                   },
                   [&](const Term::Yes&) { out += "yes"; },
                   [&](const Term::No&) { out += "no"; },
               },
               t.node);
}

}  // namespace

Term resolve(const std::vector<std::string>& ctx_names, const NamedTerm& t) {
    std::vector<std::string> scope = ctx_names;
    return resolve_in(scope, t);
}

std::string print_type(const Type& a) { return to_string(a); }

std::string print_nftp(const NfTp& n) { return to_string(erase_nftp(n)); }

std::string print_term(const std::vector<std::string>& ctx_names, const Term& t) {
    std::vector<std::string> scope = ctx_names;
    std::string out;
    print_in(out, scope, t, 0);
    return out;
}

std::string print_nf(const std::vector<std::string>& ctx_names, const NfTm& n) {
    return print_term(ctx_names, erase_nftm(ctx_names.size(), n));
}

}  // namespace nbek::surface
