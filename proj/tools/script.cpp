/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "script.hpp"

#include <algorithm>
#include <chrono>

#include "nbek/nf_json.hpp"

namespace nbek::cli {

using nlohmann::json;

ScriptError::ScriptError(Kind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + (kind == Kind::Parse ? "parse error: " : "type error: ") +
                         detail),
      kind_(kind),
      line_(line),
      detail_(detail) {}

namespace {

std::string_view trim(std::string_view s) {
    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && ws(s.back())) s.remove_suffix(1);
    return s;
}

constexpr std::string_view kExpect = "--expect";

Directive parse_body(surface::Parser& p, const std::string& keyword) {
    using surface::TokenKind;
    if (keyword == "assume") {
        std::string name = p.ident();
        p.expect(TokenKind::Colon);
        Type a = p.type();
        p.expect_end();
        return Directive{Directive::Assume{std::move(name), std::move(a)}};
    }
    if (keyword == "norm") {
        surface::NamedTerm t = p.term();
        p.expect(TokenKind::Colon);
        Type a = p.type();
        p.expect_end();
        return Directive{Directive::Norm{std::move(t), std::move(a)}};
    }
    if (keyword == "conv") {
        surface::NamedTerm t = p.term();
        p.expect(TokenKind::Equals);
        surface::NamedTerm u = p.term();
        p.expect(TokenKind::Colon);
        Type a = p.type();
        p.expect_end();
        return Directive{Directive::Conv{std::move(t), std::move(u), std::move(a)}};
    }
    if (keyword == "injtp") {
        Type a = p.type();
        p.expect(TokenKind::Equals);
        Type b = p.type();
        p.expect_end();
        return Directive{Directive::InjTp{std::move(a), std::move(b)}};
    }
    if (keyword == "moneq") {
        monoid::MonExpr u = p.mon_expr();
        p.expect(TokenKind::Equals);
        monoid::MonExpr v = p.mon_expr();
        p.expect_end();
        return Directive{Directive::MonEq{std::move(u), std::move(v)}};
    }
    if (keyword == "monnorm") {
        monoid::MonExpr u = p.mon_expr();
        p.expect_end();
        return Directive{Directive::MonNorm{std::move(u)}};
    }
    throw surface::ParseError(surface::SourceSpan{0, keyword.size()}, "unknown directive '" + keyword + "'");
}

}  // namespace

std::optional<Directive> parse_directive(std::string_view line_text, std::size_t line_no) {
    std::string_view body = line_text.substr(0, line_text.find('#'));
    std::optional<std::string> expect;
    if (auto pos = body.find(kExpect); pos != std::string_view::npos) {
        std::string_view value = trim(body.substr(pos + kExpect.size()));
        if (value.empty()) throw ScriptError(ScriptError::Kind::Parse, line_no, "--expect needs a value");
        expect = std::string(value);
        body = body.substr(0, pos);
    }
    body = trim(body);
    if (body.empty()) {
        if (expect) throw ScriptError(ScriptError::Kind::Parse, line_no, "--expect without a directive");
        return std::nullopt;
    }
    try {
        surface::Parser p(body);
        std::string keyword = p.ident();
        Directive d = parse_body(p, keyword);
        d.line = line_no;
        d.text = std::string(body);
        d.expect = std::move(expect);
        return d;
    } catch (const surface::ParseError& e) {
        throw ScriptError(ScriptError::Kind::Parse, line_no, e.what());
    }
}

void parse_context(std::string_view src, Context& ctx, std::vector<std::string>& names) {
    surface::Parser p(src);
    if (p.at_end()) return;
    do {
        std::string name = p.ident();
        p.expect(surface::TokenKind::Colon);
        Type a = p.type();
        names.push_back(std::move(name));
        ctx = ctx.extended(std::move(a));
    } while (p.accept(surface::TokenKind::Comma));
    p.expect_end();
}

// ---------------------------------------------------------------------------

Outcome run_directive(const Directive& d, Context& ctx, std::vector<std::string>& names, bool monoid_only) {
    auto type_error = [&](const std::string& detail) { return ScriptError(ScriptError::Kind::Type, d.line, detail); };
    bool is_monoid = std::holds_alternative<Directive::MonEq>(d.node) || std::holds_alternative<Directive::MonNorm>(d.node);
    if (monoid_only && !is_monoid)
        throw ScriptError(ScriptError::Kind::Parse, d.line, "only moneq and monnorm are allowed in monoid scripts");

    try {
        return std::visit(
            overloaded{
                [&](const Directive::Assume& a) -> Outcome {
                    if (std::find(names.begin(), names.end(), a.name) != names.end())
                        throw type_error("'" + a.name + "' is already assumed");
                    names.push_back(a.name);
                    ctx = ctx.extended(a.type);
                    return Outcome{Outcome::Assumed{a.name, a.type}};
                },
                [&](const Directive::Norm& n) -> Outcome {
                    NfTm nf = normalize(ctx, n.type, surface::resolve(names, n.term));
                    std::string text = surface::print_nf(names, nf);
                    return Outcome{Outcome::Normalized{std::move(nf), std::move(text)}};
                },
                [&](const Directive::Conv& c) -> Outcome {
                    Term t = surface::resolve(names, c.lhs);
                    Term u = surface::resolve(names, c.rhs);
                    return Outcome{Outcome::Converted{conv(ctx, c.type, t, u)}};
                },
                [&](const Directive::InjTp& i) -> Outcome {
                    auto f = i.lhs.as_fun();
                    auto g = i.rhs.as_fun();
                    if (!f || !g) {
                        const Type& bad = f ? i.rhs : i.lhs;
                        throw type_error("injtp compares function types, got " + to_string(bad));
                    }
                    return Outcome{Outcome::Injectivity{fun_tp_injective(*f->dom, *f->cod, *g->dom, *g->cod)}};
                },
                [&](const Directive::MonEq& m) -> Outcome {
                    return Outcome{Outcome::MonoidEqual{monoid::expr_eq(m.lhs, m.rhs)}};
                },
                [&](const Directive::MonNorm& m) -> Outcome {
                    return Outcome{Outcome::MonoidNormal{monoid::eval_expr(m.expr)}};
                },
            },
            d.node);
    } catch (const TypeError& e) {
        throw type_error(e.what());
    } catch (const surface::UnknownIdentifier& e) {
        throw type_error(e.what());
    }
}

Report run_script(std::string_view text, const RunOptions& options) {
    Report report;
    Context ctx;
    std::vector<std::string> names;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        ReportEntry entry;
        entry.line = line_no;
        auto start = std::chrono::steady_clock::now();
        try {
            auto d = parse_directive(line, line_no);
            if (!d) continue;
            entry.directive = d->text;
            entry.expect = d->expect;
            entry.outcome = run_directive(*d, ctx, names, options.monoid_only);
        } catch (const ScriptError& e) {
            if (entry.directive.empty()) entry.directive = std::string(trim(line));
            entry.outcome = Outcome{Outcome::Failed{e.kind(), e.what()}};
        }
        auto stop = std::chrono::steady_clock::now();
        if (options.timing) entry.ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (entry.expect) entry.expect_ok = !entry.outcome.failed() && entry.outcome.text() == *entry.expect;

        bool failed = entry.outcome.failed();
        report.entries.push_back(std::move(entry));
        if (failed && !options.keep_going) break;
    }
    return report;
}

// ---------------------------------------------------------------------------

std::string Outcome::text() const {
    return std::visit(overloaded{
                          [](const Assumed& a) { return "assumed " + a.name + " : " + to_string(a.type); },
                          [](const Normalized& n) { return n.text; },
                          [](const Converted& c) { return std::string(c.equal ? "true" : "false"); },
                          [](const Injectivity& i) {
                              if (auto parts = i.verdict.components())
                                  return "equal [" + surface::print_nftp(parts->dom) + "] [" +
                                         surface::print_nftp(parts->cod) + "]";
                              return std::string("unequal");
                          },
                          [](const MonoidEqual& m) { return std::string(m.equal ? "true" : "false"); },
                          [](const MonoidNormal& m) { return monoid::to_string(m.list); },
                          [](const Failed& f) { return "error: " + f.message; },
                      },
                      node);
}

json Outcome::to_json() const {
    return std::visit(
        overloaded{
            [](const Assumed& a) { return json{{"kind", "assume"}, {"name", a.name}, {"type", to_string(a.type)}}; },
            [](const Normalized& n) { return json{{"kind", "norm"}, {"nf", n.nf}, {"text", n.text}}; },
            [](const Converted& c) { return json{{"kind", "conv"}, {"equal", c.equal}}; },
            [](const Injectivity& i) {
                if (auto parts = i.verdict.components())
                    return json{{"kind", "injtp"}, {"verdict", "equal"}, {"dom", parts->dom}, {"cod", parts->cod}};
                return json{{"kind", "injtp"}, {"verdict", "unequal"}};
            },
            [](const MonoidEqual& m) { return json{{"kind", "moneq"}, {"equal", m.equal}}; },
            [](const MonoidNormal& m) { return json{{"kind", "monnorm"}, {"list", m.list}}; },
            [](const Failed& f) {
                return json{{"kind", "error"},
                            {"error", f.kind == ScriptError::Kind::Parse ? "parse" : "type"},
                            {"message", f.message}};
            },
        },
        node);
}

std::size_t Report::errors() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.outcome.failed(); }));
}

std::size_t Report::expectation_failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return !e.expect_ok; }));
}

json Report::to_json() const {
    json out = json::array();
    for (const auto& e : entries) {
        json j{{"directive", e.directive}, {"line", e.line}, {"outcome", e.outcome.to_json()}, {"ms", e.ms}};
        if (e.expect) j["expect"] = json{{"value", *e.expect}, {"ok", e.expect_ok}};
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace nbek::cli
