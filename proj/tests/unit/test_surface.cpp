/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "nbek/nbe.hpp"
#include "nbek/surface.hpp"

using namespace nbek;
using namespace nbek::surface;

namespace {

const Type O = Type::o();
Type fun(Type a, Type b) { return Type::fun(std::move(a), std::move(b)); }
Term var(std::size_t i) { return Term::var(i); }
Term lam(Type a, Term b) { return Term::lam(std::move(a), std::move(b)); }
Term app(Term f, Term u) { return Term::app(std::move(f), std::move(u)); }

Term parse(const std::vector<std::string>& names, std::string_view src) { return resolve(names, parse_term(src)); }

SourceSpan parse_error_span(std::string_view src) {
    try {
        parse_term(src);
    } catch (const ParseError& e) {
        return e.span();
    }
    FAIL("expected ParseError for " << src);
    return {};
}

std::vector<std::string> names_for(const Context& ctx) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ctx.size(); ++i) names.push_back(i % 2 == 0 ? "f" + std::to_string(i) : "x");
    return names;
}

}  // namespace

TEST_CASE("parse_type") {
    CHECK(parse_type("O -> O -> O") == fun(O, fun(O, O)));
    CHECK(parse_type("(O -> O) -> O") == fun(fun(O, O), O));
    CHECK(parse_type("((O))") == O);
    CHECK_THROWS_AS(parse_type("O ->"), ParseError);
    CHECK_THROWS_AS(parse_type("O O"), ParseError);
    CHECK_THROWS_AS(parse_type("P"), ParseError);
}

TEST_CASE("parse_term and resolve") {
    CHECK(parse({}, "\\x:O. x") == lam(O, var(0)));
    CHECK(parse({"f"}, "f yes no") == app(app(var(0), Term::yes()), Term::no()));
    CHECK(parse({}, "\\f:O->O. \\x:O. f (f x)") == lam(fun(O, O), lam(O, app(var(1), app(var(1), var(0))))));
    // the lambda body extends as far right as possible
    CHECK(parse({"g"}, "\\x:O. g x yes") == lam(O, app(app(var(1), var(0)), Term::yes())));
    CHECK(parse({"g"}, "g (\\x:O. x) yes") == app(app(var(0), lam(O, var(0))), Term::yes()));
    // a lambda in argument position needs parentheses
    CHECK_THROWS_AS(parse({"g"}, "g \\x:O. x"), ParseError);
    // shadowing resolves to the innermost binder
    CHECK(parse({"x"}, "\\x:O. x") == lam(O, var(0)));
    CHECK(parse({"x", "y"}, "x") == var(1));
}

TEST_CASE("unknown identifiers carry their span") {
    try {
        parse({}, "\\x:O. y");
        FAIL("no error");
    } catch (const UnknownIdentifier& e) {
        CHECK(e.name() == "y");
        CHECK(e.span() == SourceSpan{6, 7});
    }
}

TEST_CASE("parse errors carry a span inside the input") {
    CHECK(parse_error_span("") == SourceSpan{0, 0});
    CHECK(parse_error_span("\\x O. x") == SourceSpan{3, 4});
    CHECK(parse_error_span("(yes") == SourceSpan{4, 4});
    CHECK(parse_error_span("yes )") == SourceSpan{4, 5});
    CHECK(parse_error_span("yes $") == SourceSpan{4, 5});
    CHECK(parse_error_span("\\yes:O. yes").start == 1);
}

TEST_CASE("parse_mon_expr") {
    using monoid::MonExpr;
    CHECK(parse_mon_expr("(mu (gen a) eps)") == MonExpr::mu(MonExpr::gen("a"), MonExpr::eps()));
    CHECK(parse_mon_expr("eps") == MonExpr::eps());
    CHECK_THROWS_AS(parse_mon_expr("(mu eps)"), ParseError);
    CHECK_THROWS_AS(parse_mon_expr("(gen)"), ParseError);
}

TEST_CASE("printing") {
    CHECK(print_term({}, lam(O, var(0))) == "\\x:O. x");
    CHECK(print_nf({}, nf_yes()) == "yes");
    CHECK(print_type(fun(fun(O, O), fun(O, O))) == "(O -> O) -> O -> O");
    CHECK(print_nftp(nf_fun(nf_o(), nf_o())) == "O -> O");
    CHECK(print_term({}, lam(O, lam(O, var(1)))) == "\\x:O. \\x1:O. x");
    CHECK(print_term({"x"}, lam(O, var(1))) == "\\x1:O. x");
    CHECK(print_term({"f"}, app(var(0), app(var(0), Term::yes()))) == "f (f yes)");
    CHECK(print_term({"f"}, app(app(var(0), Term::yes()), Term::no())) == "f yes no");
    CHECK(print_term({"g"}, app(app(var(0), lam(O, var(0))), Term::yes())) == "g (\\x:O. x) yes");
    CHECK(print_term({"g"}, app(var(0), lam(O, var(0)))) == "g (\\x:O. x)");
    CHECK(print_term({}, app(lam(O, var(0)), Term::yes())) == "(\\x:O. x) yes");
    NfTm eta = normalize({fun(O, O)}, fun(O, O), var(0));
    CHECK(print_nf({"f"}, eta) == "\\x:O. f x");
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("print/parse round trip on random terms") {
    testing::Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        Context ctx = testing::random_context(rng, 3, 3);
        Type a = testing::random_type(rng, 4);
        Term t = testing::random_term(rng, ctx, a, {30, 4});
        auto names = names_for(ctx);
        std::string text = print_term(names, t);
        CHECK_MESSAGE(parse(names, text) == t, text);
        CHECK(parse_type(print_type(a)) == a);
    }
}

TEST_CASE("normal forms print to terms that parse back to their erasure") {
    testing::Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        Context ctx = testing::random_context(rng, 3, 3);
        Type a = testing::random_type(rng, 4);
        NfTm n = testing::random_nf(rng, ctx, a, 10);
        auto names = names_for(ctx);
        CHECK(parse(names, print_nf(names, n)) == erase_nftm(ctx, n));
    }
}

TEST_CASE("parser is total and spans stay inside the input") {
    const std::vector<std::string> pieces{"\\", "x", "y", ":", ".", "(", ")", "->", "O", "yes", "no", " ", "=", ",", "$"};
    testing::Rng rng(7);
    for (int i = 0; i < 3000; ++i) {
        std::string src;
        std::size_t n = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
        for (std::size_t k = 0; k < n; ++k) src += pieces[std::uniform_int_distribution<std::size_t>(0, pieces.size() - 1)(rng)];
        try {
            parse_term(src);
        } catch (const ParseError& e) {
            CHECK(e.span().start <= e.span().end);
            CHECK(e.span().end <= src.size());
        }
        try {
            parse_type(src);
        } catch (const ParseError& e) {
            CHECK(e.span().start <= e.span().end);
            CHECK(e.span().end <= src.size());
        }
    }
}
