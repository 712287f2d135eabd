/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gen.hpp"
#include "nbek/monoid.hpp"

using namespace nbek::monoid;

namespace {

MonExpr g(const char* s) { return MonExpr::gen(s); }
const MonExpr eps = MonExpr::eps();
MonExpr mu(MonExpr l, MonExpr r) { return MonExpr::mu(std::move(l), std::move(r)); }

bool reachable(const MonExpr& u, const MonExpr& v, std::size_t bound) {
    auto closure = rewrite_closure_oracle(u, bound);
    return std::find(closure.begin(), closure.end(), v) != closure.end();
}

}  // namespace

TEST_CASE("list operations") {
    CHECK(list_mu({}, {"b"}) == FreeList{"b"});
    CHECK(list_mu({"a"}, {"b"}) == FreeList{"a", "b"});
    CHECK(list_eta("a") == FreeList{"a"});
    CHECK(list_eps().empty());
}

TEST_CASE("eval_expr") {
    CHECK(eval_expr(mu(eps, g("a"))) == FreeList{"a"});
    CHECK(eval_expr(mu(mu(g("a"), g("b")), g("c"))) == FreeList{"a", "b", "c"});
    CHECK(eval_expr(eps).empty());
}

TEST_CASE("retract_p") {
    CHECK(retract_p({}) == eps);
    CHECK(retract_p({"a"}) == mu(g("a"), eps));
    CHECK(retract_p({"a", "b"}) == mu(g("a"), mu(g("b"), eps)));
}

TEST_CASE("expr_eq") {
    CHECK(expr_eq(mu(g("a"), eps), g("a")));
    CHECK(expr_eq(mu(mu(g("a"), g("b")), g("c")), mu(g("a"), mu(g("b"), g("c")))));
    CHECK_FALSE(expr_eq(g("a"), g("b")));
    CHECK_FALSE(expr_eq(mu(g("a"), g("b")), mu(g("b"), g("a"))));
}

TEST_CASE("rewrite_closure_oracle") {
    CHECK(reachable(g("a"), mu(eps, g("a")), 5));
    CHECK(reachable(mu(eps, eps), eps, 4));
    CHECK_FALSE(reachable(g("a"), g("b"), 6));
    for (const auto& e : rewrite_closure_oracle(mu(g("a"), g("b")), 6)) CHECK(size(e) <= 6);
}

TEST_CASE("printing and defaults") {
    CHECK(to_string(mu(g("a"), eps)) == "(mu (gen a) eps)");
    CHECK(to_string(FreeList{"a", "b"}) == "[a, b]");
    CHECK(to_string(FreeList{}) == "[]");
    CHECK(default_alphabet() == std::vector<Symbol>{"a", "b", "c"});
    CHECK(size(mu(g("a"), eps)) == 3);
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("monoid laws on lists") {
    auto lists = nbek::testing::all_lists(default_alphabet(2), 4);
    for (const auto& l : lists) {
        CHECK(list_mu({}, l) == l);
        CHECK(list_mu(l, {}) == l);
        for (const auto& m : lists)
            for (const auto& n : lists) CHECK(list_mu(list_mu(l, m), n) == list_mu(l, list_mu(m, n)));
    }
}

TEST_CASE("retraction and cons injectivity") {
    auto alphabet = default_alphabet();
    auto lists = nbek::testing::all_lists(alphabet, 4);
    for (const auto& m : lists) CHECK(eval_expr(retract_p(m)) == m);
    for (const auto& a : alphabet)
        for (const auto& m : lists)
            for (const auto& b : alphabet)
                for (const auto& n : lists) {
                    bool same = list_mu(list_eta(a), m) == list_mu(list_eta(b), n);
                    CHECK(same == (a == b && m == n));
                }
}

TEST_CASE("eval_expr is a homomorphism") {
    auto exprs = nbek::testing::all_exprs(default_alphabet(2), 4);
    for (const auto& u : exprs)
        for (const auto& v : exprs) CHECK(eval_expr(mu(u, v)) == list_mu(eval_expr(u), eval_expr(v)));
}

TEST_CASE("expr_eq agrees with the rewrite oracle on small expressions") {
    auto exprs = nbek::testing::all_exprs(default_alphabet(2), 4);
    for (const auto& u : exprs)
        for (const auto& v : exprs) CHECK(expr_eq(u, v) == reachable(u, v, size(u) + size(v) + 4));
}
