/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <benchmark/benchmark.h>

#include "nbek/monoid.hpp"
#include "nbek/nbe.hpp"
#include "nbek/surface.hpp"

using namespace nbek;

namespace {

const Type O = Type::o();
const Type OO = Type::fun(O, O);
const Type Nat = Type::fun(OO, OO);

// \s:O -> O. \z:O. s (s (... z))
Term church(std::size_t n) {
    Term body = Term::var(0);
    for (std::size_t i = 0; i < n; ++i) body = Term::app(Term::var(1), body);
    return Term::lam(OO, Term::lam(O, body));
}

// \m. \n. \s. m (n s)
Term church_mult() {
    Term body = Term::app(Term::var(2), Term::app(Term::var(1), Term::var(0)));
    return Term::lam(Nat, Term::lam(Nat, Term::lam(OO, body)));
}

// The identity at a type of the given arrow depth, eta-expanded on normalization.
Type tower(std::size_t depth) {
    Type a = O;
    for (std::size_t i = 0; i < depth; ++i) a = Type::fun(a, O);
    return a;
}

void BM_NormalizeChurchProduct(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Term t = Term::app(Term::app(church_mult(), church(n)), church(n));
    for (auto _ : state) benchmark::DoNotOptimize(normalize({}, Nat, t));
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_NormalizeChurchProduct)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_ConvChurchProduct(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Term t = Term::app(Term::app(church_mult(), church(n)), church(n));
    Term u = church(n * n);
    for (auto _ : state) benchmark::DoNotOptimize(conv({}, Nat, t, u));
}
BENCHMARK(BM_ConvChurchProduct)->RangeMultiplier(2)->Range(2, 32);

void BM_EtaExpandVariable(benchmark::State& state) {
    Type a = Type::fun(tower(static_cast<std::size_t>(state.range(0))), O);
    Context ctx{a};
    for (auto _ : state) benchmark::DoNotOptimize(normalize(ctx, a, Term::var(0)));
}
BENCHMARK(BM_EtaExpandVariable)->DenseRange(1, 8);

void BM_FunTpInjective(benchmark::State& state) {
    Type a = tower(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fun_tp_injective(a, a, a, a));
}
BENCHMARK(BM_FunTpInjective)->RangeMultiplier(4)->Range(1, 64);

void BM_ParseAndResolve(benchmark::State& state) {
    const std::string src =
        "(\\m:(O -> O) -> O -> O. \\n:(O -> O) -> O -> O. \\s:O -> O. \\z:O. m s (n s z)) "
        "(\\s:O -> O. \\z:O. s z) (\\s:O -> O. \\z:O. s (s z))";
    for (auto _ : state) benchmark::DoNotOptimize(surface::resolve({}, surface::parse_term(src)));
}
BENCHMARK(BM_ParseAndResolve);

void BM_MonoidExprEq(benchmark::State& state) {
    using monoid::MonExpr;
    auto n = static_cast<std::size_t>(state.range(0));
    MonExpr left = MonExpr::eps();
    MonExpr right = MonExpr::eps();
    for (std::size_t i = 0; i < n; ++i) {
        MonExpr g = MonExpr::gen(i % 2 == 0 ? "a" : "b");
        left = MonExpr::mu(left, g);
        right = MonExpr::mu(g, right);
    }
    for (auto _ : state) benchmark::DoNotOptimize(monoid::expr_eq(left, right));
}
BENCHMARK(BM_MonoidExprEq)->RangeMultiplier(4)->Range(4, 1024);

}  // namespace

BENCHMARK_MAIN();
