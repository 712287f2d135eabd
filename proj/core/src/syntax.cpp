/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "nbek/syntax.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace nbek {

std::size_t depth(const Type& a) {
    if (auto f = a.as_fun()) return 1 + std::max(depth(*f->dom), depth(*f->cod));
    return 1;
}

std::size_t size(const Term& t) {
    return std::visit(overloaded{
                          [](const Term::Lam& l) { return 1 + size(*l.body); },
                          [](const Term::App& a) { return 1 + size(*a.fun) + size(*a.arg); },
                          [](const auto&) -> std::size_t { return 1; },
                      },
                      t.node);
}

// ---------------------------------------------------------------------------

TypeError TypeError::unbound_variable(Index i) {
    TypeError e(Kind::UnboundVariable, "unbound variable #" + std::to_string(i.value));
    e.index_ = i;
    return e;
}

TypeError TypeError::not_a_function(const Type& got) {
    TypeError e(Kind::NotAFunction, "cannot apply a term of type " + to_string(got));
    e.got_ = got;
    return e;
}

TypeError TypeError::argument_mismatch(const Type& expected, const Type& got) {
    TypeError e(Kind::ArgumentMismatch,
                "argument has type " + to_string(got) + " but the function expects " + to_string(expected));
    e.expected_ = expected;
    e.got_ = got;
    return e;
}

TypeError TypeError::type_mismatch(const Type& expected, const Type& inferred) {
    TypeError e(Kind::TypeMismatch, "expected type " + to_string(expected) + " but got " + to_string(inferred));
    e.expected_ = expected;
    e.got_ = inferred;
    return e;
}

Type infer(const Context& ctx, const Term& t) {
    return std::visit(overloaded{
                          [&](const Term::Var& v) -> Type {
                              if (auto a = ctx.lookup(v.index)) return *a;
                              throw TypeError::unbound_variable(v.index);
                          },
                          [&](const Term::Lam& l) -> Type {
                              return Type::fun(l.annot, infer(ctx.extended(l.annot), *l.body));
                          },
                          [&](const Term::App& a) -> Type {
                              Type f = infer(ctx, *a.fun);
                              auto fun = f.as_fun();
                              if (!fun) throw TypeError::not_a_function(f);
                              Type u = infer(ctx, *a.arg);
                              if (!(u == *fun->dom)) throw TypeError::argument_mismatch(*fun->dom, u);
                              return *fun->cod;
                          },
                          [](const Term::Yes&) { return Type::o(); },
                          [](const Term::No&) { return Type::o(); },
                      },
                      t.node);
}

void check(const Context& ctx, const Term& t, const Type& a) {
    Type got = infer(ctx, t);
    if (!(got == a)) throw TypeError::type_mismatch(a, got);
}

// ---------------------------------------------------------------------------

Term shift(const Term& t, std::ptrdiff_t d, std::size_t cutoff) {
    return std::visit(overloaded{
                          [&](const Term::Var& v) {
                              if (v.index.value < cutoff) return t;
                              return Term::var(static_cast<std::size_t>(static_cast<std::ptrdiff_t>(v.index.value) + d));
                          },
                          [&](const Term::Lam& l) { return Term::lam(l.annot, shift(*l.body, d, cutoff + 1)); },
                          [&](const Term::App& a) { return Term::app(shift(*a.fun, d, cutoff), shift(*a.arg, d, cutoff)); },
                          [&](const auto&) { return t; },
                      },
                      t.node);
}

Term subst(const Term& t, Index j, const Term& s) {
    return std::visit(overloaded{
                          [&](const Term::Var& v) { return v.index == j ? s : t; },
                          [&](const Term::Lam& l) {
                              return Term::lam(l.annot, subst(*l.body, Index{j.value + 1}, shift(s, 1)));
                          },
                          [&](const Term::App& a) { return Term::app(subst(*a.fun, j, s), subst(*a.arg, j, s)); },
                          [&](const auto&) { return t; },
                      },
                      t.node);
}

Term instantiate(const Term& body, const Term& arg) {
    return shift(subst(body, Index{0}, shift(arg, 1)), -1);
}

namespace {

void push_unique(std::vector<Term>& out, Term t) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
}

void collect_reducts(const Term& t, std::vector<Term>& out) {
    std::visit(overloaded{
                   [&](const Term::Lam& l) {
                       std::vector<Term> inner;
                       collect_reducts(*l.body, inner);
                       for (auto& b : inner) push_unique(out, Term::lam(l.annot, std::move(b)));
                   },
                   [&](const Term::App& a) {
                       if (auto lam = std::get_if<Term::Lam>(&a.fun->node)) push_unique(out, instantiate(*lam->body, *a.arg));
                       std::vector<Term> inner;
                       collect_reducts(*a.fun, inner);
                       for (auto& f : inner) push_unique(out, Term::app(std::move(f), *a.arg));
                       inner.clear();
                       collect_reducts(*a.arg, inner);
                       for (auto& u : inner) push_unique(out, Term::app(*a.fun, std::move(u)));
                   },
                   [](const auto&) {},
               },
               t.node);
}

void print_type(std::ostream& os, const Type& a, bool parens) {
    if (auto f = a.as_fun()) {
        if (parens) os << '(';
        print_type(os, *f->dom, true);
        os << " -> ";
        print_type(os, *f->cod, false);
        if (parens) os << ')';
    } else {
        os << 'O';
    }
}

// prec: 0 = lambda allowed, 1 = application head, 2 = atom
void print_term(std::ostream& os, const Term& t, int prec) {
    std::visit(overloaded{
                   [&](const Term::Var& v) { os << '#' << v.index.value; },
                   [&](const Term::Lam& l) {
                       if (prec > 0) os << '(';
                       os << "\\:";
                       print_type(os, l.annot, false);
                       os << ". ";
                       print_term(os, *l.body, 0);
                       if (prec > 0) os << ')';
                   },
                   [&](const Term::App& a) {
                       if (prec > 1) os << '(';
                       print_term(os, *a.fun, 1);
                       os << ' ';
                       print_term(os, *a.arg, 2);
                       if (prec > 1) os << ')';
                   },
                   [&](const Term::Yes&) { os << "yes"; },
                   [&](const Term::No&) { os << "no"; },
               },
               t.node);
}

}  // namespace

std::vector<Term> step_beta(const Term& t) {
    std::vector<Term> out;
    collect_reducts(t, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Type& a) {
    print_type(os, a, false);
    return os;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
    print_term(os, t, 0);
    return os;
}

std::string to_string(const Type& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

std::string to_string(const Term& t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

}  // namespace nbek
