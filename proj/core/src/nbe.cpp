/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "nbek/nbe.hpp"

namespace nbek {

SemType sem_of_type(const Type& a) {
    if (auto f = a.as_fun()) return SemType::fun(sem_of_type(*f->dom), sem_of_type(*f->cod));
    return SemType::o();
}

NfTp sem_to_nftp(const SemType& s) {
    if (auto f = s.as_fun()) return nf_fun(sem_to_nftp(*f->dom), sem_to_nftp(*f->cod));
    return nf_o();
}

// ---------------------------------------------------------------------------

struct Env::Cell {
    Value value;
    std::shared_ptr<const Cell> next;
};

Env::Env(std::initializer_list<Value> index0_first) {
    std::vector<Value> vs(index0_first);
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) *this = extended(std::move(*it));
}

const Value& Env::lookup(Index i) const {
    if (i.value >= size_) throw std::out_of_range("environment has no entry #" + std::to_string(i.value));
    const Cell* c = head_.get();
    for (std::size_t k = 0; k < i.value; ++k) c = c->next.get();
    return c->value;
}

Env Env::extended(Value v) const {
    Env e;
    e.head_ = std::make_shared<const Cell>(Cell{std::move(v), head_});
    e.size_ = size_ + 1;
    return e;
}

std::vector<Value> Env::values() const {
    std::vector<Value> out;
    out.reserve(size_);
    for (const Cell* c = head_.get(); c; c = c->next.get()) out.push_back(c->value);
    return out;
}

bool operator==(const Env& a, const Env& b) {
    if (a.size_ != b.size_) return false;
    const Env::Cell* x = a.head_.get();
    const Env::Cell* y = b.head_.get();
    for (; x && x != y; x = x->next.get(), y = y->next.get()) {
        if (!(x->value == y->value)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Value eval(const Env& env, const Term& t) {
    return std::visit(overloaded{
                          [&](const Term::Var& v) { return env.lookup(v.index); },
                          [&](const Term::Lam& l) {
                              return Value{Value::Fun{Closure{Closure::OfTerm{env, sem_of_type(l.annot), *l.body}}}};
                          },
                          [&](const Term::App& a) { return apply(eval(env, *a.fun), eval(env, *a.arg)); },
                          [](const Term::Yes&) { return Value::yes(); },
                          [](const Term::No&) { return Value::no(); },
                      },
                      t.node);
}

Value apply(const Value& f, const Value& u) {
    auto fun = std::get_if<Value::Fun>(&f.node);
    if (!fun) throw NotApplicable("apply: the function position does not hold a closure");
    return std::visit(overloaded{
                          [&](const Closure::OfTerm& c) { return eval(c.env.extended(u), c.body); },
                          [&](const Closure::OfNeutral& c) {
                              return reflect(c.cod, Neutral{Neutral::App{c.dom, c.cod, c.head, u}});
                          },
                      },
                      fun->closure.node);
}

Value reflect(const SemType& a, Neutral e) {
    if (auto f = a.as_fun()) return Value{Value::Fun{Closure{Closure::OfNeutral{*f->dom, *f->cod, std::move(e)}}}};
    return Value{Value::NeO{std::move(e)}};
}

NeTm reify_neutral(std::size_t depth, const Neutral& e) {
    return std::visit(overloaded{
                          [](const Neutral::Var& v) { return NeTm{NeTm::Var{v.ty, v.level}}; },
                          [&](const Neutral::App& a) {
                              return ne_app(sem_to_nftp(a.dom), sem_to_nftp(a.cod), reify_neutral(depth, *a.head),
                                            reify(depth, a.dom, *a.arg));
                          },
                      },
                      e.node);
}

NfTm reify(std::size_t depth, const SemType& a, const Value& v) {
    if (auto f = a.as_fun()) {
        Value x = hydrate(*f->dom, Level{depth});
        return nf_lam(sem_to_nftp(*f->dom), sem_to_nftp(*f->cod), reify(depth + 1, *f->cod, apply(v, x)));
    }
    return std::visit(overloaded{
                          [](const Value::Yes&) { return nf_yes(); },
                          [](const Value::No&) { return nf_no(); },
                          [&](const Value::NeO& n) { return nf_ne_o(reify_neutral(depth, n.neutral)); },
                          [](const Value::Fun&) -> NfTm { throw NotApplicable("reify: a closure does not inhabit O"); },
                      },
                      v.node);
}

Value hydrate(const SemType& a, Level level) { return reflect(a, Neutral{Neutral::Var{sem_to_nftp(a), level}}); }

Env initial_env(const Context& ctx) {
    Env env;
    auto entries = ctx.entries();
    for (std::size_t l = 0; l < entries.size(); ++l) env = env.extended(hydrate(sem_of_type(entries[l]), Level{l}));
    return env;
}

NfTm normalize(const Context& ctx, const Type& a, const Term& t) {
    check(ctx, t, a);
    return reify(ctx.size(), sem_of_type(a), eval(initial_env(ctx), t));
}

NfTp normalize_tp(const Type& a) {
    if (auto f = a.as_fun()) return nf_fun(normalize_tp(*f->dom), normalize_tp(*f->cod));
    return nf_o();
}

bool conv(const Context& ctx, const Type& a, const Term& t, const Term& u) {
    return normalize(ctx, a, t) == normalize(ctx, a, u);
}

FunTpVerdict fun_tp_injective(const Type& a, const Type& b, const Type& a2, const Type& b2) {
    NfTp n = normalize_tp(Type::fun(a, b));
    NfTp n2 = normalize_tp(Type::fun(a2, b2));
    if (!(n == n2)) return FunTpVerdict{FunTpVerdict::Unequal{}};
    auto parts = decompose_fun(n);
    return FunTpVerdict{FunTpVerdict::EqualWithComponents{std::move(parts->first), std::move(parts->second)}};
}

}  // namespace nbek
