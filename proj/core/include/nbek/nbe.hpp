/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include "nbek/nf.hpp"
#include "nbek/syntax.hpp"

namespace nbek {

// Normalization by evaluation.
//
// A semantic type packages three things: the normal form of the type
// (sem_to_nftp), the values inhabiting it, and the reflect/reify pair that
// moves between neutrals, values, and normal forms.
//
//   at O:       values are the normal forms yes, no, nfNeO(e); reflect is
//               nfNeO and reify is the identity.
//   at A -> B:  values are closures; reflecting a neutral f gives the closure
//               x |-> reflect_B(neApp f (reify_A x)), and reifying g gives
//               nfLam(reify_B(g(hydrate_A(fresh)))).
//
// Normal forms name bound variables by absolute level, so reify_A x can only
// run once the depth at which the result lands is known. Neutral values
// therefore keep their arguments as values and read them back in reify.

struct SemType {
    struct O {
        friend bool operator==(const O&, const O&) = default;
    };
    struct Fun {
        Box<SemType> dom;
        Box<SemType> cod;
        friend bool operator==(const Fun&, const Fun&) = default;
    };

    std::variant<O, Fun> node;

    static SemType o() { return SemType{O{}}; }
    static SemType fun(SemType dom, SemType cod) { return SemType{Fun{std::move(dom), std::move(cod)}}; }

    const Fun* as_fun() const noexcept { return std::get_if<Fun>(&node); }

    friend bool operator==(const SemType&, const SemType&) = default;
};

SemType sem_of_type(const Type& a);
NfTp sem_to_nftp(const SemType& s);

struct Value;

/// A stuck application spine whose arguments are still values.
struct Neutral {
    struct Var {
        NfTp ty;
        Level level;
        friend bool operator==(const Var&, const Var&) = default;
    };
    struct App {
        SemType dom;
        SemType cod;
        Box<Neutral> head;
        Box<Value> arg;
        friend bool operator==(const App&, const App&) = default;
    };

    std::variant<Var, App> node;

    static Neutral var(NfTp ty, std::size_t level) { return Neutral{Var{std::move(ty), Level{level}}}; }

    friend bool operator==(const Neutral&, const Neutral&) = default;
};

/// Evaluation environment: a persistent list where position i holds the value
/// of Var i. Extension is O(1) and shares the tail.
class Env {
public:
    Env() = default;
    Env(std::initializer_list<Value> index0_first);

    std::size_t size() const noexcept { return size_; }
    /// Throws std::out_of_range for an index >= size().
    const Value& lookup(Index i) const;
    Env extended(Value v) const;
    /// Index 0 first.
    std::vector<Value> values() const;

    friend bool operator==(const Env& a, const Env& b);

private:
    struct Cell;
    std::shared_ptr<const Cell> head_;
    std::size_t size_ = 0;
};

struct Closure {
    /// The value of a lambda: its body waiting for one more environment entry.
    struct OfTerm {
        Env env;
        SemType annot;
        Term body;
        friend bool operator==(const OfTerm&, const OfTerm&) = default;
    };
    /// A neutral of arrow type behaving as a function.
    struct OfNeutral {
        SemType dom;
        SemType cod;
        Neutral head;
        friend bool operator==(const OfNeutral&, const OfNeutral&) = default;
    };

    std::variant<OfTerm, OfNeutral> node;

    friend bool operator==(const Closure&, const Closure&) = default;
};

struct Value {
    // Values at O mirror the normal forms at O.
    struct Yes {
        friend bool operator==(const Yes&, const Yes&) = default;
    };
    struct No {
        friend bool operator==(const No&, const No&) = default;
    };
    struct NeO {
        Neutral neutral;
        friend bool operator==(const NeO&, const NeO&) = default;
    };
    struct Fun {
        Closure closure;
        friend bool operator==(const Fun&, const Fun&) = default;
    };

    std::variant<Yes, No, NeO, Fun> node;

    static Value yes() { return Value{Yes{}}; }
    static Value no() { return Value{No{}}; }

    friend bool operator==(const Value&, const Value&) = default;
};

/// Raised when the kernel is driven outside its typing discipline, e.g.
/// applying a value at O. Unreachable from well-typed input.
class NotApplicable : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Value eval(const Env& env, const Term& t);
Value apply(const Value& f, const Value& u);
Value reflect(const SemType& a, Neutral e);

/// `depth` is the number of variables in scope, i.e. the next fresh level.
NfTm reify(std::size_t depth, const SemType& a, const Value& v);
NeTm reify_neutral(std::size_t depth, const Neutral& e);

/// reflect(a, neVar(sem_to_nftp a, level))
Value hydrate(const SemType& a, Level level);

/// env[i] = hydrate(ctx[i], level_of(i)).
Env initial_env(const Context& ctx);

/// Eta-long beta-normal form of t; throws TypeError unless ctx |- t : a.
NfTm normalize(const Context& ctx, const Type& a, const Term& t);
NfTp normalize_tp(const Type& a);

/// Decides beta-eta equality of two terms of type a; throws TypeError if
/// either does not have type a.
bool conv(const Context& ctx, const Type& a, const Term& t, const Term& u);

struct FunTpVerdict {
    struct EqualWithComponents {
        NfTp dom;
        NfTp cod;
        friend bool operator==(const EqualWithComponents&, const EqualWithComponents&) = default;
    };
    struct Unequal {
        friend bool operator==(const Unequal&, const Unequal&) = default;
    };

    std::variant<EqualWithComponents, Unequal> verdict;

    bool equal() const noexcept { return std::holds_alternative<EqualWithComponents>(verdict); }
    const EqualWithComponents* components() const noexcept { return std::get_if<EqualWithComponents>(&verdict); }

    friend bool operator==(const FunTpVerdict&, const FunTpVerdict&) = default;
};

/// Compares (a -> b) with (a2 -> b2) through their normal forms and, when they
/// agree, recovers the shared components by decomposing the nfFun.
FunTpVerdict fun_tp_injective(const Type& a, const Type& b, const Type& a2, const Type& b2);

}  // namespace nbek
