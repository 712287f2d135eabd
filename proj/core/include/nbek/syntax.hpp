/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nbek/box.hpp"

namespace nbek {

/// Distance from a variable occurrence to its binder (0 = innermost).
struct Index {
    std::size_t value = 0;
    friend auto operator<=>(const Index&, const Index&) = default;
};

/// Distance from the root of the context (0 = outermost binding).
struct Level {
    std::size_t value = 0;
    friend auto operator<=>(const Level&, const Level&) = default;
};

inline Level level_of(std::size_t ctx_len, Index i) { return Level{ctx_len - 1 - i.value}; }
inline Index index_of(std::size_t ctx_len, Level l) { return Index{ctx_len - 1 - l.value}; }

// ---------------------------------------------------------------------------
// Types: O | A -> B

struct Type {
    struct O {
        friend bool operator==(const O&, const O&) = default;
    };
    struct Fun {
        Box<Type> dom;
        Box<Type> cod;
        friend bool operator==(const Fun&, const Fun&) = default;
    };

    std::variant<O, Fun> node;

    static Type o() { return Type{O{}}; }
    static Type fun(Type dom, Type cod) { return Type{Fun{std::move(dom), std::move(cod)}}; }

    bool is_o() const noexcept { return std::holds_alternative<O>(node); }
    const Fun* as_fun() const noexcept { return std::get_if<Fun>(&node); }

    friend bool operator==(const Type&, const Type&) = default;
};

/// O counts as depth 1.
std::size_t depth(const Type& a);

// ---------------------------------------------------------------------------
// Terms with de Bruijn indices and annotated binders.

struct Term {
    struct Var {
        Index index;
        friend bool operator==(const Var&, const Var&) = default;
    };
    struct Lam {
        Type annot;
        Box<Term> body;
        friend bool operator==(const Lam&, const Lam&) = default;
    };
    struct App {
        Box<Term> fun;
        Box<Term> arg;
        friend bool operator==(const App&, const App&) = default;
    };
    struct Yes {
        friend bool operator==(const Yes&, const Yes&) = default;
    };
    struct No {
        friend bool operator==(const No&, const No&) = default;
    };

    std::variant<Var, Lam, App, Yes, No> node;

    static Term var(std::size_t i) { return Term{Var{Index{i}}}; }
    static Term lam(Type annot, Term body) { return Term{Lam{std::move(annot), std::move(body)}}; }
    static Term app(Term f, Term u) { return Term{App{std::move(f), std::move(u)}}; }
    static Term yes() { return Term{Yes{}}; }
    static Term no() { return Term{No{}}; }

    friend bool operator==(const Term&, const Term&) = default;
};

/// Number of constructor nodes; binder annotations are not counted.
std::size_t size(const Term& t);

// ---------------------------------------------------------------------------
// Contexts. Entries are stored in binding order, so entries()[l] is the type
// of the variable at level l and the last entry is index 0.

class Context {
public:
    Context() = default;
    Context(std::initializer_list<Type> outermost_first) : entries_(outermost_first) {}
    explicit Context(std::vector<Type> outermost_first) : entries_(std::move(outermost_first)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    const Type* lookup(Index i) const noexcept {
        return i.value < entries_.size() ? &entries_[entries_.size() - 1 - i.value] : nullptr;
    }
    const Type* at_level(Level l) const noexcept {
        return l.value < entries_.size() ? &entries_[l.value] : nullptr;
    }

    Context extended(Type a) const {
        Context c = *this;
        c.entries_.push_back(std::move(a));
        return c;
    }

    std::span<const Type> entries() const noexcept { return entries_; }

    friend bool operator==(const Context&, const Context&) = default;

private:
    std::vector<Type> entries_;
};

// ---------------------------------------------------------------------------
// Typing

class TypeError : public std::runtime_error {
public:
    enum class Kind { UnboundVariable, NotAFunction, ArgumentMismatch, TypeMismatch };

    static TypeError unbound_variable(Index i);
    static TypeError not_a_function(const Type& got);
    static TypeError argument_mismatch(const Type& expected, const Type& got);
    static TypeError type_mismatch(const Type& expected, const Type& inferred);

    Kind kind() const noexcept { return kind_; }
    /// Offending index for UnboundVariable.
    std::optional<Index> index() const noexcept { return index_; }
    /// Expected type for ArgumentMismatch / TypeMismatch.
    const std::optional<Type>& expected() const noexcept { return expected_; }
    /// The type actually found (absent for UnboundVariable).
    const std::optional<Type>& got() const noexcept { return got_; }

private:
    TypeError(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}

    Kind kind_;
    std::optional<Index> index_;
    std::optional<Type> expected_;
    std::optional<Type> got_;
};

/// Synthesizes the unique type of `t` under `ctx`; throws TypeError.
Type infer(const Context& ctx, const Term& t);

/// Succeeds iff infer(ctx, t) == a; throws TypeError otherwise.
void check(const Context& ctx, const Term& t, const Type& a);

// ---------------------------------------------------------------------------
// Substitution and the beta-reduction oracle. The normalizer never uses these.

/// Adds `d` to every index >= cutoff.
Term shift(const Term& t, std::ptrdiff_t d, std::size_t cutoff = 0);

/// [j := s] t. Indices other than j are left alone; s is shifted under binders.
Term subst(const Term& t, Index j, const Term& s);

/// The contractum of App(Lam(A, body), arg): substitutes arg for index 0 and
/// lowers the remaining free indices of body by one.
Term instantiate(const Term& body, const Term& arg);

/// Every term reachable by contracting exactly one beta-redex, in pre-order of
/// redex position with duplicates removed. Empty iff t is beta-normal.
std::vector<Term> step_beta(const Term& t);

std::string to_string(const Type& a);
/// Debug rendering with raw indices, e.g. "(\:O. #0) yes".
std::string to_string(const Term& t);

std::ostream& operator<<(std::ostream& os, const Type& a);
std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace nbek
