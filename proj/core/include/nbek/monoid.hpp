/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "nbek/box.hpp"

namespace nbek::monoid {

// The free monoid on an alphabet, presented two ways: expressions modulo the
// unit and associativity laws, and lists, which need no quotient. Evaluation
// sends an expression to its list; retract_p goes back along right-nested
// expressions, and eval_expr(retract_p(m)) == m.

using Symbol = std::string;

struct MonExpr {
    struct Gen {
        Symbol symbol;
        friend bool operator==(const Gen&, const Gen&) = default;
    };
    struct Eps {
        friend bool operator==(const Eps&, const Eps&) = default;
    };
    struct Mu {
        Box<MonExpr> left;
        Box<MonExpr> right;
        friend bool operator==(const Mu&, const Mu&) = default;
    };

    std::variant<Gen, Eps, Mu> node;

    static MonExpr gen(Symbol a) { return MonExpr{Gen{std::move(a)}}; }
    static MonExpr eps() { return MonExpr{Eps{}}; }
    static MonExpr mu(MonExpr l, MonExpr r) { return MonExpr{Mu{std::move(l), std::move(r)}}; }

    friend bool operator==(const MonExpr&, const MonExpr&) = default;
};

using FreeList = std::vector<Symbol>;

/// The first n symbols of a, b, c, ..., z.
std::vector<Symbol> default_alphabet(std::size_t n = 3);

FreeList list_eta(const Symbol& a);
FreeList list_eps();
FreeList list_mu(const FreeList& m, const FreeList& n);

/// The unique monoid homomorphism extending list_eta.
FreeList eval_expr(const MonExpr& e);

/// [] |-> eps,  a :: m |-> mu(gen a, retract_p m).
MonExpr retract_p(const FreeList& m);

/// Decides equality in the free monoid.
bool expr_eq(const MonExpr& u, const MonExpr& v);

/// Node count: gen and eps are 1, mu is 1 + both sides.
std::size_t size(const MonExpr& e);

/// Brute-force closure of u under single uses of the left unit, right unit and
/// associativity laws, in both directions, at any position, keeping only
/// expressions of size <= bound. Independent of eval_expr; used as its oracle.
/// Result is deduplicated and sorted by printed form.
std::vector<MonExpr> rewrite_closure_oracle(const MonExpr& u, std::size_t bound);

/// Prefix form: (mu (gen a) eps).
std::string to_string(const MonExpr& e);
/// [a, b, c]
std::string to_string(const FreeList& m);

std::ostream& operator<<(std::ostream& os, const MonExpr& e);

}  // namespace nbek::monoid
