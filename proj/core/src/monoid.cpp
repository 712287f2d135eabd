/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "nbek/monoid.hpp"

#include <deque>
#include <map>
#include <ostream>
#include <stdexcept>

namespace nbek::monoid {

std::vector<Symbol> default_alphabet(std::size_t n) {
    if (n > 26) throw std::invalid_argument("default_alphabet: at most 26 symbols");
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
}

FreeList list_eta(const Symbol& a) { return FreeList{a}; }

FreeList list_eps() { return {}; }

FreeList list_mu(const FreeList& m, const FreeList& n) {
    FreeList out;
    out.reserve(m.size() + n.size());
    out.insert(out.end(), m.begin(), m.end());
    out.insert(out.end(), n.begin(), n.end());
    return out;
}

FreeList eval_expr(const MonExpr& e) {
    return std::visit(overloaded{
                          [](const MonExpr::Gen& g) { return list_eta(g.symbol); },
                          [](const MonExpr::Eps&) { return list_eps(); },
                          [](const MonExpr::Mu& m) { return list_mu(eval_expr(*m.left), eval_expr(*m.right)); },
                      },
                      e.node);
}

MonExpr retract_p(const FreeList& m) {
    MonExpr acc = MonExpr::eps();
    for (auto it = m.rbegin(); it != m.rend(); ++it) acc = MonExpr::mu(MonExpr::gen(*it), std::move(acc));
    return acc;
}

bool expr_eq(const MonExpr& u, const MonExpr& v) { return eval_expr(u) == eval_expr(v); }

std::size_t size(const MonExpr& e) {
    if (auto m = std::get_if<MonExpr::Mu>(&e.node)) return 1 + size(*m->left) + size(*m->right);
    return 1;
}

// ---------------------------------------------------------------------------

namespace {

bool is_eps(const MonExpr& e) { return std::holds_alternative<MonExpr::Eps>(e.node); }

void one_step(const MonExpr& e, std::vector<MonExpr>& out) {
    out.push_back(MonExpr::mu(MonExpr::eps(), e));
    out.push_back(MonExpr::mu(e, MonExpr::eps()));

    auto m = std::get_if<MonExpr::Mu>(&e.node);
    if (!m) return;
    const MonExpr& l = *m->left;
    const MonExpr& r = *m->right;
    if (is_eps(l)) out.push_back(r);
    if (is_eps(r)) out.push_back(l);
    if (auto ll = std::get_if<MonExpr::Mu>(&l.node)) out.push_back(MonExpr::mu(*ll->left, MonExpr::mu(*ll->right, r)));
    if (auto rr = std::get_if<MonExpr::Mu>(&r.node)) out.push_back(MonExpr::mu(MonExpr::mu(l, *rr->left), *rr->right));

    std::vector<MonExpr> inner;
    one_step(l, inner);
    for (auto& x : inner) out.push_back(MonExpr::mu(std::move(x), r));
    inner.clear();
    one_step(r, inner);
    for (auto& x : inner) out.push_back(MonExpr::mu(l, std::move(x)));
}

}  // namespace

std::vector<MonExpr> rewrite_closure_oracle(const MonExpr& u, std::size_t bound) {
    std::map<std::string, MonExpr> seen;
    std::deque<MonExpr> frontier;
    if (size(u) <= bound) {
        seen.emplace(to_string(u), u);
        frontier.push_back(u);
    }
    std::vector<MonExpr> next;
    while (!frontier.empty()) {
        MonExpr e = std::move(frontier.front());
        frontier.pop_front();
        next.clear();
        one_step(e, next);
        for (auto& x : next) {
            if (size(x) > bound) continue;
            auto [it, inserted] = seen.emplace(to_string(x), x);
            if (inserted) frontier.push_back(it->second);
        }
    }
    std::vector<MonExpr> out;
    out.reserve(seen.size());
    for (auto& [key, e] : seen) out.push_back(std::move(e));
    return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const MonExpr& e) {
    std::string out;
    std::visit(overloaded{
                   [&](const MonExpr::Gen& g) { out = "(gen " + g.symbol + ")"; },
                   [&](const MonExpr::Eps&) { out = "eps"; },
                   [&](const MonExpr::Mu& m) { out = "(mu " + to_string(*m.left) + " " + to_string(*m.right) + ")"; },
               },
               e.node);
    return out;
}

std::ostream& operator<<(std::ostream& os, const MonExpr& e) { return os << to_string(e); }

std::string to_string(const FreeList& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ", ";
        out += m[i];
    }
    return out + "]";
}

}  // namespace nbek::monoid
