/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "nbek/nf.hpp"

#include <ostream>
#include <sstream>

namespace nbek {

std::size_t size(const NeTm& e) {
    return std::visit(overloaded{
                          [](const NeTm::Var&) -> std::size_t { return 1; },
                          [](const NeTm::App& a) { return 1 + size(*a.fun) + size(*a.arg); },
                      },
                      e.node);
}

std::size_t size(const NfTm& n) {
    return std::visit(overloaded{
                          [](const NfTm::NeO& x) { return 1 + size(x.neutral); },
                          [](const NfTm::Lam& l) { return 1 + size(*l.body); },
                          [](const auto&) -> std::size_t { return 1; },
                      },
                      n.node);
}

// ---------------------------------------------------------------------------

LevelOutOfRange::LevelOutOfRange(Level level, std::size_t ctx_len)
    : std::out_of_range("level " + std::to_string(level.value) + " is out of range for a context of length " +
                        std::to_string(ctx_len)),
      level_(level) {}

Type erase_nftp(const NfTp& n) {
    if (auto f = std::get_if<NfTp::Fun>(&n.node)) return Type::fun(erase_nftp(*f->dom), erase_nftp(*f->cod));
    return Type::o();
}

Term erase_netm(std::size_t depth, const NeTm& e) {
    return std::visit(overloaded{
                          [&](const NeTm::Var& v) {
                              if (v.level.value >= depth) throw LevelOutOfRange(v.level, depth);
                              return Term{Term::Var{index_of(depth, v.level)}};
                          },
                          [&](const NeTm::App& a) {
                              return Term::app(erase_netm(depth, *a.fun), erase_nftm(depth, *a.arg));
                          },
                      },
                      e.node);
}

Term erase_nftm(std::size_t depth, const NfTm& n) {
    return std::visit(overloaded{
                          [&](const NfTm::NeO& x) { return erase_netm(depth, x.neutral); },
                          [](const NfTm::Yes&) { return Term::yes(); },
                          [](const NfTm::No&) { return Term::no(); },
                          [&](const NfTm::Lam& l) { return Term::lam(erase_nftp(l.dom), erase_nftm(depth + 1, *l.body)); },
                      },
                      n.node);
}

Term erase_nftm(const Context& ctx, const NfTm& n) { return erase_nftm(ctx.size(), n); }
Term erase_netm(const Context& ctx, const NeTm& e) { return erase_netm(ctx.size(), e); }

std::optional<std::pair<NfTp, NfTp>> decompose_fun(const NfTp& n) {
    if (auto f = std::get_if<NfTp::Fun>(&n.node)) return std::pair{*f->dom, *f->cod};
    return std::nullopt;
}

// ---------------------------------------------------------------------------

IllFormedNormal::IllFormedNormal(std::string path, std::string reason)
    : std::runtime_error("ill-formed normal form at " + (path.empty() ? std::string("<root>") : path) + ": " + reason),
      path_(std::move(path)),
      reason_(std::move(reason)) {}

namespace {

std::string join(const std::string& path, const char* segment) {
    return path.empty() ? std::string(segment) : path + "/" + segment;
}

Type check_ne(const Context& ctx, const NeTm& e, const std::string& path);

void check_nf(const Context& ctx, const Type& ty, const NfTm& n, const std::string& path) {
    if (auto arrow = ty.as_fun()) {
        auto lam = std::get_if<NfTm::Lam>(&n.node);
        if (!lam) throw IllFormedNormal(path, "a normal form of type " + to_string(ty) + " must be nfLam (eta-long)");
        if (!(erase_nftp(lam->dom) == *arrow->dom))
            throw IllFormedNormal(path, "nfLam domain " + to_string(lam->dom) + " disagrees with " + to_string(ty));
        if (!(erase_nftp(lam->cod) == *arrow->cod))
            throw IllFormedNormal(path, "nfLam codomain " + to_string(lam->cod) + " disagrees with " + to_string(ty));
        check_nf(ctx.extended(*arrow->dom), *arrow->cod, *lam->body, join(path, "nfLam.body"));
        return;
    }
    std::visit(overloaded{
                   [&](const NfTm::NeO& x) {
                       Type got = check_ne(ctx, x.neutral, join(path, "nfNeO.neutral"));
                       if (!got.is_o()) throw IllFormedNormal(path, "nfNeO wraps a neutral of type " + to_string(got));
                   },
                   [](const NfTm::Yes&) {},
                   [](const NfTm::No&) {},
                   [&](const NfTm::Lam&) { throw IllFormedNormal(path, "nfLam cannot have type O"); },
               },
               n.node);
}

Type check_ne(const Context& ctx, const NeTm& e, const std::string& path) {
    return std::visit(overloaded{
                          [&](const NeTm::Var& v) -> Type {
                              auto bound = ctx.at_level(v.level);
                              if (!bound)
                                  throw IllFormedNormal(path, "unbound level " + std::to_string(v.level.value) +
                                                                  " in a context of length " + std::to_string(ctx.size()));
                              Type annot = erase_nftp(v.ty);
                              if (!(annot == *bound))
                                  throw IllFormedNormal(path, "neVar annotated " + to_string(annot) + " but level " +
                                                                  std::to_string(v.level.value) + " has type " +
                                                                  to_string(*bound));
                              return annot;
                          },
                          [&](const NeTm::App& a) -> Type {
                              Type head = check_ne(ctx, *a.fun, join(path, "neApp.fun"));
                              Type dom = erase_nftp(a.dom);
                              Type cod = erase_nftp(a.cod);
                              if (!(head == Type::fun(dom, cod)))
                                  throw IllFormedNormal(path, "neApp head has type " + to_string(head) + ", annotated " +
                                                                  to_string(Type::fun(dom, cod)));
                              check_nf(ctx, dom, *a.arg, join(path, "neApp.arg"));
                              return cod;
                          },
                      },
                      e.node);
}

void print_nftp(std::ostream& os, const NfTp& n) {
    if (auto f = std::get_if<NfTp::Fun>(&n.node)) {
        os << "nfFun(" << *f->dom << ", " << *f->cod << ")";
    } else {
        os << "nfO";
    }
}

}  // namespace

void validate_nf(const Context& ctx, const Type& ty, const NfTm& n) { check_nf(ctx, ty, n, ""); }

Type validate_ne(const Context& ctx, const NeTm& e) { return check_ne(ctx, e, ""); }

std::string to_string(const NfTp& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const NfTp& n) {
    print_nftp(os, n);
    return os;
}

std::ostream& operator<<(std::ostream& os, const NeTm& e) {
    std::visit(overloaded{
                   [&](const NeTm::Var& v) { os << "neVar(" << v.ty << ", " << v.level.value << ")"; },
                   [&](const NeTm::App& a) {
                       os << "neApp(" << a.dom << ", " << a.cod << ", " << *a.fun << ", " << *a.arg << ")";
                   },
               },
               e.node);
    return os;
}

std::ostream& operator<<(std::ostream& os, const NfTm& n) {
    std::visit(overloaded{
                   [&](const NfTm::NeO& x) { os << "nfNeO(" << x.neutral << ")"; },
                   [&](const NfTm::Yes&) { os << "nfYes"; },
                   [&](const NfTm::No&) { os << "nfNo"; },
                   [&](const NfTm::Lam& l) { os << "nfLam(" << l.dom << ", " << l.cod << ", " << *l.body << ")"; },
               },
               n.node);
    return os;
}

}  // namespace nbek
