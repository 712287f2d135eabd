/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "nbek/syntax.hpp"

namespace nbek {

// The normal-form algebra. Three sorts (normal types, neutral terms, normal
// terms) with eight free constructors:
//
//   nfO, nfFun                      : NfTp
//   neVar, neApp                    : NeTm
//   nfNeO, nfYes, nfNo, nfLam       : NfTm
//
// Each sort sits over syntax via erasure. Neutrals name variables by level so
// that a neutral spine is unchanged when the context grows underneath it.
// The type indexing of the sorts is enforced by validate_nf, not by C++ types.

struct NfTp {
    struct O {
        friend bool operator==(const O&, const O&) = default;
    };
    struct Fun {
        Box<NfTp> dom;
        Box<NfTp> cod;
        friend bool operator==(const Fun&, const Fun&) = default;
    };

    std::variant<O, Fun> node;

    friend bool operator==(const NfTp&, const NfTp&) = default;
};

struct NfTm;

struct NeTm {
    struct Var {
        NfTp ty;
        Level level;
        friend bool operator==(const Var&, const Var&) = default;
    };
    struct App {
        NfTp dom;
        NfTp cod;
        Box<NeTm> fun;
        Box<NfTm> arg;
        friend bool operator==(const App&, const App&) = default;
    };

    std::variant<Var, App> node;

    friend bool operator==(const NeTm&, const NeTm&) = default;
};

struct NfTm {
    struct NeO {
        NeTm neutral;
        friend bool operator==(const NeO&, const NeO&) = default;
    };
    struct Yes {
        friend bool operator==(const Yes&, const Yes&) = default;
    };
    struct No {
        friend bool operator==(const No&, const No&) = default;
    };
    /// The body is scoped under one more variable, bound at level |ctx|.
    struct Lam {
        NfTp dom;
        NfTp cod;
        Box<NfTm> body;
        friend bool operator==(const Lam&, const Lam&) = default;
    };

    std::variant<NeO, Yes, No, Lam> node;

    friend bool operator==(const NfTm&, const NfTm&) = default;
};

inline NfTp nf_o() { return NfTp{NfTp::O{}}; }
inline NfTp nf_fun(NfTp dom, NfTp cod) { return NfTp{NfTp::Fun{std::move(dom), std::move(cod)}}; }
inline NeTm ne_var(NfTp ty, std::size_t level) { return NeTm{NeTm::Var{std::move(ty), Level{level}}}; }
inline NfTm nf_ne_o(NeTm e) { return NfTm{NfTm::NeO{std::move(e)}}; }
inline NfTm nf_yes() { return NfTm{NfTm::Yes{}}; }
inline NfTm nf_no() { return NfTm{NfTm::No{}}; }
inline NfTm nf_lam(NfTp dom, NfTp cod, NfTm body) {
    return NfTm{NfTm::Lam{std::move(dom), std::move(cod), std::move(body)}};
}
inline NeTm ne_app(NfTp dom, NfTp cod, NeTm fun, NfTm arg) {
    return NeTm{NeTm::App{std::move(dom), std::move(cod), std::move(fun), std::move(arg)}};
}

/// Constructor count, ignoring the type annotations carried by nfLam/neApp/neVar.
std::size_t size(const NfTm& n);
std::size_t size(const NeTm& e);

// ---------------------------------------------------------------------------
// Erasure

class LevelOutOfRange : public std::out_of_range {
public:
    LevelOutOfRange(Level level, std::size_t ctx_len);
    Level level() const noexcept { return level_; }

private:
    Level level_;
};

Type erase_nftp(const NfTp& n);
/// Throws LevelOutOfRange if a neVar names a level outside ctx.
Term erase_nftm(const Context& ctx, const NfTm& n);
Term erase_netm(const Context& ctx, const NeTm& e);

/// Erasure only needs the number of variables in scope.
Term erase_nftm(std::size_t depth, const NfTm& n);
Term erase_netm(std::size_t depth, const NeTm& e);

/// Exact inverse of nfFun.
std::optional<std::pair<NfTp, NfTp>> decompose_fun(const NfTp& n);

// ---------------------------------------------------------------------------
// Well-formedness

class IllFormedNormal : public std::runtime_error {
public:
    IllFormedNormal(std::string path, std::string reason);
    /// Slash-separated route from the root to the offending node, e.g. "nfLam.body/nfNeO/neApp.fun".
    const std::string& path() const noexcept { return path_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string path_;
    std::string reason_;
};

/// Succeeds iff `n` is an eta-long normal form of type `ty` under `ctx`:
/// arrows are inhabited only by nfLam, nfNeO only wraps neutrals of type O,
/// every level is bound, and all annotations agree with ctx and ty.
void validate_nf(const Context& ctx, const Type& ty, const NfTm& n);

/// Validates a neutral under ctx and returns its (erased) type.
Type validate_ne(const Context& ctx, const NeTm& e);

std::string to_string(const NfTp& n);
std::ostream& operator<<(std::ostream& os, const NfTp& n);
std::ostream& operator<<(std::ostream& os, const NfTm& n);
std::ostream& operator<<(std::ostream& os, const NeTm& e);

}  // namespace nbek
