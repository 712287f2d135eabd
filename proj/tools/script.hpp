/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "nbek/monoid.hpp"
#include "nbek/nbe.hpp"
#include "nbek/surface.hpp"

namespace nbek::cli {

// Script files hold one directive per line; '#' starts a comment.
//
//   assume <name> : <type>
//   norm <term> : <type>
//   conv <term> = <term> : <type>
//   injtp <type> = <type>
//   moneq <mon> = <mon>
//   monnorm <mon>
//
// Any directive may end in `--expect <text>`, which is compared verbatim with
// the directive's rendered outcome.

struct Directive {
    struct Assume {
        std::string name;
        Type type;
    };
    struct Norm {
        surface::NamedTerm term;
        Type type;
    };
    struct Conv {
        surface::NamedTerm lhs;
        surface::NamedTerm rhs;
        Type type;
    };
    struct InjTp {
        Type lhs;
        Type rhs;
    };
    struct MonEq {
        monoid::MonExpr lhs;
        monoid::MonExpr rhs;
    };
    struct MonNorm {
        monoid::MonExpr expr;
    };

    std::variant<Assume, Norm, Conv, InjTp, MonEq, MonNorm> node;
    std::size_t line = 0;
    /// Source text with the comment and the --expect annotation removed.
    std::string text;
    std::optional<std::string> expect;
};

class ScriptError : public std::runtime_error {
public:
    enum class Kind { Parse, Type };

    ScriptError(Kind kind, std::size_t line, const std::string& detail);

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Kind kind_;
    std::size_t line_;
    std::string detail_;
};

/// Parses one line. Returns nullopt for blank and comment-only lines; throws
/// ScriptError{Parse} otherwise.
std::optional<Directive> parse_directive(std::string_view line_text, std::size_t line_no);

struct Outcome {
    struct Assumed {
        std::string name;
        Type type;
    };
    struct Normalized {
        NfTm nf;
        std::string text;
    };
    struct Converted {
        bool equal;
    };
    struct Injectivity {
        FunTpVerdict verdict;
    };
    struct MonoidEqual {
        bool equal;
    };
    struct MonoidNormal {
        monoid::FreeList list;
    };
    struct Failed {
        ScriptError::Kind kind;
        std::string message;
    };

    std::variant<Assumed, Normalized, Converted, Injectivity, MonoidEqual, MonoidNormal, Failed> node;

    bool failed() const noexcept { return std::holds_alternative<Failed>(node); }
    /// The text --expect annotations are compared against.
    std::string text() const;
    nlohmann::json to_json() const;
};

struct ReportEntry {
    std::size_t line = 0;
    std::string directive;
    Outcome outcome;
    std::optional<std::string> expect;
    bool expect_ok = true;
    double ms = 0.0;
};

struct Report {
    std::vector<ReportEntry> entries;

    std::size_t errors() const;
    std::size_t expectation_failures() const;
    bool ok() const { return errors() == 0 && expectation_failures() == 0; }

    /// Top-level array of {"directive", "line", "outcome", "ms"[, "expect"]}.
    nlohmann::json to_json() const;
};

struct RunOptions {
    bool keep_going = false;
    /// When false every "ms" is reported as 0, making output byte-stable.
    bool timing = true;
    /// Reject directives other than moneq/monnorm.
    bool monoid_only = false;
};

/// Runs directives in order against the context built up by `assume`.
/// Outcomes such as `false` or `unequal` are results; parse and type errors
/// are recorded as failed entries and stop the run unless keep_going is set.
Report run_script(std::string_view text, const RunOptions& options = {});

/// Evaluates one parsed directive against an ambient context (binding order).
/// Assume directives extend ctx and names.
Outcome run_directive(const Directive& d, Context& ctx, std::vector<std::string>& names, bool monoid_only = false);

/// "f : O -> O, x : O" (binding order).
void parse_context(std::string_view src, Context& ctx, std::vector<std::string>& names);

}  // namespace nbek::cli
