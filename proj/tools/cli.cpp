/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "script.hpp"

namespace nbek::cli {

namespace {

struct Style {
    bool enabled = false;

    std::string paint(const std::string& text, const char* code) const {
        if (!enabled) return text;
        return std::string("\033[") + code + "m" + text + "\033[0m";
    }
    std::string good(const std::string& t) const { return paint(t, "32"); }
    std::string bad(const std::string& t) const { return paint(t, "31"); }
    std::string dim(const std::string& t) const { return paint(t, "2"); }
};

// NBE_COLOR=1 forces ANSI colors on, NBE_COLOR=0 forces them off; otherwise
// they are used only when stdout is a terminal.
Style style_for(const std::ostream& out) {
    if (const char* env = std::getenv("NBE_COLOR")) return Style{std::string(env) == "1"};
    return Style{&out == &std::cout && ::isatty(STDOUT_FILENO) != 0};
}

struct Flags {
    bool json = false;
    bool keep_going = false;
    bool no_timing = false;
};

std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms << " ms";
    return os.str();
}

void print_human(const Report& report, const Flags& flags, const Style& style, std::ostream& out) {
    for (const auto& e : report.entries) {
        std::string result = e.outcome.text();
        out << e.line << ": " << e.directive << "  =>  " << (e.outcome.failed() ? style.bad(result) : result);
        if (e.expect) {
            if (e.expect_ok)
                out << "  " << style.good("[expect ok]");
            else
                out << "  " << style.bad("[expect FAILED: wanted '" + *e.expect + "']");
        }
        if (!flags.no_timing) out << "  " << style.dim("(" + format_ms(e.ms) + ")");
        out << "\n";
    }
    std::size_t errors = report.errors();
    std::size_t misses = report.expectation_failures();
    if (errors == 0 && misses == 0) {
        out << style.good("ok") << ": " << report.entries.size() << " directive(s)\n";
    } else {
        out << style.bad("FAILED") << ": " << errors << " error(s), " << misses << " expectation failure(s) in "
            << report.entries.size() << " directive(s)\n";
    }
}

int run_file(const std::string& path, bool monoid_only, const Flags& flags, std::ostream& out, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read " << path << "\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    RunOptions options;
    options.keep_going = flags.keep_going;
    options.timing = !flags.no_timing;
    options.monoid_only = monoid_only;
    Report report = run_script(buf.str(), options);

    if (flags.json)
        out << report.to_json().dump(2) << "\n";
    else
        print_human(report, flags, style_for(out), out);
    return report.ok() ? kExitOk : kExitFailure;
}

int run_single(const Directive& d, const std::string& ctx_src, const Flags& flags, std::ostream& out, std::ostream& err) {
    Context ctx;
    std::vector<std::string> names;
    try {
        parse_context(ctx_src, ctx, names);
        Outcome o = run_directive(d, ctx, names);
        if (flags.json)
            out << o.to_json().dump(2) << "\n";
        else
            out << o.text() << "\n";
        return kExitOk;
    } catch (const ScriptError& e) {
        err << "error: " << e.detail() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

// CLI11 only accepts single-character short options, so the documented
// `-e2` spelling is rewritten to `--e2`.
std::vector<std::string> normalize_args(std::vector<std::string> args) {
    for (auto& a : args) {
        if (a == "-e2") a = "--e2";
    }
    return args;
}

}  // namespace

int cli_main(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args = normalize_args(raw_args);

    CLI::App app{"Normalization-by-evaluation kernel for simply typed lambda terms over O, yes, no", "nbe"};
    app.fallthrough();
    app.require_subcommand(1);

    Flags flags;
    app.add_flag("--json", flags.json, "Emit JSON (constructor-tagged normal forms, structured reports)");
    app.add_flag("--keep-going", flags.keep_going, "Continue a script after parse or type errors");
    app.add_flag("--no-timing", flags.no_timing, "Report every elapsed time as 0 so output is byte-stable");

    std::string file;
    auto* check_cmd = app.add_subcommand("check", "Run a directive script");
    check_cmd->add_option("file", file, "Script file")->required();

    std::string monoid_file;
    auto* monoid_cmd = app.add_subcommand("monoid", "Run a script of moneq/monnorm directives");
    monoid_cmd->add_option("file", monoid_file, "Script file")->required();

    std::string term, term2, type, ctx_src, type_a, type_b;
    auto* norm_cmd = app.add_subcommand("norm", "Normalize a term");
    norm_cmd->add_option("-e,--expr", term, "Term")->required();
    norm_cmd->add_option("-t,--type", type, "Type")->required();
    norm_cmd->add_option("-c,--ctx", ctx_src, "Context, e.g. \"f : O -> O, x : O\"");

    auto* conv_cmd = app.add_subcommand("conv", "Decide beta-eta equality of two terms");
    conv_cmd->add_option("-e,--expr", term, "Left term")->required();
    conv_cmd->add_option("--e2", term2, "Right term (also accepted as -e2)")->required();
    conv_cmd->add_option("-t,--type", type, "Type")->required();
    conv_cmd->add_option("-c,--ctx", ctx_src, "Context");

    auto* injtp_cmd = app.add_subcommand("injtp", "Compare two function types and decompose them");
    injtp_cmd->add_option("-a", type_a, "Function type")->required();
    injtp_cmd->add_option("-b", type_b, "Function type")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (check_cmd->parsed()) return run_file(file, false, flags, out, err);
    if (monoid_cmd->parsed()) return run_file(monoid_file, true, flags, out, err);

    try {
        if (norm_cmd->parsed()) {
            Directive d{Directive::Norm{surface::parse_term(term), surface::parse_type(type)}};
            return run_single(d, ctx_src, flags, out, err);
        }
        if (conv_cmd->parsed()) {
            Directive d{Directive::Conv{surface::parse_term(term), surface::parse_term(term2), surface::parse_type(type)}};
            return run_single(d, ctx_src, flags, out, err);
        }
        if (injtp_cmd->parsed()) {
            Directive d{Directive::InjTp{surface::parse_type(type_a), surface::parse_type(type_b)}};
            return run_single(d, "", flags, out, err);
        }
    } catch (const surface::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace nbek::cli
