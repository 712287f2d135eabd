/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace nbek::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "nbe");
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("nbek_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

struct NoColor {
    NoColor() { ::setenv("NBE_COLOR", "0", 1); }
};
const NoColor no_color;

}  // namespace

TEST_CASE("norm") {
    auto r = run({"norm", "-e", "(\\z:O. z) yes", "-t", "O"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "yes\n");

    auto c = run({"norm", "-e", "f", "-t", "O -> O", "-c", "f : O -> O"});
    CHECK(c.code == kExitOk);
    CHECK(c.out == "\\x:O. f x\n");
}

TEST_CASE("norm type error") {
    auto r = run({"norm", "-e", "yes no", "-t", "O"});
    CHECK(r.code == kExitFailure);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("norm parse error") {
    auto r = run({"norm", "-e", "(yes", "-t", "O"});
    CHECK(r.code == kExitFailure);
    CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("injtp") {
    auto r = run({"injtp", "-a", "O -> O", "-b", "O -> (O -> O)"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "unequal\n");
    auto e = run({"injtp", "-a", "(O -> O) -> O", "-b", "(O -> O) -> O"});
    CHECK(e.out == "equal [O -> O] [O]\n");
}

TEST_CASE("conv with both spellings of the second term") {
    CHECK(run({"conv", "-e", "f", "-e2", "\\x:O. f x", "-t", "O -> O", "-c", "f : O -> O"}).out == "true\n");
    CHECK(run({"conv", "-e", "yes", "--e2", "no", "-t", "O"}).out == "false\n");
}

TEST_CASE("json output") {
    auto r = run({"--json", "norm", "-e", "\\x:O. x", "-t", "O -> O"});
    CHECK(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "norm");
    CHECK(j["nf"]["con"] == "nfLam");
    // flags may also follow the subcommand
    auto r2 = run({"norm", "-e", "yes", "-t", "O", "--json"});
    CHECK(nlohmann::json::parse(r2.out)["nf"]["con"] == "nfYes");
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"norm", "-e", "yes"}).code == kExitUsage);
    CHECK(run({"check", "/nonexistent/path.nbe"}).code == kExitUsage);
}

TEST_CASE("check") {
    auto ok = write_temp("ok.nbe", "# demo\nassume f : O -> O\nnorm f yes : O --expect f yes\nconv yes = no : O\n");
    auto r = run({"--no-timing", "check", ok});
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "2: assume f : O -> O  =>  assumed f : O -> O\n"
          "3: norm f yes : O  =>  f yes  [expect ok]\n"
          "4: conv yes = no : O  =>  false\n"
          "ok: 3 directive(s)\n");

    auto bad = write_temp("bad.nbe", "norm yes : O --expect no\n");
    auto b = run({"--no-timing", "check", bad});
    CHECK(b.code == kExitFailure);
    CHECK(b.out.find("[expect FAILED: wanted 'no']") != std::string::npos);
    CHECK(b.out.find("FAILED: 0 error(s), 1 expectation failure(s) in 1 directive(s)") != std::string::npos);

    auto err = write_temp("err.nbe", "norm nope : O\nnorm yes : O\n");
    CHECK(run({"check", err}).code == kExitFailure);
    auto kg = run({"--keep-going", "--json", "--no-timing", "check", err});
    CHECK(kg.code == kExitFailure);
    CHECK(nlohmann::json::parse(kg.out).size() == 2);
}

TEST_CASE("timing is printed unless disabled") {
    auto ok = write_temp("t.nbe", "norm yes : O\n");
    CHECK(run({"check", ok}).out.find(" ms)") != std::string::npos);
    CHECK(run({"--no-timing", "check", ok}).out.find(" ms)") == std::string::npos);
}

TEST_CASE("monoid") {
    auto m = write_temp("m.nbe", "moneq (mu eps (gen a)) = (gen a) --expect true\nmonnorm (mu (gen a) (gen b))\n");
    auto r = run({"--no-timing", "monoid", m});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("[a, b]") != std::string::npos);
    auto bad = write_temp("m2.nbe", "norm yes : O\n");
    CHECK(run({"monoid", bad}).code == kExitFailure);
}

TEST_CASE("colors follow NBE_COLOR") {
    auto ok = write_temp("c.nbe", "norm yes : O\n");
    ::setenv("NBE_COLOR", "1", 1);
    auto colored = run({"--no-timing", "check", ok});
    ::setenv("NBE_COLOR", "0", 1);
    auto plain = run({"--no-timing", "check", ok});
    CHECK(colored.out.find("\033[") != std::string::npos);
    CHECK(plain.out.find("\033[") == std::string::npos);
}
