/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "nbek/nf_json.hpp"

namespace nbek {

using nlohmann::json;

namespace {

[[noreturn]] void bad_con(const json& j, const char* sort) {
    throw json::other_error::create(501, std::string("not a ") + sort + " constructor: " + j.dump(), &j);
}

}  // namespace

void to_json(json& j, const NfTp& n) {
    if (auto f = std::get_if<NfTp::Fun>(&n.node)) {
        j = json{{"con", "nfFun"}, {"dom", *f->dom}, {"cod", *f->cod}};
    } else {
        j = json{{"con", "nfO"}};
    }
}

void to_json(json& j, const NeTm& e) {
    std::visit(overloaded{
                   [&](const NeTm::Var& v) { j = json{{"con", "neVar"}, {"ty", v.ty}, {"level", v.level.value}}; },
                   [&](const NeTm::App& a) {
                       j = json{{"con", "neApp"}, {"dom", a.dom}, {"cod", a.cod}, {"fun", *a.fun}, {"arg", *a.arg}};
                   },
               },
               e.node);
}

void to_json(json& j, const NfTm& n) {
    std::visit(overloaded{
                   [&](const NfTm::NeO& x) { j = json{{"con", "nfNeO"}, {"neutral", x.neutral}}; },
                   [&](const NfTm::Yes&) { j = json{{"con", "nfYes"}}; },
                   [&](const NfTm::No&) { j = json{{"con", "nfNo"}}; },
                   [&](const NfTm::Lam& l) {
                       j = json{{"con", "nfLam"}, {"dom", l.dom}, {"cod", l.cod}, {"body", *l.body}};
                   },
               },
               n.node);
}

void from_json(const json& j, NfTp& n) {
    const auto& con = j.at("con").get_ref<const std::string&>();
    if (con == "nfO") {
        n = nf_o();
    } else if (con == "nfFun") {
        n = nf_fun(j.at("dom").get<NfTp>(), j.at("cod").get<NfTp>());
    } else {
        bad_con(j, "NfTp");
    }
}

void from_json(const json& j, NeTm& e) {
    const auto& con = j.at("con").get_ref<const std::string&>();
    if (con == "neVar") {
        e = ne_var(j.at("ty").get<NfTp>(), j.at("level").get<std::size_t>());
    } else if (con == "neApp") {
        e = ne_app(j.at("dom").get<NfTp>(), j.at("cod").get<NfTp>(), j.at("fun").get<NeTm>(), j.at("arg").get<NfTm>());
    } else {
        bad_con(j, "NeTm");
    }
}

void from_json(const json& j, NfTm& n) {
    const auto& con = j.at("con").get_ref<const std::string&>();
    if (con == "nfNeO") {
        n = nf_ne_o(j.at("neutral").get<NeTm>());
    } else if (con == "nfYes") {
        n = nf_yes();
    } else if (con == "nfNo") {
        n = nf_no();
    } else if (con == "nfLam") {
        n = nf_lam(j.at("dom").get<NfTp>(), j.at("cod").get<NfTp>(), j.at("body").get<NfTm>());
    } else {
        bad_con(j, "NfTm");
    }
}

}  // namespace nbek
