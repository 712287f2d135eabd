/*
Copyright (c) 2026 The nbek Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <nlohmann/json.hpp>

#include "nbek/nf.hpp"

namespace nbek {

// Canonical JSON trees for normal forms. Every node is an object whose "con"
// field names its constructor:
//
//   {"con":"nfO"}
//   {"con":"nfFun","dom":NfTp,"cod":NfTp}
//   {"con":"neVar","ty":NfTp,"level":n}
//   {"con":"neApp","dom":NfTp,"cod":NfTp,"fun":NeTm,"arg":NfTm}
//   {"con":"nfNeO","neutral":NeTm}
//   {"con":"nfYes"}  {"con":"nfNo"}
//   {"con":"nfLam","dom":NfTp,"cod":NfTp,"body":NfTm}
//
// Keys are emitted in sorted order, so dump() output is deterministic.
// Decoding throws nlohmann::json::exception on malformed input.

void to_json(nlohmann::json& j, const NfTp& n);
void to_json(nlohmann::json& j, const NeTm& e);
void to_json(nlohmann::json& j, const NfTm& n);

void from_json(const nlohmann::json& j, NfTp& n);
void from_json(const nlohmann::json& j, NeTm& e);
void from_json(const nlohmann::json& j, NfTm& n);

}  // namespace nbek
