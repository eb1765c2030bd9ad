/*
   Copyright 2026 The blochcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BLOCH_CLI_HPP
#define BLOCH_CLI_HPP

#include <json.hpp>
#include <string>

#include "bloch/certify.hpp"

namespace bloch::cli {

inline constexpr const char* kFormatVersion = "bloch-cert/1";

// Exit codes: 0 ok/irreducible, 2 input error, 3 always reducible,
// 4 inconclusive, 5 certificate verification failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitReducible = 3;
inline constexpr int kExitInconclusive = 4;
inline constexpr int kExitVerifyFail = 5;

using Json = nlohmann::ordered_json;

// Graph files (version "bloch-cert/1", 1-based vertex ids, "free" or "p/q").
Json graph_to_json(const PeriodicGraph& g);
PeriodicGraph graph_from_json(const Json& j);

// Certificate files; round-trip exact: parse(render(cert)) == cert.
Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

// Canonical-text polynomial parsers (inverses of render/render_unipoly).
QPoly parse_unipoly(const std::string& text, const std::string& var);
LaurentPoly parse_laurent(const std::string& text, int d);

PeriodicGraph example_graph(const std::string& name);

int run(int argc, const char* const* argv);

}  // namespace bloch::cli

#endif
