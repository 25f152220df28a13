// Copyright 2026 The meo Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "meo/config.hpp"

namespace meo {

enum ExitCode { kExitOk = 0, kExitViolation = 1, kExitParse = 2, kExitUnsupported = 3, kExitCap = 4 };

// Runs one verification suite (lemmas, landau, formulas, tables or all).
// Sets ok to false on any violation or unexplained discrepancy.
nlohmann::json verify_suite(const std::string &suite, const Config &c, bool &ok);

// Command-line entry point; results go to out, diagnostics to err.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace meo
