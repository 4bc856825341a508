// Copyright 2026 The QSTS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qsts/efficiency.hpp"
#include "qsts/protocols.hpp"

namespace qsts::cli {

enum ExitCode : int {
    kSuccess = 0,
    kIoError = 1,
    kInvalidArguments = 2,
    kDegenerateStrategy = 3,
    kVerificationFailure = 4,
};

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts "a", "a+bi", "a-bi", "bi".
std::complex<double> parse_complex(std::string_view text);

/// Serializes with every double at 17 significant digits.
std::string to_json_text(const nlohmann::ordered_json& value);

/// Shortest decimal for `value` that carries 17 significant digits and a decimal point or exponent.
std::string format_double(double value);

nlohmann::ordered_json run_to_json(const ProtocolRun& run, std::string_view strategy = {});
nlohmann::ordered_json report_to_json(const EfficiencyReport& report);

}  // namespace qsts::cli
