// Copyright 2026 The tqlocc Authors
//
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

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "tqlocc/invariants.hpp"
#include "tqlocc/locc.hpp"
#include "tqlocc/state.hpp"
#include "tqlocc/transfer.hpp"

namespace tqlocc {

using Json = nlohmann::json;

/// {"amplitudes": [[re, im] x 8]}, index 4a + 2b + c.
Json state_to_json(const PureState3& state);
PureState3 state_from_json(const Json& j, const Tolerances& tol = {});

/// {"qubit": "A", "operators": [M0, M1]}, each M row-major [[[re, im], ...]].
Json measurement_to_json(const Measurement2& m);
Measurement2 measurement_from_json(const Json& j, const Tolerances& tol = {});

Json matrix_to_json(const Matrix2& m);
Json gram_to_json(const GramParams& g);
Json coeffs_to_json(const SchmidtCoeffs& s);
Json c_params_to_json(const CParams& c);
Json class_to_json(const StateClass& c);
Json report_to_json(const InvariantReport& r);
Json lu_comparison_to_json(const LuComparison& c);
Json verdict_to_json(const LoccVerdict& v, std::optional<int> min_measurements);
Json extended_to_json(const ExtendedReal& x);
Json ghz_canonical_to_json(const GhzCanonical& g);
Json outcomes_to_json(const std::array<Outcome, 2>& outcomes);
Json fuzz_report_to_json(const FuzzReport& r);

/// Throws Error(Parse) when the file cannot be read or is not JSON.
Json read_json_file(const std::string& path);

std::string dump(const Json& j, bool pretty);

}  // namespace tqlocc
