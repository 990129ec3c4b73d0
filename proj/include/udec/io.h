// include/udec/io.h

// Copyright 2026 The udec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UDEC_IO_H_
#define UDEC_IO_H_

// JSON file formats.
//
//   source   {"kind":"moore","alphabet":[...],"transition":[[...]...],
//             "initial":[...]}
//            {"kind":"mealy","states":[...],"alphabet":[...],
//             "transitions":[{"from":"S1","to":"S2","symbols":["a"]}],
//             "initial_states":["S1"]}
//   code     {"kind":"codebook","radix":2,"words":{"A":"0",...}}
//            {"kind":"state_dependent","radix":2,"initial":{...},
//             "by_previous":{"A":{"A":"0","C":"1"},...}}
//   channel  {"kind":"unconstrained","durations":[1,2]}
//            {"kind":"finite_state","states":[...],
//             "transitions":[{"from":0,"to":1,"durations":[1,2]}]}
//
// Parse errors carry a JSON-path style location ("$.words.A") or, for
// malformed text, the line and column.  Output objects keep a fixed key
// order and round reals to 12 significant digits.

#include <string>
#include <variant>

#include "json.hpp"

#include "udec/capacity.h"
#include "udec/codebook.h"
#include "udec/decodability.h"
#include "udec/source_model.h"

namespace udec {

using Json = nlohmann::ordered_json;

using AnySource = std::variant<MooreMarkovSource, MealySource>;

/// Parses JSON text; throws InputError with line and column on failure.
Json ParseJsonText(const std::string& text, const std::string& origin);
/// Reads and parses a file; throws InputError if it cannot be read.
Json ReadJsonFile(const std::string& path);

/// Parsed sources are validated; invalid ones throw InputError.
AnySource SourceFromJson(const Json& j);
AnyCode CodeFromJson(const Json& j);
ChannelSpec ChannelFromJson(const Json& j);

AnySource LoadSource(const std::string& path);
AnyCode LoadCode(const std::string& path);
ChannelSpec LoadChannel(const std::string& path);

Json ToJson(const MooreMarkovSource& source);
Json ToJson(const MealySource& source);
Json ToJson(const Codebook& code);
Json ToJson(const StateDependentCode& code);
Json ToJson(const AnyCode& code);

/// Rounds to 12 significant digits for stable reports.
double ReportNumber(double x);

/// {"decodable":..., "witness":[[...],[...]]} with symbol names; witness is
/// omitted when decodable.
Json VerdictToJson(const DecodabilityVerdict& verdict,
                   const Alphabet& alphabet);

}  // namespace udec

#endif  // UDEC_IO_H_
