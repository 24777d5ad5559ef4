// Copyright 2026 The casemod Authors
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

// Text formats for the source problems of the reductions.
//
//   lcs v1           pclique v1          circuit v1
//   string ab        part u1 u2          input x1
//   string ba        part w1             and g1 x1 x2
//   target 1         edge u1 w1          not g2 g1
//                                        output g2
//                                        weight 1
//
// A bare `string` line is the empty string and a bare `part` line an empty
// part. Gates may be listed in any order; they are sorted topologically on
// parse, keeping declaration order among independent gates.

#ifndef CASEMOD_SOURCE_IO_H_
#define CASEMOD_SOURCE_IO_H_

#include <string>
#include <string_view>

#include "casemod/reductions.h"

namespace casemod {

/// Each parser throws ParseError on malformed input.
LcsInstance parse_lcs(std::string_view text);
PartitionedCliqueInstance parse_pclique(std::string_view text);
CircuitInstance parse_circuit(std::string_view text);

std::string serialize_lcs(const LcsInstance& lcs);
std::string serialize_pclique(const PartitionedCliqueInstance& g);
std::string serialize_circuit(const CircuitInstance& circuit);

}  // namespace casemod

#endif  // CASEMOD_SOURCE_IO_H_
