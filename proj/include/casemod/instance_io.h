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

// Line-oriented text format for planning and reuse instances.
//
//   casemod v1
//   var v1 3
//   values v1 zero one two
//   init 0 0 0
//   goal v1=2
//   action a1 pre v1=0 v2=1 post v1=1
//   case-init 0 1 0
//   case-goal v1=2
//   case-plan a1 a2
//   glue a3 a4
//   budget 3
//   flavor casemod
//   strict-infix
//
// `#` starts a comment. Values may be written as labels or indices; labels
// win when both match. A document without any of the reuse sections is a
// bare planning instance. Serialization is canonical: fixed section order,
// ids in order, labels whenever a variable has them, single spaces and a
// trailing newline.

#ifndef CASEMOD_INSTANCE_IO_H_
#define CASEMOD_INSTANCE_IO_H_

#include <string>
#include <string_view>
#include <variant>

#include "casemod/reuse.h"
#include "casemod/sas.h"

namespace casemod {

using Document = std::variant<PlanningInstance, ReuseInstance>;

/// Throws ParseError on any malformed or inconsistent input.
Document parse_document(std::string_view text);
/// Like parse_document, but a bare planning instance is a kMissingSection
/// error.
ReuseInstance parse_reuse_instance(std::string_view text);

std::string serialize_instance(const PlanningInstance& instance);
std::string serialize_instance(const ReuseInstance& r);
std::string serialize_document(const Document& doc);

/// JSON rendering with the same content as the text form.
std::string render_json(const Document& doc, int indent = 2);

/// One line, clauses separated by "; ":
///   casemod        glue a3 a4; i 2
///   casemod-star   glue a3; i 1; infix 2 3   (or "infix empty 2")
///   infix-general  as casemod-star
///   planmod        glue on; positions 0
///   kstep          plan a1 a2
std::string format_certificate(const ReuseInstance& r, const Certificate& cert);

/// Parses a certificate for r's flavor. Missing clauses default to empty
/// glue, i 0, the whole case plan as infix, and no positions. `infix 0 0`
/// is accepted as the empty infix. Errors are reported at line 1.
Certificate parse_certificate(const ReuseInstance& r, std::string_view text);

}  // namespace casemod

#endif  // CASEMOD_INSTANCE_IO_H_
