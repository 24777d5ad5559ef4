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

// Plan-reuse decision problems. A ReuseInstance bundles a planning instance,
// a stored case (J, H, c), the glue action set A' and a budget M. The
// verifiers below define what a YES certificate means for each flavor; every
// solver's output is checked against them.

#ifndef CASEMOD_REUSE_H_
#define CASEMOD_REUSE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "casemod/sas.h"

namespace casemod {

enum class Flavor {
  kCaseMod,       // glue before and after the whole case plan, prefix lands on J
  kCaseModStar,   // an infix of c, prefix lands on J[c_1..c_{i1-1}]
  kInfixGeneral,  // an infix of c from any state where each step applies
  kPlanMod,       // glue interleaved anywhere into c
  kKStep,         // plain planning with at most `budget` steps
};

const char* to_string(Flavor flavor);
std::optional<Flavor> parse_flavor(std::string_view text);

/// Stored experience. `stored_goal` (H) never influences an answer.
struct Case {
  State stored_initial;
  PartialState stored_goal;
  Plan plan;

  bool operator==(const Case&) const = default;
};

struct ReuseQuery {
  /// A'. Normalized to ascending, duplicate-free ids by ReuseInstance.
  std::vector<ActionId> glue_actions;
  std::size_t budget = 0;
  Flavor flavor = Flavor::kCaseMod;
  /// CaseMod* only: forbid the empty infix unless the case plan is empty.
  bool strict_infix = false;

  bool operator==(const ReuseQuery&) const = default;
};

/// Pi together with a case and a query. The case is optional only for the
/// k-step flavor. Validated on construction.
class ReuseInstance {
 public:
  ReuseInstance(std::shared_ptr<const PlanningInstance> instance,
                std::optional<Case> stored_case, ReuseQuery query);

  const PlanningInstance& instance() const { return *instance_; }
  const std::shared_ptr<const PlanningInstance>& instance_ptr() const {
    return instance_;
  }
  const std::optional<Case>& stored_case() const { return case_; }
  /// Throws InvalidArgument if the instance carries no case.
  const Case& case_data() const;
  const ReuseQuery& query() const { return query_; }
  Flavor flavor() const { return query_.flavor; }
  std::size_t budget() const { return query_.budget; }
  const std::vector<ActionId>& glue_actions() const {
    return query_.glue_actions;
  }
  bool in_glue(ActionId id) const;

  ReuseInstance with_query(ReuseQuery query) const;
  ReuseInstance with_flavor(Flavor flavor) const;
  ReuseInstance with_budget(std::size_t budget) const;
  ReuseInstance with_glue(std::vector<ActionId> glue) const;

  /// J[c] satisfies H. A false result is a warning only.
  bool case_consistent() const;

  bool operator==(const ReuseInstance& other) const;

 private:
  std::shared_ptr<const PlanningInstance> instance_;
  std::optional<Case> case_;
  ReuseQuery query_;
};

/// Sizes of the four restrictions over the distinct actions of A'.
struct ParamReport {
  std::size_t k_L = 0;  // budget M
  std::size_t k_A = 0;  // |A'|
  std::size_t k_V = 0;  // variables mentioned by A'
  std::size_t k_D = 0;  // distinct value indices mentioned by A'

  bool operator==(const ParamReport&) const = default;
};

ParamReport compute_parameters(const ReuseInstance& r);

/// Witness for a YES answer. Fields that a flavor does not use are ignored
/// by its verifier.
struct Certificate {
  Flavor flavor = Flavor::kCaseMod;
  /// Glue steps g. For k-step certificates this is the whole plan.
  Plan glue;
  /// i: number of glue steps placed before the reused part of c.
  std::size_t split = 0;
  /// Infix bounds i1..i2, 1-based and inclusive.
  std::size_t infix_first = 1;
  std::size_t infix_last = 0;
  /// The reused infix is empty. For CaseMod* `infix_first` still selects the
  /// prefix state J[c_1..c_{i1-1}] the glue prefix has to reach.
  bool empty_infix = false;
  /// PlanMod: positions[j] case steps run before glue[j]. Weakly increasing.
  std::vector<std::size_t> positions;

  static Certificate casemod(Plan glue, std::size_t split);
  static Certificate infix(Flavor flavor, Plan glue, std::size_t split,
                           std::size_t first, std::size_t last);
  static Certificate empty(Flavor flavor, Plan glue, std::size_t split,
                           std::size_t first = 1);
  static Certificate planmod(Plan glue, std::vector<std::size_t> positions);
  static Certificate kstep(Plan plan);

  bool operator==(const Certificate&) const = default;
};

/// The plan glue[..split] ++ reused ++ glue[split..].
Plan splice(std::span<const ActionId> glue, std::size_t split,
            std::span<const ActionId> reused);

/// Inserts glue[j] after the first positions[j] steps of `plan`, keeping the
/// relative order of glue steps. Throws InvalidArgument on non-monotone or
/// out-of-range positions.
Plan interleave(std::span<const ActionId> plan, std::span<const ActionId> glue,
                std::span<const std::size_t> positions);

// Each verifier throws InvalidArgument when the certificate's flavor does not
// match, and otherwise returns whether the certificate witnesses YES.
bool verify_casemod(const ReuseInstance& r, const Certificate& cert);
bool verify_casemod_star(const ReuseInstance& r, const Certificate& cert);
bool verify_infix_general(const ReuseInstance& r, const Certificate& cert);
bool verify_planmod(const ReuseInstance& r, const Certificate& cert);
bool verify_kstep(const PlanningInstance& instance,
                  std::span<const ActionId> plan, std::size_t k);

/// Dispatches on r's flavor.
bool verify(const ReuseInstance& r, const Certificate& cert);

}  // namespace casemod

#endif  // CASEMOD_REUSE_H_
