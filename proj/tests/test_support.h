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

// Helpers shared by the unit tests and the acceptance binary.

#ifndef CASEMOD_TESTS_TEST_SUPPORT_H_
#define CASEMOD_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "casemod/reductions.h"
#include "casemod/reuse.h"
#include "casemod/sas.h"
#include "casemod/solvers.h"

namespace casemod::testing {

inline std::string data_path(const std::string& name) {
  return std::string(CASEMOD_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

/// The running example: three variables, four actions, case (J, H, c) with
/// c = (a1, a2), A' = {a3, a4} and M = 3.
inline std::shared_ptr<const PlanningInstance> example_planning() {
  std::vector<Variable> vars = {{"v1", 3, {}}, {"v2", 2, {}}, {"v3", 2, {}}};
  std::vector<Action> actions = {
      {"a1", {{0, 0}, {1, 1}}, {{0, 1}}},
      {"a2", {{0, 1}, {1, 1}}, {{0, 2}}},
      {"a3", {}, {{1, 1}, {2, 1}}},
      {"a4", {}, {{2, 0}}},
  };
  return std::make_shared<const PlanningInstance>(
      std::move(vars), State{0, 0, 0}, PartialState{{0, 2}}, std::move(actions));
}

inline ReuseInstance example_reuse(Flavor flavor = Flavor::kCaseMod) {
  Case c{State{0, 1, 0}, PartialState{{0, 2}}, Plan{0, 1}};
  return ReuseInstance(example_planning(), std::move(c),
                       ReuseQuery{{2, 3}, 3, flavor, false});
}

/// Small random CaseMod instance: |V| <= 4, |D(v)| <= 3, |A| <= 5, M <= 4.
/// Sizes cycle with the seed so every combination appears.
inline ReuseInstance small_casemod(std::uint64_t seed) {
  RandomSourceParams p;
  p.num_variables = 1 + seed % 4;
  p.num_actions = 1 + (seed / 4) % 5;
  p.max_domain = 3;
  p.max_budget = 4;
  p.max_plan_length = 3;
  Rng rng(seed);
  return random_casemod(rng, p);
}

inline State random_state(Rng& rng, const PlanningInstance& pi) {
  std::vector<Value> values;
  for (const Variable& v : pi.variables()) {
    values.push_back(static_cast<Value>(rng.below(v.domain_size)));
  }
  return State(std::move(values));
}

inline Plan random_plan(Rng& rng, const PlanningInstance& pi,
                        std::size_t max_length) {
  Plan plan;
  if (pi.num_actions() == 0) return plan;
  const std::size_t length = rng.between(0, max_length);
  for (std::size_t i = 0; i < length; ++i) plan.push_back(rng.below(pi.num_actions()));
  return plan;
}

/// Every BFS run in `stats` stays within the ordered-subset bound of its
/// distinct action count.
inline bool bfs_runs_within_bound(const SolveStats& stats) {
  for (const BfsRecord& run : stats.bfs_runs) {
    if (run.visit_count > ordered_subset_bound(run.distinct_actions)) return false;
  }
  return true;
}

/// Calls `visit(glue)` for every sequence over `actions` of length <= max,
/// shortest first, lexicographic within a length. Stops when visit returns
/// true and returns that result.
template <typename Visit>
bool for_each_sequence(const std::vector<ActionId>& actions, std::size_t max,
                       Visit visit) {
  Plan seq;
  for (std::size_t length = 0; length <= max; ++length) {
    seq.assign(length, 0);
    std::vector<std::size_t> digit(length, 0);
    if (length > 0 && actions.empty()) return false;
    while (true) {
      for (std::size_t i = 0; i < length; ++i) seq[i] = actions[digit[i]];
      if (visit(seq)) return true;
      std::size_t i = length;
      while (i > 0 && ++digit[i - 1] == actions.size()) digit[--i] = 0;
      if (i == 0) break;
    }
  }
  return false;
}

}  // namespace casemod::testing

#endif  // CASEMOD_TESTS_TEST_SUPPORT_H_
