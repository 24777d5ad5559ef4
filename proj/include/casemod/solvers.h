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

// Deciders for every reuse flavor.
//
// Two families live here. The exhaustive solvers enumerate glue sequences
// directly and serve as ground truth on small inputs. The fixed-parameter
// solvers for CaseMod run breadth-first search over the states reachable
// with glue actions only: with k distinct actions, a reachable state is fixed
// by the order in which the actions last fired, so at most
// sum_{j<=k} k!/(k-j)! states are ever visited regardless of |V| or |A|.
//
// All solvers only expand applicable actions. An inapplicable step never
// changes the state, so dropping it from a witness gives a shorter witness.
// Ties are broken by shortest glue, then lexicographically smallest action
// ids, then smallest split.

#ifndef CASEMOD_SOLVERS_H_
#define CASEMOD_SOLVERS_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "casemod/reuse.h"
#include "casemod/sas.h"

namespace casemod {

/// Work caps. Exceeding either raises ResourceLimitExceeded.
struct SearchLimits {
  static constexpr std::size_t kDefaultLimit = 10'000'000;

  std::size_t max_states = kDefaultLimit;
  std::size_t max_sequences = kDefaultLimit;

  static SearchLimits uniform(std::size_t limit) { return {limit, limit}; }
};

/// One breadth-first exploration: states it stored and how many structurally
/// distinct actions drove it.
struct BfsRecord {
  std::size_t visit_count = 0;
  std::size_t distinct_actions = 0;
};

struct SolveStats {
  std::size_t states_visited = 0;
  /// Candidate sequences checked (exhaustive solvers) or single-step
  /// extensions attempted (breadth-first solvers).
  std::size_t sequences_tried = 0;
  std::chrono::microseconds elapsed{0};
  std::vector<BfsRecord> bfs_runs;

  void merge(const SolveStats& other);
  std::size_t max_bfs_visits() const;
};

struct SolveResult {
  bool answer = false;
  std::optional<Certificate> certificate;
  SolveStats stats;
};

/// Shortest glue distances from one source state.
class ReachabilityTable {
 public:
  explicit ReachabilityTable(State source);

  std::size_t visit_count() const { return states_.size(); }
  /// States in discovery order; index 0 is the source.
  const std::vector<State>& states() const { return states_; }
  std::size_t distance_at(std::size_t index) const { return distance_[index]; }
  std::optional<std::size_t> index_of(const State& s) const;
  std::optional<std::size_t> distance(const State& s) const;
  /// Action sequence realizing distance_at(index).
  Plan path_to(std::size_t index) const;

  /// Adds `s` reached from `parent` via `action` unless already present.
  /// Returns the new index, or nullopt if `s` was known.
  std::optional<std::size_t> insert(const State& s, std::size_t parent,
                                    ActionId action);

 private:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  std::vector<State> states_;
  std::vector<std::size_t> distance_;
  std::vector<std::size_t> parent_;
  std::vector<ActionId> via_;
  std::unordered_map<State, std::size_t, StateHash> index_;
};

/// BFS from `source` using applicable actions from `actions`, up to
/// `depth_cap` steps. Appends a BfsRecord to `stats` when given.
ReachabilityTable reachable_states(const PlanningInstance& instance,
                                   const State& source,
                                   std::span<const ActionId> actions,
                                   std::size_t depth_cap,
                                   const SearchLimits& limits = {},
                                   SolveStats* stats = nullptr);

/// One representative per structural (pre, post) class; the first
/// occurrence wins and input order is kept.
std::vector<ActionId> dedupe_actions(const PlanningInstance& instance,
                                     std::span<const ActionId> actions);

/// sum_{j=0}^{k} k!/(k-j)!, saturating at SIZE_MAX.
std::size_t ordered_subset_bound(std::size_t k);

SolveResult solve_casemod_fpt_A(const ReuseInstance& r,
                                const SearchLimits& limits = {});
/// Dedupes A' structurally, then runs solve_casemod_fpt_A.
SolveResult solve_casemod_fpt_VD(const ReuseInstance& r,
                                 const SearchLimits& limits = {});

struct BruteOptions {
  /// Only extend glue with actions applicable at their position.
  bool applicable_only = true;
};

SolveResult solve_casemod_brute(const ReuseInstance& r,
                                const SearchLimits& limits = {},
                                BruteOptions options = {});

using CaseModSolver =
    std::function<SolveResult(const ReuseInstance&, const SearchLimits&)>;

/// Tries every infix of the case plan (including the empty one) as a CaseMod
/// instance solved by `inner`.
SolveResult solve_casemod_star(const ReuseInstance& r,
                               const CaseModSolver& inner,
                               const SearchLimits& limits = {});

/// 0-1 BFS over (state, phase, progress into the case plan).
SolveResult solve_infix_general(const ReuseInstance& r,
                                const SearchLimits& limits = {});

/// Iterative deepening over glue sequences and insertion positions.
SolveResult solve_planmod_brute(const ReuseInstance& r,
                                const SearchLimits& limits = {});

SolveResult solve_kstep_bfs(const PlanningInstance& instance, std::size_t k,
                            const SearchLimits& limits = {});

enum class Algorithm { kAuto, kBrute, kFptA, kFptVD };

const char* to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view text);

/// Runs the solver for r's flavor. The fixed-parameter algorithms exist for
/// casemod and casemod-star only; requesting them elsewhere throws
/// InvalidArgument. kAuto picks fpt-vd where available, brute otherwise.
SolveResult solve(const ReuseInstance& r, Algorithm algo,
                  const SearchLimits& limits = {});

}  // namespace casemod

#endif  // CASEMOD_SOLVERS_H_
