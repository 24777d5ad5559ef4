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

#include "casemod/solvers.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "casemod/error.h"

namespace casemod {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  Stopwatch() : start_(Clock::now()) {}
  std::chrono::microseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                                 start_);
  }

 private:
  Clock::time_point start_;
};

void charge_states(const SolveStats& stats, const SearchLimits& limits) {
  if (stats.states_visited > limits.max_states) {
    throw ResourceLimitExceeded("state limit of " +
                                std::to_string(limits.max_states) +
                                " exceeded");
  }
}

void charge_sequences(const SolveStats& stats, const SearchLimits& limits) {
  if (stats.sequences_tried > limits.max_sequences) {
    throw ResourceLimitExceeded("sequence limit of " +
                                std::to_string(limits.max_sequences) +
                                " exceeded");
  }
}

// Breadth-first search that stops as soon as a state accepted by `stop` is
// discovered. Discovery order equals FIFO order, and actions are tried in
// ascending id order, so the first path found to any state is the
// lexicographically smallest among its shortest paths.
template <typename Stop>
std::optional<std::size_t> run_bfs(const PlanningInstance& instance,
                                   ReachabilityTable& table,
                                   std::span<const ActionId> actions,
                                   std::size_t depth_cap,
                                   const SearchLimits& limits,
                                   SolveStats& stats, Stop stop) {
  const std::size_t visits_before = stats.states_visited;
  auto record = [&] {
    stats.bfs_runs.push_back(
        {table.visit_count(), dedupe_actions(instance, actions).size()});
  };
  stats.states_visited += 1;
  charge_states(stats, limits);
  std::optional<std::size_t> found;
  if (stop(table.states()[0])) found = 0;
  for (std::size_t head = 0; !found && head < table.visit_count(); ++head) {
    if (table.distance_at(head) >= depth_cap) break;
    for (ActionId id : actions) {
      ++stats.sequences_tried;
      charge_sequences(stats, limits);
      const Action& a = instance.action(id);
      const State& current = table.states()[head];
      if (!is_applicable(current, a)) continue;
      State next = current.overwritten(a.post);
      auto index = table.insert(next, head, id);
      if (!index) continue;
      stats.states_visited = visits_before + table.visit_count();
      charge_states(stats, limits);
      if (stop(table.states()[*index])) {
        found = index;
        break;
      }
    }
  }
  record();
  return found;
}

bool lex_less(const Plan& a, std::size_t split_a, const Plan& b,
              std::size_t split_b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a != b) return a < b;
  return split_a < split_b;
}

// Calls `visit(end_state, sequence)` for every sequence of exactly `length`
// actions from `actions`, in lexicographic order. Stops early when `visit`
// returns true; returns whether it did.
template <typename Visit>
bool enumerate_sequences(const PlanningInstance& instance, const State& start,
                         std::span<const ActionId> actions, std::size_t length,
                         bool applicable_only, const SearchLimits& limits,
                         SolveStats& stats, Plan& sequence, Visit& visit) {
  if (sequence.size() == length) {
    ++stats.sequences_tried;
    charge_sequences(stats, limits);
    return visit(start, sequence);
  }
  for (ActionId id : actions) {
    const Action& a = instance.action(id);
    const bool applicable = is_applicable(start, a);
    if (applicable_only && !applicable) continue;
    sequence.push_back(id);
    const State next = applicable ? start.overwritten(a.post) : start;
    if (enumerate_sequences(instance, next, actions, length, applicable_only,
                            limits, stats, sequence, visit)) {
      return true;
    }
    sequence.pop_back();
  }
  return false;
}

SearchLimits remaining(const SearchLimits& limits, const SolveStats& used) {
  SearchLimits out = limits;
  out.max_states -= std::min(out.max_states, used.states_visited);
  out.max_sequences -= std::min(out.max_sequences, used.sequences_tried);
  return out;
}

}  // namespace

// SolveStats -----------------------------------------------------------------

void SolveStats::merge(const SolveStats& other) {
  states_visited += other.states_visited;
  sequences_tried += other.sequences_tried;
  bfs_runs.insert(bfs_runs.end(), other.bfs_runs.begin(), other.bfs_runs.end());
}

std::size_t SolveStats::max_bfs_visits() const {
  std::size_t best = 0;
  for (const auto& run : bfs_runs) best = std::max(best, run.visit_count);
  return best;
}

// ReachabilityTable ----------------------------------------------------------

ReachabilityTable::ReachabilityTable(State source) {
  index_.emplace(source, 0);
  states_.push_back(std::move(source));
  distance_.push_back(0);
  parent_.push_back(kNoParent);
  via_.push_back(0);
}

std::optional<std::size_t> ReachabilityTable::index_of(const State& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ReachabilityTable::distance(const State& s) const {
  if (auto index = index_of(s)) return distance_[*index];
  return std::nullopt;
}

Plan ReachabilityTable::path_to(std::size_t index) const {
  Plan path;
  while (parent_[index] != kNoParent) {
    path.push_back(via_[index]);
    index = parent_[index];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::size_t> ReachabilityTable::insert(const State& s,
                                                     std::size_t parent,
                                                     ActionId action) {
  auto [it, inserted] = index_.emplace(s, states_.size());
  if (!inserted) return std::nullopt;
  states_.push_back(s);
  distance_.push_back(distance_[parent] + 1);
  parent_.push_back(parent);
  via_.push_back(action);
  return it->second;
}

ReachabilityTable reachable_states(const PlanningInstance& instance,
                                   const State& source,
                                   std::span<const ActionId> actions,
                                   std::size_t depth_cap,
                                   const SearchLimits& limits,
                                   SolveStats* stats) {
  instance.check_state(source);
  instance.check_plan(actions);
  std::vector<ActionId> sorted(actions.begin(), actions.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  SolveStats local;
  ReachabilityTable table(source);
  run_bfs(instance, table, sorted, depth_cap, limits, local,
          [](const State&) { return false; });
  if (stats) stats->merge(local);
  return table;
}

std::vector<ActionId> dedupe_actions(const PlanningInstance& instance,
                                     std::span<const ActionId> actions) {
  std::vector<ActionId> out;
  for (ActionId id : actions) {
    const Action& a = instance.action(id);
    const bool seen = std::any_of(out.begin(), out.end(), [&](ActionId kept) {
      const Action& b = instance.action(kept);
      return a.pre == b.pre && a.post == b.post;
    });
    if (!seen) out.push_back(id);
  }
  return out;
}

std::size_t ordered_subset_bound(std::size_t k) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t term = 1;  // k!/(k-j)!
  for (std::size_t j = 0; j <= k; ++j) {
    if (j > 0) {
      const std::size_t factor = k - j + 1;
      if (term > kMax / factor) return kMax;
      term *= factor;
    }
    if (total > kMax - term) return kMax;
    total += term;
  }
  return total;
}

// CaseMod --------------------------------------------------------------------

SolveResult solve_casemod_fpt_A(const ReuseInstance& r,
                                const SearchLimits& limits) {
  if (r.flavor() != Flavor::kCaseMod) {
    throw InvalidArgument("solve_casemod_fpt_A needs a casemod instance");
  }
  Stopwatch watch;
  SolveResult result;
  const PlanningInstance& pi = r.instance();
  const Case& c = r.case_data();
  const auto& glue = r.glue_actions();

  ReachabilityTable to_case(pi.initial());
  auto reached = run_bfs(pi, to_case, glue, r.budget(), limits, result.stats,
                         [&](const State& s) { return s == c.stored_initial; });
  if (reached) {
    const std::size_t d1 = to_case.distance_at(*reached);
    ReachabilityTable to_goal(apply_plan(pi, c.stored_initial, c.plan));
    auto goal = run_bfs(pi, to_goal, glue, r.budget() - d1, limits,
                        result.stats,
                        [&](const State& s) { return satisfies(s, pi.goal()); });
    if (goal) {
      Plan g = to_case.path_to(*reached);
      Plan tail = to_goal.path_to(*goal);
      g.insert(g.end(), tail.begin(), tail.end());
      result.answer = true;
      result.certificate = Certificate::casemod(std::move(g), d1);
    }
  }
  result.stats.elapsed = watch.elapsed();
  return result;
}

SolveResult solve_casemod_fpt_VD(const ReuseInstance& r,
                                 const SearchLimits& limits) {
  if (r.flavor() != Flavor::kCaseMod) {
    throw InvalidArgument("solve_casemod_fpt_VD needs a casemod instance");
  }
  return solve_casemod_fpt_A(
      r.with_glue(dedupe_actions(r.instance(), r.glue_actions())), limits);
}

SolveResult solve_casemod_brute(const ReuseInstance& r,
                                const SearchLimits& limits,
                                BruteOptions options) {
  if (r.flavor() != Flavor::kCaseMod) {
    throw InvalidArgument("solve_casemod_brute needs a casemod instance");
  }
  Stopwatch watch;
  SolveResult result;
  const PlanningInstance& pi = r.instance();
  const Case& c = r.case_data();
  const auto& glue = r.glue_actions();

  for (std::size_t m = 0; m <= r.budget() && !result.answer; ++m) {
    std::optional<Plan> best;
    std::size_t best_split = 0;
    for (std::size_t i = 0; i <= m; ++i) {
      Plan prefix;
      std::optional<Plan> found;
      auto on_prefix = [&](const State& end, const Plan& head) {
        if (end != c.stored_initial) return false;
        const State after_case = apply_plan(pi, end, c.plan);
        Plan tail;
        auto on_suffix = [&](const State& last, const Plan& rest) {
          if (!satisfies(last, pi.goal())) return false;
          Plan g = head;
          g.insert(g.end(), rest.begin(), rest.end());
          found = std::move(g);
          return true;
        };
        return enumerate_sequences(pi, after_case, glue, m - i,
                                   options.applicable_only, limits,
                                   result.stats, tail, on_suffix);
      };
      enumerate_sequences(pi, pi.initial(), glue, i, options.applicable_only,
                          limits, result.stats, prefix, on_prefix);
      if (found && (!best || lex_less(*found, i, *best, best_split))) {
        best = std::move(found);
        best_split = i;
      }
    }
    if (best) {
      result.answer = true;
      result.certificate = Certificate::casemod(std::move(*best), best_split);
    }
  }
  result.stats.elapsed = watch.elapsed();
  return result;
}

SolveResult solve_casemod_star(const ReuseInstance& r,
                               const CaseModSolver& inner,
                               const SearchLimits& limits) {
  if (r.flavor() != Flavor::kCaseModStar) {
    throw InvalidArgument("solve_casemod_star needs a casemod-star instance");
  }
  Stopwatch watch;
  SolveResult result;
  const PlanningInstance& pi = r.instance();
  const Case& c = r.case_data();
  const std::size_t l = c.plan.size();
  ReuseQuery query = r.query();
  query.flavor = Flavor::kCaseMod;

  struct Choice {
    std::size_t begin;
    std::size_t end;
    bool empty;
  };
  std::vector<Choice> choices;
  for (std::size_t b = 0; b < l; ++b) {
    for (std::size_t e = b + 1; e <= l; ++e) choices.push_back({b, e, false});
  }
  if (!r.query().strict_infix || l == 0) {
    for (std::size_t b = 0; b <= l; ++b) choices.push_back({b, b, true});
  }

  // Prefix states J[c_1..c_b] for every b, computed once.
  std::vector<State> prefix_states{c.stored_initial};
  for (ActionId id : c.plan) {
    prefix_states.push_back(apply_action(prefix_states.back(), pi.action(id)));
  }

  for (const Choice& choice : choices) {
    Case derived{prefix_states[choice.begin], c.stored_goal,
                 Plan(c.plan.begin() + choice.begin,
                      c.plan.begin() + choice.end)};
    ReuseInstance sub(r.instance_ptr(), std::move(derived), query);
    SolveResult attempt = inner(sub, remaining(limits, result.stats));
    result.stats.merge(attempt.stats);
    charge_states(result.stats, limits);
    charge_sequences(result.stats, limits);
    if (!attempt.answer) continue;
    const Certificate& found = *attempt.certificate;
    if (result.answer && !lex_less(found.glue, found.split,
                                   result.certificate->glue,
                                   result.certificate->split)) {
      continue;
    }
    result.answer = true;
    result.certificate =
        choice.empty
            ? Certificate::empty(Flavor::kCaseModStar, found.glue, found.split,
                                 choice.begin + 1)
            : Certificate::infix(Flavor::kCaseModStar, found.glue, found.split,
                                 choice.begin + 1, choice.end);
    if (found.glue.empty()) break;
  }
  result.stats.elapsed = watch.elapsed();
  return result;
}

// Generalized infix ----------------------------------------------------------

namespace {

enum class Phase : unsigned char { kBefore, kInside, kAfter };

struct ProductKey {
  State state;
  Phase phase;
  std::size_t next;  // kInside: index of the next case step

  bool operator==(const ProductKey&) const = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const {
    return k.state.hash() ^ (static_cast<std::size_t>(k.phase) << 1) ^
           (k.next * 0x9e3779b97f4a7c15ull);
  }
};

enum class Edge : unsigned char { kNone, kGlue, kStart, kContinue, kEnd, kEmpty };

struct ProductNode {
  ProductKey key;
  std::size_t cost;
  std::size_t parent;
  Edge edge;
  std::size_t label;  // glue action id, or case index for kStart/kContinue
};

}  // namespace

SolveResult solve_infix_general(const ReuseInstance& r,
                                const SearchLimits& limits) {
  if (r.flavor() != Flavor::kInfixGeneral) {
    throw InvalidArgument("solve_infix_general needs an infix-general instance");
  }
  Stopwatch watch;
  SolveResult result;
  const PlanningInstance& pi = r.instance();
  const Plan& plan = r.case_data().plan;
  const auto& glue = r.glue_actions();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<ProductNode> nodes;
  std::unordered_map<ProductKey, std::size_t, ProductKeyHash> index;
  std::vector<bool> settled;
  std::deque<std::size_t> queue;

  auto relax = [&](ProductKey key, std::size_t cost, std::size_t parent,
                   Edge edge, std::size_t label) {
    if (cost > r.budget()) return;
    auto it = index.find(key);
    std::size_t id;
    if (it == index.end()) {
      id = nodes.size();
      index.emplace(key, id);
      nodes.push_back({std::move(key), cost, parent, edge, label});
      settled.push_back(false);
      result.stats.states_visited = nodes.size();
      charge_states(result.stats, limits);
    } else {
      id = it->second;
      if (settled[id] || nodes[id].cost <= cost) return;
      nodes[id].cost = cost;
      nodes[id].parent = parent;
      nodes[id].edge = edge;
      nodes[id].label = label;
    }
    const bool free = edge != Edge::kGlue;
    if (free) {
      queue.push_front(id);
    } else {
      queue.push_back(id);
    }
  };

  relax({pi.initial(), Phase::kBefore, 0}, 0, kNone, Edge::kNone, 0);
  std::optional<std::size_t> goal;
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    if (settled[id]) continue;
    settled[id] = true;
    const ProductKey key = nodes[id].key;
    const std::size_t cost = nodes[id].cost;
    if (key.phase == Phase::kAfter && satisfies(key.state, pi.goal())) {
      goal = id;
      break;
    }
    auto try_step = [&](ActionId action_id, Phase phase, std::size_t next,
                        std::size_t step_cost, Edge edge, std::size_t label) {
      ++result.stats.sequences_tried;
      charge_sequences(result.stats, limits);
      const Action& a = pi.action(action_id);
      if (!is_applicable(key.state, a)) return;
      relax({key.state.overwritten(a.post), phase, next}, cost + step_cost, id,
            edge, label);
    };
    switch (key.phase) {
      case Phase::kBefore:
        for (ActionId g : glue) {
          try_step(g, Phase::kBefore, 0, 1, Edge::kGlue, g);
        }
        relax({key.state, Phase::kAfter, 0}, cost, id, Edge::kEmpty, 0);
        for (std::size_t first = 0; first < plan.size(); ++first) {
          try_step(plan[first], Phase::kInside, first + 1, 0, Edge::kStart,
                   first);
        }
        break;
      case Phase::kInside:
        relax({key.state, Phase::kAfter, 0}, cost, id, Edge::kEnd, 0);
        if (key.next < plan.size()) {
          try_step(plan[key.next], Phase::kInside, key.next + 1, 0,
                   Edge::kContinue, key.next);
        }
        break;
      case Phase::kAfter:
        for (ActionId g : glue) {
          try_step(g, Phase::kAfter, 0, 1, Edge::kGlue, g);
        }
        break;
    }
  }

  if (goal) {
    std::vector<std::size_t> chain;
    for (std::size_t at = *goal; at != kNone; at = nodes[at].parent) {
      chain.push_back(at);
    }
    std::reverse(chain.begin(), chain.end());
    Plan g;
    std::size_t split = 0;
    std::size_t first = 0;
    std::size_t last = 0;
    bool empty = true;
    for (std::size_t at : chain) {
      const ProductNode& n = nodes[at];
      switch (n.edge) {
        case Edge::kGlue: g.push_back(n.label); break;
        case Edge::kStart:
          split = g.size();
          first = n.label + 1;
          last = n.label + 1;
          empty = false;
          break;
        case Edge::kContinue: last = n.label + 1; break;
        case Edge::kEmpty: split = g.size(); break;
        case Edge::kEnd:
        case Edge::kNone: break;
      }
    }
    result.answer = true;
    result.certificate =
        empty ? Certificate::empty(Flavor::kInfixGeneral, std::move(g), split)
              : Certificate::infix(Flavor::kInfixGeneral, std::move(g), split,
                                   first, last);
  }
  result.stats.elapsed = watch.elapsed();
  return result;
}

// PlanMod --------------------------------------------------------------------

namespace {

// Visits weakly increasing vectors of `count` values in [0, max] in
// lexicographic order; stops when `visit` returns true.
template <typename Visit>
bool enumerate_positions(std::size_t count, std::size_t max,
                         std::vector<std::size_t>& positions, Visit& visit) {
  if (positions.size() == count) return visit(positions);
  const std::size_t low = positions.empty() ? 0 : positions.back();
  for (std::size_t p = low; p <= max; ++p) {
    positions.push_back(p);
    if (enumerate_positions(count, max, positions, visit)) return true;
    positions.pop_back();
  }
  return false;
}

}  // namespace

SolveResult solve_planmod_brute(const ReuseInstance& r,
                                const SearchLimits& limits) {
  if (r.flavor() != Flavor::kPlanMod) {
    throw InvalidArgument("solve_planmod_brute needs a planmod instance");
  }
  Stopwatch watch;
  SolveResult result;
  const PlanningInstance& pi = r.instance();
  const Plan& plan = r.case_data().plan;
  const auto& glue = r.glue_actions();

  for (std::size_t m = 0; m <= r.budget() && !result.answer; ++m) {
    Plan sequence;
    auto on_glue = [&](const State&, const Plan& g) {
      std::vector<std::size_t> positions;
      auto on_positions = [&](const std::vector<std::size_t>& pos) {
        ++result.stats.sequences_tried;
        charge_sequences(result.stats, limits);
        if (!is_solution_plan(pi, interleave(plan, g, pos))) return false;
        result.answer = true;
        result.certificate = Certificate::planmod(g, pos);
        return true;
      };
      return enumerate_positions(m, plan.size(), positions, on_positions);
    };
    // Glue sequences are enumerated without state tracking: where a step runs
    // depends on the positions chosen afterwards.
    enumerate_sequences(pi, pi.initial(), glue, m, false, limits, result.stats,
                        sequence, on_glue);
  }
  result.stats.elapsed = watch.elapsed();
  return result;
}

// k-step ---------------------------------------------------------------------

SolveResult solve_kstep_bfs(const PlanningInstance& instance, std::size_t k,
                            const SearchLimits& limits) {
  Stopwatch watch;
  SolveResult result;
  std::vector<ActionId> all(instance.num_actions());
  for (ActionId id = 0; id < all.size(); ++id) all[id] = id;
  ReachabilityTable table(instance.initial());
  auto goal = run_bfs(instance, table, all, k, limits, result.stats,
                      [&](const State& s) {
                        return satisfies(s, instance.goal());
                      });
  if (goal) {
    result.answer = true;
    result.certificate = Certificate::kstep(table.path_to(*goal));
  }
  result.stats.elapsed = watch.elapsed();
  return result;
}

// Dispatch -------------------------------------------------------------------

const char* to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kAuto: return "auto";
    case Algorithm::kBrute: return "brute";
    case Algorithm::kFptA: return "fpt-a";
    case Algorithm::kFptVD: return "fpt-vd";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::kAuto, Algorithm::kBrute, Algorithm::kFptA,
                      Algorithm::kFptVD}) {
    if (text == to_string(a)) return a;
  }
  return std::nullopt;
}

namespace {

CaseModSolver casemod_solver(Algorithm algo) {
  switch (algo) {
    case Algorithm::kBrute:
      return [](const ReuseInstance& r, const SearchLimits& l) {
        return solve_casemod_brute(r, l);
      };
    case Algorithm::kFptA:
      return [](const ReuseInstance& r, const SearchLimits& l) {
        return solve_casemod_fpt_A(r, l);
      };
    case Algorithm::kAuto:
    case Algorithm::kFptVD:
      break;
  }
  return [](const ReuseInstance& r, const SearchLimits& l) {
    return solve_casemod_fpt_VD(r, l);
  };
}

}  // namespace

SolveResult solve(const ReuseInstance& r, Algorithm algo,
                  const SearchLimits& limits) {
  const bool fpt = algo == Algorithm::kFptA || algo == Algorithm::kFptVD;
  switch (r.flavor()) {
    case Flavor::kCaseMod:
      return casemod_solver(algo)(r, limits);
    case Flavor::kCaseModStar:
      return solve_casemod_star(r, casemod_solver(algo), limits);
    default:
      break;
  }
  if (fpt) {
    throw InvalidArgument(std::string("algorithm ") + to_string(algo) +
                          " is not available for flavor " +
                          to_string(r.flavor()));
  }
  switch (r.flavor()) {
    case Flavor::kInfixGeneral: return solve_infix_general(r, limits);
    case Flavor::kPlanMod: return solve_planmod_brute(r, limits);
    case Flavor::kKStep: return solve_kstep_bfs(r.instance(), r.budget(), limits);
    default: break;
  }
  throw InvalidArgument("unsupported flavor");
}

}  // namespace casemod
