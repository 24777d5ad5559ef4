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

#include "casemod/bench.h"

#include <sstream>

#include "casemod/reductions.h"

namespace casemod {

namespace {

constexpr std::size_t kRepeats = 5;

BenchRow make_row(BenchSuite suite, std::uint64_t seed, Algorithm algo,
                  std::size_t size, std::size_t parameter,
                  const SolveResult& result) {
  BenchRow row;
  row.suite = to_string(suite);
  row.seed = seed;
  row.algorithm = to_string(algo);
  row.instance_size = size;
  row.parameter_value = parameter;
  row.states_visited = result.stats.states_visited;
  row.max_bfs_visits = result.stats.max_bfs_visits();
  row.sequences_tried = result.stats.sequences_tried;
  row.answer = result.answer;
  row.elapsed_us = result.stats.elapsed.count();
  return row;
}

// Random CaseMod instance with `num_vars` variables and 2 * num_vars random
// actions, plus two always-applicable glue actions whose postconditions
// overlap on one variable, so all five ordered subsets give distinct states.
// J is I[g1 g2] or a random state.
ReuseInstance scaling_instance(Rng& rng, std::size_t num_vars) {
  RandomSourceParams p;
  p.num_variables = num_vars;
  p.num_actions = 2 * num_vars;
  p.max_domain = 3;
  p.max_plan_length = 4;
  ReuseInstance base = random_casemod(rng, p);
  const PlanningInstance& pi = base.instance();

  const VarId shared = rng.below(num_vars);
  VarId own[2];
  for (VarId& v : own) {
    do {
      v = rng.below(num_vars);
    } while (v == shared);
  }
  std::vector<Action> actions = pi.actions();
  std::vector<ActionId> glue;
  for (int j = 0; j < 2; ++j) {
    const int domain = pi.variable(own[j]).domain_size;
    glue.push_back(actions.size());
    actions.push_back({"glue" + std::to_string(j + 1),
                       {},
                       {{shared, static_cast<Value>(j)},
                        {own[j], static_cast<Value>(rng.below(domain))}}});
  }
  auto scaled = std::make_shared<const PlanningInstance>(
      pi.variables(), pi.initial(), pi.goal(), std::move(actions));
  Case c = base.case_data();
  if (rng.chance(0.5)) {
    c.stored_initial = apply_plan(*scaled, scaled->initial(), glue);
  }
  return ReuseInstance(scaled, std::move(c),
                       ReuseQuery{glue, 4, Flavor::kCaseMod, false});
}

// Appends `copies` renamed copies of every glue action and adds them to A'.
ReuseInstance duplicate_glue(const ReuseInstance& r, std::size_t copies) {
  const PlanningInstance& pi = r.instance();
  std::vector<Action> actions = pi.actions();
  std::vector<ActionId> glue = r.glue_actions();
  for (std::size_t copy = 1; copy <= copies; ++copy) {
    for (ActionId id : r.glue_actions()) {
      Action a = pi.action(id);
      a.name += ".dup" + std::to_string(copy);
      glue.push_back(actions.size());
      actions.push_back(std::move(a));
    }
  }
  auto dup = std::make_shared<const PlanningInstance>(
      pi.variables(), pi.initial(), pi.goal(), std::move(actions));
  ReuseQuery query = r.query();
  query.glue_actions = std::move(glue);
  return ReuseInstance(std::move(dup), r.stored_case(), std::move(query));
}

}  // namespace

const char* to_string(BenchSuite suite) {
  switch (suite) {
    case BenchSuite::kFptAScaling: return "fpt-a-scaling";
    case BenchSuite::kVdDedupe: return "vd-dedupe";
    case BenchSuite::kHardFlavors: return "hard-flavors";
  }
  return "?";
}

std::optional<BenchSuite> parse_bench_suite(std::string_view text) {
  for (BenchSuite s : {BenchSuite::kFptAScaling, BenchSuite::kVdDedupe,
                       BenchSuite::kHardFlavors}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<BenchRow> run_bench(BenchSuite suite, std::uint64_t seed,
                                const SearchLimits& limits) {
  Rng rng(seed);
  std::vector<BenchRow> rows;
  switch (suite) {
    case BenchSuite::kFptAScaling:
      for (std::size_t num_vars : {10, 20, 40}) {
        for (std::size_t rep = 0; rep < kRepeats; ++rep) {
          ReuseInstance r = scaling_instance(rng, num_vars);
          rows.push_back(make_row(suite, seed, Algorithm::kFptA, num_vars,
                                  r.glue_actions().size(),
                                  solve_casemod_fpt_A(r, limits)));
        }
      }
      break;
    case BenchSuite::kVdDedupe:
      for (std::size_t copies : {0, 1, 3, 7}) {
        for (std::size_t rep = 0; rep < kRepeats; ++rep) {
          RandomSourceParams p;
          p.num_variables = 4;
          p.num_actions = 4;
          ReuseInstance r = duplicate_glue(random_casemod(rng, p), copies);
          const std::size_t size = r.instance().num_variables();
          rows.push_back(make_row(suite, seed, Algorithm::kFptA, size,
                                  r.glue_actions().size(),
                                  solve_casemod_fpt_A(r, limits)));
          rows.push_back(make_row(
              suite, seed, Algorithm::kFptVD, size,
              dedupe_actions(r.instance(), r.glue_actions()).size(),
              solve_casemod_fpt_VD(r, limits)));
        }
      }
      break;
    case BenchSuite::kHardFlavors:
      for (std::size_t k : {2, 3, 4}) {
        for (std::size_t rep = 0; rep < kRepeats; ++rep) {
          RandomSourceParams p;
          p.k = k;
          p.part_size = 2;
          ReuseInstance r = reduce_pclique_to_LV(random_pclique(rng, p));
          rows.push_back(make_row(suite, seed, Algorithm::kFptVD,
                                  r.instance().num_variables(), k,
                                  solve_casemod_fpt_VD(r, limits)));
        }
      }
      break;
  }
  return rows;
}

std::string bench_csv_header() {
  return "suite,seed,algorithm,instance_size,parameter_value,states_visited,"
         "max_bfs_visits,sequences_tried,answer,elapsed_us";
}

std::string to_csv(const BenchRow& row) {
  std::ostringstream out;
  out << row.suite << ',' << row.seed << ',' << row.algorithm << ','
      << row.instance_size << ',' << row.parameter_value << ','
      << row.states_visited << ',' << row.max_bfs_visits << ','
      << row.sequences_tried << ',' << (row.answer ? "YES" : "NO") << ','
      << row.elapsed_us;
  return out.str();
}

}  // namespace casemod
