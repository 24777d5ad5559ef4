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

// Parameter-scaling benchmarks. Each suite is a pure function of its seed
// apart from the elapsed time column.

#ifndef CASEMOD_BENCH_H_
#define CASEMOD_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casemod/solvers.h"

namespace casemod {

enum class BenchSuite {
  kFptAScaling,  // |A'| = 2 fixed while |V| and |A| grow
  kVdDedupe,     // duplicated glue actions, fpt-a against fpt-vd
  kHardFlavors,  // partitioned clique gadgets with growing k
};

const char* to_string(BenchSuite suite);
std::optional<BenchSuite> parse_bench_suite(std::string_view text);

struct BenchRow {
  std::string suite;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::size_t instance_size = 0;    // |V|
  std::size_t parameter_value = 0;  // k_A, or k for gadget families
  std::size_t states_visited = 0;
  std::size_t max_bfs_visits = 0;
  std::size_t sequences_tried = 0;
  bool answer = false;
  std::int64_t elapsed_us = 0;
};

std::vector<BenchRow> run_bench(BenchSuite suite, std::uint64_t seed,
                                const SearchLimits& limits = {});

std::string bench_csv_header();
std::string to_csv(const BenchRow& row);

}  // namespace casemod

#endif  // CASEMOD_BENCH_H_
