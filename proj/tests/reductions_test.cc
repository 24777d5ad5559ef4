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

#include "casemod/reductions.h"

#include <bit>

#include "casemod/error.h"
#include "casemod/instance_io.h"
#include "casemod/source_io.h"
#include "doctest.h"
#include "test_support.h"

namespace casemod {
namespace {

PartitionedCliqueInstance single_edge() {
  return {{"u1", "w1"}, {{0}, {1}}, {{0, 1}}};
}

bool is_subsequence(const std::string& needle, const std::string& hay) {
  std::size_t j = 0;
  for (char ch : hay) {
    if (j < needle.size() && needle[j] == ch) ++j;
  }
  return j == needle.size();
}

// Enumerates every candidate string of the target length.
bool brute_lcs(const LcsInstance& lcs) {
  const std::vector<char> sigma = lcs.alphabet();
  if (lcs.target_length == 0) return true;
  if (sigma.empty()) return false;
  std::vector<std::size_t> digit(lcs.target_length, 0);
  while (true) {
    std::string candidate;
    for (std::size_t d : digit) candidate.push_back(sigma[d]);
    if (std::all_of(lcs.strings.begin(), lcs.strings.end(),
                    [&](const std::string& s) { return is_subsequence(candidate, s); })) {
      return true;
    }
    std::size_t i = digit.size();
    while (i > 0 && ++digit[i - 1] == sigma.size()) digit[--i] = 0;
    if (i == 0) return false;
  }
}

bool brute_wsat(const CircuitInstance& c) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.num_inputs()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > c.weight_bound) continue;
    std::vector<bool> in(c.num_inputs());
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = (mask >> i) & 1;
    if (c.evaluate(in)) return true;
  }
  return false;
}

TEST_CASE("partitioned clique gadget on a single edge") {
  const ReuseInstance r = reduce_pclique_to_LV(single_edge());
  CHECK(r.budget() == 5);
  CHECK(serialize_instance(r) ==
        "casemod v1\n"
        "var x.1 2\n"
        "var x.2 2\n"
        "var y.1.2 2\n"
        "values x.1 u1 *\n"
        "values x.2 w1 *\n"
        "init * * 0\n"
        "goal x.1=* x.2=* y.1.2=1\n"
        "action guess.1.u1 pre post x.1=u1\n"
        "action clear.1.u1 pre post x.1=*\n"
        "action guess.2.w1 pre post x.2=w1\n"
        "action clear.2.w1 pre post x.2=*\n"
        "action check.1.2.u1.w1 pre x.1=u1 x.2=w1 post y.1.2=1\n"
        "case-init * * 1\n"
        "case-goal x.1=* x.2=* y.1.2=1\n"
        "case-plan\n"
        "glue guess.1.u1 clear.1.u1 guess.2.w1 clear.2.w1 check.1.2.u1.w1\n"
        "budget 5\n"
        "flavor casemod\n");
  CHECK(solve(r, Algorithm::kFptVD).answer);
  CHECK(oracle_pclique(single_edge()));

  PartitionedCliqueInstance no_edge = single_edge();
  no_edge.edges.clear();
  CHECK_FALSE(solve(reduce_pclique_to_LV(no_edge), Algorithm::kFptVD).answer);
  CHECK_FALSE(oracle_pclique(no_edge));
}

TEST_CASE("partitioned clique edge cases") {
  PartitionedCliqueInstance empty_part{{"u1", "u2"}, {{0, 1}, {}}, {}};
  CHECK_FALSE(oracle_pclique(empty_part));
  CHECK_FALSE(solve(reduce_pclique_to_LV(empty_part), Algorithm::kFptVD).answer);
  PartitionedCliqueInstance lonely{{}, {{}}, {}};
  CHECK_THROWS_AS(reduce_pclique_to_LV(lonely), InvalidArgument);
  PartitionedCliqueInstance overlap{{"a", "b"}, {{0}, {0, 1}}, {}};
  CHECK_THROWS_AS(overlap.validate(), InvalidArgument);
  PartitionedCliqueInstance loop{{"a", "b"}, {{0}, {1}}, {{1, 1}}};
  CHECK_THROWS_AS(loop.validate(), InvalidArgument);
}

TEST_CASE("LCS gadget on (ab, ba)") {
  LcsInstance lcs{{"ab", "ba"}, 1};
  const ReuseInstance r = reduce_lcs_to_V(lcs);
  CHECK(r.instance().num_variables() == 7);
  CHECK(r.budget() == 9);
  CHECK(r.instance().num_actions() == 16);
  CHECK(oracle_lcs(lcs));
  CHECK(solve(r, Algorithm::kFptVD).answer);
  lcs.target_length = 2;
  CHECK_FALSE(oracle_lcs(lcs));
  CHECK_FALSE(solve(reduce_lcs_to_V(lcs), Algorithm::kFptVD).answer);
  CHECK_THROWS_AS(oracle_lcs(LcsInstance{{"aaaa", "aaaa"}, 1}, 10),
                  ResourceLimitExceeded);
  CHECK_THROWS_AS(reduce_lcs_to_V(LcsInstance{{}, 0}), InvalidArgument);
  CHECK_THROWS_AS(reduce_lcs_to_V(LcsInstance{{"a*"}, 0}), InvalidArgument);
}

TEST_CASE("LCS oracle agrees with candidate enumeration") {
  Rng rng(7);
  RandomSourceParams p;
  for (int i = 0; i < 300; ++i) {
    p.k = 1 + rng.below(3);
    p.string_length = 4;
    p.alphabet_size = 1 + rng.below(3);
    const LcsInstance lcs = random_lcs(rng, p);
    CAPTURE(serialize_lcs(lcs));
    REQUIRE(oracle_lcs(lcs) == brute_lcs(lcs));
  }
}

TEST_CASE("circuit evaluation and the weighted satisfiability gadget") {
  const CircuitInstance contradiction = parse_circuit(
      testing::read_file(testing::data_path("sources/contradiction.circuit")));
  CHECK_FALSE(oracle_wsat(contradiction));
  const ReuseInstance r = reduce_wsat_to_planmod(contradiction);
  CHECK(r.flavor() == Flavor::kPlanMod);
  CHECK(r.glue_actions() == std::vector<ActionId>{*r.instance().find_action("on")});
  CHECK_FALSE(solve_planmod_brute(r).answer);

  Rng rng(11);
  RandomSourceParams p;
  for (int i = 0; i < 200; ++i) {
    p.num_inputs = 1 + rng.below(3);
    p.num_gates = rng.below(4);
    const CircuitInstance c = random_circuit(rng, p);
    CAPTURE(serialize_circuit(c));
    REQUIRE(oracle_wsat(c) == brute_wsat(c));
  }

  CircuitInstance reserved{{"sigma"}, {}, 0, 1};
  CHECK_THROWS_AS(reduce_wsat_to_planmod(reserved), InvalidArgument);
  CircuitInstance bad_not{{"x"}, {{"n", GateKind::kNot, {0, 0}}}, 1, 1};
  CHECK_THROWS_AS(bad_not.validate(), InvalidArgument);
  CircuitInstance forward{{"x"}, {{"g", GateKind::kAnd, {1}}}, 1, 1};
  CHECK_THROWS_AS(forward.validate(), InvalidArgument);
}

TEST_CASE("k-step and L-CaseMod round trips on small cases") {
  const Document doc =
      parse_document(testing::read_file(testing::data_path("corpus/kstep.cm")));
  auto pi = std::get<ReuseInstance>(doc).instance_ptr();
  CHECK(solve(reduce_kstep_to_L(pi, 3), Algorithm::kFptVD).answer);
  CHECK_FALSE(solve(reduce_kstep_to_L(pi, 2), Algorithm::kFptVD).answer);
  CHECK_THROWS_AS(reduce_kstep_to_L(testing::example_planning(), 3),
                  InvalidArgument);

  const KStepProblem k = reduce_L_to_kstep(testing::example_reuse());
  CHECK(k.k == 4);
  CHECK(k.instance->num_variables() == 4);
  CHECK(k.instance->variable(3).name == "star");
  CHECK(k.instance->num_actions() == 3);
  CHECK(k.instance->action(2).name == "jump");
  CHECK(solve_kstep_bfs(*k.instance, k.k).answer);
  const KStepProblem tight = reduce_L_to_kstep(testing::example_reuse().with_budget(1));
  CHECK_FALSE(solve_kstep_bfs(*tight.instance, tight.k).answer);
  CHECK_THROWS_AS(
      reduce_L_to_kstep(testing::example_reuse(Flavor::kPlanMod)),
      InvalidArgument);
}

TEST_CASE("Boolean gadget keeps k_D at most two") {
  Rng rng(3);
  RandomSourceParams p;
  for (int i = 0; i < 150; ++i) {
    const PlanningInstance pi = random_bool_planning(rng, p);
    REQUIRE(pi.is_boolean());
    REQUIRE(pi.goal_is_complete());
    auto shared = std::make_shared<const PlanningInstance>(pi);
    const ReuseInstance r = reduce_bool_to_D(shared);
    REQUIRE(compute_parameters(r).k_D == 2);
    REQUIRE(r.budget() == (std::size_t{1} << pi.num_variables()));
    REQUIRE(solve(r, Algorithm::kFptVD).answer ==
            solve_kstep_bfs(pi, r.budget()).answer);
  }
  CHECK_THROWS_AS(reduce_bool_to_D(testing::example_planning()), InvalidArgument);
}

TEST_CASE("random sources are deterministic") {
  for (SourceKind kind : {SourceKind::kPClique, SourceKind::kLcs,
                          SourceKind::kCircuit, SourceKind::kBoolPlanning,
                          SourceKind::kCaseMod}) {
    CAPTURE(to_string(kind));
    CHECK(parse_source_kind(to_string(kind)) == kind);
    CHECK(gen_random_source(kind, 99) == gen_random_source(kind, 99));
  }
  const auto a = reduce_pclique_to_LV(
      std::get<PartitionedCliqueInstance>(gen_random_source(SourceKind::kPClique, 5)));
  const auto b = reduce_pclique_to_LV(
      std::get<PartitionedCliqueInstance>(gen_random_source(SourceKind::kPClique, 5)));
  CHECK(serialize_instance(a) == serialize_instance(b));
}

TEST_CASE("rng stream is the standard 64-bit Mersenne Twister") {
  Rng rng(5489);
  std::uint64_t value = 0;
  for (int i = 0; i < 10000; ++i) value = rng.next();
  CHECK(value == 9981545732273789042ULL);
  Rng small(1);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t x = small.between(3, 5);
    REQUIRE(x >= 3);
    REQUIRE(x <= 5);
  }
  CHECK_THROWS_AS(small.below(0), InvalidArgument);
}

}  // namespace
}  // namespace casemod
