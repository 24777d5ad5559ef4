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

// Hardness gadgets as instance generators, plus brute-force or dynamic
// programming oracles for their source problems. Every generator is a pure
// function of its input; emitted names follow a fixed scheme so outputs can
// be compared byte for byte.

#ifndef CASEMOD_REDUCTIONS_H_
#define CASEMOD_REDUCTIONS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "casemod/reuse.h"
#include "casemod/sas.h"

namespace casemod {

/// Graph whose vertices are split into k labelled parts. Does it contain a
/// clique with one vertex from every part?
struct PartitionedCliqueInstance {
  std::vector<std::string> vertex_names;      // dense vertex ids
  std::vector<std::vector<std::size_t>> parts;  // k parts, may be empty
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t k() const { return parts.size(); }
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Throws InvalidArgument on overlapping parts, unknown vertices,
  /// self-loops or bad names.
  void validate() const;

  bool operator==(const PartitionedCliqueInstance&) const = default;
};

/// Is there a common subsequence of length >= target_length?
struct LcsInstance {
  std::vector<std::string> strings;  // one character per symbol
  std::size_t target_length = 0;

  /// Sorted distinct symbols.
  std::vector<char> alphabet() const;
  /// Symbols must be printable and distinct from '*', '=', '#' and ';'.
  void validate() const;

  bool operator==(const LcsInstance&) const = default;
};

enum class GateKind { kAnd, kNot };

struct Gate {
  std::string name;
  GateKind kind = GateKind::kAnd;
  std::vector<std::size_t> inputs;  // node ids

  bool operator==(const Gate&) const = default;
};

/// AND/NOT circuit. Node ids: inputs first (0..n-1), then gates in
/// topological order (gate j is node n+j and reads only lower node ids).
/// Is there a satisfying assignment with at most weight_bound true inputs?
struct CircuitInstance {
  std::vector<std::string> input_names;
  std::vector<Gate> gates;
  std::size_t output = 0;
  std::size_t weight_bound = 0;

  std::size_t num_inputs() const { return input_names.size(); }
  std::size_t num_nodes() const { return input_names.size() + gates.size(); }
  const std::string& node_name(std::size_t node) const;
  /// Throws InvalidArgument unless acyclic in id order, AND gates have at
  /// least one input, NOT gates exactly one, and names are unique.
  void validate() const;
  /// Output value under the given input assignment.
  bool evaluate(const std::vector<bool>& inputs) const;

  bool operator==(const CircuitInstance&) const = default;
};

/// A k-step planning problem: is there a plan of at most k steps?
struct KStepProblem {
  std::shared_ptr<const PlanningInstance> instance;
  std::size_t k = 0;

  /// Same problem as a ReuseInstance of flavor kstep (budget k, no case).
  ReuseInstance as_reuse_instance() const;
};

/// c = epsilon, J = the state equal to the complete goal, A' = A, M = k.
/// Throws InvalidArgument unless the goal is complete.
ReuseInstance reduce_kstep_to_L(std::shared_ptr<const PlanningInstance> instance,
                                std::size_t k);

/// Adds a fresh Boolean variable `star` and one action
/// (J + {star=0} => J[c] + {star=1}); the action set becomes A' plus that
/// action, and k' = M + 1.
KStepProblem reduce_L_to_kstep(const ReuseInstance& r);

/// Reading-head gadget: |V| = 3k+1, c = epsilon, J = G, A' = A and
/// M = sum |X_i| + (k+1) * target + k.
ReuseInstance reduce_lcs_to_V(const LcsInstance& lcs);

/// Guess/check/clear gadget with M = 2k + k(k-1)/2. Throws InvalidArgument
/// for k = 1 with an empty part, the one input where the gadget's trivially
/// satisfied goal would disagree with the source.
ReuseInstance reduce_pclique_to_LV(const PartitionedCliqueInstance& g);

/// Boolean instance with complete goal as D-CaseMod: c = epsilon, J = G,
/// A' = A. The budget defaults to 2^|V| (saturating).
ReuseInstance reduce_bool_to_D(std::shared_ptr<const PlanningInstance> instance,
                               std::optional<std::size_t> budget = std::nullopt);

/// Weighted circuit satisfiability as PlanMod with A' = {on} and M = k.
ReuseInstance reduce_wsat_to_planmod(const CircuitInstance& circuit);

/// Throws ResourceLimitExceeded when prod (|X_i|+1) exceeds `lattice_cap`.
bool oracle_lcs(const LcsInstance& lcs, std::size_t lattice_cap = 10'000'000);
bool oracle_pclique(const PartitionedCliqueInstance& g);
bool oracle_wsat(const CircuitInstance& circuit);

// Random sources -------------------------------------------------------------

/// Deterministic generator: the same seed yields the same stream on every
/// platform (mt19937_64 with a portable range reduction).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [0, n). n must be positive.
  std::size_t below(std::size_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi);
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

enum class SourceKind { kPClique, kLcs, kCircuit, kBoolPlanning, kCaseMod };

std::optional<SourceKind> parse_source_kind(std::string_view text);
const char* to_string(SourceKind kind);

struct RandomSourceParams {
  // pclique
  std::size_t k = 2;
  std::size_t part_size = 2;  // max vertices per part
  double edge_probability = 0.5;
  // lcs (uses k for the number of strings)
  std::size_t string_length = 3;  // max length
  std::size_t alphabet_size = 2;
  std::size_t max_target = 3;
  // circuit
  std::size_t num_inputs = 2;
  std::size_t num_gates = 3;
  std::size_t max_weight = 2;
  // bool-planning and casemod
  std::size_t num_variables = 3;
  std::size_t max_domain = 3;
  std::size_t num_actions = 4;
  std::size_t max_budget = 4;
  std::size_t max_plan_length = 3;
};

using SourceInstance =
    std::variant<PartitionedCliqueInstance, LcsInstance, CircuitInstance,
                 PlanningInstance, ReuseInstance>;

SourceInstance gen_random_source(SourceKind kind, std::uint64_t seed,
                                 const RandomSourceParams& params = {});

PartitionedCliqueInstance random_pclique(Rng& rng, const RandomSourceParams& p);
LcsInstance random_lcs(Rng& rng, const RandomSourceParams& p);
CircuitInstance random_circuit(Rng& rng, const RandomSourceParams& p);
/// Boolean instance with a complete goal.
PlanningInstance random_bool_planning(Rng& rng, const RandomSourceParams& p);
/// CaseMod instance whose case plan is a walk of applicable actions from J
/// and whose stored goal holds after it.
ReuseInstance random_casemod(Rng& rng, const RandomSourceParams& p);

}  // namespace casemod

#endif  // CASEMOD_REDUCTIONS_H_
