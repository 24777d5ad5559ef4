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

#include <algorithm>
#include <limits>

#include "casemod/error.h"
#include "casemod/reductions.h"

namespace casemod {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw InvalidArgument("Rng::below(0)");
  const std::uint64_t bound = n;
  // Largest multiple of n representable, so r % n is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

std::size_t Rng::between(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw InvalidArgument("Rng::between with hi < lo");
  if (hi - lo == std::numeric_limits<std::size_t>::max()) return next();
  return lo + below(hi - lo + 1);
}

bool Rng::chance(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

const char* to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::kPClique: return "pclique";
    case SourceKind::kLcs: return "lcs";
    case SourceKind::kCircuit: return "circuit";
    case SourceKind::kBoolPlanning: return "bool-planning";
    case SourceKind::kCaseMod: return "casemod";
  }
  return "?";
}

std::optional<SourceKind> parse_source_kind(std::string_view text) {
  for (SourceKind k : {SourceKind::kPClique, SourceKind::kLcs,
                       SourceKind::kCircuit, SourceKind::kBoolPlanning,
                       SourceKind::kCaseMod}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

namespace {

State random_state(Rng& rng, const std::vector<Variable>& vars) {
  std::vector<Value> values;
  for (const Variable& v : vars) {
    values.push_back(static_cast<Value>(rng.below(v.domain_size)));
  }
  return State(std::move(values));
}

PartialState random_partial(Rng& rng, const std::vector<Variable>& vars,
                            double p) {
  PartialState out;
  for (VarId var = 0; var < vars.size(); ++var) {
    if (rng.chance(p)) {
      out.set(var, static_cast<Value>(rng.below(vars[var].domain_size)));
    }
  }
  return out;
}

std::vector<Action> random_actions(Rng& rng, const std::vector<Variable>& vars,
                                   std::size_t count) {
  std::vector<Action> actions;
  for (std::size_t j = 0; j < count; ++j) {
    Action a{"a" + std::to_string(j + 1), random_partial(rng, vars, 0.35),
             random_partial(rng, vars, 0.45)};
    if (a.post.empty() && !vars.empty() && rng.chance(0.9)) {
      const VarId var = rng.below(vars.size());
      a.post.set(var, static_cast<Value>(rng.below(vars[var].domain_size)));
    }
    actions.push_back(std::move(a));
  }
  return actions;
}

// Up to `steps` random applicable actions from `s`; stops early when none
// applies.
Plan random_walk(Rng& rng, const std::vector<Action>& actions, State& s,
                 std::size_t steps) {
  Plan walk;
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<ActionId> applicable;
    for (ActionId id = 0; id < actions.size(); ++id) {
      if (is_applicable(s, actions[id])) applicable.push_back(id);
    }
    if (applicable.empty()) break;
    const ActionId id = applicable[rng.below(applicable.size())];
    s = apply_action(s, actions[id]);
    walk.push_back(id);
  }
  return walk;
}

PartialState random_restriction(Rng& rng, const State& s, double p) {
  PartialState out;
  for (VarId var = 0; var < s.size(); ++var) {
    if (rng.chance(p)) out.set(var, s[var]);
  }
  return out;
}

}  // namespace

PartitionedCliqueInstance random_pclique(Rng& rng, const RandomSourceParams& p) {
  PartitionedCliqueInstance g;
  for (std::size_t i = 0; i < p.k; ++i) {
    std::vector<std::size_t> part;
    const std::size_t size = rng.between(1, std::max<std::size_t>(1, p.part_size));
    for (std::size_t j = 0; j < size; ++j) {
      part.push_back(g.vertex_names.size());
      g.vertex_names.push_back("v" + std::to_string(g.vertex_names.size() + 1));
    }
    g.parts.push_back(std::move(part));
  }
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < g.parts.size(); ++j) {
      for (std::size_t u : g.parts[i]) {
        for (std::size_t v : g.parts[j]) {
          if (rng.chance(p.edge_probability)) g.edges.emplace_back(u, v);
        }
      }
    }
  }
  return g;
}

LcsInstance random_lcs(Rng& rng, const RandomSourceParams& p) {
  LcsInstance lcs;
  const std::size_t sigma = std::clamp<std::size_t>(p.alphabet_size, 1, 26);
  for (std::size_t i = 0; i < std::max<std::size_t>(1, p.k); ++i) {
    std::string s;
    const std::size_t length = rng.between(0, p.string_length);
    for (std::size_t u = 0; u < length; ++u) {
      s.push_back(static_cast<char>('a' + rng.below(sigma)));
    }
    lcs.strings.push_back(std::move(s));
  }
  lcs.target_length = rng.between(0, p.max_target);
  return lcs;
}

CircuitInstance random_circuit(Rng& rng, const RandomSourceParams& p) {
  CircuitInstance c;
  const std::size_t n = std::max<std::size_t>(1, p.num_inputs);
  for (std::size_t i = 0; i < n; ++i) {
    c.input_names.push_back("x" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < p.num_gates; ++j) {
    const std::size_t available = c.num_nodes();
    Gate gate;
    gate.name = "g" + std::to_string(j + 1);
    if (rng.chance(0.4)) {
      gate.kind = GateKind::kNot;
      gate.inputs.push_back(rng.below(available));
    } else {
      gate.kind = GateKind::kAnd;
      const std::size_t fan_in = rng.between(1, std::min<std::size_t>(3, available));
      while (gate.inputs.size() < fan_in) {
        const std::size_t in = rng.below(available);
        if (std::find(gate.inputs.begin(), gate.inputs.end(), in) ==
            gate.inputs.end()) {
          gate.inputs.push_back(in);
        }
      }
      std::sort(gate.inputs.begin(), gate.inputs.end());
    }
    c.gates.push_back(std::move(gate));
  }
  c.output = c.num_nodes() - 1;
  c.weight_bound = rng.between(0, p.max_weight);
  return c;
}

PlanningInstance random_bool_planning(Rng& rng, const RandomSourceParams& p) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < std::max<std::size_t>(1, p.num_variables); ++i) {
    vars.push_back({"b" + std::to_string(i + 1), 2, {}});
  }
  std::vector<Action> actions = random_actions(rng, vars, p.num_actions);
  State initial = random_state(rng, vars);
  State target = initial;
  if (rng.chance(0.6)) {
    random_walk(rng, actions, target, rng.between(0, p.max_plan_length + 1));
  } else {
    target = random_state(rng, vars);
  }
  // Mention both values somewhere so the D-restriction sees a two-value
  // domain.
  bool has[2] = {false, false};
  for (const Action& a : actions) {
    for (const PartialState* ps : {&a.pre, &a.post}) {
      for (const auto& binding : *ps) has[binding.second] = true;
    }
  }
  for (Value value : {0, 1}) {
    if (!has[value]) {
      actions.push_back({"a" + std::to_string(actions.size() + 1), {},
                         {{rng.below(vars.size()), value}}});
    }
  }
  return PlanningInstance(std::move(vars), std::move(initial),
                          target.as_partial(), std::move(actions));
}

ReuseInstance random_casemod(Rng& rng, const RandomSourceParams& p) {
  std::vector<Variable> vars;
  const std::size_t max_domain = std::max<std::size_t>(1, p.max_domain);
  for (std::size_t i = 0; i < std::max<std::size_t>(1, p.num_variables); ++i) {
    const std::size_t domain =
        rng.between(std::min<std::size_t>(2, max_domain), max_domain);
    vars.push_back({"v" + std::to_string(i + 1), static_cast<int>(domain), {}});
  }
  std::vector<Action> actions = random_actions(rng, vars, p.num_actions);
  State initial = random_state(rng, vars);

  State stored_initial = initial;
  if (rng.chance(0.5)) {
    random_walk(rng, actions, stored_initial, rng.between(0, 3));
  } else {
    stored_initial = random_state(rng, vars);
  }
  State after_case = stored_initial;
  Plan plan = random_walk(rng, actions, after_case,
                          rng.between(0, p.max_plan_length));
  PartialState stored_goal = random_restriction(rng, after_case, 0.5);

  PartialState goal;
  if (rng.chance(0.6)) {
    State s = rng.chance(0.5) ? after_case : initial;
    random_walk(rng, actions, s, rng.between(0, 2));
    goal = random_restriction(rng, s, 0.5);
    if (goal.empty()) {
      const VarId var = rng.below(s.size());
      goal.set(var, s[var]);
    }
  } else {
    goal = random_partial(rng, vars, 0.4);
  }

  std::vector<ActionId> glue;
  for (ActionId id = 0; id < actions.size(); ++id) {
    if (rng.chance(0.6)) glue.push_back(id);
  }
  const std::size_t budget = rng.between(0, p.max_budget);

  auto pi = std::make_shared<const PlanningInstance>(
      std::move(vars), std::move(initial), std::move(goal), std::move(actions));
  Case stored{std::move(stored_initial), std::move(stored_goal),
              std::move(plan)};
  return ReuseInstance(std::move(pi), std::move(stored),
                       ReuseQuery{std::move(glue), budget, Flavor::kCaseMod,
                                  false});
}

SourceInstance gen_random_source(SourceKind kind, std::uint64_t seed,
                                 const RandomSourceParams& params) {
  Rng rng(seed);
  switch (kind) {
    case SourceKind::kPClique: return random_pclique(rng, params);
    case SourceKind::kLcs: return random_lcs(rng, params);
    case SourceKind::kCircuit: return random_circuit(rng, params);
    case SourceKind::kBoolPlanning: return random_bool_planning(rng, params);
    case SourceKind::kCaseMod: return random_casemod(rng, params);
  }
  throw InvalidArgument("unknown source kind");
}

}  // namespace casemod
