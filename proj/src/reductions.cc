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

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "casemod/error.h"

namespace casemod {

namespace {

std::vector<ActionId> all_actions(std::size_t n) {
  std::vector<ActionId> ids(n);
  for (ActionId id = 0; id < n; ++id) ids[id] = id;
  return ids;
}

// First of `base`, `base.1`, `base.2`, ... not in `taken`.
template <typename Taken>
std::string fresh_name(const std::string& base, Taken taken) {
  if (!taken(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + "." + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

// Case (c, J) = (epsilon, G) over a planning instance with a complete goal.
ReuseInstance goal_case_instance(std::shared_ptr<const PlanningInstance> pi,
                                 std::size_t budget) {
  std::vector<Value> goal_values(pi->num_variables());
  for (const auto& [var, value] : pi->goal()) goal_values[var] = value;
  Case stored{State(std::move(goal_values)), pi->goal(), {}};
  ReuseQuery query{all_actions(pi->num_actions()), budget, Flavor::kCaseMod,
                   false};
  return ReuseInstance(std::move(pi), std::move(stored), std::move(query));
}

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

// Source problem types -------------------------------------------------------

bool PartitionedCliqueInstance::adjacent(std::size_t u, std::size_t v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

void PartitionedCliqueInstance::validate() const {
  std::unordered_set<std::string> names;
  for (const auto& name : vertex_names) {
    if (!is_valid_identifier(name) || name == "*" || !names.insert(name).second) {
      throw InvalidArgument("bad or duplicate vertex name '" + name + "'");
    }
  }
  std::vector<bool> placed(vertex_names.size(), false);
  for (const auto& part : parts) {
    for (std::size_t v : part) {
      if (v >= vertex_names.size()) throw InvalidArgument("unknown vertex in part");
      if (placed[v]) {
        throw InvalidArgument("vertex " + vertex_names[v] +
                              " appears in two parts");
      }
      placed[v] = true;
    }
  }
  for (const auto& [u, v] : edges) {
    if (u >= vertex_names.size() || v >= vertex_names.size()) {
      throw InvalidArgument("edge refers to an unknown vertex");
    }
    if (u == v) throw InvalidArgument("self-loop on " + vertex_names[u]);
  }
}

std::vector<char> LcsInstance::alphabet() const {
  std::set<char> symbols;
  for (const auto& s : strings) symbols.insert(s.begin(), s.end());
  return {symbols.begin(), symbols.end()};
}

void LcsInstance::validate() const {
  if (strings.empty()) throw InvalidArgument("LCS instance without strings");
  for (const auto& s : strings) {
    for (char ch : s) {
      if (!is_valid_identifier(std::string_view(&ch, 1)) || ch == '*') {
        throw InvalidArgument(std::string("invalid LCS symbol '") + ch + "'");
      }
    }
  }
}

const std::string& CircuitInstance::node_name(std::size_t node) const {
  if (node < input_names.size()) return input_names[node];
  return gates.at(node - input_names.size()).name;
}

void CircuitInstance::validate() const {
  std::unordered_set<std::string> names;
  for (std::size_t node = 0; node < num_nodes(); ++node) {
    const std::string& name = node_name(node);
    if (!is_valid_identifier(name) || !names.insert(name).second) {
      throw InvalidArgument("bad or duplicate circuit node name '" + name + "'");
    }
  }
  for (std::size_t j = 0; j < gates.size(); ++j) {
    const Gate& gate = gates[j];
    const std::size_t self = num_inputs() + j;
    if (gate.kind == GateKind::kNot && gate.inputs.size() != 1) {
      throw InvalidArgument("NOT gate " + gate.name + " needs exactly one input");
    }
    if (gate.kind == GateKind::kAnd && gate.inputs.empty()) {
      throw InvalidArgument("AND gate " + gate.name + " has no inputs");
    }
    for (std::size_t in : gate.inputs) {
      if (in >= self) {
        throw InvalidArgument("gate " + gate.name +
                              " reads a node that is not earlier in "
                              "topological order");
      }
    }
  }
  if (output >= num_nodes()) throw InvalidArgument("circuit output out of range");
}

bool CircuitInstance::evaluate(const std::vector<bool>& inputs) const {
  if (inputs.size() != num_inputs()) {
    throw InvalidArgument("circuit evaluation needs one value per input");
  }
  std::vector<bool> value(inputs);
  value.resize(num_nodes());
  for (std::size_t j = 0; j < gates.size(); ++j) {
    const Gate& gate = gates[j];
    bool out;
    if (gate.kind == GateKind::kNot) {
      out = !value[gate.inputs[0]];
    } else {
      out = std::all_of(gate.inputs.begin(), gate.inputs.end(),
                        [&](std::size_t in) { return value[in]; });
    }
    value[num_inputs() + j] = out;
  }
  return value[output];
}

ReuseInstance KStepProblem::as_reuse_instance() const {
  ReuseQuery query{all_actions(instance->num_actions()), k, Flavor::kKStep,
                   false};
  return ReuseInstance(instance, std::nullopt, std::move(query));
}

// Planning reductions --------------------------------------------------------

ReuseInstance reduce_kstep_to_L(std::shared_ptr<const PlanningInstance> instance,
                                std::size_t k) {
  if (!instance->goal_is_complete()) {
    throw InvalidArgument("k-step to L-CaseMod needs a complete goal state");
  }
  return goal_case_instance(std::move(instance), k);
}

KStepProblem reduce_L_to_kstep(const ReuseInstance& r) {
  if (r.flavor() != Flavor::kCaseMod) {
    throw InvalidArgument("L-CaseMod to k-step needs a casemod instance");
  }
  const PlanningInstance& pi = r.instance();
  const Case& c = r.case_data();

  std::vector<Variable> variables = pi.variables();
  const VarId star = variables.size();
  variables.push_back(
      {fresh_name("star", [&](const std::string& n) {
         return pi.find_variable(n).has_value();
       }),
       2,
       {}});

  std::vector<Action> actions;
  for (ActionId id : r.glue_actions()) actions.push_back(pi.action(id));
  PartialState jump_pre = c.stored_initial.as_partial();
  jump_pre.set(star, 0);
  PartialState jump_post = apply_plan(pi, c.stored_initial, c.plan).as_partial();
  jump_post.set(star, 1);
  const std::string jump_name = fresh_name("jump", [&](const std::string& n) {
    return std::any_of(actions.begin(), actions.end(),
                       [&](const Action& a) { return a.name == n; });
  });
  actions.push_back({jump_name, std::move(jump_pre), std::move(jump_post)});

  std::vector<Value> initial(pi.initial().values().begin(),
                             pi.initial().values().end());
  initial.push_back(0);
  PartialState goal = pi.goal();
  goal.set(star, 1);

  KStepProblem out;
  out.instance = std::make_shared<const PlanningInstance>(
      std::move(variables), State(std::move(initial)), std::move(goal),
      std::move(actions));
  out.k = r.budget() + 1;
  return out;
}

ReuseInstance reduce_lcs_to_V(const LcsInstance& lcs) {
  lcs.validate();
  const std::size_t k = lcs.strings.size();
  const std::size_t m = lcs.target_length;
  const std::vector<char> sigma = lcs.alphabet();
  const Value star = static_cast<Value>(sigma.size());
  enum : Value { kNone = 0, kRead = 1, kUsed = 2 };

  std::vector<Variable> vars;
  auto head = [](std::size_t i) { return i; };
  auto symbol = [k](std::size_t i) { return k + i; };
  auto token = [k](std::size_t i) { return 2 * k + i; };
  const VarId w = 3 * k;
  std::vector<std::string> symbol_labels;
  for (char ch : sigma) symbol_labels.emplace_back(1, ch);
  symbol_labels.emplace_back("*");
  for (std::size_t i = 0; i < k; ++i) {
    vars.push_back({"v." + idx(i + 1),
                    static_cast<int>(lcs.strings[i].size() + 1), {}});
  }
  for (std::size_t i = 0; i < k; ++i) {
    vars.push_back({"s." + idx(i + 1), static_cast<int>(sigma.size() + 1),
                    symbol_labels});
  }
  for (std::size_t i = 0; i < k; ++i) {
    vars.push_back({"t." + idx(i + 1), 3, {"none", "read", "used"}});
  }
  vars.push_back({"w", static_cast<int>(m + 1), {}});

  auto symbol_index = [&](char ch) {
    return static_cast<Value>(std::lower_bound(sigma.begin(), sigma.end(), ch) -
                              sigma.begin());
  };

  std::vector<Action> actions;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string tape = idx(i + 1);
    for (std::size_t u = 0; u < lcs.strings[i].size(); ++u) {
      const Value at = static_cast<Value>(u);
      actions.push_back({"skip." + tape + "." + idx(u) + ".none",
                         {{head(i), at}, {token(i), kNone}},
                         {{head(i), at + 1}, {token(i), kNone}}});
      actions.push_back({"skip." + tape + "." + idx(u) + ".used",
                         {{head(i), at}, {token(i), kUsed}},
                         {{head(i), at + 1}, {token(i), kNone}}});
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t u = 0; u < lcs.strings[i].size(); ++u) {
      actions.push_back({"read." + idx(i + 1) + "." + idx(u),
                         {{head(i), static_cast<Value>(u)}, {token(i), kNone}},
                         {{symbol(i), symbol_index(lcs.strings[i][u])},
                          {token(i), kRead}}});
    }
  }
  for (std::size_t u = 0; u < m; ++u) {
    for (char ch : sigma) {
      PartialState pre;
      PartialState post;
      for (std::size_t i = 0; i < k; ++i) {
        pre.set(token(i), kRead);
        pre.set(symbol(i), symbol_index(ch));
        post.set(token(i), kUsed);
      }
      pre.set(w, static_cast<Value>(u));
      post.set(w, static_cast<Value>(u + 1));
      actions.push_back({"check." + idx(u) + "." + std::string(1, ch),
                         std::move(pre), std::move(post)});
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    actions.push_back(
        {"finish." + idx(i + 1),
         {{head(i), static_cast<Value>(lcs.strings[i].size())}},
         {{token(i), kNone}, {symbol(i), star}}});
  }

  std::vector<Value> initial(3 * k + 1, 0);
  PartialState goal;
  for (std::size_t i = 0; i < k; ++i) {
    initial[symbol(i)] = star;
    initial[token(i)] = kNone;
    goal.set(head(i), static_cast<Value>(lcs.strings[i].size()));
    goal.set(symbol(i), star);
    goal.set(token(i), kNone);
  }
  goal.set(w, static_cast<Value>(m));

  std::size_t total_length = 0;
  for (const auto& s : lcs.strings) total_length += s.size();
  auto pi = std::make_shared<const PlanningInstance>(
      std::move(vars), State(std::move(initial)), std::move(goal),
      std::move(actions));
  return goal_case_instance(std::move(pi), total_length + (k + 1) * m + k);
}

ReuseInstance reduce_pclique_to_LV(const PartitionedCliqueInstance& g) {
  g.validate();
  const std::size_t k = g.k();
  if (k == 1 && g.parts[0].empty()) {
    throw InvalidArgument(
        "partitioned clique with k = 1 and an empty part has no gadget");
  }
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::string> labels;
    for (std::size_t v : g.parts[i]) labels.push_back(g.vertex_names[v]);
    labels.emplace_back("*");
    vars.push_back({"x." + idx(i + 1), static_cast<int>(labels.size()),
                    std::move(labels)});
  }
  // y.i.j for i < j, in lexicographic order of (i, j).
  std::vector<std::vector<VarId>> pair_var(k, std::vector<VarId>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      pair_var[i][j] = vars.size();
      vars.push_back({"y." + idx(i + 1) + "." + idx(j + 1), 2, {}});
    }
  }

  std::vector<Action> actions;
  for (std::size_t i = 0; i < k; ++i) {
    const Value star = static_cast<Value>(g.parts[i].size());
    for (std::size_t d = 0; d < g.parts[i].size(); ++d) {
      actions.push_back({"guess." + idx(i + 1) + "." +
                             g.vertex_names[g.parts[i][d]],
                         {},
                         {{i, static_cast<Value>(d)}}});
    }
    for (std::size_t d = 0; d < g.parts[i].size(); ++d) {
      actions.push_back({"clear." + idx(i + 1) + "." +
                             g.vertex_names[g.parts[i][d]],
                         {},
                         {{i, star}}});
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t a = 0; a < g.parts[i].size(); ++a) {
        for (std::size_t b = 0; b < g.parts[j].size(); ++b) {
          const std::size_t v = g.parts[i][a];
          const std::size_t u = g.parts[j][b];
          if (!g.adjacent(v, u)) continue;
          actions.push_back({"check." + idx(i + 1) + "." + idx(j + 1) + "." +
                                 g.vertex_names[v] + "." + g.vertex_names[u],
                             {{i, static_cast<Value>(a)},
                              {j, static_cast<Value>(b)}},
                             {{pair_var[i][j], 1}}});
        }
      }
    }
  }

  std::vector<Value> initial(vars.size(), 0);
  PartialState goal;
  for (std::size_t i = 0; i < k; ++i) {
    initial[i] = static_cast<Value>(g.parts[i].size());
    goal.set(i, static_cast<Value>(g.parts[i].size()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) goal.set(pair_var[i][j], 1);
  }
  auto pi = std::make_shared<const PlanningInstance>(
      std::move(vars), State(std::move(initial)), std::move(goal),
      std::move(actions));
  return goal_case_instance(std::move(pi), 2 * k + k * (k - 1) / 2);
}

ReuseInstance reduce_bool_to_D(std::shared_ptr<const PlanningInstance> instance,
                               std::optional<std::size_t> budget) {
  if (!instance->is_boolean()) {
    throw InvalidArgument("D-CaseMod reduction needs a Boolean instance");
  }
  if (!instance->goal_is_complete()) {
    throw InvalidArgument("D-CaseMod reduction needs a complete goal state");
  }
  std::size_t m;
  if (budget) {
    m = *budget;
  } else if (instance->num_variables() >=
             static_cast<std::size_t>(std::numeric_limits<std::size_t>::digits)) {
    m = std::numeric_limits<std::size_t>::max();
  } else {
    m = std::size_t{1} << instance->num_variables();
  }
  return goal_case_instance(std::move(instance), m);
}

ReuseInstance reduce_wsat_to_planmod(const CircuitInstance& circuit) {
  circuit.validate();
  const std::size_t n = circuit.num_inputs();
  std::vector<Variable> vars;
  for (std::size_t node = 0; node < circuit.num_nodes(); ++node) {
    if (circuit.node_name(node) == "sigma") {
      throw InvalidArgument("circuit node name 'sigma' is reserved");
    }
    vars.push_back({circuit.node_name(node), 2, {}});
  }
  const VarId sigma = vars.size();
  vars.push_back({"sigma", 2, {}});

  std::vector<Action> actions;
  for (std::size_t i = 0; i < n; ++i) {
    actions.push_back({"set." + circuit.input_names[i], {{sigma, 1}}, {{i, 1}}});
  }
  const ActionId on = actions.size();
  actions.push_back({"on", {}, {{sigma, 1}}});
  const ActionId off = actions.size();
  actions.push_back({"off", {}, {{sigma, 0}}});
  const ActionId first_gate = actions.size();
  for (std::size_t j = 0; j < circuit.gates.size(); ++j) {
    const Gate& gate = circuit.gates[j];
    PartialState pre;
    const Value want = gate.kind == GateKind::kNot ? 0 : 1;
    for (std::size_t in : gate.inputs) pre.set(in, want);
    actions.push_back({"gate." + gate.name, std::move(pre), {{n + j, 1}}});
  }

  Plan plan;
  for (std::size_t i = 0; i < n; ++i) {
    plan.push_back(off);
    plan.push_back(i);
  }
  for (std::size_t j = 0; j < circuit.gates.size(); ++j) {
    plan.push_back(first_gate + j);
  }

  auto pi = std::make_shared<const PlanningInstance>(
      std::move(vars), State(std::vector<Value>(circuit.num_nodes() + 1, 0)),
      PartialState{{circuit.output, 1}}, std::move(actions));
  Case stored{pi->initial(), {}, std::move(plan)};
  ReuseQuery query{{on}, circuit.weight_bound, Flavor::kPlanMod, false};
  return ReuseInstance(std::move(pi), std::move(stored), std::move(query));
}

// Oracles --------------------------------------------------------------------

bool oracle_lcs(const LcsInstance& lcs, std::size_t lattice_cap) {
  lcs.validate();
  if (lcs.target_length == 0) return true;
  const std::size_t k = lcs.strings.size();
  // Mixed-radix index over (p_1, ..., p_k), p_i in [0, |X_i|].
  std::vector<std::size_t> stride(k);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < k; ++i) {
    stride[i] = cells;
    const std::size_t radix = lcs.strings[i].size() + 1;
    if (cells > lattice_cap / radix) {
      throw ResourceLimitExceeded("LCS lattice exceeds " +
                                  std::to_string(lattice_cap) + " cells");
    }
    cells *= radix;
  }
  // best[p] = LCS length of the suffixes starting at p. Cells are filled in
  // decreasing index order, so every successor is final when read.
  std::vector<std::size_t> best(cells, 0);
  std::vector<std::size_t> pos(k);
  for (std::size_t cell = cells; cell-- > 0;) {
    std::size_t rest = cell;
    for (std::size_t i = k; i-- > 0;) {
      pos[i] = rest / stride[i];
      rest %= stride[i];
    }
    std::size_t value = 0;
    bool all_inside = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (pos[i] < lcs.strings[i].size()) {
        value = std::max(value, best[cell + stride[i]]);
      } else {
        all_inside = false;
      }
    }
    if (all_inside) {
      const char first = lcs.strings[0][pos[0]];
      bool match = true;
      std::size_t diagonal = cell;
      for (std::size_t i = 0; i < k; ++i) {
        match = match && lcs.strings[i][pos[i]] == first;
        diagonal += stride[i];
      }
      if (match) value = std::max(value, best[diagonal] + 1);
    }
    best[cell] = value;
  }
  return best[0] >= lcs.target_length;
}

bool oracle_pclique(const PartitionedCliqueInstance& g) {
  g.validate();
  const std::size_t k = g.k();
  std::vector<std::size_t> choice(k, 0);
  for (const auto& part : g.parts) {
    if (part.empty()) return false;
  }
  // Odometer over the Cartesian product of the parts.
  while (true) {
    bool clique = true;
    for (std::size_t i = 0; i < k && clique; ++i) {
      for (std::size_t j = i + 1; j < k && clique; ++j) {
        clique = g.adjacent(g.parts[i][choice[i]], g.parts[j][choice[j]]);
      }
    }
    if (clique) return true;
    std::size_t i = 0;
    while (i < k && ++choice[i] == g.parts[i].size()) choice[i++] = 0;
    if (i == k) return false;
  }
}

bool oracle_wsat(const CircuitInstance& circuit) {
  circuit.validate();
  const std::size_t n = circuit.num_inputs();
  const std::size_t k = std::min(circuit.weight_bound, n);
  std::vector<bool> inputs(n, false);
  // All subsets of size <= k, as increasing index tuples.
  std::vector<std::size_t> chosen;
  auto search = [&](auto& self, std::size_t from) -> bool {
    if (circuit.evaluate(inputs)) return true;
    if (chosen.size() == k) return false;
    for (std::size_t i = from; i < n; ++i) {
      inputs[i] = true;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
      inputs[i] = false;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace casemod
