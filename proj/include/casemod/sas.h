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

// Ground SAS+ planning: variables with finite domains, partial and total
// states, actions with pre/postconditions, and plan application where an
// inapplicable action leaves the state unchanged.

#ifndef CASEMOD_SAS_H_
#define CASEMOD_SAS_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace casemod {

using VarId = std::size_t;
using ActionId = std::size_t;
/// Dense index into a variable's domain, 0..domain_size-1.
using Value = int;

/// True if `name` can be used as a variable, action, value or vertex name:
/// non-empty, printable, and free of whitespace, '=', '#' and ';'.
bool is_valid_identifier(std::string_view name);

struct Variable {
  std::string name;
  int domain_size = 1;
  // Optional symbolic names for the domain values. Either empty or exactly
  // domain_size entries. Only the text format looks at these.
  std::vector<std::string> value_labels;

  bool operator==(const Variable&) const = default;
};

/// Assignment to a subset of the variables, kept sorted by variable id.
class PartialState {
 public:
  using Binding = std::pair<VarId, Value>;

  PartialState() = default;
  PartialState(std::initializer_list<Binding> bindings);
  /// Throws InvalidArgument if a variable is bound twice.
  explicit PartialState(std::vector<Binding> bindings);

  std::optional<Value> get(VarId var) const;
  bool binds(VarId var) const { return get(var).has_value(); }
  /// Binds `var`, overwriting any previous binding.
  void set(VarId var, Value value);

  std::span<const Binding> bindings() const { return bindings_; }
  std::vector<VarId> vars() const;
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  bool operator==(const PartialState&) const = default;

 private:
  std::vector<Binding> bindings_;
};

/// Total assignment, one value per variable in id order. The value vector is
/// the canonical encoding: equality and hashing are structural.
class State {
 public:
  State() = default;
  explicit State(std::vector<Value> values) : values_(std::move(values)) {}
  State(std::initializer_list<Value> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  Value operator[](VarId var) const { return values_[var]; }
  std::span<const Value> values() const { return values_; }

  /// Copy of this state with every binding of `p` written over it.
  State overwritten(const PartialState& p) const;
  PartialState as_partial() const;
  std::size_t hash() const;

  bool operator==(const State&) const = default;
  auto operator<=>(const State&) const = default;

 private:
  std::vector<Value> values_;
};

struct StateHash {
  std::size_t operator()(const State& s) const { return s.hash(); }
};

struct Action {
  std::string name;
  PartialState pre;
  PartialState post;

  /// Actions with an empty postcondition are accepted but never change a
  /// state.
  bool is_noop() const { return post.empty(); }
  bool operator==(const Action&) const = default;
};

/// Sequence of action ids into the owning instance's action list.
using Plan = std::vector<ActionId>;

/// Pi = (V, I, G, A). Validated on construction, immutable afterwards.
class PlanningInstance {
 public:
  /// Throws InvalidArgument on any range, arity or naming violation.
  PlanningInstance(std::vector<Variable> variables, State initial,
                   PartialState goal, std::vector<Action> actions);

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_actions() const { return actions_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(VarId id) const { return variables_.at(id); }
  const State& initial() const { return initial_; }
  const PartialState& goal() const { return goal_; }
  const std::vector<Action>& actions() const { return actions_; }
  const Action& action(ActionId id) const { return actions_.at(id); }

  std::optional<VarId> find_variable(std::string_view name) const;
  std::optional<ActionId> find_action(std::string_view name) const;

  /// Every domain has at most two values.
  bool is_boolean() const;
  /// The goal binds every variable.
  bool goal_is_complete() const;
  /// Ids of actions with an empty postcondition.
  std::vector<ActionId> noop_actions() const;

  /// Throws InvalidArgument unless `s` is a total state over this instance.
  void check_state(const State& s) const;
  /// Throws InvalidArgument unless `p` binds only known variables to values
  /// in their domains.
  void check_partial(const PartialState& p) const;
  /// Throws InvalidArgument unless every step names an action.
  void check_plan(std::span<const ActionId> plan) const;

  bool operator==(const PlanningInstance& other) const;

 private:
  std::vector<Variable> variables_;
  State initial_;
  PartialState goal_;
  std::vector<Action> actions_;
  std::unordered_map<std::string, VarId> var_index_;
  std::unordered_map<std::string, ActionId> action_index_;
};

/// (s restricted to vars): binds exactly vars intersected with the variables
/// bound in s. Throws InvalidArgument for ids outside the state's universe.
PartialState restrict(const State& s, std::span<const VarId> vars);
PartialState restrict(const PartialState& p, std::span<const VarId> vars,
                      std::size_t num_variables);

/// restrict(s, vars(p)) == p.
bool satisfies(const State& s, const PartialState& p);

bool is_applicable(const State& s, const Action& a);

/// Skip semantics: returns `s` unchanged when pre(a) does not hold.
State apply_action(const State& s, const Action& a);

/// Left fold of apply_action over the steps of `plan`.
State apply_plan(const PlanningInstance& instance, const State& s,
                 std::span<const ActionId> plan);

bool is_solution_plan(const PlanningInstance& instance,
                      std::span<const ActionId> plan);

std::string to_string(const State& s);
std::string to_string(const PlanningInstance& instance,
                      const PartialState& p);

}  // namespace casemod

#endif  // CASEMOD_SAS_H_
