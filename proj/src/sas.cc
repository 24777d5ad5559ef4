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

#include "casemod/sas.h"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "casemod/error.h"

namespace casemod {

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  for (unsigned char ch : name) {
    if (ch <= 0x20 || ch == 0x7f) return false;
    if (ch == '=' || ch == '#' || ch == ';') return false;
  }
  return true;
}

// PartialState ---------------------------------------------------------------

PartialState::PartialState(std::initializer_list<Binding> bindings)
    : PartialState(std::vector<Binding>(bindings)) {}

PartialState::PartialState(std::vector<Binding> bindings)
    : bindings_(std::move(bindings)) {
  std::sort(bindings_.begin(), bindings_.end());
  for (std::size_t i = 1; i < bindings_.size(); ++i) {
    if (bindings_[i].first == bindings_[i - 1].first) {
      throw InvalidArgument("partial state binds variable " +
                            std::to_string(bindings_[i].first) + " twice");
    }
  }
}

std::optional<Value> PartialState::get(VarId var) const {
  auto it = std::lower_bound(
      bindings_.begin(), bindings_.end(), var,
      [](const Binding& b, VarId v) { return b.first < v; });
  if (it == bindings_.end() || it->first != var) return std::nullopt;
  return it->second;
}

void PartialState::set(VarId var, Value value) {
  auto it = std::lower_bound(
      bindings_.begin(), bindings_.end(), var,
      [](const Binding& b, VarId v) { return b.first < v; });
  if (it != bindings_.end() && it->first == var) {
    it->second = value;
  } else {
    bindings_.insert(it, {var, value});
  }
}

std::vector<VarId> PartialState::vars() const {
  std::vector<VarId> out;
  out.reserve(bindings_.size());
  for (const auto& [var, value] : bindings_) out.push_back(var);
  return out;
}

// State ----------------------------------------------------------------------

State State::overwritten(const PartialState& p) const {
  std::vector<Value> values = values_;
  for (const auto& [var, value] : p) values[var] = value;
  return State(std::move(values));
}

PartialState State::as_partial() const {
  std::vector<PartialState::Binding> bindings;
  bindings.reserve(values_.size());
  for (VarId v = 0; v < values_.size(); ++v) bindings.emplace_back(v, values_[v]);
  return PartialState(std::move(bindings));
}

std::size_t State::hash() const {
  // FNV-1a over the value sequence.
  std::size_t h = 1469598103934665603ull;
  for (Value v : values_) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
    h *= 1099511628211ull;
  }
  return h;
}

// PlanningInstance -----------------------------------------------------------

PlanningInstance::PlanningInstance(std::vector<Variable> variables,
                                   State initial, PartialState goal,
                                   std::vector<Action> actions)
    : variables_(std::move(variables)),
      initial_(std::move(initial)),
      goal_(std::move(goal)),
      actions_(std::move(actions)) {
  for (VarId id = 0; id < variables_.size(); ++id) {
    const Variable& var = variables_[id];
    if (!is_valid_identifier(var.name)) {
      throw InvalidArgument("invalid variable name '" + var.name + "'");
    }
    if (var.domain_size < 1) {
      throw InvalidArgument("variable " + var.name + " has an empty domain");
    }
    if (!var.value_labels.empty()) {
      if (var.value_labels.size() != static_cast<std::size_t>(var.domain_size)) {
        throw InvalidArgument("variable " + var.name + " has " +
                              std::to_string(var.value_labels.size()) +
                              " value labels for a domain of size " +
                              std::to_string(var.domain_size));
      }
      std::unordered_set<std::string> seen;
      for (const auto& label : var.value_labels) {
        if (!is_valid_identifier(label) || !seen.insert(label).second) {
          throw InvalidArgument("bad or duplicate value label '" + label +
                                "' on variable " + var.name);
        }
      }
    }
    if (!var_index_.emplace(var.name, id).second) {
      throw InvalidArgument("duplicate variable name " + var.name);
    }
  }
  check_state(initial_);
  check_partial(goal_);
  for (ActionId id = 0; id < actions_.size(); ++id) {
    const Action& a = actions_[id];
    if (!is_valid_identifier(a.name)) {
      throw InvalidArgument("invalid action name '" + a.name + "'");
    }
    if (!action_index_.emplace(a.name, id).second) {
      throw InvalidArgument("duplicate action name " + a.name);
    }
    check_partial(a.pre);
    check_partial(a.post);
  }
}

std::optional<VarId> PlanningInstance::find_variable(std::string_view name) const {
  auto it = var_index_.find(std::string(name));
  if (it == var_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ActionId> PlanningInstance::find_action(std::string_view name) const {
  auto it = action_index_.find(std::string(name));
  if (it == action_index_.end()) return std::nullopt;
  return it->second;
}

bool PlanningInstance::is_boolean() const {
  return std::all_of(variables_.begin(), variables_.end(),
                     [](const Variable& v) { return v.domain_size <= 2; });
}

bool PlanningInstance::goal_is_complete() const {
  return goal_.size() == variables_.size();
}

std::vector<ActionId> PlanningInstance::noop_actions() const {
  std::vector<ActionId> out;
  for (ActionId id = 0; id < actions_.size(); ++id) {
    if (actions_[id].is_noop()) out.push_back(id);
  }
  return out;
}

void PlanningInstance::check_state(const State& s) const {
  if (s.size() != variables_.size()) {
    throw InvalidArgument("state has " + std::to_string(s.size()) +
                          " values, expected " +
                          std::to_string(variables_.size()));
  }
  for (VarId v = 0; v < s.size(); ++v) {
    if (s[v] < 0 || s[v] >= variables_[v].domain_size) {
      throw InvalidArgument("value " + std::to_string(s[v]) +
                            " out of range for variable " + variables_[v].name);
    }
  }
}

void PlanningInstance::check_partial(const PartialState& p) const {
  for (const auto& [var, value] : p) {
    if (var >= variables_.size()) {
      throw InvalidArgument("unknown variable id " + std::to_string(var));
    }
    if (value < 0 || value >= variables_[var].domain_size) {
      throw InvalidArgument("value " + std::to_string(value) +
                            " out of range for variable " +
                            variables_[var].name);
    }
  }
}

void PlanningInstance::check_plan(std::span<const ActionId> plan) const {
  for (ActionId id : plan) {
    if (id >= actions_.size()) {
      throw InvalidArgument("plan refers to unknown action id " +
                            std::to_string(id));
    }
  }
}

bool PlanningInstance::operator==(const PlanningInstance& other) const {
  return variables_ == other.variables_ && initial_ == other.initial_ &&
         goal_ == other.goal_ && actions_ == other.actions_;
}

// Semantics ------------------------------------------------------------------

PartialState restrict(const State& s, std::span<const VarId> vars) {
  PartialState out;
  for (VarId v : vars) {
    if (v >= s.size()) {
      throw InvalidArgument("restrict: unknown variable id " + std::to_string(v));
    }
    out.set(v, s[v]);
  }
  return out;
}

PartialState restrict(const PartialState& p, std::span<const VarId> vars,
                      std::size_t num_variables) {
  PartialState out;
  for (VarId v : vars) {
    if (v >= num_variables) {
      throw InvalidArgument("restrict: unknown variable id " + std::to_string(v));
    }
    if (auto value = p.get(v)) out.set(v, *value);
  }
  return out;
}

bool satisfies(const State& s, const PartialState& p) {
  for (const auto& [var, value] : p) {
    if (var >= s.size()) {
      throw InvalidArgument("satisfies: partial state binds variable " +
                            std::to_string(var) + " outside a state of size " +
                            std::to_string(s.size()));
    }
    if (s[var] != value) return false;
  }
  return true;
}

bool is_applicable(const State& s, const Action& a) {
  return satisfies(s, a.pre);
}

State apply_action(const State& s, const Action& a) {
  if (!is_applicable(s, a)) return s;
  for (const auto& [var, value] : a.post) {
    if (var >= s.size()) {
      throw InvalidArgument("action " + a.name +
                            " writes a variable outside the state");
    }
  }
  return s.overwritten(a.post);
}

State apply_plan(const PlanningInstance& instance, const State& s,
                 std::span<const ActionId> plan) {
  instance.check_plan(plan);
  State current = s;
  for (ActionId id : plan) {
    const Action& a = instance.action(id);
    if (is_applicable(current, a)) current = current.overwritten(a.post);
  }
  return current;
}

bool is_solution_plan(const PlanningInstance& instance,
                      std::span<const ActionId> plan) {
  return satisfies(apply_plan(instance, instance.initial(), plan),
                   instance.goal());
}

std::string to_string(const State& s) {
  std::ostringstream out;
  out << '(';
  for (VarId v = 0; v < s.size(); ++v) {
    if (v) out << ',';
    out << s[v];
  }
  out << ')';
  return out.str();
}

std::string to_string(const PlanningInstance& instance, const PartialState& p) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [var, value] : p) {
    if (!first) out << ", ";
    first = false;
    out << instance.variable(var).name << "=" << value;
  }
  out << '}';
  return out.str();
}

}  // namespace casemod
