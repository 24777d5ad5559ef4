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

#include "casemod/reuse.h"

#include <algorithm>
#include <set>
#include <string>

#include "casemod/error.h"

namespace casemod {

const char* to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::kCaseMod: return "casemod";
    case Flavor::kCaseModStar: return "casemod-star";
    case Flavor::kInfixGeneral: return "infix-general";
    case Flavor::kPlanMod: return "planmod";
    case Flavor::kKStep: return "kstep";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(std::string_view text) {
  for (Flavor f : {Flavor::kCaseMod, Flavor::kCaseModStar,
                   Flavor::kInfixGeneral, Flavor::kPlanMod, Flavor::kKStep}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

// ReuseInstance --------------------------------------------------------------

ReuseInstance::ReuseInstance(std::shared_ptr<const PlanningInstance> instance,
                             std::optional<Case> stored_case, ReuseQuery query)
    : instance_(std::move(instance)),
      case_(std::move(stored_case)),
      query_(std::move(query)) {
  if (!instance_) throw InvalidArgument("reuse instance without a planning instance");
  if (case_) {
    instance_->check_state(case_->stored_initial);
    instance_->check_partial(case_->stored_goal);
    instance_->check_plan(case_->plan);
  } else if (query_.flavor != Flavor::kKStep) {
    throw InvalidArgument(std::string("flavor ") + to_string(query_.flavor) +
                          " requires a case");
  }
  auto& glue = query_.glue_actions;
  instance_->check_plan(glue);
  std::sort(glue.begin(), glue.end());
  glue.erase(std::unique(glue.begin(), glue.end()), glue.end());
}

const Case& ReuseInstance::case_data() const {
  if (!case_) throw InvalidArgument("reuse instance has no case");
  return *case_;
}

bool ReuseInstance::in_glue(ActionId id) const {
  return std::binary_search(query_.glue_actions.begin(),
                            query_.glue_actions.end(), id);
}

ReuseInstance ReuseInstance::with_query(ReuseQuery query) const {
  return ReuseInstance(instance_, case_, std::move(query));
}

ReuseInstance ReuseInstance::with_flavor(Flavor flavor) const {
  ReuseQuery q = query_;
  q.flavor = flavor;
  return with_query(std::move(q));
}

ReuseInstance ReuseInstance::with_budget(std::size_t budget) const {
  ReuseQuery q = query_;
  q.budget = budget;
  return with_query(std::move(q));
}

ReuseInstance ReuseInstance::with_glue(std::vector<ActionId> glue) const {
  ReuseQuery q = query_;
  q.glue_actions = std::move(glue);
  return with_query(std::move(q));
}

bool ReuseInstance::case_consistent() const {
  if (!case_) return true;
  return satisfies(apply_plan(*instance_, case_->stored_initial, case_->plan),
                   case_->stored_goal);
}

bool ReuseInstance::operator==(const ReuseInstance& other) const {
  return *instance_ == *other.instance_ && case_ == other.case_ &&
         query_ == other.query_;
}

ParamReport compute_parameters(const ReuseInstance& r) {
  ParamReport report;
  report.k_L = r.budget();
  report.k_A = r.glue_actions().size();
  std::set<VarId> vars;
  std::set<Value> values;
  for (ActionId id : r.glue_actions()) {
    const Action& a = r.instance().action(id);
    for (const PartialState* p : {&a.pre, &a.post}) {
      for (const auto& [var, value] : *p) {
        vars.insert(var);
        values.insert(value);
      }
    }
  }
  report.k_V = vars.size();
  report.k_D = values.size();
  return report;
}

// Certificates ---------------------------------------------------------------

Certificate Certificate::casemod(Plan glue, std::size_t split) {
  Certificate c;
  c.flavor = Flavor::kCaseMod;
  c.glue = std::move(glue);
  c.split = split;
  return c;
}

Certificate Certificate::infix(Flavor flavor, Plan glue, std::size_t split,
                               std::size_t first, std::size_t last) {
  Certificate c;
  c.flavor = flavor;
  c.glue = std::move(glue);
  c.split = split;
  c.infix_first = first;
  c.infix_last = last;
  return c;
}

Certificate Certificate::empty(Flavor flavor, Plan glue, std::size_t split,
                               std::size_t first) {
  Certificate c;
  c.flavor = flavor;
  c.glue = std::move(glue);
  c.split = split;
  c.empty_infix = true;
  c.infix_first = first;
  c.infix_last = first - 1;
  return c;
}

Certificate Certificate::planmod(Plan glue, std::vector<std::size_t> positions) {
  Certificate c;
  c.flavor = Flavor::kPlanMod;
  c.glue = std::move(glue);
  c.positions = std::move(positions);
  return c;
}

Certificate Certificate::kstep(Plan plan) {
  Certificate c;
  c.flavor = Flavor::kKStep;
  c.glue = std::move(plan);
  return c;
}

Plan splice(std::span<const ActionId> glue, std::size_t split,
            std::span<const ActionId> reused) {
  if (split > glue.size()) throw InvalidArgument("split beyond glue length");
  Plan out;
  out.reserve(glue.size() + reused.size());
  out.insert(out.end(), glue.begin(), glue.begin() + split);
  out.insert(out.end(), reused.begin(), reused.end());
  out.insert(out.end(), glue.begin() + split, glue.end());
  return out;
}

Plan interleave(std::span<const ActionId> plan, std::span<const ActionId> glue,
                std::span<const std::size_t> positions) {
  if (positions.size() != glue.size()) {
    throw InvalidArgument("planmod certificate needs one position per glue step");
  }
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (positions[j] > plan.size()) {
      throw InvalidArgument("insertion position beyond the case plan");
    }
    if (j > 0 && positions[j] < positions[j - 1]) {
      throw InvalidArgument("insertion positions are not weakly increasing");
    }
  }
  Plan out;
  out.reserve(plan.size() + glue.size());
  std::size_t next_glue = 0;
  for (std::size_t step = 0; step <= plan.size(); ++step) {
    while (next_glue < glue.size() && positions[next_glue] == step) {
      out.push_back(glue[next_glue++]);
    }
    if (step < plan.size()) out.push_back(plan[step]);
  }
  return out;
}

namespace {

void expect_flavor(const Certificate& cert, Flavor flavor) {
  if (cert.flavor != flavor) {
    throw InvalidArgument(std::string("certificate flavor ") +
                          to_string(cert.flavor) + " where " +
                          to_string(flavor) + " was expected");
  }
}

// Glue drawn from A', within budget, split in range.
bool glue_admissible(const ReuseInstance& r, const Certificate& cert) {
  if (cert.glue.size() > r.budget()) return false;
  if (cert.split > cert.glue.size()) return false;
  return std::all_of(cert.glue.begin(), cert.glue.end(),
                     [&](ActionId id) { return r.in_glue(id); });
}

std::span<const ActionId> prefix(const Plan& plan, std::size_t n) {
  return std::span<const ActionId>(plan).first(n);
}

std::span<const ActionId> suffix(const Plan& plan, std::size_t from) {
  return std::span<const ActionId>(plan).subspan(from);
}

// Validates infix bounds against |c|; throws on out-of-range values.
void check_infix_bounds(const Certificate& cert, std::size_t plan_length) {
  if (cert.empty_infix) {
    if (cert.infix_first < 1 || cert.infix_first > plan_length + 1) {
      throw InvalidArgument("empty infix position out of range");
    }
    return;
  }
  if (cert.infix_first < 1 || cert.infix_first > cert.infix_last ||
      cert.infix_last > plan_length) {
    throw InvalidArgument("infix bounds " + std::to_string(cert.infix_first) +
                          ".." + std::to_string(cert.infix_last) +
                          " out of range for a plan of length " +
                          std::to_string(plan_length));
  }
}

}  // namespace

bool verify_casemod(const ReuseInstance& r, const Certificate& cert) {
  expect_flavor(cert, Flavor::kCaseMod);
  const Case& c = r.case_data();
  if (!glue_admissible(r, cert)) return false;
  const PlanningInstance& pi = r.instance();
  if (apply_plan(pi, pi.initial(), prefix(cert.glue, cert.split)) !=
      c.stored_initial) {
    return false;
  }
  return is_solution_plan(pi, splice(cert.glue, cert.split, c.plan));
}

bool verify_casemod_star(const ReuseInstance& r, const Certificate& cert) {
  expect_flavor(cert, Flavor::kCaseModStar);
  const Case& c = r.case_data();
  check_infix_bounds(cert, c.plan.size());
  if (cert.empty_infix && r.query().strict_infix && !c.plan.empty()) {
    return false;
  }
  if (!glue_admissible(r, cert)) return false;
  const PlanningInstance& pi = r.instance();
  const std::size_t begin = cert.infix_first - 1;
  const std::size_t end = cert.empty_infix ? begin : cert.infix_last;
  const State reuse_from =
      apply_plan(pi, c.stored_initial, prefix(c.plan, begin));
  if (apply_plan(pi, pi.initial(), prefix(cert.glue, cert.split)) !=
      reuse_from) {
    return false;
  }
  std::span<const ActionId> reused =
      std::span<const ActionId>(c.plan).subspan(begin, end - begin);
  return is_solution_plan(pi, splice(cert.glue, cert.split, reused));
}

bool verify_infix_general(const ReuseInstance& r, const Certificate& cert) {
  expect_flavor(cert, Flavor::kInfixGeneral);
  const Case& c = r.case_data();
  const bool empty = cert.empty_infix || cert.infix_first == 0;
  if (!empty) check_infix_bounds(cert, c.plan.size());
  if (!glue_admissible(r, cert)) return false;
  const PlanningInstance& pi = r.instance();
  State s = apply_plan(pi, pi.initial(), prefix(cert.glue, cert.split));
  if (!empty) {
    for (std::size_t j = cert.infix_first - 1; j < cert.infix_last; ++j) {
      const Action& a = pi.action(c.plan[j]);
      if (!is_applicable(s, a)) return false;
      s = apply_action(s, a);
    }
  }
  s = apply_plan(pi, s, suffix(cert.glue, cert.split));
  return satisfies(s, pi.goal());
}

bool verify_planmod(const ReuseInstance& r, const Certificate& cert) {
  expect_flavor(cert, Flavor::kPlanMod);
  const Case& c = r.case_data();
  Plan p = interleave(c.plan, cert.glue, cert.positions);
  if (cert.glue.size() > r.budget()) return false;
  for (ActionId id : cert.glue) {
    if (!r.in_glue(id)) return false;
  }
  return is_solution_plan(r.instance(), p);
}

bool verify_kstep(const PlanningInstance& instance,
                  std::span<const ActionId> plan, std::size_t k) {
  if (plan.size() > k) return false;
  return is_solution_plan(instance, plan);
}

bool verify(const ReuseInstance& r, const Certificate& cert) {
  switch (r.flavor()) {
    case Flavor::kCaseMod: return verify_casemod(r, cert);
    case Flavor::kCaseModStar: return verify_casemod_star(r, cert);
    case Flavor::kInfixGeneral: return verify_infix_general(r, cert);
    case Flavor::kPlanMod: return verify_planmod(r, cert);
    case Flavor::kKStep:
      expect_flavor(cert, Flavor::kKStep);
      return verify_kstep(r.instance(), cert.glue, r.budget());
  }
  return false;
}

}  // namespace casemod
