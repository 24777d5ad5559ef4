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

#include "casemod/instance_io.h"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "casemod/error.h"
#include "json.hpp"
#include "lexer.h"

namespace casemod {

using internal::fail;
using internal::Line;
using internal::Token;

namespace {

constexpr std::string_view kHeader = "casemod";
constexpr std::string_view kVersion = "v1";

const std::set<std::string_view> kPlanningSections = {"var", "values", "init",
                                                      "goal", "action"};
const std::set<std::string_view> kReuseSections = {
    "case-init", "case-goal", "case-plan", "glue",
    "budget",    "flavor",    "strict-infix"};
const std::set<std::string_view> kRepeatable = {"var", "values", "action"};

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text)
      : lines_(internal::lex_lines(text)),
        last_line_(std::max<std::size_t>(1, internal::count_lines(text))) {}

  Document parse() {
    read_header();
    group_sections();
    read_variables();
    read_value_labels();
    const Line& init_line = required("init");
    State initial = read_state(init_line, "init");
    PartialState goal = read_partial(required("goal"), 1);
    read_actions();

    std::optional<PlanningInstance> instance;
    try {
      instance.emplace(variables_, std::move(initial), std::move(goal),
                       actions_);
    } catch (const InvalidArgument& e) {
      fail(ParseErrorKind::kSyntax, init_line.number, 1, e.what());
    }
    const bool has_reuse = std::any_of(
        kReuseSections.begin(), kReuseSections.end(),
        [&](std::string_view s) { return sections_.count(std::string(s)) > 0; });
    if (!has_reuse) return std::move(*instance);
    return read_reuse(
        std::make_shared<const PlanningInstance>(std::move(*instance)));
  }

 private:
  void read_header() {
    if (lines_.empty()) {
      fail(ParseErrorKind::kMissingSection, 1, 1,
           "missing 'casemod v1' header");
    }
    const Line& h = lines_.front();
    if (h.tokens[0].text != kHeader) {
      fail(ParseErrorKind::kSyntax, h.number, h.tokens[0].column,
           "expected 'casemod v1' header");
    }
    if (h.tokens.size() != 2) {
      fail(ParseErrorKind::kArity, h.number, h.end_column(),
           "header takes exactly one version token");
    }
    if (h.tokens[1].text != kVersion) {
      fail(ParseErrorKind::kSyntax, h.number, h.tokens[1].column,
           "unsupported version '" + h.tokens[1].text + "'");
    }
  }

  void group_sections() {
    for (std::size_t i = 1; i < lines_.size(); ++i) {
      const Line& line = lines_[i];
      const std::string& key = line.tokens[0].text;
      if (!kPlanningSections.count(key) && !kReuseSections.count(key)) {
        fail(ParseErrorKind::kSyntax, line.number, line.tokens[0].column,
             "unknown section '" + key + "'");
      }
      auto& group = sections_[key];
      if (!group.empty() && !kRepeatable.count(key)) {
        fail(ParseErrorKind::kSyntax, line.number, line.tokens[0].column,
             "section '" + key + "' given twice");
      }
      group.push_back(&line);
    }
  }

  const Line* optional_section(const std::string& key) const {
    auto it = sections_.find(key);
    return it == sections_.end() ? nullptr : it->second.front();
  }

  const Line& required(const std::string& key) const {
    const Line* line = optional_section(key);
    if (!line) {
      fail(ParseErrorKind::kMissingSection, last_line_, 1,
           "missing required section '" + key + "'");
    }
    return *line;
  }

  std::vector<const Line*> all(const std::string& key) const {
    auto it = sections_.find(key);
    return it == sections_.end() ? std::vector<const Line*>{} : it->second;
  }

  static void expect_name(const Line& line, const Token& token) {
    if (!is_valid_identifier(token.text)) {
      fail(ParseErrorKind::kSyntax, line.number, token.column,
           "invalid name '" + token.text + "'");
    }
  }

  void read_variables() {
    for (const Line* line : all("var")) {
      if (line->tokens.size() != 3) {
        fail(ParseErrorKind::kArity, line->number, line->tokens[0].column,
             "'var' takes a name and a domain size");
      }
      const Token& name = line->tokens[1];
      expect_name(*line, name);
      if (var_index_.count(name.text)) {
        fail(ParseErrorKind::kDuplicateName, line->number, name.column,
             "variable '" + name.text + "' declared twice");
      }
      const Token& size = line->tokens[2];
      const auto domain = internal::parse_unsigned<unsigned>(size, line->number);
      if (domain < 1 ||
          domain > static_cast<unsigned>(std::numeric_limits<Value>::max())) {
        fail(ParseErrorKind::kOutOfRange, line->number, size.column,
             "domain size must be at least 1");
      }
      var_index_[name.text] = variables_.size();
      variables_.push_back({name.text, static_cast<int>(domain), {}});
    }
  }

  void read_value_labels() {
    std::set<VarId> labelled;
    for (const Line* line : all("values")) {
      if (line->tokens.size() < 2) {
        fail(ParseErrorKind::kArity, line->number, line->end_column(),
             "'values' needs a variable name");
      }
      const VarId var = lookup_variable(*line, line->tokens[1]);
      if (!labelled.insert(var).second) {
        fail(ParseErrorKind::kDuplicateName, line->number,
             line->tokens[1].column,
             "labels for '" + line->tokens[1].text + "' given twice");
      }
      Variable& v = variables_[var];
      const std::size_t count = line->tokens.size() - 2;
      if (count != static_cast<std::size_t>(v.domain_size)) {
        fail(ParseErrorKind::kArity, line->number, line->tokens[0].column,
             "variable '" + v.name + "' has domain size " +
                 std::to_string(v.domain_size) + " but " +
                 std::to_string(count) + " labels");
      }
      std::set<std::string> seen;
      for (std::size_t i = 2; i < line->tokens.size(); ++i) {
        const Token& label = line->tokens[i];
        expect_name(*line, label);
        if (!seen.insert(label.text).second) {
          fail(ParseErrorKind::kDuplicateName, line->number, label.column,
               "label '" + label.text + "' used twice");
        }
        v.value_labels.push_back(label.text);
      }
    }
  }

  VarId lookup_variable(const Line& line, const Token& token) const {
    auto it = var_index_.find(token.text);
    if (it == var_index_.end()) {
      fail(ParseErrorKind::kUnknownIdentifier, line.number, token.column,
           "unknown variable '" + token.text + "'");
    }
    return it->second;
  }

  ActionId lookup_action(const Line& line, const Token& token) const {
    auto it = action_index_.find(token.text);
    if (it == action_index_.end()) {
      fail(ParseErrorKind::kUnknownIdentifier, line.number, token.column,
           "unknown action '" + token.text + "'");
    }
    return it->second;
  }

  Value read_value(const Line& line, VarId var, std::string_view text,
                   std::size_t column) const {
    const Variable& v = variables_[var];
    auto label = std::find(v.value_labels.begin(), v.value_labels.end(), text);
    if (label != v.value_labels.end()) {
      return static_cast<Value>(label - v.value_labels.begin());
    }
    if (!internal::is_integer(text)) {
      fail(v.value_labels.empty() ? ParseErrorKind::kSyntax
                                  : ParseErrorKind::kUnknownIdentifier,
           line.number, column,
           "'" + std::string(text) + "' is not a value of '" + v.name + "'");
    }
    long long value = -1;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    (void)ptr;
    if (ec != std::errc() || value < 0 || value >= v.domain_size) {
      fail(ParseErrorKind::kOutOfRange, line.number, column,
           "value " + std::string(text) + " outside the domain of '" + v.name +
               "'");
    }
    return static_cast<Value>(value);
  }

  State read_state(const Line& line, const std::string& what) const {
    const std::size_t count = line.tokens.size() - 1;
    if (count != variables_.size()) {
      fail(ParseErrorKind::kArity, line.number, line.tokens[0].column,
           "'" + what + "' has " + std::to_string(count) + " values for " +
               std::to_string(variables_.size()) + " variables");
    }
    std::vector<Value> values;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      values.push_back(read_value(line, i - 1, line.tokens[i].text,
                                  line.tokens[i].column));
    }
    return State(std::move(values));
  }

  PartialState read_binding_list(const Line& line, std::size_t begin,
                                 std::size_t end) const {
    PartialState out;
    for (std::size_t i = begin; i < end; ++i) {
      const Token& token = line.tokens[i];
      const std::size_t eq = token.text.find('=');
      if (eq == std::string::npos) {
        fail(ParseErrorKind::kSyntax, line.number, token.column,
             "expected name=value, got '" + token.text + "'");
      }
      const Token name{token.text.substr(0, eq), token.column};
      const VarId var = lookup_variable(line, name);
      if (out.binds(var)) {
        fail(ParseErrorKind::kDuplicateName, line.number, token.column,
             "variable '" + name.text + "' bound twice");
      }
      out.set(var, read_value(line, var, std::string_view(token.text).substr(eq + 1),
                              token.column + eq + 1));
    }
    return out;
  }

  PartialState read_partial(const Line& line, std::size_t from) const {
    return read_binding_list(line, from, line.tokens.size());
  }

  void read_actions() {
    for (const Line* line : all("action")) {
      const auto& t = line->tokens;
      if (t.size() < 4) {
        fail(ParseErrorKind::kArity, line->number, line->end_column(),
             "'action' needs a name, 'pre' and 'post'");
      }
      expect_name(*line, t[1]);
      if (action_index_.count(t[1].text)) {
        fail(ParseErrorKind::kDuplicateName, line->number, t[1].column,
             "action '" + t[1].text + "' declared twice");
      }
      if (t[2].text != "pre") {
        fail(ParseErrorKind::kSyntax, line->number, t[2].column,
             "expected 'pre'");
      }
      std::size_t post = 3;
      while (post < t.size() && t[post].text != "post") ++post;
      if (post == t.size()) {
        fail(ParseErrorKind::kSyntax, line->number, line->end_column(),
             "expected 'post'");
      }
      action_index_[t[1].text] = actions_.size();
      actions_.push_back({t[1].text, read_binding_list(*line, 3, post),
                          read_binding_list(*line, post + 1, t.size())});
    }
  }

  Plan read_action_list(const Line& line, bool unique) const {
    Plan plan;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const ActionId id = lookup_action(line, line.tokens[i]);
      if (unique && std::find(plan.begin(), plan.end(), id) != plan.end()) {
        fail(ParseErrorKind::kDuplicateName, line.number, line.tokens[i].column,
             "action '" + line.tokens[i].text + "' listed twice");
      }
      plan.push_back(id);
    }
    return plan;
  }

  ReuseInstance read_reuse(std::shared_ptr<const PlanningInstance> instance) {
    ReuseQuery query;
    if (const Line* line = optional_section("flavor")) {
      if (line->tokens.size() != 2) {
        fail(ParseErrorKind::kArity, line->number, line->tokens[0].column,
             "'flavor' takes one name");
      }
      auto flavor = parse_flavor(line->tokens[1].text);
      if (!flavor) {
        fail(ParseErrorKind::kUnknownIdentifier, line->number,
             line->tokens[1].column,
             "unknown flavor '" + line->tokens[1].text + "'");
      }
      query.flavor = *flavor;
    }
    const Line& budget = required("budget");
    if (budget.tokens.size() != 2) {
      fail(ParseErrorKind::kArity, budget.number, budget.tokens[0].column,
           "'budget' takes one integer");
    }
    query.budget = internal::parse_unsigned<std::size_t>(budget.tokens[1],
                                                         budget.number);
    if (const Line* line = optional_section("glue")) {
      query.glue_actions = read_action_list(*line, true);
    } else {
      for (ActionId id = 0; id < actions_.size(); ++id) {
        query.glue_actions.push_back(id);
      }
    }
    if (const Line* line = optional_section("strict-infix")) {
      if (line->tokens.size() != 1) {
        fail(ParseErrorKind::kArity, line->number, line->tokens[1].column,
             "'strict-infix' takes no arguments");
      }
      query.strict_infix = true;
    }

    std::optional<Case> stored;
    const Line* case_init = optional_section("case-init");
    if (case_init) {
      Case c;
      c.stored_initial = read_state(*case_init, "case-init");
      if (const Line* line = optional_section("case-goal")) {
        c.stored_goal = read_partial(*line, 1);
      }
      if (const Line* line = optional_section("case-plan")) {
        c.plan = read_action_list(*line, false);
      }
      stored = std::move(c);
    } else {
      for (const char* key : {"case-goal", "case-plan"}) {
        if (const Line* line = optional_section(key)) {
          fail(ParseErrorKind::kMissingSection, line->number, 1,
               std::string("'") + key + "' without 'case-init'");
        }
      }
      if (query.flavor != Flavor::kKStep) {
        fail(ParseErrorKind::kMissingSection, last_line_, 1,
             std::string("flavor ") + to_string(query.flavor) +
                 " requires 'case-init'");
      }
    }
    try {
      return ReuseInstance(std::move(instance), std::move(stored),
                           std::move(query));
    } catch (const InvalidArgument& e) {
      fail(ParseErrorKind::kSyntax, budget.number, 1, e.what());
    }
  }

  std::vector<Line> lines_;
  std::size_t last_line_;
  std::map<std::string, std::vector<const Line*>> sections_;
  std::vector<Variable> variables_;
  std::vector<Action> actions_;
  std::map<std::string, VarId> var_index_;
  std::map<std::string, ActionId> action_index_;
};

// Serialization --------------------------------------------------------------

std::string value_text(const PlanningInstance& pi, VarId var, Value value) {
  const Variable& v = pi.variable(var);
  if (!v.value_labels.empty()) return v.value_labels[value];
  return std::to_string(value);
}

void write_state(std::ostream& out, const PlanningInstance& pi,
                 const State& s) {
  for (VarId var = 0; var < s.size(); ++var) {
    out << ' ' << value_text(pi, var, s[var]);
  }
}

void write_partial(std::ostream& out, const PlanningInstance& pi,
                   const PartialState& p) {
  for (const auto& [var, value] : p) {
    out << ' ' << pi.variable(var).name << '=' << value_text(pi, var, value);
  }
}

void write_actions(std::ostream& out, const PlanningInstance& pi,
                   std::span<const ActionId> ids) {
  for (ActionId id : ids) out << ' ' << pi.action(id).name;
}

void write_planning(std::ostream& out, const PlanningInstance& pi) {
  out << kHeader << ' ' << kVersion << '\n';
  for (const Variable& v : pi.variables()) {
    out << "var " << v.name << ' ' << v.domain_size << '\n';
  }
  for (const Variable& v : pi.variables()) {
    if (v.value_labels.empty()) continue;
    out << "values " << v.name;
    for (const auto& label : v.value_labels) out << ' ' << label;
    out << '\n';
  }
  out << "init";
  write_state(out, pi, pi.initial());
  out << "\ngoal";
  write_partial(out, pi, pi.goal());
  out << '\n';
  for (const Action& a : pi.actions()) {
    out << "action " << a.name << " pre";
    write_partial(out, pi, a.pre);
    out << " post";
    write_partial(out, pi, a.post);
    out << '\n';
  }
}

nlohmann::ordered_json partial_json(const PlanningInstance& pi,
                                    const PartialState& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [var, value] : p) out[pi.variable(var).name] = value;
  return out;
}

nlohmann::ordered_json names_json(const PlanningInstance& pi,
                                  std::span<const ActionId> ids) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (ActionId id : ids) out.push_back(pi.action(id).name);
  return out;
}

nlohmann::ordered_json planning_json(const PlanningInstance& pi) {
  nlohmann::ordered_json out;
  out["format"] = "casemod v1";
  out["variables"] = nlohmann::ordered_json::array();
  for (const Variable& v : pi.variables()) {
    nlohmann::ordered_json var;
    var["name"] = v.name;
    var["domain_size"] = v.domain_size;
    if (!v.value_labels.empty()) var["labels"] = v.value_labels;
    out["variables"].push_back(std::move(var));
  }
  out["init"] = std::vector<Value>(pi.initial().values().begin(),
                                   pi.initial().values().end());
  out["goal"] = partial_json(pi, pi.goal());
  out["actions"] = nlohmann::ordered_json::array();
  for (const Action& a : pi.actions()) {
    nlohmann::ordered_json action;
    action["name"] = a.name;
    action["pre"] = partial_json(pi, a.pre);
    action["post"] = partial_json(pi, a.post);
    out["actions"].push_back(std::move(action));
  }
  return out;
}

}  // namespace

Document parse_document(std::string_view text) {
  return DocumentParser(text).parse();
}

ReuseInstance parse_reuse_instance(std::string_view text) {
  Document doc = parse_document(text);
  if (auto* r = std::get_if<ReuseInstance>(&doc)) return std::move(*r);
  fail(ParseErrorKind::kMissingSection,
       std::max<std::size_t>(1, internal::count_lines(text)), 1,
       "document has no reuse sections");
}

std::string serialize_instance(const PlanningInstance& instance) {
  std::ostringstream out;
  write_planning(out, instance);
  return out.str();
}

std::string serialize_instance(const ReuseInstance& r) {
  const PlanningInstance& pi = r.instance();
  std::ostringstream out;
  write_planning(out, pi);
  if (const auto& c = r.stored_case()) {
    out << "case-init";
    write_state(out, pi, c->stored_initial);
    out << "\ncase-goal";
    write_partial(out, pi, c->stored_goal);
    out << "\ncase-plan";
    write_actions(out, pi, c->plan);
    out << '\n';
  }
  out << "glue";
  write_actions(out, pi, r.glue_actions());
  out << "\nbudget " << r.budget() << "\nflavor " << to_string(r.flavor())
      << '\n';
  if (r.query().strict_infix) out << "strict-infix\n";
  return out.str();
}

std::string serialize_document(const Document& doc) {
  return std::visit([](const auto& d) { return serialize_instance(d); }, doc);
}

std::string render_json(const Document& doc, int indent) {
  nlohmann::ordered_json out;
  if (const auto* bare = std::get_if<PlanningInstance>(&doc)) {
    out = planning_json(*bare);
  } else {
    const auto& r = std::get<ReuseInstance>(doc);
    const PlanningInstance& pi = r.instance();
    out = planning_json(pi);
    if (const auto& c = r.stored_case()) {
      nlohmann::ordered_json stored;
      stored["init"] = std::vector<Value>(c->stored_initial.values().begin(),
                                          c->stored_initial.values().end());
      stored["goal"] = partial_json(pi, c->stored_goal);
      stored["plan"] = names_json(pi, c->plan);
      out["case"] = std::move(stored);
    }
    out["glue"] = names_json(pi, r.glue_actions());
    out["budget"] = r.budget();
    out["flavor"] = to_string(r.flavor());
    out["strict_infix"] = r.query().strict_infix;
  }
  return out.dump(indent, ' ', false,
                  nlohmann::ordered_json::error_handler_t::replace);
}

// Certificates ---------------------------------------------------------------

std::string format_certificate(const ReuseInstance& r, const Certificate& cert) {
  const PlanningInstance& pi = r.instance();
  std::ostringstream out;
  if (cert.flavor == Flavor::kKStep) {
    out << "plan";
    write_actions(out, pi, cert.glue);
    return out.str();
  }
  out << "glue";
  write_actions(out, pi, cert.glue);
  switch (cert.flavor) {
    case Flavor::kPlanMod:
      out << "; positions";
      for (std::size_t p : cert.positions) out << ' ' << p;
      break;
    case Flavor::kCaseMod:
      out << "; i " << cert.split;
      break;
    case Flavor::kCaseModStar:
    case Flavor::kInfixGeneral:
      out << "; i " << cert.split << "; infix ";
      if (cert.empty_infix) {
        out << "empty " << cert.infix_first;
      } else if (cert.infix_first == 0) {
        out << "0 0";
      } else {
        out << cert.infix_first << ' ' << cert.infix_last;
      }
      break;
    case Flavor::kKStep:
      break;
  }
  return out.str();
}

Certificate parse_certificate(const ReuseInstance& r, std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.find('\n') != std::string_view::npos) {
    fail(ParseErrorKind::kSyntax, 1, text.find('\n') + 1,
         "certificate must be a single line");
  }
  const PlanningInstance& pi = r.instance();
  const Flavor flavor = r.flavor();
  const bool infix_flavor =
      flavor == Flavor::kCaseModStar || flavor == Flavor::kInfixGeneral;

  Certificate cert;
  cert.flavor = flavor;
  bool have_infix = false;
  std::set<std::string> seen;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find(';', offset);
    if (end == std::string_view::npos) end = text.size();
    std::vector<Line> lexed = internal::lex_lines(text.substr(offset, end - offset));
    const std::size_t clause_start = offset;
    offset = end + 1;
    if (lexed.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::vector<Token> tokens = std::move(lexed.front().tokens);
    for (Token& t : tokens) t.column += clause_start;
    const std::string& key = tokens[0].text;
    const bool allowed =
        (key == "plan" && flavor == Flavor::kKStep) ||
        (key == "glue" && flavor != Flavor::kKStep) ||
        (key == "i" && flavor != Flavor::kKStep && flavor != Flavor::kPlanMod) ||
        (key == "infix" && infix_flavor) ||
        (key == "positions" && flavor == Flavor::kPlanMod);
    if (!allowed) {
      fail(ParseErrorKind::kSyntax, 1, tokens[0].column,
           "clause '" + key + "' is not part of a " + to_string(flavor) +
               " certificate");
    }
    if (!seen.insert(key).second) {
      fail(ParseErrorKind::kSyntax, 1, tokens[0].column,
           "clause '" + key + "' given twice");
    }
    if (key == "plan" || key == "glue") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto id = pi.find_action(tokens[i].text);
        if (!id) {
          fail(ParseErrorKind::kUnknownIdentifier, 1, tokens[i].column,
               "unknown action '" + tokens[i].text + "'");
        }
        cert.glue.push_back(*id);
      }
    } else if (key == "i") {
      if (tokens.size() != 2) {
        fail(ParseErrorKind::kArity, 1, tokens[0].column,
             "'i' takes one integer");
      }
      cert.split = internal::parse_unsigned<std::size_t>(tokens[1], 1);
    } else if (key == "positions") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        cert.positions.push_back(
            internal::parse_unsigned<std::size_t>(tokens[i], 1));
      }
    } else {  // infix
      if (tokens.size() != 3) {
        fail(ParseErrorKind::kArity, 1, tokens[0].column,
             "'infix' takes two integers or 'empty' and one integer");
      }
      have_infix = true;
      if (tokens[1].text == "empty") {
        cert.empty_infix = true;
        cert.infix_first = internal::parse_unsigned<std::size_t>(tokens[2], 1);
        cert.infix_last = cert.infix_first == 0 ? 0 : cert.infix_first - 1;
      } else {
        cert.infix_first = internal::parse_unsigned<std::size_t>(tokens[1], 1);
        cert.infix_last = internal::parse_unsigned<std::size_t>(tokens[2], 1);
        if (cert.infix_first == 0 && cert.infix_last == 0) {
          cert.empty_infix = true;
          cert.infix_first = 1;
        }
      }
    }
    if (end == text.size()) break;
  }
  if (infix_flavor && !have_infix) {
    const std::size_t length = r.case_data().plan.size();
    if (length == 0) {
      cert.empty_infix = true;
      cert.infix_first = 1;
      cert.infix_last = 0;
    } else {
      cert.infix_first = 1;
      cert.infix_last = length;
    }
  }
  return cert;
}

}  // namespace casemod
