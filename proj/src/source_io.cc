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

#include "casemod/source_io.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "casemod/error.h"
#include "lexer.h"

namespace casemod {

using internal::fail;
using internal::Line;
using internal::Token;

namespace {

// Checks the `<format> v1` header and returns the remaining lines.
std::vector<Line> body(std::string_view text, std::string_view format) {
  std::vector<Line> lines = internal::lex_lines(text);
  if (lines.empty()) {
    fail(ParseErrorKind::kMissingSection, 1, 1,
         "missing '" + std::string(format) + " v1' header");
  }
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0].text != format ||
      h.tokens[1].text != "v1") {
    fail(ParseErrorKind::kSyntax, h.number, h.tokens[0].column,
         "expected '" + std::string(format) + " v1' header");
  }
  lines.erase(lines.begin());
  return lines;
}

std::size_t last_line(std::string_view text) {
  return std::max<std::size_t>(1, internal::count_lines(text));
}

void expect_arity(const Line& line, std::size_t min, std::size_t max,
                  const std::string& what) {
  if (line.tokens.size() < min || line.tokens.size() > max) {
    fail(ParseErrorKind::kArity, line.number, line.tokens[0].column,
         "wrong number of arguments for '" + what + "'");
  }
}

void expect_name(const Line& line, const Token& token) {
  if (!is_valid_identifier(token.text) || token.text == "*") {
    fail(ParseErrorKind::kSyntax, line.number, token.column,
         "invalid name '" + token.text + "'");
  }
}

[[noreturn]] void unknown_key(const Line& line) {
  fail(ParseErrorKind::kSyntax, line.number, line.tokens[0].column,
       "unknown statement '" + line.tokens[0].text + "'");
}

}  // namespace

LcsInstance parse_lcs(std::string_view text) {
  LcsInstance lcs;
  bool have_target = false;
  for (const Line& line : body(text, "lcs")) {
    const std::string& key = line.tokens[0].text;
    if (key == "string") {
      expect_arity(line, 1, 2, key);
      std::string s = line.tokens.size() == 2 ? line.tokens[1].text : "";
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!is_valid_identifier(std::string_view(&s[i], 1)) || s[i] == '*') {
          fail(ParseErrorKind::kSyntax, line.number, line.tokens[1].column + i,
               std::string("invalid symbol '") + s[i] + "'");
        }
      }
      lcs.strings.push_back(std::move(s));
    } else if (key == "target") {
      expect_arity(line, 2, 2, key);
      if (have_target) {
        fail(ParseErrorKind::kSyntax, line.number, line.tokens[0].column,
             "'target' given twice");
      }
      have_target = true;
      lcs.target_length =
          internal::parse_unsigned<std::size_t>(line.tokens[1], line.number);
    } else {
      unknown_key(line);
    }
  }
  if (lcs.strings.empty()) {
    fail(ParseErrorKind::kMissingSection, last_line(text), 1,
         "an LCS source needs at least one 'string'");
  }
  if (!have_target) {
    fail(ParseErrorKind::kMissingSection, last_line(text), 1,
         "missing 'target'");
  }
  return lcs;
}

PartitionedCliqueInstance parse_pclique(std::string_view text) {
  PartitionedCliqueInstance g;
  std::map<std::string, std::size_t> index;
  for (const Line& line : body(text, "pclique")) {
    const std::string& key = line.tokens[0].text;
    if (key == "part") {
      std::vector<std::size_t> part;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const Token& name = line.tokens[i];
        expect_name(line, name);
        if (!index.emplace(name.text, g.vertex_names.size()).second) {
          fail(ParseErrorKind::kDuplicateName, line.number, name.column,
               "vertex '" + name.text + "' declared twice");
        }
        part.push_back(g.vertex_names.size());
        g.vertex_names.push_back(name.text);
      }
      g.parts.push_back(std::move(part));
    } else if (key == "edge") {
      expect_arity(line, 3, 3, key);
      std::size_t ends[2];
      for (int e = 0; e < 2; ++e) {
        const Token& name = line.tokens[e + 1];
        auto it = index.find(name.text);
        if (it == index.end()) {
          fail(ParseErrorKind::kUnknownIdentifier, line.number, name.column,
               "unknown vertex '" + name.text + "'");
        }
        ends[e] = it->second;
      }
      if (ends[0] == ends[1]) {
        fail(ParseErrorKind::kSyntax, line.number, line.tokens[2].column,
             "self-loop");
      }
      g.edges.emplace_back(ends[0], ends[1]);
    } else {
      unknown_key(line);
    }
  }
  return g;
}

CircuitInstance parse_circuit(std::string_view text) {
  struct PendingGate {
    const Line* line;
    Gate gate;
    std::vector<const Token*> refs;
  };
  CircuitInstance circuit;
  std::vector<PendingGate> pending;
  std::map<std::string, const Line*> declared;
  const Token* output = nullptr;
  const Line* output_line = nullptr;
  bool have_weight = false;
  std::vector<Line> lines = body(text, "circuit");

  auto declare = [&](const Line& line, const Token& name) {
    expect_name(line, name);
    if (!declared.emplace(name.text, &line).second) {
      fail(ParseErrorKind::kDuplicateName, line.number, name.column,
           "node '" + name.text + "' declared twice");
    }
  };
  for (const Line& line : lines) {
    const std::string& key = line.tokens[0].text;
    if (key == "input") {
      expect_arity(line, 2, 2, key);
      declare(line, line.tokens[1]);
      circuit.input_names.push_back(line.tokens[1].text);
    } else if (key == "and" || key == "not") {
      if (key == "not") {
        expect_arity(line, 3, 3, key);
      } else {
        expect_arity(line, 3, std::string::npos, key);
      }
      declare(line, line.tokens[1]);
      PendingGate p{&line, {line.tokens[1].text,
                            key == "and" ? GateKind::kAnd : GateKind::kNot,
                            {}},
                    {}};
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        p.refs.push_back(&line.tokens[i]);
      }
      pending.push_back(std::move(p));
    } else if (key == "output") {
      expect_arity(line, 2, 2, key);
      if (output) {
        fail(ParseErrorKind::kSyntax, line.number, line.tokens[0].column,
             "'output' given twice");
      }
      output = &line.tokens[1];
      output_line = &line;
    } else if (key == "weight") {
      expect_arity(line, 2, 2, key);
      if (have_weight) {
        fail(ParseErrorKind::kSyntax, line.number, line.tokens[0].column,
             "'weight' given twice");
      }
      have_weight = true;
      circuit.weight_bound =
          internal::parse_unsigned<std::size_t>(line.tokens[1], line.number);
    } else {
      unknown_key(line);
    }
  }
  for (const PendingGate& p : pending) {
    for (const Token* ref : p.refs) {
      if (!declared.count(ref->text)) {
        fail(ParseErrorKind::kUnknownIdentifier, p.line->number, ref->column,
             "unknown node '" + ref->text + "'");
      }
    }
  }
  if (!output) {
    fail(ParseErrorKind::kMissingSection, last_line(text), 1,
         "missing 'output'");
  }
  if (!have_weight) {
    fail(ParseErrorKind::kMissingSection, last_line(text), 1,
         "missing 'weight'");
  }
  if (!declared.count(output->text)) {
    fail(ParseErrorKind::kUnknownIdentifier, output_line->number,
         output->column, "unknown node '" + output->text + "'");
  }

  // Repeatedly place the earliest declared gate whose inputs are all placed.
  std::map<std::string, std::size_t> node;
  for (std::size_t i = 0; i < circuit.input_names.size(); ++i) {
    node[circuit.input_names[i]] = i;
  }
  std::vector<bool> placed(pending.size(), false);
  for (std::size_t round = 0; round < pending.size(); ++round) {
    std::size_t pick = pending.size();
    for (std::size_t j = 0; j < pending.size() && pick == pending.size(); ++j) {
      if (placed[j]) continue;
      const bool ready = std::all_of(
          pending[j].refs.begin(), pending[j].refs.end(),
          [&](const Token* ref) { return node.count(ref->text) > 0; });
      if (ready) pick = j;
    }
    if (pick == pending.size()) {
      for (std::size_t j = 0; j < pending.size(); ++j) {
        if (!placed[j]) {
          fail(ParseErrorKind::kSyntax, pending[j].line->number,
               pending[j].line->tokens[1].column,
               "gate '" + pending[j].gate.name + "' is on a cycle");
        }
      }
    }
    placed[pick] = true;
    Gate gate = pending[pick].gate;
    for (const Token* ref : pending[pick].refs) {
      gate.inputs.push_back(node.at(ref->text));
    }
    node[gate.name] = circuit.num_nodes();
    circuit.gates.push_back(std::move(gate));
  }
  circuit.output = node.at(output->text);
  return circuit;
}

std::string serialize_lcs(const LcsInstance& lcs) {
  std::ostringstream out;
  out << "lcs v1\n";
  for (const auto& s : lcs.strings) {
    out << "string";
    if (!s.empty()) out << ' ' << s;
    out << '\n';
  }
  out << "target " << lcs.target_length << '\n';
  return out.str();
}

std::string serialize_pclique(const PartitionedCliqueInstance& g) {
  std::ostringstream out;
  out << "pclique v1\n";
  for (const auto& part : g.parts) {
    out << "part";
    for (std::size_t v : part) out << ' ' << g.vertex_names[v];
    out << '\n';
  }
  for (const auto& [u, v] : g.edges) {
    out << "edge " << g.vertex_names[u] << ' ' << g.vertex_names[v] << '\n';
  }
  return out.str();
}

std::string serialize_circuit(const CircuitInstance& circuit) {
  std::ostringstream out;
  out << "circuit v1\n";
  for (const auto& name : circuit.input_names) out << "input " << name << '\n';
  for (const Gate& gate : circuit.gates) {
    out << (gate.kind == GateKind::kAnd ? "and " : "not ") << gate.name;
    for (std::size_t in : gate.inputs) out << ' ' << circuit.node_name(in);
    out << '\n';
  }
  out << "output " << circuit.node_name(circuit.output) << '\n';
  out << "weight " << circuit.weight_bound << '\n';
  return out.str();
}

}  // namespace casemod
