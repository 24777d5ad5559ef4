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

#include "casemod/cli.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "casemod/bench.h"
#include "casemod/error.h"
#include "casemod/instance_io.h"
#include "casemod/reductions.h"
#include "casemod/solvers.h"
#include "casemod/source_io.h"
#include "json.hpp"

namespace casemod {

namespace {

constexpr const char* kSourceFormats = R"(Source formats:
  kstep-l, bool-d   casemod v1 instance; the budget comes from --budget or
                    the file's budget section
  l-kstep           casemod v1 instance of flavor casemod
  lcs-v             lcs v1:      string ab / string ba / target 1
  pclique-lv        pclique v1:  part u1 u2 / part w1 / edge u1 w1
  wsat-planmod      circuit v1:  input x1 / and g1 x1 x2 / not g2 g1 /
                                 output g2 / weight 1)";

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    throw InvalidArgument("cannot write '" + path + "'");
  }
}

SearchLimits resolve_limits(const std::optional<std::size_t>& limit) {
  if (limit) return SearchLimits::uniform(*limit);
  if (const char* env = std::getenv("CASEMOD_LIMIT"); env && *env) {
    std::string_view text(env);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InvalidArgument("CASEMOD_LIMIT must be a non-negative integer");
    }
    return SearchLimits::uniform(value);
  }
  return {};
}

ReuseInstance require_reuse(Document doc, std::ostream& err) {
  if (auto* r = std::get_if<ReuseInstance>(&doc)) {
    if (!r->case_consistent()) {
      err << "warning: the case plan does not reach the stored goal from the "
             "stored initial state\n";
    }
    return std::move(*r);
  }
  throw InvalidArgument("instance has no reuse sections (budget, case, glue)");
}

std::shared_ptr<const PlanningInstance> planning_part(const Document& doc) {
  if (const auto* pi = std::get_if<PlanningInstance>(&doc)) {
    return std::make_shared<const PlanningInstance>(*pi);
  }
  return std::get<ReuseInstance>(doc).instance_ptr();
}

std::size_t budget_of(const Document& doc,
                      const std::optional<std::size_t>& override_budget) {
  if (override_budget) return *override_budget;
  if (const auto* r = std::get_if<ReuseInstance>(&doc)) return r->budget();
  throw InvalidArgument("no budget: pass --budget or add a budget section");
}

// certificate line of a solve report, the certificate field of a JSON
// report, or the text itself.
std::string extract_certificate(const std::string& text) {
  std::string_view view(text);
  const std::size_t first = view.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && view[first] == '{') {
    auto json = nlohmann::json::parse(text, nullptr, false);
    if (!json.is_discarded() && json.contains("certificate") &&
        json["certificate"].is_string()) {
      return json["certificate"].get<std::string>();
    }
    throw InvalidArgument("JSON input carries no certificate");
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("certificate ", 0) == 0) return line.substr(12);
    if (line == "certificate") return "";
  }
  return text;
}

std::string param_text(const ParamReport& p) {
  std::ostringstream out;
  out << "k_L=" << p.k_L << " k_A=" << p.k_A << " k_V=" << p.k_V
      << " k_D=" << p.k_D;
  return out.str();
}

// solve ----------------------------------------------------------------------

struct SolveOptions {
  std::string input;
  std::string algo = "auto";
  std::string flavor;
  std::string format = "text";
  std::optional<std::size_t> limit;
};

int cmd_solve(const SolveOptions& o, std::istream& in, std::ostream& out,
              std::ostream& err) {
  ReuseInstance r = require_reuse(parse_document(read_text(o.input, in)), err);
  if (!o.flavor.empty()) r = r.with_flavor(*parse_flavor(o.flavor));
  Algorithm algo = *parse_algorithm(o.algo);
  if (algo == Algorithm::kAuto) {
    const bool fpt =
        r.flavor() == Flavor::kCaseMod || r.flavor() == Flavor::kCaseModStar;
    algo = fpt ? Algorithm::kFptVD : Algorithm::kBrute;
  }
  SolveResult result = solve(r, algo, resolve_limits(o.limit));
  const ParamReport params = compute_parameters(r);
  std::optional<std::string> cert;
  if (result.certificate) cert = format_certificate(r, *result.certificate);

  if (o.format == "json") {
    nlohmann::ordered_json report;
    report["answer"] = result.answer ? "YES" : "NO";
    report["flavor"] = to_string(r.flavor());
    report["algorithm"] = to_string(algo);
    report["certificate"] = cert ? nlohmann::ordered_json(*cert) : nullptr;
    report["stats"] = {{"states_visited", result.stats.states_visited},
                       {"sequences_tried", result.stats.sequences_tried},
                       {"max_bfs_visits", result.stats.max_bfs_visits()},
                       {"elapsed_us", result.stats.elapsed.count()}};
    report["parameters"] = {{"k_L", params.k_L},
                            {"k_A", params.k_A},
                            {"k_V", params.k_V},
                            {"k_D", params.k_D}};
    out << report.dump(2, ' ', false,
                       nlohmann::ordered_json::error_handler_t::replace)
        << '\n';
    return kExitOk;
  }
  out << "answer " << (result.answer ? "YES" : "NO") << '\n';
  out << "flavor " << to_string(r.flavor()) << '\n';
  out << "algorithm " << to_string(algo) << '\n';
  if (cert) out << "certificate " << *cert << '\n';
  out << "stats states_visited=" << result.stats.states_visited
      << " sequences_tried=" << result.stats.sequences_tried
      << " max_bfs_visits=" << result.stats.max_bfs_visits()
      << " elapsed_us=" << result.stats.elapsed.count() << '\n';
  out << "parameters " << param_text(params) << '\n';
  return kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyOptions {
  std::string input;
  std::string certificate;
  std::string flavor;
};

int cmd_verify(const VerifyOptions& o, std::istream& in, std::ostream& out,
               std::ostream& err) {
  ReuseInstance r = require_reuse(parse_document(read_text(o.input, in)), err);
  if (!o.flavor.empty()) r = r.with_flavor(*parse_flavor(o.flavor));
  std::string text;
  if (o.certificate == "-") {
    text = read_text("-", in);
  } else if (std::ifstream probe(o.certificate); probe) {
    text = read_text(o.certificate, in);
  } else {
    text = o.certificate;
  }
  const Certificate cert = parse_certificate(r, extract_certificate(text));
  bool ok = false;
  try {
    ok = verify(r, cert);
  } catch (const InvalidArgument& e) {
    err << "certificate rejected: " << e.what() << '\n';
  }
  out << (ok ? "valid" : "invalid") << '\n';
  return ok ? kExitOk : kExitRejected;
}

// generate -------------------------------------------------------------------

struct GenerateOptions {
  std::string reduction;
  std::string source;
  std::optional<std::uint64_t> random_seed;
  std::string out;
  std::string emit_source;
  std::optional<std::size_t> budget;
  RandomSourceParams params;
};

int cmd_generate(const GenerateOptions& o, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  if (o.source.empty() == !o.random_seed) {
    throw InvalidArgument("pass exactly one of --source and --random");
  }
  std::optional<Rng> rng;
  if (o.random_seed) rng.emplace(*o.random_seed);
  auto source_text = [&] { return read_text(o.source, in); };
  std::string source_dump;
  std::optional<ReuseInstance> result;

  const std::string& red = o.reduction;
  if (red == "lcs-v") {
    LcsInstance lcs = rng ? random_lcs(*rng, o.params) : parse_lcs(source_text());
    source_dump = serialize_lcs(lcs);
    result = reduce_lcs_to_V(lcs);
  } else if (red == "pclique-lv") {
    PartitionedCliqueInstance g =
        rng ? random_pclique(*rng, o.params) : parse_pclique(source_text());
    source_dump = serialize_pclique(g);
    result = reduce_pclique_to_LV(g);
  } else if (red == "wsat-planmod") {
    CircuitInstance c =
        rng ? random_circuit(*rng, o.params) : parse_circuit(source_text());
    source_dump = serialize_circuit(c);
    result = reduce_wsat_to_planmod(c);
  } else if (red == "l-kstep") {
    ReuseInstance r = rng ? random_casemod(*rng, o.params)
                          : require_reuse(parse_document(source_text()), err);
    source_dump = serialize_instance(r);
    result = reduce_L_to_kstep(r).as_reuse_instance();
  } else {  // kstep-l, bool-d
    Document doc = rng ? Document(random_bool_planning(*rng, o.params))
                       : parse_document(source_text());
    source_dump = serialize_document(doc);
    if (red == "kstep-l") {
      const std::size_t k =
          rng ? o.budget.value_or(o.params.max_budget) : budget_of(doc, o.budget);
      result = reduce_kstep_to_L(planning_part(doc), k);
    } else {
      result = reduce_bool_to_D(planning_part(doc), o.budget);
    }
  }

  if (!o.emit_source.empty()) write_text(o.emit_source, source_dump, out);
  write_text(o.out, serialize_instance(*result), out);
  std::ostream& note = o.out.empty() || o.out == "-" ? err : out;
  note << "generated " << red << ": budget=" << result->budget()
       << " variables=" << result->instance().num_variables()
       << " actions=" << result->instance().num_actions() << ' '
       << param_text(compute_parameters(*result)) << '\n';
  return kExitOk;
}

// oracle ---------------------------------------------------------------------

struct OracleOptions {
  std::string problem;
  std::string source;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> limit;
};

int cmd_oracle(const OracleOptions& o, std::istream& in, std::ostream& out) {
  const std::string text = read_text(o.source, in);
  bool answer = false;
  if (o.problem == "lcs") {
    answer = oracle_lcs(parse_lcs(text),
                        resolve_limits(o.limit).max_states);
  } else if (o.problem == "pclique") {
    answer = oracle_pclique(parse_pclique(text));
  } else if (o.problem == "wsat") {
    answer = oracle_wsat(parse_circuit(text));
  } else {
    Document doc = parse_document(text);
    answer = solve_kstep_bfs(*planning_part(doc), budget_of(doc, o.budget),
                             resolve_limits(o.limit))
                 .answer;
  }
  out << "answer " << (answer ? "YES" : "NO") << '\n';
  return kExitOk;
}

// bench, show ----------------------------------------------------------------

struct BenchOptions {
  std::string suite;
  std::uint64_t seed = 1;
  std::string out;
  std::optional<std::size_t> limit;
};

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  std::ostringstream csv;
  csv << bench_csv_header() << '\n';
  for (const BenchRow& row :
       run_bench(*parse_bench_suite(o.suite), o.seed, resolve_limits(o.limit))) {
    csv << to_csv(row) << '\n';
  }
  write_text(o.out, csv.str(), out);
  return kExitOk;
}

struct ShowOptions {
  std::string input;
  std::string format = "text";
};

int cmd_show(const ShowOptions& o, std::istream& in, std::ostream& out) {
  Document doc = parse_document(read_text(o.input, in));
  if (o.format == "json") {
    out << render_json(doc) << '\n';
  } else {
    out << serialize_document(doc);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide and generate plan-reuse instances.", "casemod"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "casemod 1.0");

  const std::vector<std::string> formats = {"text", "json"};
  std::vector<std::string> flavors;
  for (Flavor f : {Flavor::kCaseMod, Flavor::kCaseModStar,
                   Flavor::kInfixGeneral, Flavor::kPlanMod, Flavor::kKStep}) {
    flavors.emplace_back(to_string(f));
  }

  SolveOptions solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Decide a reuse instance.");
  solve_cmd->add_option("input", solve_opts.input, "Instance file, '-' for stdin")
      ->required();
  solve_cmd->add_option("--algo", solve_opts.algo, "Solver")
      ->check(CLI::IsMember({"auto", "brute", "fpt-a", "fpt-vd"}));
  solve_cmd->add_option("--flavor", solve_opts.flavor, "Override the flavor")
      ->check(CLI::IsMember(flavors));
  solve_cmd->add_option("--format", solve_opts.format, "Report format")
      ->check(CLI::IsMember(formats));
  solve_cmd->add_option("--limit", solve_opts.limit,
                        "Work limit (default: $CASEMOD_LIMIT or 10^7)");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate.");
  verify_cmd->add_option("input", verify_opts.input, "Instance file")->required();
  verify_cmd
      ->add_option("--certificate", verify_opts.certificate,
                   "Certificate file, inline text, or '-' for stdin")
      ->required();
  verify_cmd->add_option("--flavor", verify_opts.flavor, "Override the flavor")
      ->check(CLI::IsMember(flavors));

  GenerateOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("generate", "Emit a reduction output.");
  gen_cmd
      ->add_option("--reduction", gen_opts.reduction, "Reduction to apply")
      ->required()
      ->check(CLI::IsMember({"kstep-l", "l-kstep", "lcs-v", "pclique-lv",
                             "bool-d", "wsat-planmod"}));
  gen_cmd->add_option("--source", gen_opts.source, "Source file, '-' for stdin");
  gen_cmd->add_option("--random", gen_opts.random_seed,
                      "Generate a random source from this seed");
  gen_cmd->add_option("--out", gen_opts.out, "Output file (default stdout)");
  gen_cmd->add_option("--emit-source", gen_opts.emit_source,
                      "Also write the source instance here");
  gen_cmd->add_option("--budget", gen_opts.budget,
                      "Budget for kstep-l and bool-d");
  gen_cmd->add_option("--k", gen_opts.params.k,
                      "Random: parts (pclique) or strings (lcs)");
  gen_cmd->add_option("--part-size", gen_opts.params.part_size,
                      "Random: max vertices per part");
  gen_cmd->add_option("--edge-probability", gen_opts.params.edge_probability,
                      "Random: edge probability");
  gen_cmd->add_option("--string-length", gen_opts.params.string_length,
                      "Random: max string length");
  gen_cmd->add_option("--alphabet", gen_opts.params.alphabet_size,
                      "Random: alphabet size");
  gen_cmd->add_option("--inputs", gen_opts.params.num_inputs,
                      "Random: circuit inputs");
  gen_cmd->add_option("--gates", gen_opts.params.num_gates,
                      "Random: circuit gates");
  gen_cmd->add_option("--variables", gen_opts.params.num_variables,
                      "Random: planning variables");
  gen_cmd->add_option("--actions", gen_opts.params.num_actions,
                      "Random: planning actions");
  gen_cmd->footer(kSourceFormats);

  OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "Decide a source problem.");
  oracle_cmd->add_option("--problem", oracle_opts.problem, "Source problem")
      ->required()
      ->check(CLI::IsMember({"lcs", "pclique", "wsat", "kstep"}));
  oracle_cmd->add_option("--source", oracle_opts.source, "Source file")
      ->required();
  oracle_cmd->add_option("--budget", oracle_opts.budget, "k for kstep");
  oracle_cmd->add_option("--limit", oracle_opts.limit, "Work limit");

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Run a scaling benchmark.");
  bench_cmd->add_option("--suite", bench_opts.suite, "Benchmark suite")
      ->required()
      ->check(CLI::IsMember({"fpt-a-scaling", "vd-dedupe", "hard-flavors"}));
  bench_cmd->add_option("--seed", bench_opts.seed, "Seed");
  bench_cmd->add_option("--out", bench_opts.out, "CSV file (default stdout)");
  bench_cmd->add_option("--limit", bench_opts.limit, "Work limit");

  ShowOptions show_opts;
  auto* show_cmd = app.add_subcommand("show", "Print an instance canonically.");
  show_cmd->add_option("input", show_opts.input, "Instance file")->required();
  show_cmd->add_option("--format", show_opts.format, "Output format")
      ->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_opts, in, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts, in, out, err);
    if (gen_cmd->parsed()) return cmd_generate(gen_opts, in, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_opts, in, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_opts, out);
    if (show_cmd->parsed()) return cmd_show(show_opts, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const ResourceLimitExceeded& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const Error& e) {
    err << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace casemod
