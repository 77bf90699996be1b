// Copyright 2026 The nucc Authors
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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nucc/error.hpp"
#include "nucc/report.hpp"
#include "nucc/self_test.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nucc::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw nucc::Error("cannot write " + path);
  out << text;
}

// Layout arguments may name a file holding a layout document.
std::string layout_arg(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<nucc::PiFraction> theta_arg(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return nucc::PiFraction::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-uniform concatenated code construction and fault-tolerance checks", "nucc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nucc::kToolVersion));

  std::string catalog_path, format = "table", out_path;
  app.add_option("--catalog", catalog_path, "Code catalog file (default: embedded catalog)");
  app.add_option("--format", format, "Report rendering")->check(CLI::IsMember({"table", "machine"}));
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");

  auto* codes = app.add_subcommand("codes", "Query the code catalog");
  codes->require_subcommand(1);
  codes->add_subcommand("list", "List codes with [[n,k,d]]");
  auto* info = codes->add_subcommand("info", "Generators, logicals and transversal rules of one code");
  std::string code_name;
  info->add_option("name", code_name)->required();
  codes->add_subcommand("dump", "Print the catalog text");

  std::string layout, gate = "T", theta, circuit_out, circuit_path;
  int controls = 1;

  auto* dist = app.add_subcommand("distance", "Exact distance of a concatenated layout");
  dist->add_option("--layout", layout, "Layout size (49), descriptor, or layout file")->required();

  auto* gad = app.add_subcommand("gadget", "Synthesize and verify a logical gate gadget");
  gad->add_option("--layout", layout)->required();
  gad->add_option("--gate", gate, "Gate token: T, CCZ, H, K, ZTHETA, CKZ, ...");
  gad->add_option("--theta", theta, "Angle for ZTHETA / CKZ as a multiple of pi (pi/8)");
  gad->add_option("--controls", controls, "Control count for CKZ");
  gad->add_option("--circuit-out", circuit_out, "Write the gadget circuit");
  bool no_uncompute = false;
  gad->add_flag("--no-uncompute", no_uncompute, "Drop the staircase uncompute (negative control)");

  auto* ft = app.add_subcommand("ftcheck", "Single-fault suite and optional fault-pair search");
  std::vector<std::string> gate_list;
  bool pairs = false;
  std::uint64_t budget = nucc::kDefaultPairBudget;
  ft->add_option("--layout", layout)->required();
  ft->add_option("--gates", gate_list, "Gate tokens (default: universal set)")->delimiter(',');
  ft->add_flag("--pairs", pairs, "Search fault pairs for an uncorrectable witness");
  ft->add_option("--budget", budget, "Maximum number of fault pairs");
  ft->add_option("--circuit", circuit_path, "Check this circuit file as the gadget of --gates");

  auto* table = app.add_subcommand("table1", "Overall and effective distances of the concatenated codes");
  bool extended = false;
  table->add_flag("--extended", extended, "Include the 47-, 55- and 73-qubit codes");
  table->add_option("--budget", budget, "Maximum number of fault pairs per gadget");

  auto* replay = app.add_subcommand("replay", "Propagate the faults recorded in a circuit file");
  replay->add_option("--layout", layout)->required();
  replay->add_option("--circuit", circuit_path)->required();

  auto* self = app.add_subcommand("selftest", "Gate identities and Clifford tables against dense matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : nucc::kExitUsage;
  }

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    nucc::Catalog custom;
    nucc::CommandContext ctx;
    ctx.echo = echo;
    if (!catalog_path.empty()) {
      custom = nucc::Catalog::parse(read_file(catalog_path));
      ctx.catalog = &custom;
    }

    if (*self) {
      int rc = 0;
      for (const auto& c : nucc::run_self_test()) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  (" << c.detail << ")\n";
        if (!c.pass) rc = nucc::kExitCheckFailed;
      }
      return rc;
    }
    if (codes->got_subcommand("dump")) {
      const std::string text = ctx.catalog->dump();
      if (out_path.empty()) std::cout << text;
      else write_file(out_path, text);
      return 0;
    }

    nucc::Report report;
    if (codes->got_subcommand("list")) {
      report = nucc::cmd_codes_list(ctx);
    } else if (*info) {
      report = nucc::cmd_codes_info(ctx, code_name);
    } else if (*dist) {
      report = nucc::cmd_distance(ctx, layout_arg(layout));
    } else if (*gad) {
      nucc::GadgetOutput produced;
      report = nucc::cmd_gadget(ctx, layout_arg(layout), nucc::resolve_gate(gate, theta_arg(theta), controls),
                                &produced, !no_uncompute);
      if (!circuit_out.empty() && produced.gadget) write_file(circuit_out, produced.circuit_text);
    } else if (*ft) {
      nucc::FtcheckOptions opt;
      opt.layout = layout_arg(layout);
      for (const auto& g : gate_list) opt.gates.push_back(nucc::resolve_gate(g));
      opt.pairs = pairs;
      opt.budget = budget;
      if (!circuit_path.empty()) opt.circuit_text = read_file(circuit_path);
      report = nucc::cmd_ftcheck(ctx, opt);
    } else if (*table) {
      report = nucc::cmd_table1(ctx, extended, budget);
    } else if (*replay) {
      report = nucc::cmd_replay(ctx, layout_arg(layout), read_file(circuit_path));
    }

    const std::string text = format == "machine" ? nucc::render_machine(report) : nucc::render_table(report);
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
    return report.exit_code;
  } catch (const nucc::BudgetError& e) {
    std::cerr << "budget refused: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return nucc::kExitBudget;
  } catch (const nucc::SynthesisError& e) {
    std::cerr << "synthesis refused: " << e.what() << "\n";
    return nucc::kExitCheckFailed;
  } catch (const nucc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return nucc::kExitUsage;
  }
}
