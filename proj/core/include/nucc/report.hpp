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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nucc/catalog.hpp"
#include "nucc/concatenation.hpp"
#include "nucc/fault.hpp"
#include "nucc/verify.hpp"

namespace nucc {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitBudget = 3 };

/// Result of one command. `results` is the single source of numbers; the
/// table rendering is derived from it.
struct Report {
  std::string command;
  std::string catalog_fingerprint;
  nlohmann::json results = nlohmann::json::object();
  int exit_code = kExitOk;
  double timing_ms = 0.0;
};

/// Machine-readable document (sorted keys, two-space indent). Timing is the
/// only field allowed to differ between identical runs.
std::string render_machine(const Report& r, bool with_timing = true);
std::string render_table(const Report& r);

struct CommandContext {
  const Catalog* catalog = &embedded_catalog();
  DecoderOverrides overrides;
  std::string echo;
};

/// "49" and the other table sizes, or any form accepted by parse_layout.
ConcatenationLayout resolve_layout(const CommandContext& ctx, std::string_view text);
/// "T", "CCZ", "ZTHETA(pi/8)", "CKZ(2,pi)"; `theta` overrides the angle of
/// ZTHETA / CKZ and turns "CKZ" into CKZ(k, theta) with `controls` controls.
Gate resolve_gate(std::string_view token, std::optional<PiFraction> theta = std::nullopt, int controls = 1);

Report cmd_codes_list(const CommandContext& ctx);
Report cmd_codes_info(const CommandContext& ctx, std::string_view name);
Report cmd_distance(const CommandContext& ctx, std::string_view layout);

struct GadgetOutput {
  std::optional<GadgetCircuit> gadget;
  std::string circuit_text;
};
/// Synthesizes and verifies; a synthesis refusal is a data-level failure
/// whose report quotes the diagnosis.
Report cmd_gadget(const CommandContext& ctx, std::string_view layout, const Gate& logical,
                  GadgetOutput* out = nullptr, bool uncompute = true);

struct FtcheckOptions {
  std::string layout;
  /// Defaults to the outer code's universal set.
  std::vector<Gate> gates;
  bool pairs = false;
  std::uint64_t budget = kDefaultPairBudget;
  /// External gadget circuit checked instead of synthesized ones; `gates`
  /// then holds its single claimed logical gate.
  std::optional<std::string> circuit_text;
};
/// Throws BudgetError when the pair search is refused.
Report cmd_ftcheck(const CommandContext& ctx, const FtcheckOptions& opt);

Report cmd_table1(const CommandContext& ctx, bool extended, std::uint64_t budget = kDefaultPairBudget);
Report cmd_replay(const CommandContext& ctx, std::string_view layout, std::string_view circuit_text);

nlohmann::json certificate_json(const Certificate& c);
nlohmann::json fault_report_json(const FaultReport& r);

}  // namespace nucc
