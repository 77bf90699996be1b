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

#include <string>
#include <string_view>
#include <vector>

#include "nucc/stabilizer_code.hpp"

namespace nucc {

/// Ordered, named set of codes with a line-oriented text form:
///
///   catalog 1
///   code <name>
///   label <free text>
///   stabilizer <pauli>          (n-1 lines)    | derive <base> <G@q> ...
///   logical_x <pauli>
///   logical_z <pauli>
///   transversal <logical> = <physical> [pre <G@q>]... [post <G@q>]...
///   universal <gate> ...
///   end
///
/// dump() is canonical and parse(dump(c)) reproduces c exactly.
class Catalog {
 public:
  static Catalog parse(std::string_view text);
  std::string dump() const;

  void add(CodePtr code);
  const std::vector<CodePtr>& codes() const { return codes_; }
  /// Throws Error("unknown code ...") when absent.
  CodePtr get(std::string_view name) const;
  CodePtr find(std::string_view name) const;

  /// FNV-1a of dump(), as 16 hex digits.
  std::string fingerprint() const;

 private:
  std::vector<CodePtr> codes_;
};

/// Catalog compiled into the library. Its text is canonical.
const Catalog& embedded_catalog();
std::string_view embedded_catalog_text();

/// Derivation rendered with 1-based qubit labels, e.g. "five_qubit ∘ K1 Y3 K5".
std::string derivation_string(const Derivation& d);

CodePtr steane();
CodePtr five_qubit();
CodePtr five_prime();
CodePtr reed_muller_15();

}  // namespace nucc
